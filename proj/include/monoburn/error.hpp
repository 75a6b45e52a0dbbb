#pragma once

#include <stdexcept>
#include <string>

namespace monoburn {

// Malformed or out-of-range input: bad tables, foreign objects, caps exceeded.
struct InputError : std::runtime_error {
  explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// An internal consistency check failed. Seeing one of these means a bug.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

inline void require(bool ok, const std::string& what) {
  if (!ok) throw InputError(what);
}

inline void ensure(bool ok, const std::string& what) {
  if (!ok) throw InternalError(what);
}

inline int mod(long long a, int n) {
  long long r = a % n;
  return static_cast<int>(r < 0 ? r + n : r);
}

}  // namespace monoburn
