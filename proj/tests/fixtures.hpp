#pragma once

#include "monoburn/catalog.hpp"
#include "monoburn/random.hpp"
#include "monoburn/tensor_induction.hpp"

namespace fixtures {

using namespace monoburn;

using monoburn::random_biset;

// Regular (G, H)-biset on H for G = 1.
inline Biset regular_from_trivial(const GroupPtr& G, const GroupPtr& H, int n) {
  const Group& h = *H;
  return biset_from_action(G, H, n, h.order(), [&](Elt, Elt b, int u) { return h.mul(u, h.inv(b)); });
}

inline PosetShape small_shape(int max_size = 4) {
  PosetShape s;
  s.max_size = max_size;
  s.max_orbits = 2;
  return s;
}

}  // namespace fixtures
