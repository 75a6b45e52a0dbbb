#pragma once

#include <string>
#include <vector>

#include "group.hpp"

namespace monoburn {

struct CatalogEntry {
  std::string name;
  std::string description;
  int degree;
  std::vector<std::vector<int>> generators;
};

inline std::vector<int> cycle_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (i + 1) % n;
  return p;
}

inline std::vector<int> flip_perm(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = (n - i) % n;
  return p;
}

inline const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"C1", "trivial group", 1, {}},
      {"C2", "cyclic of order 2", 2, {cycle_perm(2)}},
      {"C3", "cyclic of order 3", 3, {cycle_perm(3)}},
      {"C4", "cyclic of order 4", 4, {cycle_perm(4)}},
      {"C5", "cyclic of order 5", 5, {cycle_perm(5)}},
      {"C6", "cyclic of order 6", 6, {cycle_perm(6)}},
      {"V4", "Klein four group", 4, {{1, 0, 3, 2}, {2, 3, 0, 1}}},
      {"S3", "symmetric group on 3 letters", 3, {{1, 0, 2}, {1, 2, 0}}},
      {"D8", "dihedral of order 8", 4, {cycle_perm(4), flip_perm(4)}},
      // regular representation on 1,-1,i,-i,j,-j,k,-k
      {"Q8", "quaternion group", 8, {{2, 3, 1, 0, 6, 7, 5, 4}, {4, 5, 7, 6, 1, 0, 2, 3}}},
      {"D10", "dihedral of order 10", 5, {cycle_perm(5), flip_perm(5)}},
      {"D12", "dihedral of order 12", 6, {cycle_perm(6), flip_perm(6)}},
      {"C2^3", "elementary abelian of order 8", 6,
       {{1, 0, 2, 3, 4, 5}, {0, 1, 3, 2, 4, 5}, {0, 1, 2, 3, 5, 4}}},
      {"A4", "alternating group on 4 letters", 4, {{1, 2, 0, 3}, {1, 0, 3, 2}}},
      {"S4", "symmetric group on 4 letters", 4, {{1, 0, 2, 3}, cycle_perm(4)}},
  };
  return entries;
}

inline bool in_catalog(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return true;
  return false;
}

inline GroupPtr catalog_group(const std::string& name) {
  for (const auto& e : catalog())
    if (e.name == name) return make_group(Group::from_permutations(e.name, e.degree, e.generators));
  throw InputError("unknown group '" + name + "'");
}

}  // namespace monoburn
