#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

namespace monoburn {

using Elt = int;

/// Finite group stored as a full Cayley table over 0..order-1.
class Group {
 public:
  static constexpr int kDefaultCap = 10000;

  Group(std::string name, const std::vector<std::vector<Elt>>& table, bool check_associative = true)
      : name_(std::move(name)) {
    n_ = static_cast<int>(table.size());
    require(n_ > 0, "group table is empty");
    mul_.resize(static_cast<size_t>(n_) * n_);
    for (int a = 0; a < n_; ++a) {
      require(static_cast<int>(table[a].size()) == n_, "group table is not square");
      for (int b = 0; b < n_; ++b) {
        require(table[a][b] >= 0 && table[a][b] < n_, "group table entry out of range");
        mul_[a * n_ + b] = table[a][b];
      }
    }
    finish(check_associative);
  }

  // Closure of permutation generators given as 0-based image lists.
  static Group from_permutations(std::string name, int degree,
                                 const std::vector<std::vector<int>>& gens,
                                 int cap = kDefaultCap) {
    require(degree >= 0, "negative permutation degree");
    for (const auto& p : gens) {
      require(static_cast<int>(p.size()) == degree, "generator has wrong degree");
      std::vector<char> seen(degree, 0);
      for (int v : p) {
        require(v >= 0 && v < degree && !seen[v], "generator is not a bijection");
        seen[v] = 1;
      }
    }
    using Perm = std::vector<int>;
    Perm id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Perm> elems{id};
    std::map<Perm, int> index{{id, 0}};
    // BFS: right-multiply by generators. (a*b)(i) = a[b[i]].
    for (size_t k = 0; k < elems.size(); ++k) {
      for (const auto& s : gens) {
        Perm q(degree);
        for (int i = 0; i < degree; ++i) q[i] = elems[k][s[i]];
        if (!index.count(q)) {
          if (static_cast<int>(elems.size()) >= cap)
            throw InputError("group closure exceeds cap of " + std::to_string(cap));
          index.emplace(q, static_cast<int>(elems.size()));
          elems.push_back(std::move(q));
        }
      }
    }
    int n = static_cast<int>(elems.size());
    std::vector<std::vector<Elt>> table(n, std::vector<Elt>(n));
    Perm q(degree);
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        for (int i = 0; i < degree; ++i) q[i] = elems[a][elems[b][i]];
        table[a][b] = index.at(q);
      }
    // Permutation composition is associative; skip the cubic scan.
    Group g(std::move(name), table, false);
    g.perms_ = std::move(elems);
    g.degree_ = degree;
    return g;
  }

  int order() const { return n_; }
  const std::string& name() const { return name_; }
  Elt identity() const { return e_; }
  Elt mul(Elt a, Elt b) const { return mul_[a * n_ + b]; }
  Elt inv(Elt a) const { return inv_[a]; }
  // g x g^-1
  Elt conj(Elt g, Elt x) const { return mul(mul(g, x), inv_[g]); }

  int degree() const { return degree_; }
  // Permutation images when built from generators, else empty.
  const std::vector<std::vector<int>>& permutations() const { return perms_; }

  std::vector<std::vector<Elt>> table() const {
    std::vector<std::vector<Elt>> t(n_, std::vector<Elt>(n_));
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b) t[a][b] = mul(a, b);
    return t;
  }

  int element_order(Elt g) const {
    int k = 1;
    for (Elt x = g; x != e_; x = mul(x, g)) ++k;
    return k;
  }

 private:
  void finish(bool check_associative) {
    // Latin square first, so cancellation arguments below are valid.
    for (int a = 0; a < n_; ++a) {
      std::vector<char> row(n_, 0), col(n_, 0);
      for (int b = 0; b < n_; ++b) {
        require(!row[mul(a, b)], "group table row is not a permutation");
        require(!col[mul(b, a)], "group table column is not a permutation");
        row[mul(a, b)] = col[mul(b, a)] = 1;
      }
    }
    for (int a = 0; a < n_ && check_associative; ++a)
      for (int b = 0; b < n_; ++b)
        for (int c = 0; c < n_; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InputError("group table is not associative at (" + std::to_string(a) + "," +
                             std::to_string(b) + "," + std::to_string(c) + ")");
    e_ = -1;
    for (int a = 0; a < n_ && e_ < 0; ++a)
      if (mul(a, a) == a) e_ = a;
    require(e_ >= 0, "group table has no identity");
    for (int a = 0; a < n_; ++a)
      require(mul(e_, a) == a && mul(a, e_) == a, "identity is not two-sided");
    inv_.assign(n_, -1);
    for (int a = 0; a < n_; ++a)
      for (int b = 0; b < n_; ++b)
        if (mul(a, b) == e_) inv_[a] = b;
    for (int a = 0; a < n_; ++a) require(inv_[a] >= 0 && mul(inv_[a], a) == e_, "missing inverse");
  }

  std::string name_;
  int n_ = 0;
  Elt e_ = 0;
  std::vector<Elt> mul_;
  std::vector<Elt> inv_;
  int degree_ = 0;
  std::vector<std::vector<int>> perms_;
};

using GroupPtr = std::shared_ptr<const Group>;

inline GroupPtr make_group(Group g) { return std::make_shared<const Group>(std::move(g)); }

/// Subgroup as a sorted member list plus a membership mask over the parent.
struct Subgroup {
  std::vector<Elt> elems;
  std::vector<char> mask;

  int size() const { return static_cast<int>(elems.size()); }
  bool contains(Elt g) const { return mask[g] != 0; }
  int parent_order() const { return static_cast<int>(mask.size()); }

  friend bool operator==(const Subgroup& a, const Subgroup& b) { return a.elems == b.elems; }
  friend bool operator!=(const Subgroup& a, const Subgroup& b) { return !(a == b); }
  // Canonical order: size, then member list.
  friend bool operator<(const Subgroup& a, const Subgroup& b) {
    if (a.elems.size() != b.elems.size()) return a.elems.size() < b.elems.size();
    return a.elems < b.elems;
  }
};

inline Subgroup subgroup_from_mask(std::vector<char> mask) {
  Subgroup s;
  for (int g = 0; g < static_cast<int>(mask.size()); ++g)
    if (mask[g]) s.elems.push_back(g);
  s.mask = std::move(mask);
  return s;
}

// Closed subset check plus Lagrange.
inline Subgroup make_subgroup(const Group& G, const std::vector<Elt>& elems) {
  std::vector<char> mask(G.order(), 0);
  for (Elt g : elems) {
    require(g >= 0 && g < G.order(), "subgroup element out of range");
    mask[g] = 1;
  }
  require(mask[G.identity()], "subgroup lacks the identity");
  for (int a = 0; a < G.order(); ++a) {
    if (!mask[a]) continue;
    require(mask[G.inv(a)], "subgroup not closed under inverses");
    for (int b = 0; b < G.order(); ++b)
      if (mask[b]) require(mask[G.mul(a, b)], "subgroup not closed under multiplication");
  }
  Subgroup s = subgroup_from_mask(std::move(mask));
  ensure(G.order() % s.size() == 0, "Lagrange violated");
  return s;
}

inline Subgroup generate(const Group& G, const std::vector<Elt>& gens) {
  std::vector<char> mask(G.order(), 0);
  std::vector<Elt> todo{G.identity()};
  mask[G.identity()] = 1;
  for (size_t k = 0; k < todo.size(); ++k)
    for (Elt s : gens) {
      Elt y = G.mul(todo[k], s);
      if (!mask[y]) {
        mask[y] = 1;
        todo.push_back(y);
      }
    }
  return subgroup_from_mask(std::move(mask));
}

inline Subgroup trivial_subgroup(const Group& G) { return generate(G, {}); }

inline Subgroup whole_group(const Group& G) { return subgroup_from_mask(std::vector<char>(G.order(), 1)); }

inline bool is_subset(const Subgroup& U, const Subgroup& V) {
  for (Elt u : U.elems)
    if (!V.contains(u)) return false;
  return true;
}

inline Subgroup intersect(const Subgroup& U, const Subgroup& V) {
  require(U.parent_order() == V.parent_order(), "subgroups of different groups");
  std::vector<char> mask(U.mask.size(), 0);
  for (Elt u : U.elems)
    if (V.contains(u)) mask[u] = 1;
  return subgroup_from_mask(std::move(mask));
}

// g U g^-1
inline Subgroup conjugate(const Group& G, Elt g, const Subgroup& U) {
  std::vector<char> mask(G.order(), 0);
  for (Elt u : U.elems) mask[G.conj(g, u)] = 1;
  return subgroup_from_mask(std::move(mask));
}

inline Subgroup normalizer(const Group& G, const Subgroup& U) {
  std::vector<char> mask(G.order(), 0);
  for (Elt g = 0; g < G.order(); ++g) {
    bool ok = true;
    for (Elt u : U.elems)
      if (!U.contains(G.conj(g, u))) {
        ok = false;
        break;
      }
    mask[g] = ok;
  }
  return subgroup_from_mask(std::move(mask));
}

// Every subgroup once, sorted by (size, member list).
inline std::vector<Subgroup> all_subgroups(const Group& G) {
  std::set<std::vector<Elt>> seen;
  std::vector<Subgroup> out;
  out.push_back(trivial_subgroup(G));
  seen.insert(out[0].elems);
  for (size_t k = 0; k < out.size(); ++k) {
    for (Elt g = 0; g < G.order(); ++g) {
      if (out[k].contains(g)) continue;
      std::vector<Elt> gens = out[k].elems;
      gens.push_back(g);
      Subgroup s = generate(G, gens);
      if (seen.insert(s.elems).second) out.push_back(std::move(s));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Representatives of U\G/V: the least element of each double coset.
inline std::vector<Elt> double_cosets(const Group& G, const Subgroup& U, const Subgroup& V) {
  require(U.parent_order() == G.order() && V.parent_order() == G.order(),
          "double cosets of subgroups from a different group");
  std::vector<char> hit(G.order(), 0);
  std::vector<Elt> reps;
  for (Elt g = 0; g < G.order(); ++g) {
    if (hit[g]) continue;
    reps.push_back(g);
    for (Elt u : U.elems)
      for (Elt v : V.elems) hit[G.mul(G.mul(u, g), v)] = 1;
  }
  return reps;
}

// Least element of each left coset gH.
inline std::vector<Elt> left_transversal(const Group& G, const Subgroup& H) {
  std::vector<char> hit(G.order(), 0);
  std::vector<Elt> reps;
  for (Elt g = 0; g < G.order(); ++g) {
    if (hit[g]) continue;
    reps.push_back(g);
    for (Elt h : H.elems) hit[G.mul(g, h)] = 1;
  }
  return reps;
}

/// Left action of a group on 0..size-1, act(g, x).
struct GSet {
  GroupPtr group;
  int size = 0;
  std::vector<int> table;  // g * size + x

  GSet() = default;
  GSet(GroupPtr G, int n, std::vector<int> t) : group(std::move(G)), size(n), table(std::move(t)) {
    const Group& g = *group;
    require(static_cast<int>(table.size()) == g.order() * size, "action table has wrong size");
    for (int v : table) require(v >= 0 && v < size, "action table entry out of range");
    for (int x = 0; x < size; ++x) require(act(g.identity(), x) == x, "identity acts nontrivially");
    for (Elt a = 0; a < g.order(); ++a)
      for (Elt b = 0; b < g.order(); ++b)
        for (int x = 0; x < size; ++x)
          require(act(a, act(b, x)) == act(g.mul(a, b), x), "action is not compatible with multiplication");
  }

  int act(Elt g, int x) const { return table[g * size + x]; }
};

inline Subgroup stabilizer(const GSet& X, int x) {
  require(x >= 0 && x < X.size, "point out of range");
  std::vector<char> mask(X.group->order(), 0);
  for (Elt g = 0; g < X.group->order(); ++g) mask[g] = X.act(g, x) == x;
  return subgroup_from_mask(std::move(mask));
}

// Orbits listed by least point, each sorted.
inline std::vector<std::vector<int>> orbits(const GSet& X) {
  std::vector<char> seen(X.size, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < X.size; ++x) {
    if (seen[x]) continue;
    std::vector<int> orb;
    for (Elt g = 0; g < X.group->order(); ++g) {
      int y = X.act(g, x);
      if (!seen[y]) {
        seen[y] = 1;
        orb.push_back(y);
      }
    }
    std::sort(orb.begin(), orb.end());
    out.push_back(std::move(orb));
  }
  return out;
}

// Elements of G x H are encoded as g * |H| + h.
inline Group direct_product(const Group& G, const Group& H) {
  int m = H.order();
  int n = G.order() * m;
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = G.mul(a / m, b / m) * m + H.mul(a % m, b % m);
  return Group(G.name() + "x" + H.name(), t, false);
}

/// A group H together with an injective homomorphism into G.
struct Embedding {
  GroupPtr sub;
  GroupPtr parent;
  std::vector<Elt> map;  // sub element -> parent element
  Subgroup image;

  Elt operator()(Elt h) const { return map[h]; }
  // Parent element back to the sub group, or -1.
  Elt preimage(Elt g) const { return g >= 0 && g < static_cast<int>(back.size()) ? back[g] : -1; }

  std::vector<Elt> back;  // parent element -> sub element or -1
};

// The subgroup U as a group in its own right; sub element i is U.elems[i].
inline Embedding subgroup_embedding(const GroupPtr& G, const Subgroup& U, std::string name = "") {
  require(U.parent_order() == G->order(), "subgroup of a different group");
  int k = U.size();
  std::vector<int> pos(G->order(), -1);
  for (int i = 0; i < k; ++i) pos[U.elems[i]] = i;
  std::vector<std::vector<Elt>> t(k, std::vector<Elt>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) t[i][j] = pos[G->mul(U.elems[i], U.elems[j])];
  if (name.empty()) name = G->name() + "_sub" + std::to_string(k);
  Embedding e;
  e.sub = make_group(Group(name, t, false));
  e.parent = G;
  e.map = U.elems;
  e.image = U;
  e.back = pos;
  return e;
}

// G inside itself, sharing the group object.
inline Embedding identity_embedding(const GroupPtr& G) {
  Embedding e;
  e.sub = e.parent = G;
  e.image = whole_group(*G);
  e.map = e.image.elems;
  e.back = e.image.elems;
  return e;
}

}  // namespace monoburn
