#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "monomial_poset.hpp"

namespace monoburn {

// Class of a monomial G-set: one [G_x, l_x] per orbit.
inline Element discrete_class(const TablePtr& t, const MonomialPoset& S) {
  Element e(t);
  for (int x : orbit_reps(S)) e.add(t->class_of(vertex_character(S, x)), 1);
  return e;
}

// Sum over n of (-1)^n [Sd_n(X), l_n].
inline Element lefschetz(const TablePtr& t, const MonomialPoset& X) {
  require(t->group().order() == X.group().order() && t->modulus() == X.modulus(),
          "table and poset over different bases");
  Element e(t);
  for (int n = 0;; ++n) {
    ChainSet cs = chains(X, n);
    if (cs.chains.empty()) break;
    Element d = discrete_class(t, cs.set);
    e += n % 2 ? -d : d;
  }
  return e;
}

inline Element reduced_lefschetz(const TablePtr& t, const MonomialPoset& X) {
  return lefschetz(t, X) - Element::one(t);
}

struct ChainTally {
  int n = 0;
  long long chains = 0;
  long long orbits = 0;
};

struct LefschetzReport {
  Element element;           // Sd_n route
  Element element_by_orbits; // orbit representative route
  bool routes_agree = false;
  std::vector<ChainTally> tallies;
  // per class: signed count of chains whose stabilizer pair is exactly the representative
  std::vector<long long> m;
  std::vector<long long> gamma;
};

inline Subchar chain_subchar(const MonomialPoset& X, const std::vector<int>& c, int at = 0) {
  const Group& G = X.group();
  std::vector<char> mask(G.order(), 0);
  for (Elt g = 0; g < G.order(); ++g) {
    bool fix = true;
    for (int x : c)
      if (X.act(g, x) != x) {
        fix = false;
        break;
      }
    mask[g] = fix;
  }
  Subchar s{subgroup_from_mask(std::move(mask)), std::vector<int>(G.order(), 0)};
  for (Elt g : s.U.elems) s.val[g] = X.iso(g, c[at]);
  return s;
}

inline LefschetzReport lefschetz_report(const TablePtr& t, const MonomialPoset& X) {
  const Group& G = X.group();
  LefschetzReport r{lefschetz(t, X), Element(t), false, {}, std::vector<long long>(t->num_classes(), 0), {}};
  std::vector<int> img;
  for_each_chain(X, [&](const std::vector<int>& c) {
    int n = static_cast<int>(c.size()) - 1;
    while (static_cast<int>(r.tallies.size()) <= n) r.tallies.push_back({static_cast<int>(r.tallies.size()), 0, 0});
    ++r.tallies[n].chains;
    Subchar s = chain_subchar(X, c);
    int sign = n % 2 ? -1 : 1;
    int id = t->id_of(s);
    int cls = t->class_of_id(id);
    if (id == t->id_of(t->rep(cls))) r.m[cls] += sign;
    // lexicographically least chain of its orbit
    bool least = true;
    img.resize(c.size());
    for (Elt g = 0; g < G.order() && least; ++g) {
      for (size_t i = 0; i < c.size(); ++i) img[i] = X.act(g, c[i]);
      if (img < c) least = false;
    }
    if (least) {
      ++r.tallies[n].orbits;
      r.element_by_orbits.add(cls, sign);
    }
  });
  r.routes_agree = r.element == r.element_by_orbits;
  r.gamma.resize(t->num_classes());
  for (int i = 0; i < t->num_classes(); ++i) r.gamma[i] = r.element.coeff(i);
  return r;
}

// ---------------------------------------------------------------------------
// Induction between subgroup tables

/// Subgroup H <= G as a group, with its own subcharacter table.
struct SubTable {
  Embedding emb;
  TablePtr table;
};

class SubTableCache {
 public:
  explicit SubTableCache(TablePtr t) : t_(std::move(t)) {}
  const SubTable& get(const Subgroup& H) {
    auto it = cache_.find(H.elems);
    if (it == cache_.end()) {
      Embedding e = subgroup_embedding(t_->group_ptr(), H);
      TablePtr st = make_table(e.sub, t_->modulus());
      it = cache_.emplace(H.elems, SubTable{std::move(e), std::move(st)}).first;
    }
    return it->second;
  }
  const TablePtr& table() const { return t_; }

 private:
  TablePtr t_;
  std::map<std::vector<Elt>, SubTable> cache_;
};

// Ind_H^G on B_C(H): [U, mu]_H -> [U, mu]_G.
inline Element induce_element(const Embedding& e, const TablePtr& G, const Element& a) {
  require(G->group().order() == e.parent->order(), "target table is not over the parent group");
  Element out(G);
  for (auto [cls, c] : a.terms()) {
    const Subchar& s = a.table()->rep(cls);
    std::vector<Elt> im;
    for (Elt u : s.U.elems) im.push_back(e(u));
    std::sort(im.begin(), im.end());
    Subchar g{make_subgroup(*e.parent, im), std::vector<int>(e.parent->order(), 0)};
    for (Elt u : s.U.elems) g.val[e(u)] = s.val[u];
    out.add(G->class_of(g), c);
  }
  return out;
}

// Subcharacter of G transported into the subgroup's own numbering.
inline Subchar to_sub(const Embedding& e, const Subchar& s) {
  std::vector<Elt> elems;
  for (Elt g : s.U.elems) {
    Elt h = e.preimage(g);
    require(h >= 0, "subcharacter does not live in the subgroup");
    elems.push_back(h);
  }
  std::sort(elems.begin(), elems.end());
  Subchar r{make_subgroup(*e.sub, elems), std::vector<int>(e.sub->order(), 0)};
  for (Elt g : s.U.elems) r.val[e.preimage(g)] = s.val[g];
  return r;
}

// Lambda = -sum over x in [G\X] of Ind_{G_x}([G_x, l_x] * reduced Lambda of ]x,.[ with trivial cocycle).
inline Element lefschetz_by_vertices(SubTableCache& cache, const MonomialPoset& X) {
  const TablePtr& t = cache.table();
  Element out(t);
  for (int x : orbit_reps(X)) {
    const SubTable& st = cache.get(stabilizer(X, x));
    MonomialPoset up = with_trivial_cocycle(up_interval(st.emb, X, x));
    Element vx = Element::of(st.table, to_sub(st.emb, vertex_character(X, x)));
    out -= induce_element(st.emb, t, vx * reduced_lefschetz(st.table, up));
  }
  return out;
}

inline Element lefschetz_by_vertices(const TablePtr& t, const MonomialPoset& X) {
  SubTableCache cache(t);
  return lefschetz_by_vertices(cache, X);
}

// ---------------------------------------------------------------------------
// Realization and marks

inline MonomialPoset copies(const MonomialPoset& X, long long k) {
  MonomialPoset out = MonomialPoset::empty(X.group_ptr(), X.modulus());
  for (long long i = 0; i < k; ++i) out = disjoint_union(out, X);
  return out;
}

// c [U, mu] with c > 0 gives c copies of (G/U, mu-hat); c < 0 gives |c| copies of (G/U, mu-hat) x W.
inline MonomialPoset realize(const Element& a) {
  const TablePtr& t = a.table();
  const GroupPtr& G = t->group_ptr();
  int n = t->modulus();
  MonomialPoset W = minus_one_poset(G, n);
  MonomialPoset out = MonomialPoset::empty(G, n);
  for (auto [cls, c] : a.terms()) {
    MonomialPoset orbit = coset_poset(G, n, t->rep(cls));
    out = disjoint_union(out, c > 0 ? copies(orbit, c) : copies(product(orbit, W), -c));
  }
  return out;
}

// chi of (X, l)^{U, mu} for every class representative.
inline std::vector<long long> marks_of_poset(const TablePtr& t, const MonomialPoset& X) {
  std::vector<long long> v(t->num_classes());
  for (int i = 0; i < t->num_classes(); ++i) v[i] = euler_char(fixed_subposet(X, t->rep(i)));
  return v;
}

inline bool equal_by_marks(const TablePtr& t, const MonomialPoset& X, const MonomialPoset& Y) {
  return marks_of_poset(t, X) == marks_of_poset(t, Y);
}

// ---------------------------------------------------------------------------
// Fibre decomposition of a map

struct QuillenReport {
  Element lhs;          // reduced Lambda of Y
  Element rhs_above;    // via f^y and ]y, .[
  Element rhs_below;    // via f_y and ]., y[
  bool above_holds = false;
  bool below_holds = false;
  // The same sums without the vertex factor and with restricted cocycles on the fibres.
  bool unweighted_above_holds = false;
  bool unweighted_below_holds = false;
  bool fibres_above_contractible = false;
  bool fibres_below_contractible = false;
  bool lambda_equal = false;
};

// reduced Lambda_Y = reduced Lambda_X + sum_{y in [G\Y]} Ind_{G_y}([G_y, m_y] * R(f^y) * R(]y, .[))
// with R the reduced invariant of the G_y-poset carrying the trivial cocycle; dually for f_y.
inline QuillenReport quillen_decomposition(SubTableCache& cache, const MonomialPoset& X, const MonomialPoset& Y,
                                           const MonoMap& m) {
  require(is_map(X, Y, m), "not a map of monomial posets");
  const TablePtr& t = cache.table();
  Element lx = reduced_lefschetz(t, X);
  QuillenReport r{reduced_lefschetz(t, Y), lx, lx};
  Element plain_above = lx, plain_below = lx;
  r.fibres_above_contractible = r.fibres_below_contractible = true;
  for (int y : orbit_reps(Y)) {
    const SubTable& st = cache.get(stabilizer(Y, y));
    const TablePtr& ty = st.table;
    Element vy = Element::of(ty, to_sub(st.emb, vertex_character(Y, y)));
    MonomialPoset fa = fiber_below(st.emb, X, Y, m, y);
    MonomialPoset fb = fiber_above(st.emb, X, Y, m, y);
    MonomialPoset ia = up_interval(st.emb, Y, y);
    MonomialPoset ib = down_interval(st.emb, Y, y);
    Element ra = reduced_lefschetz(ty, with_trivial_cocycle(fa));
    Element rb = reduced_lefschetz(ty, with_trivial_cocycle(fb));
    r.rhs_above += induce_element(st.emb, t, vy * ra * reduced_lefschetz(ty, with_trivial_cocycle(ia)));
    r.rhs_below += induce_element(st.emb, t, vy * rb * reduced_lefschetz(ty, with_trivial_cocycle(ib)));
    plain_above += induce_element(st.emb, t, reduced_lefschetz(ty, fa) * reduced_lefschetz(ty, ia));
    plain_below += induce_element(st.emb, t, reduced_lefschetz(ty, fb) * reduced_lefschetz(ty, ib));
    r.fibres_above_contractible = r.fibres_above_contractible && ra.is_zero();
    r.fibres_below_contractible = r.fibres_below_contractible && rb.is_zero();
  }
  r.above_holds = r.lhs == r.rhs_above;
  r.below_holds = r.lhs == r.rhs_below;
  r.unweighted_above_holds = r.lhs == plain_above;
  r.unweighted_below_holds = r.lhs == plain_below;
  r.lambda_equal = lefschetz(t, X) == lefschetz(t, Y);
  return r;
}

inline QuillenReport quillen_decomposition(const TablePtr& t, const MonomialPoset& X, const MonomialPoset& Y,
                                           const MonoMap& m) {
  SubTableCache cache(t);
  return quillen_decomposition(cache, X, Y, m);
}

}  // namespace monoburn
