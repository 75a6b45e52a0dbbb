#pragma once

#include <map>
#include <vector>

#include "burnside.hpp"
#include "monomial_poset.hpp"

namespace monoburn {

/// A (C x G)-set given by its action table. Group element (c, g) is encoded as
/// c * |G| + g and acts on point p at act[(c * |G| + g) * size + p].
struct FibredSet {
  GroupPtr group;
  int n = 1;
  int size = 0;
  std::vector<int> act;

  int apply(int c, Elt g, int p) const {
    return act[(static_cast<size_t>(mod(c, n)) * group->order() + g) * size + p];
  }
};

// Checks the action laws and C-freeness.
inline void validate_fibred(const FibredSet& S) {
  const Group& G = *S.group;
  int k = G.order();
  require(static_cast<int>(S.act.size()) == S.n * k * S.size, "fibred action table has wrong size");
  for (int v : S.act) require(v >= 0 && v < S.size, "fibred action entry out of range");
  for (int p = 0; p < S.size; ++p) {
    require(S.apply(0, G.identity(), p) == p, "identity moves a point");
    for (int c = 1; c < S.n; ++c) require(S.apply(c, G.identity(), p) != p, "C does not act freely");
  }
  for (int c = 0; c < S.n; ++c)
    for (Elt g = 0; g < k; ++g)
      for (int d = 0; d < S.n; ++d)
        for (Elt h = 0; h < k; ++h)
          for (int p = 0; p < S.size; ++p)
            require(S.apply(c, g, S.apply(d, h, p)) == S.apply(c + d, G.mul(g, h), p),
                    "fibred action law fails");
}

// C x_l X with (k, g)(c, x) = (k + c + l(g, x, gx), gx); point (c, x) is c * |X| + x.
inline FibredSet monomial_set_to_fibred(const MonomialPoset& X) {
  require(X.is_discrete() || [&] {
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y)
        if (X.lt(x, y)) return false;
    return true;
  }(), "fibred sets come from discrete monomial posets");
  const Group& G = X.group();
  int n = X.modulus(), N = X.size(), k = G.order();
  FibredSet S{X.group_ptr(), n, n * N, {}};
  S.act.resize(static_cast<size_t>(n) * k * S.size);
  for (int kc = 0; kc < n; ++kc)
    for (Elt g = 0; g < k; ++g)
      for (int c = 0; c < n; ++c)
        for (int x = 0; x < N; ++x)
          S.act[(static_cast<size_t>(kc) * k + g) * S.size + c * N + x] =
              mod(kc + c + X.iso(g, x), n) * N + X.act(g, x);
  return S;
}

// Base set = C-orbits, represented by their least point; l(g, Cx, Cy) = c where gx = cy.
inline MonomialPoset fibred_to_monomial(const FibredSet& S) {
  const Group& G = *S.group;
  std::vector<int> orbit(S.size, -1), reps;
  std::vector<int> offset(S.size, 0);  // p = offset[p] * rep
  for (int p = 0; p < S.size; ++p) {
    if (orbit[p] >= 0) continue;
    int o = static_cast<int>(reps.size());
    reps.push_back(p);
    for (int c = 0; c < S.n; ++c) {
      int q = S.apply(c, G.identity(), p);
      require(orbit[q] < 0, "C does not act freely");
      orbit[q] = o;
      offset[q] = c;
    }
  }
  int N = static_cast<int>(reps.size());
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt g = 0; g < G.order(); ++g)
    for (int i = 0; i < N; ++i) {
      int q = S.apply(0, g, reps[i]);
      act[g * N + i] = orbit[q];
      iso[g * N + i] = static_cast<uint8_t>(offset[q]);
    }
  return MonomialPoset::discrete(S.group, S.n, N, std::move(act), std::move(iso));
}

// (C x G)/U_mu with U_mu = {(-mu(a), a) : a in U}; cosets by least encoded member.
inline FibredSet coset_fibred(const GroupPtr& Gp, int n, const Subchar& s) {
  const Group& G = *Gp;
  int k = G.order(), total = n * k;
  auto enc = [&](int c, Elt g) { return mod(c, n) * k + g; };
  std::vector<int> coset(total, -1);
  std::vector<int> reps;
  for (int e = 0; e < total; ++e) {
    if (coset[e] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(e);
    int c = e / k;
    Elt g = e % k;
    for (Elt a : s.U.elems) coset[enc(c - s.val[a], G.mul(g, a))] = id;
  }
  FibredSet S{Gp, n, static_cast<int>(reps.size()), {}};
  S.act.resize(static_cast<size_t>(total) * S.size);
  for (int c = 0; c < n; ++c)
    for (Elt g = 0; g < k; ++g)
      for (int p = 0; p < S.size; ++p) {
        int e = reps[p];
        S.act[(static_cast<size_t>(c) * k + g) * S.size + p] = coset[enc(c + e / k, G.mul(g, e % k))];
      }
  return S;
}

inline FibredSet disjoint_union(const FibredSet& S, const FibredSet& T) {
  require(S.n == T.n && S.group->order() == T.group->order(), "fibred sets over different bases");
  int k = S.group->order();
  FibredSet R{S.group, S.n, S.size + T.size, {}};
  R.act.resize(static_cast<size_t>(S.n) * k * R.size);
  for (int c = 0; c < S.n; ++c)
    for (Elt g = 0; g < k; ++g) {
      size_t row = (static_cast<size_t>(c) * k + g) * R.size;
      for (int p = 0; p < S.size; ++p) R.act[row + p] = S.apply(c, g, p);
      for (int p = 0; p < T.size; ++p) R.act[row + S.size + p] = S.size + T.apply(c, g, p);
    }
  return R;
}

// S (x)_C T: orbits of c(x, y) = (cx, c^-1 y), action (c, g)(x (x) y) = (c, g)x (x) gy.
inline FibredSet tensor_fibred(const FibredSet& S, const FibredSet& T) {
  require(S.n == T.n && S.group->order() == T.group->order(), "fibred sets over different bases");
  const Group& G = *S.group;
  int n = S.n, k = G.order();
  std::vector<int> cls(static_cast<size_t>(S.size) * T.size, -1);
  std::vector<std::pair<int, int>> reps;
  for (int x = 0; x < S.size; ++x)
    for (int y = 0; y < T.size; ++y) {
      if (cls[static_cast<size_t>(x) * T.size + y] >= 0) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back({x, y});
      for (int c = 0; c < n; ++c)
        cls[static_cast<size_t>(S.apply(c, G.identity(), x)) * T.size + T.apply(-c, G.identity(), y)] = id;
    }
  FibredSet R{S.group, n, static_cast<int>(reps.size()), {}};
  R.act.resize(static_cast<size_t>(n) * k * R.size);
  for (int c = 0; c < n; ++c)
    for (Elt g = 0; g < k; ++g)
      for (int p = 0; p < R.size; ++p) {
        auto [x, y] = reps[p];
        R.act[(static_cast<size_t>(c) * k + g) * R.size + p] =
            cls[static_cast<size_t>(S.apply(c, g, x)) * T.size + T.apply(0, g, y)];
      }
  return R;
}

// Sum over (C x G)-orbits of [U, mu], read off the stabilizer {(-mu(a), a)}.
inline Element decompose_fibred(const TablePtr& t, const FibredSet& S) {
  const Group& G = *S.group;
  require(G.order() == t->group().order(), "fibred set over a different group");
  require(S.n == t->modulus(), "fibred set over a different coefficient group");
  Element out(t);
  std::vector<char> seen(S.size, 0);
  for (int p = 0; p < S.size; ++p) {
    if (seen[p]) continue;
    for (int c = 0; c < S.n; ++c)
      for (Elt g = 0; g < G.order(); ++g) seen[S.apply(c, g, p)] = 1;
    std::vector<char> mask(G.order(), 0);
    std::vector<int> val(G.order(), 0);
    for (int c = 0; c < S.n; ++c)
      for (Elt g = 0; g < G.order(); ++g)
        if (S.apply(c, g, p) == p) {
          if (mask[g]) throw InputError("stabilizer is not of the form U_mu: C does not act freely");
          mask[g] = 1;
          val[g] = mod(-c, S.n);
        }
    Subchar s{subgroup_from_mask(std::move(mask)), std::move(val)};
    out.add(t->class_of(s), 1);
  }
  return out;
}

// Ring-product oracle: [U, mu] * [V, nu] through fibred tensor products.
inline Element fibred_product(const TablePtr& t, int i, int j) {
  const GroupPtr& G = t->group_ptr();
  return decompose_fibred(t, tensor_fibred(coset_fibred(G, t->modulus(), t->rep(i)),
                                           coset_fibred(G, t->modulus(), t->rep(j))));
}

}  // namespace monoburn
