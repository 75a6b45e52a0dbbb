#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "burnside.hpp"
#include "lefschetz.hpp"
#include "monomial_poset.hpp"
#include "random.hpp"

namespace monoburn {

/// C-monomial (G, H)-biset: a discrete monomial poset over G x H with (g, h)u = g u h^-1.
/// Product elements are encoded g * |H| + h.
struct Biset {
  GroupPtr left, right, prod;
  MonomialPoset set;

  int size() const { return set.size(); }
  int modulus() const { return set.modulus(); }
  Elt pair(Elt g, Elt h) const { return g * right->order() + h; }
  int lmul(Elt g, int u) const { return set.act(pair(g, right->identity()), u); }
  int rmul(int u, Elt h) const { return set.act(pair(left->identity(), right->inv(h)), u); }
  // lambda(g, h, u, v) for g u = v h
  int lam(Elt g, Elt h, int u, int v) const { return set.coc(pair(g, h), u, v); }
};

inline GroupPtr product_group(const GroupPtr& G, const GroupPtr& H) { return make_group(direct_product(*G, *H)); }

inline Biset make_biset(const GroupPtr& G, const GroupPtr& H, MonomialPoset set) {
  require(set.group().order() == G->order() * H->order(), "biset is not over G x H");
  require(set.is_discrete(), "bisets carry the discrete order");
  GroupPtr P = set.group_ptr();
  return Biset{G, H, P, std::move(set)};
}

// Biset with trivial cocycle from an explicit two-sided action g u h^-1.
inline Biset biset_from_action(const GroupPtr& G, const GroupPtr& H, int n, int size,
                               const std::function<int(Elt, Elt, int)>& act) {
  GroupPtr P = product_group(G, H);
  std::vector<int> t(static_cast<size_t>(P->order()) * size);
  for (Elt g = 0; g < G->order(); ++g)
    for (Elt h = 0; h < H->order(); ++h)
      for (int u = 0; u < size; ++u) t[(g * H->order() + h) * size + u] = act(g, h, u);
  MonomialPoset S = MonomialPoset::discrete(P, n, size, std::move(t), std::vector<uint8_t>(static_cast<size_t>(P->order()) * size, 0));
  S.validate();
  return make_biset(G, H, std::move(S));
}

inline Biset identity_biset(const GroupPtr& G, int n) {
  const Group& g = *G;
  return biset_from_action(G, G, n, g.order(), [&](Elt a, Elt b, int u) { return g.mul(g.mul(a, u), g.inv(b)); });
}

inline Biset empty_biset(const GroupPtr& G, const GroupPtr& H, int n) {
  GroupPtr P = product_group(G, H);
  return make_biset(G, H, MonomialPoset::empty(P, n));
}

// Transitive biset (G x H)/W with character omega; P must be G x H in the product encoding.
inline Biset coset_biset(const GroupPtr& G, const GroupPtr& H, const GroupPtr& P, int n, const Subchar& s) {
  require(P->order() == G->order() * H->order(), "product group has the wrong order");
  return make_biset(G, H, coset_poset(P, n, s));
}

inline Biset disjoint_union(const Biset& A, const Biset& B) {
  require(A.left->order() == B.left->order() && A.right->order() == B.right->order(), "bisets over different groups");
  return Biset{A.left, A.right, A.prod, disjoint_union(A.set, B.set)};
}

inline void validate_biset(const Biset& B) {
  require(B.set.is_discrete(), "bisets carry the discrete order");
  B.set.validate();
}

inline bool left_free(const Biset& B) {
  for (int u = 0; u < B.size(); ++u)
    for (Elt g = 0; g < B.left->order(); ++g)
      if (g != B.left->identity() && B.lmul(g, u) == u) return false;
  return true;
}

// lambda(g, 1, u, u) = 1 for every u and g in G_u. Without this the point has no
// admissible map, so T sends it to the empty poset.
inline bool left_trivial(const Biset& B) {
  for (int u = 0; u < B.size(); ++u)
    for (Elt g = 0; g < B.left->order(); ++g)
      if (B.lmul(g, u) == u && B.lam(g, B.right->identity(), u, u) != 0) return false;
  return true;
}

inline Subgroup left_stabilizer(const Biset& B, int u) {
  std::vector<char> mask(B.left->order(), 0);
  for (Elt g = 0; g < B.left->order(); ++g) mask[g] = B.lmul(g, u) == u;
  return subgroup_from_mask(std::move(mask));
}

// Least point of each left G-orbit, plus for every point p its rep and the least g with g rep = p.
struct LeftOrbits {
  std::vector<int> reps;
  std::vector<int> rep_of;
  std::vector<Elt> carrier;
};

inline LeftOrbits left_orbits(const Biset& B, const std::vector<int>& chosen = {}) {
  LeftOrbits o;
  o.rep_of.assign(B.size(), -1);
  o.carrier.assign(B.size(), -1);
  auto claim = [&](int r) {
    require(o.rep_of[r] < 0, "two representatives in one orbit");
    o.reps.push_back(r);
    for (Elt g = 0; g < B.left->order(); ++g) {
      int p = B.lmul(g, r);
      if (o.rep_of[p] < 0) {
        o.rep_of[p] = r;
        o.carrier[p] = g;
      }
    }
  };
  if (chosen.empty()) {
    for (int u = 0; u < B.size(); ++u)
      if (o.rep_of[u] < 0) claim(u);
  } else {
    for (int r : chosen) {
      require(r >= 0 && r < B.size(), "representative out of range");
      claim(r);
    }
    for (int u = 0; u < B.size(); ++u) require(o.rep_of[u] >= 0, "representatives miss an orbit");
  }
  return o;
}

// Largest point of each orbit: a second representative set.
inline std::vector<int> alternative_reps(const Biset& B) {
  std::vector<int> reps;
  std::vector<char> seen(B.size(), 0);
  for (int u = B.size() - 1; u >= 0; --u) {
    if (seen[u]) continue;
    reps.push_back(u);
    for (Elt g = 0; g < B.left->order(); ++g) seen[B.lmul(g, u)] = 1;
  }
  return reps;
}

// ---------------------------------------------------------------------------
// Composition

struct ComposedBiset {
  Biset biset;
  std::vector<int> point_of_pair;  // u * |V| + v -> point, -1 off the carrier
};

// U o_H V: H-orbits of pairs whose character on H_u cap H_v is trivial.
inline ComposedBiset compose_bisets(const Biset& U, const Biset& V) {
  require(U.right->order() == V.left->order(), "bisets do not share the middle group");
  require(U.modulus() == V.modulus(), "bisets over different coefficient groups");
  const Group& H = *U.right;
  int n = U.modulus(), nv = V.size();
  auto ok_pair = [&](int u, int v) {
    for (Elt h = 0; h < H.order(); ++h)
      if (U.rmul(u, h) == u && V.lmul(h, v) == v && mod(U.lam(U.left->identity(), h, u, u) +
                                                              V.lam(h, V.right->identity(), v, v), n) != 0)
        return false;
    return true;
  };
  std::vector<int> point(static_cast<size_t>(U.size()) * nv, -1);
  std::vector<std::pair<int, int>> reps;
  for (int u = 0; u < U.size(); ++u)
    for (int v = 0; v < nv; ++v) {
      if (point[u * nv + v] >= 0 || !ok_pair(u, v)) continue;
      int id = static_cast<int>(reps.size());
      reps.push_back({u, v});
      // h(u, v) = (u h^-1, h v)
      for (Elt h = 0; h < H.order(); ++h) point[U.rmul(u, H.inv(h)) * nv + V.lmul(h, v)] = id;
    }
  GroupPtr P = product_group(U.left, V.right);
  int N = static_cast<int>(reps.size());
  const Group& G = *U.left;
  const Group& K = *V.right;
  std::vector<int> act(static_cast<size_t>(P->order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt k = 0; k < K.order(); ++k) {
      Elt gk = g * K.order() + k;
      for (int i = 0; i < N; ++i) {
        auto [u, v] = reps[i];
        int a = U.lmul(g, u), b = V.rmul(v, K.inv(k));  // (g, k)(u, v) = (g u, v k^-1)
        int j = point[a * nv + b];
        ensure(j >= 0, "carrier of the composite is not stable");
        auto [u2, v2] = reps[j];
        int value = -1;
        for (Elt h = 0; h < H.order(); ++h) {
          // g u = u2 h and h v = v2 k
          if (U.rmul(u2, h) != a || V.lmul(h, v) != V.rmul(v2, k)) continue;
          int c = mod(U.lam(g, h, u, u2) + V.lam(h, k, v, v2), n);
          ensure(value < 0 || value == c, "composite cocycle depends on the connecting element");
          value = c;
        }
        ensure(value >= 0, "no connecting element for the composite");
        act[gk * N + i] = j;
        iso[gk * N + i] = static_cast<uint8_t>(value);
      }
    }
  MonomialPoset S = MonomialPoset::discrete(P, n, N, std::move(act), std::move(iso));
  return ComposedBiset{make_biset(U.left, V.right, std::move(S)), std::move(point)};
}

// [G\U] x [H\V] -> [G\(U x_H V)] is a bijection when V is left free.
inline bool orbit_pairing_is_bijective(const Biset& U, const Biset& V, const ComposedBiset& W) {
  LeftOrbits ou = left_orbits(U), ov = left_orbits(V), ow = left_orbits(W.biset);
  std::vector<int> hit(W.biset.size(), 0);
  for (int u : ou.reps)
    for (int v : ov.reps) {
      int p = W.point_of_pair[u * V.size() + v];
      if (p < 0) return false;
      ++hit[ow.rep_of[p]];
    }
  for (int r : ow.reps)
    if (hit[r] != 1) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Tensor induction of posets

struct TensorInduction {
  MonomialPoset poset;
  std::vector<int> reps;               // [G\U]
  std::vector<std::vector<int>> cand;  // admissible values f(r)
  std::vector<std::vector<int>> maps;  // f on the reps, per vertex
};

struct TensorTables {
  LeftOrbits orbits;
  std::vector<int> rep_index;  // point -> index in reps, -1 otherwise
  // for h and rep index i: r_i h = g sigma
  std::vector<int> sigma;
  std::vector<Elt> g;
};

inline TensorTables tensor_tables(const Biset& B, const std::vector<int>& chosen) {
  TensorTables t;
  t.orbits = left_orbits(B, chosen);
  int R = static_cast<int>(t.orbits.reps.size());
  t.rep_index.assign(B.size(), -1);
  for (int i = 0; i < R; ++i) t.rep_index[t.orbits.reps[i]] = i;
  t.sigma.resize(static_cast<size_t>(B.right->order()) * R);
  t.g.resize(t.sigma.size());
  for (Elt h = 0; h < B.right->order(); ++h)
    for (int i = 0; i < R; ++i) {
      int p = B.rmul(t.orbits.reps[i], h);
      t.sigma[h * R + i] = t.rep_index[t.orbits.rep_of[p]];
      t.g[h * R + i] = t.orbits.carrier[p];
    }
  return t;
}

inline constexpr long long kTensorCap = 200000;

// T_{U, lambda}(X, l). Vertices are maps f given by their values on [G\U].
inline TensorInduction tensor_induce(const Biset& B, const MonomialPoset& X, const std::vector<int>& chosen = {},
                                     long long cap = kTensorCap) {
  require(X.group().order() == B.left->order(), "poset is not over the left group");
  require(X.modulus() == B.modulus(), "poset and biset over different coefficient groups");
  const Group& G = *B.left;
  const Group& H = *B.right;
  int n = X.modulus();
  TensorTables tt = tensor_tables(B, chosen);
  const std::vector<int>& reps = tt.orbits.reps;
  int R = static_cast<int>(reps.size());
  std::vector<std::vector<int>> cand(R);
  std::vector<std::vector<int>> pos(R, std::vector<int>(X.size(), -1));
  long long total = 1;
  for (int i = 0; i < R; ++i) {
    Subgroup Gr = left_stabilizer(B, reps[i]);
    for (int x = 0; x < X.size(); ++x) {
      bool ok = true;
      for (Elt g : Gr.elems)
        if (X.act(g, x) != x || X.iso(g, x) != B.lam(g, H.identity(), reps[i], reps[i])) {
          ok = false;
          break;
        }
      if (ok) {
        pos[i][x] = static_cast<int>(cand[i].size());
        cand[i].push_back(x);
      }
    }
    total *= static_cast<long long>(cand[i].size());
    if (total > cap) throw InputError("tensor induction exceeds the cap of " + std::to_string(cap) + " maps");
  }
  int M = static_cast<int>(total);
  std::vector<std::vector<int>> maps(M, std::vector<int>(R));
  for (int f = 0; f < M; ++f) {
    int rest = f;
    for (int i = R - 1; i >= 0; --i) {
      int k = static_cast<int>(cand[i].size());
      maps[f][i] = cand[i][rest % k];
      rest /= k;
    }
  }
  auto encode = [&](const std::vector<int>& vals) {
    int idx = 0;
    for (int i = 0; i < R; ++i) {
      int p = pos[i][vals[i]];
      ensure(p >= 0, "action leaves the admissible maps");
      idx = idx * static_cast<int>(cand[i].size()) + p;
    }
    return idx;
  };
  std::vector<int> act(static_cast<size_t>(H.order()) * M);
  std::vector<uint8_t> iso(act.size());
  std::vector<int> img(R);
  for (Elt h = 0; h < H.order(); ++h)
    for (int f = 0; f < M; ++f) {
      // (hf)(r) = f(r h) = g f(sigma)
      for (int i = 0; i < R; ++i) img[i] = X.act(tt.g[h * R + i], maps[f][tt.sigma[h * R + i]]);
      int hf = encode(img);
      act[h * M + f] = hf;
      long long s = 0;
      for (int i = 0; i < R; ++i) {
        Elt g = tt.g[h * R + i];
        int sg = tt.sigma[h * R + i];
        s += X.coc(g, maps[f][sg], maps[hf][i]) - B.lam(g, h, reps[sg], reps[i]);
      }
      iso[h * M + f] = static_cast<uint8_t>(mod(static_cast<int>(s % n), n));
    }
  (void)G;
  std::vector<char> leq(static_cast<size_t>(M) * M, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int f = 0; f < M; ++f)
    for (int f2 = 0; f2 < M; ++f2) {
      bool le = true;
      for (int i = 0; i < R && le; ++i) le = X.leq(maps[f][i], maps[f2][i]);
      if (!le) continue;
      leq[static_cast<size_t>(f) * M + f2] = 1;
      // h = 1: r = g r with g the carrier of r, the identity
      long long s = 0;
      for (int i = 0; i < R; ++i) s += X.beta(maps[f][i], maps[f2][i]);
      beta[static_cast<size_t>(f) * M + f2] = static_cast<uint8_t>(mod(static_cast<int>(s % n), n));
    }
  MonomialPoset P = X.is_discrete() ? MonomialPoset::discrete(B.right, n, M, std::move(act), std::move(iso))
                                    : MonomialPoset(B.right, n, M, std::move(leq), std::move(act), std::move(iso),
                                                    std::move(beta));
  return TensorInduction{std::move(P), reps, std::move(cand), std::move(maps)};
}

// The defining product formula for L(h, f, f'), evaluated directly.
// T_{U, lambda} sends (pt, 1) to (pt, 1). Left triviality alone is not enough: the
// point then goes to a point carrying the character h -> -sum_r lambda(g_r, h, s_r, r)
// over left orbit reps r, and T(X x Y) differs from T(X) x T(Y) by that character.
// The point, product and unit laws want this together with left freeness. A nontrivial
// G_u makes T read off the G_u-fixed points of one character only, and like a single
// mark that is not multiplicative once n > 1.
inline bool fixes_point(const Biset& B) {
  MonomialPoset P = tensor_induce(B, MonomialPoset::point(B.left, B.modulus())).poset;
  if (P.size() != 1) return false;
  for (Elt h = 0; h < B.right->order(); ++h)
    if (P.coc(h, 0, 0) != 0) return false;
  return true;
}

inline int tensor_cocycle(const Biset& B, const MonomialPoset& X, const TensorInduction& T, Elt h, int f, int f2) {
  TensorTables tt = tensor_tables(B, T.reps);
  int R = static_cast<int>(T.reps.size());
  long long s = 0;
  for (int i = 0; i < R; ++i) {
    Elt g = tt.g[h * R + i];
    int sg = tt.sigma[h * R + i];
    s += X.coc(g, T.maps[f][sg], T.maps[f2][i]) - B.lam(g, h, T.reps[sg], T.reps[i]);
  }
  return mod(static_cast<int>(s % X.modulus()), X.modulus());
}

// f on every point of U.
inline std::vector<int> full_map(const Biset& B, const MonomialPoset& X, const TensorInduction& T, int f) {
  LeftOrbits o = left_orbits(B, T.reps);
  std::vector<int> idx(B.size(), -1);
  for (size_t i = 0; i < T.reps.size(); ++i) idx[T.reps[i]] = static_cast<int>(i);
  std::vector<int> out(B.size());
  for (int p = 0; p < B.size(); ++p) out[p] = X.act(o.carrier[p], T.maps[f][idx[o.rep_of[p]]]);
  return out;
}

// ---------------------------------------------------------------------------
// Fixed points of T(X) and the ring map

/// Per double coset G u K: the data entering the fixed-point formula for T(X)^{K, theta}.
struct DoubleCosetData {
  int u;
  Subgroup uK;        // {g : g u = u k for some k in K}
  Subgroup Gu;        // left stabilizer of u
  std::vector<int> carrier;  // lambda(g, 1, u, u) on G_u
  // per k in K (indexed by position in K): the gammas over t and phi_u(k)
  std::vector<std::vector<Elt>> gammas;
  std::vector<int> phi;
};

inline std::vector<DoubleCosetData> double_coset_data(const Biset& B, const Subgroup& K) {
  const Group& G = *B.left;
  const Group& H = *B.right;
  int n = B.modulus();
  std::vector<char> seen(B.size(), 0);
  std::vector<DoubleCosetData> out;
  for (int u = 0; u < B.size(); ++u) {
    if (seen[u]) continue;
    for (Elt g = 0; g < G.order(); ++g)
      for (Elt k : K.elems) seen[B.lmul(g, B.rmul(u, k))] = 1;
    DoubleCosetData d;
    d.u = u;
    // least g with g u = p, for p in G u
    std::vector<Elt> carrier(B.size(), -1);
    for (Elt g = 0; g < G.order(); ++g) {
      int p = B.lmul(g, u);
      if (carrier[p] < 0) carrier[p] = g;
    }
    std::vector<char> uk(G.order(), 0), ku(H.order(), 0);
    for (Elt k : K.elems) {
      int p = B.rmul(u, k);
      if (carrier[p] < 0) continue;
      ku[k] = 1;
      for (Elt g = 0; g < G.order(); ++g)
        if (B.lmul(g, u) == p) uk[g] = 1;
    }
    d.uK = subgroup_from_mask(std::move(uk));
    d.Gu = left_stabilizer(B, u);
    d.carrier.assign(G.order(), 0);
    for (Elt g : d.Gu.elems) d.carrier[g] = B.lam(g, H.identity(), u, u);
    // right cosets K_u t, least element as t
    std::vector<int> coset_of(H.order(), -1);
    std::vector<Elt> ts;
    for (Elt k : K.elems) {
      if (coset_of[k] >= 0) continue;
      int id = static_cast<int>(ts.size());
      ts.push_back(k);
      for (Elt c : K.elems)
        if (ku[c]) coset_of[H.mul(c, k)] = id;
    }
    for (Elt k : K.elems) {
      std::vector<Elt> gam;
      long long phi = 0;
      for (Elt t : ts) {
        Elt tk = H.mul(t, k);
        Elt tau = ts[coset_of[tk]];
        Elt c = H.mul(tk, H.inv(tau));
        Elt gamma = carrier[B.rmul(u, c)];
        ensure(gamma >= 0, "u c is not in the G-orbit of u");
        gam.push_back(gamma);
        phi -= B.lam(gamma, k, B.rmul(u, tau), B.rmul(u, t));
      }
      d.gammas.push_back(std::move(gam));
      d.phi.push_back(mod(static_cast<int>(phi % n), n));
    }
    out.push_back(std::move(d));
  }
  return out;
}

// Sum over families xi in Xi of prod_u value(u, (uK, xi_u)).
inline long long xi_sum(const Biset& B, const Subchar& Ktheta,
                        const std::function<long long(size_t, const Subchar&)>& value) {
  const Group& G = *B.left;
  int n = B.modulus();
  const Subgroup& K = Ktheta.U;
  std::vector<DoubleCosetData> ds = double_coset_data(B, K);
  int nk = K.size();
  // per u: admissible characters, their contribution vector over k, and their value
  struct Choice {
    std::vector<int> contrib;
    long long value;
  };
  std::vector<std::vector<Choice>> choices(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    const DoubleCosetData& d = ds[i];
    for (const Subchar& xi : all_characters(G, d.uK, n)) {
      bool ok = true;
      for (Elt g : d.Gu.elems) ok = ok && xi.val[g] == d.carrier[g];
      if (!ok) continue;
      long long v = value(i, xi);
      if (v == 0) continue;
      Choice c{std::vector<int>(nk), v};
      for (int j = 0; j < nk; ++j) {
        long long s = d.phi[j];
        for (Elt gam : d.gammas[j]) s += xi.val[gam];
        c.contrib[j] = mod(static_cast<int>(s % n), n);
      }
      choices[i].push_back(std::move(c));
    }
  }
  long long total = 0;
  std::vector<int> acc(nk, 0);
  std::function<void(size_t, long long)> rec = [&](size_t i, long long prod) {
    if (i == ds.size()) {
      for (int j = 0; j < nk; ++j)
        if (acc[j] != Ktheta.val[K.elems[j]]) return;
      total += prod;
      return;
    }
    for (const Choice& c : choices[i]) {
      for (int j = 0; j < nk; ++j) acc[j] = mod(acc[j] + c.contrib[j], n);
      rec(i + 1, prod * c.value);
      for (int j = 0; j < nk; ++j) acc[j] = mod(acc[j] - c.contrib[j], n);
    }
  };
  rec(0, 1);
  return total;
}

// chi(T(X)^{K, theta}) from fixed points of X.
inline long long tensor_induce_marks(const Biset& B, const MonomialPoset& X, const Subchar& Ktheta) {
  return xi_sum(B, Ktheta, [&](size_t, const Subchar& xi) { return euler_char(fixed_subposet(X, xi)); });
}

// The ring map, through marks: mark of T(a) at (K, theta) = sum over Xi of prod_u mark of a at (uK, xi_u).
inline Element tensor_induce_ring(const Biset& B, const Element& a, const TablePtr& tH) {
  require(a.table()->group().order() == B.left->order(), "element is not over the left group");
  require(tH->group().order() == B.right->order(), "target table is not over the right group");
  std::vector<long long> v(tH->num_classes());
  for (int i = 0; i < tH->num_classes(); ++i)
    v[i] = xi_sum(B, tH->rep(i), [&](size_t, const Subchar& xi) { return mark(a, xi); });
  return from_marks(tH, v);
}

// The ring map through a realization: Lambda of T(realize(a)).
inline Element tensor_induce_ring_by_posets(const Biset& B, const Element& a, const TablePtr& tH) {
  return lefschetz(tH, tensor_induce(B, realize(a)).poset);
}

// ---------------------------------------------------------------------------
// Laws that need more than one biset

struct CompositionReport {
  bool left_free = false;
  bool pairing_bijective = false;
  bool posets_isomorphic = false;
  bool ring_equal = true;
};

// T_V o T_U against T_{U x_H V} on X, and on the ring elements given.
inline CompositionReport composition_law(const Biset& U, const Biset& V, const MonomialPoset& X,
                                         const std::vector<Element>& elems, const TablePtr& tH,
                                         const TablePtr& tK) {
  CompositionReport r;
  r.left_free = left_free(V);
  require(r.left_free, "composition law needs a left free second biset");
  ComposedBiset W = compose_bisets(U, V);
  r.pairing_bijective = orbit_pairing_is_bijective(U, V, W);
  MonomialPoset lhs = tensor_induce(V, tensor_induce(U, X).poset).poset;
  MonomialPoset rhs = tensor_induce(W.biset, X).poset;
  r.posets_isomorphic = isomorphic(lhs, rhs);
  for (const Element& a : elems)
    r.ring_equal = r.ring_equal &&
                   tensor_induce_ring(V, tensor_induce_ring(U, a, tH), tK) == tensor_induce_ring(W.biset, a, tK);
  return r;
}

// Extends (U, lambda) -> T_{U, lambda} on units linearly in the biset argument:
// b = sum c_i [W_i, omega_i] goes to prod_i T_{W_i}(unit)^{c_i}. Only left free classes
// that fix the point are allowed; for the others T is not a ring map.
inline Element bilinear_pairing(const GroupPtr& G, const GroupPtr& H, const Element& b, const Element& unit,
                                const TablePtr& tH) {
  require(is_unit(unit), "second argument is not a unit");
  const TablePtr& tGH = b.table();
  Element out = Element::one(tH);
  for (auto [cls, c] : b.terms()) {
    Biset U = coset_biset(G, H, tGH->group_ptr(), tGH->modulus(), tGH->rep(cls));
    require(left_free(U) && fixes_point(U), "class " + tGH->describe(cls) + " is not left free and point-fixing");
    Element t = tensor_induce_ring(U, unit, tH);
    if (c < 0) {
      auto inv = inverse(t);
      ensure(inv.has_value(), "tensor induction of a unit is not a unit");
      t = *inv;
    }
    for (long long i = 0; i < (c < 0 ? -c : c); ++i) out = out * t;
  }
  ensure(is_unit(out), "pairing left the unit group");
  return out;
}

// ---------------------------------------------------------------------------
// Left freeness cannot be dropped

struct CounterexampleReport {
  bool composite_is_identity = false;
  bool found = false;
  int tried = 0;
  std::optional<MonomialPoset> witness;
  std::optional<MonomialPoset> image;  // T_V(T_U(witness))
};

struct NonFreeSetup {
  GroupPtr K, H;
  Biset U;  // (K, H): H with K acting on the left through K <= H
  Biset V;  // (H, K): K with H acting on the left through H -> H/N = K
};

// H = N x K with N = K = C2, elements 2 * a + b for a in N, b in K.
inline NonFreeSetup non_free_setup(const GroupPtr& C2, int n) {
  GroupPtr H = make_group(direct_product(*C2, *C2));
  const Group& h = *H;
  const Group& k = *C2;
  auto emb = [](Elt b) { return b; };            // K -> H, b -> (0, b)
  auto proj = [](Elt x) { return x % 2; };        // H -> K
  Biset U = biset_from_action(C2, H, n, h.order(),
                              [&](Elt g, Elt x, int u) { return h.mul(h.mul(emb(g), u), h.inv(x)); });
  Biset V = biset_from_action(H, C2, n, k.order(),
                              [&](Elt x, Elt b, int v) { return k.mul(k.mul(proj(x), v), k.inv(b)); });
  return NonFreeSetup{C2, H, std::move(U), std::move(V)};
}

// Searches candidate K-posets for one on which T_V o T_U is not the identity.
inline CounterexampleReport non_free_counterexample(const NonFreeSetup& s, const std::vector<MonomialPoset>& candidates) {
  CounterexampleReport r;
  ComposedBiset W = compose_bisets(s.U, s.V);
  r.composite_is_identity = isomorphic(W.biset.set, identity_biset(s.K, s.U.modulus()).set);
  for (const MonomialPoset& X : candidates) {
    ++r.tried;
    MonomialPoset Y = tensor_induce(s.V, tensor_induce(s.U, X).poset).poset;
    if (!isomorphic(Y, X)) {
      r.found = true;
      r.witness = X;
      r.image = Y;
      break;
    }
  }
  return r;
}


// Random (G, H)-biset: a union of transitive pieces (G x H)/W with random characters.
inline Biset random_biset(const GroupPtr& G, const GroupPtr& H, int n, Rng& rng, int max_size = 8,
                          bool want_left_free = false, int max_orbits = 2, bool want_fixes_point = false) {
  GroupPtr P = product_group(G, H);
  auto subs = all_subgroups(*P);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Biset B = empty_biset(G, H, n);
    B.prod = P;
    B.set = MonomialPoset::empty(P, n);
    int orbits = rng.range(1, max_orbits);
    for (int i = 0; i < orbits; ++i) {
      const Subgroup& W = rng.pick(subs);
      if (P->order() / W.size() + B.size() > max_size) continue;
      B = disjoint_union(B, coset_biset(G, H, P, n, rng.pick(all_characters(*P, W, n))));
    }
    if (B.size() == 0 || (want_left_free && !left_free(B)) || (want_fixes_point && !fixes_point(B))) continue;
    return B;
  }
  throw InputError("no biset of at most " + std::to_string(max_size) + " points found");
}

}  // namespace monoburn
