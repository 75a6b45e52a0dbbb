#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "burnside.hpp"
#include "monomial_poset.hpp"

namespace monoburn {

/// Seeded generator. below() reduces by modulo so sequences match across standard libraries.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  int below(int n) {
    require(n > 0, "empty range");
    return static_cast<int>(eng_() % static_cast<uint64_t>(n));
  }
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }
  bool chance(int num, int den) { return below(den) < num; }
  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(static_cast<int>(v.size()))];
  }
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) std::swap(v[i], v[below(i + 1)]);
  }

 private:
  std::mt19937_64 eng_;
};

inline Element random_element(const TablePtr& t, Rng& rng, int lo, int hi, int max_terms) {
  Element e(t);
  int terms = rng.range(0, max_terms);
  for (int i = 0; i < terms; ++i) e.add(rng.below(t->num_classes()), rng.range(lo, hi));
  return e;
}

inline Subchar random_subchar(const Group& G, int n, Rng& rng) {
  Subgroup U = rng.pick(all_subgroups(G));
  return rng.pick(all_characters(G, U, n));
}

struct PosetShape {
  int max_orbits = 3;
  int levels = 3;
  int max_size = 10;
  int relation_tries = 4;
};

namespace detail {

// Vertex characters are either trivial, restricted from one global character, or arbitrary.
inline Subchar pick_orbit_character(const Group& G, int n, const Subgroup& U, const Subchar& global, Rng& rng) {
  int mode = rng.below(3);
  if (mode == 0) return trivial_subchar(U);
  if (mode == 1) return restrict_character(global, U);
  return rng.pick(all_characters(G, U, n));
}

// Solves for order values on pair orbits by backtracking over the additivity equations.
class BetaSolver {
 public:
  struct Eq {
    std::vector<std::pair<int, int>> terms;  // (orbit, coefficient)
    int rhs;
    int last;
  };

  BetaSolver(int vars, int n, std::vector<Eq> eqs, Rng& rng) : vars_(vars), n_(n), eqs_(std::move(eqs)), rng_(rng) {
    by_last_.resize(vars_);
    for (size_t i = 0; i < eqs_.size(); ++i) by_last_[eqs_[i].last].push_back(static_cast<int>(i));
  }

  std::optional<std::vector<int>> solve() {
    val_.assign(vars_, 0);
    budget_ = 200000;
    if (rec(0)) return val_;
    return std::nullopt;
  }

 private:
  bool rec(int v) {
    if (v == vars_) return true;
    std::vector<int> order(n_);
    for (int i = 0; i < n_; ++i) order[i] = i;
    rng_.shuffle(order);
    for (int c : order) {
      if (--budget_ < 0) return false;
      val_[v] = c;
      bool ok = true;
      for (int e : by_last_[v]) {
        long long s = 0;
        for (auto [o, k] : eqs_[e].terms) s += static_cast<long long>(k) * val_[o];
        if (mod(static_cast<int>(s % n_), n_) != mod(eqs_[e].rhs, n_)) {
          ok = false;
          break;
        }
      }
      if (ok && rec(v + 1)) return true;
    }
    return false;
  }

  int vars_, n_;
  std::vector<Eq> eqs_;
  std::vector<std::vector<int>> by_last_;
  std::vector<int> val_;
  long long budget_ = 0;
  Rng& rng_;
};

inline std::optional<MonomialPoset> try_random_poset(const GroupPtr& Gp, int n, Rng& rng, const PosetShape& shape) {
  const Group& G = *Gp;
  std::vector<Subgroup> subs = all_subgroups(G);
  std::vector<Subgroup> whole{whole_group(G)};
  Subchar global = rng.pick(all_characters(G, whole[0], n));
  // orbits G/U with a level each
  int k = rng.range(1, shape.max_orbits);
  std::vector<int> level, first;  // per orbit
  std::vector<int> orbit_of_pt;
  std::vector<int> act;
  std::vector<int> iso_v;
  int N = 0;
  struct Orbit {
    std::vector<Elt> T;
    Subchar mu;
    std::vector<int> gauge;
  };
  std::vector<Orbit> orbits;
  for (int i = 0; i < k; ++i) {
    Subgroup U = rng.pick(subs);
    std::vector<Elt> T = left_transversal(G, U);
    if (N + static_cast<int>(T.size()) > shape.max_size) continue;
    Orbit o{T, pick_orbit_character(G, n, U, global, rng), std::vector<int>(T.size())};
    for (int& a : o.gauge) a = rng.below(n);
    first.push_back(N);
    level.push_back(rng.below(shape.levels));
    N += static_cast<int>(T.size());
    orbits.push_back(std::move(o));
  }
  if (orbits.empty()) return std::nullopt;
  act.assign(static_cast<size_t>(G.order()) * N, 0);
  iso_v.assign(act.size(), 0);
  orbit_of_pt.assign(N, 0);
  for (size_t o = 0; o < orbits.size(); ++o) {
    const Orbit& ob = orbits[o];
    int m = static_cast<int>(ob.T.size());
    std::vector<int> coset(G.order());
    for (int i = 0; i < m; ++i)
      for (Elt u : ob.mu.U.elems) coset[G.mul(ob.T[i], u)] = i;
    for (int i = 0; i < m; ++i) orbit_of_pt[first[o] + i] = static_cast<int>(o);
    for (Elt g = 0; g < G.order(); ++g)
      for (int i = 0; i < m; ++i) {
        Elt gt = G.mul(g, ob.T[i]);
        int j = coset[gt];
        act[g * N + first[o] + i] = first[o] + j;
        iso_v[g * N + first[o] + i] = mod(ob.mu.val[G.mul(G.inv(ob.T[j]), gt)] + ob.gauge[j] - ob.gauge[i], n);
      }
  }
  // G-orbits of pairs between increasing levels, then transitive closure
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  for (int x = 0; x < N; ++x) leq[x * N + x] = 1;
  for (int r = 0; r < shape.relation_tries; ++r) {
    int x = rng.below(N), y = rng.below(N);
    if (level[orbit_of_pt[x]] >= level[orbit_of_pt[y]]) continue;
    for (Elt g = 0; g < G.order(); ++g) leq[act[g * N + x] * N + act[g * N + y]] = 1;
  }
  for (int z = 0; z < N; ++z)
    for (int x = 0; x < N; ++x)
      if (leq[x * N + z])
        for (int y = 0; y < N; ++y)
          if (leq[z * N + y]) leq[x * N + y] = 1;
  auto iso = [&](Elt g, int x) { return iso_v[g * N + x]; };
  // pair orbits; beta(gx, gy) = v_o + iso(g, y0) - iso(g, x0)
  std::vector<int> pair_orbit(static_cast<size_t>(N) * N, -1), pair_off(static_cast<size_t>(N) * N, 0);
  int vars = 0;
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      if (x == y || !leq[x * N + y] || pair_orbit[x * N + y] >= 0) continue;
      for (Elt g = 0; g < G.order(); ++g) {
        int gx = act[g * N + x], gy = act[g * N + y];
        int off = mod(iso(g, y) - iso(g, x), n);
        size_t p = static_cast<size_t>(gx) * N + gy;
        if (pair_orbit[p] < 0) {
          pair_orbit[p] = vars;
          pair_off[p] = off;
        } else if (pair_off[p] != off) {
          return std::nullopt;  // vertex characters disagree on a common stabilizer
        }
      }
      ++vars;
    }
  std::vector<BetaSolver::Eq> eqs;
  std::set<std::pair<std::vector<std::pair<int, int>>, int>> seen;
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) {
      if (x == y || !leq[x * N + y]) continue;
      for (int z = 0; z < N; ++z) {
        if (z == y || !leq[y * N + z]) continue;
        // b(x,z) - b(x,y) - b(y,z) = 0
        std::map<int, int> c;
        c[pair_orbit[x * N + z]] += 1;
        c[pair_orbit[x * N + y]] -= 1;
        c[pair_orbit[y * N + z]] -= 1;
        int rhs = mod(-pair_off[x * N + z] + pair_off[x * N + y] + pair_off[y * N + z], n);
        std::vector<std::pair<int, int>> terms;
        int last = 0;
        for (auto [o, k2] : c)
          if (mod(k2, n) != 0) {
            terms.push_back({o, mod(k2, n)});
            last = std::max(last, o);
          }
        if (terms.empty()) {
          if (rhs != 0) return std::nullopt;
          continue;
        }
        if (seen.insert({terms, rhs}).second) eqs.push_back({terms, rhs, last});
      }
    }
  auto sol = BetaSolver(vars, n, std::move(eqs), rng).solve();
  if (!sol) return std::nullopt;
  std::vector<uint8_t> iso8(iso_v.begin(), iso_v.end());
  std::vector<uint8_t> beta(leq.size(), 0);
  for (size_t p = 0; p < leq.size(); ++p)
    if (pair_orbit[p] >= 0) beta[p] = static_cast<uint8_t>(mod((*sol)[pair_orbit[p]] + pair_off[p], n));
  MonomialPoset X(Gp, n, N, std::move(leq), std::move(act), std::move(iso8), std::move(beta));
  ensure(!X.check().has_value(), "random generator produced an invalid poset");
  return X;
}

}  // namespace detail

// Random valid monomial G-poset; resamples until the cocycle equations are solvable.
inline MonomialPoset random_poset(const GroupPtr& G, int n, Rng& rng, const PosetShape& shape = {}) {
  for (int attempt = 0; attempt < 1000; ++attempt)
    if (auto X = detail::try_random_poset(G, n, rng, shape)) return *X;
  throw InternalError("random poset generation kept failing");
}

// A random discrete one (a monomial G-set).
inline MonomialPoset random_set(const GroupPtr& G, int n, Rng& rng, int max_orbits = 3, int max_size = 10) {
  PosetShape s;
  s.max_orbits = max_orbits;
  s.max_size = max_size;
  s.relation_tries = 0;
  return random_poset(G, n, rng, s);
}

// Random map into Y: a projection Y x Z -> Y, an inclusion of a stable full subposet,
// or a random enumerated morphism between small posets.
struct RandomMap {
  MonomialPoset source;
  MonomialPoset target;
  MonoMap map;
};

inline RandomMap random_map(const GroupPtr& G, int n, Rng& rng, const PosetShape& shape = {}) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    int kind = rng.below(3);
    if (kind == 0) {
      MonomialPoset Y = random_poset(G, n, rng, shape);
      PosetShape small = shape;
      small.max_size = std::max(1, shape.max_size / std::max(1, Y.size()));
      MonomialPoset Z = with_trivial_cocycle(random_poset(G, n, rng, small));
      MonomialPoset X = product(Y, Z);
      MonoMap m{std::vector<int>(X.size()), std::vector<int>(X.size(), 0)};
      for (int p = 0; p < X.size(); ++p) m.f[p] = p / Z.size();
      return {X, Y, m};
    }
    if (kind == 1) {
      MonomialPoset Y = random_poset(G, n, rng, shape);
      std::vector<int> reps = orbit_reps(Y), keep;
      std::vector<char> in(Y.size(), 0);
      for (int r : reps)
        if (rng.chance(1, 2))
          for (int y : orbit_of(Y, r)) in[y] = 1;
      for (int y = 0; y < Y.size(); ++y)
        if (in[y]) keep.push_back(y);
      MonomialPoset X = subposet(identity_embedding(G), Y, keep);
      MonoMap m{keep, std::vector<int>(keep.size(), 0)};
      return {X, Y, m};
    }
    MonomialPoset X = random_poset(G, n, rng, shape);
    MonomialPoset Y = random_poset(G, n, rng, shape);
    std::vector<MonoMap> all = enumerate_morphisms(X, Y);
    if (!all.empty()) return {X, Y, rng.pick(all)};
  }
  throw InternalError("random map generation kept failing");
}

}  // namespace monoburn
