#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subchar.hpp"

namespace monoburn {

/// Finite G-poset with a cocycle l(g, x, y) in Z/n, defined when gx <= y.
///
/// Stored factorized: every morphism g: x -> y of the transporter category is
/// (1: gx -> y) after (g: x -> gx), so l(g,x,y) = iso(g,x) + beta(gx,y).
class MonomialPoset {
 public:
  MonomialPoset(GroupPtr G, int n, int size, std::vector<char> leq, std::vector<int> act,
                std::vector<uint8_t> iso, std::vector<uint8_t> beta)
      : G_(std::move(G)), n_(n), N_(size), leq_(std::move(leq)), act_(std::move(act)),
        iso_(std::move(iso)), beta_(std::move(beta)) {
    require(n_ >= 1 && n_ <= 255, "modulus must be in 1..255");
    size_t gn = static_cast<size_t>(G_->order()) * N_;
    require(act_.size() == gn && iso_.size() == gn, "action or cocycle table has wrong size");
    discrete_ = leq_.empty();
    if (!discrete_)
      require(leq_.size() == static_cast<size_t>(N_) * N_ && beta_.size() == leq_.size(),
              "order or cocycle table has wrong size");
    for (int v : act_) require(v >= 0 && v < N_, "action table entry out of range");
    for (int v : iso_) require(v < n_, "cocycle value out of range");
    for (int v : beta_) require(v < n_, "cocycle value out of range");
  }

  // Discrete poset, i.e. a monomial G-set.
  static MonomialPoset discrete(GroupPtr G, int n, int size, std::vector<int> act, std::vector<uint8_t> iso) {
    return MonomialPoset(std::move(G), n, size, {}, std::move(act), std::move(iso), {});
  }
  static MonomialPoset empty(GroupPtr G, int n) { return discrete(std::move(G), n, 0, {}, {}); }
  static MonomialPoset point(GroupPtr G, int n) {
    int k = G->order();
    return discrete(std::move(G), n, 1, std::vector<int>(k, 0), std::vector<uint8_t>(k, 0));
  }

  // From a full cocycle function; every admissible triple is checked against the
  // factorization, so an inconsistent table is rejected here.
  static MonomialPoset from_cocycle(GroupPtr G, int n, int size, std::vector<char> leq, std::vector<int> act,
                                    const std::function<int(Elt, int, int)>& l) {
    const Group& g = *G;
    size_t gn = static_cast<size_t>(g.order()) * size;
    require(act.size() == gn, "action table has wrong size");
    require(leq.size() == static_cast<size_t>(size) * size, "order matrix has wrong size");
    std::vector<uint8_t> iso(gn), beta(leq.size(), 0);
    for (Elt a = 0; a < g.order(); ++a)
      for (int x = 0; x < size; ++x) iso[a * size + x] = static_cast<uint8_t>(mod(l(a, x, act[a * size + x]), n));
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y)
        if (leq[x * size + y]) beta[x * size + y] = static_cast<uint8_t>(mod(l(g.identity(), x, y), n));
    MonomialPoset X(std::move(G), n, size, std::move(leq), std::move(act), std::move(iso), std::move(beta));
    for (Elt a = 0; a < g.order(); ++a)
      for (int x = 0; x < size; ++x)
        for (int y = 0; y < size; ++y)
          if (X.admissible(a, x, y) && mod(l(a, x, y), n) != X.coc(a, x, y))
            throw InputError("cocycle fails composition at g=" + std::to_string(a) + " x=" + std::to_string(x) +
                             " y=" + std::to_string(y));
    return X;
  }

  const Group& group() const { return *G_; }
  const GroupPtr& group_ptr() const { return G_; }
  int modulus() const { return n_; }
  int size() const { return N_; }
  bool is_discrete() const { return discrete_; }

  bool leq(int x, int y) const { return discrete_ ? x == y : leq_[static_cast<size_t>(x) * N_ + y] != 0; }
  bool lt(int x, int y) const { return x != y && leq(x, y); }
  int act(Elt g, int x) const { return act_[static_cast<size_t>(g) * N_ + x]; }
  // l(g, x, gx)
  int iso(Elt g, int x) const { return iso_[static_cast<size_t>(g) * N_ + x]; }
  // l(1, x, y) for x <= y
  int beta(int x, int y) const { return discrete_ ? 0 : beta_[static_cast<size_t>(x) * N_ + y]; }
  bool admissible(Elt g, int x, int y) const { return leq(act(g, x), y); }
  int coc(Elt g, int x, int y) const {
    int gx = act(g, x);
    require(leq(gx, y), "cocycle evaluated outside its domain");
    return mod(iso(g, x) + beta(gx, y), n_);
  }

  const std::vector<char>& leq_table() const { return leq_; }
  const std::vector<int>& act_table() const { return act_; }
  const std::vector<uint8_t>& iso_table() const { return iso_; }
  const std::vector<uint8_t>& beta_table() const { return beta_; }

  // Checks the order, the action and the cocycle law. Returns the first failure.
  std::optional<std::string> check() const {
    const Group& G = *G_;
    auto at = [](const char* what, std::initializer_list<int> xs) {
      std::string s = what;
      s += " at";
      for (int v : xs) s += " " + std::to_string(v);
      return s;
    };
    for (int x = 0; x < N_; ++x) {
      if (!leq(x, x)) return at("order not reflexive", {x});
      for (int y = 0; y < N_; ++y) {
        if (x != y && leq(x, y) && leq(y, x)) return at("order not antisymmetric", {x, y});
        if (!discrete_ && leq(x, y))
          for (int z = 0; z < N_; ++z)
            if (leq(y, z) && !leq(x, z)) return at("order not transitive", {x, y, z});
      }
    }
    Elt e = G.identity();
    for (int x = 0; x < N_; ++x) {
      if (act(e, x) != x) return at("identity moves point", {x});
      if (iso(e, x) != 0) return at("l(1,x,x) is not zero", {x});
      if (beta(x, x) != 0) return at("l(1,x,x) is not zero", {x});
    }
    for (Elt g = 0; g < G.order(); ++g)
      for (Elt h = 0; h < G.order(); ++h)
        for (int x = 0; x < N_; ++x) {
          if (act(h, act(g, x)) != act(G.mul(h, g), x)) return at("action law fails", {h, g, x});
          if (iso(G.mul(h, g), x) != mod(iso(h, act(g, x)) + iso(g, x), n_))
            return at("cocycle law fails on isomorphisms", {h, g, x});
        }
    if (!discrete_) {
      for (int x = 0; x < N_; ++x)
        for (int y = 0; y < N_; ++y) {
          if (!leq(x, y)) continue;
          for (int z = 0; z < N_; ++z)
            if (leq(y, z) && beta(x, z) != mod(beta(x, y) + beta(y, z), n_))
              return at("cocycle law fails on order relations", {x, y, z});
          for (Elt g = 0; g < G.order(); ++g) {
            int gx = act(g, x), gy = act(g, y);
            if (!leq(gx, gy)) return at("action does not preserve order", {g, x, y});
            if (mod(beta(gx, gy) + iso(g, x), n_) != mod(iso(g, y) + beta(x, y), n_))
              return at("cocycle law fails on (g,x,gy)", {g, x, y});
          }
        }
    }
    return std::nullopt;
  }

  void validate() const {
    if (auto v = check()) throw InputError("invalid monomial poset: " + *v);
  }

  // Exhaustive cocycle law over all composable pairs. Cubic in size; for tests.
  std::optional<std::string> check_exhaustive() const {
    const Group& G = *G_;
    for (Elt g = 0; g < G.order(); ++g)
      for (int x = 0; x < N_; ++x)
        for (int y = 0; y < N_; ++y) {
          if (!admissible(g, x, y)) continue;
          for (Elt h = 0; h < G.order(); ++h)
            for (int z = 0; z < N_; ++z)
              if (admissible(h, y, z) && mod(coc(h, y, z) + coc(g, x, y), n_) != coc(G.mul(h, g), x, z))
                return "cocycle law fails at g=" + std::to_string(g) + " h=" + std::to_string(h) +
                       " x=" + std::to_string(x) + " y=" + std::to_string(y) + " z=" + std::to_string(z);
        }
    return std::nullopt;
  }

 private:
  GroupPtr G_;
  int n_;
  int N_;
  bool discrete_ = true;
  std::vector<char> leq_;
  std::vector<int> act_;
  std::vector<uint8_t> iso_;
  std::vector<uint8_t> beta_;
};

struct CocycleViolation {
  Elt g, h;
  int x, y, z;
  std::string what;
};

// Validates a raw table l[g][x][y] (-1 where undefined) against the cocycle law.
inline std::optional<CocycleViolation> check_cocycle_table(const Group& G, int n, int size,
                                                           const std::vector<char>& leq,
                                                           const std::vector<int>& act,
                                                           const std::vector<int>& table) {
  auto L = [&](Elt g, int x, int y) { return table[(static_cast<size_t>(g) * size + x) * size + y]; };
  auto le = [&](int x, int y) { return leq[static_cast<size_t>(x) * size + y] != 0; };
  for (Elt g = 0; g < G.order(); ++g)
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        bool adm = le(act[g * size + x], y);
        if (adm != (L(g, x, y) >= 0))
          return CocycleViolation{g, -1, x, y, -1, adm ? "missing value" : "value outside the domain"};
      }
  for (int x = 0; x < size; ++x)
    if (L(G.identity(), x, x) != 0) return CocycleViolation{G.identity(), -1, x, x, -1, "l(1,x,x) is not zero"};
  for (Elt g = 0; g < G.order(); ++g)
    for (int x = 0; x < size; ++x)
      for (int y = 0; y < size; ++y) {
        if (L(g, x, y) < 0) continue;
        for (Elt h = 0; h < G.order(); ++h)
          for (int z = 0; z < size; ++z)
            if (L(h, y, z) >= 0 && mod(L(h, y, z) + L(g, x, y), n) != L(G.mul(h, g), x, z))
              return CocycleViolation{g, h, x, y, z, "composition"};
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Basic structure

inline Subgroup stabilizer(const MonomialPoset& X, int x) {
  std::vector<char> mask(X.group().order(), 0);
  for (Elt g = 0; g < X.group().order(); ++g) mask[g] = X.act(g, x) == x;
  return subgroup_from_mask(std::move(mask));
}

// x -> l(g, x, x) on G_x
inline Subchar vertex_character(const MonomialPoset& X, int x) {
  Subchar s = trivial_subchar(stabilizer(X, x));
  for (Elt g : s.U.elems) s.val[g] = X.iso(g, x);
  return s;
}

inline std::vector<int> orbit_of(const MonomialPoset& X, int x) {
  std::vector<char> seen(X.size(), 0);
  std::vector<int> out;
  for (Elt g = 0; g < X.group().order(); ++g) {
    int y = X.act(g, x);
    if (!seen[y]) {
      seen[y] = 1;
      out.push_back(y);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Least point of each orbit.
inline std::vector<int> orbit_reps(const MonomialPoset& X) {
  std::vector<char> seen(X.size(), 0);
  std::vector<int> reps;
  for (int x = 0; x < X.size(); ++x) {
    if (seen[x]) continue;
    reps.push_back(x);
    for (Elt g = 0; g < X.group().order(); ++g) seen[X.act(g, x)] = 1;
  }
  return reps;
}

inline GSet as_gset(const MonomialPoset& X) { return GSet(X.group_ptr(), X.size(), X.act_table()); }

inline void same_base(const MonomialPoset& X, const MonomialPoset& Y) {
  require(X.group_ptr() == Y.group_ptr() || X.group().table() == Y.group().table(),
          "monomial posets over different groups");
  require(X.modulus() == Y.modulus(), "monomial posets over different coefficient groups");
}

// ---------------------------------------------------------------------------
// Constructions

inline MonomialPoset with_trivial_cocycle(const MonomialPoset& X) {
  return MonomialPoset(X.group_ptr(), X.modulus(), X.size(), X.leq_table(), X.act_table(),
                       std::vector<uint8_t>(X.iso_table().size(), 0),
                       std::vector<uint8_t>(X.beta_table().size(), 0));
}

// Plain G-poset with the constant functor.
inline MonomialPoset trivial_monomial(GroupPtr G, int n, int size, std::vector<char> leq, std::vector<int> act) {
  size_t gn = static_cast<size_t>(G->order()) * size;
  std::vector<uint8_t> beta(leq.size(), 0);
  return MonomialPoset(std::move(G), n, size, std::move(leq), std::move(act), std::vector<uint8_t>(gn, 0),
                       std::move(beta));
}

inline std::vector<char> materialize_leq(const MonomialPoset& X) {
  std::vector<char> m(static_cast<size_t>(X.size()) * X.size(), 0);
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y) m[static_cast<size_t>(x) * X.size() + y] = X.leq(x, y);
  return m;
}

inline std::vector<uint8_t> materialize_beta(const MonomialPoset& X) {
  std::vector<uint8_t> b(static_cast<size_t>(X.size()) * X.size(), 0);
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.leq(x, y)) b[static_cast<size_t>(x) * X.size() + y] = static_cast<uint8_t>(X.beta(x, y));
  return b;
}

inline MonomialPoset disjoint_union(const MonomialPoset& X, const MonomialPoset& Y) {
  same_base(X, Y);
  const Group& G = X.group();
  int a = X.size(), b = Y.size(), N = a + b;
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt g = 0; g < G.order(); ++g) {
    for (int x = 0; x < a; ++x) {
      act[g * N + x] = X.act(g, x);
      iso[g * N + x] = static_cast<uint8_t>(X.iso(g, x));
    }
    for (int y = 0; y < b; ++y) {
      act[g * N + a + y] = a + Y.act(g, y);
      iso[g * N + a + y] = static_cast<uint8_t>(Y.iso(g, y));
    }
  }
  if (X.is_discrete() && Y.is_discrete()) return MonomialPoset::discrete(X.group_ptr(), X.modulus(), N, act, iso);
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < a; ++y)
      if (X.leq(x, y)) {
        leq[x * N + y] = 1;
        beta[x * N + y] = static_cast<uint8_t>(X.beta(x, y));
      }
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y)
      if (Y.leq(x, y)) {
        leq[(a + x) * N + a + y] = 1;
        beta[(a + x) * N + a + y] = static_cast<uint8_t>(Y.beta(x, y));
      }
  return MonomialPoset(X.group_ptr(), X.modulus(), N, std::move(leq), std::move(act), std::move(iso),
                       std::move(beta));
}

// Vertex (x, y) is x * |Y| + y; cocycle l(g,x,y) + l'(g,x',y').
inline MonomialPoset product(const MonomialPoset& X, const MonomialPoset& Y) {
  same_base(X, Y);
  const Group& G = X.group();
  int a = X.size(), b = Y.size(), N = a * b, n = X.modulus();
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt g = 0; g < G.order(); ++g)
    for (int x = 0; x < a; ++x)
      for (int y = 0; y < b; ++y) {
        act[g * N + x * b + y] = X.act(g, x) * b + Y.act(g, y);
        iso[g * N + x * b + y] = static_cast<uint8_t>(mod(X.iso(g, x) + Y.iso(g, y), n));
      }
  if (X.is_discrete() && Y.is_discrete()) return MonomialPoset::discrete(X.group_ptr(), n, N, act, iso);
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int p = 0; p < N; ++p)
    for (int q = 0; q < N; ++q)
      if (X.leq(p / b, q / b) && Y.leq(p % b, q % b)) {
        leq[static_cast<size_t>(p) * N + q] = 1;
        beta[static_cast<size_t>(p) * N + q] = static_cast<uint8_t>(mod(X.beta(p / b, q / b) + Y.beta(p % b, q % b), n));
      }
  return MonomialPoset(X.group_ptr(), n, N, std::move(leq), std::move(act), std::move(iso), std::move(beta));
}

// Order reversed; l_op(g,x,y) = -l(g^-1, y, x).
inline MonomialPoset opposite(const MonomialPoset& X) {
  if (X.is_discrete()) return X;
  int N = X.size(), n = X.modulus();
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y)
      if (X.leq(y, x)) {
        leq[x * N + y] = 1;
        beta[x * N + y] = static_cast<uint8_t>(mod(-X.beta(y, x), n));
      }
  // l_op(g,x,gx) = -l(g^-1,gx,x) = l(g,x,gx) by the cocycle law.
  std::vector<uint8_t> iso(X.iso_table().size());
  const Group& G = X.group();
  for (Elt g = 0; g < G.order(); ++g)
    for (int x = 0; x < N; ++x) iso[g * N + x] = static_cast<uint8_t>(mod(-X.iso(G.inv(g), X.act(g, x)), n));
  return MonomialPoset(X.group_ptr(), n, N, std::move(leq), X.act_table(), std::move(iso), std::move(beta));
}

// G x_H X, vertices (t, x) for t in the least left transversal of G/H.
inline MonomialPoset induce(const Embedding& e, const MonomialPoset& X) {
  require(X.group_ptr() == e.sub || X.group().order() == e.sub->order(), "poset is not over the subgroup");
  const Group& G = *e.parent;
  std::vector<Elt> T = left_transversal(G, e.image);
  int k = static_cast<int>(T.size()), m = X.size(), N = k * m, n = X.modulus();
  std::vector<int> coset(G.order());
  for (int i = 0; i < k; ++i)
    for (Elt h : e.image.elems) coset[G.mul(T[i], h)] = i;
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt g = 0; g < G.order(); ++g)
    for (int i = 0; i < k; ++i) {
      Elt gt = G.mul(g, T[i]);
      int j = coset[gt];
      Elt h = e.preimage(G.mul(G.inv(T[j]), gt));
      for (int x = 0; x < m; ++x) {
        act[g * N + i * m + x] = j * m + X.act(h, x);
        iso[g * N + i * m + x] = static_cast<uint8_t>(X.iso(h, x));
      }
    }
  if (X.is_discrete()) return MonomialPoset::discrete(e.parent, n, N, act, iso);
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int i = 0; i < k; ++i)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y)
        if (X.leq(x, y)) {
          leq[(i * m + x) * N + i * m + y] = 1;
          beta[(i * m + x) * N + i * m + y] = static_cast<uint8_t>(X.beta(x, y));
        }
  return MonomialPoset(e.parent, n, N, std::move(leq), std::move(act), std::move(iso), std::move(beta));
}

inline MonomialPoset restrict(const Embedding& e, const MonomialPoset& Y) {
  require(Y.group().order() == e.parent->order(), "poset is not over the parent group");
  const Group& H = *e.sub;
  int N = Y.size();
  std::vector<int> act(static_cast<size_t>(H.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt h = 0; h < H.order(); ++h)
    for (int y = 0; y < N; ++y) {
      act[h * N + y] = Y.act(e(h), y);
      iso[h * N + y] = static_cast<uint8_t>(Y.iso(e(h), y));
    }
  if (Y.is_discrete()) return MonomialPoset::discrete(e.sub, Y.modulus(), N, act, iso);
  return MonomialPoset(e.sub, Y.modulus(), N, Y.leq_table(), std::move(act), std::move(iso), Y.beta_table());
}

// Full subposet on an H-stable vertex list, as an H-poset with the restricted cocycle.
inline MonomialPoset subposet(const Embedding& e, const MonomialPoset& X, const std::vector<int>& verts) {
  const Group& H = *e.sub;
  int N = static_cast<int>(verts.size());
  std::vector<int> pos(X.size(), -1);
  for (int i = 0; i < N; ++i) pos[verts[i]] = i;
  std::vector<int> act(static_cast<size_t>(H.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt h = 0; h < H.order(); ++h)
    for (int i = 0; i < N; ++i) {
      int y = pos[X.act(e(h), verts[i])];
      require(y >= 0, "vertex set is not stable under the subgroup");
      act[h * N + i] = y;
      iso[h * N + i] = static_cast<uint8_t>(X.iso(e(h), verts[i]));
    }
  if (X.is_discrete()) return MonomialPoset::discrete(e.sub, X.modulus(), N, act, iso);
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j)
      if (X.leq(verts[i], verts[j])) {
        leq[i * N + j] = 1;
        beta[i * N + j] = static_cast<uint8_t>(X.beta(verts[i], verts[j]));
      }
  return MonomialPoset(e.sub, X.modulus(), N, std::move(leq), std::move(act), std::move(iso), std::move(beta));
}

// (G/U, mu-hat): cosets t_i U of the least transversal, mu-hat(h, gU, kU) = mu(k^-1 h g).
inline MonomialPoset coset_poset(const GroupPtr& Gp, int n, const Subchar& s) {
  const Group& G = *Gp;
  std::vector<Elt> T = left_transversal(G, s.U);
  int k = static_cast<int>(T.size());
  std::vector<int> coset(G.order());
  for (int i = 0; i < k; ++i)
    for (Elt u : s.U.elems) coset[G.mul(T[i], u)] = i;
  std::vector<int> act(static_cast<size_t>(G.order()) * k);
  std::vector<uint8_t> iso(act.size());
  for (Elt h = 0; h < G.order(); ++h)
    for (int i = 0; i < k; ++i) {
      Elt ht = G.mul(h, T[i]);
      int j = coset[ht];
      act[h * k + i] = j;
      iso[h * k + i] = static_cast<uint8_t>(s.val[G.mul(G.inv(T[j]), ht)]);
    }
  return MonomialPoset::discrete(Gp, n, k, std::move(act), std::move(iso));
}

// Five points a, b below c, d, e, trivial action and cocycle.
inline MonomialPoset minus_one_poset(const GroupPtr& G, int n) {
  const int N = 5;
  std::vector<char> leq(N * N, 0);
  for (int x = 0; x < N; ++x) leq[x * N + x] = 1;
  for (int lo : {0, 1})
    for (int hi : {2, 3, 4}) leq[lo * N + hi] = 1;
  std::vector<int> act(static_cast<size_t>(G->order()) * N);
  for (Elt g = 0; g < G->order(); ++g)
    for (int x = 0; x < N; ++x) act[g * N + x] = x;
  return trivial_monomial(G, n, N, std::move(leq), std::move(act));
}

// ---------------------------------------------------------------------------
// Chains

// strict up-neighbours, ascending
inline std::vector<std::vector<int>> up_lists(const MonomialPoset& X) {
  std::vector<std::vector<int>> up(X.size());
  if (X.is_discrete()) return up;
  for (int x = 0; x < X.size(); ++x)
    for (int y = 0; y < X.size(); ++y)
      if (X.lt(x, y)) up[x].push_back(y);
  return up;
}

// Calls visit(chain) for every chain x0 < ... < xn, in lexicographic order.
inline void for_each_chain(const MonomialPoset& X, const std::function<void(const std::vector<int>&)>& visit) {
  auto up = up_lists(X);
  std::vector<int> chain;
  std::function<void(int)> rec = [&](int x) {
    chain.push_back(x);
    visit(chain);
    for (int y : up[x]) rec(y);
    chain.pop_back();
  };
  for (int x = 0; x < X.size(); ++x) rec(x);
}

// All chains of n+1 elements.
inline std::vector<std::vector<int>> chains_of(const MonomialPoset& X, int n) {
  std::vector<std::vector<int>> out;
  for_each_chain(X, [&](const std::vector<int>& c) {
    if (static_cast<int>(c.size()) == n + 1) out.push_back(c);
  });
  return out;
}

// Sd_n(X) as a monomial G-set with l_n(g, x, y) = l(g, x0, y0).
struct ChainSet {
  std::vector<std::vector<int>> chains;
  MonomialPoset set;
};

inline ChainSet chains(const MonomialPoset& X, int n) {
  require(n >= 0, "chain length must be non-negative");
  std::vector<std::vector<int>> cs = chains_of(X, n);
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) index[cs[i]] = i;
  const Group& G = X.group();
  int N = static_cast<int>(cs.size());
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  std::vector<uint8_t> iso(act.size());
  std::vector<int> img(n + 1);
  for (Elt g = 0; g < G.order(); ++g)
    for (int i = 0; i < N; ++i) {
      for (int k = 0; k <= n; ++k) img[k] = X.act(g, cs[i][k]);
      act[g * N + i] = index.at(img);
      iso[g * N + i] = static_cast<uint8_t>(X.iso(g, cs[i][0]));
    }
  MonomialPoset S = MonomialPoset::discrete(X.group_ptr(), X.modulus(), N, std::move(act), std::move(iso));
  return ChainSet{std::move(cs), std::move(S)};
}

inline int height(const MonomialPoset& X) {
  int h = 0;
  for_each_chain(X, [&](const std::vector<int>& c) { h = std::max(h, static_cast<int>(c.size())); });
  return h;
}

// ---------------------------------------------------------------------------
// Fixed points and Euler characteristic

struct PlainPoset {
  int size = 0;
  std::vector<char> leq;
  bool le(int x, int y) const { return leq[static_cast<size_t>(x) * size + y] != 0; }
};

// (X, l)^{U, mu} = { x in X^U : Res l_x = mu }
inline PlainPoset fixed_subposet(const MonomialPoset& X, const Subchar& s) {
  std::vector<int> keep;
  for (int x = 0; x < X.size(); ++x) {
    bool ok = true;
    for (Elt u : s.U.elems)
      if (X.act(u, x) != x || X.iso(u, x) != s.val[u]) {
        ok = false;
        break;
      }
    if (ok) keep.push_back(x);
  }
  PlainPoset P;
  P.size = static_cast<int>(keep.size());
  P.leq.assign(static_cast<size_t>(P.size) * P.size, 0);
  for (int i = 0; i < P.size; ++i)
    for (int j = 0; j < P.size; ++j) P.leq[static_cast<size_t>(i) * P.size + j] = X.leq(keep[i], keep[j]);
  return P;
}

// Alternating chain count; the empty poset has 0.
inline long long euler_char(const PlainPoset& P) {
  // Process by number of strict lower elements, a linear extension.
  std::vector<int> below(P.size, 0), ord(P.size);
  for (int x = 0; x < P.size; ++x)
    for (int y = 0; y < P.size; ++y)
      if (x != y && P.le(y, x)) ++below[x];
  for (int i = 0; i < P.size; ++i) ord[i] = i;
  std::stable_sort(ord.begin(), ord.end(), [&](int a, int b) { return below[a] < below[b]; });
  // s(x) = sum over chains with top x of (-1)^n = 1 - sum_{y<x} s(y)
  std::vector<long long> s(P.size, 0);
  long long chi = 0;
  for (int x : ord) {
    long long v = 1;
    for (int y = 0; y < P.size; ++y)
      if (y != x && P.le(y, x)) v -= s[y];
    s[x] = v;
    chi += v;
  }
  return chi;
}

inline PlainPoset underlying(const MonomialPoset& X) {
  PlainPoset P;
  P.size = X.size();
  P.leq = materialize_leq(X);
  return P;
}

// ---------------------------------------------------------------------------
// Maps

/// Map (f, lambda): equivariant order-preserving f with natural lambda.
struct MonoMap {
  std::vector<int> f;
  std::vector<int> lam;
};

// Naturality is checked on generators (g: x -> gx and 1: x -> y); every
// transporter morphism factors through them.
inline bool is_map(const MonomialPoset& X, const MonomialPoset& Y, const MonoMap& m) {
  same_base(X, Y);
  const Group& G = X.group();
  int n = X.modulus();
  if (static_cast<int>(m.f.size()) != X.size() || static_cast<int>(m.lam.size()) != X.size()) return false;
  for (int x = 0; x < X.size(); ++x) {
    if (m.f[x] < 0 || m.f[x] >= Y.size() || m.lam[x] < 0 || m.lam[x] >= n) return false;
    for (Elt g = 0; g < G.order(); ++g) {
      int gx = X.act(g, x);
      if (m.f[gx] != Y.act(g, m.f[x])) return false;
      if (mod(Y.iso(g, m.f[x]) + m.lam[x], n) != mod(m.lam[gx] + X.iso(g, x), n)) return false;
    }
    for (int y = 0; y < X.size(); ++y)
      if (X.leq(x, y)) {
        if (!Y.leq(m.f[x], m.f[y])) return false;
        if (mod(Y.beta(m.f[x], m.f[y]) + m.lam[x], n) != mod(m.lam[y] + X.beta(x, y), n)) return false;
      }
  }
  return true;
}

// Connected components of the transporter graph (x ~ gx, x ~ y for x < y).
inline std::vector<int> transporter_components(const MonomialPoset& X, int* count = nullptr) {
  std::vector<int> comp(X.size(), -1);
  int c = 0;
  for (int s = 0; s < X.size(); ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> todo{s};
    comp[s] = c;
    for (size_t k = 0; k < todo.size(); ++k) {
      int x = todo[k];
      auto visit = [&](int y) {
        if (comp[y] < 0) {
          comp[y] = c;
          todo.push_back(y);
        }
      };
      for (Elt g = 0; g < X.group().order(); ++g) visit(X.act(g, x));
      for (int y = 0; y < X.size(); ++y)
        if (X.leq(x, y) || X.leq(y, x)) visit(y);
    }
    ++c;
  }
  if (count) *count = c;
  return comp;
}

// Given f, solves for lambda with lambda = 0 at each component root.
inline std::optional<std::vector<int>> solve_lambda(const MonomialPoset& X, const MonomialPoset& Y,
                                                    const std::vector<int>& f) {
  int n = X.modulus();
  const Group& G = X.group();
  std::vector<int> lam(X.size(), -1);
  for (int s = 0; s < X.size(); ++s) {
    if (lam[s] >= 0) continue;
    lam[s] = 0;
    std::vector<int> todo{s};
    for (size_t k = 0; k < todo.size(); ++k) {
      int x = todo[k];
      auto edge = [&](int y, int want) {
        if (lam[y] < 0) {
          lam[y] = want;
          todo.push_back(y);
          return true;
        }
        return lam[y] == want;
      };
      for (Elt g = 0; g < G.order(); ++g) {
        int gx = X.act(g, x);
        // m(g,fx,fgx) + lam_x = lam_gx + l(g,x,gx)
        if (!edge(gx, mod(Y.iso(g, f[x]) + lam[x] - X.iso(g, x), n))) return std::nullopt;
      }
      for (int y = 0; y < X.size(); ++y) {
        if (y == x) continue;
        if (X.leq(x, y) && !edge(y, mod(Y.beta(f[x], f[y]) + lam[x] - X.beta(x, y), n))) return std::nullopt;
        if (X.leq(y, x) && !edge(y, mod(lam[x] + X.beta(y, x) - Y.beta(f[y], f[x]), n))) return std::nullopt;
      }
    }
  }
  return lam;
}

namespace detail {

// Enumerates equivariant order-preserving vertex maps X -> Y that are compatible
// with vertex characters. With bijective = true only order isomorphisms.
inline void enumerate_vertex_maps(const MonomialPoset& X, const MonomialPoset& Y, bool bijective,
                                  const std::function<bool(const std::vector<int>&)>& emit) {
  const Group& G = X.group();
  std::vector<int> reps = orbit_reps(X);
  std::vector<Subchar> chx(X.size()), chy(Y.size());
  for (int r : reps) chx[r] = vertex_character(X, r);
  for (int y = 0; y < Y.size(); ++y) chy[y] = vertex_character(Y, y);
  std::vector<int> f(X.size(), -1), owner(Y.size(), -1);
  std::vector<int> assigned;
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == reps.size()) return emit(f);
    int r = reps[k];
    for (int y = 0; y < Y.size(); ++y) {
      // G_r <= G_y and m_y restricts to l_r; equality for bijections.
      if (!leq_subchar(chx[r], chy[y])) continue;
      if (bijective && chx[r].U != chy[y].U) continue;
      if (bijective && owner[y] >= 0) continue;
      std::vector<int> orb;
      bool ok = true;
      for (Elt g = 0; g < G.order() && ok; ++g) {
        int gx = X.act(g, r), gy = Y.act(g, y);
        if (f[gx] < 0) {
          if (bijective && owner[gy] >= 0) ok = false;
          else {
            f[gx] = gy;
            if (bijective) owner[gy] = gx;
            orb.push_back(gx);
          }
        } else if (f[gx] != gy) {
          ok = false;
        }
      }
      for (size_t i = 0; i < orb.size() && ok; ++i) {
        int a = orb[i];
        for (int b : assigned) {
          if (X.leq(a, b) && !Y.leq(f[a], f[b])) ok = false;
          if (X.leq(b, a) && !Y.leq(f[b], f[a])) ok = false;
          if (bijective && (X.leq(a, b) != Y.leq(f[a], f[b]) || X.leq(b, a) != Y.leq(f[b], f[a]))) ok = false;
          if (!ok) break;
        }
        for (size_t j = 0; j < orb.size() && ok; ++j) {
          int b = orb[j];
          if (X.leq(a, b) && !Y.leq(f[a], f[b])) ok = false;
          if (bijective && X.leq(a, b) != Y.leq(f[a], f[b])) ok = false;
        }
      }
      if (ok) {
        size_t mark = assigned.size();
        assigned.insert(assigned.end(), orb.begin(), orb.end());
        bool stop = rec(k + 1);
        assigned.resize(mark);
        if (stop) {
          return true;
        }
      }
      for (int x : orb) {
        if (bijective) owner[f[x]] = -1;
        f[x] = -1;
      }
    }
    return false;
  };
  rec(0);
}

}  // namespace detail

// Every map (f, lambda): X -> Y.
inline std::vector<MonoMap> enumerate_morphisms(const MonomialPoset& X, const MonomialPoset& Y) {
  same_base(X, Y);
  int n = X.modulus(), ncomp = 0;
  std::vector<int> comp = transporter_components(X, &ncomp);
  std::vector<MonoMap> out;
  detail::enumerate_vertex_maps(X, Y, false, [&](const std::vector<int>& f) {
    auto base = solve_lambda(X, Y, f);
    if (!base) return false;
    std::vector<int> shift(ncomp, 0);
    while (true) {
      MonoMap m{f, *base};
      for (int x = 0; x < X.size(); ++x) m.lam[x] = mod(m.lam[x] + shift[comp[x]], n);
      out.push_back(std::move(m));
      int i = 0;
      while (i < ncomp && ++shift[i] == n) shift[i++] = 0;
      if (i == ncomp) break;
    }
    return false;
  });
  return out;
}

inline long long count_morphisms(const MonomialPoset& X, const MonomialPoset& Y) {
  same_base(X, Y);
  int ncomp = 0;
  transporter_components(X, &ncomp);
  long long per = 1;
  for (int i = 0; i < ncomp; ++i) per *= X.modulus();
  long long total = 0;
  detail::enumerate_vertex_maps(X, Y, false, [&](const std::vector<int>& f) {
    if (solve_lambda(X, Y, f)) total += per;
    return false;
  });
  return total;
}

// An isomorphism X -> Y if one exists.
inline std::optional<MonoMap> find_isomorphism(const MonomialPoset& X, const MonomialPoset& Y) {
  if (X.modulus() != Y.modulus() || X.size() != Y.size() || X.group().order() != Y.group().order()) return std::nullopt;
  same_base(X, Y);
  // cheap invariant: multiset of (stabilizer, character, up and down degrees)
  auto sig = [](const MonomialPoset& P) {
    std::vector<std::pair<std::vector<int>, std::pair<int, int>>> s;
    for (int x = 0; x < P.size(); ++x) {
      Subchar c = vertex_character(P, x);
      std::vector<int> key = c.U.elems;
      for (Elt u : c.U.elems) key.push_back(c.val[u]);
      int up = 0, down = 0;
      for (int y = 0; y < P.size(); ++y) {
        up += P.lt(x, y);
        down += P.lt(y, x);
      }
      s.push_back({key, {up, down}});
    }
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sig(X) != sig(Y)) return std::nullopt;
  std::optional<MonoMap> found;
  detail::enumerate_vertex_maps(X, Y, true, [&](const std::vector<int>& f) {
    auto lam = solve_lambda(X, Y, f);
    if (!lam) return false;
    found = MonoMap{f, *lam};
    return true;
  });
  return found;
}

inline bool isomorphic(const MonomialPoset& X, const MonomialPoset& Y) { return find_isomorphism(X, Y).has_value(); }

// X *_{f,lambda} Y: X below Y along f; cross cocycle m(g, f(z), z') + lambda_z.
inline MonomialPoset join(const MonomialPoset& X, const MonomialPoset& Y, const MonoMap& m) {
  require(is_map(X, Y, m), "join needs a valid map");
  const Group& G = X.group();
  int a = X.size(), b = Y.size(), N = a + b, n = X.modulus();
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  std::vector<uint8_t> iso(act.size());
  for (Elt g = 0; g < G.order(); ++g) {
    for (int x = 0; x < a; ++x) {
      act[g * N + x] = X.act(g, x);
      iso[g * N + x] = static_cast<uint8_t>(X.iso(g, x));
    }
    for (int y = 0; y < b; ++y) {
      act[g * N + a + y] = a + Y.act(g, y);
      iso[g * N + a + y] = static_cast<uint8_t>(Y.iso(g, y));
    }
  }
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  std::vector<uint8_t> beta(leq.size(), 0);
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < a; ++y)
      if (X.leq(x, y)) {
        leq[x * N + y] = 1;
        beta[x * N + y] = static_cast<uint8_t>(X.beta(x, y));
      }
  for (int x = 0; x < b; ++x)
    for (int y = 0; y < b; ++y)
      if (Y.leq(x, y)) {
        leq[(a + x) * N + a + y] = 1;
        beta[(a + x) * N + a + y] = static_cast<uint8_t>(Y.beta(x, y));
      }
  for (int x = 0; x < a; ++x)
    for (int y = 0; y < b; ++y)
      if (Y.leq(m.f[x], y)) {
        leq[x * N + a + y] = 1;
        beta[x * N + a + y] = static_cast<uint8_t>(mod(Y.beta(m.f[x], y) + m.lam[x], n));
      }
  return MonomialPoset(X.group_ptr(), n, N, std::move(leq), std::move(act), std::move(iso), std::move(beta));
}

inline Embedding stabilizer_embedding(const MonomialPoset& X, int x) {
  return subgroup_embedding(X.group_ptr(), stabilizer(X, x), X.group().name() + "_stab" + std::to_string(x));
}

// ]x, .[ and ]., x[ as G_x-posets with the restricted cocycle.
inline MonomialPoset up_interval(const Embedding& Gx, const MonomialPoset& X, int x) {
  std::vector<int> v;
  for (int y = 0; y < X.size(); ++y)
    if (X.lt(x, y)) v.push_back(y);
  return subposet(Gx, X, v);
}

inline MonomialPoset down_interval(const Embedding& Gx, const MonomialPoset& X, int x) {
  std::vector<int> v;
  for (int y = 0; y < X.size(); ++y)
    if (X.lt(y, x)) v.push_back(y);
  return subposet(Gx, X, v);
}

// f^y = {x : f(x) <= y} and f_y = {x : f(x) >= y} as G_y-posets, restricted cocycle.
inline MonomialPoset fiber_below(const Embedding& Gy, const MonomialPoset& X, const MonomialPoset& Y,
                                 const MonoMap& m, int y) {
  std::vector<int> v;
  for (int x = 0; x < X.size(); ++x)
    if (Y.leq(m.f[x], y)) v.push_back(x);
  return subposet(Gy, X, v);
}

inline MonomialPoset fiber_above(const Embedding& Gy, const MonomialPoset& X, const MonomialPoset& Y,
                                 const MonoMap& m, int y) {
  std::vector<int> v;
  for (int x = 0; x < X.size(); ++x)
    if (Y.leq(y, m.f[x])) v.push_back(x);
  return subposet(Gy, X, v);
}

inline MonoMap identity_map(const MonomialPoset& X) {
  MonoMap m{std::vector<int>(X.size()), std::vector<int>(X.size(), 0)};
  for (int x = 0; x < X.size(); ++x) m.f[x] = x;
  return m;
}

}  // namespace monoburn
