#pragma once

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subchar.hpp"

namespace monoburn {

/// Element of B_C(G): sparse integer combination of subcharacter classes.
class Element {
 public:
  explicit Element(TablePtr t) : t_(std::move(t)) { require(t_ != nullptr, "element needs a table"); }

  static Element basis(TablePtr t, int cls, long long c = 1) {
    require(cls >= 0 && cls < t->num_classes(), "class index out of range");
    Element e(std::move(t));
    e.add(cls, c);
    return e;
  }
  static Element of(TablePtr t, const Subchar& s, long long c = 1) {
    int cls = t->class_of(s);
    return basis(std::move(t), cls, c);
  }
  // [G, 1]
  static Element one(TablePtr t) {
    const Group& G = t->group();
    Subchar s = trivial_subchar(whole_group(G));
    return of(std::move(t), s);
  }

  const TablePtr& table() const { return t_; }
  const std::map<int, long long>& terms() const { return c_; }
  long long coeff(int cls) const {
    auto it = c_.find(cls);
    return it == c_.end() ? 0 : it->second;
  }
  bool is_zero() const { return c_.empty(); }

  void add(int cls, long long c) {
    if (c == 0) return;
    long long& slot = c_[cls];
    slot += c;
    if (slot == 0) c_.erase(cls);
  }

  Element& operator+=(const Element& o) {
    same(o);
    for (auto [k, v] : o.c_) add(k, v);
    return *this;
  }
  Element& operator-=(const Element& o) {
    same(o);
    for (auto [k, v] : o.c_) add(k, -v);
    return *this;
  }
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator-(const Element& a) {
    Element r(a.t_);
    for (auto [k, v] : a.c_) r.add(k, -v);
    return r;
  }
  friend Element operator*(long long s, const Element& a) {
    Element r(a.t_);
    for (auto [k, v] : a.c_) r.add(k, s * v);
    return r;
  }
  friend Element operator*(const Element& a, const Element& b) {
    a.same(b);
    Element r(a.t_);
    for (auto [i, x] : a.c_)
      for (auto [j, y] : b.c_)
        for (auto [k, z] : a.t_->basis_product(i, j)) r.add(k, x * y * z);
    return r;
  }
  friend bool operator==(const Element& a, const Element& b) { return a.t_ == b.t_ && a.c_ == b.c_; }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

  std::string str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto [k, v] : c_) {
      if (!first) os << (v < 0 ? " - " : " + ");
      else if (v < 0) os << "-";
      long long a = v < 0 ? -v : v;
      if (a != 1) os << a << "*";
      os << "c" << k;
      first = false;
    }
    return os.str();
  }

 private:
  void same(const Element& o) const { require(t_ == o.t_, "elements from different tables"); }

  TablePtr t_;
  std::map<int, long long> c_;
};

inline long long mark(const Element& a, int at_cls) {
  long long s = 0;
  for (auto [j, v] : a.terms()) s += v * a.table()->mark(at_cls, j);
  return s;
}

inline long long mark(const Element& a, const Subchar& at) { return mark(a, a.table()->class_of(at)); }

inline std::vector<long long> mark_vector(const Element& a) {
  std::vector<long long> v(a.table()->num_classes());
  for (int i = 0; i < static_cast<int>(v.size()); ++i) v[i] = mark(a, i);
  return v;
}

inline std::vector<std::vector<long long>> mark_matrix(const SubcharTable& t) {
  int k = t.num_classes();
  std::vector<std::vector<long long>> m(k, std::vector<long long>(k));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) m[i][j] = t.mark(i, j);
  return m;
}

// Back-substitution through the triangular mark matrix. Throws when the
// vector is not the ghost of an integral element.
inline Element from_marks(const TablePtr& t, const std::vector<long long>& v) {
  int k = t->num_classes();
  require(static_cast<int>(v.size()) == k, "mark vector has wrong length");
  std::vector<long long> c(k, 0);
  for (int i = k - 1; i >= 0; --i) {
    long long r = v[i];
    for (int j = i + 1; j < k; ++j) r -= t->mark(i, j) * c[j];
    long long d = t->mark(i, i);
    require(r % d == 0, "mark vector is not integral");
    c[i] = r / d;
  }
  Element e(t);
  for (int i = 0; i < k; ++i) e.add(i, c[i]);
  return e;
}

// Marks at (U, .) multiply by convolution over Hom(U, C):
//   mark_(U,mu)(ab) = sum over mu1 + mu2 = mu of mark_(U,mu1)(a) mark_(U,mu2)(b).
// Pointwise multiplication only holds when U has no nontrivial character.
inline std::vector<long long> mark_product(const TablePtr& t, const std::vector<long long>& ma,
                                           const std::vector<long long>& mb) {
  int k = t->num_classes();
  require(static_cast<int>(ma.size()) == k && static_cast<int>(mb.size()) == k, "mark vector has wrong length");
  int n = t->modulus();
  std::vector<long long> out(k, 0);
  for (int i = 0; i < k; ++i) {
    const Subchar& s = t->rep(i);
    for (const Subchar& m1 : t->characters(t->subgroup_index(s.U))) {
      Subchar m2 = s;
      for (Elt u : s.U.elems) m2.val[u] = mod(s.val[u] - m1.val[u], n);
      out[i] += ma[t->class_of(m1)] * mb[t->class_of(m2)];
    }
  }
  return out;
}

namespace detail {

struct Frac {
  __int128 p = 0, q = 1;
};

inline __int128 gcd128(__int128 a, __int128 b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    __int128 r = a % b;
    a = b;
    b = r;
  }
  return a;
}

inline Frac reduce(__int128 p, __int128 q) {
  if (q < 0) p = -p, q = -q;
  __int128 g = gcd128(p, q);
  if (g > 1) p /= g, q /= g;
  return {p, q};
}

}  // namespace detail

// Multiplicative inverse, if it lies in B_C(G): solve a * x = [G, 1] exactly over Q.
inline std::optional<Element> inverse(const Element& a) {
  using detail::Frac;
  const TablePtr& t = a.table();
  int k = t->num_classes();
  std::vector<std::vector<Frac>> M(k, std::vector<Frac>(k + 1));
  for (int j = 0; j < k; ++j) {
    Element col = a * Element::basis(t, j);
    for (auto [r, c] : col.terms()) M[r][j] = {c, 1};
  }
  M[Element::one(t).terms().begin()->first][k] = {1, 1};
  for (int c = 0, r = 0; c < k; ++c, ++r) {
    int piv = r;
    while (piv < k && M[piv][c].p == 0) ++piv;
    if (piv == k) return std::nullopt;  // singular: a is a zero divisor
    std::swap(M[piv], M[r]);
    Frac d = M[r][c];
    for (auto& x : M[r]) x = detail::reduce(x.p * d.q, x.q * d.p);
    for (int o = 0; o < k; ++o) {
      if (o == r || M[o][c].p == 0) continue;
      Frac f = M[o][c];
      for (int j = c; j <= k; ++j)
        M[o][j] = detail::reduce(M[o][j].p * f.q * M[r][j].q - f.p * M[r][j].p * M[o][j].q, M[o][j].q * f.q * M[r][j].q);
    }
  }
  Element inv(t);
  for (int i = 0; i < k; ++i) {
    if (M[i][k].q != 1) return std::nullopt;
    inv.add(i, static_cast<long long>(M[i][k].p));
  }
  ensure(a * inv == Element::one(t), "inverse check failed");
  return inv;
}

inline bool is_unit(const Element& a) { return inverse(a).has_value(); }

// For n in {1, 2, 3, 4, 6} every unit of Z[Hom(U, C)] is +-delta_chi, so the marks of a unit
// at U are +-1 at one character chi and 0 elsewhere. Enumerate those patterns, keep the
// integral ones whose coefficients lie in [-bound, bound] and verify the inverse.
inline std::vector<Element> find_units(const TablePtr& t, long long bound) {
  require(bound >= 1, "bound must be at least 1");
  int n = t->modulus();
  require(n == 1 || n == 2 || n == 3 || n == 4 || n == 6, "unit search needs n in {1, 2, 3, 4, 6}");
  int k = t->num_classes();
  // classes grouped by subgroup class; a class is usable if its character is fixed by N_G(U)
  std::map<std::vector<Elt>, std::vector<int>> by_sub;
  for (int i = 0; i < k; ++i) {
    const Subchar& s = t->rep(i);
    bool fixed = true;
    for (Elt g : t->normalizer(i).elems) fixed = fixed && conj_subchar(t->group(), g, s) == s;
    by_sub[s.U.elems];  // the subgroup class must appear even without usable characters
    if (fixed) by_sub[s.U.elems].push_back(i);
  }
  std::vector<std::vector<int>> groups;
  double combos = 1;
  for (auto& [U, cls] : by_sub) {
    if (cls.empty()) return {};
    groups.push_back(cls);
    combos *= 2.0 * cls.size();
  }
  require(combos <= 5e6, "too many mark patterns for unit search");
  std::vector<Element> out;
  std::vector<size_t> pick(groups.size(), 0);
  std::vector<int> sign(groups.size(), 1);
  std::function<void(size_t)> rec = [&](size_t g) {
    if (g == groups.size()) {
      std::vector<long long> v(k, 0);
      for (size_t i = 0; i < groups.size(); ++i) v[groups[i][pick[i]]] = sign[i];
      Element e(t);
      try {
        e = from_marks(t, v);
      } catch (const InputError&) {
        return;
      }
      for (auto [cls, c] : e.terms())
        if (c < -bound || c > bound) return;
      if (is_unit(e)) out.push_back(e);
      return;
    }
    for (size_t p = 0; p < groups[g].size(); ++p)
      for (int sg : {1, -1}) {
        pick[g] = p;
        sign[g] = sg;
        rec(g + 1);
      }
  };
  rec(0);
  return out;
}

}  // namespace monoburn
