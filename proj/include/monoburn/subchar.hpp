#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "group.hpp"

namespace monoburn {

/// A pair (U, mu) with mu: U -> Z/n. Values are indexed by parent element and
/// are zero off U.
struct Subchar {
  Subgroup U;
  std::vector<int> val;

  int operator()(Elt u) const { return val[u]; }

  std::vector<int> values_on_members() const {
    std::vector<int> v;
    v.reserve(U.elems.size());
    for (Elt u : U.elems) v.push_back(val[u]);
    return v;
  }

  // Canonical key order: subgroup, then value vector on the sorted members.
  friend bool operator<(const Subchar& a, const Subchar& b) {
    if (a.U != b.U) return a.U < b.U;
    return a.values_on_members() < b.values_on_members();
  }
  friend bool operator==(const Subchar& a, const Subchar& b) {
    return a.U == b.U && a.values_on_members() == b.values_on_members();
  }
  friend bool operator!=(const Subchar& a, const Subchar& b) { return !(a == b); }
};

inline Subchar trivial_subchar(const Subgroup& U) { return Subchar{U, std::vector<int>(U.mask.size(), 0)}; }

inline bool is_homomorphism(const Group& G, const Subchar& s, int n) {
  for (Elt a : s.U.elems) {
    if (s.val[a] < 0 || s.val[a] >= n) return false;
    for (Elt b : s.U.elems)
      if (s.val[G.mul(a, b)] != mod(s.val[a] + s.val[b], n)) return false;
  }
  return true;
}

// All homomorphisms U -> Z/n, sorted by value vector on the members.
inline std::vector<Subchar> all_characters(const Group& G, const Subgroup& U, int n) {
  require(n >= 1, "modulus must be positive");
  // Greedy generating set.
  std::vector<Elt> gens;
  Subgroup span = trivial_subgroup(G);
  for (Elt u : U.elems)
    if (!span.contains(u)) {
      gens.push_back(u);
      span = generate(G, gens);
    }
  std::vector<Subchar> out;
  std::vector<int> choice(gens.size(), 0);
  while (true) {
    // Extend along words: val(x s) = val(x) + val(s).
    std::vector<int> val(G.order(), 0);
    std::vector<char> set(G.order(), 0);
    std::vector<Elt> todo{G.identity()};
    set[G.identity()] = 1;
    bool ok = true;
    for (size_t k = 0; k < todo.size() && ok; ++k)
      for (size_t i = 0; i < gens.size(); ++i) {
        Elt y = G.mul(todo[k], gens[i]);
        int v = mod(val[todo[k]] + choice[i], n);
        if (!set[y]) {
          set[y] = 1;
          val[y] = v;
          todo.push_back(y);
        } else if (val[y] != v) {
          ok = false;
          break;
        }
      }
    Subchar s{U, val};
    if (ok && is_homomorphism(G, s, n)) out.push_back(std::move(s));
    size_t i = 0;
    while (i < choice.size() && ++choice[i] == n) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Subchar restrict_character(const Subchar& s, const Subgroup& W) {
  require(is_subset(W, s.U), "restriction target is not a subgroup of the domain");
  Subchar r{W, std::vector<int>(s.val.size(), 0)};
  for (Elt w : W.elems) r.val[w] = s.val[w];
  return r;
}

// g(U, mu) = (gUg^-1, x -> mu(g^-1 x g))
inline Subchar conj_subchar(const Group& G, Elt g, const Subchar& s) {
  Subchar r{conjugate(G, g, s.U), std::vector<int>(s.val.size(), 0)};
  for (Elt u : s.U.elems) r.val[G.conj(g, u)] = s.val[u];
  return r;
}

inline bool leq_subchar(const Subchar& a, const Subchar& b) {
  require(a.U.parent_order() == b.U.parent_order(), "subcharacters of different groups");
  if (!is_subset(a.U, b.U)) return false;
  for (Elt u : a.U.elems)
    if (a.val[u] != b.val[u]) return false;
  return true;
}

/// ch(G) up to conjugacy for C = Z/n, with basis products and marks.
class SubcharTable {
 public:
  SubcharTable(GroupPtr G, int n) : G_(std::move(G)), n_(n) {
    require(n_ >= 1, "modulus must be positive");
    const Group& g = *G_;
    subs_ = all_subgroups(g);
    int S = static_cast<int>(subs_.size());
    for (int s = 0; s < S; ++s) sub_index_[subs_[s].elems] = s;
    conj_sub_.resize(static_cast<size_t>(g.order()) * S);
    for (Elt x = 0; x < g.order(); ++x)
      for (int s = 0; s < S; ++s) conj_sub_[x * S + s] = sub_index_.at(conjugate(g, x, subs_[s]).elems);
    offset_.resize(S + 1, 0);
    chars_.resize(S);
    char_index_.resize(S);
    for (int s = 0; s < S; ++s) {
      chars_[s] = all_characters(g, subs_[s], n_);
      for (int c = 0; c < static_cast<int>(chars_[s].size()); ++c)
        char_index_[s][chars_[s][c].values_on_members()] = c;
      offset_[s + 1] = offset_[s] + static_cast<int>(chars_[s].size());
    }
    int total = offset_[S];
    class_of_id_.assign(total, -1);
    // Ids run in canonical key order, so the first unvisited id is the class minimum.
    for (int id = 0; id < total; ++id) {
      if (class_of_id_[id] >= 0) continue;
      int cls = static_cast<int>(class_ids_.size());
      class_ids_.push_back(id);
      std::vector<char> nmask(g.order(), 0);
      for (Elt x = 0; x < g.order(); ++x) {
        int j = conj_id(x, id);
        ensure(class_of_id_[j] < 0 || class_of_id_[j] == cls, "conjugacy classes overlap");
        class_of_id_[j] = cls;
        if (j == id) nmask[x] = 1;
      }
      normalizers_.push_back(subgroup_from_mask(std::move(nmask)));
    }
    int k = num_classes();
    prod_.resize(static_cast<size_t>(k) * k);
    prod_done_.assign(static_cast<size_t>(k) * k, 0);
    build_marks();
  }

  const Group& group() const { return *G_; }
  const GroupPtr& group_ptr() const { return G_; }
  int modulus() const { return n_; }
  int num_classes() const { return static_cast<int>(class_ids_.size()); }

  const Subchar& rep(int cls) const { return subchar_of_id(class_ids_.at(cls)); }
  const Subgroup& normalizer(int cls) const { return normalizers_.at(cls); }
  int class_size(int cls) const { return G_->order() / normalizers_.at(cls).size(); }

  const std::vector<Subgroup>& subgroups() const { return subs_; }
  int subgroup_index(const Subgroup& U) const {
    auto it = sub_index_.find(U.elems);
    require(it != sub_index_.end(), "not a subgroup of " + G_->name());
    return it->second;
  }
  const std::vector<Subchar>& characters(int sub) const { return chars_.at(sub); }
  int num_subchars() const { return offset_.back(); }
  const Subchar& subchar_of_id(int id) const {
    int s = static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), id) - offset_.begin()) - 1;
    return chars_[s][id - offset_[s]];
  }

  int id_of(const Subchar& x) const {
    require(static_cast<int>(x.val.size()) == G_->order(), "subcharacter of a different group");
    int s = subgroup_index(x.U);
    auto it = char_index_[s].find(x.values_on_members());
    require(it != char_index_[s].end(), "values do not form a character into Z/" + std::to_string(n_));
    return offset_[s] + it->second;
  }

  int class_of(const Subchar& x) const { return class_of_id_[id_of(x)]; }
  int class_of_id(int id) const { return class_of_id_[id]; }

  int conj_id(Elt g, int id) const {
    const Group& G = *G_;
    int S = static_cast<int>(subs_.size());
    int s = static_cast<int>(std::upper_bound(offset_.begin(), offset_.end(), id) - offset_.begin()) - 1;
    int t = conj_sub_[g * S + s];
    const Subchar& mu = chars_[s][id - offset_[s]];
    std::vector<int> v;
    v.reserve(subs_[t].elems.size());
    for (Elt x : subs_[t].elems) v.push_back(mu.val[G.conj(G.inv(g), x)]);
    return offset_[t] + char_index_[t].at(v);
  }

  // [U,mu][V,nu] = sum over UgV of [U cap gV, Res mu + Res g(nu)], as (class, coeff) pairs.
  const std::vector<std::pair<int, long long>>& basis_product(int i, int j) const {
    size_t k = static_cast<size_t>(i) * num_classes() + j;
    std::lock_guard<std::mutex> lock(mu_);
    if (!prod_done_[k]) {
      const Group& G = *G_;
      const Subchar& a = rep(i);
      const Subchar& b = rep(j);
      std::map<int, long long> acc;
      for (Elt g : double_cosets(G, a.U, b.U)) {
        Subchar gb = conj_subchar(G, g, b);
        Subgroup W = intersect(a.U, gb.U);
        Subchar w{W, std::vector<int>(G.order(), 0)};
        for (Elt x : W.elems) w.val[x] = mod(a.val[x] + gb.val[x], n_);
        acc[class_of(w)] += 1;
      }
      prod_[k].assign(acc.begin(), acc.end());
      prod_done_[k] = 1;
    }
    return prod_[k];
  }

  // mark of basis class j at class i: #{gV : (U,mu) <= g(V,nu)}
  long long mark(int i, int j) const { return marks_[static_cast<size_t>(i) * num_classes() + j]; }

  std::string describe(int cls) const {
    const Subchar& s = rep(cls);
    std::string out = "[|U|=" + std::to_string(s.U.size()) + " {";
    for (size_t i = 0; i < s.U.elems.size(); ++i) out += (i ? "," : "") + std::to_string(s.U.elems[i]);
    out += "} mu=(";
    for (size_t i = 0; i < s.U.elems.size(); ++i) out += (i ? "," : "") + std::to_string(s.val[s.U.elems[i]]);
    return out + ")]";
  }

 private:
  void build_marks() {
    const Group& G = *G_;
    int k = num_classes();
    marks_.assign(static_cast<size_t>(k) * k, 0);
    for (int j = 0; j < k; ++j) {
      const Subchar& b = rep(j);
      for (Elt t : left_transversal(G, b.U)) {
        Subchar tb = conj_subchar(G, t, b);
        for (int i = 0; i < k; ++i)
          if (leq_subchar(rep(i), tb)) ++marks_[static_cast<size_t>(i) * k + j];
      }
    }
  }

  GroupPtr G_;
  int n_;
  std::vector<Subgroup> subs_;
  std::map<std::vector<Elt>, int> sub_index_;
  std::vector<int> conj_sub_;
  std::vector<std::vector<Subchar>> chars_;
  std::vector<std::map<std::vector<int>, int>> char_index_;
  std::vector<int> offset_;
  std::vector<int> class_of_id_;
  std::vector<int> class_ids_;
  std::vector<Subgroup> normalizers_;
  std::vector<long long> marks_;

  mutable std::mutex mu_;
  mutable std::vector<std::vector<std::pair<int, long long>>> prod_;
  mutable std::vector<char> prod_done_;
};

using TablePtr = std::shared_ptr<const SubcharTable>;

inline TablePtr make_table(GroupPtr G, int n) { return std::make_shared<const SubcharTable>(std::move(G), n); }

}  // namespace monoburn
