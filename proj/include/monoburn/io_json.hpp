#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "burnside.hpp"
#include "catalog.hpp"
#include "lefschetz.hpp"
#include "monomial_poset.hpp"
#include "tensor_induction.hpp"

namespace monoburn {

using Json = nlohmann::json;

inline Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::exception& e) {
    throw InputError(path + ": malformed JSON: " + e.what());
  }
}

namespace detail {

inline int get_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

inline bool get_bool(const Json& j) {
  if (j.is_boolean()) return j.get<bool>();
  if (j.is_number_integer()) return j.get<int>() != 0;
  throw InputError("order entries must be booleans or 0/1");
}

}  // namespace detail

// A catalog name, a generator spec or an explicit table.
inline GroupPtr group_from_json(const Json& j, int cap = Group::kDefaultCap) {
  if (j.is_string()) return catalog_group(j.get<std::string>());
  if (!j.is_object()) throw InputError("group spec must be a name or an object");
  std::string name = j.value("name", std::string("G"));
  if (j.contains("table")) {
    std::vector<std::vector<Elt>> t;
    for (const auto& row : j.at("table")) {
      std::vector<Elt> r;
      for (const auto& v : row) r.push_back(detail::get_int(v, "table entry"));
      t.push_back(std::move(r));
    }
    if (static_cast<int>(t.size()) > cap) throw InputError("group exceeds cap of " + std::to_string(cap));
    return make_group(Group(name, t));
  }
  if (!j.contains("generators")) throw InputError("group spec needs 'generators' or 'table'");
  int degree = detail::get_int(j.at("degree"), "degree");
  std::vector<std::vector<int>> gens;
  for (const auto& g : j.at("generators")) {
    std::vector<int> p;
    for (const auto& v : g) p.push_back(detail::get_int(v, "generator entry"));
    gens.push_back(std::move(p));
  }
  return make_group(Group::from_permutations(name, degree, gens, cap));
}

inline GroupPtr group_from_ref(const std::string& ref, int cap = Group::kDefaultCap) {
  if (in_catalog(ref)) return catalog_group(ref);
  return group_from_json(read_json_file(ref), cap);
}

inline Json group_to_json(const Group& G) {
  Json j = {{"name", G.name()}, {"order", G.order()}, {"table", G.table()}};
  if (!G.permutations().empty()) j["elements"] = G.permutations();
  return j;
}

inline Subchar subchar_from_json(const Group& G, int n, const Json& j) {
  std::vector<Elt> elems;
  for (const auto& v : j.at("subgroup")) elems.push_back(detail::get_int(v, "subgroup element"));
  std::sort(elems.begin(), elems.end());
  Subchar s{make_subgroup(G, elems), std::vector<int>(G.order(), 0)};
  if (j.contains("values"))
    for (const auto& [k, v] : j.at("values").items()) {
      int g;
      try {
        g = std::stoi(k);
      } catch (const std::exception&) {
        throw InputError("character key '" + k + "' is not an element index");
      }
      if (g < 0 || g >= G.order() || !s.U.contains(g)) throw InputError("character value outside the subgroup");
      s.val[g] = mod(detail::get_int(v, "character value"), n);
    }
  if (!is_homomorphism(G, s, n)) throw InputError("values do not form a character into Z/" + std::to_string(n));
  return s;
}

inline Json subchar_to_json(const Subchar& s) {
  Json vals = Json::object();
  for (Elt u : s.U.elems) vals[std::to_string(u)] = s.val[u];
  return {{"subgroup", s.U.elems}, {"values", vals}};
}

inline Element element_from_json(const TablePtr& t, const Json& j) {
  if (!j.is_array()) throw InputError("element must be an array of terms");
  Element e(t);
  for (const auto& term : j) e.add(t->class_of(subchar_from_json(t->group(), t->modulus(), term)),
                                   term.contains("coeff") ? detail::get_int(term.at("coeff"), "coeff") : 1);
  return e;
}

inline Json element_to_json(const Element& a) {
  Json out = Json::array();
  for (auto [cls, c] : a.terms()) {
    Json term = subchar_to_json(a.table()->rep(cls));
    term["class"] = cls;
    term["coeff"] = c;
    out.push_back(term);
  }
  return out;
}

// {"vertices", "leq", "action": [[per g]], "cocycle": [...] | "trivial"}
inline MonomialPoset poset_from_json(const GroupPtr& Gp, int n, const Json& j) {
  const Group& G = *Gp;
  int N = detail::get_int(j.at("vertices"), "vertices");
  if (N < 0) throw InputError("negative vertex count");
  std::vector<char> leq(static_cast<size_t>(N) * N, 0);
  if (j.contains("leq")) {
    const Json& L = j.at("leq");
    if (!L.is_array() || static_cast<int>(L.size()) != N) throw InputError("leq must be a vertices x vertices matrix");
    for (int x = 0; x < N; ++x) {
      if (!L[x].is_array() || static_cast<int>(L[x].size()) != N) throw InputError("leq must be square");
      for (int y = 0; y < N; ++y) leq[static_cast<size_t>(x) * N + y] = detail::get_bool(L[x][y]);
    }
  } else {
    for (int x = 0; x < N; ++x) leq[static_cast<size_t>(x) * N + x] = 1;
  }
  std::vector<int> act(static_cast<size_t>(G.order()) * N);
  if (j.contains("action")) {
    const Json& A = j.at("action");
    if (!A.is_array() || static_cast<int>(A.size()) != G.order())
      throw InputError("action needs one row per group element");
    for (Elt g = 0; g < G.order(); ++g) {
      if (!A[g].is_array() || static_cast<int>(A[g].size()) != N) throw InputError("action row has wrong length");
      for (int x = 0; x < N; ++x) act[static_cast<size_t>(g) * N + x] = detail::get_int(A[g][x], "action entry");
    }
  } else {
    for (Elt g = 0; g < G.order(); ++g)
      for (int x = 0; x < N; ++x) act[static_cast<size_t>(g) * N + x] = x;
  }
  for (int v : act)
    if (v < 0 || v >= N) throw InputError("action entry out of range");
  auto adm = [&](Elt g, int x, int y) { return leq[static_cast<size_t>(act[static_cast<size_t>(g) * N + x]) * N + y] != 0; };
  const Json& C = j.contains("cocycle") ? j.at("cocycle") : Json("trivial");
  MonomialPoset X = MonomialPoset::empty(Gp, n);
  if (C.is_string()) {
    if (C.get<std::string>() != "trivial") throw InputError("cocycle must be a list or \"trivial\"");
    X = trivial_monomial(Gp, n, N, leq, act);
  } else {
    std::vector<int> table(static_cast<size_t>(G.order()) * N * N, -1);
    for (const auto& e : C) {
      int g = detail::get_int(e.at("g"), "g"), x = detail::get_int(e.at("x"), "x"), y = detail::get_int(e.at("y"), "y");
      if (g < 0 || g >= G.order() || x < 0 || x >= N || y < 0 || y >= N) throw InputError("cocycle entry out of range");
      if (!adm(g, x, y)) throw InputError("cocycle entry outside the domain gx <= y");
      table[(static_cast<size_t>(g) * N + x) * N + y] = mod(detail::get_int(e.at("c"), "c"), n);
    }
    if (auto v = check_cocycle_table(G, n, N, leq, act, table))
      throw InputError("invalid cocycle (" + v->what + ") at g=" + std::to_string(v->g) + " h=" + std::to_string(v->h) +
                       " x=" + std::to_string(v->x) + " y=" + std::to_string(v->y) + " z=" + std::to_string(v->z));
    X = MonomialPoset::from_cocycle(Gp, n, N, leq, act, [&](Elt g, int x, int y) {
      return table[(static_cast<size_t>(g) * N + x) * N + y];
    });
  }
  X.validate();
  bool diagonal = true;
  for (int x = 0; x < N; ++x)
    for (int y = 0; y < N; ++y) diagonal = diagonal && (x == y) == X.leq(x, y);
  if (diagonal && !X.is_discrete()) {
    std::vector<uint8_t> iso(act.size());
    for (Elt g = 0; g < G.order(); ++g)
      for (int x = 0; x < N; ++x) iso[static_cast<size_t>(g) * N + x] = static_cast<uint8_t>(X.iso(g, x));
    return MonomialPoset::discrete(Gp, n, N, act, std::move(iso));
  }
  return X;
}

inline Json poset_to_json(const MonomialPoset& X) {
  const Group& G = X.group();
  int N = X.size();
  Json leq = Json::array(), action = Json::array(), coc = Json::array();
  for (int x = 0; x < N; ++x) {
    Json row = Json::array();
    for (int y = 0; y < N; ++y) row.push_back(X.leq(x, y));
    leq.push_back(row);
  }
  for (Elt g = 0; g < G.order(); ++g) {
    Json row = Json::array();
    for (int x = 0; x < N; ++x) row.push_back(X.act(g, x));
    action.push_back(row);
  }
  bool trivial = true;
  for (Elt g = 0; g < G.order(); ++g)
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        if (X.admissible(g, x, y)) {
          int c = X.coc(g, x, y);
          trivial = trivial && c == 0;
          coc.push_back({{"g", g}, {"x", x}, {"y", y}, {"c", c}});
        }
  return {{"vertices", N}, {"leq", leq}, {"action", action}, {"cocycle", trivial ? Json("trivial") : coc}};
}

inline Biset biset_from_json(const Json& j, int n, int cap = Group::kDefaultCap) {
  if (!j.contains("left") || !j.contains("right")) throw InputError("biset needs 'left' and 'right' groups");
  GroupPtr G = group_from_json(j.at("left"), cap), H = group_from_json(j.at("right"), cap);
  GroupPtr P = product_group(G, H);
  MonomialPoset S = poset_from_json(P, n, j);
  return make_biset(G, H, std::move(S));
}

inline Json lefschetz_report_to_json(const LefschetzReport& r) {
  Json tallies = Json::array();
  for (const auto& t : r.tallies) tallies.push_back({{"n", t.n}, {"chains", t.chains}, {"orbits", t.orbits}});
  Json coeffs = Json::array();
  const TablePtr& t = r.element.table();
  for (int i = 0; i < t->num_classes(); ++i) {
    if (r.m[i] == 0 && r.gamma[i] == 0) continue;
    Json c = subchar_to_json(t->rep(i));
    c["class"] = i;
    c["m"] = r.m[i];
    c["gamma"] = r.gamma[i];
    coeffs.push_back(c);
  }
  return {{"element", element_to_json(r.element)},
          {"routes_agree", r.routes_agree},
          {"chains", tallies},
          {"coefficients", coeffs}};
}

}  // namespace monoburn
