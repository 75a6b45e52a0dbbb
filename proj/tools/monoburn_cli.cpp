// Command line front end. Exit codes: 0 success, 1 verification failure, 2 input error.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "monoburn/fibred.hpp"
#include "monoburn/io_json.hpp"

using namespace monoburn;

namespace {

struct Caps {
  int group = 48;
  int vertices = 10;
  int biset = 16;
  int modulus = 6;
};

struct Options {
  std::string group = "C2";
  std::string target;
  std::string third;
  int n = 2;
  std::string poset, biset;
  std::vector<std::string> elements;
  std::uint64_t seed = 1;
  int cases = 20;
  std::string suite;
  bool json = true;
  Caps caps;
};

GroupPtr load_group(const std::string& ref, const Caps& caps) {
  GroupPtr G = group_from_ref(ref, caps.group);
  if (G->order() > caps.group) throw InputError("group order " + std::to_string(G->order()) + " exceeds cap");
  return G;
}

void check_modulus(int n, const Caps& caps) {
  if (n < 1 || n > caps.modulus) throw InputError("modulus n must be in 1.." + std::to_string(caps.modulus));
}

MonomialPoset load_poset(const GroupPtr& G, int n, const std::string& path, const Caps& caps) {
  if (path.empty()) throw InputError("--poset is required");
  Json j = read_json_file(path);
  if (j.contains("vertices") && j.at("vertices").is_number_integer() && j.at("vertices").get<int>() > caps.vertices)
    throw InputError("poset exceeds the vertex cap of " + std::to_string(caps.vertices));
  return poset_from_json(G, n, j);
}

Biset load_biset(int n, const std::string& path, const Caps& caps) {
  if (path.empty()) throw InputError("--biset is required");
  Json j = read_json_file(path);
  if (j.contains("vertices") && j.at("vertices").is_number_integer() && j.at("vertices").get<int>() > caps.biset)
    throw InputError("biset exceeds the size cap of " + std::to_string(caps.biset));
  for (const char* side : {"left", "right"})
    if (j.contains(side) && j.at(side).is_string()) load_group(j.at(side).get<std::string>(), caps);
  return biset_from_json(j, n, caps.group);
}

Element load_element(const TablePtr& t, const std::string& path) { return element_from_json(t, read_json_file(path)); }

Json element_out(const Element& a) { return {{"terms", element_to_json(a)}, {"text", a.str()}}; }

// ---------------------------------------------------------------------------
// verification suites

struct SuiteContext {
  GroupPtr G, H, K;
  int n;
  Rng rng;
  PosetShape shape;
};

using Case = std::function<std::string(SuiteContext&)>;  // empty string means the case held

struct Suite {
  const char* name;
  const char* law;
  Case run;
};

std::string expect(bool ok, const std::string& what) { return ok ? "" : what; }

Subgroup proper_subgroup(const Group& G, Rng& rng) {
  auto subs = all_subgroups(G);
  if (subs.size() > 1) subs.pop_back();
  return rng.pick(subs);
}

const std::vector<Suite>& suites() {
  static const std::vector<Suite> all = {
      {"ring-product", "basis products agree with fibred tensor products",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         int i = c.rng.below(t->num_classes()), j = c.rng.below(t->num_classes());
         return expect(Element::basis(t, i) * Element::basis(t, j) == fibred_product(t, i, j), "basis product differs");
       }},
      {"mark-product", "marks of a product are the convolution of marks over Hom(U, C)",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         Element a = random_element(t, c.rng, -3, 3, 4), b = random_element(t, c.rng, -3, 3, 4);
         return expect(mark_vector(a * b) == mark_product(t, mark_vector(a), mark_vector(b)), "marks of product differ");
       }},
      {"lefschetz-sets", "Lambda of a discrete poset is its fibred class",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         MonomialPoset S = random_set(c.G, c.n, c.rng, 3, 8);
         return expect(lefschetz(t, S) == decompose_fibred(t, monomial_set_to_fibred(S)), "class differs");
       }},
      {"lefschetz-additivity", "Lambda of a disjoint union is the sum",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape), Y = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(lefschetz(t, disjoint_union(X, Y)) == lefschetz(t, X) + lefschetz(t, Y), "not additive");
       }},
      {"lefschetz-multiplicativity", "Lambda of a product is the product",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape), Y = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(lefschetz(t, product(X, Y)) == lefschetz(t, X) * lefschetz(t, Y), "not multiplicative");
       }},
      {"minus-one", "the five-point poset has Lambda = -[G, 1]",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         return expect(lefschetz(t, minus_one_poset(c.G, c.n)) == -Element::one(t), "value differs");
       }},
      {"realize", "every element is a Lambda",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         Element a = random_element(t, c.rng, -3, 3, 4);
         return expect(lefschetz(t, realize(a)) == a, "round trip failed for " + a.str());
       }},
      {"equality-criterion", "equal marks iff equal Lambda",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape), Y = random_poset(c.G, c.n, c.rng, c.shape);
         bool ok = equal_by_marks(t, X, Y) == (lefschetz(t, X) == lefschetz(t, Y)) && equal_by_marks(t, X, opposite(X));
         return expect(ok, "criterion disagrees");
       }},
      {"opposite", "Lambda of the opposite poset is unchanged",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(lefschetz(t, opposite(X)) == lefschetz(t, X), "values differ");
       }},
      {"vertex-recursion", "Lambda through vertex stabilizers and upper intervals",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(lefschetz_by_vertices(t, X) == lefschetz(t, X), "values differ");
       }},
      {"induction", "Lambda commutes with induction",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         Embedding e = subgroup_embedding(c.G, proper_subgroup(*c.G, c.rng));
         auto ts = make_table(e.sub, c.n);
         MonomialPoset X = random_poset(e.sub, c.n, c.rng, c.shape);
         return expect(induce_element(e, t, lefschetz(ts, X)) == lefschetz(t, induce(e, X)), "values differ");
       }},
      {"adjunction", "Hom(Ind X, Y) and Hom(X, Res Y) have the same size",
       [](SuiteContext& c) {
         Embedding e = subgroup_embedding(c.G, proper_subgroup(*c.G, c.rng));
         PosetShape s = c.shape;
         s.max_size = std::min(s.max_size, 4);
         MonomialPoset X = random_poset(e.sub, c.n, c.rng, s), Y = random_poset(c.G, c.n, c.rng, s);
         return expect(count_morphisms(induce(e, X), Y) == count_morphisms(X, restrict(e, Y)), "counts differ");
       }},
      {"join", "Lambda of a join along a map is Lambda of the target",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         RandomMap m = random_map(c.G, c.n, c.rng, c.shape);
         return expect(lefschetz(t, join(m.source, m.target, m.map)) == lefschetz(t, m.target), "values differ");
       }},
      {"quillen", "reduced Lambda of the target from reduced Lambda of the source and the fibres",
       [](SuiteContext& c) {
         auto t = make_table(c.G, c.n);
         RandomMap m = random_map(c.G, c.n, c.rng, c.shape);
         QuillenReport q = quillen_decomposition(t, m.source, m.target, m.map);
         if (!q.above_holds) return std::string("upper fibre sum differs");
         if (!q.below_holds) return std::string("lower fibre sum differs");
         if ((q.fibres_above_contractible || q.fibres_below_contractible) && !q.lambda_equal)
           return std::string("contractible fibres but different Lambda");
         return std::string();
       }},
      {"tensor-point", "left free, point-fixing bisets send the point to the point",
       [](SuiteContext& c) {
         Biset U = random_biset(c.G, c.H, c.n, c.rng, 8, true, 2, true);
         return expect(isomorphic(tensor_induce(U, MonomialPoset::point(c.G, c.n)).poset, MonomialPoset::point(c.H, c.n)),
                       "not a point");
       }},
      {"tensor-empty", "the empty biset gives the constant point",
       [](SuiteContext& c) {
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(isomorphic(tensor_induce(empty_biset(c.G, c.H, c.n), X).poset, MonomialPoset::point(c.H, c.n)),
                       "not a point");
       }},
      {"tensor-identity", "the identity biset gives the identity",
       [](SuiteContext& c) {
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(isomorphic(tensor_induce(identity_biset(c.G, c.n), X).poset, X), "not isomorphic");
       }},
      {"tensor-products", "left free, point-fixing bisets preserve products",
       [](SuiteContext& c) {
         Biset U = random_biset(c.G, c.H, c.n, c.rng, 6, true, 2, true);
         PosetShape s = c.shape;
         s.max_size = std::min(s.max_size, 3);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, s), Y = random_poset(c.G, c.n, c.rng, s);
         return expect(isomorphic(tensor_induce(U, product(X, Y)).poset,
                                  product(tensor_induce(U, X).poset, tensor_induce(U, Y).poset)),
                       "not isomorphic");
       }},
      {"tensor-representatives", "the result does not depend on orbit representatives",
       [](SuiteContext& c) {
         Biset U = random_biset(c.G, c.H, c.n, c.rng);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape);
         return expect(isomorphic(tensor_induce(U, X).poset, tensor_induce(U, X, alternative_reps(U)).poset),
                       "not isomorphic");
       }},
      {"tensor-multiplicative", "for left free, point-fixing bisets the ring map is multiplicative and unital",
       [](SuiteContext& c) {
         auto tG = make_table(c.G, c.n), tH = make_table(c.H, c.n);
         Biset U = random_biset(c.G, c.H, c.n, c.rng, 8, true, 2, true);
         Element a = random_element(tG, c.rng, -2, 2, 3), b = random_element(tG, c.rng, -2, 2, 3);
         bool ok = tensor_induce_ring(U, a * b, tH) == tensor_induce_ring(U, a, tH) * tensor_induce_ring(U, b, tH) &&
                   tensor_induce_ring(U, Element::one(tG), tH) == Element::one(tH);
         return expect(ok, "ring map law fails");
       }},
      {"tensor-union", "a disjoint union of bisets gives the product of ring maps",
       [](SuiteContext& c) {
         auto tG = make_table(c.G, c.n), tH = make_table(c.H, c.n);
         Biset U = random_biset(c.G, c.H, c.n, c.rng, 6), V = random_biset(c.G, c.H, c.n, c.rng, 6);
         Element a = random_element(tG, c.rng, -2, 2, 3);
         return expect(tensor_induce_ring(disjoint_union(U, V), a, tH) ==
                           tensor_induce_ring(U, a, tH) * tensor_induce_ring(V, a, tH),
                       "union law fails");
       }},
      {"tensor-composition", "composition with a left free, point-fixing biset",
       [](SuiteContext& c) {
         auto tG = make_table(c.G, c.n), tH = make_table(c.H, c.n), tK = make_table(c.K, c.n);
         Biset U = random_biset(c.G, c.H, c.n, c.rng, 6), V = random_biset(c.H, c.K, c.n, c.rng, 6, true, 2, true);
         PosetShape s = c.shape;
         s.max_size = std::min(s.max_size, 3);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, s);
         CompositionReport r = composition_law(U, V, X, {random_element(tG, c.rng, -2, 2, 3)}, tH, tK);
         if (!r.pairing_bijective) return std::string("orbit pairing is not a bijection");
         if (!r.posets_isomorphic) return std::string("posets differ");
         return expect(r.ring_equal, "ring maps differ");
       }},
      {"tensor-ghost", "marks of the ring map agree with fixed points of the poset",
       [](SuiteContext& c) {
         auto tH = make_table(c.H, c.n);
         Biset U = random_biset(c.G, c.H, c.n, c.rng);
         MonomialPoset X = random_poset(c.G, c.n, c.rng, c.shape);
         MonomialPoset T = tensor_induce(U, X).poset;
         for (int i = 0; i < tH->num_classes(); ++i)
           if (tensor_induce_marks(U, X, tH->rep(i)) != euler_char(fixed_subposet(T, tH->rep(i))))
             return "mark differs at " + tH->describe(i);
         return std::string();
       }},
  };
  return all;
}

Json run_suite(const Suite& s, const Options& o) {
  SuiteContext c{load_group(o.group, o.caps), nullptr, nullptr, o.n, Rng(o.seed), {}};
  c.H = o.target.empty() ? c.G : load_group(o.target, o.caps);
  c.K = o.third.empty() ? c.H : load_group(o.third, o.caps);
  c.shape.max_size = std::min(5, o.caps.vertices);
  Json failures = Json::array();
  for (int i = 0; i < o.cases; ++i) {
    std::string why = s.run(c);
    if (!why.empty()) failures.push_back({{"case", i}, {"detail", why}});
  }
  return {{"suite", s.name},       {"law", s.law},          {"group", c.G->name()},
          {"target", c.H->name()}, {"third", c.K->name()},  {"n", o.n},
          {"seed", o.seed},        {"cases", o.cases},      {"failures", failures},
          {"passed", failures.empty()}};
}

// ---------------------------------------------------------------------------

void print_text(const Json& j, const std::string& indent = "") {
  if (j.is_object()) {
    if (j.contains("text") && j.size() == 2 && j.contains("terms")) {
      std::cout << indent << j["text"].get<std::string>() << "\n";
      return;
    }
    for (const auto& [k, v] : j.items()) {
      if (v.is_primitive()) {
        std::cout << indent << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      } else if (v.is_object() && v.contains("text") && v.size() == 2) {
        std::cout << indent << k << ": " << v["text"].get<std::string>() << "\n";
      } else {
        std::cout << indent << k << ":\n";
        print_text(v, indent + "  ");
      }
    }
  } else if (j.is_array()) {
    for (const auto& v : j) {
      if (v.is_primitive() || (v.is_array() && !v.empty() && v[0].is_primitive()))
        std::cout << indent << v.dump() << "\n";
      else {
        print_text(v, indent + "  ");
        std::cout << indent << "--\n";
      }
    }
  } else {
    std::cout << indent << j.dump() << "\n";
  }
}

void emit(const Json& j, bool json) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    print_text(j);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Monomial Burnside rings, Lefschetz invariants and tensor induction"};
  app.require_subcommand(1);
  app.fallthrough();
  bool text = false;
  app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--text", text, "plain text output");
  app.add_option("--max-group", o.caps.group, "cap on |G|");
  app.add_option("--max-vertices", o.caps.vertices, "cap on poset size");
  app.add_option("--max-biset", o.caps.biset, "cap on biset size");
  app.add_option("--max-n", o.caps.modulus, "cap on the modulus n");

  auto add_group = [&](CLI::App* s) { s->add_option("--group", o.group, "catalog name or group JSON file"); };
  auto add_n = [&](CLI::App* s) { s->add_option("--n", o.n, "coefficient group Z/n"); };

  auto* catalog_cmd = app.add_subcommand("catalog", "list built-in groups");
  auto* subchars_cmd = app.add_subcommand("subchars", "subcharacter classes of G");
  auto* mul_cmd = app.add_subcommand("mul", "product of two elements");
  auto* marks_cmd = app.add_subcommand("marks", "table of marks, or the marks of one element");
  auto* lef_cmd = app.add_subcommand("lefschetz", "Lefschetz invariant of a monomial poset");
  auto* realize_cmd = app.add_subcommand("realize", "monomial poset whose invariant is a given element");
  auto* ti_cmd = app.add_subcommand("tensor-induce", "tensor induction of a monomial poset along a biset");
  auto* tir_cmd = app.add_subcommand("tensor-induce-ring", "ring map of a biset on an element");
  auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");

  for (auto* s : {subchars_cmd, mul_cmd, marks_cmd, lef_cmd, realize_cmd, verify_cmd}) add_group(s);
  for (auto* s : {subchars_cmd, mul_cmd, marks_cmd, lef_cmd, realize_cmd, ti_cmd, tir_cmd, verify_cmd}) {
    add_n(s);
    s->add_option("--seed", o.seed, "seed, recorded in the report");
  }
  mul_cmd->add_option("--element", o.elements, "element JSON file (twice)")->required()->expected(2);
  marks_cmd->add_option("--element", o.elements, "element JSON file")->expected(0, 1);
  realize_cmd->add_option("--element", o.elements, "element JSON file")->required()->expected(1);
  tir_cmd->add_option("--element", o.elements, "element JSON file")->required()->expected(1);
  lef_cmd->add_option("--poset", o.poset, "poset JSON file")->required();
  ti_cmd->add_option("--poset", o.poset, "poset JSON file over the left group")->required();
  for (auto* s : {ti_cmd, tir_cmd}) s->add_option("--biset", o.biset, "biset JSON file")->required();
  std::vector<std::string> suite_names;
  for (const auto& s : suites()) suite_names.push_back(s.name);
  verify_cmd->add_option("suite", o.suite, "suite name")->required()->check(CLI::IsMember(suite_names));
  verify_cmd->add_option("--target", o.target, "right group H for biset suites (default: --group)");
  verify_cmd->add_option("--third", o.third, "third group K for the composition suite (default: --target)");
  verify_cmd->add_option("--cases", o.cases, "number of seeded cases")->check(CLI::Range(1, 10000));
  verify_cmd->footer([&] {
    std::string f = "Suites:\n";
    for (const auto& s : suites()) f += std::string("  ") + s.name + ": " + s.law + "\n";
    return f;
  }());

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }
  if (text) o.json = false;

  try {
    check_modulus(o.n, o.caps);
    Json out;
    int rc = 0;
    if (*catalog_cmd) {
      out = Json::array();
      for (const auto& e : catalog()) {
        GroupPtr G = catalog_group(e.name);
        out.push_back({{"name", e.name}, {"order", G->order()}, {"degree", e.degree}});
      }
    } else if (*subchars_cmd) {
      auto t = make_table(load_group(o.group, o.caps), o.n);
      Json classes = Json::array();
      for (int i = 0; i < t->num_classes(); ++i) {
        Json c = subchar_to_json(t->rep(i));
        c["class"] = i;
        c["label"] = t->describe(i);
        c["normalizer_order"] = t->normalizer(i).size();
        c["class_size"] = t->class_size(i);
        classes.push_back(c);
      }
      out = {{"group", t->group().name()}, {"n", o.n}, {"classes", classes}};
    } else if (*mul_cmd) {
      auto t = make_table(load_group(o.group, o.caps), o.n);
      Element a = load_element(t, o.elements[0]), b = load_element(t, o.elements[1]);
      out = {{"group", t->group().name()}, {"n", o.n}, {"product", element_out(a * b)}};
    } else if (*marks_cmd) {
      auto t = make_table(load_group(o.group, o.caps), o.n);
      out = {{"group", t->group().name()}, {"n", o.n}};
      if (o.elements.empty()) {
        Json labels = Json::array();
        for (int i = 0; i < t->num_classes(); ++i) labels.push_back(t->describe(i));
        out["classes"] = labels;
        out["table"] = mark_matrix(*t);
      } else {
        Element a = load_element(t, o.elements[0]);
        out["element"] = element_out(a);
        out["marks"] = mark_vector(a);
      }
    } else if (*lef_cmd) {
      GroupPtr G = load_group(o.group, o.caps);
      auto t = make_table(G, o.n);
      MonomialPoset X = load_poset(G, o.n, o.poset, o.caps);
      LefschetzReport r = lefschetz_report(t, X);
      out = lefschetz_report_to_json(r);
      out["element"] = element_out(r.element);
      out["reduced"] = element_out(reduced_lefschetz(t, X));
      out["group"] = G->name();
      out["n"] = o.n;
    } else if (*realize_cmd) {
      auto t = make_table(load_group(o.group, o.caps), o.n);
      Element a = load_element(t, o.elements[0]);
      MonomialPoset X = realize(a);
      out = {{"element", element_out(a)}, {"poset", poset_to_json(X)}, {"check", lefschetz(t, X) == a}};
    } else if (*ti_cmd || *tir_cmd) {
      Biset B = load_biset(o.n, o.biset, o.caps);
      auto tH = make_table(B.right, o.n);
      out = {{"left", B.left->name()}, {"right", B.right->name()}, {"n", o.n}};
      if (*ti_cmd) {
        MonomialPoset X = load_poset(B.left, o.n, o.poset, o.caps);
        TensorInduction T = tensor_induce(B, X);
        out["poset"] = poset_to_json(T.poset);
        out["lefschetz"] = element_out(lefschetz(tH, T.poset));
      } else {
        Element a = load_element(make_table(B.left, o.n), o.elements[0]);
        out["element"] = element_out(a);
        out["image"] = element_out(tensor_induce_ring(B, a, tH));
      }
    } else if (*verify_cmd) {
      for (const auto& s : suites())
        if (o.suite == s.name) out = run_suite(s, o);
      rc = out["passed"].get<bool>() ? 0 : 1;
    }
    emit(out, o.json);
    return rc;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
