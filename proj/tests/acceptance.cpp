// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "monoburn/fibred.hpp"
#include "oracles.hpp"

using namespace monoburn;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void check(bool cond, const std::string& what) {
    if (!cond && ok) note << what;
    ok = ok && cond;
  }
};

Subgroup subgroup_of_size(const Group& G, int k) {
  for (const auto& s : all_subgroups(G))
    if (s.size() == k) return s;
  throw InternalError("no subgroup of that size");
}

std::string tag(const std::string& G, int n, int it = -1) {
  std::string s = G + " n=" + std::to_string(n);
  if (it >= 0) s += " case " + std::to_string(it);
  return s;
}

void ring_product_oracle(Outcome& o) {
  for (const char* name : {"C2", "C3", "C4", "S3", "D8", "Q8"})
    for (int n = 1; n <= 4; ++n) {
      auto t = make_table(catalog_group(name), n);
      for (int i = 0; i < t->num_classes(); ++i)
        for (int j = 0; j < t->num_classes(); ++j)
          o.check(Element::basis(t, i) * Element::basis(t, j) == fibred_product(t, i, j),
                  tag(name, n) + " basis " + std::to_string(i) + "*" + std::to_string(j));
    }
}

// The literal pointwise law is checked as stated. The note also reports the convolution
// law over Hom(U, C), which is what the marks actually satisfy when n > 1.
void mark_homomorphism(Outcome& o) {
  Rng rng(1002);
  long long pairs = 0, pointwise_bad = 0, convolution_bad = 0;
  std::string first;
  for (const char* name : {"C2", "C3", "C4", "S3", "D8", "Q8"})
    for (int n = 1; n <= 4; ++n) {
      auto t = make_table(catalog_group(name), n);
      auto M = mark_matrix(*t);
      for (size_t i = 0; i < M.size(); ++i) {
        o.check(M[i][i] > 0, tag(name, n) + " diagonal");
        for (size_t j = 0; j < i; ++j) o.check(M[i][j] == 0, tag(name, n) + " below diagonal");
      }
      for (int it = 0; it < 200; ++it) {
        Element a = random_element(t, rng, -3, 3, 4), b = random_element(t, rng, -3, 3, 4);
        auto ma = mark_vector(a), mb = mark_vector(b), mab = mark_vector(a * b);
        bool pointwise = true;
        for (size_t i = 0; i < ma.size(); ++i) pointwise = pointwise && mab[i] == ma[i] * mb[i];
        ++pairs;
        if (!pointwise) {
          if (first.empty()) first = tag(name, n, it);
          ++pointwise_bad;
        }
        convolution_bad += mab != mark_product(t, ma, mb);
      }
    }
  o.check(pointwise_bad == 0, "pointwise product fails on " + std::to_string(pointwise_bad) + "/" +
                                  std::to_string(pairs) + " pairs (first " + first + ")");
  o.note << (o.ok ? "" : "; ") << "convolution law fails on " << convolution_bad << "/" << pairs << " pairs";
}

void lambda_laws(Outcome& o) {
  Rng rng(1003);
  for (const char* name : {"C2", "S3"})
    for (int n : {1, 2}) {
      GroupPtr G = catalog_group(name);
      auto t = make_table(G, n);
      for (int it = 0; it < 100; ++it) {
        MonomialPoset S = random_set(G, n, rng, 3, 8);
        o.check(lefschetz(t, S) == decompose_fibred(t, monomial_set_to_fibred(S)), tag(name, n, it) + " discrete");
        MonomialPoset X = random_poset(G, n, rng, fixtures::small_shape(5));
        MonomialPoset Y = random_poset(G, n, rng, fixtures::small_shape(5));
        Element lx = lefschetz(t, X), ly = lefschetz(t, Y);
        o.check(lefschetz(t, disjoint_union(X, Y)) == lx + ly, tag(name, n, it) + " additive");
        o.check(lefschetz(t, product(X, Y)) == lx * ly, tag(name, n, it) + " multiplicative");
      }
    }
}

void minus_one_example(Outcome& o) {
  for (const auto& e : catalog())
    for (int n = 1; n <= 6; ++n) {
      GroupPtr G = catalog_group(e.name);
      auto t = make_table(G, n);
      o.check(lefschetz(t, minus_one_poset(G, n)) == -Element::one(t), tag(e.name, n));
    }
}

void realize_round_trip(Outcome& o) {
  Rng rng(1005);
  GroupPtr G = catalog_group("S3");
  auto t = make_table(G, 2);
  for (int it = 0; it < 100; ++it) {
    Element a = random_element(t, rng, -3, 3, t->num_classes());
    o.check(lefschetz(t, realize(a)) == a, tag("S3", 2, it));
  }
}

void equality_criterion(Outcome& o) {
  Rng rng(1006);
  GroupPtr G = catalog_group("S3");
  auto t = make_table(G, 2);
  int engineered_non_iso = 0;
  for (int it = 0; it < 100; ++it) {
    MonomialPoset X = random_poset(G, 2, rng, fixtures::small_shape(6)), Y = X;
    bool engineered = true;
    switch (it % 4) {
      case 0:
        Y = opposite(X);
        break;
      case 1: {
        RandomMap rm = random_map(G, 2, rng, fixtures::small_shape(4));
        X = join(rm.source, rm.target, rm.map);
        Y = rm.target;
        break;
      }
      case 2: {
        // realize(Lambda_X) padded by a point and a -1 poset
        MonomialPoset P = MonomialPoset::point(G, 2);
        Y = disjoint_union(realize(lefschetz(t, X)), disjoint_union(P, product(P, minus_one_poset(G, 2))));
        break;
      }
      default:
        Y = random_poset(G, 2, rng, fixtures::small_shape(6));
        engineered = false;
    }
    bool by_marks = equal_by_marks(t, X, Y);
    o.check(by_marks == (lefschetz(t, X) == lefschetz(t, Y)), tag("S3", 2, it) + " biconditional");
    if (engineered) {
      o.check(by_marks, tag("S3", 2, it) + " engineered pair");
      if (X.size() != Y.size() || !isomorphic(X, Y)) ++engineered_non_iso;
    }
  }
  o.check(engineered_non_iso > 0, "no engineered non-isomorphic pair");
  o.note << (o.ok ? "" : " ") << engineered_non_iso << " engineered non-isomorphic pairs";
}

void structural_identities(Outcome& o) {
  Rng rng(1007);
  GroupPtr G = catalog_group("S3");
  auto t = make_table(G, 2);
  SubTableCache cache(t);
  std::vector<Embedding> subs = {subgroup_embedding(G, subgroup_of_size(*G, 3)),
                                 subgroup_embedding(G, subgroup_of_size(*G, 2))};
  for (int it = 0; it < 50; ++it) {
    std::string at = tag("S3", 2, it);
    MonomialPoset X = random_poset(G, 2, rng);
    o.check(lefschetz(t, opposite(X)) == lefschetz(t, X), at + " opposite");
    o.check(lefschetz_by_vertices(cache, X) == lefschetz(t, X), at + " vertex recursion");
    const Embedding& e = subs[it % 2];
    auto th = make_table(e.sub, 2);
    MonomialPoset Z = random_poset(e.sub, 2, rng);
    o.check(induce_element(e, t, lefschetz(th, Z)) == lefschetz(t, induce(e, Z)), at + " induction");
    RandomMap rm = random_map(G, 2, rng);
    o.check(lefschetz(t, join(rm.source, rm.target, rm.map)) == lefschetz(t, rm.target), at + " join");
    QuillenReport q = quillen_decomposition(cache, rm.source, rm.target, rm.map);
    o.check(q.above_holds, at + " fibres above");
    o.check(q.below_holds, at + " fibres below");
  }
}

void adjunction(Outcome& o) {
  Rng rng(1008);
  GroupPtr G = catalog_group("S3");
  for (int it = 0; it < 30; ++it) {
    Embedding e = subgroup_embedding(G, subgroup_of_size(*G, it % 2 ? 3 : 2));
    MonomialPoset X = random_poset(e.sub, 2, rng, fixtures::small_shape(5));
    MonomialPoset Y = random_poset(G, 2, rng, fixtures::small_shape(5));
    o.check(count_morphisms(induce(e, X), Y) == count_morphisms(X, restrict(e, Y)), tag("S3", 2, it));
  }
}

void tensor_laws(Outcome& o) {
  Rng rng(1009);
  GroupPtr C1 = catalog_group("C1"), C2 = catalog_group("C2"), C4 = catalog_group("C4"), V4 = catalog_group("V4"),
           S3 = catalog_group("S3");
  // worked value
  {
    Biset U = fixtures::regular_from_trivial(C1, C2, 2);
    auto t1 = make_table(C1, 2), t2 = make_table(C2, 2);
    Element want(t2);
    for (int i = 0; i < t2->num_classes(); ++i) {
      const Subchar& s = t2->rep(i);
      bool triv = s.val[1] == 0;
      if (triv) want.add(i, s.U.size() == 2 ? 2 : 1);
    }
    Element got = tensor_induce_ring(U, 2 * Element::one(t1), t2);
    o.check(got == want, "worked value: got " + got.str());
    o.check(tensor_induce_ring_by_posets(U, 2 * Element::one(t1), t2) == want, "worked value through posets");
  }
  std::vector<GroupPtr> small = {C2, C4, V4, S3};
  for (int it = 0; it < 24; ++it) {
    GroupPtr G = small[it % 2], H = small[(it / 2) % 4];
    std::string at = G->name() + "->" + H->name() + " case " + std::to_string(it);
    auto tG = make_table(G, 2), tH = make_table(H, 2);
    // the point, product and unit laws need U left free with T_U(pt) = (pt, 1); the union law does not
    Biset U = fixtures::random_biset(G, H, 2, rng, 8, true, 2, true), U2 = fixtures::random_biset(G, H, 2, rng, 8);
    MonomialPoset X = random_poset(G, 2, rng, fixtures::small_shape(4));
    MonomialPoset X2 = random_poset(G, 2, rng, fixtures::small_shape(2));
    o.check(isomorphic(tensor_induce(U, MonomialPoset::point(G, 2)).poset, MonomialPoset::point(H, 2)), at + " point");
    o.check(isomorphic(tensor_induce(empty_biset(G, H, 2), X).poset, MonomialPoset::point(H, 2)), at + " empty biset");
    o.check(isomorphic(tensor_induce(identity_biset(G, 2), X).poset, X), at + " identity biset");
    o.check(isomorphic(tensor_induce(U, product(X, X2)).poset,
                       product(tensor_induce(U, X).poset, tensor_induce(U, X2).poset)),
            at + " products");
    Element a = random_element(tG, rng, -2, 2, 3), b = random_element(tG, rng, -2, 2, 3);
    Element Ta = tensor_induce_ring(U, a, tH);
    o.check(tensor_induce_ring(U, a * b, tH) == Ta * tensor_induce_ring(U, b, tH), at + " multiplicative");
    o.check(tensor_induce_ring(U, Element::one(tG), tH) == Element::one(tH), at + " unit");
    o.check(tensor_induce_ring(disjoint_union(U, U2), a, tH) == Ta * tensor_induce_ring(U2, a, tH), at + " union");
    if (U.size() <= 6) o.check(tensor_induce_ring_by_posets(U, a, tH) == Ta, at + " ring map through posets");
    // composition through a left free second biset
    GroupPtr K = small[(it + 1) % 4];
    auto tK = make_table(K, 2);
    Biset V = fixtures::random_biset(H, K, 2, rng, 8, true, 2, true);
    MonomialPoset X3 = random_poset(G, 2, rng, fixtures::small_shape(3));
    CompositionReport c = composition_law(U, V, X3, {a, b}, tH, tK);
    o.check(c.pairing_bijective, at + " orbit pairing");
    o.check(c.posets_isomorphic, at + " composition on posets");
    o.check(c.ring_equal, at + " composition on the ring");
  }
}

void ghost_cross_check(Outcome& o) {
  Rng rng(1010);
  std::vector<GroupPtr> groups = {catalog_group("C2"), catalog_group("C4"), catalog_group("V4"), catalog_group("S3")};
  for (int it = 0; it < 30; ++it) {
    GroupPtr G = groups[it % 2], H = groups[(it / 2) % 4];
    auto tH = make_table(H, 2);
    Biset U = fixtures::random_biset(G, H, 2, rng, 8);
    MonomialPoset X = random_poset(G, 2, rng, fixtures::small_shape(4));
    MonomialPoset T = tensor_induce(U, X).poset;
    for (int i = 0; i < tH->num_classes(); ++i)
      o.check(tensor_induce_marks(U, X, tH->rep(i)) == euler_char(fixed_subposet(T, tH->rep(i))),
              "case " + std::to_string(it) + " at " + tH->describe(i));
  }
}

void non_free(Outcome& o) {
  GroupPtr C2 = catalog_group("C2");
  NonFreeSetup s = non_free_setup(C2, 2);
  auto t = make_table(C2, 2);
  std::vector<MonomialPoset> cands;
  for (int i = 0; i < t->num_classes(); ++i) cands.push_back(coset_poset(C2, 2, t->rep(i)));
  Rng rng(1011);
  for (int it = 0; it < 200; ++it) cands.push_back(random_poset(C2, 2, rng, fixtures::small_shape(4)));
  CounterexampleReport r = non_free_counterexample(s, cands);
  o.check(!left_free(s.V), "V is left free");
  o.check(r.composite_is_identity, "composite biset is not the identity");
  o.check(r.found, "no witness among " + std::to_string(r.tried) + " candidates");
  if (r.found) {
    Subchar w = vertex_character(*r.witness, 0);
    o.note << "witness " << r.witness->size() << " vertex, character " << t->describe(t->class_of(w)) << "; image has "
           << r.image->size() << " vertices";
  }
}

void trivial_degeneration(Outcome& o) {
  GroupPtr G = catalog_group("S3");
  auto t = make_table(G, 1);
  oracle::Ordinary ord(*G);
  auto want = ord.table();
  o.check(t->num_classes() == 4 && want.size() == 4, "S3 should have 4 classes");
  std::vector<int> cls;
  for (const auto& S : ord.reps) cls.push_back(t->class_of(trivial_subchar(make_subgroup(*G, S))));
  for (size_t i = 0; i < cls.size(); ++i)
    for (size_t j = 0; j < cls.size(); ++j) o.check(t->mark(cls[i], cls[j]) == want[i][j], "table of marks");
  Rng rng(1012);
  for (int it = 0; it < 100; ++it) {
    MonomialPoset X = random_poset(G, 1, rng);
    auto c = ord.lambda(X);
    Element got = lefschetz(t, X);
    for (size_t i = 0; i < cls.size(); ++i) o.check(got.coeff(cls[i]) == c[i], "Lambda case " + std::to_string(it));
  }
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    void (*run)(Outcome&);
  };
  const Criterion all[] = {
      {"ring product matches fibred tensor oracle", ring_product_oracle},
      {"marks are a ring homomorphism, table triangular", mark_homomorphism},
      {"Lambda of sets, sums and products", lambda_laws},
      {"five-point poset has Lambda = -1", minus_one_example},
      {"realize round trip", realize_round_trip},
      {"equality criterion by marks", equality_criterion},
      {"opposite, join, induction, vertex recursion, fibre sums", structural_identities},
      {"induction/restriction adjunction on Hom counts", adjunction},
      {"tensor induction laws and worked value", tensor_laws},
      {"ghost-side cross-check", ghost_cross_check},
      {"non-free counterexample", non_free},
      {"trivial coefficients give the ordinary Burnside ring", trivial_degeneration},
  };
  int failed = 0, idx = 0;
  for (const auto& c : all) {
    ++idx;
    Outcome o;
    auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string note = o.note.str();
    std::printf("%s %2d %s (%.2fs)%s%s\n", o.ok ? "PASS" : "FAIL", idx, c.name, secs, note.empty() ? "" : ": ",
                note.c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d/%d criteria passed\n", idx - failed, idx);
  return failed == 0 ? 0 : 1;
}
