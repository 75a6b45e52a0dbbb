#include <gtest/gtest.h>

#include "monoburn/catalog.hpp"
#include "monoburn/random.hpp"
#include "oracles.hpp"

using namespace monoburn;

namespace {

Subgroup subgroup_of_size(const Group& G, int k) {
  for (const auto& s : all_subgroups(G))
    if (s.size() == k) return s;
  throw std::runtime_error("no subgroup of that size");
}

// Raw cocycle table of a poset, -1 where undefined.
std::vector<int> raw_table(const MonomialPoset& X) {
  int N = X.size();
  std::vector<int> t(static_cast<size_t>(X.group().order()) * N * N, -1);
  for (Elt g = 0; g < X.group().order(); ++g)
    for (int x = 0; x < N; ++x)
      for (int y = 0; y < N; ++y)
        if (X.admissible(g, x, y)) t[(static_cast<size_t>(g) * N + x) * N + y] = X.coc(g, x, y);
  return t;
}

long long chain_count(const MonomialPoset& X, int n) { return static_cast<long long>(chains_of(X, n).size()); }

}  // namespace

TEST(MonomialPoset, TrivialCocycleIsValid) {
  Rng rng(1);
  GroupPtr G = catalog_group("S3");
  for (int it = 0; it < 20; ++it) {
    MonomialPoset X = with_trivial_cocycle(random_poset(G, 3, rng));
    EXPECT_FALSE(X.check().has_value());
    EXPECT_FALSE(check_cocycle_table(*G, 3, X.size(), materialize_leq(X), X.act_table(), raw_table(X)).has_value());
  }
}

TEST(MonomialPoset, ValidatorCatchesBrokenTables) {
  GroupPtr G = catalog_group("C2");
  MonomialPoset W = minus_one_poset(G, 3);
  std::vector<int> t = raw_table(W);
  int N = W.size();
  auto at = [&](Elt g, int x, int y) -> int& { return t[(static_cast<size_t>(g) * N + x) * N + y]; };
  at(G->identity(), 2, 2) = 1;
  auto v = check_cocycle_table(*G, 3, N, materialize_leq(W), W.act_table(), t);
  ASSERT_TRUE(v.has_value());
  EXPECT_EQ(v->what, "l(1,x,x) is not zero");
  // fuzz: any single changed admissible value breaks the law or l(1,x,x) = 0
  Rng rng(9);
  for (int it = 0; it < 50; ++it) {
    std::vector<int> u = raw_table(W);
    std::vector<size_t> defined;
    for (size_t i = 0; i < u.size(); ++i)
      if (u[i] >= 0) defined.push_back(i);
    size_t i = rng.pick(defined);
    u[i] = (u[i] + 1 + rng.below(2)) % 3;
    EXPECT_TRUE(check_cocycle_table(*G, 3, N, materialize_leq(W), W.act_table(), u).has_value());
  }
  // a value outside the domain
  std::vector<int> u = raw_table(W);
  u[(static_cast<size_t>(0) * N + 2) * N + 0] = 0;
  EXPECT_TRUE(check_cocycle_table(*G, 3, N, materialize_leq(W), W.act_table(), u).has_value());
  // factorized storage rejects a bad iso table
  std::vector<uint8_t> iso(W.iso_table());
  iso[0] = 1;
  MonomialPoset bad(G, 3, N, W.leq_table(), W.act_table(), iso, W.beta_table());
  EXPECT_TRUE(bad.check().has_value());
  EXPECT_THROW(bad.validate(), InputError);
}

TEST(MonomialPoset, RandomPostsAreValidExhaustively) {
  Rng rng(2);
  for (const char* name : {"C2", "C4", "S3"})
    for (int n : {2, 3, 4}) {
      GroupPtr G = catalog_group(name);
      for (int it = 0; it < 15; ++it) {
        MonomialPoset X = random_poset(G, n, rng);
        EXPECT_FALSE(X.check().has_value());
        EXPECT_FALSE(X.check_exhaustive().has_value());
        EXPECT_FALSE(check_cocycle_table(*G, n, X.size(), materialize_leq(X), X.act_table(), raw_table(X)).has_value());
      }
    }
}

TEST(MonomialPoset, FromCocycleRejectsInconsistentValues) {
  GroupPtr G = catalog_group("C2");
  std::vector<char> leq = {1, 1, 0, 1};
  std::vector<int> act = {0, 1, 0, 1};
  // l(1,0,1) = 1 is fine alone, but l(g,0,1) must then equal l(g,0,0) + 1
  EXPECT_THROW(MonomialPoset::from_cocycle(G, 2, 2, leq, act, [](Elt g, int x, int y) { return (g == 0 && x == 0 && y == 1) ? 1 : 0; }),
               InputError);
  MonomialPoset ok = MonomialPoset::from_cocycle(G, 2, 2, leq, act, [](Elt, int x, int y) { return x != y ? 1 : 0; });
  EXPECT_FALSE(ok.check_exhaustive().has_value());
}

TEST(MonomialPoset, VertexCharacters) {
  GroupPtr Gp = catalog_group("S3");
  auto t = make_table(Gp, 2);
  for (int i = 0; i < t->num_classes(); ++i) {
    MonomialPoset X = coset_poset(Gp, 2, t->rep(i));
    EXPECT_EQ(vertex_character(X, 0), t->rep(i));
    EXPECT_EQ(vertex_character(with_trivial_cocycle(X), 0), trivial_subchar(t->rep(i).U));
  }
  MonomialPoset free = coset_poset(Gp, 2, t->rep(0));
  for (int x = 0; x < free.size(); ++x) EXPECT_EQ(vertex_character(free, x).U.size(), 1);
}

TEST(MonomialPoset, ResRemarkOnComparablePairs) {
  Rng rng(4);
  GroupPtr Gp = catalog_group("S3");
  const Group& G = *Gp;
  for (int it = 0; it < 30; ++it) {
    MonomialPoset X = random_poset(Gp, 2, rng);
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < X.size(); ++y)
        if (X.leq(x, y))
          for (Elt g = 0; g < G.order(); ++g)
            if (X.act(g, x) == x && X.act(g, y) == y) { EXPECT_EQ(X.iso(g, x), X.iso(g, y)); }
  }
}

TEST(MonomialPoset, UnionAndProduct) {
  Rng rng(5);
  GroupPtr Gp = catalog_group("S3");
  MonomialPoset E = MonomialPoset::empty(Gp, 2), P = MonomialPoset::point(Gp, 2);
  for (int it = 0; it < 15; ++it) {
    MonomialPoset X = random_poset(Gp, 2, rng), Y = random_poset(Gp, 2, rng);
    EXPECT_TRUE(isomorphic(disjoint_union(X, E), X));
    EXPECT_TRUE(isomorphic(product(P, X), X));
    MonomialPoset U = disjoint_union(X, Y), Q = product(X, Y);
    EXPECT_FALSE(U.check_exhaustive().has_value());
    EXPECT_FALSE(Q.check_exhaustive().has_value());
    EXPECT_EQ(Q.size(), X.size() * Y.size());
    for (int x = 0; x < X.size(); ++x)
      for (int y = 0; y < Y.size(); ++y)
        EXPECT_EQ(stabilizer(Q, x * Y.size() + y), intersect(stabilizer(X, x), stabilizer(Y, y)));
  }
  EXPECT_THROW(disjoint_union(P, MonomialPoset::point(Gp, 3)), InputError);
}

TEST(MonomialPoset, Opposite) {
  Rng rng(6);
  GroupPtr Gp = catalog_group("S3");
  for (int it = 0; it < 20; ++it) {
    MonomialPoset X = random_poset(Gp, 3, rng);
    MonomialPoset O = opposite(X);
    EXPECT_FALSE(O.check_exhaustive().has_value());
    for (int x = 0; x < X.size(); ++x) EXPECT_EQ(vertex_character(O, x), vertex_character(X, x));
    MonomialPoset OO = opposite(O);
    EXPECT_EQ(raw_table(OO), raw_table(X));
    for (int n = 0; n < 4; ++n) EXPECT_EQ(chain_count(O, n), chain_count(X, n));
    // l_op(g, x, y) = -l(g^-1, y, x)
    const Group& G = *Gp;
    for (Elt g = 0; g < G.order(); ++g)
      for (int x = 0; x < X.size(); ++x)
        for (int y = 0; y < X.size(); ++y)
          if (O.admissible(g, x, y)) { EXPECT_EQ(O.coc(g, x, y), mod(-X.coc(G.inv(g), y, x), 3)); }
  }
  MonomialPoset D = random_set(Gp, 2, rng);
  EXPECT_EQ(raw_table(opposite(D)), raw_table(D));
}

TEST(MonomialPoset, InduceAndRestrict) {
  Rng rng(7);
  GroupPtr Gp = catalog_group("S3");
  auto t = make_table(Gp, 2);
  for (int k : {1, 2, 3, 6}) {
    Embedding e = subgroup_embedding(Gp, subgroup_of_size(*Gp, k));
    auto th = make_table(e.sub, 2);
    // a point with character mu induces to (G/H, mu-hat)
    for (int i = 0; i < th->num_classes(); ++i) {
      if (th->rep(i).U.size() != k) continue;
      MonomialPoset pt = coset_poset(e.sub, 2, th->rep(i));
      MonomialPoset I = induce(e, pt);
      Subchar mu = trivial_subchar(e.image);
      for (Elt h = 0; h < k; ++h) mu.val[e(h)] = th->rep(i).val[h];
      EXPECT_TRUE(isomorphic(I, coset_poset(Gp, 2, mu)));
    }
    for (int it = 0; it < 8; ++it) {
      MonomialPoset X = random_poset(e.sub, 2, rng);
      MonomialPoset I = induce(e, X);
      EXPECT_EQ(I.size(), X.size() * 6 / k);
      EXPECT_FALSE(I.check_exhaustive().has_value());
      MonomialPoset R = restrict(e, I);
      EXPECT_FALSE(R.check().has_value());
      // X sits in Res Ind X as the summand at the identity coset
      std::vector<int> first;
      for (int x = 0; x < X.size(); ++x) first.push_back(x);
      MonomialPoset S = subposet(identity_embedding(R.group_ptr()), R, first);
      EXPECT_TRUE(isomorphic(S, X));
    }
  }
  Embedding whole = identity_embedding(Gp);
  MonomialPoset X = random_poset(Gp, 2, rng);
  EXPECT_TRUE(isomorphic(induce(whole, X), X));
}

TEST(MonomialPoset, InduceCommutesWithTrivialCocycle) {
  Rng rng(8);
  GroupPtr Gp = catalog_group("S3");
  Embedding e = subgroup_embedding(Gp, subgroup_of_size(*Gp, 2));
  for (int it = 0; it < 10; ++it) {
    MonomialPoset X = random_poset(e.sub, 2, rng);
    EXPECT_TRUE(isomorphic(induce(e, with_trivial_cocycle(X)), with_trivial_cocycle(induce(e, X))));
  }
}

TEST(MonomialPoset, MorphismCountsMatchBruteForce) {
  GroupPtr Gp = catalog_group("C2");
  MonomialPoset E = MonomialPoset::empty(Gp, 3), P = MonomialPoset::point(Gp, 3);
  EXPECT_EQ(enumerate_morphisms(E, P).size(), 1u);
  EXPECT_EQ(enumerate_morphisms(P, P).size(), 3u);
  Rng rng(10);
  PosetShape small;
  small.max_size = 4;
  for (const char* name : {"C2", "S3"}) {
    GroupPtr G = catalog_group(name);
    for (int it = 0; it < 20; ++it) {
      MonomialPoset X = random_poset(G, 2, rng, small), Y = random_poset(G, 2, rng, small);
      auto maps = enumerate_morphisms(X, Y);
      EXPECT_EQ(static_cast<long long>(maps.size()), oracle::count_maps(X, Y));
      EXPECT_EQ(count_morphisms(X, Y), oracle::count_maps(X, Y));
      for (const auto& m : maps) EXPECT_TRUE(is_map(X, Y, m));
    }
  }
}

TEST(MonomialPoset, AdjunctionCardinality) {
  Rng rng(12);
  GroupPtr Gp = catalog_group("S3");
  PosetShape small;
  small.max_size = 4;
  for (int k : {2, 3}) {
    Embedding e = subgroup_embedding(Gp, subgroup_of_size(*Gp, k));
    for (int it = 0; it < 10; ++it) {
      MonomialPoset X = random_poset(e.sub, 2, rng, small), Y = random_poset(Gp, 2, rng, small);
      EXPECT_EQ(count_morphisms(induce(e, X), Y), count_morphisms(X, restrict(e, Y)));
    }
  }
}

TEST(MonomialPoset, ChainsOfTheFivePointPoset) {
  GroupPtr Gp = catalog_group("D8");
  MonomialPoset W = minus_one_poset(Gp, 2);
  EXPECT_EQ(chains(W, 0).chains.size(), 5u);
  EXPECT_EQ(chains(W, 1).chains.size(), 6u);
  EXPECT_EQ(chains(W, 2).chains.size(), 0u);
  EXPECT_EQ(euler_char(underlying(W)), -1);
  EXPECT_EQ(euler_char(fixed_subposet(W, trivial_subchar(trivial_subgroup(*Gp)))), -1);
  EXPECT_EQ(height(W), 2);
}

TEST(MonomialPoset, ChainSetsAndStabilizers) {
  Rng rng(13);
  GroupPtr Gp = catalog_group("S3");
  for (int it = 0; it < 20; ++it) {
    MonomialPoset X = random_poset(Gp, 2, rng);
    ChainSet c0 = chains(X, 0);
    EXPECT_EQ(c0.set.size(), X.size());
    for (int x = 0; x < X.size(); ++x) EXPECT_EQ(vertex_character(c0.set, x), vertex_character(X, x));
    EXPECT_TRUE(chains(X, height(X)).chains.empty());
    for (int n = 1; n < height(X); ++n) {
      ChainSet cs = chains(X, n);
      EXPECT_FALSE(cs.set.check().has_value());
      for (size_t i = 0; i < cs.chains.size(); ++i) {
        Subgroup st = stabilizer(cs.set, static_cast<int>(i));
        Subgroup meet = whole_group(*Gp);
        for (int x : cs.chains[i]) meet = intersect(meet, stabilizer(X, x));
        EXPECT_EQ(st, meet);
      }
    }
  }
}

TEST(MonomialPoset, FixedSubposetsMatchOracle) {
  Rng rng(14);
  GroupPtr Gp = catalog_group("S3");
  auto t = make_table(Gp, 2);
  MonomialPoset E = MonomialPoset::empty(Gp, 2), P = MonomialPoset::point(Gp, 2);
  Subchar top = trivial_subchar(whole_group(*Gp));
  EXPECT_EQ(euler_char(fixed_subposet(E, top)), 0);
  EXPECT_EQ(euler_char(fixed_subposet(P, top)), 1);
  for (int it = 0; it < 30; ++it) {
    MonomialPoset X = random_poset(Gp, 2, rng);
    for (int i = 0; i < t->num_classes(); ++i) {
      auto r = oracle::raw(t->rep(i));
      EXPECT_EQ(euler_char(fixed_subposet(X, t->rep(i))), oracle::fixed_euler(X, r));
      EXPECT_EQ(fixed_subposet(X, t->rep(i)).size, static_cast<int>(oracle::fixed_points(X, r).size()));
    }
    long long alt = 0;
    for (int n = 0; n < height(X); ++n) alt += (n % 2 ? -1 : 1) * chain_count(X, n);
    EXPECT_EQ(euler_char(underlying(X)), alt);
  }
}

TEST(MonomialPoset, JoinIsValid) {
  Rng rng(15);
  GroupPtr Gp = catalog_group("S3");
  MonomialPoset P = MonomialPoset::point(Gp, 2), E = MonomialPoset::empty(Gp, 2);
  int cones = 0;
  for (int it = 0; it < 20; ++it) {
    RandomMap rm = random_map(Gp, 2, rng);
    MonomialPoset J = join(rm.source, rm.target, rm.map);
    EXPECT_FALSE(J.check_exhaustive().has_value());
    EXPECT_EQ(J.size(), rm.source.size() + rm.target.size());
    // cone over the source: the apex is the maximum
    // (a map to the point exists only when the cocycle is a coboundary)
    auto maps = enumerate_morphisms(rm.source, P);
    if (!maps.empty()) {
      ++cones;
      MonomialPoset C = join(rm.source, P, maps.front());
      for (int x = 0; x < C.size(); ++x) EXPECT_TRUE(C.leq(x, rm.source.size()));
    }
    // join from the empty poset is the target
    MonoMap none{{}, {}};
    EXPECT_TRUE(isomorphic(join(E, rm.target, none), rm.target));
  }
  EXPECT_GT(cones, 0);
}

TEST(MonomialPoset, FibersAndIntervals) {
  Rng rng(16);
  GroupPtr Gp = catalog_group("S3");
  for (int it = 0; it < 15; ++it) {
    RandomMap rm = random_map(Gp, 2, rng);
    const MonomialPoset &X = rm.source, &Y = rm.target;
    for (int y = 0; y < Y.size(); ++y) {
      Embedding e = stabilizer_embedding(Y, y);
      MonomialPoset below = fiber_below(e, X, Y, rm.map, y), above = fiber_above(e, X, Y, rm.map, y);
      int nb = 0, na = 0;
      for (int x = 0; x < X.size(); ++x) {
        nb += Y.leq(rm.map.f[x], y);
        na += Y.leq(y, rm.map.f[x]);
      }
      EXPECT_EQ(below.size(), nb);
      EXPECT_EQ(above.size(), na);
      EXPECT_FALSE(below.check().has_value());
    }
    // identity map: f^y is the closed down-set of y
    MonoMap id = identity_map(Y);
    for (int y = 0; y < Y.size(); ++y) {
      Embedding e = stabilizer_embedding(Y, y);
      int down = 0;
      for (int z = 0; z < Y.size(); ++z) down += Y.leq(z, y);
      EXPECT_EQ(fiber_below(e, Y, Y, id, y).size(), down);
      bool maximal = true;
      for (int z = 0; z < Y.size(); ++z) maximal = maximal && !Y.lt(y, z);
      if (maximal) { EXPECT_EQ(up_interval(e, Y, y).size(), 0); }
      EXPECT_EQ(up_interval(e, Y, y).size() + down_interval(e, Y, y).size() + 1,
                static_cast<int>([&] {
                  int c = 0;
                  for (int z = 0; z < Y.size(); ++z) c += Y.leq(z, y) || Y.leq(y, z);
                  return c;
                }()));
    }
  }
}

TEST(MonomialPoset, IsomorphismDoesNotQuotientByRescaling) {
  GroupPtr Gp = catalog_group("C2");
  auto t = make_table(Gp, 2);
  // (C2, 1) and (C2, sgn) points are not isomorphic
  EXPECT_FALSE(isomorphic(coset_poset(Gp, 2, t->rep(1)), coset_poset(Gp, 2, t->rep(2))));
  EXPECT_TRUE(isomorphic(coset_poset(Gp, 2, t->rep(1)), coset_poset(Gp, 2, t->rep(1))));
}
