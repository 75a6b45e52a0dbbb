#include <gtest/gtest.h>

#include <numeric>

#include "monoburn/catalog.hpp"
#include "oracles.hpp"

using namespace monoburn;

namespace {

Group cyclic_table(int n) {
  std::vector<std::vector<Elt>> t(n, std::vector<Elt>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return Group("C" + std::to_string(n), t);
}

}  // namespace

TEST(Group, TrivialGeneratorsGiveTrivialGroup) {
  Group G = Group::from_permutations("one", 3, {});
  EXPECT_EQ(G.order(), 1);
  EXPECT_EQ(G.identity(), 0);
}

TEST(Group, S3FromTranspositionAndThreeCycle) {
  Group G = Group::from_permutations("S3", 3, {{1, 0, 2}, {1, 2, 0}});
  EXPECT_EQ(G.order(), 6);
}

TEST(Group, ExplicitCyclicTable) {
  Group G = cyclic_table(4);
  EXPECT_EQ(G.order(), 4);
  EXPECT_EQ(G.identity(), 0);
  EXPECT_EQ(G.inv(1), 3);
}

TEST(Group, RejectsBadInput) {
  EXPECT_THROW(Group::from_permutations("x", 3, {{0, 0, 1}}), InputError);
  EXPECT_THROW(Group::from_permutations("x", 3, {{0, 1}}), InputError);
  EXPECT_THROW(Group::from_permutations("S4", 4, {{1, 0, 2, 3}, {1, 2, 3, 0}}, 10), InputError);
  // a Latin square that is not associative
  std::vector<std::vector<Elt>> t = {{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}};
  EXPECT_THROW(Group("bad", t), InputError);
  EXPECT_THROW(Group("bad", {{0, 1}, {0, 1}}), InputError);
}

TEST(Group, CatalogOrdersMatchClosureOracle) {
  for (const auto& e : catalog()) {
    GroupPtr G = catalog_group(e.name);
    EXPECT_EQ(G->order(), oracle::closure_order(e.degree, e.generators)) << e.name;
    for (Elt a = 0; a < G->order(); ++a) {
      EXPECT_EQ(G->mul(a, G->inv(a)), G->identity());
      EXPECT_EQ(G->mul(G->identity(), a), a);
    }
  }
}

TEST(Group, SubgroupCounts) {
  EXPECT_EQ(all_subgroups(*catalog_group("C2")).size(), 2u);
  EXPECT_EQ(all_subgroups(*catalog_group("S3")).size(), 6u);
  EXPECT_EQ(all_subgroups(*catalog_group("Q8")).size(), 6u);
}

TEST(Group, SubgroupsMatchOracleAndOrdering) {
  for (const char* name : {"C4", "V4", "S3", "D8", "Q8", "C2^3", "A4", "D12"}) {
    GroupPtr G = catalog_group(name);
    auto subs = all_subgroups(*G);
    auto want = oracle::subgroups(*G);
    ASSERT_EQ(subs.size(), want.size()) << name;
    for (size_t i = 0; i < subs.size(); ++i) {
      EXPECT_TRUE(want.count(subs[i].elems));
      EXPECT_EQ(G->order() % subs[i].size(), 0);
      if (i > 0) { EXPECT_TRUE(subs[i - 1] < subs[i]); }
    }
  }
}

TEST(Group, DoubleCosets) {
  GroupPtr S3 = catalog_group("S3");
  const Group& G = *S3;
  Subgroup all = whole_group(G), one = trivial_subgroup(G);
  EXPECT_EQ(double_cosets(G, all, all), std::vector<Elt>{G.identity()});
  GroupPtr C2 = catalog_group("C2");
  Subgroup t2 = trivial_subgroup(*C2);
  EXPECT_EQ(double_cosets(*C2, t2, t2).size(), 2u);
  Subgroup T;
  for (const auto& s : all_subgroups(G))
    if (s.size() == 2) {
      T = s;
      break;
    }
  auto reps = double_cosets(G, T, T);
  ASSERT_EQ(reps.size(), 2u);
  std::vector<int> sizes;
  for (Elt g : reps) {
    std::set<Elt> dc;
    for (Elt a : T.elems)
      for (Elt b : T.elems) dc.insert(G.mul(G.mul(a, g), b));
    sizes.push_back(static_cast<int>(dc.size()));
  }
  std::sort(sizes.begin(), sizes.end());
  EXPECT_EQ(sizes, (std::vector<int>{2, 4}));
  (void)one;
}

TEST(Group, DoubleCosetsPartitionEveryPair) {
  for (const char* name : {"S3", "D8", "Q8", "A4"}) {
    GroupPtr Gp = catalog_group(name);
    const Group& G = *Gp;
    auto subs = all_subgroups(G);
    for (const auto& U : subs)
      for (const auto& V : subs) {
        std::vector<int> hit(G.order(), 0);
        for (Elt g : double_cosets(G, U, V)) {
          std::set<Elt> dc;
          for (Elt a : U.elems)
            for (Elt b : V.elems) dc.insert(G.mul(G.mul(a, g), b));
          for (Elt x : dc) ++hit[x];
        }
        for (int h : hit) ASSERT_EQ(h, 1) << name;
      }
  }
}

TEST(Group, ConjugationAndNormalizers) {
  for (const char* name : {"S3", "D8", "A4"}) {
    GroupPtr Gp = catalog_group(name);
    const Group& G = *Gp;
    for (const auto& U : all_subgroups(G)) {
      for (Elt g = 0; g < G.order(); ++g)
        for (Elt h = 0; h < G.order(); ++h)
          EXPECT_EQ(conjugate(G, g, conjugate(G, h, U)), conjugate(G, G.mul(g, h), U));
      Subgroup N = normalizer(G, U);
      EXPECT_TRUE(is_subset(U, N));
    }
    // normal subgroups have the whole group as normalizer
    EXPECT_EQ(normalizer(G, whole_group(G)).size(), G.order());
    EXPECT_EQ(normalizer(G, trivial_subgroup(G)).size(), G.order());
  }
}

TEST(Group, GSetOrbitsAndStabilizers) {
  GroupPtr Gp = catalog_group("S3");
  const Group& G = *Gp;
  // natural action on three letters
  std::vector<int> t(G.order() * 3);
  for (Elt g = 0; g < G.order(); ++g)
    for (int x = 0; x < 3; ++x) t[g * 3 + x] = G.permutations()[g][x];
  GSet X(Gp, 3, t);
  EXPECT_EQ(orbits(X).size(), 1u);
  // regular action
  std::vector<int> r(G.order() * G.order());
  for (Elt g = 0; g < G.order(); ++g)
    for (Elt x = 0; x < G.order(); ++x) r[g * G.order() + x] = G.mul(g, x);
  GSet R(Gp, G.order(), r);
  EXPECT_EQ(stabilizer(R, 3).size(), 1);
  for (const GSet* S : {&X, &R})
    for (const auto& orb : orbits(*S))
      for (int x : orb) EXPECT_EQ(static_cast<int>(orb.size()) * stabilizer(*S, x).size(), G.order());
  EXPECT_THROW(stabilizer(X, 7), InputError);
  EXPECT_THROW(GSet(Gp, 3, std::vector<int>(G.order() * 3, 0)), InputError);
}

TEST(Group, DirectProductAndEmbedding) {
  GroupPtr S3 = catalog_group("S3"), C2 = catalog_group("C2");
  Group P = direct_product(*S3, *C2);
  EXPECT_EQ(P.order(), 12);
  EXPECT_EQ(P.mul(3 * 2 + 1, 3 * 2 + 1), S3->mul(3, 3) * 2 + C2->mul(1, 1));
  for (const auto& U : all_subgroups(*S3)) {
    Embedding e = subgroup_embedding(S3, U);
    EXPECT_EQ(e.sub->order(), U.size());
    for (Elt a = 0; a < e.sub->order(); ++a) {
      EXPECT_EQ(e.preimage(e(a)), a);
      for (Elt b = 0; b < e.sub->order(); ++b) EXPECT_EQ(e(e.sub->mul(a, b)), S3->mul(e(a), e(b)));
    }
  }
}
