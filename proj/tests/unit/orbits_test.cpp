#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace wonderful;
using oracle::group;

namespace {

const SubsetD kEmpty{};

OrbitLabel orbit(const WeylGroup& g, SubsetD I, WeylElement x, WeylElement w) { return make_orbit(g, I, x, w); }

}  // namespace

TEST(Orbits, Dimension) {
  const auto& a2 = group('A', 2);
  EXPECT_EQ(dimension(a2, orbit(a2, SubsetD::full(2), a2.identity(), a2.longest())), 8);
  const auto& a1 = group('A', 1);
  EXPECT_EQ(dimension(a1, orbit(a1, kEmpty, a1.longest(), a1.identity())), 0);
  EXPECT_EQ(dimension(a1, orbit(a1, SubsetD::full(1), a1.identity(), a1.longest())), 3);
}

TEST(Orbits, LabelValidation) {
  const auto& a1 = group('A', 1);
  EXPECT_THROW(make_orbit(a1, SubsetD::full(1), a1.generator(0), a1.identity()), DomainError);
  const auto z = orbit(a1, SubsetD::full(1), a1.identity(), a1.longest());
  EXPECT_EQ(to_string(a1, z), "[{1}; e; s1]");
}

TEST(Orbits, Census) {
  EXPECT_EQ(all_orbits(group('A', 1)).size(), 6u);
  EXPECT_EQ(all_orbits(group('A', 2)).size(), 78u);
  EXPECT_EQ(all_orbits(group('B', 2)).size(), 136u);
  EXPECT_EQ(orbit_count(group('B', 2)), 136u);
  EXPECT_EQ(orbit_count(group('G', 2)), 300u);
  EXPECT_THROW(OrbitPoset(group('B', 3)), DomainError);
}

TEST(Orbits, ClosureExamples) {
  const auto& a1 = group('A', 1);
  const auto e = a1.identity();
  for (const auto& z : all_orbits(a1)) EXPECT_TRUE(closure_leq(a1, z, z));
  EXPECT_TRUE(closure_leq(a1, orbit(a1, kEmpty, e, e), orbit(a1, SubsetD::full(1), e, e)));
  EXPECT_FALSE(closure_leq(a1, orbit(a1, SubsetD::full(1), e, e), orbit(a1, kEmpty, e, a1.longest())));
}

TEST(Orbits, ClosureMatchesLiteralCriterion) {
  for (char t : {'A', 'B'}) {
    for (int r : {1, 2}) {
      if (t == 'B' && r == 1) continue;
      const auto& g = group(t, r);
      const auto orbits = all_orbits(g);
      for (const auto& a : orbits)
        for (const auto& b : orbits)
          EXPECT_EQ(closure_leq(g, a, b), oracle::closure_brute(g, a, b))
              << to_string(g, a) << " <= " << to_string(g, b);
    }
  }
}

TEST(Orbits, ClosureWitnessesAreValid) {
  const auto& g = group('A', 2);
  for (const auto& a : all_orbits(g)) {
    for (const auto& b : all_orbits(g)) {
      const auto ws = closure_witnesses(g, a, b);
      EXPECT_EQ(!ws.empty(), closure_leq(g, a, b));
      for (const auto& [u, v] : ws) {
        EXPECT_TRUE(g.in_parabolic(u, a.I));
        EXPECT_TRUE(g.in_parabolic(v, b.I) && g.is_min_coset_rep(v, a.I));
        EXPECT_EQ(g.length(g.multiply(b.w, v)), g.length(b.w) + g.length(v));
      }
    }
  }
}

TEST(OrbitPoset, OrderAndCovers) {
  const auto& g = group('A', 2);
  const OrbitPoset P(g);
  ASSERT_EQ(P.size(), 78u);
  EXPECT_EQ(P.label(P.top()), orbit(g, SubsetD::full(2), g.identity(), g.longest()));
  EXPECT_EQ(P.label(P.bottom()), orbit(g, kEmpty, g.longest(), g.identity()));
  for (std::size_t j = 0; j < P.size(); ++j) {
    EXPECT_EQ(P.index_of(P.label(j)), j);
    for (std::size_t i = 0; i < P.size(); ++i) {
      EXPECT_EQ(P.leq(i, j), closure_leq(g, P.label(i), P.label(j)));
      EXPECT_EQ(P.up_set(i).test(j), P.leq(i, j));
    }
    // Covers by brute force: i < j with nothing strictly between.
    std::vector<std::size_t> covers;
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (i == j || !P.leq(i, j)) continue;
      bool between = false;
      for (std::size_t k = 0; k < P.size() && !between; ++k)
        between = k != i && k != j && P.leq(i, k) && P.leq(k, j);
      if (!between) covers.push_back(i);
    }
    EXPECT_EQ(P.covers(j), covers);
  }
}

TEST(OrbitPoset, CoversDropDimensionByOne) {
  for (char t : {'A', 'B', 'G'}) {
    const auto& g = group(t, 2);
    const OrbitPoset P(g);
    for (std::size_t j = 0; j < P.size(); ++j)
      for (auto i : P.covers(j)) EXPECT_EQ(P.dimension(i) + 1, P.dimension(j)) << t;
  }
}

TEST(Orbits, ComponentsInXJ) {
  const auto& a1 = group('A', 1);
  const auto e = a1.identity(), s1 = a1.generator(0);
  const auto z = orbit(a1, SubsetD::full(1), e, e);
  EXPECT_EQ(components_in_XJ(a1, z, z.I), std::vector<OrbitLabel>{z});
  EXPECT_EQ(components_in_XJ(a1, z, kEmpty),
            (std::vector<OrbitLabel>{orbit(a1, kEmpty, e, e), orbit(a1, kEmpty, s1, s1)}));
  EXPECT_THROW(components_in_XJ(a1, orbit(a1, kEmpty, e, e), SubsetD::full(1)), DomainError);

  const auto& a2 = group('A', 2);
  EXPECT_EQ(components_in_XJ(a2, orbit(a2, SubsetD::full(2), a2.identity(), a2.longest()), kEmpty),
            std::vector<OrbitLabel>{orbit(a2, kEmpty, a2.identity(), a2.longest())});
}

TEST(Orbits, SchubertComponents) {
  const auto& a1 = group('A', 1);
  const auto e = a1.identity(), s1 = a1.generator(0);
  EXPECT_EQ(schubert_components_in_Y(a1, orbit(a1, kEmpty, e, s1)), (std::vector<SchubertPair>{{s1, s1}}));
  EXPECT_EQ(schubert_components_in_Y(a1, orbit(a1, SubsetD::full(1), e, e)),
            (std::vector<SchubertPair>{{e, s1}, {s1, e}}));
  EXPECT_EQ(schubert_components_in_Y(a1, orbit(a1, SubsetD::full(1), e, s1)), (std::vector<SchubertPair>{{s1, s1}}));
  EXPECT_EQ(schubert_components_in_Y(a1, orbit(a1, kEmpty, s1, e)), (std::vector<SchubertPair>{{e, e}}));
}

TEST(Orbits, SchubertComponentsMatchPosetScan) {
  for (char t : {'A', 'B'}) {
    const auto& g = group(t, 2);
    for (const auto& z : all_orbits(g))
      EXPECT_EQ(schubert_components_in_Y(g, z), oracle::schubert_components_brute(g, z)) << to_string(g, z);
  }
}

TEST(OrbitPoset, IntersectClosures) {
  const auto& a1 = group('A', 1);
  const OrbitPoset P(a1);
  const auto e = a1.identity(), s1 = a1.generator(0);
  EXPECT_EQ(P.intersect_closures(orbit(a1, kEmpty, e, e), orbit(a1, kEmpty, s1, s1)),
            std::vector<OrbitLabel>{orbit(a1, kEmpty, s1, e)});
  const auto big = orbit(a1, SubsetD::full(1), e, s1);
  const auto small = orbit(a1, kEmpty, e, e);
  EXPECT_EQ(P.intersect_closures(small, big), std::vector<OrbitLabel>{small});

  const auto& a2 = group('A', 2);
  const OrbitPoset Q(a2);
  for (std::size_t i = 0; i < Q.size(); ++i)
    for (std::size_t j = 0; j < Q.size(); ++j) EXPECT_FALSE(Q.intersect_closures(Q.label(i), Q.label(j)).empty());
}
