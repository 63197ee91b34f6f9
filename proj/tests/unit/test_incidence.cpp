#include <gtest/gtest.h>

#include <cmath>

#include "dissecta/error.hpp"
#include "dissecta/incidence.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dissecta;

TEST(Incidence, BooleanMobiusIsSignedByRank) {
  const PosetRef p = share(dtest::boolean_poset(4));
  const auto mu = mobius(p);
  for (Index a = 0; a < p->size(); ++a) {
    for (Index b = 0; b < p->size(); ++b) {
      if (!p->leq(a, b)) {
        EXPECT_EQ(mu(a, b), 0);
        continue;
      }
      const int gap = static_cast<int>(p->interval(a, b).size());
      const int r = static_cast<int>(std::log2(gap));
      EXPECT_EQ(mu(a, b), r % 2 == 0 ? 1 : -1);
    }
  }
}

TEST(Incidence, ChainAndM3) {
  const PosetRef c = share(dtest::chain_poset(5));
  const auto mu = mobius(c);
  EXPECT_EQ(mu(0, 0), 1);
  EXPECT_EQ(mu(0, 1), -1);
  EXPECT_EQ(mu(0, 2), 0);
  const PosetRef m3 = share(dtest::m3_poset());
  EXPECT_EQ(mobius(m3)(m3->index("0"), m3->index("1")), 2);
  const auto to_top = mobius_to(*m3, m3->index("1"));
  EXPECT_EQ(to_top[m3->index("0")], 2);
  EXPECT_EQ(to_top[m3->index("a")], -1);
}

TEST(Incidence, SetRejectsIncomparable) {
  const PosetRef p = share(dtest::m3_poset());
  IncidenceFunction f(p);
  try {
    f.set(p->index("a"), p->index("b"), 3);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_comparable);
  }
  EXPECT_EQ(f(p->index("a"), p->index("b")), 0);
}

TEST(Incidence, ConvolveRejectsForeignHost) {
  const PosetRef p = share(dtest::m3_poset());
  const PosetRef q = share(dtest::m3_poset());
  try {
    convolve(IncidenceFunction::zeta(p), IncidenceFunction::zeta(q));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::host_mismatch);
  }
}

class RandomMobius : public ::testing::TestWithParam<int> {};

TEST_P(RandomMobius, MatchesOracleAndInvertsZeta) {
  dtest::Rng rng(static_cast<unsigned>(1000 + GetParam()));
  const std::size_t n = static_cast<std::size_t>(dtest::uniform(rng, 1, 40));
  const PosetRef p = share(dtest::random_poset(rng, n, 0.2));
  const auto mu = mobius(p);
  const auto ref = dtest::naive_mobius(*p);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) ASSERT_EQ(mu(a, b), ref[a][b]) << a << "," << b;
  }
  const auto delta = IncidenceFunction::delta(p);
  const auto zeta = IncidenceFunction::zeta(p);
  EXPECT_TRUE(convolve(zeta, mu) == delta);
  EXPECT_TRUE(convolve(mu, zeta) == delta);

  const Index t = static_cast<Index>(dtest::uniform(rng, 0, static_cast<int>(n) - 1));
  const auto col = mobius_to(*p, t);
  for (Index a = 0; a < n; ++a) EXPECT_EQ(col[a], ref[a][t]);

  // vector-valued inversion in both directions
  ValueTable f(n, Vector(3));
  for (auto& v : f) {
    for (auto& x : v) x = dtest::uniform(rng, -9, 9);
  }
  for (Direction dir : {Direction::down, Direction::up}) {
    const auto g = zeta_transform(*p, f, dir);
    for (Index x = 0; x < n; ++x) {
      Vector s(3, 0);
      for (Index c = 0; c < n; ++c) {
        const bool in = dir == Direction::down ? p->leq(c, x) : p->leq(x, c);
        if (!in) continue;
        for (int k = 0; k < 3; ++k) s[k] += f[c][k];
      }
      EXPECT_EQ(g[x], s);
    }
    EXPECT_EQ(mobius_invert(mu, g, dir), f);
    EXPECT_EQ(mobius_invert(p, g, dir), f);
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMobius, ::testing::Range(0, 30));
