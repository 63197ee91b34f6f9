#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "dissecta/error.hpp"
#include "dissecta/lattice.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dissecta;

namespace {

std::set<std::vector<Index>> as_set(std::vector<std::vector<Index>> v) {
  for (auto& s : v) std::sort(s.begin(), s.end());
  return {v.begin(), v.end()};
}

}  // namespace

TEST(Lattice, NamedStructureFlags) {
  struct Case {
    Poset p;
    bool distributive;
    bool modular;
  };
  std::vector<Case> cases;
  cases.push_back({dtest::boolean_poset(2), true, true});
  cases.push_back({dtest::boolean_poset(3), true, true});
  cases.push_back({dtest::boolean_poset(4), true, true});
  cases.push_back({dtest::chain_poset(1), true, true});
  cases.push_back({dtest::chain_poset(6), true, true});
  cases.push_back({dtest::n5_poset(), false, false});
  cases.push_back({dtest::m3_poset(), false, true});
  for (auto& c : cases) {
    const Lattice l = dtest::lattice_of(c.p);
    const auto f = structure_check(l);
    EXPECT_EQ(f.distributive, c.distributive);
    EXPECT_EQ(f.modular, c.modular);
    EXPECT_EQ(f.cancellation, f.distributive);
    EXPECT_EQ(distributivity_witness(l).has_value(), !c.distributive);
    EXPECT_EQ(cancellation_witness(l).has_value(), !c.distributive);
    EXPECT_EQ(l.structure().distributive, c.distributive);
  }
}

TEST(Lattice, WitnessesAreGenuine) {
  const Lattice l = dtest::lattice_of(dtest::n5_poset());
  const auto d = distributivity_witness(l);
  ASSERT_TRUE(d);
  const auto [a, b, c] = *d;
  EXPECT_NE(l.meet(a, l.join(b, c)), l.join(l.meet(a, b), l.meet(a, c)));
  const auto w = cancellation_witness(l);
  ASSERT_TRUE(w);
  const auto [x, y, z] = *w;
  EXPECT_NE(x, y);
  EXPECT_EQ(l.join(z, x), l.join(z, y));
  EXPECT_EQ(l.meet(z, x), l.meet(z, y));
}

TEST(Lattice, RejectsNonLattices) {
  const std::vector<std::pair<std::string, std::string>> covers = {
      {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}};
  try {
    dtest::lattice_of(Poset::build({"a", "b", "c", "d"}, covers, PairMode::covers));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_a_lattice);
  }
}

TEST(Lattice, JoinIrreduciblesOfB3AndN5) {
  const Lattice b3 = dtest::lattice_of(dtest::boolean_poset(3));
  const auto ji = join_irreducibles(b3);
  EXPECT_EQ(ji.elements.size(), 4u);  // bottom plus three atoms
  EXPECT_TRUE(ji.contains(b3.bottom()));
  EXPECT_FALSE(ji.contains(b3.top()));
  const Lattice n5 = dtest::lattice_of(dtest::n5_poset());
  const auto jn = join_irreducibles(n5);
  EXPECT_EQ(jn.elements.size(), 4u);  // 0, a, b, c
  EXPECT_EQ(jn.lower_cover.at(n5.poset()->index("b")), n5.poset()->index("a"));
}

TEST(Lattice, PrimeIdealsOfB3) {
  const Lattice l = dtest::lattice_of(dtest::boolean_poset(3));
  const auto ideals = prime_ideals(l);
  EXPECT_EQ(ideals.size(), 3u);  // complements of the atoms
  EXPECT_EQ(as_set(ideals), as_set(dtest::prime_ideals_by_downsets(l)));
  for (const auto& i : ideals) EXPECT_TRUE(is_prime_ideal(l, i));
  const Index top = l.top();
  const std::vector<Index> filt = principal_filter(l, l.poset()->index("{0}"));
  EXPECT_TRUE(is_prime_filter(l, filt));
  EXPECT_EQ(principal_ideal(l, top).size(), 8u);
  EXPECT_FALSE(is_prime_ideal(l, principal_ideal(l, top)));
}

TEST(Lattice, SeparationNeedsDistributivity) {
  const Lattice m3 = dtest::lattice_of(dtest::m3_poset());
  try {
    separating_prime_ideal(m3, 1, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::not_distributive);
  }
}

class RandomSublattice : public ::testing::TestWithParam<int> {};

TEST_P(RandomSublattice, PropertiesAgainstOracles) {
  dtest::Rng rng(static_cast<unsigned>(500 + GetParam()));
  const auto masks = dtest::random_sublattice_masks(rng, 6, 24);
  const Lattice l = dtest::lattice_of(dtest::mask_poset(masks));
  const Poset& p = *l.poset();
  const Index n = static_cast<Index>(l.size());
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      ASSERT_EQ(l.join(a, b), dtest::brute_join(p, a, b).value());
      ASSERT_EQ(l.meet(a, b), dtest::brute_meet(p, a, b).value());
      EXPECT_EQ(masks[l.join(a, b)], masks[a] | masks[b]);
      EXPECT_EQ(masks[l.meet(a, b)], masks[a] & masks[b]);
    }
  }
  const auto f = structure_check(l);
  EXPECT_TRUE(f.distributive);
  EXPECT_TRUE(f.modular);
  EXPECT_TRUE(f.cancellation);

  // x is the join of the join-irreducibles below it
  const auto ji = join_irreducibles(l);
  for (Index x = 0; x < n; ++x) {
    std::vector<Index> below;
    for (Index j : ji.elements) {
      if (p.leq(j, x)) below.push_back(j);
    }
    EXPECT_EQ(l.join_all(below), x);
  }
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) EXPECT_TRUE(interval_maps_inverse(l, a, b));
  }

  const auto ideals = prime_ideals(l);
  EXPECT_EQ(as_set(ideals), as_set(dtest::prime_ideals_by_downsets(l)));
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b) {
      if (a == b) continue;
      const auto s = separating_prime_ideal(l, a, b);
      EXPECT_TRUE(is_prime_ideal(l, s));
      const bool ha = std::find(s.begin(), s.end(), a) != s.end();
      const bool hb = std::find(s.begin(), s.end(), b) != s.end();
      EXPECT_NE(ha, hb);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSublattice, ::testing::Range(0, 25));

class RandomPosetLattice : public ::testing::TestWithParam<int> {};

// Random posets rarely are lattices; whenever one is, its flags must still
// agree, and whenever one is not, the constructor must say so.
TEST_P(RandomPosetLattice, ConstructionAgreesWithBruteForce) {
  dtest::Rng rng(static_cast<unsigned>(900 + GetParam()));
  const std::size_t n = static_cast<std::size_t>(dtest::uniform(rng, 2, 9));
  Poset p = dtest::random_poset_with_bottom(rng, n, 0.5);
  bool lattice = true;
  for (Index a = 0; a < n && lattice; ++a) {
    for (Index b = 0; b < n && lattice; ++b) {
      lattice = dtest::brute_join(p, a, b).has_value() && dtest::brute_meet(p, a, b).has_value();
    }
  }
  if (!lattice) {
    EXPECT_THROW(dtest::lattice_of(std::move(p)), Error);
    return;
  }
  const Lattice l = dtest::lattice_of(std::move(p));
  const auto f = structure_check(l);
  EXPECT_EQ(f.distributive, f.cancellation);
  if (f.distributive) EXPECT_TRUE(f.modular);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomPosetLattice, ::testing::Range(0, 60));
