#include <gtest/gtest.h>

#include <bit>
#include <functional>

#include "dissecta/error.hpp"
#include "dissecta/valuation.hpp"
#include "generators.hpp"

using namespace dissecta;

namespace {

// Prime filters {y : j <= y} for j in ji(L) give valuations whose values on a
// vector decide membership in N(L) for distributive L.
bool killed_by_filters(const Lattice& l, const GroupVector& v) {
  const auto ji = join_irreducibles(l);
  for (Index j : ji.elements) {
    std::int64_t s = 0;
    for (Index b = 0; b < l.size(); ++b) {
      if (l.leq(j, b)) s += v[b];
    }
    if (s != 0) return false;
  }
  return true;
}

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::internal;
}

}  // namespace

TEST(Valuation, RelationVector) {
  const Lattice l = dtest::lattice_of(dtest::boolean_poset(2));
  const Poset& p = *l.poset();
  const Vector r = relation_vector(l, p.index("{0}"), p.index("{1}"));
  EXPECT_EQ(r[p.index("{}")], 1);
  EXPECT_EQ(r[p.index("{0,1}")], 1);
  EXPECT_EQ(r[p.index("{0}")], -1);
  EXPECT_EQ(r[p.index("{1}")], -1);
  EXPECT_EQ(relation_vector(l, p.index("{}"), p.index("{1}")), Vector(4, 0));
}

TEST(Valuation, InvariantsOfNamedLattices) {
  for (unsigned k : {2u, 3u, 4u}) {
    const auto v = val_invariants(dtest::lattice_of(dtest::boolean_poset(k)));
    EXPECT_EQ(v.free_rank, k + 1);
    EXPECT_TRUE(v.torsion.empty());
    EXPECT_TRUE(v.distributive);
    EXPECT_TRUE(v.match);
  }
  const auto c = val_invariants(dtest::lattice_of(dtest::chain_poset(5)));
  EXPECT_EQ(c.free_rank, 5u);
  const NLPresentation n5(dtest::lattice_of(dtest::n5_poset()));
  EXPECT_EQ(val_invariants(n5).free_rank, 3u);
  EXPECT_TRUE(injectivity_witness(n5).has_value());
  const NLPresentation m3(dtest::lattice_of(dtest::m3_poset()));
  EXPECT_EQ(val_invariants(m3).free_rank, 2u);
  EXPECT_FALSE(val_invariants(m3).distributive);
}

TEST(Valuation, ZaslavskyOnB3) {
  const NLPresentation nl(dtest::lattice_of(dtest::boolean_poset(3)));
  const Poset& p = *nl.host();
  std::vector<Index> m;
  for (const char* id : {"{}", "{0}", "{1}", "{2}", "{0,1,2}"}) m.push_back(p.index(id));
  const auto entries = zaslavsky_check(nl, m);
  ASSERT_EQ(entries.size(), 1u);
  EXPECT_EQ(entries[0].element, p.index("{0,1,2}"));
  EXPECT_TRUE(entries[0].member);
  // u_M(top) = top - 3 atoms + 2 bottom
  EXPECT_EQ(entries[0].u[p.index("{}")], 2);
  EXPECT_EQ(entries[0].u[p.index("{0}")], -1);
}

TEST(Valuation, ZaslavskyErrors) {
  const Lattice b3 = dtest::lattice_of(dtest::boolean_poset(3));
  const Poset& p = *b3.poset();
  const std::vector<Index> missing = {p.index("{}"), p.index("{0}")};
  EXPECT_EQ(code_of([&] { zaslavsky_check(b3, missing); }), Errc::ji_not_contained);
  const Lattice n5 = dtest::lattice_of(dtest::n5_poset());
  const std::vector<Index> all = {0, 1, 2, 3, 4};
  EXPECT_EQ(code_of([&] { zaslavsky_check(n5, all); }), Errc::not_distributive);
}

TEST(Valuation, DefectAndRejection) {
  const Lattice b2 = dtest::lattice_of(dtest::boolean_poset(2));
  const std::vector<Index> all = {0, 1, 2, 3};
  const ValuationTable card = {{0}, {1}, {1}, {2}};
  EXPECT_TRUE(is_valuation(b2, card));
  EXPECT_EQ(valuation_defect(b2, all, card, 3), Vector{0});
  const ValuationTable bad = {{0}, {1}, {1}, {3}};
  EXPECT_FALSE(is_valuation(b2, bad));
  EXPECT_TRUE(valuation_violation(b2, bad).has_value());
  EXPECT_EQ(code_of([&] { valuation_defect(b2, all, bad, 3); }), Errc::not_a_valuation);
  const std::vector<Index> part = {0, 1, 2};
  EXPECT_EQ(code_of([&] { valuation_defect(b2, part, card, 3); }), Errc::unknown_element);
  const ValuationTable short_table = {{0}, {1}};
  EXPECT_EQ(code_of([&] { is_valuation(b2, short_table); }), Errc::dimension_mismatch);
}

TEST(Valuation, InclusionExclusionAndProducts) {
  const Lattice b3 = dtest::lattice_of(dtest::boolean_poset(3));
  const NLPresentation nl(b3);
  const Poset& p = *b3.poset();
  const std::vector<Index> atoms = {p.index("{0}"), p.index("{1}"), p.index("{2}")};
  EXPECT_TRUE(nl.contains(inclusion_exclusion_residual(b3, atoms)));
  const PosetRef& h = b3.poset();
  const auto x = GroupVector::unit(h, atoms[0]) + GroupVector::unit(h, atoms[1]);
  const auto y = GroupVector::unit(h, atoms[1]);
  const auto mp = meet_product(b3, x, y);
  EXPECT_EQ(mp[p.index("{}")], 1);
  EXPECT_EQ(mp[atoms[1]], 1);
  const auto jp = join_product(b3, x, y);
  EXPECT_EQ(jp[p.index("{0,1}")], 1);
  EXPECT_EQ(jp[atoms[1]], 1);
  EXPECT_EQ(code_of([&] { nl.contains(GroupVector::unit(share(dtest::boolean_poset(3)), 0)); }),
            Errc::host_mismatch);
}

class RandomDistributive : public ::testing::TestWithParam<int> {};

TEST_P(RandomDistributive, ValuationModuleIsFreeOnJi) {
  dtest::Rng rng(static_cast<unsigned>(7000 + GetParam()));
  const auto masks = dtest::random_sublattice_masks(rng, 6, 40);
  const Lattice l = dtest::lattice_of(dtest::mask_poset(masks));
  const NLPresentation nl(l);
  const auto ji = join_irreducibles(l);
  const auto inv = val_invariants(nl);
  EXPECT_EQ(inv.free_rank, ji.elements.size());
  EXPECT_TRUE(inv.torsion.empty());
  EXPECT_TRUE(inv.match);
  EXPECT_FALSE(injectivity_witness(nl).has_value());

  // membership agrees with the prime-filter valuations
  for (int t = 0; t < 10; ++t) {
    std::vector<std::int64_t> c(l.size());
    for (auto& x : c) x = dtest::uniform(rng, -2, 2);
    const GroupVector v(l.poset(), c);
    EXPECT_EQ(nl.contains(v), killed_by_filters(l, v));
  }

  const auto m = dtest::random_superset_of_ji(rng, l);
  for (const auto& e : zaslavsky_check(nl, m)) {
    EXPECT_TRUE(e.member);
    EXPECT_TRUE(killed_by_filters(l, e.u));
  }

  // val_coords: x minus its coordinates lies in N(L) and evaluates right on
  // every prime filter
  for (Index x = 0; x < l.size(); ++x) {
    const GroupVector vc = val_coords(l, x);
    for (Index b = 0; b < l.size(); ++b) {
      if (vc[b] != 0) EXPECT_TRUE(ji.contains(b));
    }
    EXPECT_TRUE(nl.contains(GroupVector::unit(l.poset(), x) - vc));
    GroupVector sum_e(l.poset());
    for (Index j : ji.elements) {
      if (l.leq(j, x)) sum_e += e_vector(l, j);
    }
    EXPECT_TRUE(nl.contains(GroupVector::unit(l.poset(), x) - sum_e));
  }

  // cardinality, constants and prime-ideal indicators are valuations with zero defect
  ValuationTable card(l.size());
  for (Index a = 0; a < l.size(); ++a) card[a] = {std::popcount(masks[a])};
  std::vector<ValuationTable> tables = {card, constant_valuation(l, {5, -2})};
  for (const auto& ideal : prime_ideals(l)) tables.push_back(indicator_valuation(l, ideal));
  for (const auto& f : tables) {
    ASSERT_TRUE(is_valuation(l, f));
    for (Index a : m) {
      if (ji.contains(a)) continue;
      const Vector d = valuation_defect(l, m, f, a);
      EXPECT_EQ(d, Vector(f[0].size(), 0));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomDistributive, ::testing::Range(0, 30));
