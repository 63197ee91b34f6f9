#include <gtest/gtest.h>

#include "dissecta/error.hpp"
#include "dissecta/zlinalg.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dissecta;

namespace {

std::vector<BigInt> row_of(const IntegerMatrix& a, std::size_t r) {
  return {a.row(r).begin(), a.row(r).end()};
}

}  // namespace

TEST(Zlinalg, DeterminantSmall) {
  const IntegerMatrix a = {{2, 1}, {7, 4}};
  EXPECT_EQ(determinant(a), 1);
  const IntegerMatrix s = {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}};
  EXPECT_EQ(determinant(s), 0);
  EXPECT_THROW(determinant(IntegerMatrix(2, 3)), Error);
}

TEST(Zlinalg, KnownSmithForm) {
  const IntegerMatrix a = {{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const auto nf = normal_form(a, NormalFormKind::smith);
  EXPECT_EQ(nf.form(0, 0), 2);
  EXPECT_EQ(nf.form(1, 1), 6);
  EXPECT_EQ(nf.form(2, 2), 12);
  EXPECT_EQ(smith_invariants(a), (std::vector<BigInt>{2, 6, 12}));
}

TEST(Zlinalg, KnownHermiteForm) {
  const IntegerMatrix a = {{2, 3}, {4, 5}};
  const auto nf = normal_form(a, NormalFormKind::hermite);
  const IntegerMatrix expect = {{2, 0}, {0, 1}};
  EXPECT_EQ(nf.form, expect);
  EXPECT_EQ(nf.left * a, nf.form);
}

TEST(Zlinalg, QuotientOfZ2) {
  // <(2,0), (0,3)> has quotient Z/6 written as one invariant factor
  const IntegerMatrix g = {{2, 0}, {0, 3}};
  const auto q = quotient_invariants(g, 2);
  EXPECT_EQ(q.free_rank, 0u);
  EXPECT_EQ(q.torsion, (std::vector<BigInt>{6}));
  const auto q1 = quotient_invariants(IntegerMatrix{{1, 1, 0}}, 3);
  EXPECT_EQ(q1.free_rank, 2u);
  EXPECT_TRUE(q1.torsion.empty());
  EXPECT_EQ(quotient_invariants(IntegerMatrix(0, 3), 3).free_rank, 3u);
}

TEST(Zlinalg, MembershipBasics) {
  const IntegerMatrix g = {{2, 0}, {0, 3}};
  const std::vector<BigInt> in = {4, -3};
  const std::vector<BigInt> out = {1, 0};
  const auto m = subgroup_membership(g, in);
  ASSERT_TRUE(m.member);
  EXPECT_EQ(m.coefficients, (std::vector<BigInt>{2, -1}));
  EXPECT_FALSE(subgroup_membership(g, out).member);
  const std::vector<BigInt> bad = {1, 2, 3};
  EXPECT_THROW(subgroup_membership(g, bad), Error);
}

TEST(Zlinalg, HermiteBasisIncremental) {
  HermiteBasis b(3);
  const std::vector<std::int64_t> r1 = {2, 4, 0};
  const std::vector<std::int64_t> r2 = {3, 5, 1};
  b.insert(r1);
  b.insert(r2);
  b.insert(r1);  // duplicate adds nothing
  EXPECT_EQ(b.rank(), 2u);
  const std::vector<std::int64_t> sum = {5, 9, 1};
  const std::vector<std::int64_t> half = {1, 2, 0};
  EXPECT_TRUE(b.contains(sum));
  EXPECT_FALSE(b.contains(half));
  const IntegerMatrix m = b.matrix();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    EXPECT_TRUE(b.contains(row_of(m, r)));
  }
}

class RandomNormalForm : public ::testing::TestWithParam<int> {};

TEST_P(RandomNormalForm, ReconstructionAndOracles) {
  dtest::Rng rng(static_cast<unsigned>(31 + GetParam()));
  const std::size_t r = static_cast<std::size_t>(dtest::uniform(rng, 1, 6));
  const std::size_t c = static_cast<std::size_t>(dtest::uniform(rng, 1, 6));
  const IntegerMatrix a = dtest::random_matrix(rng, r, c, dtest::coin(rng) ? 3 : 1000);

  const auto h = normal_form(a, NormalFormKind::hermite);
  EXPECT_EQ(h.left * a, h.form);
  EXPECT_EQ(BigInt(abs(dtest::rational_determinant(h.left))), 1);
  // echelon with positive pivots, reduced above
  std::size_t last = 0;
  bool seen_zero = false;
  for (std::size_t i = 0; i < h.form.rows(); ++i) {
    std::size_t p = 0;
    while (p < c && h.form(i, p) == 0) ++p;
    if (p == c) {
      seen_zero = true;
      continue;
    }
    EXPECT_FALSE(seen_zero);
    if (i > 0) EXPECT_GT(p, last);
    last = p;
    EXPECT_GT(h.form(i, p), 0);
    for (std::size_t k = 0; k < i; ++k) {
      EXPECT_GE(h.form(k, p), 0);
      EXPECT_LT(h.form(k, p), h.form(i, p));
    }
  }

  const auto s = normal_form(a, NormalFormKind::smith);
  EXPECT_EQ(s.left * a * s.right, s.form);
  EXPECT_EQ(BigInt(abs(dtest::rational_determinant(s.left))), 1);
  EXPECT_EQ(BigInt(abs(dtest::rational_determinant(s.right))), 1);
  EXPECT_EQ(smith_invariants(a), dtest::determinantal_invariants(a));
  if (r == c) EXPECT_EQ(determinant(a), dtest::rational_determinant(a));
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomNormalForm, ::testing::Range(0, 60));

class RandomMembership : public ::testing::TestWithParam<int> {};

TEST_P(RandomMembership, AgreesWithSearch) {
  dtest::Rng rng(static_cast<unsigned>(3100 + GetParam()));
  const std::size_t m = static_cast<std::size_t>(dtest::uniform(rng, 1, 3));
  const std::size_t n = static_cast<std::size_t>(dtest::uniform(rng, 1, 4));
  const IntegerMatrix g = dtest::random_matrix(rng, m, n, 4);
  std::vector<BigInt> v(n, 0);
  if (dtest::coin(rng)) {
    for (std::size_t i = 0; i < m; ++i) {
      const long k = dtest::uniform(rng, -2, 2);
      for (std::size_t j = 0; j < n; ++j) v[j] += k * g(i, j);
    }
  } else {
    for (auto& x : v) x = dtest::uniform(rng, -6, 6);
  }
  const auto lib = subgroup_membership(g, v);
  const auto brute = dtest::brute_membership(g, v, 6);
  if (brute) EXPECT_TRUE(lib.member);
  if (lib.member) {
    for (std::size_t j = 0; j < n; ++j) {
      BigInt s = 0;
      for (std::size_t i = 0; i < m; ++i) s += lib.coefficients[i] * g(i, j);
      EXPECT_EQ(s, v[j]);
    }
  }
  HermiteBasis b(n);
  for (std::size_t i = 0; i < m; ++i) b.insert(g.row(i));
  EXPECT_EQ(b.contains(v), lib.member);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMembership, ::testing::Range(0, 80));
