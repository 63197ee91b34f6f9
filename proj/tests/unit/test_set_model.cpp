#include <gtest/gtest.h>

#include <functional>

#include "dissecta/error.hpp"
#include "dissecta/set_model.hpp"
#include "generators.hpp"
#include "oracles.hpp"

using namespace dissecta;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return Errc::internal;
}

SetMask bits(std::initializer_list<int> pts) {
  SetMask m = 0;
  for (int p : pts) m |= SetMask{1} << p;
  return m;
}

// Ground 0..5, one subspace {0,1}, chambers {2,3} and {4,5}.
SetModel segment() {
  SetModel m;
  for (int i = 0; i < 6; ++i) m.ground.push_back(std::to_string(i + 1));
  m.subspaces = {bits({0, 1})};
  m.refinement = {m.full(), bits({0, 1})};
  m.chambers = {bits({2, 3}), bits({4, 5})};
  return m;
}

}  // namespace

TEST(SetModel, SegmentBalances) {
  const auto r = set_oracle_check(segment());
  EXPECT_EQ(r.lhs, 4);
  EXPECT_EQ(r.rhs, 4);
  EXPECT_TRUE(r.equal);
  ASSERT_TRUE(r.lattice_size);
  EXPECT_TRUE(r.ji_contained.value());
  const auto w = set_oracle_check(segment(), std::vector<std::int64_t>{1, 2, 3, 4, 5, 6});
  EXPECT_EQ(w.lhs, 3 + 4 + 5 + 6);
  EXPECT_TRUE(w.equal);
}

TEST(SetModel, ValidationErrors) {
  SetModel m = segment();
  m.refinement = {bits({0, 1})};
  EXPECT_EQ(code_of([&] { validate(m); }), Errc::invalid_refinement);
  m = segment();
  m.refinement.push_back(bits({2}));  // outside the union of subspaces
  EXPECT_EQ(code_of([&] { validate(m); }), Errc::invalid_refinement);
  m = segment();
  m.chambers = {bits({2, 3})};
  EXPECT_EQ(code_of([&] { validate(m); }), Errc::chambers_not_partition);
  m = segment();
  m.chambers = {bits({1, 2, 3}), bits({4, 5})};
  EXPECT_EQ(code_of([&] { validate(m); }), Errc::chambers_not_partition);
  m = segment();
  m.chambers = {bits({2, 3, 4}), bits({4, 5})};
  EXPECT_EQ(code_of([&] { validate(m); }), Errc::chambers_not_partition);
  m = segment();
  EXPECT_EQ(code_of([&] { set_oracle_check(m, std::vector<std::int64_t>{1}); }),
            Errc::dimension_mismatch);
  // two subspaces whose intersection is not a union of refinement elements
  SetModel x;
  for (int i = 0; i < 4; ++i) x.ground.push_back(std::to_string(i));
  x.subspaces = {bits({0, 1}), bits({1, 2})};
  x.refinement = {x.full(), bits({0, 1}), bits({1, 2})};
  x.chambers = {bits({3})};
  EXPECT_EQ(code_of([&] { validate(x); }), Errc::invalid_refinement);
  x.refinement.push_back(bits({1}));
  EXPECT_NO_THROW(validate(x));
}

TEST(SetModel, TooLarge) {
  SetModel m;
  for (int i = 0; i < 65; ++i) m.ground.push_back(std::to_string(i));
  EXPECT_EQ(code_of([&] { validate(m); }), Errc::too_large);
}

class RandomSetModel : public ::testing::TestWithParam<int> {};

TEST_P(RandomSetModel, IdentityHoldsAndMatchesNaive) {
  dtest::Rng rng(static_cast<unsigned>(123 + GetParam()));
  const SetModel m = dtest::random_set_model(rng, 10);
  ASSERT_NO_THROW(validate(m));
  std::vector<std::int64_t> w(m.ground.size());
  for (auto& x : w) x = dtest::uniform(rng, -5, 5);
  const auto r = set_oracle_check(m, w);
  const auto naive = dtest::naive_dissection(m, w);
  EXPECT_EQ(r.lhs, naive.lhs);
  EXPECT_EQ(r.rhs, naive.rhs);
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.ji_contained.value_or(false));
  const auto card = set_oracle_check(m);
  EXPECT_TRUE(card.equal);
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomSetModel, ::testing::Range(0, 60));
