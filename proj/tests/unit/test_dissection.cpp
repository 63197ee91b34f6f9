#include <gtest/gtest.h>

#include <functional>

#include "dissecta/dissection.hpp"
#include "dissecta/error.hpp"
#include "dissecta/formats.hpp"
#include "generators.hpp"

using namespace dissecta;

namespace {

Arrangement load(const std::string& name) {
  return to_arrangement(parse_poset_document(read_file(std::string(DISSECTA_DATA_DIR) + "/" + name)));
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

/*
  k lines in general position in the plane (alternating chi) or k great
  circles in general position on the sphere (chi 2 on point pairs and the
  sphere, 0 on circles).
*/
Arrangement generic(int k, bool sphere) {
  std::vector<std::string> ids = {"T"};
  std::vector<std::pair<std::string, std::string>> covers;
  std::vector<std::optional<std::int64_t>> chi = {sphere ? 2 : 1};
  std::vector<std::optional<int>> dim = {2};
  for (int i = 0; i < k; ++i) {
    ids.push_back("H" + std::to_string(i));
    covers.emplace_back(ids.back(), "T");
    chi.push_back(sphere ? 0 : -1);
    dim.push_back(1);
  }
  for (int i = 0; i < k; ++i) {
    for (int j = i + 1; j < k; ++j) {
      ids.push_back("P" + std::to_string(i) + "_" + std::to_string(j));
      covers.emplace_back(ids.back(), "H" + std::to_string(i));
      covers.emplace_back(ids.back(), "H" + std::to_string(j));
      chi.push_back(sphere ? 2 : 1);
      dim.push_back(0);
    }
  }
  auto p = share(Poset::build(ids, covers, PairMode::covers));
  std::vector<Index> hs;
  for (int i = 0; i < k; ++i) hs.push_back(p->index("H" + std::to_string(i)));
  // ids were listed in the order chi/dim were filled, so indices line up
  return Arrangement::create(p, chi, dim, std::nullopt, hs);
}

}  // namespace

TEST(Dissection, SphereHasSixChambers) {
  const Arrangement ap = load("sphere.json");
  EXPECT_EQ(ap.size(), 7u);
  EXPECT_EQ(chamber_statistic(ap).sum, 6);
}

TEST(Dissection, PlaneSumAndCount) {
  const Arrangement ap = load("plane.json");
  const auto s = chamber_statistic(ap, 1);
  EXPECT_EQ(s.sum, 18);
  ASSERT_TRUE(s.count);
  EXPECT_EQ(*s.count, 18);
  EXPECT_TRUE(s.integral);
  const auto half = chamber_statistic(ap, 4);
  EXPECT_EQ(*half.count, Rational(9, 2));
  EXPECT_FALSE(half.integral);
  EXPECT_EQ(code_of([&] { chamber_statistic(ap, 0); }), Errc::zero_chamber_chi);
}

TEST(Dissection, TwoLines) {
  const Arrangement ap = load("two_lines.json");
  const auto fc = face_counts(ap, FaceProfile::alternating(2));
  EXPECT_EQ(fc.by_dim.at(0), 1);
  EXPECT_EQ(fc.by_dim.at(1), 4);
  EXPECT_EQ(fc.by_dim.at(2), 4);
  EXPECT_EQ(fc.total, 9);
  const auto prof = FaceProfile::alternating(2);
  EXPECT_EQ(f_polynomial(ap, prof, FConvention::dim).to_string(), "x^2 + 4*x + 4");
  EXPECT_EQ(f_polynomial(ap, prof, FConvention::codim).to_string(), "4*x^2 + 4*x + 1");
  EXPECT_EQ(f_polynomial(ap, prof, FConvention::literal).to_string(), "4*x^2 + 4*x + 1");

  Polynomial2 expect;
  expect.add_term(1, 2, 2);
  expect.add_term(-2, 2, 1);
  expect.add_term(1, 2, 0);
  expect.add_term(-2, 1, 2);
  expect.add_term(2, 1, 1);
  expect.add_term(1, 0, 2);
  EXPECT_TRUE(mobius_polynomial(ap) == expect);

  const auto r = identity_report(ap, FaceIdentity::alternating);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.lhs.to_string(), "4*x^2 + 4*x + 1");
  EXPECT_EQ(r.lhs_at_one, 9);
  EXPECT_TRUE(r.totals_agree);
  EXPECT_EQ(code_of([&] { identity_report(ap, FaceIdentity::sphere); }), Errc::profile_mismatch);
}

TEST(Dissection, TwoCircles) {
  const Arrangement ap = load("two_circles.json");
  const auto fc = face_counts(ap, FaceProfile::alternating(2));
  EXPECT_EQ(fc.by_dim.at(0), 2);
  EXPECT_EQ(fc.by_dim.at(1), 4);
  EXPECT_EQ(fc.by_dim.at(2), 4);
  const auto r = identity_report(ap, FaceIdentity::sphere);
  EXPECT_TRUE(r.equal);
  EXPECT_EQ(r.gamma, 1);
  EXPECT_EQ(r.lhs.to_string(), "8*x^2 + 2");
  EXPECT_EQ(r.lhs_at_one, 10);
  EXPECT_EQ(r.total_faces, 10);
  EXPECT_EQ(code_of([&] { identity_report(ap, FaceIdentity::alternating); }),
            Errc::profile_mismatch);
}

TEST(Dissection, InducedArrangement) {
  const Arrangement ap = load("two_lines.json");
  const Arrangement line = induced(ap, "L1");
  EXPECT_EQ(line.size(), 2u);
  EXPECT_EQ(line.poset()->id(line.top()), "L1");
  // the open line minus a point: two chambers of chi -1
  EXPECT_EQ(chamber_statistic(line).sum, -2);
  EXPECT_EQ(code_of([&] { induced(ap, "nope"); }), Errc::unknown_flat);
}

TEST(Dissection, ValidationErrors) {
  const std::vector<std::pair<std::string, std::string>> none;
  auto two = share(Poset::build({"A", "B"}, none, PairMode::covers));
  EXPECT_EQ(code_of([&] { Arrangement::create(two, {1, 1}); }), Errc::no_unique_top);
  const std::vector<std::pair<std::string, std::string>> cov = {{"A", "B"}};
  auto chain = share(Poset::build({"A", "B"}, cov, PairMode::covers));
  EXPECT_EQ(code_of([&] { Arrangement::create(chain, {1, std::nullopt}); }), Errc::missing_chi);
  EXPECT_EQ(code_of([&] { Arrangement::create(chain, {1}); }), Errc::dimension_mismatch);
  EXPECT_EQ(code_of([&] { Arrangement::create(chain, {1, 1}, {1, std::nullopt}); }),
            Errc::missing_dim);
  EXPECT_EQ(code_of([&] { Arrangement::create(chain, {1, 1}, {2, 1}); }), Errc::dim_not_monotone);
  const Arrangement nodim = Arrangement::create(chain, {1, 1});
  EXPECT_EQ(code_of([&] { face_counts(nodim, FaceProfile::alternating(2)); }), Errc::missing_dim);
  const Arrangement ap = Arrangement::create(chain, {1, 1}, {0, 3});
  FaceProfile gap;
  gap.chamber_chi = {{0, 1}};
  EXPECT_EQ(code_of([&] { face_counts(ap, gap); }), Errc::missing_profile_entry);
  FaceProfile zero;
  zero.chamber_chi = {{0, 0}, {3, 1}};
  EXPECT_EQ(code_of([&] { zero.validate(); }), Errc::zero_chamber_chi);
}

class GenericLines : public ::testing::TestWithParam<int> {};

TEST_P(GenericLines, FaceCountsAndIdentity) {
  const int k = GetParam();
  const Arrangement ap = generic(k, false);
  const auto fc = face_counts(ap, FaceProfile::alternating(2));
  EXPECT_EQ(fc.by_dim.at(2), 1 + k + k * (k - 1) / 2);
  if (k >= 1) EXPECT_EQ(fc.by_dim.at(1), k * k);
  if (k >= 2) EXPECT_EQ(fc.by_dim.at(0), k * (k - 1) / 2);
  EXPECT_EQ(chamber_statistic(ap, 1).count, Rational(1 + k + k * (k - 1) / 2));
  const auto r = identity_report(ap, FaceIdentity::alternating);
  EXPECT_TRUE(r.equal) << r.lhs.to_string() << " vs " << r.rhs.to_string();
  EXPECT_TRUE(r.totals_agree);
  // dim convention evaluated at 1 is the total face count too
  EXPECT_EQ(f_polynomial(ap, FaceProfile::alternating(2), FConvention::dim).evaluate(1), fc.total);
}

INSTANTIATE_TEST_SUITE_P(K, GenericLines, ::testing::Range(0, 5));

class GenericCircles : public ::testing::TestWithParam<int> {};

TEST_P(GenericCircles, FaceCountsAndIdentity) {
  const int k = GetParam();
  const Arrangement ap = generic(k, true);
  const auto fc = face_counts(ap, FaceProfile::alternating(2));
  EXPECT_EQ(fc.by_dim.at(2), k * (k - 1) + 2);
  EXPECT_EQ(fc.by_dim.at(1), 2 * k * (k - 1));
  EXPECT_EQ(fc.by_dim.at(0), k * (k - 1));
  const auto r = identity_report(ap, FaceIdentity::sphere);
  EXPECT_TRUE(r.equal) << r.lhs.to_string() << " vs " << r.rhs.to_string();
  EXPECT_TRUE(r.totals_agree);
}

INSTANTIATE_TEST_SUITE_P(K, GenericCircles, ::testing::Range(2, 5));
