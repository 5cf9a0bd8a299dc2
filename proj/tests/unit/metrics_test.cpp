#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "vpfair/errors.hpp"
#include "vpfair/metrics.hpp"

namespace vpfair {
namespace {

constexpr Group P = Group::protected_group;
constexpr Group U = Group::unprotected_group;

// Reference values below were computed at 30 significant digits with an
// arbitrary-precision library, independently of this code base.
constexpr double kLog2_3Inverse = 0.630929753571457437;

TEST(Discount, Examples) {
  EXPECT_DOUBLE_EQ(discount(1), 1.0);
  EXPECT_NEAR(discount(2), kLog2_3Inverse, 1e-15);
  EXPECT_DOUBLE_EQ(discount(3), 0.5);
  EXPECT_DOUBLE_EQ(discount(7), 1.0 / 3.0);
}

TEST(Discount, RejectsNonPositiveRank) {
  EXPECT_THROW(discount(0), ArgumentError);
  EXPECT_THROW(discount(-1), ArgumentError);
}

TEST(Divergence, KldExamples) {
  EXPECT_NEAR(kld(CategoricalDistribution{0.999, 0.001}, CategoricalDistribution{0.5, 0.5}), 0.988592242262539, 1e-12);
  EXPECT_NEAR(kld(CategoricalDistribution{2.0 / 3, 1.0 / 3}, CategoricalDistribution{0.5, 0.5}), 0.0817041659455105,
              1e-12);
  EXPECT_EQ(kld(CategoricalDistribution{0.3, 0.7}, CategoricalDistribution{0.3, 0.7}), 0.0);
  // 0 * log(0 / q) contributes nothing.
  EXPECT_NEAR(kld(CategoricalDistribution{1.0, 0.0}, CategoricalDistribution{0.5, 0.5}), 1.0, 1e-15);
}

TEST(Divergence, KldUndefinedWhenQVanishes) {
  EXPECT_THROW(kld(CategoricalDistribution{0.5, 0.5}, CategoricalDistribution{1.0, 0.0}), DomainError);
  EXPECT_THROW(kld(CategoricalDistribution{0.5, 0.5}, CategoricalDistribution{0.2, 0.3, 0.5}), ArgumentError);
}

TEST(Divergence, JsdExamples) {
  EXPECT_NEAR(jsd(CategoricalDistribution{1.0, 0.0}, CategoricalDistribution{0.5, 0.5}), 0.311278124459133, 1e-12);
  EXPECT_NEAR(jsd(CategoricalDistribution{1.0, 0.0}, CategoricalDistribution{0.0, 1.0}), 1.0, 1e-15);
  EXPECT_EQ(jsd(CategoricalDistribution{0.25, 0.75}, CategoricalDistribution{0.25, 0.75}), 0.0);
}

TEST(Divergence, SmoothExamples) {
  const auto s = smooth(CategoricalDistribution{1.0, 0.0});
  EXPECT_NEAR(s[0], 0.999, 1e-15);
  EXPECT_NEAR(s[1], 0.001, 1e-15);

  const auto untouched = smooth(CategoricalDistribution{0.25, 0.75});
  EXPECT_DOUBLE_EQ(untouched[0], 0.25);

  const auto three = smooth(CategoricalDistribution{0.0, 0.0, 1.0}, 0.01);
  EXPECT_NEAR(three[0], 0.01, 1e-15);
  EXPECT_NEAR(three[2], 0.98, 1e-15);

  EXPECT_THROW(smooth(CategoricalDistribution{0.0, 0.0, 1.0}, 0.5), ArgumentError);
  EXPECT_THROW(smooth(CategoricalDistribution{0.0, 1.0}, -0.1), ArgumentError);
}

// Fixture [P, U, P, U]. nDD by hand: prefix shares 1, 1/2, 2/3, 1/2 against
// 1/2 give terms 1/2, 0, 1/6, 0, so raw = 1/2 + (1/6)/2 = 7/12.
TEST(BinomialMetrics, AlternatingFixture) {
  const GroupMask mask{P, U, P, U};

  const auto d = ndd(mask);
  EXPECT_NEAR(d.raw_sum, 0.583333333333333, 1e-12);
  EXPECT_NEAR(d.z, 0.898798210119062, 1e-12);
  EXPECT_NEAR(d.value, 0.649014791936513, 1e-6);
  EXPECT_NEAR(d.value, 0.6490, 1e-4);

  const auto r = ndr(mask);
  EXPECT_NEAR(r.raw_sum, 1.5, 1e-12);
  EXPECT_NEAR(r.z, 2.13092975357146, 1e-12);
  EXPECT_NEAR(r.value, 0.703918089034135, 1e-6);

  const auto k = ndkl(mask);
  EXPECT_NEAR(k.raw_sum, 1.02944432523529, 1e-12);
  EXPECT_NEAR(k.z, 1.65317658502865, 1e-12);
  EXPECT_NEAR(k.value, 0.622706814600481, 1e-6);
}

TEST(BinomialMetrics, BlockRankingsScoreOne) {
  EXPECT_NEAR(ndd(GroupMask{P, P, U, U}).value, 1.0, 1e-12);
  EXPECT_NEAR(ndkl(GroupMask{P, P, U, U}).value, 1.0, 1e-12);
  EXPECT_NEAR(ndr(GroupMask{P, P, U, U}).value, 1.0, 1e-12);
}

TEST(BinomialMetrics, DegeneratePartitionIsZero) {
  for (const auto& mask : {GroupMask{P, P, P}, GroupMask{U, U, U, U}, GroupMask{P}}) {
    for (auto m : {MetricId::ndd, MetricId::ndr, MetricId::ndkl}) {
      const auto res = binomial_metric(m, mask);
      EXPECT_EQ(res.value, 0.0);
      EXPECT_EQ(res.z, 0.0);
      EXPECT_EQ(res.raw_sum, 0.0);
    }
  }
}

TEST(BinomialMetrics, RankingOverloadUsesProtectedSpec) {
  const auto ranking = Ranking::from_values({-2, 1, -1, 3});
  EXPECT_NEAR(ndd(ranking, ProtectedSpec::opposing()).value, 0.6490, 1e-4);
  // Flipping which side is protected leaves nDD unchanged for a balanced list.
  EXPECT_NEAR(ndd(ranking, ProtectedSpec::from_values({1, 3})).value, 0.6490, 1e-4);
}

TEST(BinomialMetrics, NdrCanExceedOneUnlessClamped) {
  MetricOptions clamp;
  clamp.clamp_ndr = true;
  bool seen_above_one = false;
  std::vector<Group> m(8);
  for (unsigned bits = 0; bits < 256; ++bits) {
    for (int k = 0; k < 8; ++k) m[k] = (bits >> k) & 1u ? P : U;
    const double v = ndr(m).value;
    seen_above_one = seen_above_one || v > 1.0;
    EXPECT_LE(ndr(m, clamp).value, 1.0);
    EXPECT_GE(ndr(m, clamp).value, 0.0);
  }
  EXPECT_TRUE(seen_above_one);
}

TEST(BinomialMetrics, RejectsNdjsId) {
  EXPECT_THROW(binomial_metric(MetricId::ndjs, GroupMask{P, U}), ArgumentError);
}

TEST(Ndjs, TwoCategoryFixture) {
  const auto res = ndjs(Ranking::from_values({-1, 1}), std::vector<ViewpointLabel>{ViewpointLabel(-1), ViewpointLabel(1)});
  EXPECT_NEAR(res.raw_sum, 0.311278124459133, 1e-12);
  EXPECT_NEAR(res.z, 1.63092975357146, 1e-12);
  EXPECT_NEAR(res.value, 0.190859308181414, 1e-6);
  // Empty categories do not change JSD, so the full seven-label form agrees.
  EXPECT_NEAR(ndjs(Ranking::from_values({-1, 1})).value, res.value, 1e-12);
}

TEST(Ndjs, SingleCategoryIsZero) {
  EXPECT_EQ(ndjs(Ranking::from_values({2, 2, 2, 2})).value, 0.0);
  EXPECT_EQ(ndjs(Ranking::from_values({0})).value, 0.0);
}

TEST(Ndjs, LabelOutsideCategoriesIsAnError) {
  const std::vector<ViewpointLabel> cats{ViewpointLabel(-1), ViewpointLabel(1)};
  EXPECT_THROW(ndjs(Ranking::from_values({-1, 2}), cats), ArgumentError);
}

TEST(Evaluate, DispatchesById) {
  const auto ranking = Ranking::from_values({-3, 0, -2, 1, 3});
  const auto spec = ProtectedSpec::opposing();
  EXPECT_EQ(evaluate(MetricId::ndd, ranking, spec).value, ndd(ranking, spec).value);
  EXPECT_EQ(evaluate(MetricId::ndr, ranking, spec).value, ndr(ranking, spec).value);
  EXPECT_EQ(evaluate(MetricId::ndkl, ranking, spec).value, ndkl(ranking, spec).value);
  EXPECT_EQ(evaluate(MetricId::ndjs, ranking, spec).value, ndjs(ranking).value);
  EXPECT_EQ(evaluate(MetricId::ndjs, ranking, spec).metric, MetricId::ndjs);
}

TEST(MetricId, NamesRoundTrip) {
  for (auto m : {MetricId::ndd, MetricId::ndr, MetricId::ndkl, MetricId::ndjs}) {
    EXPECT_EQ(parse_metric_id(to_string(m)), m);
  }
  EXPECT_EQ(parse_metric_id("NDKL"), MetricId::ndkl);
  EXPECT_FALSE(parse_metric_id("ndcg").has_value());
}

TEST(Recommend, FullTable) {
  using L = Level;
  struct Row {
    L balance, bias;
    MetricId expected;
  };
  const Row table[] = {
      {L::low, L::low, MetricId::ndd},         {L::low, L::medium, MetricId::ndd},
      {L::low, L::high, MetricId::ndd},        {L::medium, L::low, MetricId::ndd},
      {L::medium, L::medium, MetricId::ndd},   {L::medium, L::high, MetricId::ndkl},
      {L::high, L::low, MetricId::ndd},        {L::high, L::medium, MetricId::ndkl},
      {L::high, L::high, MetricId::ndkl},
  };
  for (const auto& row : table) {
    EXPECT_EQ(recommend_metric(row.balance, row.bias), row.expected)
        << to_string(row.balance) << "/" << to_string(row.bias);
    EXPECT_NE(recommend_metric(row.balance, row.bias), MetricId::ndr);
  }
}

TEST(Recommend, BalanceCategories) {
  EXPECT_EQ(categorize_balance(350, 700), Level::high);
  EXPECT_EQ(categorize_balance(180, 700), Level::medium);  // b = 0.514
  EXPECT_EQ(categorize_balance(100, 700), Level::low);     // b = 0.286
  EXPECT_EQ(categorize_balance(600, 700), Level::low);     // symmetric in the share
  EXPECT_THROW(categorize_balance(0, 700), ArgumentError);
  EXPECT_THROW(categorize_balance(700, 700), ArgumentError);
  EXPECT_THROW(categorize_balance(5, 0), ArgumentError);

  BalanceThresholds strict;
  strict.low_below = 0.6;
  EXPECT_EQ(categorize_balance(180, 700, strict), Level::low);
}

}  // namespace
}  // namespace vpfair
