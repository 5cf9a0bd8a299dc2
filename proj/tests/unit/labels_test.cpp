#include <gtest/gtest.h>

#include <random>

#include "vpfair/errors.hpp"
#include "vpfair/labels.hpp"

namespace vpfair {
namespace {

constexpr Group P = Group::protected_group;
constexpr Group U = Group::unprotected_group;

TEST(ViewpointLabel, AcceptsTheSevenStances) {
  for (int v = -3; v <= 3; ++v) {
    ViewpointLabel label(v);
    EXPECT_EQ(label.value(), v);
    EXPECT_EQ(ViewpointLabel::from_index(label.index()), label);
  }
  EXPECT_EQ(to_string(ViewpointLabel(2)), "+2");
  EXPECT_EQ(to_string(ViewpointLabel(-1)), "-1");
  EXPECT_EQ(to_string(ViewpointLabel(0)), "0");
}

TEST(ViewpointLabel, RejectsOutOfRange) {
  EXPECT_THROW(ViewpointLabel(4), ArgumentError);
  EXPECT_THROW(ViewpointLabel(-4), ArgumentError);
  EXPECT_THROW(ViewpointLabel::from_index(7), ArgumentError);
}

TEST(Ranking, RejectsEmpty) {
  EXPECT_THROW(Ranking(std::vector<ViewpointLabel>{}), ArgumentError);
  std::vector<int> none;
  EXPECT_THROW(Ranking::from_values(none), ArgumentError);
}

TEST(Ranking, KeepsOrder) {
  const auto r = Ranking::from_values({-2, 1, -1, 3});
  ASSERT_EQ(r.size(), 4u);
  EXPECT_EQ(r[0].value(), -2);
  EXPECT_EQ(r[3].value(), 3);
}

TEST(ProtectedSpec, RejectsEmptyAndFullSets) {
  std::vector<int> none;
  EXPECT_THROW(ProtectedSpec::from_values(none), ArgumentError);
  EXPECT_THROW(ProtectedSpec::from_values({-3, -2, -1, 0, 1, 2, 3}), ArgumentError);
  EXPECT_THROW(ProtectedSpec::from_values({7}), ArgumentError);
  EXPECT_NO_THROW(ProtectedSpec::from_values({-3, -2, -1, 0, 1, 2}));
}

TEST(ProtectedSpec, OpposingIsNegativeLabels) {
  const auto spec = ProtectedSpec::opposing();
  EXPECT_EQ(spec, ProtectedSpec::from_values({-1, -3, -2}));
  EXPECT_TRUE(spec.contains(ViewpointLabel(-3)));
  EXPECT_FALSE(spec.contains(ViewpointLabel(0)));
  EXPECT_EQ(spec.labels().size(), 3u);
}

TEST(PrefixCounts, AlternatingExample) {
  const GroupMask mask{P, U, P, U};
  const auto pc = prefix_counts(mask);
  EXPECT_EQ(pc.protected_prefix, (std::vector<std::size_t>{1, 1, 2, 2}));
  EXPECT_EQ(pc.unprotected_prefix, (std::vector<std::size_t>{0, 1, 1, 2}));
  EXPECT_EQ(pc.total_protected, 2u);
  EXPECT_EQ(pc.total_unprotected, 2u);
}

TEST(PrefixCounts, AllProtected) {
  const auto pc = prefix_counts(Ranking::from_values({-3, -3, -1}), ProtectedSpec::opposing());
  EXPECT_EQ(pc.protected_prefix, (std::vector<std::size_t>{1, 2, 3}));
  EXPECT_EQ(pc.total_unprotected, 0u);
}

TEST(PrefixCounts, ProtectedLast) {
  const auto pc = prefix_counts(Ranking::from_values({2, 0, -2}), ProtectedSpec::opposing());
  EXPECT_EQ(pc.protected_prefix, (std::vector<std::size_t>{0, 0, 1}));
  EXPECT_EQ(pc.unprotected_prefix, (std::vector<std::size_t>{1, 2, 2}));
}

TEST(PrefixCounts, RandomMasksStayConsistent) {
  std::mt19937_64 gen(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + gen() % 60;
    GroupMask mask(n);
    for (auto& g : mask) g = (gen() & 1) ? P : U;
    const auto pc = prefix_counts(mask);
    ASSERT_EQ(pc.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      EXPECT_EQ(pc.protected_prefix[i] + pc.unprotected_prefix[i], i + 1);
      if (i > 0) EXPECT_GE(pc.protected_prefix[i], pc.protected_prefix[i - 1]);
    }
    EXPECT_EQ(pc.protected_prefix.back(), pc.total_protected);
    EXPECT_EQ(pc.total_protected + pc.total_unprotected, n);
  }
}

TEST(CategoricalDistribution, Validates) {
  EXPECT_NO_THROW(CategoricalDistribution({0.5, 0.5}));
  EXPECT_NO_THROW(CategoricalDistribution({1.0 / 3, 1.0 / 3, 1.0 / 3}));
  EXPECT_THROW(CategoricalDistribution({0.5, 0.6}), ArgumentError);
  EXPECT_THROW(CategoricalDistribution({1.5, -0.5}), ArgumentError);
  EXPECT_THROW(CategoricalDistribution(std::vector<double>{}), ArgumentError);
  EXPECT_THROW(CategoricalDistribution({std::nan(""), 1.0}), ArgumentError);
}

}  // namespace
}  // namespace vpfair
