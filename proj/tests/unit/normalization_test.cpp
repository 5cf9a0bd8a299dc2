#include <gtest/gtest.h>

#include <array>
#include <vector>

#include "oracle.hpp"
#include "vpfair/errors.hpp"
#include "vpfair/metrics.hpp"
#include "vpfair/normalization.hpp"

namespace vpfair {
namespace {

TEST(ZBinomial, Examples) {
  EXPECT_NEAR(z_binomial(MetricId::ndd, 4, 2), 0.898798210119062, 1e-12);
  EXPECT_NEAR(z_binomial(MetricId::ndr, 4, 2), 2.13092975357146, 1e-12);
  EXPECT_NEAR(z_binomial(MetricId::ndkl, 4, 2), 1.65317658502865, 1e-12);
}

TEST(ZBinomial, NdrTakesTheLargerBlock) {
  // Protected-last block for N=4, Sp=2 sums to 1.88092975357146; the
  // protected-first block is larger and wins.
  const auto last = BlockPermutation::make(4, 2, false);
  EXPECT_NEAR(ndr(last.mask).raw_sum, 1.88092975357146, 1e-12);
  EXPECT_NEAR(ndr(last.mask).value, 1.88092975357146 / 2.13092975357146, 1e-12);
}

TEST(ZBinomial, DegenerateIsZero) {
  for (auto m : {MetricId::ndd, MetricId::ndr, MetricId::ndkl}) {
    EXPECT_EQ(z_binomial(m, 5, 0), 0.0);
    EXPECT_EQ(z_binomial(m, 5, 5), 0.0);
  }
}

TEST(ZBinomial, RejectsBadArguments) {
  EXPECT_THROW(z_binomial(MetricId::ndjs, 4, 2), ArgumentError);
  EXPECT_THROW(z_binomial(MetricId::ndd, 4, 5), ArgumentError);
}

TEST(ZMultinomial, Examples) {
  EXPECT_DOUBLE_EQ(z_multinomial(1), 1.0);
  EXPECT_NEAR(z_multinomial(2), 1.63092975357146, 1e-12);
  EXPECT_NEAR(z_multinomial(4), 2.56160631164485, 1e-12);
  EXPECT_THROW(z_multinomial(0), ArgumentError);
}

TEST(ZMultinomial, StrictlyIncreasing) {
  double prev = 0.0;
  for (std::size_t n = 1; n <= 1000; ++n) {
    const double z = z_multinomial(n);
    ASSERT_GT(z, prev) << n;
    prev = z;
  }
}

TEST(BlockPermutation, Layout) {
  const auto first = BlockPermutation::make(5, 2, true);
  EXPECT_EQ(first.mask, (GroupMask{Group::protected_group, Group::protected_group, Group::unprotected_group,
                                   Group::unprotected_group, Group::unprotected_group}));
  const auto last = BlockPermutation::make(3, 1, false);
  EXPECT_EQ(last.mask, (GroupMask{Group::unprotected_group, Group::unprotected_group, Group::protected_group}));
  EXPECT_THROW(BlockPermutation::make(3, 4, true), ArgumentError);
}

TEST(BruteForce, NddTwoByTwo) {
  const std::array<std::size_t, 2> counts{2, 2};
  const auto res = brute_force_max(MetricId::ndd, counts);
  EXPECT_NEAR(res.max_raw_sum, 0.898798210119062, 1e-12);
  EXPECT_EQ(res.witness, (std::vector<std::uint8_t>{0, 0, 1, 1}));
  EXPECT_EQ(res.permutations_checked, 6u);
}

TEST(BruteForce, DegenerateCounts) {
  const std::array<std::size_t, 2> counts{1, 0};
  const auto res = brute_force_max(MetricId::ndd, counts);
  EXPECT_EQ(res.max_raw_sum, 0.0);
  EXPECT_EQ(res.permutations_checked, 1u);
}

TEST(BruteForce, NdrBeatsBlockNormalizer) {
  const std::array<std::size_t, 2> counts{2, 2};
  const auto res = brute_force_max(MetricId::ndr, counts);
  EXPECT_GE(res.max_raw_sum, z_binomial(MetricId::ndr, 4, 2) - 1e-12);
}

TEST(BruteForce, RefusesLargeInputs) {
  const std::array<std::size_t, 2> big{6, 6};
  EXPECT_THROW(brute_force_max(MetricId::ndd, big), ArgumentError);
  EXPECT_NO_THROW(brute_force_max(MetricId::ndd, big, 12));

  // 10 distinct categories: 10! arrangements exceed the enumeration cap.
  const std::vector<std::size_t> distinct(10, 1);
  EXPECT_THROW(brute_force_max(MetricId::ndjs, distinct), ArgumentError);

  const std::array<std::size_t, 3> wrong_arity{1, 1, 1};
  EXPECT_THROW(brute_force_max(MetricId::ndd, wrong_arity), ArgumentError);
}

TEST(BruteForce, MultinomialCountsArrangements) {
  const std::array<std::size_t, 3> counts{2, 1, 1};
  const auto res = brute_force_max(MetricId::ndjs, counts);
  EXPECT_EQ(res.permutations_checked, 12u);
  EXPECT_GT(res.max_raw_sum, 0.0);
}

// Library oracle and block normalizer against the bitmask oracle in tests/oracle.hpp.
TEST(BruteForce, AgreesWithIndependentOracle) {
  for (int n = 1; n <= 8; ++n) {
    for (int sp = 0; sp <= n; ++sp) {
      const std::array<std::size_t, 2> counts{static_cast<std::size_t>(sp), static_cast<std::size_t>(n - sp)};
      for (auto [id, om] : {std::pair{MetricId::ndd, oracle::Metric::ndd}, std::pair{MetricId::ndr, oracle::Metric::ndr},
                            std::pair{MetricId::ndkl, oracle::Metric::ndkl}}) {
        const double expected = static_cast<double>(oracle::max_raw_sum(om, n, sp));
        EXPECT_NEAR(brute_force_max(id, counts).max_raw_sum, expected, 1e-12) << n << "/" << sp;
      }
      EXPECT_NEAR(z_binomial(MetricId::ndd, n, sp),
                  static_cast<double>(oracle::max_raw_sum(oracle::Metric::ndd, n, sp)), 1e-9);
      EXPECT_NEAR(z_binomial(MetricId::ndkl, n, sp),
                  static_cast<double>(oracle::max_raw_sum(oracle::Metric::ndkl, n, sp)), 1e-9);
    }
  }
}

}  // namespace
}  // namespace vpfair
