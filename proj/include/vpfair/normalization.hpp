#pragma once

// Normalizing constants for the ranking-bias metrics, plus an exhaustive
// small-N oracle that finds the true maximally unfair permutation.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "vpfair/kernels.hpp"
#include "vpfair/labels.hpp"

namespace vpfair {

/// All protected items contiguous at the top (protected_first) or the bottom.
struct BlockPermutation {
  GroupMask mask;
  std::size_t protected_count = 0;
  bool protected_first = true;

  static BlockPermutation make(std::size_t n, std::size_t protected_count, bool protected_first);
};

/// max(raw sum of the protected-first block, raw sum of the protected-last
/// block). 0 for a degenerate partition (s_p == 0 or s_p == n).
/// Throws ArgumentError for nDJS or s_p > n.
double z_binomial(MetricId metric, std::size_t n, std::size_t s_p, const MetricOptions& options = {});

/// Sum of discount(i) for i = 1..n: the value a ranking would reach if every
/// prefix had the maximal JSD of 1. Throws ArgumentError for n == 0.
double z_multinomial(std::size_t n);

struct OracleResult {
  double max_raw_sum = 0.0;
  /// Group index per rank; for binomial metrics 0 = protected, 1 = unprotected.
  std::vector<std::uint8_t> witness;
  std::size_t permutations_checked = 0;
};

inline constexpr std::size_t kOracleDefaultLimit = 10;
inline constexpr std::size_t kOracleMaxPermutations = 1'000'000;

/// Enumerates every distinct arrangement of the given group multiset and
/// returns the largest discounted raw sum with the lexicographically smallest
/// witness reaching it. Binomial metrics take exactly two counts
/// {protected, unprotected}; nDJS takes one count per category.
/// Throws ArgumentError when N > limit or the arrangement count exceeds
/// kOracleMaxPermutations.
OracleResult brute_force_max(MetricId metric, std::span<const std::size_t> group_counts,
                             std::size_t limit = kOracleDefaultLimit, const MetricOptions& options = {});

}  // namespace vpfair
