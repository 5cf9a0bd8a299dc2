#include "vpfair/normalization.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "vpfair/errors.hpp"

namespace vpfair {

namespace {

GroupMask to_mask(std::span<const std::uint8_t> groups) {
  GroupMask mask(groups.size());
  std::transform(groups.begin(), groups.end(), mask.begin(),
                 [](std::uint8_t g) { return g == 0 ? Group::protected_group : Group::unprotected_group; });
  return mask;
}

// Multinomial coefficient, saturating at `cap + 1`.
std::size_t arrangement_count(std::span<const std::size_t> counts, std::size_t cap) {
  std::size_t result = 1;
  std::size_t placed = 0;
  for (std::size_t c : counts) {
    for (std::size_t k = 1; k <= c; ++k) {
      ++placed;
      // multinomial(placed; ..., k) = multinomial(placed - 1; ..., k - 1) * placed / k, always integral
      result = result * placed / k;
      if (result > cap) return cap + 1;
    }
  }
  return result;
}

}  // namespace

BlockPermutation BlockPermutation::make(std::size_t n, std::size_t protected_count, bool protected_first) {
  if (protected_count > n) throw ArgumentError("block permutation: protected count exceeds length");
  BlockPermutation block;
  block.protected_count = protected_count;
  block.protected_first = protected_first;
  block.mask.assign(n, Group::unprotected_group);
  if (protected_first) {
    std::fill_n(block.mask.begin(), protected_count, Group::protected_group);
  } else {
    std::fill(block.mask.end() - static_cast<std::ptrdiff_t>(protected_count), block.mask.end(),
              Group::protected_group);
  }
  return block;
}

double z_binomial(MetricId metric, std::size_t n, std::size_t s_p, const MetricOptions& options) {
  if (!is_binomial(metric)) throw ArgumentError("z_binomial: nDJS is normalized by z_multinomial");
  if (s_p > n) throw ArgumentError("z_binomial: protected count exceeds total count");
  if (s_p == 0 || s_p == n) return 0.0;
  const auto first = BlockPermutation::make(n, s_p, true);
  const auto last = BlockPermutation::make(n, s_p, false);
  return std::max(binomial_raw_sum(metric, first.mask, options), binomial_raw_sum(metric, last.mask, options));
}

double z_multinomial(std::size_t n) {
  if (n == 0) throw ArgumentError("z_multinomial: n must be >= 1");
  double z = 0.0;
  for (std::size_t i = 1; i <= n; ++i) z += discount(static_cast<std::int64_t>(i));
  return z;
}

OracleResult brute_force_max(MetricId metric, std::span<const std::size_t> group_counts, std::size_t limit,
                             const MetricOptions& options) {
  if (is_binomial(metric) && group_counts.size() != 2) {
    throw ArgumentError("brute_force_max: binomial metrics take {protected, unprotected} counts");
  }
  if (group_counts.empty() || group_counts.size() > 255) {
    throw ArgumentError("brute_force_max: need between 1 and 255 groups");
  }
  const std::size_t n = std::accumulate(group_counts.begin(), group_counts.end(), std::size_t{0});
  if (n > limit) {
    throw ArgumentError("brute_force_max: N = " + std::to_string(n) + " exceeds the oracle limit " +
                        std::to_string(limit));
  }
  if (arrangement_count(group_counts, kOracleMaxPermutations) > kOracleMaxPermutations) {
    throw ArgumentError("brute_force_max: too many permutations to enumerate");
  }

  std::vector<std::uint8_t> arrangement;
  arrangement.reserve(n);
  for (std::size_t g = 0; g < group_counts.size(); ++g) {
    arrangement.insert(arrangement.end(), group_counts[g], static_cast<std::uint8_t>(g));
  }

  OracleResult result;
  if (n == 0) return result;

  auto evaluate = [&](const std::vector<std::uint8_t>& groups) {
    if (is_binomial(metric)) return binomial_raw_sum(metric, to_mask(groups), options);
    std::vector<std::size_t> categories(groups.begin(), groups.end());
    return multinomial_raw_sum(categories, group_counts.size());
  };

  // Ascending start + next_permutation visits arrangements in lexicographic
  // order, so keeping the first strict maximum yields the smallest witness.
  bool first = true;
  do {
    const double value = evaluate(arrangement);
    ++result.permutations_checked;
    const double slack = 1e-12 * std::max(1.0, result.max_raw_sum);
    if (first || value > result.max_raw_sum + slack) {
      result.max_raw_sum = value;
      result.witness = arrangement;
      first = false;
    }
  } while (std::next_permutation(arrangement.begin(), arrangement.end()));
  return result;
}

}  // namespace vpfair
