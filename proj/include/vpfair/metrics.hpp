#pragma once

// Normalized discounted ranking-bias metrics.
//
// Every metric follows the same template: a per-rank bias term F(i) computed
// on the top-i prefix, discounted by 1/log2(i+1), summed over i = 1..N and
// divided by a normalizer Z.
//
//   nDD   |Sp(1..i)/i - Sp/N|
//   nDR   |Sp(1..i)/Su(1..i) - Sp/Su|           (x/0 := 0)
//   nDKL  KLD(smoothed prefix split || overall split)
//   nDJS  JSD(prefix label distribution || overall label distribution)
//
// The binomial metrics (nDD, nDR, nDKL) are normalized by the larger raw sum
// of the two block permutations; nDJS by the per-rank JSD bound. See
// normalization.hpp.

#include <span>
#include <string>

#include "vpfair/kernels.hpp"
#include "vpfair/labels.hpp"

namespace vpfair {

struct MetricResult {
  MetricId metric = MetricId::ndd;
  double value = 0.0;    ///< raw_sum / z, or 0 when z == 0
  double raw_sum = 0.0;  ///< discounted numerator
  double z = 0.0;        ///< normalizer
};

/// KL divergence in the given base (2 unless stated). Throws DomainError when
/// q vanishes where p does not, ArgumentError on category-count mismatch.
double kld(const CategoricalDistribution& p, const CategoricalDistribution& q, double log_base = 2.0);

double jsd(const CategoricalDistribution& p, const CategoricalDistribution& q);

CategoricalDistribution smooth(const CategoricalDistribution& p, double epsilon = 0.001);

MetricResult ndd(std::span<const Group> mask, const MetricOptions& options = {});
MetricResult ndr(std::span<const Group> mask, const MetricOptions& options = {});
MetricResult ndkl(std::span<const Group> mask, const MetricOptions& options = {});

MetricResult ndd(const Ranking& ranking, const ProtectedSpec& spec, const MetricOptions& options = {});
MetricResult ndr(const Ranking& ranking, const ProtectedSpec& spec, const MetricOptions& options = {});
MetricResult ndkl(const Ranking& ranking, const ProtectedSpec& spec, const MetricOptions& options = {});

/// Binomial metric by id. Throws ArgumentError for nDJS.
MetricResult binomial_metric(MetricId metric, std::span<const Group> mask, const MetricOptions& options = {});

/// nDJS over an explicit category list. Throws ArgumentError when a ranked
/// label is not in `categories`.
MetricResult ndjs(const Ranking& ranking, std::span<const ViewpointLabel> categories);
/// nDJS over all seven labels.
MetricResult ndjs(const Ranking& ranking);

/// Any metric; binomial ones use `spec`.
MetricResult evaluate(MetricId metric, const Ranking& ranking, const ProtectedSpec& spec,
                      const MetricOptions& options = {});

// ---------------------------------------------------------------------------
// Metric selection for binomial viewpoint fairness.

enum class Level { low, medium, high };

std::string to_string(Level level);

/// Recommended binomial metric for a protected/unprotected balance level and
/// an expected ranking-bias level. Never recommends nDR.
MetricId recommend_metric(Level balance, Level bias);

struct BalanceThresholds {
  double low_below = 0.5;     ///< b < low_below -> low
  double high_above = 0.8;    ///< b > high_above -> high, otherwise medium
};

/// Balance b = min(share, 1 - share) / 0.5 of the protected share.
/// Throws ArgumentError unless 0 < protected_count < total.
Level categorize_balance(std::size_t protected_count, std::size_t total, const BalanceThresholds& thresholds = {});

}  // namespace vpfair
