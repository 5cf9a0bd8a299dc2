#pragma once

// Low-level numerical kernels shared by the metric and normalization
// modules. Everything here works on spans so the brute-force oracle and the
// simulator can call it without building Ranking objects.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "vpfair/labels.hpp"

namespace vpfair {

enum class MetricId : std::uint8_t { ndd, ndr, ndkl, ndjs };

/// "nDD", "nDR", "nDKL", "nDJS".
std::string_view to_string(MetricId id);
/// Case-insensitive; accepts "ndd" as well as "nDD". Empty optional when unknown.
std::optional<MetricId> parse_metric_id(std::string_view text);

constexpr bool is_binomial(MetricId id) { return id != MetricId::ndjs; }

struct MetricOptions {
  /// Mass assigned to each empty category of the prefix distribution in nDKL.
  double smoothing_epsilon = 0.001;
  /// Logarithm base of the KL divergence inside nDKL. The normalized value
  /// does not depend on it; raw_sum and z do.
  double kld_log_base = 2.0;
  /// Clamp nDR to [0, 1]. Off by default: block normalization does not bound nDR.
  bool clamp_ndr = false;
};

/// 1 / log2(rank + 1). Throws ArgumentError for rank < 1.
double discount(std::int64_t rank);

/// KL divergence with 0 * log(0 / q) = 0. Throws DomainError when q(x) = 0 < p(x).
double kld(std::span<const double> p, std::span<const double> q, double log_base = 2.0);

/// Jensen-Shannon divergence, base 2, bounded by 1.
double jsd(std::span<const double> p, std::span<const double> q);

/// Raises every zero entry of `p` to `epsilon` and scales the non-zero entries
/// down so the result still sums to 1. Writes into `out` (same size as `p`).
/// Throws ArgumentError when epsilon * zeros >= 1 or epsilon < 0.
void smooth_into(std::span<const double> p, double epsilon, std::span<double> out);

/// Undiscounted per-rank bias term of a binomial metric at prefix length `i`.
/// `prefix_protected` counts protected items in the top `i`; `total_protected`
/// counts them in the whole list of length `n`.
double binomial_term(MetricId metric, std::size_t prefix_protected, std::size_t i,
                     std::size_t total_protected, std::size_t n, const MetricOptions& options = {});

/// Discounted sum of binomial_term over every prefix of `mask`, i = 1..N in order.
double binomial_raw_sum(MetricId metric, std::span<const Group> mask, const MetricOptions& options = {});

/// Discounted sum of JSD(prefix distribution || overall distribution) over
/// every prefix. `categories[k]` is the category index (< num_categories) of rank k+1.
double multinomial_raw_sum(std::span<const std::size_t> categories, std::size_t num_categories);

}  // namespace vpfair
