#include "vpfair/kernels.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <cmath>
#include <vector>

#include "vpfair/errors.hpp"

namespace vpfair {

namespace {

constexpr std::array<std::string_view, 4> kMetricNames{"nDD", "nDR", "nDKL", "nDJS"};

double log_in_base(double x, double base) {
  return base == 2.0 ? std::log2(x) : std::log(x) / std::log(base);
}

}  // namespace

std::string_view to_string(MetricId id) { return kMetricNames[static_cast<std::size_t>(id)]; }

std::optional<MetricId> parse_metric_id(std::string_view text) {
  for (std::size_t i = 0; i < kMetricNames.size(); ++i) {
    const auto name = kMetricNames[i];
    if (name.size() != text.size()) continue;
    const bool same = std::equal(name.begin(), name.end(), text.begin(), [](char a, char b) {
      return std::tolower(static_cast<unsigned char>(a)) == std::tolower(static_cast<unsigned char>(b));
    });
    if (same) return static_cast<MetricId>(i);
  }
  return std::nullopt;
}

double discount(std::int64_t rank) {
  if (rank < 1) throw ArgumentError("rank index must be >= 1, got " + std::to_string(rank));
  return 1.0 / std::log2(static_cast<double>(rank) + 1.0);
}

double kld(std::span<const double> p, std::span<const double> q, double log_base) {
  if (p.size() != q.size()) throw ArgumentError("kld: distributions have different category counts");
  if (!(log_base > 0.0) || log_base == 1.0) throw ArgumentError("kld: logarithm base must be positive and != 1");
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (p[x] == 0.0) continue;
    if (q[x] == 0.0) throw DomainError("kld: q is zero on a category where p is positive");
    sum += p[x] * log_in_base(p[x] / q[x], log_base);
  }
  return std::max(sum, 0.0);
}

double jsd(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ArgumentError("jsd: distributions have different category counts");
  double sum = 0.0;
  for (std::size_t x = 0; x < p.size(); ++x) {
    const double r = 0.5 * (p[x] + q[x]);
    if (p[x] > 0.0) sum += p[x] * std::log2(p[x] / r);
    if (q[x] > 0.0) sum += q[x] * std::log2(q[x] / r);
  }
  return std::clamp(0.5 * sum, 0.0, 1.0);
}

void smooth_into(std::span<const double> p, double epsilon, std::span<double> out) {
  if (out.size() != p.size()) throw ArgumentError("smooth: output size mismatch");
  if (!(epsilon >= 0.0)) throw ArgumentError("smooth: epsilon must be >= 0");
  const auto zeros = static_cast<std::size_t>(std::count(p.begin(), p.end(), 0.0));
  const double removed = epsilon * static_cast<double>(zeros);
  if (zeros > 0 && removed >= 1.0) {
    throw ArgumentError("smooth: epsilon * (number of zero entries) must be < 1");
  }
  const double scale = 1.0 - removed;
  for (std::size_t x = 0; x < p.size(); ++x) {
    out[x] = p[x] == 0.0 ? epsilon : p[x] * scale;
  }
}

double binomial_term(MetricId metric, std::size_t prefix_protected, std::size_t i, std::size_t total_protected,
                     std::size_t n, const MetricOptions& options) {
  const std::size_t total_unprotected = n - total_protected;
  const std::size_t prefix_unprotected = i - prefix_protected;
  switch (metric) {
    case MetricId::ndd:
      return std::abs(static_cast<double>(prefix_protected) / static_cast<double>(i) -
                      static_cast<double>(total_protected) / static_cast<double>(n));
    case MetricId::ndr: {
      // a fraction with a zero denominator counts as 0, for the prefix and the overall ratio alike
      const double prefix_ratio = prefix_unprotected == 0 ? 0.0
                                                          : static_cast<double>(prefix_protected) /
                                                                static_cast<double>(prefix_unprotected);
      const double overall_ratio = total_unprotected == 0 ? 0.0
                                                          : static_cast<double>(total_protected) /
                                                                static_cast<double>(total_unprotected);
      return std::abs(prefix_ratio - overall_ratio);
    }
    case MetricId::ndkl: {
      if (total_protected == 0 || total_unprotected == 0) return 0.0;
      const std::array<double, 2> prefix{static_cast<double>(prefix_protected) / static_cast<double>(i),
                                         static_cast<double>(prefix_unprotected) / static_cast<double>(i)};
      const std::array<double, 2> overall{static_cast<double>(total_protected) / static_cast<double>(n),
                                          static_cast<double>(total_unprotected) / static_cast<double>(n)};
      std::array<double, 2> smoothed{};
      smooth_into(prefix, options.smoothing_epsilon, smoothed);
      return kld(smoothed, overall, options.kld_log_base);
    }
    case MetricId::ndjs:
      break;
  }
  throw ArgumentError("binomial_term: nDJS is not a binomial metric");
}

double binomial_raw_sum(MetricId metric, std::span<const Group> mask, const MetricOptions& options) {
  if (!is_binomial(metric)) throw ArgumentError("binomial_raw_sum: nDJS is not a binomial metric");
  const std::size_t n = mask.size();
  const auto total_protected =
      static_cast<std::size_t>(std::count(mask.begin(), mask.end(), Group::protected_group));
  if (total_protected == 0 || total_protected == n) return 0.0;

  double sum = 0.0;
  std::size_t prefix_protected = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    if (mask[i - 1] == Group::protected_group) ++prefix_protected;
    sum += discount(static_cast<std::int64_t>(i)) *
           binomial_term(metric, prefix_protected, i, total_protected, n, options);
  }
  return sum;
}

double multinomial_raw_sum(std::span<const std::size_t> categories, std::size_t num_categories) {
  const std::size_t n = categories.size();
  std::vector<std::size_t> totals(num_categories, 0);
  for (std::size_t c : categories) {
    if (c >= num_categories) throw ArgumentError("multinomial_raw_sum: category index out of range");
    ++totals[c];
  }
  // Only categories present overall can be non-zero in any prefix.
  std::vector<std::size_t> present;
  for (std::size_t c = 0; c < num_categories; ++c) {
    if (totals[c] > 0) present.push_back(c);
  }
  if (present.size() <= 1) return 0.0;

  std::vector<double> overall(num_categories, 0.0);
  for (std::size_t c : present) overall[c] = static_cast<double>(totals[c]) / static_cast<double>(n);

  std::vector<std::size_t> prefix(num_categories, 0);
  double sum = 0.0;
  for (std::size_t i = 1; i <= n; ++i) {
    ++prefix[categories[i - 1]];
    const double inv_i = 1.0 / static_cast<double>(i);
    double divergence = 0.0;
    for (std::size_t c : present) {
      const double p = static_cast<double>(prefix[c]) * inv_i;
      const double q = overall[c];
      const double r = 0.5 * (p + q);
      if (p > 0.0) divergence += p * std::log2(p / r);
      divergence += q * std::log2(q / r);
    }
    sum += discount(static_cast<std::int64_t>(i)) * std::clamp(0.5 * divergence, 0.0, 1.0);
  }
  return sum;
}

}  // namespace vpfair
