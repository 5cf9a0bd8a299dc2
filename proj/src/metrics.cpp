#include "vpfair/metrics.hpp"

#include <algorithm>
#include <array>
#include <vector>

#include "vpfair/errors.hpp"
#include "vpfair/normalization.hpp"

namespace vpfair {

namespace {

MetricResult normalized(MetricId metric, double raw_sum, double z) {
  return MetricResult{metric, z > 0.0 ? raw_sum / z : 0.0, raw_sum, z};
}

}  // namespace

double kld(const CategoricalDistribution& p, const CategoricalDistribution& q, double log_base) {
  return kld(p.probabilities(), q.probabilities(), log_base);
}

double jsd(const CategoricalDistribution& p, const CategoricalDistribution& q) {
  return jsd(p.probabilities(), q.probabilities());
}

CategoricalDistribution smooth(const CategoricalDistribution& p, double epsilon) {
  std::vector<double> out(p.size());
  smooth_into(p.probabilities(), epsilon, out);
  return CategoricalDistribution(std::move(out));
}

MetricResult binomial_metric(MetricId metric, std::span<const Group> mask, const MetricOptions& options) {
  if (!is_binomial(metric)) throw ArgumentError("nDJS is not a binomial metric");
  const auto s_p = static_cast<std::size_t>(std::count(mask.begin(), mask.end(), Group::protected_group));
  const double raw = binomial_raw_sum(metric, mask, options);
  const double z = z_binomial(metric, mask.size(), s_p, options);
  auto result = normalized(metric, raw, z);
  if (metric == MetricId::ndr && options.clamp_ndr) result.value = std::min(result.value, 1.0);
  return result;
}

MetricResult ndd(std::span<const Group> mask, const MetricOptions& options) {
  return binomial_metric(MetricId::ndd, mask, options);
}
MetricResult ndr(std::span<const Group> mask, const MetricOptions& options) {
  return binomial_metric(MetricId::ndr, mask, options);
}
MetricResult ndkl(std::span<const Group> mask, const MetricOptions& options) {
  return binomial_metric(MetricId::ndkl, mask, options);
}

MetricResult ndd(const Ranking& ranking, const ProtectedSpec& spec, const MetricOptions& options) {
  return ndd(mask_of(ranking, spec), options);
}
MetricResult ndr(const Ranking& ranking, const ProtectedSpec& spec, const MetricOptions& options) {
  return ndr(mask_of(ranking, spec), options);
}
MetricResult ndkl(const Ranking& ranking, const ProtectedSpec& spec, const MetricOptions& options) {
  return ndkl(mask_of(ranking, spec), options);
}

MetricResult ndjs(const Ranking& ranking, std::span<const ViewpointLabel> categories) {
  constexpr std::size_t kUnmapped = ViewpointLabel::kCount;
  std::array<std::size_t, ViewpointLabel::kCount> slot;
  slot.fill(kUnmapped);
  for (std::size_t c = 0; c < categories.size(); ++c) {
    if (slot[categories[c].index()] == kUnmapped) slot[categories[c].index()] = c;
  }
  std::vector<std::size_t> indices;
  indices.reserve(ranking.size());
  for (std::size_t pos = 0; pos < ranking.size(); ++pos) {
    const std::size_t c = slot[ranking[pos].index()];
    if (c == kUnmapped) {
      throw ArgumentError("nDJS: label " + to_string(ranking[pos]) + " at rank " + std::to_string(pos + 1) +
                          " is not in the category list");
    }
    indices.push_back(c);
  }
  return normalized(MetricId::ndjs, multinomial_raw_sum(indices, categories.size()),
                    z_multinomial(ranking.size()));
}

MetricResult ndjs(const Ranking& ranking) { return ndjs(ranking, all_labels()); }

MetricResult evaluate(MetricId metric, const Ranking& ranking, const ProtectedSpec& spec,
                      const MetricOptions& options) {
  if (metric == MetricId::ndjs) return ndjs(ranking);
  return binomial_metric(metric, mask_of(ranking, spec), options);
}

}  // namespace vpfair
