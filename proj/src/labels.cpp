#include "vpfair/labels.hpp"

#include <cmath>
#include <numeric>

#include "vpfair/errors.hpp"

namespace vpfair {

ViewpointLabel::ViewpointLabel(int value) : value_(static_cast<std::int8_t>(value)) {
  if (value < kMin || value > kMax) {
    throw ArgumentError("viewpoint label " + std::to_string(value) + " outside -3..+3");
  }
}

ViewpointLabel ViewpointLabel::from_index(std::size_t index) {
  if (index >= kCount) throw ArgumentError("label index " + std::to_string(index) + " outside 0..6");
  return ViewpointLabel(static_cast<int>(index) + kMin);
}

const std::array<ViewpointLabel, ViewpointLabel::kCount>& all_labels() {
  static const std::array<ViewpointLabel, ViewpointLabel::kCount> labels{
      ViewpointLabel(-3), ViewpointLabel(-2), ViewpointLabel(-1), ViewpointLabel(0),
      ViewpointLabel(1),  ViewpointLabel(2),  ViewpointLabel(3)};
  return labels;
}

std::string to_string(ViewpointLabel label) {
  const int v = label.value();
  return v > 0 ? "+" + std::to_string(v) : std::to_string(v);
}

Ranking::Ranking(std::vector<ViewpointLabel> items) : items_(std::move(items)) {
  if (items_.empty()) throw ArgumentError("ranking must contain at least one item");
}

Ranking Ranking::from_values(std::span<const int> values) {
  std::vector<ViewpointLabel> items;
  items.reserve(values.size());
  for (int v : values) items.emplace_back(v);
  return Ranking(std::move(items));
}

Ranking Ranking::from_values(std::initializer_list<int> values) {
  return from_values(std::span<const int>(values.begin(), values.size()));
}

ProtectedSpec::ProtectedSpec(std::span<const ViewpointLabel> labels) {
  for (auto label : labels) members_.set(label.index());
  if (members_.none()) throw ArgumentError("protected label set must not be empty");
  if (members_.all()) throw ArgumentError("protected label set must not contain every label");
}

ProtectedSpec ProtectedSpec::from_values(std::span<const int> values) {
  std::vector<ViewpointLabel> labels;
  for (int v : values) labels.emplace_back(v);
  return ProtectedSpec(labels);
}

ProtectedSpec ProtectedSpec::from_values(std::initializer_list<int> values) {
  return from_values(std::span<const int>(values.begin(), values.size()));
}

ProtectedSpec ProtectedSpec::opposing() { return from_values({-3, -2, -1}); }

std::vector<ViewpointLabel> ProtectedSpec::labels() const {
  std::vector<ViewpointLabel> out;
  for (std::size_t i = 0; i < ViewpointLabel::kCount; ++i) {
    if (members_.test(i)) out.push_back(ViewpointLabel::from_index(i));
  }
  return out;
}

GroupMask mask_of(const Ranking& ranking, const ProtectedSpec& spec) {
  GroupMask mask;
  mask.reserve(ranking.size());
  for (auto label : ranking) {
    mask.push_back(spec.contains(label) ? Group::protected_group : Group::unprotected_group);
  }
  return mask;
}

PrefixCounts prefix_counts(std::span<const Group> mask) {
  PrefixCounts counts;
  counts.protected_prefix.reserve(mask.size());
  counts.unprotected_prefix.reserve(mask.size());
  std::size_t p = 0;
  std::size_t u = 0;
  for (Group g : mask) {
    if (g == Group::protected_group) {
      ++p;
    } else {
      ++u;
    }
    counts.protected_prefix.push_back(p);
    counts.unprotected_prefix.push_back(u);
  }
  counts.total_protected = p;
  counts.total_unprotected = u;
  return counts;
}

PrefixCounts prefix_counts(const Ranking& ranking, const ProtectedSpec& spec) {
  return prefix_counts(mask_of(ranking, spec));
}

CategoricalDistribution::CategoricalDistribution(std::vector<double> probabilities)
    : probs_(std::move(probabilities)) {
  if (probs_.empty()) throw ArgumentError("distribution must have at least one category");
  for (double p : probs_) {
    if (!std::isfinite(p) || p < 0.0) throw ArgumentError("distribution entries must be finite and >= 0");
  }
  const double sum = std::accumulate(probs_.begin(), probs_.end(), 0.0);
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ArgumentError("distribution entries sum to " + std::to_string(sum) + ", expected 1");
  }
}

CategoricalDistribution::CategoricalDistribution(std::initializer_list<double> probabilities)
    : CategoricalDistribution(std::vector<double>(probabilities)) {}

}  // namespace vpfair
