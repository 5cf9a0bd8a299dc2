#pragma once

// Domain types shared by every module: viewpoint labels, rankings, the
// protected/unprotected partition and categorical distributions.

#include <array>
#include <bitset>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace vpfair {

/// Ordinal stance of a document toward a disputed topic: -3 (strongly
/// opposing) through 0 (neutral) to +3 (strongly supporting).
class ViewpointLabel {
 public:
  static constexpr int kMin = -3;
  static constexpr int kMax = 3;
  static constexpr std::size_t kCount = 7;

  /// Throws ArgumentError when `value` is outside -3..+3.
  explicit ViewpointLabel(int value);

  constexpr int value() const noexcept { return value_; }
  /// Position of the label in the fixed -3..+3 order (0..6).
  constexpr std::size_t index() const noexcept { return static_cast<std::size_t>(value_ - kMin); }

  static ViewpointLabel from_index(std::size_t index);

  friend constexpr auto operator<=>(ViewpointLabel, ViewpointLabel) = default;

 private:
  std::int8_t value_;
};

/// All seven labels in ascending order.
const std::array<ViewpointLabel, ViewpointLabel::kCount>& all_labels();

std::string to_string(ViewpointLabel label);

/// An ordered list of labels; position 0 holds rank 1. Never empty.
class Ranking {
 public:
  /// Throws ArgumentError on an empty sequence.
  explicit Ranking(std::vector<ViewpointLabel> items);
  static Ranking from_values(std::span<const int> values);
  static Ranking from_values(std::initializer_list<int> values);

  std::size_t size() const noexcept { return items_.size(); }
  ViewpointLabel operator[](std::size_t pos) const { return items_[pos]; }
  std::span<const ViewpointLabel> items() const noexcept { return items_; }

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  friend bool operator==(const Ranking&, const Ranking&) = default;

 private:
  std::vector<ViewpointLabel> items_;
};

/// Binary group membership of one ranked item. Protected sorts first.
enum class Group : std::uint8_t { protected_group = 0, unprotected_group = 1 };

using GroupMask = std::vector<Group>;

/// The set of labels treated as the protected viewpoint. Non-empty and a
/// proper subset of the seven labels.
class ProtectedSpec {
 public:
  /// Throws ArgumentError when empty or when it covers all seven labels.
  explicit ProtectedSpec(std::span<const ViewpointLabel> labels);
  static ProtectedSpec from_values(std::initializer_list<int> values);
  static ProtectedSpec from_values(std::span<const int> values);
  /// {-3, -2, -1}: all opposing viewpoints.
  static ProtectedSpec opposing();

  bool contains(ViewpointLabel label) const noexcept { return members_.test(label.index()); }
  std::vector<ViewpointLabel> labels() const;

  friend bool operator==(const ProtectedSpec&, const ProtectedSpec&) = default;

 private:
  std::bitset<ViewpointLabel::kCount> members_;
};

GroupMask mask_of(const Ranking& ranking, const ProtectedSpec& spec);

/// Tallies of protected/unprotected items in every top-i prefix.
struct PrefixCounts {
  std::vector<std::size_t> protected_prefix;    ///< [i-1] = protected items in top i
  std::vector<std::size_t> unprotected_prefix;  ///< [i-1] = unprotected items in top i
  std::size_t total_protected = 0;
  std::size_t total_unprotected = 0;

  std::size_t size() const noexcept { return protected_prefix.size(); }
};

PrefixCounts prefix_counts(const Ranking& ranking, const ProtectedSpec& spec);
PrefixCounts prefix_counts(std::span<const Group> mask);

/// Probability vector over a fixed category list. Entries are non-negative
/// and sum to 1 within 1e-9.
class CategoricalDistribution {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Throws ArgumentError on negative/non-finite entries, empty input or a bad sum.
  explicit CategoricalDistribution(std::vector<double> probabilities);
  CategoricalDistribution(std::initializer_list<double> probabilities);

  std::size_t size() const noexcept { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> probabilities() const noexcept { return probs_; }

 private:
  std::vector<double> probs_;
};

}  // namespace vpfair
