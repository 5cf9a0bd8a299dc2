#pragma once

// Synthetic viewpoint-labeled rankings: labels are drawn one rank at a time,
// without replacement, each remaining item with probability proportional to
// its weight. The bias parameter alpha in [-1, 1] controls two weights
//
//   w1 = 1.0001 - alpha     w2 = 1.0001 + alpha
//
// so negative alpha lifts the w1 labels and positive alpha lifts the w2 labels.

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "vpfair/labels.hpp"

namespace vpfair {

/// Item counts per label value, -3..+3.
struct LabelSet {
  std::string name;
  std::array<std::size_t, ViewpointLabel::kCount> counts{};

  std::size_t total() const noexcept;
  std::size_t count_in(const ProtectedSpec& spec) const noexcept;
};

/// S1 (100 x 7), S2 (80 x 3, 115 x 4), S3 (60 x 3, 130 x 4); 700 items each.
const std::vector<LabelSet>& builtin_sets();
/// Throws ConfigError for unknown names.
const LabelSet& builtin_set(const std::string& name);

struct AlphaWeights {
  double alpha = 0.0;
  double w1 = 1.0001;
  double w2 = 1.0001;
};

/// Throws ArgumentError for alpha outside [-1, 1].
AlphaWeights weights_for(double alpha);

enum class ScenarioKind { binomial, multinomial };

std::string to_string(ScenarioKind kind);
std::optional<ScenarioKind> parse_scenario(const std::string& text);

/// binomial: the protected labels get w1, all others w2.
/// multinomial: one label drawn uniformly from the protected labels per
/// replicate gets w1, all others w2.
struct ScenarioConfig {
  ScenarioKind kind = ScenarioKind::binomial;
  ProtectedSpec protected_labels = ProtectedSpec::opposing();
};

using WeightMap = std::array<double, ViewpointLabel::kCount>;

/// Weight per label for a binomial scenario.
WeightMap binomial_weight_map(const ProtectedSpec& spec, const AlphaWeights& weights);
/// Weight per label when only `favored` receives w1.
WeightMap single_label_weight_map(ViewpointLabel favored, const AlphaWeights& weights);

/// Identifies one replicate's random stream.
struct SeededStream {
  std::uint64_t base_seed = 0;
  std::uint64_t replicate_index = 0;
};

/// 64-bit Mersenne Twister seeded from (base_seed, replicate_index) through
/// std::seed_seq. Conversions to doubles and bounded integers are done here
/// rather than by <random> distributions, whose output differs between
/// standard libraries.
class Rng {
 public:
  explicit Rng(const SeededStream& stream);

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  /// Uniform integer in [0, bound), unbiased (rejection sampling). bound > 0.
  std::uint64_t uniform_index(std::uint64_t bound);

 private:
  std::mt19937_64 engine_;
};

/// Mixes extra words into a seed (splitmix64 chain). Used to give every
/// experiment cell its own stream family.
std::uint64_t derive_seed(std::uint64_t base_seed, std::initializer_list<std::uint64_t> words);

/// Weighted sampling without replacement of every item in `set`.
/// Throws ArgumentError when a label with items has a non-positive weight or the set is empty.
Ranking sample_ranking(const LabelSet& set, const WeightMap& weights, Rng& rng);
Ranking sample_ranking(const LabelSet& set, const WeightMap& weights, const SeededStream& stream);

struct Replicate {
  Ranking ranking;
  WeightMap weights{};
  /// Label that received w1 in the multinomial scenario.
  std::optional<ViewpointLabel> favored;
};

/// Replicate k uses stream (base_seed, k). The multinomial scenario draws its
/// favored label from that stream before sampling. Output order is by k and
/// does not depend on `threads` (0 = OpenMP default).
std::vector<Replicate> generate_batch(const LabelSet& set, const ScenarioConfig& scenario, double alpha,
                                      std::size_t replicates, std::uint64_t base_seed, int threads = 0);

/// One replicate of generate_batch.
Replicate generate_replicate(const LabelSet& set, const ScenarioConfig& scenario, const AlphaWeights& weights,
                             const SeededStream& stream);

namespace reference {

/// Single-threaded generate_batch; kept as the equivalence baseline.
std::vector<Replicate> generate_batch(const LabelSet& set, const ScenarioConfig& scenario, double alpha,
                                      std::size_t replicates, std::uint64_t base_seed);

}  // namespace reference

}  // namespace vpfair
