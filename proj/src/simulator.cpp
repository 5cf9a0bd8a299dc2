#include "vpfair/simulator.hpp"

#include <limits>
#include <numeric>

#include "vpfair/errors.hpp"
#include "vpfair/parallel.hpp"

namespace vpfair {

std::size_t LabelSet::total() const noexcept { return std::accumulate(counts.begin(), counts.end(), std::size_t{0}); }

std::size_t LabelSet::count_in(const ProtectedSpec& spec) const noexcept {
  std::size_t n = 0;
  for (std::size_t i = 0; i < counts.size(); ++i) {
    if (spec.contains(ViewpointLabel::from_index(i))) n += counts[i];
  }
  return n;
}

const std::vector<LabelSet>& builtin_sets() {
  static const std::vector<LabelSet> sets{
      {"S1", {100, 100, 100, 100, 100, 100, 100}},
      {"S2", {80, 80, 80, 115, 115, 115, 115}},
      {"S3", {60, 60, 60, 130, 130, 130, 130}},
  };
  return sets;
}

const LabelSet& builtin_set(const std::string& name) {
  for (const auto& set : builtin_sets()) {
    if (set.name == name) return set;
  }
  throw ConfigError("unknown label set '" + name + "' (built-in sets: S1, S2, S3)");
}

AlphaWeights weights_for(double alpha) {
  if (!(alpha >= -1.0 && alpha <= 1.0)) {
    throw ArgumentError("alpha must lie in [-1, 1], got " + std::to_string(alpha));
  }
  return AlphaWeights{alpha, 1.0001 - 1.0 * alpha, 1.0001 + 1.0 * alpha};
}

std::string to_string(ScenarioKind kind) { return kind == ScenarioKind::binomial ? "binomial" : "multinomial"; }

std::optional<ScenarioKind> parse_scenario(const std::string& text) {
  if (text == "binomial") return ScenarioKind::binomial;
  if (text == "multinomial") return ScenarioKind::multinomial;
  return std::nullopt;
}

WeightMap binomial_weight_map(const ProtectedSpec& spec, const AlphaWeights& weights) {
  WeightMap map{};
  for (std::size_t i = 0; i < map.size(); ++i) {
    map[i] = spec.contains(ViewpointLabel::from_index(i)) ? weights.w1 : weights.w2;
  }
  return map;
}

WeightMap single_label_weight_map(ViewpointLabel favored, const AlphaWeights& weights) {
  WeightMap map{};
  map.fill(weights.w2);
  map[favored.index()] = weights.w1;
  return map;
}

Rng::Rng(const SeededStream& stream) {
  const auto lo = [](std::uint64_t v) { return static_cast<std::uint32_t>(v & 0xffffffffu); };
  const auto hi = [](std::uint64_t v) { return static_cast<std::uint32_t>(v >> 32); };
  std::seed_seq seq{lo(stream.base_seed), hi(stream.base_seed), lo(stream.replicate_index),
                    hi(stream.replicate_index)};
  engine_.seed(seq);
}

std::uint64_t Rng::uniform_index(std::uint64_t bound) {
  if (bound == 0) throw ArgumentError("uniform_index: bound must be positive");
  // Reject the top partial block so every residue is equally likely.
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return x % bound;
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::initializer_list<std::uint64_t> words) {
  auto mix = [](std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  };
  std::uint64_t state = mix(base_seed);
  for (std::uint64_t w : words) state = mix(state ^ mix(w));
  return state;
}

Ranking sample_ranking(const LabelSet& set, const WeightMap& weights, Rng& rng) {
  auto remaining = set.counts;
  const std::size_t n = set.total();
  if (n == 0) throw ArgumentError("sample_ranking: label set is empty");
  for (std::size_t c = 0; c < remaining.size(); ++c) {
    if (remaining[c] > 0 && !(weights[c] > 0.0)) {
      throw ArgumentError("sample_ranking: weight for label " + to_string(ViewpointLabel::from_index(c)) +
                          " must be positive");
    }
  }

  // Items sharing a label are interchangeable, so drawing a label with
  // probability count * weight / total is the same as drawing an item.
  std::vector<ViewpointLabel> items;
  items.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    double total = 0.0;
    for (std::size_t c = 0; c < remaining.size(); ++c) total += static_cast<double>(remaining[c]) * weights[c];
    const double target = rng.uniform01() * total;

    std::size_t chosen = remaining.size();
    double cumulative = 0.0;
    for (std::size_t c = 0; c < remaining.size(); ++c) {
      if (remaining[c] == 0) continue;
      chosen = c;
      cumulative += static_cast<double>(remaining[c]) * weights[c];
      if (target < cumulative) break;
    }
    --remaining[chosen];
    items.push_back(ViewpointLabel::from_index(chosen));
  }
  return Ranking(std::move(items));
}

Ranking sample_ranking(const LabelSet& set, const WeightMap& weights, const SeededStream& stream) {
  Rng rng(stream);
  return sample_ranking(set, weights, rng);
}

Replicate generate_replicate(const LabelSet& set, const ScenarioConfig& scenario, const AlphaWeights& weights,
                             const SeededStream& stream) {
  Rng rng(stream);
  if (scenario.kind == ScenarioKind::binomial) {
    const auto map = binomial_weight_map(scenario.protected_labels, weights);
    return Replicate{sample_ranking(set, map, rng), map, std::nullopt};
  }
  const auto candidates = scenario.protected_labels.labels();
  const ViewpointLabel favored = candidates[rng.uniform_index(candidates.size())];
  const auto map = single_label_weight_map(favored, weights);
  return Replicate{sample_ranking(set, map, rng), map, favored};
}

std::vector<Replicate> generate_batch(const LabelSet& set, const ScenarioConfig& scenario, double alpha,
                                      std::size_t replicates, std::uint64_t base_seed, int threads) {
  if (replicates == 0) throw ArgumentError("generate_batch: replicates must be >= 1");
  const auto weights = weights_for(alpha);
  std::vector<std::optional<Replicate>> slots(replicates);
  const int team = resolve_threads(threads);
  const auto count = static_cast<std::int64_t>(replicates);
#pragma omp parallel for schedule(static) num_threads(team)
  for (std::int64_t k = 0; k < count; ++k) {
    slots[static_cast<std::size_t>(k)] =
        generate_replicate(set, scenario, weights, SeededStream{base_seed, static_cast<std::uint64_t>(k)});
  }
  std::vector<Replicate> out;
  out.reserve(replicates);
  for (auto& slot : slots) out.push_back(std::move(*slot));
  return out;
}

namespace reference {

std::vector<Replicate> generate_batch(const LabelSet& set, const ScenarioConfig& scenario, double alpha,
                                      std::size_t replicates, std::uint64_t base_seed) {
  if (replicates == 0) throw ArgumentError("generate_batch: replicates must be >= 1");
  const auto weights = weights_for(alpha);
  std::vector<Replicate> out;
  out.reserve(replicates);
  for (std::uint64_t k = 0; k < replicates; ++k) {
    out.push_back(generate_replicate(set, scenario, weights, SeededStream{base_seed, k}));
  }
  return out;
}

}  // namespace reference

}  // namespace vpfair
