#include "vpfair/experiment.hpp"

#include <bit>
#include <cmath>

#include "vpfair/errors.hpp"
#include "vpfair/metrics.hpp"
#include "vpfair/parallel.hpp"

namespace vpfair {

namespace {

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char ch : text) {
    h ^= ch;
    h *= 0x100000001b3ull;
  }
  return h;
}

struct Cell {
  const LabelSet* set;
  double alpha;
  std::uint64_t seed;
};

std::vector<Cell> enumerate_cells(const GridSpec& spec) {
  std::vector<Cell> cells;
  cells.reserve(spec.sets.size() * spec.alphas.size());
  for (const auto& set : spec.sets) {
    for (double alpha : spec.alphas) {
      cells.push_back(Cell{&set, alpha, cell_seed(spec.base_seed, spec.scenario.kind, set.name, alpha)});
    }
  }
  return cells;
}

void score_into(const GridSpec& spec, const Ranking& ranking, double* out) {
  for (std::size_t m = 0; m < spec.metrics.size(); ++m) {
    out[m] = evaluate(spec.metrics[m], ranking, spec.scenario.protected_labels, spec.options).value;
  }
}

// values[m * replicates + k] holds metric m of replicate k; summed in k order.
void summarize(const GridSpec& spec, const Cell& cell, const std::vector<double>& values,
               std::vector<CellResult>& out) {
  const std::size_t reps = spec.replicates;
  for (std::size_t m = 0; m < spec.metrics.size(); ++m) {
    const double* v = values.data() + m * reps;
    double sum = 0.0;
    for (std::size_t k = 0; k < reps; ++k) sum += v[k];
    const double mean = sum / static_cast<double>(reps);
    double squares = 0.0;
    for (std::size_t k = 0; k < reps; ++k) squares += (v[k] - mean) * (v[k] - mean);
    const double stddev = reps > 1 ? std::sqrt(squares / static_cast<double>(reps - 1)) : 0.0;
    out.push_back(CellResult{cell.set->name, cell.alpha, spec.metrics[m], mean, stddev, reps});
  }
}

}  // namespace

std::vector<double> default_alpha_grid() {
  std::vector<double> alphas;
  for (int i = -10; i <= 10; ++i) alphas.push_back(static_cast<double>(i) / 10.0);
  return alphas;
}

void GridSpec::validate() const {
  if (alphas.empty()) throw ConfigError("alpha grid is empty", "alphas");
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] >= -1.0 && alphas[i] <= 1.0)) {
      throw ConfigError("alpha " + std::to_string(alphas[i]) + " outside [-1, 1]", "alphas[" + std::to_string(i) + "]");
    }
  }
  if (sets.empty()) throw ConfigError("no label sets", "sets");
  for (const auto& set : sets) {
    if (set.total() == 0) throw ConfigError("label set '" + set.name + "' is empty", "sets");
  }
  if (replicates == 0) throw ConfigError("replicates must be >= 1", "replicates");
  if (metrics.empty()) throw ConfigError("no metrics requested", "metrics");
}

std::uint64_t cell_seed(std::uint64_t base_seed, ScenarioKind scenario, const std::string& set_name, double alpha) {
  const double canonical = alpha == 0.0 ? 0.0 : alpha;  // fold -0.0 into +0.0
  return derive_seed(base_seed, {static_cast<std::uint64_t>(scenario), fnv1a(set_name),
                                 std::bit_cast<std::uint64_t>(canonical)});
}

std::vector<CellResult> run_grid(const GridSpec& spec, int threads) {
  spec.validate();
  const auto cells = enumerate_cells(spec);
  const std::size_t reps = spec.replicates;
  const std::size_t metrics = spec.metrics.size();

  std::vector<AlphaWeights> weights;
  weights.reserve(cells.size());
  for (const auto& cell : cells) weights.push_back(weights_for(cell.alpha));

  std::vector<std::vector<double>> values(cells.size(), std::vector<double>(metrics * reps));
  const auto jobs = static_cast<std::int64_t>(cells.size() * reps);

#pragma omp parallel num_threads(resolve_threads(threads))
  {
    std::vector<double> scores(metrics);
#pragma omp for schedule(dynamic, 8)
    for (std::int64_t job = 0; job < jobs; ++job) {
      const auto c = static_cast<std::size_t>(job) / reps;
      const auto k = static_cast<std::size_t>(job) % reps;
      const auto replicate = generate_replicate(*cells[c].set, spec.scenario, weights[c], SeededStream{cells[c].seed, k});
      score_into(spec, replicate.ranking, scores.data());
      for (std::size_t m = 0; m < metrics; ++m) values[c][m * reps + k] = scores[m];
    }
  }

  std::vector<CellResult> out;
  out.reserve(cells.size() * metrics);
  for (std::size_t c = 0; c < cells.size(); ++c) summarize(spec, cells[c], values[c], out);
  return out;
}

namespace reference {

std::vector<CellResult> run_grid(const GridSpec& spec) {
  spec.validate();
  const auto cells = enumerate_cells(spec);
  const std::size_t reps = spec.replicates;
  std::vector<CellResult> out;
  std::vector<double> scores(spec.metrics.size());
  for (const auto& cell : cells) {
    const auto batch = reference::generate_batch(*cell.set, spec.scenario, cell.alpha, reps, cell.seed);
    std::vector<double> values(spec.metrics.size() * reps);
    for (std::size_t k = 0; k < reps; ++k) {
      score_into(spec, batch[k].ranking, scores.data());
      for (std::size_t m = 0; m < scores.size(); ++m) values[m * reps + k] = scores[m];
    }
    summarize(spec, cell, values, out);
  }
  return out;
}

}  // namespace reference

}  // namespace vpfair
