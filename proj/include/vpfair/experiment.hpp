#pragma once

// Alpha-grid simulation study: for every (label set, alpha) cell, sample a
// batch of rankings, score each with the requested metrics and reduce to
// mean and standard deviation.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "vpfair/kernels.hpp"
#include "vpfair/simulator.hpp"

namespace vpfair {

/// -1.0, -0.9, ..., 1.0, generated as i / 10.
std::vector<double> default_alpha_grid();

struct GridSpec {
  std::vector<double> alphas = default_alpha_grid();
  std::vector<LabelSet> sets = builtin_sets();
  ScenarioConfig scenario{};
  std::size_t replicates = 1000;
  std::vector<MetricId> metrics{MetricId::ndd, MetricId::ndr, MetricId::ndkl};
  std::uint64_t base_seed = 20210701;
  MetricOptions options{};

  /// Throws ConfigError when alphas lie outside [-1, 1], replicates == 0, or
  /// sets/metrics are empty.
  void validate() const;
};

struct CellResult {
  std::string set;
  double alpha = 0.0;
  MetricId metric = MetricId::ndd;
  double mean = 0.0;
  double stddev = 0.0;  ///< sample standard deviation; 0 for a single replicate
  std::size_t n = 0;
};

/// Base seed of the replicate streams of one cell. Depends on the scenario,
/// set name and alpha value, not on the cell's position in the grid.
std::uint64_t cell_seed(std::uint64_t base_seed, ScenarioKind scenario, const std::string& set_name, double alpha);

/// Runs every cell. Replicates of all cells are spread over an OpenMP team of
/// `threads` workers (0 = OpenMP default); per-replicate values are reduced in
/// replicate order, so the result is bitwise independent of the thread count.
/// Output is ordered by set, then alpha, then metric as given in `spec`.
std::vector<CellResult> run_grid(const GridSpec& spec, int threads = 0);

namespace reference {

/// Single-threaded run_grid built on reference::generate_batch.
std::vector<CellResult> run_grid(const GridSpec& spec);

}  // namespace reference

// ---------------------------------------------------------------------------
// Output

/// Sorts by (metric enum order, set name, alpha).
void sort_results(std::vector<CellResult>& results);

/// Header `set,alpha,metric,mean,std,n`, rows sorted with sort_results, reals
/// with 6 decimals, LF line endings. Throws ArgumentError for empty results.
void write_csv(std::vector<CellResult> results, std::ostream& out);
/// write_csv into a file. Throws IoError when it cannot be written.
void emit_csv(const std::vector<CellResult>& results, const std::filesystem::path& destination);

/// Standalone SVG: one polyline of mean vs alpha per set, axes, labels,
/// legend, y fixed to [0, 1] with out-of-range points clipped.
/// Throws ArgumentError when `results` holds no cell for `metric`.
std::string render_plot(const std::vector<CellResult>& results, MetricId metric, const std::string& title = {});
void emit_plot(const std::vector<CellResult>& results, MetricId metric, const std::filesystem::path& destination,
               const std::string& title = {});

}  // namespace vpfair
