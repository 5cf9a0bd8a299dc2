#include <chrono>
#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "vpfair/checks.hpp"
#include "vpfair/cli.hpp"
#include "vpfair/errors.hpp"
#include "vpfair/metrics.hpp"

namespace vpfair::cli {

namespace {

std::string fixed(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::vector<int> parse_label_list(const std::string& text) {
  std::vector<int> labels;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(item, &used);
    } catch (const std::exception&) {
      throw ArgumentError("--protected: '" + item + "' is not an integer label");
    }
    if (used != item.size()) throw ArgumentError("--protected: '" + item + "' is not an integer label");
    labels.push_back(value);
  }
  if (labels.empty()) throw ArgumentError("--protected: empty label list");
  return labels;
}

struct MeasureOptions {
  std::string input;
  std::optional<std::string> protected_labels;
  std::vector<std::string> metrics;
  bool json = false;
};

int cmd_measure(const MeasureOptions& opts, std::ostream& out, std::ostream& err) {
  std::vector<MetricId> metrics;
  for (const auto& name : opts.metrics) {
    const auto id = parse_metric_id(name);
    if (!id) throw ArgumentError("--metric: unknown metric '" + name + "' (ndd, ndr, ndkl, ndjs)");
    metrics.push_back(*id);
  }
  if (metrics.empty()) metrics = {MetricId::ndd, MetricId::ndr, MetricId::ndkl, MetricId::ndjs};

  const Ranking ranking = load_ranking(opts.input);

  const bool any_binomial = std::any_of(metrics.begin(), metrics.end(), is_binomial);
  std::vector<int> protected_values{-3, -2, -1};
  if (opts.protected_labels) {
    protected_values = parse_label_list(*opts.protected_labels);
  } else if (any_binomial) {
    err << "warning: --protected not given; treating -3,-2,-1 (opposing viewpoints) as protected\n";
  }
  const auto spec = ProtectedSpec::from_values(protected_values);

  std::vector<MetricResult> results;
  for (MetricId m : metrics) results.push_back(evaluate(m, ranking, spec));

  if (opts.json) {
    nlohmann::json doc;
    doc["input"] = opts.input;
    doc["n"] = ranking.size();
    doc["protected"] = protected_values;
    doc["results"] = nlohmann::json::array();
    for (const auto& r : results) {
      doc["results"].push_back(
          {{"metric", std::string(to_string(r.metric))}, {"value", r.value}, {"raw_sum", r.raw_sum}, {"z", r.z}});
    }
    out << doc.dump(2) << '\n';
  } else {
    out << "metric,value,raw_sum,z\n";
    for (const auto& r : results) {
      out << to_string(r.metric) << ',' << fixed(r.value) << ',' << fixed(r.raw_sum) << ',' << fixed(r.z) << '\n';
    }
  }
  return kExitOk;
}

std::filesystem::path prepare_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }
  return dir;
}

void print_summary(const std::string& scenario, const std::vector<CellResult>& results, std::ostream& out) {
  out << scenario << ": mean at alpha = -1 / 0 / +1\n";
  auto sorted = results;
  sort_results(sorted);
  for (std::size_t i = 0; i < sorted.size();) {
    const auto& first = sorted[i];
    std::optional<double> lo, mid, hi;
    std::size_t j = i;
    for (; j < sorted.size() && sorted[j].metric == first.metric && sorted[j].set == first.set; ++j) {
      if (std::abs(sorted[j].alpha + 1.0) < 1e-9) lo = sorted[j].mean;
      if (std::abs(sorted[j].alpha) < 1e-9) mid = sorted[j].mean;
      if (std::abs(sorted[j].alpha - 1.0) < 1e-9) hi = sorted[j].mean;
    }
    const auto show = [](const std::optional<double>& v) { return v ? fixed(*v, 4) : std::string("   -  "); };
    out << "  " << to_string(first.metric) << "  " << first.set << "  " << show(lo) << "  " << show(mid) << "  "
        << show(hi) << '\n';
    i = j;
  }
}

// Runs one study, writes <dir>/<scenario>.csv and <dir>/<scenario>_<metric>.svg.
std::vector<CellResult> run_study(const GridSpec& spec, int threads, const std::filesystem::path& dir,
                                  std::ostream& out) {
  const auto scenario = to_string(spec.scenario.kind);
  const auto results = run_grid(spec, threads);
  emit_csv(results, dir / (scenario + ".csv"));
  for (MetricId m : spec.metrics) {
    emit_plot(results, m, dir / (scenario + "_" + std::string(to_string(m)) + ".svg"),
              std::string(to_string(m)) + " (" + scenario + " scenario)");
  }
  print_summary(scenario, results, out);
  return results;
}

int cmd_simulate(const std::string& config_path, std::optional<int> threads, std::ostream& out) {
  const auto config = load_run_config(config_path);
  const auto dir = prepare_dir(config.output_dir);
  const int team = threads.value_or(config.threads);
  for (const auto& study : config.studies) run_study(config.grid_for(study), team, dir, out);
  out << "wrote results to " << dir.string() << '\n';
  return kExitOk;
}

struct ReproduceOptions {
  std::uint64_t seed = kDefaultSeed;
  std::string out_dir = "reproduce-out";
  std::size_t replicates = kFullScaleReplicates;
  int threads = 0;
};

int cmd_reproduce(const ReproduceOptions& opts, std::ostream& out) {
  const auto dir = prepare_dir(opts.out_dir);

  GridSpec binomial;
  binomial.scenario.kind = ScenarioKind::binomial;
  binomial.metrics = {MetricId::ndd, MetricId::ndr, MetricId::ndkl};
  binomial.replicates = opts.replicates;
  binomial.base_seed = opts.seed;

  GridSpec multinomial = binomial;
  multinomial.scenario.kind = ScenarioKind::multinomial;
  multinomial.metrics = {MetricId::ndjs};

  const auto started = std::chrono::steady_clock::now();
  const auto binomial_results = run_study(binomial, opts.threads, dir, out);
  const auto multinomial_results = run_study(multinomial, opts.threads, dir, out);
  const auto elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();

  const auto checks =
      check_reported_behavior(binomial_results, multinomial_results, tolerance_scale_for(opts.replicates));
  const std::string report = format_checks(checks, opts.replicates);
  {
    std::ofstream file(dir / "checks.txt", std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + (dir / "checks.txt").string() + "'");
    file << report;
    if (!file.flush()) throw IoError("failed writing checks.txt");
  }
  std::size_t passed = 0;
  for (const auto& c : checks) passed += c.passed ? 1 : 0;
  out << "checks: " << passed << "/" << checks.size() << " passed (see " << (dir / "checks.txt").string() << ")\n";
  out << "elapsed: " << fixed(elapsed, 1) << " s\n";
  return kExitOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Viewpoint fairness metrics for ranked lists"};
  app.require_subcommand(1);

  MeasureOptions measure;
  std::string protected_text;
  auto* measure_cmd = app.add_subcommand("measure", "Score a ranking file with nDD, nDR, nDKL and/or nDJS");
  measure_cmd->add_option("--input", measure.input, "Ranking file, one label (-3..+3) per line, top rank first")
      ->required();
  auto* protected_opt =
      measure_cmd->add_option("--protected", protected_text, "Comma-separated protected labels (default -3,-2,-1)");
  measure_cmd->add_option("--metric", measure.metrics, "ndd, ndr, ndkl, ndjs (repeatable; default all)")
      ->delimiter(',');
  measure_cmd->add_flag("--json", measure.json, "Print a JSON object instead of CSV");

  std::string config_path;
  std::optional<int> simulate_threads;
  auto* simulate_cmd = app.add_subcommand("simulate", "Run an alpha-grid simulation study from a JSON config");
  simulate_cmd->add_option("--config", config_path, "Path to the JSON run config")->required();
  simulate_cmd->add_option("--threads", simulate_threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

  ReproduceOptions reproduce;
  auto* reproduce_cmd =
      app.add_subcommand("reproduce", "Run both S1-S3 studies at full scale and check the reported behavior");
  reproduce_cmd->add_option("--seed", reproduce.seed, "Base seed")->capture_default_str();
  reproduce_cmd->add_option("--out", reproduce.out_dir, "Output directory")->capture_default_str();
  reproduce_cmd->add_option("--replicates", reproduce.replicates, "Rankings per (set, alpha) cell")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  reproduce_cmd->add_option("--threads", reproduce.threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    if (e.get_exit_code() == 0) return kExitOk;
    err << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (*measure_cmd) {
      if (protected_opt->count() > 0) measure.protected_labels = protected_text;
      return cmd_measure(measure, out, err);
    }
    if (*simulate_cmd) return cmd_simulate(config_path, simulate_threads, out);
    if (*reproduce_cmd) return cmd_reproduce(reproduce, out);
  } catch (const RankingParseError& e) {
    err << "error: " << measure.input << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << '\n';
    return kExitRuntime;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitRuntime;
  }
  return kExitUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  argv.reserve(args.size() + 1);
  argv.push_back("vpfair");
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace vpfair::cli
