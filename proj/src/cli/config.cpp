#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "vpfair/cli.hpp"
#include "vpfair/errors.hpp"

namespace vpfair::cli {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& object, const std::string& path, std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : object.items()) {
    bool known = false;
    for (const char* a : allowed) known = known || key == a;
    if (!known) throw ConfigError("unknown key '" + key + "'", path + "/" + key);
  }
}

const json& expect(const json& value, json::value_t type, const std::string& path, const char* what) {
  const bool ok = type == json::value_t::number_integer
                      ? value.is_number_integer()
                      : (type == json::value_t::number_float ? value.is_number() : value.type() == type);
  if (!ok) throw ConfigError(std::string("expected ") + what, path);
  return value;
}

std::int64_t expect_int(const json& value, const std::string& path, std::int64_t lo, std::int64_t hi) {
  expect(value, json::value_t::number_integer, path, "an integer");
  const auto v = value.is_number_unsigned() && value.get<std::uint64_t>() > static_cast<std::uint64_t>(INT64_MAX)
                     ? INT64_MAX
                     : value.get<std::int64_t>();
  if (v < lo || v > hi) {
    throw ConfigError("value " + std::to_string(v) + " outside [" + std::to_string(lo) + ", " + std::to_string(hi) + "]",
                      path);
  }
  return v;
}

MetricId expect_metric(const json& value, const std::string& path) {
  expect(value, json::value_t::string, path, "a metric name");
  const auto id = parse_metric_id(value.get<std::string>());
  if (!id) throw ConfigError("unknown metric '" + value.get<std::string>() + "' (nDD, nDR, nDKL, nDJS)", path);
  return *id;
}

Study parse_study(const json& node, const std::string& path) {
  expect(node, json::value_t::object, path, "an object");
  reject_unknown_keys(node, path, {"scenario", "metrics"});
  Study study;
  if (!node.contains("scenario")) throw ConfigError("missing required key 'scenario'", path + "/scenario");
  expect(node["scenario"], json::value_t::string, path + "/scenario", "\"binomial\" or \"multinomial\"");
  const auto kind = parse_scenario(node["scenario"].get<std::string>());
  if (!kind) {
    throw ConfigError("unknown scenario '" + node["scenario"].get<std::string>() + "'", path + "/scenario");
  }
  study.scenario = *kind;
  if (node.contains("metrics")) {
    const auto& metrics = expect(node["metrics"], json::value_t::array, path + "/metrics", "an array");
    for (std::size_t i = 0; i < metrics.size(); ++i) {
      study.metrics.push_back(expect_metric(metrics[i], path + "/metrics/" + std::to_string(i)));
    }
    if (study.metrics.empty()) throw ConfigError("at least one metric required", path + "/metrics");
  } else if (study.scenario == ScenarioKind::binomial) {
    study.metrics = {MetricId::ndd, MetricId::ndr, MetricId::ndkl};
  } else {
    study.metrics = {MetricId::ndjs};
  }
  return study;
}

}  // namespace

GridSpec RunConfig::grid_for(const Study& study) const {
  GridSpec spec;
  spec.alphas = alphas;
  spec.sets = sets;
  spec.scenario.kind = study.scenario;
  spec.scenario.protected_labels = ProtectedSpec::from_values(protected_labels);
  spec.replicates = replicates;
  spec.metrics = study.metrics;
  spec.base_seed = seed;
  return spec;
}

RunConfig parse_run_config(const std::string& text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("malformed JSON: ") + e.what(), "");
  }
  expect(root, json::value_t::object, "", "a JSON object at the top level");
  reject_unknown_keys(root, "",
                      {"sets", "custom_sets", "alphas", "replicates", "seed", "threads", "protected", "studies", "output"});

  RunConfig config;

  if (root.contains("sets")) {
    const auto& sets = expect(root["sets"], json::value_t::array, "/sets", "an array of set names");
    for (std::size_t i = 0; i < sets.size(); ++i) {
      const std::string path = "/sets/" + std::to_string(i);
      expect(sets[i], json::value_t::string, path, "a set name");
      try {
        config.sets.push_back(builtin_set(sets[i].get<std::string>()));
      } catch (const ConfigError& e) {
        throw ConfigError(e.what(), path);
      }
    }
  } else if (!root.contains("custom_sets")) {
    config.sets = builtin_sets();
  }

  if (root.contains("custom_sets")) {
    const auto& custom = expect(root["custom_sets"], json::value_t::array, "/custom_sets", "an array");
    for (std::size_t i = 0; i < custom.size(); ++i) {
      const std::string path = "/custom_sets/" + std::to_string(i);
      expect(custom[i], json::value_t::object, path, "an object");
      reject_unknown_keys(custom[i], path, {"name", "counts"});
      if (!custom[i].contains("name")) throw ConfigError("missing required key 'name'", path + "/name");
      if (!custom[i].contains("counts")) throw ConfigError("missing required key 'counts'", path + "/counts");
      LabelSet set;
      set.name = expect(custom[i]["name"], json::value_t::string, path + "/name", "a string").get<std::string>();
      if (set.name.empty()) throw ConfigError("name must not be empty", path + "/name");
      const auto& counts = expect(custom[i]["counts"], json::value_t::array, path + "/counts", "an array of 7 counts");
      if (counts.size() != ViewpointLabel::kCount) {
        throw ConfigError("expected 7 counts (labels -3..+3), got " + std::to_string(counts.size()), path + "/counts");
      }
      for (std::size_t c = 0; c < counts.size(); ++c) {
        set.counts[c] = static_cast<std::size_t>(
            expect_int(counts[c], path + "/counts/" + std::to_string(c), 0, 1'000'000));
      }
      if (set.total() == 0) throw ConfigError("set has no items", path + "/counts");
      config.sets.push_back(set);
    }
  }
  {
    std::set<std::string> names;
    for (const auto& s : config.sets) {
      if (!names.insert(s.name).second) throw ConfigError("duplicate set name '" + s.name + "'", "/sets");
    }
  }

  if (root.contains("alphas")) {
    const auto& alphas = expect(root["alphas"], json::value_t::array, "/alphas", "an array of numbers");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
      const std::string path = "/alphas/" + std::to_string(i);
      const double a = expect(alphas[i], json::value_t::number_float, path, "a number").get<double>();
      if (!(a >= -1.0 && a <= 1.0)) throw ConfigError("alpha outside [-1, 1]", path);
      config.alphas.push_back(a);
    }
    if (config.alphas.empty()) throw ConfigError("alpha grid is empty", "/alphas");
  } else {
    config.alphas = default_alpha_grid();
  }

  if (root.contains("replicates")) {
    config.replicates = static_cast<std::size_t>(expect_int(root["replicates"], "/replicates", 1, 10'000'000));
  }
  if (root.contains("seed")) {
    const auto& seed = root["seed"];
    if (!seed.is_number_integer()) throw ConfigError("expected a non-negative integer", "/seed");
    if (seed.is_number_unsigned()) {
      config.seed = seed.get<std::uint64_t>();
    } else {
      config.seed = static_cast<std::uint64_t>(expect_int(seed, "/seed", 0, INT64_MAX));
    }
  }
  if (root.contains("threads")) config.threads = static_cast<int>(expect_int(root["threads"], "/threads", 0, 4096));

  if (root.contains("protected")) {
    const auto& labels = expect(root["protected"], json::value_t::array, "/protected", "an array of labels");
    config.protected_labels.clear();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      config.protected_labels.push_back(
          static_cast<int>(expect_int(labels[i], "/protected/" + std::to_string(i), ViewpointLabel::kMin,
                                      ViewpointLabel::kMax)));
    }
    try {
      (void)ProtectedSpec::from_values(config.protected_labels);
    } catch (const ArgumentError& e) {
      throw ConfigError(e.what(), "/protected");
    }
  }

  if (root.contains("studies")) {
    const auto& studies = expect(root["studies"], json::value_t::array, "/studies", "an array");
    std::set<ScenarioKind> seen;
    for (std::size_t i = 0; i < studies.size(); ++i) {
      const std::string path = "/studies/" + std::to_string(i);
      auto study = parse_study(studies[i], path);
      if (!seen.insert(study.scenario).second) {
        throw ConfigError("scenario '" + to_string(study.scenario) + "' listed twice", path + "/scenario");
      }
      config.studies.push_back(std::move(study));
    }
    if (config.studies.empty()) throw ConfigError("at least one study required", "/studies");
  } else {
    config.studies = {Study{ScenarioKind::binomial, {MetricId::ndd, MetricId::ndr, MetricId::ndkl}},
                      Study{ScenarioKind::multinomial, {MetricId::ndjs}}};
  }

  if (root.contains("output")) {
    const auto& output = expect(root["output"], json::value_t::object, "/output", "an object");
    reject_unknown_keys(output, "/output", {"dir"});
    if (output.contains("dir")) {
      config.output_dir = expect(output["dir"], json::value_t::string, "/output/dir", "a path").get<std::string>();
    }
  }
  return config;
}

RunConfig load_run_config(const std::filesystem::path& path) {
  std::ifstream file(path);
  if (!file) throw ConfigError("cannot open config file '" + path.string() + "'");
  std::ostringstream text;
  text << file.rdbuf();
  return parse_run_config(text.str());
}

}  // namespace vpfair::cli
