#include "seqsamp/config.hpp"

#include "seqsamp/instance.hpp"

#include <fmt/format.h>
#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace seqsamp {

using nlohmann::json;

std::vector<std::int64_t> default_checkpoints(std::int64_t horizon) {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 1; n <= std::min<std::int64_t>(100, horizon); ++n) out.push_back(n);
  for (std::int64_t decade = 100; decade <= horizon; decade *= 10) {
    for (std::int64_t step : {2, 5, 10}) {
      const std::int64_t n = decade * step;
      if (n <= horizon) out.push_back(n);
    }
  }
  if (out.empty() || out.back() != horizon) out.push_back(horizon);
  return out;
}

std::vector<std::int64_t> resolved_checkpoints(const ExperimentConfig& config) {
  if (config.checkpoints.empty()) return default_checkpoints(config.horizon);
  std::vector<std::int64_t> out;
  for (auto n : config.checkpoints) {
    if (n >= 1 && n <= config.horizon) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (out.empty() || out.back() != config.horizon) out.push_back(config.horizon);
  return out;
}

void validate(const ExperimentConfig& config) {
  try {
    ProblemInstance<double>(Eigen::Map<const Eigen::VectorXd>(config.costs.data(), static_cast<Eigen::Index>(config.costs.size())),
                            config.budget);
  } catch (const InstanceError& e) {
    throw ConfigError(fmt::format("instance: {}", e.what()));
  }
  if (config.populations.size() != config.costs.size()) {
    throw ConfigError(fmt::format("{} populations given for {} costs", config.populations.size(), config.costs.size()));
  }
  for (std::size_t i = 0; i < config.populations.size(); ++i) {
    try {
      validate(config.populations[i]);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(fmt::format("population {}: {}", i + 1, e.what()));
    }
  }
  if (config.replications < 1) throw ConfigError("replications must be at least 1");
  try {
    build_schedule(config.schedule, static_cast<int>(config.costs.size()), config.horizon);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(fmt::format("schedule: {}", e.what()));
  }
}

namespace {

json population_to_json(const PopulationSpec& spec) {
  json j;
  j["family"] = family_name(spec);
  if (auto* b = std::get_if<Binomial>(&spec)) {
    j["trials"] = b->trials;
    j["p"] = b->p;
  } else if (auto* be = std::get_if<Bernoulli>(&spec)) {
    j["p"] = be->p;
  } else if (auto* d = std::get_if<DiscreteBounded>(&spec)) {
    j["values"] = d->values;
    j["probabilities"] = d->probabilities;
  } else if (auto* m = std::get_if<PointMass>(&spec)) {
    j["value"] = m->value;
  }
  return j;
}

PopulationSpec population_from_json(const json& j) {
  const std::string family = j.at("family").get<std::string>();
  if (family == "binomial") return Binomial{j.at("trials").get<int>(), j.at("p").get<double>()};
  if (family == "bernoulli") return Bernoulli{j.at("p").get<double>()};
  if (family == "discrete") {
    return DiscreteBounded{j.at("values").get<std::vector<double>>(), j.at("probabilities").get<std::vector<double>>()};
  }
  if (family == "point_mass") return PointMass{j.at("value").get<double>()};
  throw ConfigError(fmt::format("unknown population family '{}'", family));
}

}  // namespace

ExperimentConfig parse_config(const std::string& json_text) {
  ExperimentConfig config;
  try {
    const json root = json::parse(json_text);
    const json& instance = root.at("instance");
    config.costs = instance.at("costs").get<std::vector<double>>();
    config.budget = instance.at("budget").get<double>();
    for (const json& p : root.at("populations")) config.populations.push_back(population_from_json(p));
    const json& schedule = root.at("schedule");
    config.schedule.beta = schedule.at("beta").get<double>();
    if (schedule.contains("offsets")) config.schedule.offsets = schedule.at("offsets").get<std::vector<std::int64_t>>();
    config.horizon = root.at("horizon").get<std::int64_t>();
    config.replications = root.value("replications", config.replications);
    config.base_seed = root.value("base_seed", config.base_seed);
    if (root.contains("checkpoints")) config.checkpoints = root.at("checkpoints").get<std::vector<std::int64_t>>();
    config.output_dir = root.value("output_dir", config.output_dir);
  } catch (const json::exception& e) {
    throw ConfigError(fmt::format("config: {}", e.what()));
  }
  return config;
}

std::string serialize_config(const ExperimentConfig& config) {
  json root;
  root["instance"] = {{"costs", config.costs}, {"budget", config.budget}};
  root["populations"] = json::array();
  for (const auto& p : config.populations) root["populations"].push_back(population_to_json(p));
  root["schedule"] = {{"beta", config.schedule.beta}};
  if (!config.schedule.offsets.empty()) root["schedule"]["offsets"] = config.schedule.offsets;
  root["horizon"] = config.horizon;
  root["replications"] = config.replications;
  root["base_seed"] = config.base_seed;
  if (!config.checkpoints.empty()) root["checkpoints"] = config.checkpoints;
  root["output_dir"] = config.output_dir;
  return root.dump(2) + "\n";
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError(fmt::format("cannot read config '{}'", path));
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ExperimentConfig config = parse_config(buffer.str());
  validate(config);
  return config;
}

}  // namespace seqsamp
