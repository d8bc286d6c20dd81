#include "seqsamp/config.hpp"
#include "seqsamp/csv.hpp"
#include "seqsamp/experiment.hpp"

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace seqsamp;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig config;
  config.costs = {3, 4, 8, 10};
  config.budget = 5;
  config.populations = {Binomial{5, 0.3}, Bernoulli{0.5}, DiscreteBounded{{0.0, 4.5, 9.0}, {0.25, 0.5, 0.25}},
                        PointMass{4.0}};
  config.schedule = {2.0, {0, 1, 2, 3}};
  config.horizon = 500;
  config.replications = 4;
  config.base_seed = 99;
  config.output_dir = "out";
  return config;
}

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) lines.push_back(line);
  return lines;
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("config round trip") {
  const auto config = small_config();
  CHECK(parse_config(serialize_config(config)) == config);

  auto with_checkpoints = config;
  with_checkpoints.checkpoints = {10, 100, 250};
  with_checkpoints.schedule.offsets.clear();
  CHECK(parse_config(serialize_config(with_checkpoints)) == with_checkpoints);
}

TEST_CASE("config parsing") {
  const auto config = parse_config(R"({
    "instance": {"costs": [1, 2], "budget": 1.5},
    "populations": [{"family": "point_mass", "value": 1}, {"family": "bernoulli", "p": 0.25}],
    "schedule": {"beta": 1.5},
    "horizon": 100, "replications": 2, "base_seed": 5, "output_dir": "x"
  })");
  CHECK(config.costs == std::vector<double>{1, 2});
  CHECK(std::get<PointMass>(config.populations[0]).value == 1.0);
  CHECK(std::get<Bernoulli>(config.populations[1]).p == 0.25);
  CHECK(config.schedule.beta == 1.5);
  CHECK(config.schedule.offsets.empty());

  CHECK_THROWS_AS(parse_config("{"), ConfigError);
  CHECK_THROWS_AS(parse_config(R"({"instance": {"costs": [1, 2], "budget": 1.5}})"), ConfigError);
  auto bad = small_config();
  bad.populations.pop_back();
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = small_config();
  bad.schedule.beta = 1.0;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = small_config();
  bad.budget = 2.0;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  bad = small_config();
  bad.replications = 0;
  CHECK_THROWS_AS(validate(bad), ConfigError);
  CHECK_THROWS_AS(load_config("/nonexistent/config.json"), IoError);
}

TEST_CASE("checkpoints") {
  const auto grid = default_checkpoints(10000);
  CHECK(grid.front() == 1);
  CHECK(grid[99] == 100);
  CHECK(grid.back() == 10000);
  CHECK(std::is_sorted(grid.begin(), grid.end()));
  CHECK(std::find(grid.begin(), grid.end(), 1000) != grid.end());
  CHECK(default_checkpoints(7).back() == 7);
  CHECK(default_checkpoints(7).size() == 7);

  auto config = small_config();
  config.checkpoints = {400, 5, 5, 9999};
  CHECK(resolved_checkpoints(config) == std::vector<std::int64_t>{5, 400, 500});
}

TEST_CASE("csv layout") {
  const auto config = small_config();
  const auto summary = replicate(config, config.replications, config.base_seed);

  std::ostringstream out;
  write_summary_csv(out, summary);
  auto lines = lines_of(out.str());
  REQUIRE(lines.size() == resolved_checkpoints(config).size() + 2);
  CHECK(lines[0] == metadata_line(summary));
  CHECK(lines[0].rfind("# z_star=", 0) == 0);
  CHECK(lines[1] == kSummaryHeader);
  CHECK(lines.back().rfind("2,500,", 0) == 0);

  std::ostringstream diag;
  write_diagnostics_csv(diag, summary);
  lines = lines_of(diag.str());
  CHECK(lines[1] == "beta,n,forced_frac_total,nonopt_frac,opt_frac,forced_frac_arm1,forced_frac_arm2,"
                    "forced_frac_arm3,forced_frac_arm4");

  std::ostringstream trace;
  write_trace_csv(trace, run_scenario(config, 1));
  lines = lines_of(trace.str());
  CHECK(lines[0] == "n,avg_outcome,avg_cost,forced_total,nonopt_uses,opt_uses,pulls_arm1,pulls_arm2,"
                    "pulls_arm3,pulls_arm4");

  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(3.0) == "3");
}

TEST_CASE("experiment writes its files") {
  const auto dir = std::filesystem::temp_directory_path() / "seqsamp_test_config_out";
  std::filesystem::remove_all(dir);
  const auto config = small_config();
  const auto run = simulate_to_directory(config, dir.string(), 2, true);
  CHECK(std::filesystem::exists(dir / "summary.csv"));
  CHECK(std::filesystem::exists(dir / "diagnostics.csv"));
  CHECK(std::filesystem::exists(dir / "traces" / "scenario_0000.csv"));
  CHECK(std::filesystem::exists(dir / "traces" / "scenario_0003.csv"));
  CHECK(lines_of(slurp(dir / "summary.csv"))[1] == kSummaryHeader);

  const auto sweep = sweep_to_directory(config, {1.5, 3.0}, (dir / "sweep").string(), 1);
  CHECK(sweep.size() == 2);
  CHECK(std::filesystem::exists(dir / "sweep" / "summary_beta_1.5.csv"));
  CHECK(std::filesystem::exists(dir / "sweep" / "diagnostics_beta_3.csv"));
  const auto comparison = lines_of(slurp(dir / "sweep" / "comparison.csv"));
  CHECK(comparison.size() == 2 + 2 * resolved_checkpoints(config).size());

  std::filesystem::remove_all(dir);
}
