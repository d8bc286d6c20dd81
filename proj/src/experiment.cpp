#include "seqsamp/experiment.hpp"

#include "seqsamp/csv.hpp"

#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <functional>

namespace seqsamp {

namespace fs = std::filesystem;

namespace {

void ensure_directory(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec || !fs::is_directory(dir)) throw IoError(fmt::format("cannot create directory '{}'", dir.string()));
}

std::string write_file(const fs::path& path, const std::function<void(std::ostream&)>& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(fmt::format("cannot write '{}'", path.string()));
  body(out);
  out.flush();
  if (!out) throw IoError(fmt::format("write failed for '{}'", path.string()));
  return path.string();
}

}  // namespace

RunOutput simulate_to_directory(const ExperimentConfig& config, const std::string& out_dir, unsigned threads,
                                bool traces) {
  const Simulator simulator(config);
  const fs::path dir(out_dir);
  ensure_directory(dir);

  RunOutput result;
  result.summary = simulator.replicate(config.replications, config.base_seed, threads);
  result.feasibility = feasibility_report(result.summary);
  result.files.push_back(
      write_file(dir / "summary.csv", [&](std::ostream& out) { write_summary_csv(out, result.summary); }));
  result.files.push_back(
      write_file(dir / "diagnostics.csv", [&](std::ostream& out) { write_diagnostics_csv(out, result.summary); }));

  if (traces) {
    ensure_directory(dir / "traces");
    for (int r = 0; r < config.replications; ++r) {
      const Trajectory traj = simulator.run_scenario(scenario_seed(config.base_seed, static_cast<std::uint64_t>(r)));
      result.files.push_back(write_file(dir / "traces" / fmt::format("scenario_{:04d}.csv", r),
                                        [&](std::ostream& out) { write_trace_csv(out, traj); }));
    }
  }
  return result;
}

std::vector<RunOutput> sweep_to_directory(const ExperimentConfig& config, const std::vector<double>& betas,
                                          const std::string& out_dir, unsigned threads) {
  const fs::path dir(out_dir);
  ensure_directory(dir);

  std::vector<RunOutput> results;
  std::vector<ReplicationSummary> summaries;
  for (double beta : betas) {
    ExperimentConfig run = config;
    run.schedule.beta = beta;
    const Simulator simulator(run);
    RunOutput result;
    result.summary = simulator.replicate(run.replications, run.base_seed, threads);
    result.feasibility = feasibility_report(result.summary);
    const std::string tag = format_number(beta);
    result.files.push_back(write_file(dir / fmt::format("summary_beta_{}.csv", tag),
                                      [&](std::ostream& out) { write_summary_csv(out, result.summary); }));
    result.files.push_back(write_file(dir / fmt::format("diagnostics_beta_{}.csv", tag),
                                      [&](std::ostream& out) { write_diagnostics_csv(out, result.summary); }));
    summaries.push_back(result.summary);
    results.push_back(std::move(result));
  }
  if (!results.empty()) {
    results.back().files.push_back(
        write_file(dir / "comparison.csv", [&](std::ostream& out) { write_comparison_csv(out, summaries); }));
  }
  return results;
}

}  // namespace seqsamp
