#pragma once

#include "seqsamp/simulator.hpp"

#include <string>
#include <vector>

namespace seqsamp {

struct RunOutput {
  ReplicationSummary summary;
  FeasibilityReport feasibility;
  std::vector<std::string> files;
};

/// Writes summary.csv and diagnostics.csv (and traces/scenario_NNNN.csv when
/// `traces` is set) under `out_dir`. Throws IoError on filesystem failure.
RunOutput simulate_to_directory(const ExperimentConfig& config, const std::string& out_dir, unsigned threads,
                                bool traces = false);

/// One summary_beta_<b>.csv / diagnostics_beta_<b>.csv pair per exponent plus
/// comparison.csv. The returned vector has the extra comparison file listed in
/// the last entry's `files`.
std::vector<RunOutput> sweep_to_directory(const ExperimentConfig& config, const std::vector<double>& betas,
                                          const std::string& out_dir, unsigned threads);

}  // namespace seqsamp
