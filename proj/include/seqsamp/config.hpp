#pragma once

#include "seqsamp/population.hpp"
#include "seqsamp/schedule.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace seqsamp {

/// Invalid experiment description (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Unreadable input or unwritable output (CLI exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExperimentConfig {
  std::vector<double> costs;
  double budget = 0.0;
  std::vector<PopulationSpec> populations;
  SparseScheduleSpec schedule;
  std::int64_t horizon = 10000;
  int replications = 1000;
  std::uint64_t base_seed = 1;
  /// Periods at which trajectories are recorded; empty selects default_checkpoints().
  std::vector<std::int64_t> checkpoints;
  std::string output_dir = "results";

  friend bool operator==(const ExperimentConfig&, const ExperimentConfig&) = default;
};

/// Every period up to 100, then 1-2-5 per decade, always ending at `horizon`.
std::vector<std::int64_t> default_checkpoints(std::int64_t horizon);

/// Sorted, deduplicated checkpoints clipped to [1, horizon], horizon appended.
std::vector<std::int64_t> resolved_checkpoints(const ExperimentConfig& config);

/// Throws ConfigError describing the first violated rule.
void validate(const ExperimentConfig& config);

ExperimentConfig parse_config(const std::string& json_text);
std::string serialize_config(const ExperimentConfig& config);

/// Reads and validates; IoError if the file cannot be read.
ExperimentConfig load_config(const std::string& path);

}  // namespace seqsamp
