#pragma once

#include "seqsamp/basis_table.hpp"
#include "seqsamp/config.hpp"
#include "seqsamp/schedule.hpp"

#include <cstdint>
#include <vector>

namespace seqsamp {

/// Running counters of one scenario at period n.
///
/// Every period is either forced (counted in `forced`) or uses exactly one
/// BFS support chosen from the certainty-equivalence LP (counted in
/// `support_uses`), so n = sum(forced) + sum(support_uses) always.
struct CheckpointRecord {
  std::int64_t n = 0;
  double total_outcome = 0.0;  // S_n
  double total_cost = 0.0;     // C_n
  std::vector<std::int64_t> pulls;   // T_n(j)
  std::vector<std::int64_t> forced;  // SS_j(n)
  std::vector<std::int64_t> support_uses;      // Y^b(n)
  std::vector<std::int64_t> support_arm_uses;  // Y_j^b(n), row-major [support][arm]
  std::vector<double> support_outcome;         // outcome sum over periods using b
  double optimal_outcome = 0.0;                // W_n

  double avg_outcome() const { return total_outcome / static_cast<double>(n); }
  double avg_cost() const { return total_cost / static_cast<double>(n); }
};

struct Trajectory {
  std::vector<Basis> supports;
  /// truly_optimal[s] iff supports[s] is in the optimal set for the true means.
  std::vector<char> truly_optimal;
  double z_star = 0.0;
  double budget = 0.0;
  double outcome_bound = 0.0;
  std::vector<CheckpointRecord> records;
};

struct SummaryRow {
  std::int64_t n = 0;
  double mean_avg_outcome = 0.0;
  double sd = 0.0;
  double ci_lo = 0.0;
  double ci_hi = 0.0;
  double mean_avg_cost = 0.0;
  double regret = 0.0;  // mean_avg_outcome - z*
  double forced_frac_total = 0.0;
  double nonopt_frac = 0.0;
  double opt_frac = 0.0;
  std::vector<double> forced_frac_arm;
};

struct ReplicationSummary {
  double beta = 0.0;
  double z_star = 0.0;
  double budget = 0.0;
  int replications = 0;
  std::uint64_t base_seed = 0;
  std::vector<SummaryRow> rows;
};

/// Everything shared by the scenarios of one experiment: the basis table, the
/// forced schedule and the true optimal set (computed in exact arithmetic).
class Simulator {
 public:
  /// Throws ConfigError on invalid configuration.
  explicit Simulator(ExperimentConfig config);

  const ExperimentConfig& config() const { return config_; }
  const BasisTable& table() const { return table_; }
  const ForcedSchedule& schedule() const { return schedule_; }
  const std::vector<std::int64_t>& checkpoints() const { return checkpoints_; }
  double z_star() const { return z_star_; }
  const std::vector<char>& truly_optimal() const { return truly_optimal_; }

  /// Deterministic in `seed`.
  Trajectory run_scenario(std::uint64_t seed) const;

  /// Runs `replications` scenarios with seeds scenario_seed(base_seed, r) on
  /// `threads` workers (0 = hardware concurrency). The reduction is ordered by
  /// scenario index, so the result does not depend on `threads`.
  ReplicationSummary replicate(int replications, std::uint64_t base_seed, unsigned threads = 1) const;

 private:
  ExperimentConfig config_;
  std::vector<double> true_means_;
  BasisTable table_;
  ForcedSchedule schedule_;
  std::vector<std::int64_t> checkpoints_;
  std::vector<char> truly_optimal_;
  double z_star_ = 0.0;
  double outcome_bound_ = 0.0;
};

std::uint64_t scenario_seed(std::uint64_t base_seed, std::uint64_t scenario);

Trajectory run_scenario(const ExperimentConfig& config, std::uint64_t seed);
ReplicationSummary replicate(const ExperimentConfig& config, int replications, std::uint64_t base_seed,
                             unsigned threads = 1);

struct FeasibilityReport {
  std::vector<std::int64_t> n;
  std::vector<double> avg_cost;
  /// max avg cost over checkpoints in [N/2, N]; a finite-horizon limsup stand-in.
  double tail_proxy = 0.0;
  double budget = 0.0;
  double tolerance = 0.0;
  bool infeasible = false;
};

FeasibilityReport feasibility_report(const Trajectory& trajectory, double tolerance = 0.1);
FeasibilityReport feasibility_report(const ReplicationSummary& summary, double tolerance = 0.1);

struct DiagnosticsRow {
  std::int64_t n = 0;
  std::vector<double> forced_frac;  // SS_i(n)/n
  double forced_frac_total = 0.0;
  double nonopt_frac = 0.0;          // sum over non-optimal b of Y^b(n)/n
  double opt_frac = 0.0;             // Y(n)/n
  double optimal_outcome_avg = 0.0;  // W_n/n
  /// z_n^b per support; NaN where b was never used.
  std::vector<double> support_value;
  bool identity_holds = false;       // n == sum SS + sum Y^b
};

std::vector<DiagnosticsRow> diagnostics_report(const Trajectory& trajectory);

}  // namespace seqsamp
