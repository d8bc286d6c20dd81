#include "seqsamp/simulator.hpp"

#include "seqsamp/lp.hpp"
#include "seqsamp/policy.hpp"
#include "seqsamp/population.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <thread>

namespace seqsamp {

namespace {

Eigen::VectorXd to_vector(const std::vector<double>& v) {
  return Eigen::Map<const Eigen::VectorXd>(v.data(), static_cast<Eigen::Index>(v.size()));
}

const ExperimentConfig& validated(const ExperimentConfig& config) {
  validate(config);
  return config;
}

// Per-checkpoint statistics kept from each scenario for the cross-scenario reduction.
constexpr std::size_t kFixedStats = 5;  // avg outcome, avg cost, forced, non-optimal, optimal

}  // namespace

std::uint64_t scenario_seed(std::uint64_t base_seed, std::uint64_t scenario) {
  return mix64(mix64(base_seed) ^ (scenario * 0xD1B54A32D192ED03ull));
}

Simulator::Simulator(ExperimentConfig config)
    : config_(validated(config)),
      true_means_([&] {
        std::vector<double> m;
        for (const auto& p : config_.populations) m.push_back(true_mean(p));
        return m;
      }()),
      table_(ProblemInstance<double>(to_vector(config_.costs), config_.budget)),
      schedule_(build_schedule(config_.schedule, static_cast<int>(config_.costs.size()), config_.horizon)),
      checkpoints_(resolved_checkpoints(config_)) {
  // The ground-truth classification must not be perturbed by rounding.
  const ProblemInstance<Rational> exact =
      ProblemInstance<double>(to_vector(config_.costs), config_.budget).cast<Rational>();
  const OptimalSet<Rational> optimal = optimal_set(exact, vector_cast<Rational>(to_vector(true_means_)));
  for (const Basis& b : table_.supports()) truly_optimal_.push_back(optimal.contains(b) ? 1 : 0);
  z_star_ = static_cast<double>(optimal.value);
  for (const auto& p : config_.populations) outcome_bound_ = std::max(outcome_bound_, support_bound(p));
}

Trajectory Simulator::run_scenario(std::uint64_t seed) const {
  const int k = static_cast<int>(config_.costs.size());
  const std::size_t supports = table_.supports().size();

  PolicyState state(k, RngStream(seed, 0));
  std::vector<RngStream> arm_streams;
  for (int j = 0; j < k; ++j) arm_streams.emplace_back(seed, static_cast<std::uint64_t>(j) + 1);

  Trajectory traj;
  traj.supports = table_.supports();
  traj.truly_optimal = truly_optimal_;
  traj.z_star = z_star_;
  traj.budget = config_.budget;
  traj.outcome_bound = outcome_bound_;
  traj.records.reserve(checkpoints_.size());

  CheckpointRecord running;
  running.pulls.assign(static_cast<std::size_t>(k), 0);
  running.forced.assign(static_cast<std::size_t>(k), 0);
  running.support_uses.assign(supports, 0);
  running.support_arm_uses.assign(supports * static_cast<std::size_t>(k), 0);
  running.support_outcome.assign(supports, 0.0);

  auto next_checkpoint = checkpoints_.begin();
  for (std::int64_t t = 1; t <= config_.horizon; ++t) {
    const int scheduled = schedule_.arm_at(t);
    const Decision decision =
        policy_step(state, table_, scheduled >= 0 ? std::optional<int>(scheduled) : std::nullopt);
    const auto arm = static_cast<std::size_t>(decision.arm);
    const double outcome = sample(config_.populations[arm], arm_streams[arm]);
    update(state, decision.arm, outcome);

    running.n = t;
    running.total_outcome += outcome;
    running.total_cost += config_.costs[arm];
    ++running.pulls[arm];
    if (decision.forced) {
      ++running.forced[arm];
    } else {
      const std::size_t s = *decision.support;
      ++running.support_uses[s];
      ++running.support_arm_uses[s * static_cast<std::size_t>(k) + arm];
      running.support_outcome[s] += outcome;
      if (truly_optimal_[s]) running.optimal_outcome += outcome;
    }

    if (next_checkpoint != checkpoints_.end() && *next_checkpoint == t) {
      traj.records.push_back(running);
      ++next_checkpoint;
    }
  }
  return traj;
}

ReplicationSummary Simulator::replicate(int replications, std::uint64_t base_seed, unsigned threads) const {
  const std::size_t k = config_.costs.size();
  const std::size_t stride = kFixedStats + k;
  const std::size_t points = checkpoints_.size();
  const auto count = static_cast<std::size_t>(std::max(replications, 0));

  // stats[r][c * stride + f]
  std::vector<std::vector<double>> stats(count);
  auto run_one = [&](std::size_t r) {
    const Trajectory traj = run_scenario(scenario_seed(base_seed, r));
    std::vector<double> out(points * stride);
    for (std::size_t c = 0; c < points; ++c) {
      const CheckpointRecord& rec = traj.records[c];
      const double n = static_cast<double>(rec.n);
      double* row = out.data() + c * stride;
      row[0] = rec.avg_outcome();
      row[1] = rec.avg_cost();
      std::int64_t forced = 0, nonopt = 0, opt = 0;
      for (std::size_t j = 0; j < k; ++j) {
        forced += rec.forced[j];
        row[kFixedStats + j] = static_cast<double>(rec.forced[j]) / n;
      }
      for (std::size_t s = 0; s < rec.support_uses.size(); ++s) {
        (truly_optimal_[s] ? opt : nonopt) += rec.support_uses[s];
      }
      row[2] = static_cast<double>(forced) / n;
      row[3] = static_cast<double>(nonopt) / n;
      row[4] = static_cast<double>(opt) / n;
    }
    stats[r] = std::move(out);
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  if (threads <= 1) {
    for (std::size_t r = 0; r < count; ++r) run_one(r);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < threads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t r = next++; r < count; r = next++) run_one(r);
      });
    }
    for (auto& worker : workers) worker.join();
  }

  ReplicationSummary summary;
  summary.beta = config_.schedule.beta;
  summary.z_star = z_star_;
  summary.budget = config_.budget;
  summary.replications = replications;
  summary.base_seed = base_seed;
  const double reps = static_cast<double>(count);
  for (std::size_t c = 0; c < points; ++c) {
    // Welford updates: identical scenarios reduce to exactly that value with zero spread.
    std::vector<double> mean(stride, 0.0);
    double squares = 0.0;
    for (std::size_t r = 0; r < count; ++r) {
      const double weight = 1.0 / static_cast<double>(r + 1);
      const double* row = stats[r].data() + c * stride;
      const double before = mean[0];
      for (std::size_t f = 0; f < stride; ++f) mean[f] += (row[f] - mean[f]) * weight;
      squares += (row[0] - before) * (row[0] - mean[0]);
    }

    SummaryRow row;
    row.n = checkpoints_[c];
    row.mean_avg_outcome = mean[0];
    row.sd = count > 1 ? std::sqrt(squares / (reps - 1.0)) : 0.0;
    const double half_width = 1.96 * row.sd / std::sqrt(reps);
    row.ci_lo = row.mean_avg_outcome - half_width;
    row.ci_hi = row.mean_avg_outcome + half_width;
    row.mean_avg_cost = mean[1];
    row.regret = row.mean_avg_outcome - z_star_;
    row.forced_frac_total = mean[2];
    row.nonopt_frac = mean[3];
    row.opt_frac = mean[4];
    row.forced_frac_arm.assign(mean.begin() + kFixedStats, mean.end());
    summary.rows.push_back(std::move(row));
  }
  return summary;
}

Trajectory run_scenario(const ExperimentConfig& config, std::uint64_t seed) {
  return Simulator(config).run_scenario(seed);
}

ReplicationSummary replicate(const ExperimentConfig& config, int replications, std::uint64_t base_seed,
                             unsigned threads) {
  return Simulator(config).replicate(replications, base_seed, threads);
}

namespace {

FeasibilityReport tail_report(std::vector<std::int64_t> n, std::vector<double> cost, double budget,
                              double tolerance) {
  FeasibilityReport report;
  report.budget = budget;
  report.tolerance = tolerance;
  report.tail_proxy = -std::numeric_limits<double>::infinity();
  const std::int64_t last = n.empty() ? 0 : n.back();
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (2 * n[i] >= last) report.tail_proxy = std::max(report.tail_proxy, cost[i]);
  }
  report.infeasible = report.tail_proxy > budget + tolerance;
  report.n = std::move(n);
  report.avg_cost = std::move(cost);
  return report;
}

}  // namespace

FeasibilityReport feasibility_report(const Trajectory& trajectory, double tolerance) {
  std::vector<std::int64_t> n;
  std::vector<double> cost;
  for (const auto& rec : trajectory.records) {
    n.push_back(rec.n);
    cost.push_back(rec.avg_cost());
  }
  return tail_report(std::move(n), std::move(cost), trajectory.budget, tolerance);
}

FeasibilityReport feasibility_report(const ReplicationSummary& summary, double tolerance) {
  std::vector<std::int64_t> n;
  std::vector<double> cost;
  for (const auto& row : summary.rows) {
    n.push_back(row.n);
    cost.push_back(row.mean_avg_cost);
  }
  return tail_report(std::move(n), std::move(cost), summary.budget, tolerance);
}

std::vector<DiagnosticsRow> diagnostics_report(const Trajectory& trajectory) {
  std::vector<DiagnosticsRow> rows;
  for (const auto& rec : trajectory.records) {
    DiagnosticsRow row;
    row.n = rec.n;
    const double n = static_cast<double>(rec.n);
    std::int64_t forced = 0, nonopt = 0, opt = 0;
    for (auto ss : rec.forced) {
      forced += ss;
      row.forced_frac.push_back(static_cast<double>(ss) / n);
    }
    for (std::size_t s = 0; s < rec.support_uses.size(); ++s) {
      (trajectory.truly_optimal[s] ? opt : nonopt) += rec.support_uses[s];
      row.support_value.push_back(rec.support_uses[s] > 0
                                      ? rec.support_outcome[s] / static_cast<double>(rec.support_uses[s])
                                      : std::numeric_limits<double>::quiet_NaN());
    }
    row.forced_frac_total = static_cast<double>(forced) / n;
    row.nonopt_frac = static_cast<double>(nonopt) / n;
    row.opt_frac = static_cast<double>(opt) / n;
    row.optimal_outcome_avg = rec.optimal_outcome / n;
    row.identity_holds = forced + nonopt + opt == rec.n;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace seqsamp
