#include "seqsamp/simulator.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace seqsamp;

namespace {

ExperimentConfig point_mass_config(std::vector<double> means, double beta = 2.0) {
  ExperimentConfig config;
  config.costs = {3, 4, 8, 10};
  config.budget = 5;
  for (double m : means) config.populations.push_back(PointMass{m});
  config.schedule = {beta, {}};
  config.horizon = 10000;
  config.replications = 20;
  config.base_seed = 11;
  return config;
}

ExperimentConfig binomial_config(double beta = 2.0) {
  ExperimentConfig config;
  config.costs = {3, 4, 8, 10};
  config.budget = 5;
  config.populations = {Binomial{5, 0.3}, Binomial{5, 0.5}, Binomial{5, 0.9}, Binomial{5, 0.8}};
  config.schedule = {beta, {0, 1, 2, 3}};
  config.horizon = 10000;
  config.replications = 40;
  config.base_seed = 20240601;
  return config;
}

bool same_record(const CheckpointRecord& a, const CheckpointRecord& b) {
  return a.n == b.n && a.total_outcome == b.total_outcome && a.total_cost == b.total_cost && a.pulls == b.pulls &&
         a.forced == b.forced && a.support_uses == b.support_uses && a.support_arm_uses == b.support_arm_uses &&
         a.support_outcome == b.support_outcome && a.optimal_outcome == b.optimal_outcome;
}

/// Contribution of forced periods to C_n/n beyond the budget, from the schedule alone.
double forced_cost_excess(const Simulator& sim, std::int64_t n) {
  double excess = 0.0;
  for (int j = 0; j < sim.schedule().k(); ++j) {
    excess += static_cast<double>(sim.schedule().forced_count(j, n)) *
              (sim.config().costs[static_cast<std::size_t>(j)] - sim.config().budget);
  }
  return excess / static_cast<double>(n);
}

}  // namespace

TEST_CASE("true optimum is computed exactly") {
  const Simulator sim(binomial_config());
  CHECK(sim.z_star() == 3.0);
  const auto& supports = sim.table().supports();
  for (std::size_t s = 0; s < supports.size(); ++s) {
    CHECK(static_cast<bool>(sim.truly_optimal()[s]) == (supports[s] == Basis::pair(1, 2)));
  }
}

TEST_CASE("scenarios are deterministic in their seed") {
  const Simulator sim(binomial_config());
  const auto a = sim.run_scenario(5);
  const auto b = sim.run_scenario(5);
  const auto c = sim.run_scenario(6);
  REQUIRE(a.records.size() == b.records.size());
  for (std::size_t i = 0; i < a.records.size(); ++i) CHECK(same_record(a.records[i], b.records[i]));
  CHECK(a.records.back().total_outcome != c.records.back().total_outcome);
}

TEST_CASE("counting identities and bounds hold at every checkpoint") {
  for (double beta : {1.2, 2.0, 5.0}) {
    const Simulator sim(binomial_config(beta));
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
      const auto traj = sim.run_scenario(seed);
      const auto diag = diagnostics_report(traj);
      REQUIRE(diag.size() == traj.records.size());
      const std::size_t k = 4;
      for (std::size_t i = 0; i < traj.records.size(); ++i) {
        const auto& rec = traj.records[i];
        CHECK(diag[i].identity_holds);
        CHECK(std::accumulate(rec.pulls.begin(), rec.pulls.end(), std::int64_t{0}) == rec.n);
        for (std::size_t j = 0; j < k; ++j) {
          std::int64_t via_supports = 0;
          for (std::size_t s = 0; s < rec.support_uses.size(); ++s) via_supports += rec.support_arm_uses[s * k + j];
          CHECK(rec.forced[j] + via_supports == rec.pulls[j]);
          CHECK(rec.forced[j] == sim.schedule().forced_count(static_cast<int>(j), rec.n));
        }
        CHECK(std::abs(rec.avg_outcome()) <= traj.outcome_bound);
        CHECK(rec.avg_cost() >= 3.0);
        CHECK(rec.avg_cost() <= 10.0);
      }
    }
  }
}

TEST_CASE("thread count does not change the summary") {
  const auto config = binomial_config();
  const Simulator sim(config);
  const auto one = sim.replicate(12, 3, 1);
  const auto three = sim.replicate(12, 3, 3);
  REQUIRE(one.rows.size() == three.rows.size());
  for (std::size_t i = 0; i < one.rows.size(); ++i) {
    CHECK(one.rows[i].mean_avg_outcome == three.rows[i].mean_avg_outcome);
    CHECK(one.rows[i].sd == three.rows[i].sd);
    CHECK(one.rows[i].mean_avg_cost == three.rows[i].mean_avg_cost);
    CHECK(one.rows[i].forced_frac_arm == three.rows[i].forced_frac_arm);
  }
}

TEST_CASE("single replication") {
  const auto summary = replicate(binomial_config(), 1, 8);
  for (const auto& row : summary.rows) {
    CHECK(row.sd == 0.0);
    CHECK(row.ci_lo == row.ci_hi);
  }
}

TEST_CASE("unique singleton optimum with point masses gives a zero-width band") {
  const auto summary = replicate(point_mass_config({4, 1, 1, 1}), 20, 1);
  CHECK(summary.z_star == 4.0);
  for (const auto& row : summary.rows) CHECK(row.sd == 0.0);
}

TEST_CASE("point masses on the reference means") {
  const Simulator sim(point_mass_config({1.5, 2.5, 4.5, 4.0}));
  const auto traj = sim.run_scenario(77);
  const auto& last = traj.records.back();
  const double n = static_cast<double>(last.n);
  // Forced periods pull the average towards the forced arms' means; the
  // 3/4 : 1/4 randomization between 2.5 and 4.5 adds binomial noise with
  // per-period sd 2 * sqrt(3/16); the first few periods run on incomplete estimates.
  double forced_term = 0.0;
  const std::vector<double> mu{1.5, 2.5, 4.5, 4.0};
  for (int j = 0; j < 4; ++j) {
    forced_term += static_cast<double>(sim.schedule().forced_count(j, last.n)) * std::abs(mu[std::size_t(j)] - 3.0);
  }
  // Estimates are exact once every arm has been forced, so non-optimal BFS use stops there.
  auto nonopt_uses = [&](const CheckpointRecord& rec) {
    std::int64_t total = 0;
    for (std::size_t s = 0; s < rec.support_uses.size(); ++s) total += traj.truly_optimal[s] ? 0 : rec.support_uses[s];
    return total;
  };
  const std::int64_t warm_up = sim.schedule().periods(3).front();
  CHECK(nonopt_uses(last) < warm_up);
  for (const auto& rec : traj.records) {
    if (rec.n >= warm_up) CHECK(nonopt_uses(rec) == nonopt_uses(last));
  }
  const double bound = forced_term / n + 5.0 * 2.0 * std::sqrt(3.0 / 16.0) / std::sqrt(n) + 20.0 * 4.5 / n;
  CHECK(std::abs(last.avg_outcome() - 3.0) <= bound);
  CHECK(last.avg_outcome() != 3.0);
}

TEST_CASE("average cost stays near the budget up to the forced excess") {
  const auto config = binomial_config();
  const Simulator sim(config);
  const auto summary = sim.replicate(config.replications, config.base_seed, 1);
  // Per-period cost sd under the 3/4 : 1/4 split of costs 4 and 8.
  const double cost_sd = 4.0 * std::sqrt(3.0 / 16.0);
  for (const auto& row : summary.rows) {
    if (row.n < 1000) continue;
    const double n = static_cast<double>(row.n);
    const double noise = 5.0 * cost_sd / std::sqrt(n * config.replications);
    const double transient = 0.5 * 5.0 / std::sqrt(n);
    CHECK(row.mean_avg_cost <= 5.0 + forced_cost_excess(sim, row.n) + noise + transient);
    CHECK(row.mean_avg_cost >= 5.0 - noise - transient - 2.0 * 3.0 * std::sqrt(n) / n);
  }
}

TEST_CASE("forced fraction and optimal-use diagnostics") {
  for (double beta : {1.2, 1.5, 2.0, 3.0, 5.0}) {
    CAPTURE(beta);
    const Simulator sim(binomial_config(beta));
    const auto diag = diagnostics_report(sim.run_scenario(1));
    const auto& last = diag.back();
    const double n = static_cast<double>(last.n);
    for (double f : last.forced_frac) {
      CHECK(f <= std::pow(n, 1.0 / beta - 1.0) + 1.0 / n);
      if (beta >= 1.5) CHECK(f < 0.05);
    }
    if (beta >= 2.0) CHECK(last.opt_frac >= 0.9);
    CHECK(last.forced_frac_total + last.nonopt_frac + last.opt_frac == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("band width shrinks like one over root R") {
  const Simulator sim(binomial_config());
  const auto small = sim.replicate(50, 1);
  const auto large = sim.replicate(200, 1);
  const double ratio = (small.rows.back().ci_hi - small.rows.back().ci_lo) /
                       (large.rows.back().ci_hi - large.rows.back().ci_lo);
  MESSAGE("CI width ratio R=50 vs R=200: " << ratio);
  CHECK(ratio > 1.4);
  CHECK(ratio < 2.8);
}

TEST_CASE("feasibility report") {
  auto synthetic = [](double cost_per_period) {
    Trajectory traj;
    traj.budget = 5.0;
    for (std::int64_t n : {10, 100, 1000, 10000}) {
      CheckpointRecord rec;
      rec.n = n;
      rec.total_cost = cost_per_period * static_cast<double>(n);
      traj.records.push_back(rec);
    }
    return traj;
  };
  const auto cheap = feasibility_report(synthetic(3.0));
  CHECK(cheap.tail_proxy == 3.0);
  CHECK_FALSE(cheap.infeasible);
  const auto expensive = feasibility_report(synthetic(10.0));
  CHECK(expensive.tail_proxy == 10.0);
  CHECK(expensive.infeasible);
  CHECK_FALSE(feasibility_report(synthetic(5.05)).infeasible);
  CHECK(feasibility_report(synthetic(5.2)).infeasible);

  // Only the tail [N/2, N] counts.
  auto early_spike = synthetic(5.0);
  early_spike.records[1].total_cost = 9.0 * 100;
  CHECK_FALSE(feasibility_report(early_spike).infeasible);
}
