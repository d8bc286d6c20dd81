#include "seqsamp/policy.hpp"
#include "seqsamp/population.hpp"

#include <doctest.h>

#include <cmath>

using namespace seqsamp;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> items) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(items.size()));
  Eigen::Index i = 0;
  for (double s : items) v[i++] = s;
  return v;
}

const BasisTable& reference_table() {
  static const BasisTable table(ProblemInstance<double>(vec({3, 4, 8, 10}), 5.0));
  return table;
}

PolicyState state_with_estimates(const Eigen::VectorXd& means, std::uint64_t seed = 1) {
  PolicyState state(means.size(), RngStream(seed, 0));
  for (Eigen::Index j = 0; j < means.size(); ++j) update(state, static_cast<int>(j), means[j]);
  return state;
}

}  // namespace

TEST_CASE("forced periods sample the scheduled arm") {
  auto state = state_with_estimates(vec({1.5, 2.5, 4.5, 4.0}));
  const Decision d = policy_step(state, reference_table(), 3);
  CHECK(d.arm == 3);
  CHECK(d.forced);
  CHECK_FALSE(d.support.has_value());
  CHECK_FALSE(state.last_support.has_value());
}

TEST_CASE("randomization follows the optimal BFS") {
  const auto& table = reference_table();
  auto state = state_with_estimates(vec({1.5, 2.5, 4.5, 4.0}), 2024);
  const int draws = 100000;
  int arm1 = 0, arm2 = 0;
  for (int i = 0; i < draws; ++i) {
    const Decision d = policy_step(state, table, std::nullopt);
    REQUIRE(d.support.has_value());
    REQUIRE(table.supports()[*d.support] == Basis::pair(1, 2));
    REQUIRE((d.arm == 1 || d.arm == 2));
    (d.arm == 1 ? arm1 : arm2) += 1;
  }
  const double e1 = 0.75 * draws, e2 = 0.25 * draws;
  const double chi2 = (arm1 - e1) * (arm1 - e1) / e1 + (arm2 - e2) * (arm2 - e2) / e2;
  // 0.999 quantile of chi-square with one degree of freedom.
  CHECK(chi2 < 10.828);
}

TEST_CASE("ties go to the first support and then persist") {
  const auto& table = reference_table();
  auto state = state_with_estimates(vec({1, 1, 1, 1}));
  Decision d = policy_step(state, table, std::nullopt);
  CHECK(table.supports()[*d.support] == Basis::singleton(0));
  CHECK(d.arm == 0);

  const auto pair = *table.find_support(Basis::pair(1, 2));
  state.last_support = pair;
  d = policy_step(state, table, std::nullopt);
  CHECK(*d.support == pair);

  // Arm 1 now dominates; the remembered pair is no longer optimal.
  update(state, 1, 9.0);
  d = policy_step(state, table, std::nullopt);
  CHECK(table.supports()[*d.support] == Basis::singleton(1));
}

TEST_CASE("state update") {
  PolicyState state(3, RngStream(1, 0));
  update(state, 2, 4.0);
  update(state, 2, 1.0);
  update(state, 0, 3.0);
  CHECK(state.period == 3);
  CHECK(state.pulls == std::vector<std::int64_t>{1, 0, 2});
  CHECK(state.estimator.estimates()[2] == 2.5);
  CHECK(state.estimator.estimates()[1] == 0.0);
  CHECK(state.estimator.estimates()[0] == 3.0);
}

TEST_CASE("incremental mean") {
  PolicyState state(2, RngStream(1, 0));
  update(state, 1, 4.0);
  CHECK(state.pulls[1] == 1);
  CHECK(state.estimator.estimates()[1] == 4.0);
  for (double x : {1.0, 1.0}) update(state, 0, x);
  update(state, 0, 4.0);
  CHECK(state.estimator.estimates()[0] == 2.0);
  update(state, 0, 6.0);
  CHECK(state.pulls[0] == 4);
  CHECK(state.estimator.estimates()[0] == 3.0);
}

TEST_CASE("running means converge") {
  PolicyState state(1, RngStream(1, 0));
  RngStream outcomes(77, 1);
  for (int i = 0; i < 100000; ++i) update(state, 0, sample(Binomial{5, 0.5}, outcomes));
  CHECK(std::abs(state.estimator.estimates()[0] - 2.5) <= 0.05);
}

TEST_CASE("every chosen BFS respects the budget in expectation") {
  const auto& table = reference_table();
  RngStream noise(5, 9);
  for (int trial = 0; trial < 2000; ++trial) {
    Eigen::VectorXd means(4);
    for (int j = 0; j < 4; ++j) means[j] = 10.0 * noise.uniform() - 2.0;
    auto state = state_with_estimates(means);
    const Decision d = policy_step(state, table, std::nullopt);
    CHECK(table.expected_cost(*d.support) <= 5.0 + 1e-12);
    CHECK(table.is_optimal(*d.support, means));
  }
}
