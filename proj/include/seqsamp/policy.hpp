#pragma once

// Certainty-equivalence sampling with sparse forced selections: in a forced
// period the scheduled arm is sampled; otherwise the LP is solved with the
// current estimates in place of the true means and an arm is drawn from the
// chosen optimal BFS.

#include "seqsamp/basis_table.hpp"
#include "seqsamp/rng.hpp"

#include <Eigen/Core>

#include <concepts>
#include <cstdint>
#include <optional>
#include <vector>

namespace seqsamp {

/// Running per-arm sample mean. Arms not yet observed estimate 0.
class SampleMeanEstimator {
 public:
  explicit SampleMeanEstimator(Eigen::Index k) : means_(Eigen::VectorXd::Zero(k)), counts_(static_cast<std::size_t>(k), 0) {}

  void observe(int arm, double outcome) {
    const auto a = static_cast<std::size_t>(arm);
    ++counts_[a];
    means_[arm] += (outcome - means_[arm]) / static_cast<double>(counts_[a]);
  }

  const Eigen::VectorXd& estimates() const { return means_; }

 private:
  Eigen::VectorXd means_;
  std::vector<std::int64_t> counts_;
};

template <typename E>
concept MeanEstimator = requires(E e, const E ce, int arm, double x) {
  e.observe(arm, x);
  { ce.estimates() } -> std::convertible_to<const Eigen::VectorXd&>;
};

template <MeanEstimator Estimator = SampleMeanEstimator>
struct BasicPolicyState {
  BasicPolicyState(Eigen::Index k, RngStream stream)
      : estimator(k), pulls(static_cast<std::size_t>(k), 0), rng(stream) {}

  Estimator estimator;
  std::vector<std::int64_t> pulls;  // T_n(j)
  std::int64_t period = 0;          // completed periods n
  std::optional<std::size_t> last_support;
  RngStream rng;
};

using PolicyState = BasicPolicyState<>;

struct Decision {
  int arm = 0;
  bool forced = false;
  /// Index into BasisTable::supports() of the BFS used; empty when forced.
  std::optional<std::size_t> support;
};

/// Ties among optimal BFS keep the previously used one while it stays
/// optimal, else take the first in canonical order.
template <MeanEstimator E>
std::size_t select_support(const BasicPolicyState<E>& state, const BasisTable& table) {
  const Eigen::VectorXd& estimates = state.estimator.estimates();
  if (state.last_support && table.is_optimal(*state.last_support, estimates)) return *state.last_support;
  if (auto first = table.first_optimal(estimates)) return *first;
  // Only reachable when rounding defeats the tolerance: fall back to the best objective.
  std::size_t best = 0;
  for (std::size_t s = 1; s < table.supports().size(); ++s) {
    if (table.x(s).dot(estimates) > table.x(best).dot(estimates)) best = s;
  }
  return best;
}

template <MeanEstimator E>
Decision policy_step(BasicPolicyState<E>& state, const BasisTable& table, std::optional<int> forced) {
  if (forced) return Decision{*forced, true, std::nullopt};
  const std::size_t support = select_support(state, table);
  state.last_support = support;
  const auto& alloc = table.allocation(support);
  int arm = alloc.first;
  if (alloc.first != alloc.second && !(state.rng.uniform() < alloc.p_first)) arm = alloc.second;
  return Decision{arm, false, support};
}

template <MeanEstimator E>
void update(BasicPolicyState<E>& state, int arm, double outcome) {
  state.estimator.observe(arm, outcome);
  ++state.pulls[static_cast<std::size_t>(arm)];
  ++state.period;
}

}  // namespace seqsamp
