#include "seqsamp/lp.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <stdexcept>

namespace seqsamp {

namespace {

struct PairArms {
  int low;
  int high;
};

// Arms of a pair ordered by cost.
template <typename Scalar>
PairArms by_cost(const ProblemInstance<Scalar>& instance, const Basis& basis) {
  if (instance.rank_of(basis.first) < instance.rank_of(basis.second)) return {basis.first, basis.second};
  return {basis.second, basis.first};
}

template <typename Scalar>
void require_admissible(const ProblemInstance<Scalar>& instance, const Basis& basis) {
  if (!is_admissible(instance, basis)) {
    throw std::invalid_argument(fmt::format("basis {} is not a feasible basis of this instance", to_string(basis)));
  }
}

template <typename Scalar>
Scalar abs_value(const Scalar& v) {
  return v < Scalar(0) ? Scalar(-v) : v;
}

}  // namespace

template <typename Scalar>
bool OptimalSet<Scalar>::contains(const Basis& b) const {
  return std::find(bases.begin(), bases.end(), b) != bases.end();
}

template <typename Scalar>
BasisSet enumerate_basis_set(const ProblemInstance<Scalar>& instance) {
  const auto k = instance.k();
  const auto d = instance.affordable_count();
  const Scalar& budget = instance.budget();

  BasisSet set;
  for (Eigen::Index r = 0; r < d; ++r) set.push_back(Basis::singleton(instance.arm_at_rank(r)));
  for (Eigen::Index ri = 0; ri < d; ++ri) {
    const int i = instance.arm_at_rank(ri);
    for (Eigen::Index rj = ri + 1; rj < k; ++rj) {
      const int j = instance.arm_at_rank(rj);
      // rj < d only admits a cost sitting exactly on the budget.
      if (instance.cost(i) < instance.cost(j) && budget <= instance.cost(j)) set.push_back(Basis::pair(i, j));
    }
  }
  return set;
}

template <typename Scalar>
bool is_admissible(const ProblemInstance<Scalar>& instance, const Basis& basis) {
  const auto k = instance.k();
  auto valid_arm = [k](int a) { return a >= 0 && a < k; };
  if (!valid_arm(basis.first)) return false;
  if (!basis.is_pair()) return instance.cost(basis.first) <= instance.budget();
  if (!valid_arm(basis.second) || basis.first == basis.second) return false;
  const auto [low, high] = by_cost(instance, basis);
  return instance.cost(low) < instance.cost(high) && instance.cost(low) <= instance.budget() &&
         instance.budget() <= instance.cost(high);
}

template <typename Scalar>
Basis support_of(const ProblemInstance<Scalar>& instance, const Basis& basis) {
  require_admissible(instance, basis);
  if (!basis.is_pair()) return basis;
  const auto [low, high] = by_cost(instance, basis);
  if (instance.budget() == instance.cost(low)) return Basis::singleton(low);
  if (instance.budget() == instance.cost(high)) return Basis::singleton(high);
  return basis;
}

template <typename Scalar>
BasisSet representations(const ProblemInstance<Scalar>& instance, const Basis& support) {
  BasisSet out;
  for (const Basis& b : enumerate_basis_set(instance)) {
    if (support_of(instance, b) == support) out.push_back(b);
  }
  return out;
}

template <typename Scalar>
LpSolution<Scalar> solve_basis(const ProblemInstance<Scalar>& instance, const Basis& basis,
                               const Vector<Scalar>& means) {
  require_admissible(instance, basis);
  const auto k = instance.k();
  if (means.size() != k) {
    throw std::invalid_argument(fmt::format("expected {} means, got {}", k, means.size()));
  }
  const Vector<Scalar>& c = instance.costs();
  const Scalar& budget = instance.budget();

  LpSolution<Scalar> sol;
  sol.basis = basis;
  sol.x = Vector<Scalar>::Zero(k);

  if (basis.is_pair()) {
    const auto [low, high] = by_cost(instance, basis);
    const Scalar spread = c[high] - c[low];
    sol.x[low] = (c[high] - budget) / spread;
    sol.x[high] = (budget - c[low]) / spread;
    sol.slack = Scalar(0);
    sol.lambda = (means[high] - means[low]) / spread;
    sol.g = means[low] - c[low] * sol.lambda;
    sol.degenerate = budget == c[low] || budget == c[high];
  } else {
    const int arm = basis.first;
    sol.x[arm] = Scalar(1);
    sol.slack = budget - c[arm];
    sol.lambda = Scalar(0);
    sol.g = means[arm];
    sol.degenerate = sol.slack == Scalar(0);
  }

  sol.reduced_costs.resize(k + 1);
  sol.reduced_costs.head(k) = (c * sol.lambda).array() + sol.g - means.array();
  sol.reduced_costs[k] = sol.lambda;
  // Basic columns price out to zero by construction.
  sol.reduced_costs[basis.first] = Scalar(0);
  if (basis.is_pair()) sol.reduced_costs[basis.second] = Scalar(0);

  sol.objective = sol.x.dot(means);
  return sol;
}

template <typename Scalar>
LpSolution<Scalar> solve_basis(const ProblemInstance<Scalar>& instance, const Basis& basis) {
  if (!instance.means()) throw std::invalid_argument("instance carries no mean vector");
  return solve_basis(instance, basis, *instance.means());
}

template <typename Scalar>
Matrix<Scalar> weight_vectors(const ProblemInstance<Scalar>& instance, const Basis& basis) {
  require_admissible(instance, basis);
  const auto k = instance.k();
  const Vector<Scalar>& c = instance.costs();
  Matrix<Scalar> w = Matrix<Scalar>::Zero(k, k + 1);

  if (basis.is_pair()) {
    const auto [low, high] = by_cost(instance, basis);
    const Scalar spread = c[high] - c[low];
    for (Eigen::Index a = 0; a < k; ++a) {
      if (basis.contains(static_cast<int>(a))) continue;
      w(low, a) = (c[high] - c[a]) / spread;
      w(high, a) = (c[a] - c[low]) / spread;
      w(a, a) = Scalar(-1);
    }
    w(low, k) = Scalar(-1) / spread;
    w(high, k) = Scalar(1) / spread;
  } else {
    for (Eigen::Index a = 0; a < k; ++a) {
      if (a == basis.first) continue;
      w(basis.first, a) = Scalar(1);
      w(a, a) = Scalar(-1);
    }
  }
  return w;
}

template <typename Scalar>
bool is_dual_feasible(const LpSolution<Scalar>& solution) {
  return solution.reduced_costs.minCoeff() >= -ScalarTraits<Scalar>::tolerance();
}

template <typename Scalar>
OptimalSet<Scalar> optimal_set(const ProblemInstance<Scalar>& instance, const Vector<Scalar>& means) {
  const BasisSet set = enumerate_basis_set(instance);
  std::vector<Basis> passing;
  OptimalSet<Scalar> result;
  bool first = true;
  for (const Basis& b : set) {
    const LpSolution<Scalar> sol = solve_basis(instance, b, means);
    if (first || sol.objective > result.value) result.value = sol.objective;
    first = false;
    if (is_dual_feasible(sol)) passing.push_back(support_of(instance, b));
  }
  // Canonical supports are themselves members of K; report them in K order.
  for (const Basis& b : set) {
    if (std::find(passing.begin(), passing.end(), b) != passing.end()) result.bases.push_back(b);
  }
  return result;
}

template <typename Scalar>
std::optional<Scalar> stability_radius(const ProblemInstance<Scalar>& instance,
                                       const Vector<Scalar>& means) {
  const OptimalSet<Scalar> optimal = optimal_set(instance, means);
  const Scalar arms(static_cast<long>(instance.k()));
  const Scalar tolerance = ScalarTraits<Scalar>::tolerance();

  std::optional<Scalar> radius;
  for (const Basis& b : enumerate_basis_set(instance)) {
    if (optimal.contains(support_of(instance, b))) continue;
    const LpSolution<Scalar> sol = solve_basis(instance, b, means);
    const Matrix<Scalar> w = weight_vectors(instance, b);
    for (Eigen::Index m = 0; m < sol.reduced_costs.size(); ++m) {
      const Scalar& phi = sol.reduced_costs[m];
      if (!(phi < -tolerance)) continue;
      Scalar norm(0);
      for (Eigen::Index r = 0; r < w.rows(); ++r) norm = std::max(norm, abs_value<Scalar>(w(r, m)));
      const Scalar candidate = abs_value(phi) / (arms * norm);
      if (!radius || candidate < *radius) radius = candidate;
    }
  }
  return radius;
}

#define SEQSAMP_INSTANTIATE_LP(S)                                                                 \
  template struct OptimalSet<S>;                                                                  \
  template BasisSet enumerate_basis_set<S>(const ProblemInstance<S>&);                            \
  template bool is_admissible<S>(const ProblemInstance<S>&, const Basis&);                        \
  template Basis support_of<S>(const ProblemInstance<S>&, const Basis&);                          \
  template BasisSet representations<S>(const ProblemInstance<S>&, const Basis&);                  \
  template LpSolution<S> solve_basis<S>(const ProblemInstance<S>&, const Basis&, const Vector<S>&); \
  template LpSolution<S> solve_basis<S>(const ProblemInstance<S>&, const Basis&);                 \
  template Matrix<S> weight_vectors<S>(const ProblemInstance<S>&, const Basis&);                  \
  template bool is_dual_feasible<S>(const LpSolution<S>&);                                        \
  template OptimalSet<S> optimal_set<S>(const ProblemInstance<S>&, const Vector<S>&);             \
  template std::optional<S> stability_radius<S>(const ProblemInstance<S>&, const Vector<S>&);

SEQSAMP_INSTANTIATE_LP(double)
SEQSAMP_INSTANTIATE_LP(Rational)

#undef SEQSAMP_INSTANTIATE_LP

}  // namespace seqsamp
