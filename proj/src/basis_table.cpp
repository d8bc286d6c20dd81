#include "seqsamp/basis_table.hpp"

#include <algorithm>

namespace seqsamp {

BasisTable::BasisTable(const ProblemInstance<double>& instance)
    : k_(instance.k()), elements_(enumerate_basis_set(instance)) {
  const Eigen::VectorXd zero_means = Eigen::VectorXd::Zero(k_);
  std::vector<Basis> element_support;
  for (const Basis& b : elements_) {
    weights_.push_back(weight_vectors(instance, b));
    element_support.push_back(support_of(instance, b));
  }
  for (const Basis& b : elements_) {
    if (std::find(element_support.begin(), element_support.end(), b) == element_support.end()) continue;
    supports_.push_back(b);
    std::vector<std::size_t> members;
    for (std::size_t e = 0; e < elements_.size(); ++e) {
      if (element_support[e] == b) members.push_back(e);
    }
    support_elements_.push_back(std::move(members));

    const LpSolution<double> sol = solve_basis(instance, b, zero_means);
    x_.push_back(sol.x);
    expected_cost_.push_back(sol.x.dot(instance.costs()));
    Allocation alloc;
    if (b.is_pair()) {
      alloc.first = b.first;
      alloc.second = b.second;
      alloc.p_first = sol.x[b.first];
    } else {
      alloc.first = alloc.second = b.first;
    }
    allocation_.push_back(alloc);
  }
}

std::optional<std::size_t> BasisTable::find_support(const Basis& support) const {
  auto it = std::find(supports_.begin(), supports_.end(), support);
  if (it == supports_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - supports_.begin());
}

bool BasisTable::element_dual_feasible(std::size_t element, const Eigen::VectorXd& means) const {
  const Eigen::MatrixXd& w = weights_[element];
  for (Eigen::Index m = 0; m < w.cols(); ++m) {
    if (w.col(m).dot(means) < -ScalarTraits<double>::tolerance()) return false;
  }
  return true;
}

bool BasisTable::is_optimal(std::size_t support, const Eigen::VectorXd& means) const {
  const auto& members = support_elements_[support];
  return std::any_of(members.begin(), members.end(),
                     [&](std::size_t e) { return element_dual_feasible(e, means); });
}

std::optional<std::size_t> BasisTable::first_optimal(const Eigen::VectorXd& means) const {
  for (std::size_t s = 0; s < supports_.size(); ++s) {
    if (is_optimal(s, means)) return s;
  }
  return std::nullopt;
}

void BasisTable::optimal_mask(const Eigen::VectorXd& means, std::vector<char>& mask) const {
  mask.assign(supports_.size(), 0);
  for (std::size_t s = 0; s < supports_.size(); ++s) mask[s] = is_optimal(s, means) ? 1 : 0;
}

}  // namespace seqsamp
