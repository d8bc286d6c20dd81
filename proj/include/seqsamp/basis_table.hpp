#pragma once

#include "seqsamp/lp.hpp"

#include <Eigen/Core>

#include <cstddef>
#include <optional>
#include <vector>

namespace seqsamp {

/// Precomputed per-instance view of the basis set for repeated optimality
/// queries with changing mean vectors. Reduced costs are evaluated through the
/// mean-independent weight vectors, so a query is k(k+1) multiply-adds per
/// basis and never allocates. Immutable after construction.
class BasisTable {
 public:
  /// Two-arm randomization of a BFS; `first` and `second` coincide for singletons.
  struct Allocation {
    int first = 0;
    int second = 0;
    double p_first = 1.0;
  };

  explicit BasisTable(const ProblemInstance<double>& instance);

  Eigen::Index k() const { return k_; }
  const BasisSet& elements() const { return elements_; }
  /// Distinct BFS supports, canonical order.
  const std::vector<Basis>& supports() const { return supports_; }
  std::optional<std::size_t> find_support(const Basis& support) const;

  const Eigen::VectorXd& x(std::size_t support) const { return x_[support]; }
  const Allocation& allocation(std::size_t support) const { return allocation_[support]; }
  double expected_cost(std::size_t support) const { return expected_cost_[support]; }

  bool is_optimal(std::size_t support, const Eigen::VectorXd& means) const;
  std::optional<std::size_t> first_optimal(const Eigen::VectorXd& means) const;
  /// mask[s] != 0 iff supports()[s] is optimal for `means`.
  void optimal_mask(const Eigen::VectorXd& means, std::vector<char>& mask) const;

 private:
  bool element_dual_feasible(std::size_t element, const Eigen::VectorXd& means) const;

  Eigen::Index k_;
  BasisSet elements_;
  std::vector<Eigen::MatrixXd> weights_;
  std::vector<Basis> supports_;
  std::vector<std::vector<std::size_t>> support_elements_;
  std::vector<Eigen::VectorXd> x_;
  std::vector<Allocation> allocation_;
  std::vector<double> expected_cost_;
};

}  // namespace seqsamp
