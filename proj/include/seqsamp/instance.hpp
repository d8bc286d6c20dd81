#pragma once

#include "seqsamp/scalar.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace seqsamp {

class InstanceError : public std::invalid_argument {
 public:
  enum class Kind {
    kMalformed,   // size mismatch, fewer than two arms, non-finite values
    kEqualCosts,  // all sampling costs coincide
    kInfeasible,  // budget below the cheapest cost
    kRedundant,   // budget at or above the most expensive cost
  };

  InstanceError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Kind kind() const noexcept { return kind_; }

 private:
  Kind kind_;
};

/// Costs, budget and (optionally) true means of a k-population sampling problem.
///
/// Arms keep the caller's indexing everywhere in the public surface. The
/// cost-sorted order is held internally: rank r (0-based) is the arm with the
/// r-th smallest cost, ties broken by original index. The affordable-rank
/// count d = |{ j : c_j <= C0 }| always satisfies 1 <= d < k.
template <typename Scalar>
class ProblemInstance {
 public:
  ProblemInstance(Vector<Scalar> costs, Scalar budget,
                  std::optional<Vector<Scalar>> means = std::nullopt);

  Eigen::Index k() const { return costs_.size(); }
  const Vector<Scalar>& costs() const { return costs_; }
  const Scalar& cost(Eigen::Index arm) const { return costs_[arm]; }
  const Scalar& budget() const { return budget_; }
  const std::optional<Vector<Scalar>>& means() const { return means_; }

  /// Number of arms whose cost does not exceed the budget.
  Eigen::Index affordable_count() const { return affordable_; }
  /// Arm at cost rank r.
  int arm_at_rank(Eigen::Index r) const { return order_[static_cast<std::size_t>(r)]; }
  /// Cost rank of an arm.
  int rank_of(Eigen::Index arm) const { return rank_[static_cast<std::size_t>(arm)]; }

  ProblemInstance with_means(Vector<Scalar> means) const;

  template <typename To>
  ProblemInstance<To> cast() const {
    std::optional<Vector<To>> m;
    if (means_) m = vector_cast<To>(*means_);
    return ProblemInstance<To>(vector_cast<To>(costs_), scalar_cast<To>(budget_), std::move(m));
  }

 private:
  Vector<Scalar> costs_;
  Scalar budget_;
  std::optional<Vector<Scalar>> means_;
  std::vector<int> order_;
  std::vector<int> rank_;
  Eigen::Index affordable_ = 0;
};

extern template class ProblemInstance<double>;
extern template class ProblemInstance<Rational>;

}  // namespace seqsamp
