#include "seqsamp/instance.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace seqsamp {

namespace {

template <typename Scalar>
bool is_finite(const Scalar& v) {
  if constexpr (ScalarTraits<Scalar>::exact) {
    return true;
  } else {
    return std::isfinite(v);
  }
}

}  // namespace

template <typename Scalar>
ProblemInstance<Scalar>::ProblemInstance(Vector<Scalar> costs, Scalar budget,
                                         std::optional<Vector<Scalar>> means)
    : costs_(std::move(costs)), budget_(std::move(budget)), means_(std::move(means)) {
  using Kind = InstanceError::Kind;
  const auto k = costs_.size();
  if (k < 2) throw InstanceError(Kind::kMalformed, "at least two populations are required");
  if (means_ && means_->size() != k) {
    throw InstanceError(Kind::kMalformed,
                        fmt::format("{} means given for {} populations", means_->size(), k));
  }
  if (!is_finite(budget_)) throw InstanceError(Kind::kMalformed, "budget must be finite");
  for (Eigen::Index i = 0; i < k; ++i) {
    if (!is_finite(costs_[i])) throw InstanceError(Kind::kMalformed, "costs must be finite");
    if (means_ && !is_finite((*means_)[i])) throw InstanceError(Kind::kMalformed, "means must be finite");
  }

  order_.resize(static_cast<std::size_t>(k));
  std::iota(order_.begin(), order_.end(), 0);
  std::stable_sort(order_.begin(), order_.end(),
                   [this](int a, int b) { return costs_[a] < costs_[b]; });
  rank_.resize(order_.size());
  for (std::size_t r = 0; r < order_.size(); ++r) rank_[static_cast<std::size_t>(order_[r])] = static_cast<int>(r);

  const Scalar& lowest = costs_[order_.front()];
  const Scalar& highest = costs_[order_.back()];
  if (lowest == highest) throw InstanceError(Kind::kEqualCosts, "sampling costs must not all be equal");
  if (budget_ < lowest) {
    throw InstanceError(Kind::kInfeasible,
                        "infeasible: budget is below the cheapest sampling cost");
  }
  if (budget_ >= highest) {
    throw InstanceError(Kind::kRedundant,
                        "redundant: budget covers the most expensive sampling cost");
  }
  affordable_ = std::count_if(order_.begin(), order_.end(),
                              [this](int a) { return costs_[a] <= budget_; });
}

template <typename Scalar>
ProblemInstance<Scalar> ProblemInstance<Scalar>::with_means(Vector<Scalar> means) const {
  return ProblemInstance(costs_, budget_, std::move(means));
}

template class ProblemInstance<double>;
template class ProblemInstance<Rational>;

}  // namespace seqsamp
