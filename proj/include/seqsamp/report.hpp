#pragma once

#include "seqsamp/lp.hpp"

#include <optional>
#include <string>
#include <vector>

namespace seqsamp {

/// Everything `seqsamp solve` prints for one instance and mean vector.
template <typename Scalar>
struct SolveReport {
  ProblemInstance<Scalar> instance;
  BasisSet basis_set;
  std::vector<LpSolution<Scalar>> solutions;  // aligned with basis_set
  std::vector<Basis> supports;                // aligned with basis_set
  OptimalSet<Scalar> optimal;
  std::optional<Scalar> radius;
};

/// `instance` must carry means.
template <typename Scalar>
SolveReport<Scalar> make_solve_report(const ProblemInstance<Scalar>& instance);

template <typename Scalar>
std::string format_solve_report(const SolveReport<Scalar>& report);

}  // namespace seqsamp
