#pragma once

// Closed-form solution of the budgeted sampling LP
//
//   max  mu . x   s.t.  c . x + y = C0,  sum(x) = 1,  x >= 0, y >= 0
//
// by enumeration of its (finitely many) basic index sets. Every routine is a
// pure function templated on the scalar type; instantiated for double (fast
// path) and Rational (exact path).

#include "seqsamp/basis.hpp"
#include "seqsamp/instance.hpp"
#include "seqsamp/scalar.hpp"

#include <optional>
#include <vector>

namespace seqsamp {

using BasisSet = std::vector<Basis>;

template <typename Scalar>
struct LpSolution {
  Basis basis;
  Vector<Scalar> x;
  Scalar slack;
  Scalar lambda;  // budget-row price
  Scalar g;       // convexity-row price
  /// k population columns followed by the slack column (whose entry is lambda).
  Vector<Scalar> reduced_costs;
  Scalar objective;
  bool degenerate = false;

  const Scalar& slack_reduced_cost() const { return reduced_costs[reduced_costs.size() - 1]; }
};

template <typename Scalar>
struct OptimalSet {
  /// Optimal BFS supports in canonical enumeration order.
  std::vector<Basis> bases;
  Scalar value;

  bool contains(const Basis& b) const;
};

/// All basic index sets with a nonnegative primal solution, in canonical order:
/// singletons by cost rank, then pairs lexicographic in cost rank.
template <typename Scalar>
BasisSet enumerate_basis_set(const ProblemInstance<Scalar>& instance);

template <typename Scalar>
bool is_admissible(const ProblemInstance<Scalar>& instance, const Basis& basis);

/// Support {a : x_a > 0} of the BFS a basis represents. Degenerate pairs
/// collapse to the singleton of their tight arm.
template <typename Scalar>
Basis support_of(const ProblemInstance<Scalar>& instance, const Basis& basis);

/// Members of K representing the same BFS as `support`.
template <typename Scalar>
BasisSet representations(const ProblemInstance<Scalar>& instance, const Basis& support);

/// Throws std::invalid_argument if `basis` is not in K or `means` has the wrong size.
template <typename Scalar>
LpSolution<Scalar> solve_basis(const ProblemInstance<Scalar>& instance, const Basis& basis,
                               const Vector<Scalar>& means);

template <typename Scalar>
LpSolution<Scalar> solve_basis(const ProblemInstance<Scalar>& instance, const Basis& basis);

/// k x (k+1) matrix whose column a is the weight vector w_a with
/// reduced_cost_a = w_a . mu for every mu. The last column belongs to the slack.
template <typename Scalar>
Matrix<Scalar> weight_vectors(const ProblemInstance<Scalar>& instance, const Basis& basis);

/// True iff every reduced cost, slack column included, is nonnegative.
template <typename Scalar>
bool is_dual_feasible(const LpSolution<Scalar>& solution);

template <typename Scalar>
OptimalSet<Scalar> optimal_set(const ProblemInstance<Scalar>& instance, const Vector<Scalar>& means);

/// Sup-norm radius around `means` inside which no currently non-optimal BFS
/// can become optimal. std::nullopt stands for +infinity (every BFS optimal).
template <typename Scalar>
std::optional<Scalar> stability_radius(const ProblemInstance<Scalar>& instance,
                                       const Vector<Scalar>& means);

}  // namespace seqsamp
