#include "seqsamp/report.hpp"

#include <fmt/format.h>

#include <stdexcept>

namespace seqsamp {

namespace {

template <typename Scalar>
std::string join(const Vector<Scalar>& v, Eigen::Index begin, Eigen::Index end) {
  std::string out;
  for (Eigen::Index i = begin; i < end; ++i) {
    if (i > begin) out += ", ";
    out += to_string(v[i]);
  }
  return out;
}

template <typename Scalar>
std::string tuple(const Vector<Scalar>& v) {
  return "(" + join(v, 0, v.size()) + ")";
}

std::string join_bases(const std::vector<Basis>& bases) {
  std::string out;
  for (const Basis& b : bases) out += (out.empty() ? "" : " ") + to_string(b);
  return out;
}

}  // namespace

template <typename Scalar>
SolveReport<Scalar> make_solve_report(const ProblemInstance<Scalar>& instance) {
  if (!instance.means()) throw std::invalid_argument("solve report needs a mean vector");
  const Vector<Scalar>& means = *instance.means();
  SolveReport<Scalar> report{instance, enumerate_basis_set(instance), {}, {}, optimal_set(instance, means), {}};
  for (const Basis& b : report.basis_set) {
    report.solutions.push_back(solve_basis(instance, b, means));
    report.supports.push_back(support_of(instance, b));
  }
  report.radius = stability_radius(instance, means);
  return report;
}

template <typename Scalar>
std::string format_solve_report(const SolveReport<Scalar>& report) {
  const auto& inst = report.instance;
  const auto k = inst.k();
  std::string out;
  out += fmt::format("k={} budget={} d={}\n", k, to_string(inst.budget()), inst.affordable_count());
  out += fmt::format("costs={}\n", tuple(inst.costs()));
  out += fmt::format("means={}\n", tuple(*inst.means()));
  out += fmt::format("basis_set={} ({} elements)\n", join_bases(report.basis_set), report.basis_set.size());
  for (std::size_t i = 0; i < report.basis_set.size(); ++i) {
    const auto& s = report.solutions[i];
    out += fmt::format(
        "basis {} support={} x={} y={} lambda={} g={} phi=({} | {}) z={} degenerate={} dual_feasible={}\n",
        to_string(report.basis_set[i]), to_string(report.supports[i]), tuple(s.x), to_string(s.slack),
        to_string(s.lambda), to_string(s.g), join(s.reduced_costs, 0, k), to_string(s.slack_reduced_cost()),
        to_string(s.objective), s.degenerate ? "yes" : "no", is_dual_feasible(s) ? "yes" : "no");
  }
  out += fmt::format("optimal_set={}\n", join_bases(report.optimal.bases));
  out += fmt::format("z_star={}\n", to_string(report.optimal.value));
  if (report.radius) {
    if constexpr (ScalarTraits<Scalar>::exact) {
      out += fmt::format("epsilon={} (~{})\n", to_string(*report.radius),
                         to_string(static_cast<double>(*report.radius)));
    } else {
      out += fmt::format("epsilon={}\n", to_string(*report.radius));
    }
  } else {
    out += "epsilon=inf\n";
  }
  return out;
}

template struct SolveReport<double>;
template struct SolveReport<Rational>;
template SolveReport<double> make_solve_report(const ProblemInstance<double>&);
template SolveReport<Rational> make_solve_report(const ProblemInstance<Rational>&);
template std::string format_solve_report(const SolveReport<double>&);
template std::string format_solve_report(const SolveReport<Rational>&);

}  // namespace seqsamp
