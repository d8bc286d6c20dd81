#include "seqsamp/csv.hpp"

#include <fmt/format.h>

#include <ostream>

namespace seqsamp {

std::string format_number(double value) { return fmt::format("{}", value); }

std::string metadata_line(const ReplicationSummary& summary) {
  return fmt::format("# z_star={},budget={},replications={},base_seed={}", format_number(summary.z_star),
                     format_number(summary.budget), summary.replications, summary.base_seed);
}

namespace {

void write_summary_rows(std::ostream& out, const ReplicationSummary& summary) {
  const std::string beta = format_number(summary.beta);
  for (const auto& row : summary.rows) {
    out << fmt::format("{},{},{},{},{},{},{},{}\n", beta, row.n, format_number(row.mean_avg_outcome),
                       format_number(row.sd), format_number(row.ci_lo), format_number(row.ci_hi),
                       format_number(row.mean_avg_cost), format_number(row.regret));
  }
}

}  // namespace

void write_summary_csv(std::ostream& out, const ReplicationSummary& summary) {
  out << metadata_line(summary) << '\n' << kSummaryHeader << '\n';
  write_summary_rows(out, summary);
}

void write_diagnostics_csv(std::ostream& out, const ReplicationSummary& summary) {
  out << metadata_line(summary) << '\n' << "beta,n,forced_frac_total,nonopt_frac,opt_frac";
  const std::size_t k = summary.rows.empty() ? 0 : summary.rows.front().forced_frac_arm.size();
  for (std::size_t j = 0; j < k; ++j) out << ",forced_frac_arm" << j + 1;
  out << '\n';
  const std::string beta = format_number(summary.beta);
  for (const auto& row : summary.rows) {
    out << fmt::format("{},{},{},{},{}", beta, row.n, format_number(row.forced_frac_total),
                       format_number(row.nonopt_frac), format_number(row.opt_frac));
    for (double f : row.forced_frac_arm) out << ',' << format_number(f);
    out << '\n';
  }
}

void write_comparison_csv(std::ostream& out, const std::vector<ReplicationSummary>& summaries) {
  if (!summaries.empty()) out << metadata_line(summaries.front()) << '\n';
  out << kSummaryHeader << '\n';
  for (const auto& s : summaries) write_summary_rows(out, s);
}

void write_trace_csv(std::ostream& out, const Trajectory& trajectory) {
  out << "n,avg_outcome,avg_cost,forced_total,nonopt_uses,opt_uses";
  const std::size_t k = trajectory.records.empty() ? 0 : trajectory.records.front().pulls.size();
  for (std::size_t j = 0; j < k; ++j) out << ",pulls_arm" << j + 1;
  out << '\n';
  for (const auto& rec : trajectory.records) {
    std::int64_t forced = 0, nonopt = 0, opt = 0;
    for (auto f : rec.forced) forced += f;
    for (std::size_t s = 0; s < rec.support_uses.size(); ++s) {
      (trajectory.truly_optimal[s] ? opt : nonopt) += rec.support_uses[s];
    }
    out << fmt::format("{},{},{},{},{},{}", rec.n, format_number(rec.avg_outcome()), format_number(rec.avg_cost()),
                       forced, nonopt, opt);
    for (auto p : rec.pulls) out << ',' << p;
    out << '\n';
  }
}

}  // namespace seqsamp
