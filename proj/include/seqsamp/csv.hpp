#pragma once

// CSV artifacts. Summary, diagnostics and comparison files start with one
// metadata comment line
//   # z_star=<z*>,budget=<C0>,replications=<R>,base_seed=<seed>
// followed by a fixed header row. Numbers use '.' decimals and the shortest
// representation that round-trips.

#include "seqsamp/simulator.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace seqsamp {

inline constexpr const char* kSummaryHeader = "beta,n,mean_avg_outcome,sd,ci_lo,ci_hi,mean_avg_cost,regret";

std::string format_number(double value);
std::string metadata_line(const ReplicationSummary& summary);

void write_summary_csv(std::ostream& out, const ReplicationSummary& summary);
/// beta,n,forced_frac_total,nonopt_frac,opt_frac,forced_frac_arm1..k
void write_diagnostics_csv(std::ostream& out, const ReplicationSummary& summary);
/// Summary rows of several runs stacked in one file, keyed by beta.
void write_comparison_csv(std::ostream& out, const std::vector<ReplicationSummary>& summaries);
/// n,avg_outcome,avg_cost,forced_total,nonopt_uses,opt_uses,pulls_arm1..k
void write_trace_csv(std::ostream& out, const Trajectory& trajectory);

}  // namespace seqsamp
