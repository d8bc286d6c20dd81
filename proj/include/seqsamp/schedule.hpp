#pragma once

#include <cstdint>
#include <vector>

namespace seqsamp {

/// Power-law forced-selection sequences tau_{j,m} = offset_j + round(m^beta).
struct SparseScheduleSpec {
  double beta = 2.0;
  /// Per-arm offsets; empty means offset_j = j (0-based arm j), i.e. the
  /// first raw term of arm j is period j + 1.
  std::vector<std::int64_t> offsets;

  friend bool operator==(const SparseScheduleSpec&, const SparseScheduleSpec&) = default;
};

/// Collision-free forced-selection plan over periods 1..horizon.
class ForcedSchedule {
 public:
  ForcedSchedule() = default;
  ForcedSchedule(int k, std::int64_t horizon);

  std::int64_t horizon() const { return static_cast<std::int64_t>(arm_at_.size()) - 1; }
  int k() const { return static_cast<int>(periods_.size()); }

  /// Arm forced at `period` (1-based), or -1.
  int arm_at(std::int64_t period) const { return arm_at_[static_cast<std::size_t>(period)]; }
  /// Forced periods of `arm`, strictly increasing.
  const std::vector<std::int64_t>& periods(int arm) const { return periods_[static_cast<std::size_t>(arm)]; }
  /// Number of forced periods of `arm` within 1..n.
  std::int64_t forced_count(int arm, std::int64_t n) const;

  void assign(std::int64_t period, int arm);

 private:
  std::vector<int> arm_at_;
  std::vector<std::vector<std::int64_t>> periods_;
};

/// Raw (unresolved) term m >= 1 of arm j.
std::int64_t raw_term(const SparseScheduleSpec& spec, int arm, std::int64_t m);

/// Builds the per-period forced plan. A period claimed by several arms goes to
/// the lowest-indexed claimant; every other claimant keeps its term pending
/// and claims the next period again. Throws std::invalid_argument for
/// beta <= 1, bad offsets, or horizon < k.
ForcedSchedule build_schedule(const SparseScheduleSpec& spec, int k, std::int64_t horizon);

}  // namespace seqsamp
