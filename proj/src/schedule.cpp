#include "seqsamp/schedule.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace seqsamp {

ForcedSchedule::ForcedSchedule(int k, std::int64_t horizon)
    : arm_at_(static_cast<std::size_t>(horizon) + 1, -1), periods_(static_cast<std::size_t>(k)) {}

std::int64_t ForcedSchedule::forced_count(int arm, std::int64_t n) const {
  const auto& p = periods(arm);
  return std::upper_bound(p.begin(), p.end(), n) - p.begin();
}

void ForcedSchedule::assign(std::int64_t period, int arm) {
  auto& slot = arm_at_[static_cast<std::size_t>(period)];
  if (slot != -1) throw std::logic_error(fmt::format("period {} already forced", period));
  slot = arm;
  periods_[static_cast<std::size_t>(arm)].push_back(period);
}

std::int64_t raw_term(const SparseScheduleSpec& spec, int arm, std::int64_t m) {
  const std::int64_t offset = spec.offsets.empty() ? arm : spec.offsets[static_cast<std::size_t>(arm)];
  const double power = std::pow(static_cast<double>(m), spec.beta);
  if (power > 9.0e18) return std::numeric_limits<std::int64_t>::max();
  return offset + std::llround(power);
}

ForcedSchedule build_schedule(const SparseScheduleSpec& spec, int k, std::int64_t horizon) {
  if (!(spec.beta > 1.0) || !std::isfinite(spec.beta)) {
    throw std::invalid_argument(fmt::format("schedule exponent must exceed 1 (got {})", spec.beta));
  }
  if (k < 1) throw std::invalid_argument("schedule needs at least one arm");
  if (horizon < k) throw std::invalid_argument(fmt::format("horizon {} is shorter than k={}", horizon, k));
  if (!spec.offsets.empty()) {
    if (static_cast<int>(spec.offsets.size()) != k) {
      throw std::invalid_argument(fmt::format("{} offsets given for {} arms", spec.offsets.size(), k));
    }
    for (auto o : spec.offsets) {
      if (o < 0) throw std::invalid_argument("schedule offsets must be non-negative");
    }
  }

  ForcedSchedule schedule(k, horizon);
  std::vector<std::int64_t> next_m(static_cast<std::size_t>(k), 1);
  std::vector<std::int64_t> pending(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) pending[static_cast<std::size_t>(j)] = raw_term(spec, j, 1);

  for (std::int64_t t = 1; t <= horizon; ++t) {
    for (int j = 0; j < k; ++j) {
      const auto ju = static_cast<std::size_t>(j);
      if (pending[ju] > t) continue;
      schedule.assign(t, j);
      pending[ju] = raw_term(spec, j, ++next_m[ju]);
      break;
    }
  }
  return schedule;
}

}  // namespace seqsamp
