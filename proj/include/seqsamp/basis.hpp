#pragma once

#include <compare>
#include <string>

namespace seqsamp {

/// A basic index set of the two-row sampling LP: either two arms randomized
/// against each other with the budget row tight (pair), or one arm sampled
/// exclusively with the budget slack basic (singleton). Arms are 0-based.
struct Basis {
  int first = 0;
  int second = -1;

  static Basis singleton(int arm) { return Basis{arm, -1}; }
  static Basis pair(int a, int b) { return a < b ? Basis{a, b} : Basis{b, a}; }

  bool is_pair() const { return second >= 0; }
  bool contains(int arm) const { return arm == first || arm == second; }

  friend bool operator==(const Basis&, const Basis&) = default;
  friend auto operator<=>(const Basis&, const Basis&) = default;
};

/// 1-based set notation, e.g. "{2,3}" or "{1}".
std::string to_string(const Basis& basis);

}  // namespace seqsamp
