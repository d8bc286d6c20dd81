#pragma once

#include "seqsamp/rng.hpp"

#include <string>
#include <variant>
#include <vector>

namespace seqsamp {

struct Binomial {
  int trials = 1;
  double p = 0.5;
  friend bool operator==(const Binomial&, const Binomial&) = default;
};

struct Bernoulli {
  double p = 0.5;
  friend bool operator==(const Bernoulli&, const Bernoulli&) = default;
};

/// Finite support with explicit probabilities.
struct DiscreteBounded {
  std::vector<double> values;
  std::vector<double> probabilities;
  friend bool operator==(const DiscreteBounded&, const DiscreteBounded&) = default;
};

struct PointMass {
  double value = 0.0;
  friend bool operator==(const PointMass&, const PointMass&) = default;
};

/// Outcome distribution of one population. All families are bounded.
using PopulationSpec = std::variant<Binomial, Bernoulli, DiscreteBounded, PointMass>;

/// Throws std::invalid_argument on out-of-range parameters.
void validate(const PopulationSpec& spec);

double sample(const PopulationSpec& spec, RngStream& rng);
double true_mean(const PopulationSpec& spec);
/// u with P(|X| <= u) = 1.
double support_bound(const PopulationSpec& spec);

std::string family_name(const PopulationSpec& spec);

}  // namespace seqsamp
