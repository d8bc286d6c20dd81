#include "seqsamp/population.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace seqsamp {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void check_probability(double p, const char* family) {
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument(fmt::format("{}: p={} outside [0, 1]", family, p));
}

}  // namespace

void validate(const PopulationSpec& spec) {
  std::visit(overloaded{
                 [](const Binomial& b) {
                   if (b.trials < 1) throw std::invalid_argument("binomial: trials must be positive");
                   check_probability(b.p, "binomial");
                 },
                 [](const Bernoulli& b) { check_probability(b.p, "bernoulli"); },
                 [](const DiscreteBounded& d) {
                   if (d.values.empty() || d.values.size() != d.probabilities.size()) {
                     throw std::invalid_argument("discrete: values and probabilities must be non-empty and equal length");
                   }
                   for (double v : d.values) {
                     if (!std::isfinite(v)) throw std::invalid_argument("discrete: support points must be finite");
                   }
                   for (double p : d.probabilities) check_probability(p, "discrete");
                   const double total = std::accumulate(d.probabilities.begin(), d.probabilities.end(), 0.0);
                   if (std::abs(total - 1.0) > 1e-9) {
                     throw std::invalid_argument(fmt::format("discrete: probabilities sum to {}, not 1", total));
                   }
                 },
                 [](const PointMass& m) {
                   if (!std::isfinite(m.value)) throw std::invalid_argument("point mass: value must be finite");
                 },
             },
             spec);
}

double sample(const PopulationSpec& spec, RngStream& rng) {
  return std::visit(overloaded{
                        [&](const Binomial& b) {
                          int successes = 0;
                          for (int t = 0; t < b.trials; ++t) successes += rng.uniform() < b.p ? 1 : 0;
                          return static_cast<double>(successes);
                        },
                        [&](const Bernoulli& b) { return rng.uniform() < b.p ? 1.0 : 0.0; },
                        [&](const DiscreteBounded& d) {
                          const double u = rng.uniform();
                          double cumulative = 0.0;
                          for (std::size_t i = 0; i + 1 < d.values.size(); ++i) {
                            cumulative += d.probabilities[i];
                            if (u < cumulative) return d.values[i];
                          }
                          return d.values.back();
                        },
                        [](const PointMass& m) { return m.value; },
                    },
                    spec);
}

double true_mean(const PopulationSpec& spec) {
  return std::visit(overloaded{
                        [](const Binomial& b) { return b.trials * b.p; },
                        [](const Bernoulli& b) { return b.p; },
                        [](const DiscreteBounded& d) {
                          return std::inner_product(d.values.begin(), d.values.end(), d.probabilities.begin(), 0.0);
                        },
                        [](const PointMass& m) { return m.value; },
                    },
                    spec);
}

double support_bound(const PopulationSpec& spec) {
  return std::visit(overloaded{
                        [](const Binomial& b) { return static_cast<double>(b.trials); },
                        [](const Bernoulli&) { return 1.0; },
                        [](const DiscreteBounded& d) {
                          double u = 0.0;
                          for (double v : d.values) u = std::max(u, std::abs(v));
                          return u;
                        },
                        [](const PointMass& m) { return std::abs(m.value); },
                    },
                    spec);
}

std::string family_name(const PopulationSpec& spec) {
  return std::visit(overloaded{
                        [](const Binomial&) { return std::string("binomial"); },
                        [](const Bernoulli&) { return std::string("bernoulli"); },
                        [](const DiscreteBounded&) { return std::string("discrete"); },
                        [](const PointMass&) { return std::string("point_mass"); },
                    },
                    spec);
}

}  // namespace seqsamp
