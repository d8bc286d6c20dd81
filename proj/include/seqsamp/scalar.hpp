#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Core>

#include <string>
#include <string_view>

namespace seqsamp {

/// Exact rational scalar used by the LP layer in exact mode.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Comparison slack for optimality and feasibility tests. Zero for exact types.
template <typename Scalar>
struct ScalarTraits {
  static Scalar tolerance() { return Scalar(1e-12); }
  static constexpr bool exact = false;
};

template <>
struct ScalarTraits<Rational> {
  static Rational tolerance() { return Rational(0); }
  static constexpr bool exact = true;
};

template <typename To, typename From>
To scalar_cast(const From& value) {
  if constexpr (std::is_same_v<To, From>) {
    return value;
  } else {
    return static_cast<To>(value);
  }
}

template <typename To, typename From>
Vector<To> vector_cast(const Vector<From>& v) {
  Vector<To> out(v.size());
  for (Eigen::Index i = 0; i < v.size(); ++i) out[i] = scalar_cast<To>(v[i]);
  return out;
}

/// Parses a decimal literal ("3", "-0.25", "1e-3", "7/2") into an exact rational.
/// Throws std::invalid_argument on malformed input.
Rational parse_rational(std::string_view text);

/// "3/4", "-2", "0".
std::string to_string(const Rational& value);
/// Shortest round-trip decimal.
std::string to_string(double value);

}  // namespace seqsamp
