#include "seqsamp/scalar.hpp"
#include "seqsamp/basis.hpp"

#include <fmt/format.h>

#include <cctype>
#include <stdexcept>

namespace seqsamp {

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
  throw std::invalid_argument(fmt::format("not a number: '{}'", text));
}

Rational power_of_ten(long exponent) {
  return Rational(std::string("1") + std::string(static_cast<std::size_t>(exponent), '0'));
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) bad_literal(text);
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_rational(text.substr(0, slash));
    Rational den = parse_rational(text.substr(slash + 1));
    if (den == 0) bad_literal(text);
    return num / den;
  }

  std::size_t pos = 0;
  bool negative = false;
  if (text[pos] == '+' || text[pos] == '-') negative = text[pos++] == '-';

  std::string digits;
  long scale = 0;
  bool seen_dot = false;
  for (; pos < text.size(); ++pos) {
    char ch = text[pos];
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits.push_back(ch);
      if (seen_dot) ++scale;
    } else if (ch == '.' && !seen_dot) {
      seen_dot = true;
    } else {
      break;
    }
  }
  if (digits.empty()) bad_literal(text);

  if (pos < text.size()) {
    if (text[pos] != 'e' && text[pos] != 'E') bad_literal(text);
    ++pos;
    bool exp_negative = false;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) exp_negative = text[pos++] == '-';
    if (pos == text.size()) bad_literal(text);
    long exponent = 0;
    for (; pos < text.size(); ++pos) {
      if (!std::isdigit(static_cast<unsigned char>(text[pos]))) bad_literal(text);
      exponent = exponent * 10 + (text[pos] - '0');
      if (exponent > 4000) bad_literal(text);
    }
    scale += exp_negative ? exponent : -exponent;
  }

  auto first_nonzero = digits.find_first_not_of('0');
  Rational value = first_nonzero == std::string::npos ? Rational(0) : Rational(digits.substr(first_nonzero));
  if (scale > 0) value /= power_of_ten(scale);
  if (scale < 0) value *= power_of_ten(-scale);
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) { return value.str(); }

std::string to_string(double value) { return fmt::format("{}", value); }

std::string to_string(const Basis& basis) {
  if (basis.is_pair()) return fmt::format("{{{},{}}}", basis.first + 1, basis.second + 1);
  return fmt::format("{{{}}}", basis.first + 1);
}

}  // namespace seqsamp
