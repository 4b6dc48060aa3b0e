#pragma once

// Exact rational scalar used everywhere: arbitrary precision, always in
// lowest terms with positive denominator (cpp_rational keeps it canonical).

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace orbweyl {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
  if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
  return Rational(Int(num)) / Int(den);
}

// Accepts "p" or "p/q" with an optional leading sign on p; q must be a
// positive or negative integer, never zero.
Rational parse_rational(const std::string& text);

// "p" when the denominator is 1, otherwise "p/q".
std::string rational_str(const Rational& value);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

}  // namespace orbweyl
