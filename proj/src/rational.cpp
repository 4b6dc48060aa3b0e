#include "orbweyl/rational.hpp"

#include <cctype>

namespace orbweyl {

namespace {

Int parse_int(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty integer in rational literal");
  std::size_t start = (text[0] == '+' || text[0] == '-') ? 1 : 0;
  if (start == text.size()) throw std::invalid_argument("sign without digits in rational literal");
  for (std::size_t i = start; i < text.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(text[i])))
      throw std::invalid_argument("malformed rational literal: " + text);
  }
  return Int(text);
}

}  // namespace

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_int(text));
  Int num = parse_int(text.substr(0, slash));
  Int den = parse_int(text.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("rational denominator must be nonzero");
  return Rational(num) / den;
}

std::string rational_str(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Rational factorial(unsigned n) {
  Int acc = 1;
  for (unsigned i = 2; i <= n; ++i) acc *= i;
  return Rational(acc);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  Int acc = 1;
  for (unsigned i = 0; i < k; ++i) {
    acc *= (n - i);
    acc /= (i + 1);  // exact: product of j consecutive integers divides by j!
  }
  return Rational(acc);
}

}  // namespace orbweyl
