#pragma once

// The Weyl algebra A_r over the rationals, kept in normal order (every
// position factor left of every derivative), and the polynomial module it
// acts on. Multiplication straightens via [d_i, t_i] = 1.

#include "orbweyl/rational.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace orbweyl {

using Monomial = std::vector<std::uint32_t>;

std::size_t monomial_degree(const Monomial& m);

// All exponent vectors of the given total degree, lex order. r = 0 yields
// only the empty monomial at degree 0.
std::vector<Monomial> monomials_of_degree(std::size_t vars, std::size_t degree);

class Poly {
 public:
  explicit Poly(std::size_t vars) : vars_(vars) {}
  static Poly monomial(std::size_t vars, const Monomial& m, const Rational& c = 1);

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  std::size_t degree() const;  // 0 for the zero polynomial

  void add_term(const Monomial& m, const Rational& c);
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  Poly scaled(const Rational& c) const;

  bool operator==(const Poly& other) const = default;

  std::string str() const;

 private:
  std::size_t vars_;
  std::map<Monomial, Rational> terms_;
};

class WeylElement {
 public:
  explicit WeylElement(std::size_t vars) : vars_(vars) {}
  static WeylElement constant(std::size_t vars, const Rational& c);
  static WeylElement identity(std::size_t vars) { return constant(vars, 1); }
  static WeylElement position(std::size_t vars, std::size_t i);  // t_{i+1}
  static WeylElement momentum(std::size_t vars, std::size_t i);  // d_{i+1}

  std::size_t vars() const { return vars_; }
  bool is_zero() const { return terms_.empty(); }
  // Key: (t exponents, derivative exponents).
  const std::map<std::pair<Monomial, Monomial>, Rational>& terms() const { return terms_; }

  void add_term(const Monomial& alpha, const Monomial& beta, const Rational& c);
  std::size_t order() const;         // max |beta|
  std::size_t coeff_degree() const;  // max |alpha|

  WeylElement operator+(const WeylElement& other) const;
  WeylElement operator-(const WeylElement& other) const;
  WeylElement operator*(const WeylElement& other) const;
  WeylElement scaled(const Rational& c) const;
  WeylElement commutator(const WeylElement& other) const;

  Poly apply(const Poly& q) const;

  bool operator==(const WeylElement& other) const = default;

  // Terms sorted by (total degree, lex); e.g. "1·t1 − 2/3·t1^2∂2".
  std::string str() const;

 private:
  std::size_t vars_;
  std::map<std::pair<Monomial, Monomial>, Rational> terms_;
};

}  // namespace orbweyl
