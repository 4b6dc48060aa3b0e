#include "orbweyl/weyl.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace orbweyl {

std::size_t monomial_degree(const Monomial& m) {
  std::size_t d = 0;
  for (auto e : m) d += e;
  return d;
}

static void gen_monomials(std::size_t vars, std::size_t pos, std::size_t left,
                          Monomial& cur, std::vector<Monomial>& out) {
  if (pos + 1 == vars) {
    cur[pos] = static_cast<std::uint32_t>(left);
    out.push_back(cur);
    return;
  }
  for (std::size_t e = left + 1; e-- > 0;) {
    cur[pos] = static_cast<std::uint32_t>(left - e);
    gen_monomials(vars, pos + 1, e, cur, out);
  }
}

std::vector<Monomial> monomials_of_degree(std::size_t vars, std::size_t degree) {
  if (vars == 0) {
    if (degree == 0) return {Monomial{}};
    return {};
  }
  std::vector<Monomial> out;
  Monomial cur(vars, 0);
  // Lex order: highest exponent on the first variable comes last, so build
  // with the first slot ascending.
  std::vector<Monomial> raw;
  gen_monomials(vars, 0, degree, cur, raw);
  std::sort(raw.begin(), raw.end());
  return raw;
}

Poly Poly::monomial(std::size_t vars, const Monomial& m, const Rational& c) {
  Poly p(vars);
  p.add_term(m, c);
  return p;
}

std::size_t Poly::degree() const {
  std::size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, monomial_degree(m));
  return d;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (m.size() != vars_) throw std::invalid_argument("monomial arity mismatch");
  if (c == 0) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Poly Poly::scaled(const Rational& c) const {
  Poly out(vars_);
  if (c == 0) return out;
  for (const auto& [m, v] : terms_) out.terms_.emplace(m, v * c);
  return out;
}

WeylElement WeylElement::constant(std::size_t vars, const Rational& c) {
  WeylElement w(vars);
  w.add_term(Monomial(vars, 0), Monomial(vars, 0), c);
  return w;
}

WeylElement WeylElement::position(std::size_t vars, std::size_t i) {
  WeylElement w(vars);
  Monomial alpha(vars, 0), beta(vars, 0);
  alpha.at(i) = 1;
  w.add_term(alpha, beta, 1);
  return w;
}

WeylElement WeylElement::momentum(std::size_t vars, std::size_t i) {
  WeylElement w(vars);
  Monomial alpha(vars, 0), beta(vars, 0);
  beta.at(i) = 1;
  w.add_term(alpha, beta, 1);
  return w;
}

void WeylElement::add_term(const Monomial& alpha, const Monomial& beta, const Rational& c) {
  if (alpha.size() != vars_ || beta.size() != vars_)
    throw std::invalid_argument("exponent arity mismatch");
  if (c == 0) return;
  auto key = std::make_pair(alpha, beta);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(std::move(key), c);
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::size_t WeylElement::order() const {
  std::size_t d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, monomial_degree(k.second));
  return d;
}

std::size_t WeylElement::coeff_degree() const {
  std::size_t d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, monomial_degree(k.first));
  return d;
}

WeylElement WeylElement::operator+(const WeylElement& other) const {
  WeylElement out = *this;
  for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, c);
  return out;
}

WeylElement WeylElement::operator-(const WeylElement& other) const {
  WeylElement out = *this;
  for (const auto& [k, c] : other.terms_) out.add_term(k.first, k.second, -c);
  return out;
}

WeylElement WeylElement::scaled(const Rational& c) const {
  WeylElement out(vars_);
  if (c == 0) return out;
  for (const auto& [k, v] : terms_) out.terms_.emplace(k, v * c);
  return out;
}

// One product (d^b t^g) per variable expands to
//   sum_k k! C(b,k) C(g,k) t^{g-k} d^{b-k},
// and a full term product multiplies the per-variable expansions.
WeylElement WeylElement::operator*(const WeylElement& other) const {
  if (vars_ != other.vars_) throw std::invalid_argument("weyl arity mismatch");
  WeylElement out(vars_);
  for (const auto& [lk, lc] : terms_) {
    const Monomial& alpha = lk.first;
    const Monomial& beta = lk.second;
    for (const auto& [rk, rc] : other.terms_) {
      const Monomial& gamma = rk.first;
      const Monomial& delta = rk.second;
      Monomial kmax(vars_);
      for (std::size_t i = 0; i < vars_; ++i) kmax[i] = std::min(beta[i], gamma[i]);
      Monomial k(vars_, 0);
      for (;;) {
        Rational coeff = lc * rc;
        Monomial t(vars_), d(vars_);
        for (std::size_t i = 0; i < vars_; ++i) {
          coeff *= Rational(factorial(k[i])) * binomial(beta[i], k[i]) * binomial(gamma[i], k[i]);
          t[i] = alpha[i] + gamma[i] - k[i];
          d[i] = beta[i] + delta[i] - k[i];
        }
        out.add_term(t, d, coeff);
        std::size_t pos = 0;
        while (pos < vars_ && k[pos] == kmax[pos]) k[pos++] = 0;
        if (pos == vars_) break;
        ++k[pos];
      }
    }
  }
  return out;
}

WeylElement WeylElement::commutator(const WeylElement& other) const {
  return *this * other - other * *this;
}

Poly WeylElement::apply(const Poly& q) const {
  if (vars_ != q.vars()) throw std::invalid_argument("weyl arity mismatch");
  Poly out(vars_);
  for (const auto& [k, c] : terms_) {
    const Monomial& alpha = k.first;
    const Monomial& beta = k.second;
    for (const auto& [m, v] : q.terms()) {
      Rational coeff = c * v;
      Monomial res(vars_);
      bool killed = false;
      for (std::size_t i = 0; i < vars_; ++i) {
        if (beta[i] > m[i]) {
          killed = true;
          break;
        }
        for (std::uint32_t j = 0; j < beta[i]; ++j) coeff *= Rational(Int(m[i] - j));
        res[i] = m[i] - beta[i] + alpha[i];
      }
      if (!killed) out.add_term(res, coeff);
    }
  }
  return out;
}

namespace {

void append_factor(std::string& s, const char* symbol, std::size_t index, std::uint32_t exp) {
  s += symbol;
  s += std::to_string(index + 1);
  if (exp >= 2) {
    s += '^';
    s += std::to_string(exp);
  }
}

std::string term_body(const Monomial& alpha, const Monomial& beta) {
  std::string s;
  for (std::size_t i = 0; i < alpha.size(); ++i)
    if (alpha[i] > 0) append_factor(s, "t", i, alpha[i]);
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] > 0) append_factor(s, "∂", i, beta[i]);
  return s;
}

struct PrintTerm {
  std::size_t degree;
  Monomial alpha;
  Monomial beta;
  Rational coeff;
};

std::string render_terms(std::vector<PrintTerm> terms) {
  if (terms.empty()) return "0";
  // Within a total degree, larger exponents on earlier variables print first,
  // so t1 precedes t2 and position factors precede pure derivative terms.
  std::sort(terms.begin(), terms.end(), [](const PrintTerm& a, const PrintTerm& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.alpha != b.alpha) return a.alpha > b.alpha;
    return a.beta > b.beta;
  });
  std::string s;
  bool first = true;
  for (const auto& t : terms) {
    Rational c = t.coeff;
    bool neg = c < 0;
    if (neg) c = -c;
    if (first) {
      if (neg) s += "−";
      first = false;
    } else {
      s += neg ? " − " : " + ";
    }
    std::string body = term_body(t.alpha, t.beta);
    s += rational_str(c);
    if (!body.empty()) {
      s += "·";
      s += body;
    }
  }
  return s;
}

}  // namespace

std::string Poly::str() const {
  std::vector<PrintTerm> ts;
  for (const auto& [m, c] : terms_)
    ts.push_back({monomial_degree(m), m, Monomial(vars_, 0), c});
  return render_terms(std::move(ts));
}

std::string WeylElement::str() const {
  std::vector<PrintTerm> ts;
  for (const auto& [k, c] : terms_)
    ts.push_back({monomial_degree(k.first) + monomial_degree(k.second), k.first, k.second, c});
  return render_terms(std::move(ts));
}

}  // namespace orbweyl
