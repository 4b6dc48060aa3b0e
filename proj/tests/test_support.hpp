#pragma once

#include "orbweyl/algebra.hpp"
#include "orbweyl/coadjoint.hpp"

#include <random>
#include <utility>
#include <vector>

namespace ts {

using namespace orbweyl;

inline Rational R(long long p, long long q = 1) { return make_rational(p, q); }

inline Vec dense(std::size_t dim, std::vector<std::pair<int, Rational>> entries) {
  Vec v(dim, Rational(0));
  for (const auto& [i, c] : entries) v[static_cast<std::size_t>(i)] = c;
  return v;
}

inline Vec unit(std::size_t dim, std::size_t i) { return dense(dim, {{static_cast<int>(i), 1}}); }

inline Functional fn(const AlgebraPtr& g, std::vector<std::pair<int, Rational>> entries) {
  return Functional(g, dense(g->dim(), std::move(entries)));
}

inline Subspace sp(const AlgebraPtr& g, const std::vector<Vec>& rows) {
  return Subspace(g, Mat::from_rows(rows, g->dim()));
}

// Deterministic rational sampler matching the audit distribution.
struct RatSampler {
  std::mt19937_64 rng;
  explicit RatSampler(std::uint64_t seed) : rng(seed) {}

  Rational next() {
    long long num = static_cast<long long>(rng() % 19) - 9;
    long long den = static_cast<long long>(rng() % 9) + 1;
    return make_rational(num, den);
  }

  Vec vec(std::size_t dim) {
    Vec v(dim);
    for (auto& c : v) c = next();
    return v;
  }

  // Random vector supported on the given indices only.
  Vec vec_on(std::size_t dim, const std::vector<std::size_t>& support) {
    Vec v(dim, Rational(0));
    for (std::size_t i : support) v[i] = next();
    return v;
  }
};

inline std::vector<std::size_t> indices_of_parity(const LieAlgebra& g, int parity) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.parity_of(static_cast<int>(i)) == parity) out.push_back(i);
  return out;
}

}  // namespace ts
