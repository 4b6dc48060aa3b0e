#pragma once

// Graded functionals, graded polarisations, and the classification of
// graded-primitive quotients by their matrix-of-Weyl-algebras shape.

#include "orbweyl/coadjoint.hpp"
#include "orbweyl/polarisation.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace orbweyl {

struct SuperFunctional {
  Functional base;
  bool in_lambda = false;        // vanishes on the odd part
  bool in_lambda_prime = false;  // additionally vanishes on odd-odd brackets
};

// Flags are computed exactly on the homogeneous basis. An ungraded ambient
// is degenerate but allowed: both flags are true.
SuperFunctional classify_lambda(const Functional& f);

// The even part as an algebra of its own, plus the ambient indices of its
// basis (ascending). For an ungraded algebra this is the identity embedding.
std::pair<AlgebraPtr, std::vector<std::size_t>> even_part(const AlgebraPtr& g);

Functional restrict_functional(const Functional& f, const AlgebraPtr& sub,
                               const std::vector<std::size_t>& indices);

// p = (Vergne polarisation of the even restriction) + the whole odd part.
// Certified: f([p,p]) = 0, p contains the radical, and the even slice has
// dimension (dim even + dim even radical) / 2. Requires in_lambda_prime.
Subspace graded_polarisation(const Functional& f);

struct QuotientShape {
  long long s = 1;
  std::size_t n = 0;
  bool two_block = false;
  std::string provenance;  // "theorem_11_3" | "bell_musson_heuristic"

  std::string str() const;  // e.g. "M_2(A_1)" or "M_2(A_1) x M_2(A_1)"
  bool operator==(const QuotientShape& other) const = default;
};

// Requires in_lambda. n is half the rank of the even Gram block; s comes
// from the rank of the symmetric odd form when f is outside Lambda-prime.
QuotientShape classify_quotient(const Functional& f);

// 0, 0, 1, 2, 4, 6, 9, 12, 16, 20, ... (exact, i >= 1).
long long s_bound(long long i);

struct AuditRecord {
  std::string family;
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  long long bound = 0;
  std::map<std::size_t, std::size_t> histogram;  // observed weight -> count
  std::vector<std::size_t> attained;
  std::size_t max_weight = 0;
  bool within_bound = false;

  std::string table() const;
};

// Samples random rational functionals (odd coordinates pinned to zero on a
// graded algebra) and compares observed weights against the family bound.
// The family token must describe the algebra: "n_m:<m>", "glmn:<m>,<n>",
// or "super_heisenberg".
AuditRecord weight_range_audit(const AlgebraPtr& g, const std::string& family,
                               std::size_t trials, std::uint64_t seed);

}  // namespace orbweyl
