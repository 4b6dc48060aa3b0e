#pragma once

// Induced modules over a polarisation: the algebra acts on polynomials in
// coordinates dual to a complement of the polarisation, and each basis
// element is reconstructed as an exact differential operator.

#include "orbweyl/algebra.hpp"
#include "orbweyl/coadjoint.hpp"
#include "orbweyl/polarisation.hpp"
#include "orbweyl/weyl.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace orbweyl {

struct DiffOpRep {
  AlgebraPtr algebra;
  Functional base;
  Subspace polarisation;
  std::vector<std::size_t> complement;  // ascending basis indices spanning g mod p
  std::vector<WeylElement> rho;         // one operator per basis element

  std::size_t vars() const { return complement.size(); }
  WeylElement rho_of(const Vec& x) const;
};

struct RepCheck {
  bool ok = true;
  // First basis pair whose bracket fails the homomorphism identity.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

// Requires p to be a polarisation of f (the failed certificate is named
// otherwise) and an ungraded ambient algebra. The result is certified by an
// internal homomorphism check before it is returned.
DiffOpRep induce(const Functional& f, const Subspace& p);

Poly apply(const DiffOpRep& rep, const Vec& x, const Poly& q);

RepCheck check_rep(const DiffOpRep& rep);

// Pairs (rho(x_i), rho(y_i)) for a Darboux basis of the same functional,
// verified to satisfy the exact Weyl relations.
std::vector<std::pair<WeylElement, WeylElement>> weyl_generators(const DiffOpRep& rep,
                                                                 const DarbouxBasis& db);

// Joint eigenspace of the subalgebra k on polynomials of degree <= cap:
// all q with rho(x) q = f(x) q for every x in k. Requires f([k,k]) = 0.
std::vector<Poly> eigenspace(const DiffOpRep& rep, const Subspace& k, const Functional& f,
                             std::size_t cap);

}  // namespace orbweyl
