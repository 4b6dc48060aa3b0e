#pragma once

// Subordinate subalgebras, Vergne's polarisation along a flag of ideals,
// and affine slices f + k-perp with their three-valued verdicts.

#include "orbweyl/coadjoint.hpp"

#include <optional>
#include <string>

namespace orbweyl {

// f vanishes on [k, k]; errors when k is not a subalgebra.
bool is_subordinate(const Subspace& k, const Functional& f);

// The lower central series refined to a full flag of ideals
// 0 = V_0 < V_1 < ... < V_dim = g, extending each step with the rows of the
// larger term in order (lowest pivot first). Deterministic.
std::vector<Subspace> default_ideal_flag(const AlgebraPtr& g);

// p = sum_i rad(f restricted to V_i); certified to be a polarisation.
// A custom flag must be a full flag of ideals.
Subspace vergne_polarisation(const Functional& f,
                             const std::vector<Subspace>* flag = nullptr);

// Subalgebra, subordinate, contains the radical, and of dimension
// (dim g + dim g^f) / 2.
bool is_polarisation(const Subspace& p, const Functional& f);

struct AffineSlice {
  Functional base;
  Subspace annihilated;  // k
  std::size_t dim;       // dim g - dim k
  bool irreducible;      // affine subspaces are irreducible; always true
};

AffineSlice affine_slice(const Functional& f, const Subspace& k);

enum class SliceStatus { lagrangian_unique_module, empty, not_lagrangian, inconclusive };

struct SliceVerdict {
  SliceStatus status;
  std::string detail;
  std::optional<int> module_count;  // 1 exactly when lagrangian_unique_module
};

const char* slice_status_name(SliceStatus s);

// Decline-to-guess analysis of Z = orbit(orbit_of) intersect (f + k-perp).
SliceVerdict slice_verdict(const Functional& f, const Subspace& k,
                           const Functional& orbit_of);

}  // namespace orbweyl
