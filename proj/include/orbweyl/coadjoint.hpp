#pragma once

// Coadjoint orbit data: Gram matrices of f([x,y]), radicals, orbit
// dimensions, the exponentiated one-parameter action, and Darboux bases.

#include "orbweyl/algebra.hpp"

#include <utility>

namespace orbweyl {

class Functional {
 public:
  Functional(AlgebraPtr ambient, Vec coords);
  static Functional zero(AlgebraPtr ambient);

  const AlgebraPtr& ambient() const { return ambient_; }
  const Vec& coords() const { return coords_; }
  Rational operator()(const Vec& v) const { return dot(coords_, v); }

  bool operator==(const Functional& other) const;

 private:
  AlgebraPtr ambient_;
  Vec coords_;
};

struct GramMatrix {
  Mat entries;  // entries(i,j) = f([e_i, e_j]); antisymmetric when ungraded
  Functional source;
};

struct DarbouxBasis {
  std::vector<std::pair<Vec, Vec>> pairs;  // (x_i, y_i) with B(x_i, y_j) = d_ij
  Mat kernel_rows;                         // canonical basis of the radical
};

GramMatrix gram_matrix(const Functional& f);  // errors: non-nilpotent ambient
Subspace radical(const Functional& f);
std::size_t orbit_dim(const Functional& f);  // rank of the Gram matrix
std::size_t weight(const Functional& f);     // orbit_dim / 2

// sum_k (ad x)^k / k!, exact; errors when ad x is not nilpotent.
Mat exp_ad(const LieAlgebra& g, const Vec& x);

// f composed with exp(-ad x): the action of exp(x) on the dual space.
Functional coadjoint_act(const Vec& x, const Functional& f);

// (exp(t_1 e_{i_1}) ... exp(t_k e_{i_k})) . f, leftmost factor outermost.
Functional orbit_sample(const Functional& f,
                        const std::vector<std::pair<int, Rational>>& params);

// Symplectic Gram-Schmidt over the rationals. Pivoting is deterministic:
// the first pair (in lex order) whose bracket acts as a scalar on every
// induced module is preferred, then the first pair with a nonzero pairing.
DarbouxBasis darboux_basis(const Functional& f);

// Elements w with [w, g] inside the zero-acting tower act as f(w) times the
// identity on every module induced from a polarisation at f.
Subspace scalar_acting(const Functional& f);

enum class OrbitReach { confirmed, refuted, inconclusive };

// Three-valued orbit membership: rank and center-restriction invariants can
// refute; exact equality or a greedy triangular parameter solve confirms.
OrbitReach same_orbit(const Functional& f, const Functional& h);

}  // namespace orbweyl
