#pragma once

// Finite-dimensional Lie algebras and superalgebras over the rationals,
// presented by structure constants on a fixed homogeneous basis. Only
// entries with i <= j are stored; the rest follow by graded antisymmetry.

#include "orbweyl/linalg.hpp"

#include <array>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace orbweyl {

class LieAlgebra;
using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

using SparseVec = std::map<int, Rational>;

struct Violation {
  std::string axiom;          // "antisymmetry" | "grading" | "jacobi"
  std::array<int, 3> triple;  // witnessing basis indices; unused slots are -1
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool nilpotent = false;
  int nilpotency_class = -1;  // smallest m with g^m = 0; -1 when not nilpotent
  bool ok() const { return violations.empty(); }
};

class LieAlgebra {
 public:
  struct Entry {
    int i, j;
    SparseVec coeffs;
  };

  // Validates shape only (index ranges, i <= j, no duplicate cells); axioms
  // are checked by validate() so that broken inputs can be reported.
  static AlgebraPtr create(std::string name, std::vector<std::string> basis,
                           std::vector<int> parity, std::vector<Entry> table);

  std::size_t dim() const { return names_.size(); }
  const std::string& name() const { return name_; }
  const std::vector<std::string>& basis_names() const { return names_; }
  const std::vector<int>& parity() const { return parity_; }
  int parity_of(int i) const { return parity_[static_cast<std::size_t>(i)]; }
  bool graded() const { return graded_; }

  // Stored cells only (i <= j), for serialisation.
  const std::map<std::pair<int, int>, SparseVec>& table() const { return table_; }

  // [e_i, e_j] for any index order, with the graded antisymmetry sign.
  SparseVec bracket_basis(int i, int j) const;
  Vec bracket(const Vec& u, const Vec& v) const;

  // ad x as a dim x dim matrix: column j holds [x, e_j].
  Mat ad(const Vec& x) const;

  bool nilpotent() const { return nilpotent_; }
  int nilpotency_class() const { return nilpotency_class_; }
  // Dimensions of the lower central series, starting at dim(g).
  const std::vector<std::size_t>& series_dims() const { return series_dims_; }

  bool structurally_equal(const LieAlgebra& other) const;

 private:
  LieAlgebra() = default;

  std::string name_;
  std::vector<std::string> names_;
  std::vector<int> parity_;
  bool graded_ = false;
  std::map<std::pair<int, int>, SparseVec> table_;
  bool nilpotent_ = false;
  int nilpotency_class_ = -1;
  std::vector<std::size_t> series_dims_;
};

// A linear subspace of a fixed algebra, held as a canonical RREF row basis;
// equality is structural ambient equality plus bit-equality of the matrix.
class Subspace {
 public:
  Subspace(AlgebraPtr ambient, const Mat& spanning_rows);
  static Subspace zero(AlgebraPtr ambient);
  static Subspace full(AlgebraPtr ambient);

  const AlgebraPtr& ambient() const { return ambient_; }
  const Mat& matrix() const { return rows_; }
  std::size_t dim() const { return rows_.rows(); }
  bool is_subalgebra() const { return is_subalgebra_; }

  bool contains(const Vec& v) const;
  bool contains(const Subspace& other) const;
  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;

  bool operator==(const Subspace& other) const;

 private:
  AlgebraPtr ambient_;
  Mat rows_;
  bool is_subalgebra_ = false;
};

ValidationReport validate(const LieAlgebra& g);

// Strictly decreasing chain g = g^0 > g^1 > ... ending at the stabilised
// term (the zero subspace exactly when g is nilpotent).
std::vector<Subspace> lower_central_series(const AlgebraPtr& g);

Subspace center(const AlgebraPtr& g);

Subspace bracket_span(const Subspace& a, const Subspace& b);

AlgebraPtr build_n_m(int m);
AlgebraPtr build_glmn_plus(int m, int n);
AlgebraPtr build_super_heisenberg();

}  // namespace orbweyl
