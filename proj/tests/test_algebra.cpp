#include "orbweyl/algebra.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace orbweyl;
using ts::R;

namespace {

AlgebraPtr abelian(int d) {
  std::vector<std::string> names;
  for (int i = 0; i < d; ++i) names.push_back("a" + std::to_string(i + 1));
  return LieAlgebra::create("abelian", names, std::vector<int>(d, 0), {});
}

AlgebraPtr broken_n3() {
  // [x,y] = z plus a deliberate [x,z] = x, which kills the Jacobi identity.
  return LieAlgebra::create("broken", {"x", "y", "z"}, {0, 0, 0},
                            {{0, 1, {{2, R(1)}}}, {0, 2, {{0, R(1)}}}});
}

AlgebraPtr solvable2() {
  return LieAlgebra::create("solvable", {"x", "y"}, {0, 0}, {{0, 1, {{1, R(1)}}}});
}

}  // namespace

TEST_CASE("n_m(3) is the Heisenberg algebra") {
  AlgebraPtr g = build_n_m(3);
  CHECK(g->dim() == 3);
  CHECK(g->basis_names() == std::vector<std::string>{"E12", "E23", "E13"});
  CHECK(!g->graded());

  CHECK(g->bracket_basis(0, 1) == SparseVec{{2, R(1)}});
  CHECK(g->bracket_basis(1, 0) == SparseVec{{2, R(-1)}});
  CHECK(g->bracket_basis(0, 2).empty());
  CHECK(g->bracket_basis(1, 2).empty());

  Vec x = ts::unit(3, 0), y = ts::unit(3, 1);
  CHECK(g->bracket(x, y) == ts::unit(3, 2));
  CHECK(vec_is_zero(g->bracket(x, x)));
}

TEST_CASE("n_m(4) brackets match the matrix-unit table") {
  AlgebraPtr g = build_n_m(4);
  CHECK(g->dim() == 6);
  CHECK(g->basis_names() ==
        std::vector<std::string>{"E12", "E23", "E34", "E13", "E24", "E14"});
  CHECK(g->bracket_basis(0, 1) == SparseVec{{3, R(1)}});   // [E12,E23] = E13
  CHECK(g->bracket_basis(0, 4) == SparseVec{{5, R(1)}});   // [E12,E24] = E14
  CHECK(g->bracket_basis(1, 2) == SparseVec{{4, R(1)}});   // [E23,E34] = E24
  CHECK(g->bracket_basis(2, 3) == SparseVec{{5, R(-1)}});  // [E34,E13] = -E14
  CHECK(g->bracket_basis(0, 2).empty());
  CHECK(g->bracket_basis(3, 4).empty());
  CHECK(g->nilpotency_class() == 3);
}

TEST_CASE("builder preconditions") {
  CHECK_THROWS_AS(build_n_m(1), std::invalid_argument);
  CHECK(build_n_m(2)->dim() == 1);
  CHECK_THROWS_AS(build_glmn_plus(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(build_glmn_plus(0, 1), std::invalid_argument);
}

TEST_CASE("validate accepts the shipped families") {
  for (const AlgebraPtr& g :
       {build_n_m(3), build_n_m(5), build_glmn_plus(2, 1), build_glmn_plus(3, 2),
        build_super_heisenberg()}) {
    ValidationReport rep = validate(*g);
    CHECK(rep.ok());
    CHECK(rep.nilpotent);
  }
}

TEST_CASE("validate reports nilpotency class") {
  CHECK(validate(*build_n_m(3)).nilpotency_class == 2);
  CHECK(validate(*abelian(4)).nilpotency_class == 1);
  CHECK(validate(*build_n_m(4)).nilpotency_class == 3);

  ValidationReport solv = validate(*solvable2());
  CHECK(solv.ok());
  CHECK(!solv.nilpotent);
  CHECK(solv.nilpotency_class == -1);
}

TEST_CASE("validate names the broken Jacobi triple") {
  ValidationReport rep = validate(*broken_n3());
  REQUIRE(!rep.ok());
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].axiom == "jacobi");
  CHECK(rep.violations[0].triple == std::array<int, 3>{0, 1, 2});
}

TEST_CASE("validate catches antisymmetry and grading violations") {
  // An even diagonal bracket [x,x] = y is forbidden.
  AlgebraPtr diag = LieAlgebra::create("diag", {"x", "y"}, {0, 0}, {{0, 0, {{1, R(1)}}}});
  ValidationReport rep = validate(*diag);
  REQUIRE(!rep.ok());
  CHECK(rep.violations[0].axiom == "antisymmetry");

  // An even-odd bracket landing in the even part violates the grading.
  AlgebraPtr bad = LieAlgebra::create("badgrade", {"x", "a", "y"}, {0, 1, 0},
                                      {{0, 1, {{2, R(1)}}}});
  ValidationReport rep2 = validate(*bad);
  REQUIRE(!rep2.ok());
  CHECK(rep2.violations[0].axiom == "grading");
}

TEST_CASE("create rejects malformed tables") {
  CHECK_THROWS_AS(LieAlgebra::create("dup", {"x", "y"}, {0, 0},
                                     {{0, 1, {{0, R(1)}}}, {0, 1, {{1, R(1)}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::create("order", {"x", "y"}, {0, 0}, {{1, 0, {{0, R(1)}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::create("range", {"x", "y"}, {0, 0}, {{0, 5, {{0, R(1)}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::create("coeff", {"x", "y"}, {0, 0}, {{0, 1, {{7, R(1)}}}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::create("parity", {"x", "y"}, {0, 2}, {}),
                  std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra::create("names", {"x"}, {0, 0}, {}), std::invalid_argument);
}

TEST_CASE("lower central series dimensions") {
  auto dims = [](const AlgebraPtr& g) {
    std::vector<std::size_t> out;
    for (const auto& term : lower_central_series(g)) out.push_back(term.dim());
    return out;
  };
  CHECK(dims(build_n_m(3)) == std::vector<std::size_t>{3, 1, 0});
  CHECK(dims(abelian(4)) == std::vector<std::size_t>{4, 0});
  CHECK(dims(build_n_m(4)) == std::vector<std::size_t>{6, 3, 1, 0});
  CHECK(dims(build_glmn_plus(3, 2)) == std::vector<std::size_t>{10, 6, 3, 1, 0});
  // Non-nilpotent: the chain stops at the stabilised nonzero term.
  CHECK(dims(solvable2()) == std::vector<std::size_t>{2, 1});
}

TEST_CASE("series terms absorb brackets") {
  for (const AlgebraPtr& g : {build_n_m(4), build_glmn_plus(3, 2)}) {
    auto series = lower_central_series(g);
    Subspace full = Subspace::full(g);
    for (std::size_t i = 0; i + 1 < series.size(); ++i)
      CHECK(series[i + 1].contains(bracket_span(full, series[i])));
  }
}

TEST_CASE("center computations") {
  AlgebraPtr n3 = build_n_m(3);
  Subspace z3 = center(n3);
  CHECK(z3.dim() == 1);
  CHECK(z3.contains(ts::unit(3, 2)));

  CHECK(center(abelian(4)).dim() == 4);

  Subspace z4 = center(build_n_m(4));
  CHECK(z4.dim() == 1);
  CHECK(z4.contains(ts::unit(6, 5)));
}

TEST_CASE("subalgebra detection") {
  AlgebraPtr n3 = build_n_m(3);
  CHECK(ts::sp(n3, {ts::unit(3, 1), ts::unit(3, 2)}).is_subalgebra());
  CHECK(Subspace::full(n3).is_subalgebra());
  CHECK(Subspace::zero(n3).is_subalgebra());

  AlgebraPtr n4 = build_n_m(4);
  CHECK(!ts::sp(n4, {ts::unit(6, 0), ts::unit(6, 1)}).is_subalgebra());
}

TEST_CASE("subspace equality is canonical") {
  AlgebraPtr n3 = build_n_m(3);
  Subspace a = ts::sp(n3, {ts::dense(3, {{0, R(2)}, {1, R(2)}}), ts::unit(3, 1)});
  Subspace b = ts::sp(n3, {ts::unit(3, 0), ts::dense(3, {{0, R(5)}, {1, R(-3)}})});
  CHECK(a == b);
  CHECK(a.matrix() == b.matrix());
  CHECK(a.sum(b) == a);
  CHECK(a.intersect(ts::sp(n3, {ts::unit(3, 0)})).dim() == 1);
}

TEST_CASE("gl(m,n)+ builders") {
  AlgebraPtr g21 = build_glmn_plus(2, 1);
  CHECK(g21->dim() == 3);
  CHECK(g21->graded());
  CHECK(g21->basis_names() == std::vector<std::string>{"A12", "B11", "B21"});
  CHECK(g21->parity() == std::vector<int>{0, 1, 1});
  CHECK(g21->bracket_basis(0, 2) == SparseVec{{1, R(1)}});  // [A12,B21] = B11
  CHECK(g21->bracket_basis(0, 1).empty());
  CHECK(g21->bracket_basis(1, 2).empty());

  AlgebraPtr g32 = build_glmn_plus(3, 2);
  CHECK(g32->dim() == 10);
  CHECK(g32->basis_names() ==
        std::vector<std::string>{"A12", "A23", "A13", "D12", "B11", "B12", "B21", "B22",
                                 "B31", "B32"});
  CHECK(g32->parity() == std::vector<int>{0, 0, 0, 0, 1, 1, 1, 1, 1, 1});
  // Odd-odd brackets vanish identically.
  for (int i = 4; i < 10; ++i)
    for (int j = i; j < 10; ++j) CHECK(g32->bracket_basis(i, j).empty());
  CHECK(g32->bracket_basis(0, 1) == SparseVec{{2, R(1)}});  // [A12,A23] = A13
  CHECK(g32->bracket_basis(3, 4) == SparseVec{{5, R(-1)}});  // [D12,B11] = -B12
  CHECK(g32->bracket_basis(3, 6) == SparseVec{{7, R(-1)}});  // [D12,B21] = -B22
}

TEST_CASE("super-Heisenberg structure") {
  AlgebraPtr g = build_super_heisenberg();
  CHECK(g->dim() == 5);
  CHECK(g->graded());
  CHECK(g->basis_names() == std::vector<std::string>{"x", "y", "z", "a", "b"});
  CHECK(g->parity() == std::vector<int>{0, 0, 0, 1, 1});
  CHECK(g->bracket_basis(0, 1) == SparseVec{{2, R(1)}});  // [x,y] = z
  CHECK(g->bracket_basis(3, 4) == SparseVec{{2, R(1)}});  // [a,b] = z
  // Symmetric completion on the odd-odd pair.
  CHECK(g->bracket_basis(4, 3) == SparseVec{{2, R(1)}});
  CHECK(g->bracket_basis(3, 3).empty());  // [a,a] = 0
  CHECK(g->nilpotency_class() == 2);
}

TEST_CASE("structural equality") {
  CHECK(build_n_m(3)->structurally_equal(*build_n_m(3)));
  CHECK(!build_n_m(3)->structurally_equal(*build_n_m(4)));
  CHECK(!build_n_m(3)->structurally_equal(*abelian(3)));
  CHECK(!build_glmn_plus(2, 1)->structurally_equal(*build_glmn_plus(1, 2)));
}

TEST_CASE("ad matrices act like the bracket") {
  AlgebraPtr g = build_n_m(4);
  ts::RatSampler s(11);
  for (int t = 0; t < 10; ++t) {
    Vec x = s.vec(6), y = s.vec(6);
    CHECK(mat_vec(g->ad(x), y) == g->bracket(x, y));
  }
}
