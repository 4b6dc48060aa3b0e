#include "orbweyl/superalgebra.hpp"

#include "doctest.h"
#include "test_support.hpp"

using namespace orbweyl;
using ts::R;

namespace {

// One even central element, one odd generator squaring into it.
AlgebraPtr odd_line() {
  return LieAlgebra::create("oddline", {"z", "a"}, {0, 1}, {{1, 1, {{0, R(1)}}}});
}

}  // namespace

TEST_CASE("lambda membership flags") {
  AlgebraPtr sh = build_super_heisenberg();

  SuperFunctional xs = classify_lambda(ts::fn(sh, {{0, R(1)}}));
  CHECK(xs.in_lambda);
  CHECK(xs.in_lambda_prime);

  SuperFunctional zs = classify_lambda(ts::fn(sh, {{2, R(1)}}));
  CHECK(zs.in_lambda);
  CHECK(!zs.in_lambda_prime);

  SuperFunctional as = classify_lambda(ts::fn(sh, {{3, R(1)}}));
  CHECK(!as.in_lambda);
  CHECK(!as.in_lambda_prime);

  // Every functional on the odd-bracket-free family lies in Lambda-prime.
  AlgebraPtr g32 = build_glmn_plus(3, 2);
  SuperFunctional gs = classify_lambda(ts::fn(g32, {{2, R(1)}, {3, R(7)}}));
  CHECK(gs.in_lambda);
  CHECK(gs.in_lambda_prime);

  // Ungraded algebras are a degenerate case: both flags hold.
  SuperFunctional us = classify_lambda(ts::fn(build_n_m(3), {{2, R(1)}}));
  CHECK(us.in_lambda);
  CHECK(us.in_lambda_prime);
}

TEST_CASE("even part extraction") {
  AlgebraPtr sh = build_super_heisenberg();
  auto [ev, idx] = even_part(sh);
  CHECK(ev->dim() == 3);
  CHECK(idx == std::vector<std::size_t>{0, 1, 2});
  CHECK(!ev->graded());
  CHECK(ev->bracket_basis(0, 1) == SparseVec{{2, R(1)}});
  CHECK(ev->nilpotency_class() == 2);

  AlgebraPtr g32 = build_glmn_plus(3, 2);
  auto [ev32, idx32] = even_part(g32);
  CHECK(ev32->dim() == 4);
  CHECK(idx32 == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(ev32->bracket_basis(0, 1) == SparseVec{{2, R(1)}});  // [A12,A23] = A13
  CHECK(ev32->bracket_basis(0, 3).empty());                  // D12 commutes evenly

  AlgebraPtr n3 = build_n_m(3);
  auto [same, idn] = even_part(n3);
  CHECK(same.get() == n3.get());
  CHECK(idn == std::vector<std::size_t>{0, 1, 2});

  // An even-even bracket with an odd component cannot be restricted.
  AlgebraPtr bad = LieAlgebra::create("bad", {"x", "y", "a"}, {0, 0, 1},
                                      {{0, 1, {{2, R(1)}}}});
  CHECK_THROWS_AS(even_part(bad), std::invalid_argument);
}

TEST_CASE("functional restriction") {
  AlgebraPtr g32 = build_glmn_plus(3, 2);
  auto [ev, idx] = even_part(g32);
  Functional f = ts::fn(g32, {{2, R(5)}, {3, R(-1, 2)}, {4, R(9)}});
  Functional f0 = restrict_functional(f, ev, idx);
  CHECK(f0.coords() == ts::dense(4, {{2, R(5)}, {3, R(-1, 2)}}));
}

TEST_CASE("graded polarisations") {
  AlgebraPtr sh = build_super_heisenberg();
  Functional xs = ts::fn(sh, {{0, R(1)}});
  Subspace p = graded_polarisation(xs);
  CHECK(p == Subspace::full(sh));

  CHECK_THROWS_AS(graded_polarisation(ts::fn(sh, {{2, R(1)}})), std::invalid_argument);

  AlgebraPtr g32 = build_glmn_plus(3, 2);
  Functional lam = ts::fn(g32, {{2, R(1)}, {3, R(1)}});
  Subspace p32 = graded_polarisation(lam);
  CHECK(p32.dim() == 9);
  for (std::size_t i = 4; i < 10; ++i) CHECK(p32.contains(ts::unit(10, i)));
  // Subordination holds with the graded sign conventions.
  for (std::size_t a = 0; a < p32.dim(); ++a)
    for (std::size_t b = 0; b < p32.dim(); ++b)
      CHECK(lam(g32->bracket(p32.matrix().row(a), p32.matrix().row(b))) == R(0));

  AlgebraPtr g21 = build_glmn_plus(2, 1);
  Subspace p21 = graded_polarisation(ts::fn(g21, {{0, R(1)}}));
  CHECK(p21 == Subspace::full(g21));
}

TEST_CASE("quotient classification") {
  AlgebraPtr sh = build_super_heisenberg();

  QuotientShape zshape = classify_quotient(ts::fn(sh, {{2, R(1)}}));
  CHECK(zshape == QuotientShape{2, 1, false, "bell_musson_heuristic"});
  CHECK(zshape.str() == "M_2(A_1)");

  QuotientShape flat = classify_quotient(Functional::zero(sh));
  CHECK(flat == QuotientShape{1, 0, false, "theorem_11_3"});
  CHECK(flat.str() == "M_1(A_0)");

  AlgebraPtr g32 = build_glmn_plus(3, 2);
  QuotientShape gen = classify_quotient(ts::fn(g32, {{2, R(1)}, {3, R(4)}}));
  CHECK(gen == QuotientShape{1, 1, false, "theorem_11_3"});
  CHECK(gen.str() == "M_1(A_1)");
  // Switching the A13 coordinate off kills the even Gram rank.
  CHECK(classify_quotient(ts::fn(g32, {{3, R(1)}})).n == 0);

  CHECK_THROWS_AS(classify_quotient(ts::fn(sh, {{3, R(1)}})), std::invalid_argument);

  QuotientShape odd1 = classify_quotient(ts::fn(odd_line(), {{0, R(1)}}));
  CHECK(odd1 == QuotientShape{1, 0, true, "bell_musson_heuristic"});
  CHECK(odd1.str() == "M_1(A_0) x M_1(A_0)");

  // Ungraded input degenerates to the unique-module statement.
  QuotientShape ung = classify_quotient(ts::fn(build_n_m(3), {{2, R(1)}}));
  CHECK(ung == QuotientShape{1, 1, false, "theorem_11_3"});
}

TEST_CASE("the s bound table") {
  std::vector<long long> expect{0, 0, 1, 2, 4, 6, 9, 12, 16, 20};
  for (long long i = 1; i <= 10; ++i) CHECK(s_bound(i) == expect[static_cast<std::size_t>(i - 1)]);
  CHECK_THROWS_AS(s_bound(0), std::invalid_argument);
  CHECK_THROWS_AS(s_bound(-3), std::invalid_argument);
  for (long long i = 1; i <= 100; ++i) CHECK_NOTHROW(s_bound(i));
  CHECK(s_bound(100) == 2450);
}

TEST_CASE("weight range audits") {
  AuditRecord rec = weight_range_audit(build_n_m(3), "n_m:3", 200, 42);
  CHECK(rec.bound == 1);
  CHECK(rec.within_bound);
  CHECK(rec.attained == std::vector<std::size_t>{0, 1});
  std::size_t total = 0;
  for (const auto& [w, c] : rec.histogram) total += c;
  CHECK(total == 200);

  AuditRecord g32 = weight_range_audit(build_glmn_plus(3, 2), "glmn:3,2", 100, 7);
  CHECK(g32.bound == 1);
  CHECK(g32.max_weight <= 1);
  CHECK(g32.within_bound);

  AuditRecord sh = weight_range_audit(build_super_heisenberg(), "super_heisenberg", 100, 3);
  CHECK(sh.bound == 1);
  CHECK(sh.within_bound);

  CHECK_THROWS_AS(weight_range_audit(build_n_m(3), "n_m:4", 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(weight_range_audit(build_n_m(3), "mystery", 10, 1), std::invalid_argument);
  CHECK_THROWS_AS(weight_range_audit(build_glmn_plus(3, 2), "glmn:2,3", 10, 1),
                  std::invalid_argument);
}

TEST_CASE("audit table text is frozen") {
  AuditRecord rec = weight_range_audit(build_n_m(5), "n_m:5", 200, 42);
  CHECK(rec.table() ==
        "audit family=n_m:5 seed=42 trials=200\n"
        "weight 2: 1\n"
        "weight 3: 11\n"
        "weight 4: 188\n"
        "bound 4\n"
        "attained 2,3,4\n"
        "max 4\n"
        "verdict within-bound\n");

  AuditRecord empty = weight_range_audit(build_n_m(3), "n_m:3", 0, 9);
  CHECK(empty.histogram.empty());
  CHECK(empty.within_bound);
  CHECK(empty.table().find("attained none") != std::string::npos);
}
