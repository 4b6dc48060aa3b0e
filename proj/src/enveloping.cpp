#include "orbweyl/enveloping.hpp"

#include <map>
#include <stdexcept>

namespace orbweyl {

namespace {

Vec unit_vec(std::size_t dim, std::size_t i) {
  Vec v(dim, Rational(0));
  v[i] = 1;
  return v;
}

Mat inverse(const Mat& a) {
  std::size_t n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse needs a square matrix");
  Mat aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, n + i) = 1;
  }
  auto pivots = rref(aug);
  if (pivots.size() != n || (n > 0 && pivots.back() != n - 1))
    throw std::invalid_argument("matrix is singular");
  Mat out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out.at(i, j) = aug.at(i, n + j);
  return out;
}

// Straightens left multiplication in the induced module. Atoms 0..r-1 are
// the complement variables, atoms r.. are the polarisation rows; every
// module element is a polynomial in the complement variables applied to the
// vacuum vector.
struct ModuleBuilder {
  const LieAlgebra& g;
  const Functional& f;
  Mat prows;
  std::vector<std::size_t> comp;
  Mat decomp;  // coordinates of an ambient vector in the atom basis
  std::map<std::pair<std::size_t, Monomial>, Poly> memo;
  std::size_t steps = 0;

  std::size_t vars() const { return comp.size(); }

  Vec atom_vector(std::size_t a) const {
    if (a < comp.size()) return unit_vec(g.dim(), comp[a]);
    return prows.row(a - comp.size());
  }

  Poly act(std::size_t atom, const Monomial& mono) {
    auto key = std::make_pair(atom, mono);
    auto hit = memo.find(key);
    if (hit != memo.end()) return hit->second;
    if (++steps > 5000000) throw std::logic_error("straightening recursion exceeded bound");

    std::size_t r = vars();
    std::size_t m = 0;
    while (m < r && mono[m] == 0) ++m;

    Poly result(r);
    if (atom < r) {
      if (m == r || m >= atom) {
        Monomial shifted = mono;
        ++shifted[atom];
        result = Poly::monomial(r, shifted);
      } else {
        Monomial sub = mono;
        --sub[m];
        result = act_poly(m, act(atom, sub));
        result += act_vec(g.bracket(atom_vector(atom), atom_vector(m)), sub);
      }
    } else {
      Vec prow = prows.row(atom - r);
      if (m == r) {
        result.add_term(Monomial(r, 0), f(prow));
      } else {
        Monomial sub = mono;
        --sub[m];
        result = act_poly(m, act(atom, sub));
        result += act_vec(g.bracket(prow, unit_vec(g.dim(), comp[m])), sub);
      }
    }
    memo.emplace(std::move(key), result);
    return result;
  }

  Poly act_poly(std::size_t atom, const Poly& q) {
    Poly out(vars());
    for (const auto& [m, c] : q.terms()) out += act(atom, m).scaled(c);
    return out;
  }

  Poly act_vec(const Vec& v, const Monomial& mono) {
    Vec coords = mat_vec(decomp, v);
    Poly out(vars());
    for (std::size_t a = 0; a < coords.size(); ++a)
      if (coords[a] != 0) out += act(a, mono).scaled(coords[a]);
    return out;
  }
};

// The action of any algebra element has derivative order at most the
// nilpotency class, so matching images of monomials up to that degree pins
// the operator down; the extra sweep certifies the bound held.
WeylElement reconstruct(ModuleBuilder& mb, std::size_t atom, std::size_t cls) {
  std::size_t r = mb.vars();
  WeylElement op(r);
  for (std::size_t deg = 0; deg <= cls; ++deg) {
    for (const Monomial& beta : monomials_of_degree(r, deg)) {
      Poly residual = mb.act(atom, beta);
      residual -= op.apply(Poly::monomial(r, beta));
      Rational fact = 1;
      for (auto e : beta) fact *= factorial(e);
      for (const auto& [alpha, c] : residual.terms()) op.add_term(alpha, beta, c / fact);
    }
  }
  for (std::size_t deg = 0; deg <= cls + 2; ++deg)
    for (const Monomial& a : monomials_of_degree(r, deg))
      if (op.apply(Poly::monomial(r, a)) != mb.act(atom, a))
        throw std::logic_error("operator reconstruction failed verification");
  return op;
}

void require_same_ambient(const AlgebraPtr& a, const AlgebraPtr& b, const char* what) {
  if (a != b && !a->structurally_equal(*b))
    throw std::invalid_argument(std::string("ambient algebra mismatch in ") + what);
}

}  // namespace

WeylElement DiffOpRep::rho_of(const Vec& x) const {
  if (x.size() != algebra->dim()) throw std::invalid_argument("vector has wrong dimension");
  WeylElement out(vars());
  for (std::size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) out = out + rho[i].scaled(x[i]);
  return out;
}

DiffOpRep induce(const Functional& f, const Subspace& p) {
  const AlgebraPtr& g = f.ambient();
  require_same_ambient(g, p.ambient(), "induce");
  if (g->graded()) throw std::invalid_argument("induce requires an ungraded algebra");
  if (!g->nilpotent()) throw std::invalid_argument("induce requires a nilpotent algebra");

  Subspace rad = radical(f);
  if (!p.is_subalgebra())
    throw std::invalid_argument("not a polarisation: subalgebra certificate failed");
  if (!is_subordinate(p, f))
    throw std::invalid_argument("not a polarisation: subordination certificate failed");
  if (!p.contains(rad))
    throw std::invalid_argument("not a polarisation: radical containment certificate failed");
  if (2 * p.dim() != g->dim() + rad.dim())
    throw std::invalid_argument("not a polarisation: dimension certificate failed");

  std::size_t d = g->dim();
  std::vector<std::size_t> comp;
  Subspace span = p;
  for (std::size_t idx = 0; idx < d; ++idx) {
    Vec e = unit_vec(d, idx);
    if (!span.contains(e)) {
      comp.push_back(idx);
      span = span.sum(Subspace(g, Mat::from_rows({e}, d)));
    }
  }
  if (comp.size() + p.dim() != d) throw std::logic_error("complement construction failed");

  Mat basis(0, d);
  for (std::size_t idx : comp) basis.append_row(unit_vec(d, idx));
  for (std::size_t i = 0; i < p.dim(); ++i) basis.append_row(p.matrix().row(i));

  ModuleBuilder mb{*g, f, p.matrix(), comp, inverse(basis.transpose()), {}, 0};

  std::size_t cls = static_cast<std::size_t>(g->nilpotency_class());
  std::vector<WeylElement> atom_ops;
  atom_ops.reserve(d);
  for (std::size_t a = 0; a < d; ++a) atom_ops.push_back(reconstruct(mb, a, cls));

  DiffOpRep rep{g, f, p, comp, {}};
  rep.rho.reserve(d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec coords = mat_vec(mb.decomp, unit_vec(d, i));
    WeylElement op(comp.size());
    for (std::size_t a = 0; a < d; ++a)
      if (coords[a] != 0) op = op + atom_ops[a].scaled(coords[a]);
    rep.rho.push_back(std::move(op));
  }

  RepCheck rc = check_rep(rep);
  if (!rc.ok)
    throw std::logic_error("induced representation failed certification at basis pair (" +
                           std::to_string(rc.witness->first) + ", " +
                           std::to_string(rc.witness->second) + ")");
  return rep;
}

Poly apply(const DiffOpRep& rep, const Vec& x, const Poly& q) {
  if (q.vars() != rep.vars()) throw std::invalid_argument("polynomial arity mismatch");
  return rep.rho_of(x).apply(q);
}

RepCheck check_rep(const DiffOpRep& rep) {
  std::size_t d = rep.algebra->dim();
  std::size_t r = rep.vars();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      WeylElement lhs(r);
      for (const auto& [k, c] : rep.algebra->bracket_basis(static_cast<int>(i), static_cast<int>(j)))
        lhs = lhs + rep.rho[static_cast<std::size_t>(k)].scaled(c);
      if (!(lhs == rep.rho[i].commutator(rep.rho[j]))) return {false, {{i, j}}};
    }
  }
  return {true, std::nullopt};
}

std::vector<std::pair<WeylElement, WeylElement>> weyl_generators(const DiffOpRep& rep,
                                                                 const DarbouxBasis& db) {
  std::size_t r = rep.vars();
  if (db.pairs.size() != r)
    throw std::invalid_argument("pair count does not match the module's variable count");
  std::vector<std::pair<WeylElement, WeylElement>> gens;
  gens.reserve(r);
  for (const auto& [x, y] : db.pairs) gens.emplace_back(rep.rho_of(x), rep.rho_of(y));

  WeylElement one = WeylElement::identity(r);
  WeylElement zero(r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (!(gens[i].first.commutator(gens[j].first) == zero))
        throw std::logic_error("weyl relation failed: [X" + std::to_string(i + 1) + ", X" +
                               std::to_string(j + 1) + "] is nonzero");
      if (!(gens[i].second.commutator(gens[j].second) == zero))
        throw std::logic_error("weyl relation failed: [Y" + std::to_string(i + 1) + ", Y" +
                               std::to_string(j + 1) + "] is nonzero");
      WeylElement want = i == j ? one : zero;
      if (!(gens[i].first.commutator(gens[j].second) == want))
        throw std::logic_error("weyl relation failed: [X" + std::to_string(i + 1) + ", Y" +
                               std::to_string(j + 1) + "] is wrong");
    }
  }
  return gens;
}

std::vector<Poly> eigenspace(const DiffOpRep& rep, const Subspace& k, const Functional& f,
                             std::size_t cap) {
  require_same_ambient(rep.algebra, k.ambient(), "eigenspace");
  require_same_ambient(rep.algebra, f.ambient(), "eigenspace");
  for (std::size_t i = 0; i < k.dim(); ++i)
    for (std::size_t j = i + 1; j < k.dim(); ++j)
      if (f(rep.algebra->bracket(k.matrix().row(i), k.matrix().row(j))) != 0)
        throw std::invalid_argument("eigenspace requires f to vanish on [k, k]");

  std::size_t r = rep.vars();
  std::vector<Monomial> basis;
  for (std::size_t deg = 0; deg <= cap; ++deg)
    for (const Monomial& m : monomials_of_degree(r, deg)) basis.push_back(m);
  std::size_t n = basis.size();

  Mat constraints(0, n);
  for (std::size_t row = 0; row < k.dim(); ++row) {
    Vec v = k.matrix().row(row);
    WeylElement op = rep.rho_of(v) - WeylElement::constant(r, f(v));
    std::map<Monomial, Vec> lines;
    for (std::size_t a = 0; a < n; ++a) {
      Poly img = op.apply(Poly::monomial(r, basis[a]));
      for (const auto& [b, c] : img.terms()) {
        auto it = lines.find(b);
        if (it == lines.end()) it = lines.emplace(b, Vec(n, Rational(0))).first;
        it->second[a] = c;
      }
    }
    for (const auto& [b, line] : lines) constraints.append_row(line);
  }

  Mat sols = kernel(constraints);
  std::vector<Poly> out;
  out.reserve(sols.rows());
  for (std::size_t i = 0; i < sols.rows(); ++i) {
    Poly q(r);
    for (std::size_t a = 0; a < n; ++a) q.add_term(basis[a], sols.at(i, a));
    out.push_back(std::move(q));
  }
  return out;
}

}  // namespace orbweyl
