#include "orbweyl/superalgebra.hpp"

#include <numeric>
#include <random>
#include <stdexcept>

namespace orbweyl {

namespace {

Rational apply_sparse(const Functional& f, const SparseVec& sv) {
  Rational out = 0;
  for (const auto& [k, c] : sv) out += f.coords()[static_cast<std::size_t>(k)] * c;
  return out;
}

std::vector<std::size_t> odd_indices(const LieAlgebra& g) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    if (g.parity_of(static_cast<int>(i)) == 1) out.push_back(i);
  return out;
}

}  // namespace

SuperFunctional classify_lambda(const Functional& f) {
  const AlgebraPtr& g = f.ambient();
  SuperFunctional sf{f, true, true};
  if (!g->graded()) return sf;

  auto odd = odd_indices(*g);
  for (std::size_t i : odd)
    if (f.coords()[i] != 0) {
      sf.in_lambda = false;
      break;
    }
  if (!sf.in_lambda) {
    sf.in_lambda_prime = false;
    return sf;
  }
  for (std::size_t a = 0; a < odd.size() && sf.in_lambda_prime; ++a)
    for (std::size_t b = a; b < odd.size(); ++b)
      if (apply_sparse(f, g->bracket_basis(static_cast<int>(odd[a]),
                                           static_cast<int>(odd[b]))) != 0) {
        sf.in_lambda_prime = false;
        break;
      }
  return sf;
}

std::pair<AlgebraPtr, std::vector<std::size_t>> even_part(const AlgebraPtr& g) {
  if (!g->graded()) {
    std::vector<std::size_t> idx(g->dim());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    return {g, idx};
  }
  std::vector<std::size_t> idx;
  std::vector<int> pos(g->dim(), -1);
  for (std::size_t i = 0; i < g->dim(); ++i)
    if (g->parity_of(static_cast<int>(i)) == 0) {
      pos[i] = static_cast<int>(idx.size());
      idx.push_back(i);
    }

  std::vector<std::string> names;
  for (std::size_t i : idx) names.push_back(g->basis_names()[i]);

  std::vector<LieAlgebra::Entry> entries;
  for (const auto& [cell, coeffs] : g->table()) {
    auto [i, j] = cell;
    if (pos[static_cast<std::size_t>(i)] < 0 || pos[static_cast<std::size_t>(j)] < 0) continue;
    SparseVec mapped;
    for (const auto& [k, c] : coeffs) {
      if (pos[static_cast<std::size_t>(k)] < 0)
        throw std::invalid_argument("even part is not closed: grading violation");
      mapped.emplace(pos[static_cast<std::size_t>(k)], c);
    }
    if (!mapped.empty())
      entries.push_back({pos[static_cast<std::size_t>(i)], pos[static_cast<std::size_t>(j)],
                         std::move(mapped)});
  }
  return {LieAlgebra::create(g->name() + "_even", std::move(names),
                             std::vector<int>(idx.size(), 0), std::move(entries)),
          idx};
}

Functional restrict_functional(const Functional& f, const AlgebraPtr& sub,
                               const std::vector<std::size_t>& indices) {
  if (sub->dim() != indices.size())
    throw std::invalid_argument("index list does not match the subalgebra dimension");
  Vec coords;
  coords.reserve(indices.size());
  for (std::size_t i : indices) coords.push_back(f.coords()[i]);
  return Functional(sub, std::move(coords));
}

Subspace graded_polarisation(const Functional& f) {
  const AlgebraPtr& g = f.ambient();
  if (!g->nilpotent()) throw std::invalid_argument("graded polarisation requires a nilpotent algebra");
  SuperFunctional sf = classify_lambda(f);
  if (!sf.in_lambda_prime)
    throw std::invalid_argument("graded polarisation requires a functional in Lambda-prime");

  auto [ev, idx] = even_part(g);
  Functional f0 = restrict_functional(f, ev, idx);
  Subspace p0 = vergne_polarisation(f0);

  Mat rows(0, g->dim());
  for (std::size_t r = 0; r < p0.dim(); ++r) {
    Vec ambient(g->dim(), Rational(0));
    for (std::size_t c = 0; c < idx.size(); ++c) ambient[idx[c]] = p0.matrix().at(r, c);
    rows.append_row(ambient);
  }
  for (std::size_t i : odd_indices(*g)) {
    Vec ambient(g->dim(), Rational(0));
    ambient[i] = 1;
    rows.append_row(ambient);
  }
  Subspace p(g, rows);

  for (std::size_t a = 0; a < p.dim(); ++a)
    for (std::size_t b = a; b < p.dim(); ++b)
      if (f(g->bracket(p.matrix().row(a), p.matrix().row(b))) != 0)
        throw std::logic_error("graded polarisation failed the subordination certificate");
  if (!p.contains(radical(f)))
    throw std::logic_error("graded polarisation failed the radical containment certificate");
  if (2 * p0.dim() != ev->dim() + radical(f0).dim())
    throw std::logic_error("graded polarisation failed the even dimension certificate");
  return p;
}

std::string QuotientShape::str() const {
  std::string block = "M_" + std::to_string(s) + "(A_" + std::to_string(n) + ")";
  return two_block ? block + " x " + block : block;
}

QuotientShape classify_quotient(const Functional& f) {
  const AlgebraPtr& g = f.ambient();
  SuperFunctional sf = classify_lambda(f);
  if (!sf.in_lambda)
    throw std::invalid_argument("classification requires a functional in Lambda");

  auto [ev, idx] = even_part(g);
  Functional f0 = restrict_functional(f, ev, idx);
  std::size_t n = weight(f0);

  if (sf.in_lambda_prime) return {1, n, false, "theorem_11_3"};

  auto odd = odd_indices(*g);
  Mat sym(odd.size(), odd.size());
  for (std::size_t a = 0; a < odd.size(); ++a)
    for (std::size_t b = 0; b < odd.size(); ++b)
      sym.at(a, b) = apply_sparse(f, g->bracket_basis(static_cast<int>(odd[a]),
                                                      static_cast<int>(odd[b])));
  std::size_t d = rank(sym);
  return {1LL << (d / 2), n, d % 2 == 1, "bell_musson_heuristic"};
}

long long s_bound(long long i) {
  if (i < 1) throw std::invalid_argument("s_bound requires i >= 1");
  long long num = i % 2 == 0 ? (i - 2) * i : (i - 1) * (i - 1);
  if (num % 4 != 0) throw std::logic_error("s_bound integrality failed");
  return num / 4;
}

std::string AuditRecord::table() const {
  std::string s = "audit family=" + family + " seed=" + std::to_string(seed) +
                  " trials=" + std::to_string(trials) + "\n";
  for (const auto& [w, count] : histogram)
    s += "weight " + std::to_string(w) + ": " + std::to_string(count) + "\n";
  s += "bound " + std::to_string(bound) + "\n";
  if (attained.empty()) {
    s += "attained none\n";
  } else {
    s += "attained ";
    for (std::size_t i = 0; i < attained.size(); ++i) {
      if (i > 0) s += ",";
      s += std::to_string(attained[i]);
    }
    s += "\n";
  }
  s += "max " + std::to_string(max_weight) + "\n";
  s += std::string("verdict ") + (within_bound ? "within-bound" : "bound-exceeded") + "\n";
  return s;
}

namespace {

long long family_bound(const AlgebraPtr& g, const std::string& family) {
  auto bad = [&] {
    return std::invalid_argument("audit requires a shipped family algebra, got " + family);
  };
  AlgebraPtr built;
  long long bound = 0;
  if (family.rfind("n_m:", 0) == 0) {
    int m = 0;
    try {
      m = std::stoi(family.substr(4));
    } catch (const std::exception&) {
      throw bad();
    }
    built = build_n_m(m);
    bound = s_bound(m);
  } else if (family.rfind("glmn:", 0) == 0) {
    std::string rest = family.substr(5);
    auto comma = rest.find(',');
    if (comma == std::string::npos) throw bad();
    int m = 0, n = 0;
    try {
      m = std::stoi(rest.substr(0, comma));
      n = std::stoi(rest.substr(comma + 1));
    } catch (const std::exception&) {
      throw bad();
    }
    built = build_glmn_plus(m, n);
    bound = s_bound(m) + s_bound(n);
  } else if (family == "super_heisenberg") {
    built = build_super_heisenberg();
    bound = 1;
  } else {
    throw bad();
  }
  if (!g->structurally_equal(*built)) throw bad();
  return bound;
}

}  // namespace

AuditRecord weight_range_audit(const AlgebraPtr& g, const std::string& family,
                               std::size_t trials, std::uint64_t seed) {
  AuditRecord rec;
  rec.family = family;
  rec.seed = seed;
  rec.trials = trials;
  rec.bound = family_bound(g, family);

  auto [ev, idx] = even_part(g);
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    Vec coords(g->dim(), Rational(0));
    for (std::size_t i = 0; i < g->dim(); ++i) {
      if (g->graded() && g->parity_of(static_cast<int>(i)) == 1) continue;
      long long num = static_cast<long long>(rng() % 19) - 9;
      long long den = static_cast<long long>(rng() % 9) + 1;
      coords[i] = make_rational(num, den);
    }
    Functional f0 = restrict_functional(Functional(g, coords), ev, idx);
    ++rec.histogram[weight(f0)];
  }

  rec.max_weight = 0;
  for (const auto& [w, count] : rec.histogram) {
    rec.attained.push_back(w);
    rec.max_weight = std::max(rec.max_weight, w);
  }
  rec.within_bound = rec.histogram.empty() ||
                     static_cast<long long>(rec.max_weight) <= rec.bound;
  return rec;
}

}  // namespace orbweyl
