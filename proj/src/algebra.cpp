#include "orbweyl/algebra.hpp"

#include <stdexcept>

namespace orbweyl {

namespace {

void strip_zeros(SparseVec& v) {
  for (auto it = v.begin(); it != v.end();) {
    if (it->second == 0)
      it = v.erase(it);
    else
      ++it;
  }
}

void sparse_axpy(SparseVec& acc, const Rational& c, const SparseVec& v) {
  if (c == 0) return;
  for (const auto& [k, x] : v) {
    Rational& slot = acc[k];
    slot += c * x;
    if (slot == 0) acc.erase(k);
  }
}

// Dimensions of g = g^0 >= g^1 >= ... up to stabilisation, on raw matrices.
std::vector<std::size_t> series_dims_raw(const LieAlgebra& g) {
  const std::size_t d = g.dim();
  std::vector<std::size_t> dims{d};
  Mat cur = Mat::identity(d);
  while (true) {
    Mat next(0, d);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t r = 0; r < cur.rows(); ++r) {
        Vec e(d);
        e[i] = 1;
        Vec br = g.bracket(e, cur.row(r));
        if (!vec_is_zero(br)) next.append_row(br);
      }
    next = row_space(next);
    if (next.rows() == cur.rows()) break;
    dims.push_back(next.rows());
    cur = next;
    if (cur.rows() == 0) break;
  }
  return dims;
}

}  // namespace

AlgebraPtr LieAlgebra::create(std::string name, std::vector<std::string> basis,
                              std::vector<int> parity, std::vector<Entry> table) {
  auto g = std::shared_ptr<LieAlgebra>(new LieAlgebra());
  const int d = static_cast<int>(basis.size());
  if (parity.empty()) parity.assign(basis.size(), 0);
  if (parity.size() != basis.size())
    throw std::invalid_argument("parity vector length must equal the dimension");
  for (int p : parity)
    if (p != 0 && p != 1) throw std::invalid_argument("parity entries must be 0 or 1");

  g->name_ = std::move(name);
  g->names_ = std::move(basis);
  g->parity_ = std::move(parity);
  for (int p : g->parity_)
    if (p == 1) g->graded_ = true;

  for (auto& entry : table) {
    if (entry.i < 0 || entry.j < 0 || entry.i >= d || entry.j >= d)
      throw std::invalid_argument("structure table index out of range");
    if (entry.i > entry.j)
      throw std::invalid_argument("structure table entries must have i <= j");
    strip_zeros(entry.coeffs);
    for (const auto& [k, c] : entry.coeffs)
      if (k < 0 || k >= d) throw std::invalid_argument("structure coefficient index out of range");
    if (entry.coeffs.empty()) continue;
    auto key = std::make_pair(entry.i, entry.j);
    if (g->table_.count(key)) throw std::invalid_argument("duplicate structure table cell");
    g->table_.emplace(key, std::move(entry.coeffs));
  }

  g->series_dims_ = series_dims_raw(*g);
  g->nilpotent_ = !g->series_dims_.empty() && g->series_dims_.back() == 0;
  if (g->nilpotent_) g->nilpotency_class_ = static_cast<int>(g->series_dims_.size()) - 1;
  return g;
}

SparseVec LieAlgebra::bracket_basis(int i, int j) const {
  if (i <= j) {
    auto it = table_.find({i, j});
    return it == table_.end() ? SparseVec{} : it->second;
  }
  auto it = table_.find({j, i});
  if (it == table_.end()) return {};
  SparseVec out = it->second;
  // [e_i, e_j] = -(-1)^{p_i p_j} [e_j, e_i]; the sign is +1 only for odd-odd.
  if (!(parity_of(i) == 1 && parity_of(j) == 1))
    for (auto& [k, c] : out) c = -c;
  return out;
}

Vec LieAlgebra::bracket(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw std::invalid_argument("bracket operand dimension mismatch");
  Vec out(dim());
  for (std::size_t i = 0; i < dim(); ++i) {
    if (u[i] == 0) continue;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (v[j] == 0) continue;
      Rational c = u[i] * v[j];
      for (const auto& [k, x] : bracket_basis(static_cast<int>(i), static_cast<int>(j)))
        out[static_cast<std::size_t>(k)] += c * x;
    }
  }
  return out;
}

Mat LieAlgebra::ad(const Vec& x) const {
  if (x.size() != dim()) throw std::invalid_argument("ad operand dimension mismatch");
  Mat m(dim(), dim());
  for (std::size_t j = 0; j < dim(); ++j) {
    Vec ej(dim());
    ej[j] = 1;
    Vec col = bracket(x, ej);
    for (std::size_t k = 0; k < dim(); ++k) m.at(k, j) = col[k];
  }
  return m;
}

bool LieAlgebra::structurally_equal(const LieAlgebra& other) const {
  return dim() == other.dim() && parity_ == other.parity_ && table_ == other.table_;
}

Subspace::Subspace(AlgebraPtr ambient, const Mat& spanning_rows) : ambient_(std::move(ambient)) {
  if (!ambient_) throw std::invalid_argument("subspace requires an ambient algebra");
  if (spanning_rows.rows() > 0 && spanning_rows.cols() != ambient_->dim())
    throw std::invalid_argument("subspace row length must equal the ambient dimension");
  Mat padded = spanning_rows;
  if (padded.rows() == 0) padded = Mat(0, ambient_->dim());
  rows_ = row_space(padded);

  is_subalgebra_ = true;
  for (std::size_t i = 0; i < rows_.rows() && is_subalgebra_; ++i)
    for (std::size_t j = 0; j < rows_.rows() && is_subalgebra_; ++j) {
      Vec br = ambient_->bracket(rows_.row(i), rows_.row(j));
      if (!in_row_space(rows_, br)) is_subalgebra_ = false;
    }
}

Subspace Subspace::zero(AlgebraPtr ambient) {
  std::size_t d = ambient->dim();
  return Subspace(std::move(ambient), Mat(0, d));
}

Subspace Subspace::full(AlgebraPtr ambient) {
  std::size_t d = ambient->dim();
  return Subspace(std::move(ambient), Mat::identity(d));
}

bool Subspace::contains(const Vec& v) const { return in_row_space(rows_, v); }

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t i = 0; i < other.rows_.rows(); ++i)
    if (!contains(other.rows_.row(i))) return false;
  return true;
}

Subspace Subspace::sum(const Subspace& other) const {
  if (!ambient_->structurally_equal(*other.ambient_))
    throw std::invalid_argument("subspace sum requires a common ambient algebra");
  Mat stacked = rows_;
  for (std::size_t i = 0; i < other.rows_.rows(); ++i) stacked.append_row(other.rows_.row(i));
  return Subspace(ambient_, stacked);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (!ambient_->structurally_equal(*other.ambient_))
    throw std::invalid_argument("subspace intersection requires a common ambient algebra");
  // rowspace(R) = {v : kernel(R) v = 0}, so intersect by stacking kernels.
  Mat ka = kernel(rows_);
  Mat kb = kernel(other.rows_);
  Mat stacked = ka;
  for (std::size_t i = 0; i < kb.rows(); ++i) stacked.append_row(kb.row(i));
  return Subspace(ambient_, kernel(stacked));
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_->structurally_equal(*other.ambient_) && rows_ == other.rows_;
}

ValidationReport validate(const LieAlgebra& g) {
  ValidationReport report;
  const int d = static_cast<int>(g.dim());
  constexpr std::size_t kMaxViolations = 64;
  auto record = [&](const char* axiom, int i, int j, int k) {
    if (report.violations.size() < kMaxViolations)
      report.violations.push_back({axiom, {i, j, k}});
  };

  // Antisymmetry: [e_i, e_i] = 0 unless e_i is odd (stored cells already
  // carry the graded completion for i != j).
  for (const auto& [key, coeffs] : g.table()) {
    auto [i, j] = key;
    if (i == j && g.parity_of(i) == 0 && !coeffs.empty()) record("antisymmetry", i, i, -1);
  }

  // Grading: c^k_{ij} = 0 unless parity(k) = parity(i) + parity(j).
  for (const auto& [key, coeffs] : g.table()) {
    auto [i, j] = key;
    int want = (g.parity_of(i) + g.parity_of(j)) % 2;
    for (const auto& [k, c] : coeffs) {
      (void)c;
      if (g.parity_of(k) != want) {
        record("grading", i, j, k);
        break;
      }
    }
  }

  // Graded Jacobi on basis triples:
  // [e_i,[e_j,e_k]] = [[e_i,e_j],e_k] + (-1)^{p_i p_j} [e_j,[e_i,e_k]].
  auto sparse_bracket_left = [&](const SparseVec& v, int k) {
    SparseVec out;
    for (const auto& [m, c] : v) sparse_axpy(out, c, g.bracket_basis(m, k));
    return out;
  };
  auto sparse_bracket_right = [&](int i, const SparseVec& v) {
    SparseVec out;
    for (const auto& [m, c] : v) sparse_axpy(out, c, g.bracket_basis(i, m));
    return out;
  };
  // Given graded antisymmetry, the identity is permutation-covariant, so
  // sorted triples (repeats included, for odd elements) cover all cases and
  // each failure gets a single canonical witness.
  for (int i = 0; i < d; ++i)
    for (int j = i; j < d; ++j)
      for (int k = j; k < d; ++k) {
        SparseVec lhs = sparse_bracket_right(i, g.bracket_basis(j, k));
        SparseVec rhs = sparse_bracket_left(g.bracket_basis(i, j), k);
        Rational sign = (g.parity_of(i) == 1 && g.parity_of(j) == 1) ? -1 : 1;
        sparse_axpy(rhs, sign, sparse_bracket_right(j, g.bracket_basis(i, k)));
        sparse_axpy(lhs, -1, rhs);
        if (!lhs.empty()) record("jacobi", i, j, k);
      }

  report.nilpotent = g.nilpotent();
  report.nilpotency_class = g.nilpotency_class();
  return report;
}

std::vector<Subspace> lower_central_series(const AlgebraPtr& g) {
  std::vector<Subspace> terms;
  Subspace full = Subspace::full(g);
  terms.push_back(full);
  Subspace cur = full;
  while (true) {
    Subspace next = bracket_span(full, cur);
    if (next.dim() == cur.dim()) break;
    terms.push_back(next);
    cur = next;
    if (cur.dim() == 0) break;
  }
  return terms;
}

Subspace bracket_span(const Subspace& a, const Subspace& b) {
  if (!a.ambient()->structurally_equal(*b.ambient()))
    throw std::invalid_argument("bracket span requires a common ambient algebra");
  const auto& g = *a.ambient();
  Mat rows(0, g.dim());
  for (std::size_t i = 0; i < a.matrix().rows(); ++i)
    for (std::size_t j = 0; j < b.matrix().rows(); ++j) {
      Vec br = g.bracket(a.matrix().row(i), b.matrix().row(j));
      if (!vec_is_zero(br)) rows.append_row(br);
    }
  return Subspace(a.ambient(), rows);
}

Subspace center(const AlgebraPtr& g) {
  const std::size_t d = g->dim();
  // x central iff [x, e_j] = 0 for all j; stack those linear conditions.
  Mat conditions(d * d, d);
  for (std::size_t i = 0; i < d; ++i) {
    Vec ei(d);
    ei[i] = 1;
    for (std::size_t j = 0; j < d; ++j) {
      Vec ej(d);
      ej[j] = 1;
      Vec br = g->bracket(ei, ej);
      for (std::size_t k = 0; k < d; ++k) conditions.at(j * d + k, i) = br[k];
    }
  }
  return Subspace(g, kernel(conditions));
}

AlgebraPtr build_n_m(int m) {
  if (m < 2) throw std::invalid_argument("n_m requires m >= 2");
  // Strictly upper triangular m x m matrices; basis E_{ij} ordered by
  // superdiagonal (j - i) first, then i.
  std::vector<std::pair<int, int>> units;
  for (int off = 1; off < m; ++off)
    for (int i = 1; i + off <= m; ++i) units.emplace_back(i, i + off);

  auto unit_name = [m](int i, int j) {
    if (m <= 9) return "E" + std::to_string(i) + std::to_string(j);
    return "E" + std::to_string(i) + "_" + std::to_string(j);
  };
  auto index_of = [&units](int i, int j) {
    for (std::size_t idx = 0; idx < units.size(); ++idx)
      if (units[idx] == std::make_pair(i, j)) return static_cast<int>(idx);
    return -1;
  };

  std::vector<std::string> names;
  for (auto [i, j] : units) names.push_back(unit_name(i, j));

  std::vector<LieAlgebra::Entry> table;
  for (std::size_t p = 0; p < units.size(); ++p)
    for (std::size_t q = p + 1; q < units.size(); ++q) {
      auto [i, j] = units[p];
      auto [k, l] = units[q];
      SparseVec coeffs;
      // [E_ij, E_kl] = d_{jk} E_il - d_{li} E_kj
      if (j == k) coeffs[index_of(i, l)] += 1;
      if (l == i) coeffs[index_of(k, j)] -= 1;
      strip_zeros(coeffs);
      if (!coeffs.empty())
        table.push_back({static_cast<int>(p), static_cast<int>(q), std::move(coeffs)});
    }

  return LieAlgebra::create("n_" + std::to_string(m), std::move(names), {}, std::move(table));
}

AlgebraPtr build_glmn_plus(int m, int n) {
  if (m < 1 || n < 1) throw std::invalid_argument("glmn requires m >= 1 and n >= 1");
  if (m == n) throw std::invalid_argument("glmn requires m != n");

  struct Unit {
    char block;  // 'A' (even, m x m), 'D' (even, n x n), 'B' (odd, m x n)
    int i, j;
  };
  std::vector<Unit> units;
  for (int off = 1; off < m; ++off)
    for (int i = 1; i + off <= m; ++i) units.push_back({'A', i, i + off});
  for (int off = 1; off < n; ++off)
    for (int i = 1; i + off <= n; ++i) units.push_back({'D', i, i + off});
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) units.push_back({'B', i, j});

  auto index_of = [&units](char block, int i, int j) {
    for (std::size_t idx = 0; idx < units.size(); ++idx)
      if (units[idx].block == block && units[idx].i == i && units[idx].j == j)
        return static_cast<int>(idx);
    return -1;
  };

  std::vector<std::string> names;
  std::vector<int> parity;
  for (const auto& u : units) {
    names.push_back(std::string(1, u.block) + std::to_string(u.i) + std::to_string(u.j));
    parity.push_back(u.block == 'B' ? 1 : 0);
  }

  std::vector<LieAlgebra::Entry> table;
  for (std::size_t p = 0; p < units.size(); ++p)
    for (std::size_t q = p + 1; q < units.size(); ++q) {
      const Unit& u = units[p];
      const Unit& v = units[q];
      SparseVec coeffs;
      if (u.block == v.block && u.block != 'B') {
        if (u.j == v.i) coeffs[index_of(u.block, u.i, v.j)] += 1;
        if (v.j == u.i) coeffs[index_of(u.block, v.i, u.j)] -= 1;
      } else if (u.block == 'A' && v.block == 'B') {
        if (u.j == v.i) coeffs[index_of('B', u.i, v.j)] += 1;
      } else if (u.block == 'D' && v.block == 'B') {
        if (v.j == u.i) coeffs[index_of('B', v.i, u.j)] -= 1;
      }
      // A-D pairs and odd-odd pairs vanish: the lower-left block is zero.
      strip_zeros(coeffs);
      if (!coeffs.empty())
        table.push_back({static_cast<int>(p), static_cast<int>(q), std::move(coeffs)});
    }

  return LieAlgebra::create("gl(" + std::to_string(m) + "," + std::to_string(n) + ")+",
                            std::move(names), std::move(parity), std::move(table));
}

AlgebraPtr build_super_heisenberg() {
  std::vector<std::string> names{"x", "y", "z", "a", "b"};
  std::vector<int> parity{0, 0, 0, 1, 1};
  std::vector<LieAlgebra::Entry> table;
  table.push_back({0, 1, {{2, Rational(1)}}});  // [x, y] = z
  table.push_back({3, 4, {{2, Rational(1)}}});  // [a, b] = z = [b, a]
  return LieAlgebra::create("super_heisenberg", std::move(names), std::move(parity),
                            std::move(table));
}

}  // namespace orbweyl
