#include "orbweyl/coadjoint.hpp"

#include <stdexcept>

namespace orbweyl {

namespace {

void require_nilpotent(const LieAlgebra& g, const char* op) {
  if (!g.nilpotent())
    throw std::invalid_argument(std::string(op) + " requires a nilpotent algebra");
}

void require_same_ambient(const Functional& f, const Functional& h, const char* op) {
  if (!f.ambient()->structurally_equal(*h.ambient()))
    throw std::invalid_argument(std::string(op) + " requires functionals on the same algebra");
}

// {v in rows : f(v) = 0} as a canonical row basis.
Mat intersect_with_kernel_of(const Mat& rows, const Functional& f) {
  if (rows.rows() == 0) return rows;
  Mat values(1, rows.rows());
  for (std::size_t i = 0; i < rows.rows(); ++i) values.at(0, i) = f(rows.row(i));
  Mat coeff_kernel = kernel(values);  // combinations of the rows killed by f
  Mat out(0, rows.cols());
  for (std::size_t i = 0; i < coeff_kernel.rows(); ++i) {
    Vec v(rows.cols());
    for (std::size_t r = 0; r < rows.rows(); ++r)
      v = vec_add(v, vec_scale(coeff_kernel.at(i, r), rows.row(r)));
    out.append_row(v);
  }
  return row_space(out);
}

// Conditions "[v, e_j] lies in rowspace(target) for all j", stacked with
// optional "f(v) = 0"; returns the solution subspace as rows.
Mat solve_ad_into(const LieAlgebra& g, const Mat& target, const Functional* also_kill) {
  const std::size_t d = g.dim();
  Mat tests = kernel(target);  // w in rowspace(target) iff tests * w = 0
  Mat conditions(0, d);
  for (std::size_t j = 0; j < d; ++j) {
    Vec ej(d);
    ej[j] = 1;
    // column i of M_j is [e_i, e_j]
    Mat mj(d, d);
    for (std::size_t i = 0; i < d; ++i) {
      Vec ei(d);
      ei[i] = 1;
      Vec br = g.bracket(ei, ej);
      for (std::size_t k = 0; k < d; ++k) mj.at(k, i) = br[k];
    }
    Mat rows = tests * mj;
    for (std::size_t r = 0; r < rows.rows(); ++r) conditions.append_row(rows.row(r));
  }
  if (also_kill) conditions.append_row(also_kill->coords());
  if (conditions.rows() == 0) return Mat::identity(d);
  return kernel(conditions);
}

}  // namespace

Functional::Functional(AlgebraPtr ambient, Vec coords)
    : ambient_(std::move(ambient)), coords_(std::move(coords)) {
  if (!ambient_) throw std::invalid_argument("functional requires an ambient algebra");
  if (coords_.size() != ambient_->dim())
    throw std::invalid_argument("functional coordinate length must equal the dimension");
}

Functional Functional::zero(AlgebraPtr ambient) {
  Vec coords(ambient->dim());
  return Functional(std::move(ambient), std::move(coords));
}

bool Functional::operator==(const Functional& other) const {
  return ambient_->structurally_equal(*other.ambient_) && coords_ == other.coords_;
}

GramMatrix gram_matrix(const Functional& f) {
  const auto& g = *f.ambient();
  require_nilpotent(g, "gram_matrix");
  const std::size_t d = g.dim();
  Mat m(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      Rational acc = 0;
      for (const auto& [k, c] : g.bracket_basis(static_cast<int>(i), static_cast<int>(j)))
        acc += c * f.coords()[static_cast<std::size_t>(k)];
      m.at(i, j) = acc;
    }
  return GramMatrix{std::move(m), f};
}

Subspace radical(const Functional& f) {
  GramMatrix gm = gram_matrix(f);
  Subspace rad(f.ambient(), kernel(gm.entries));
  if (!rad.is_subalgebra())
    throw std::logic_error("radical failed its subalgebra certificate");
  return rad;
}

std::size_t orbit_dim(const Functional& f) {
  GramMatrix gm = gram_matrix(f);
  std::size_t r = rank(gm.entries);
  if (!f.ambient()->graded() && r % 2 != 0)
    throw std::logic_error("orbit dimension came out odd on an ungraded algebra");
  return r;
}

std::size_t weight(const Functional& f) {
  std::size_t r = orbit_dim(f);
  if (r % 2 != 0) throw std::invalid_argument("weight needs an even orbit dimension");
  return r / 2;
}

Mat exp_ad(const LieAlgebra& g, const Vec& x) {
  require_nilpotent(g, "exp_ad");
  const std::size_t d = g.dim();
  Mat adx = g.ad(x);
  Mat acc = Mat::identity(d);
  Mat power = Mat::identity(d);
  for (std::size_t k = 1; k <= d + 1; ++k) {
    power = power * adx;
    if (power.is_zero()) return acc;
    acc = acc + power.scaled(Rational(1) / factorial(static_cast<unsigned>(k)));
  }
  throw std::invalid_argument("exp_ad series did not terminate: ad x is not nilpotent");
}

Functional coadjoint_act(const Vec& x, const Functional& f) {
  const auto& g = *f.ambient();
  Vec minus_x = vec_scale(Rational(-1), x);
  Mat m = exp_ad(g, minus_x);
  // (f o M) has coordinates M^T f.
  Functional out(f.ambient(), mat_vec(m.transpose(), f.coords()));
  return out;
}

Functional orbit_sample(const Functional& f,
                        const std::vector<std::pair<int, Rational>>& params) {
  Functional cur = f;
  for (auto it = params.rbegin(); it != params.rend(); ++it) {
    const auto& [index, t] = *it;
    if (index < 0 || static_cast<std::size_t>(index) >= f.ambient()->dim())
      throw std::invalid_argument("orbit_sample basis index out of range");
    Vec x(f.ambient()->dim());
    x[static_cast<std::size_t>(index)] = t;
    cur = coadjoint_act(x, cur);
  }
  return cur;
}

Subspace scalar_acting(const Functional& f) {
  const auto& g = *f.ambient();
  require_nilpotent(g, "scalar_acting");
  // Zero-acting tower: start from center intersect ker f, then repeatedly
  // take {v : [v, g] inside the tower, f(v) = 0} until stable.
  Mat zero_rows = intersect_with_kernel_of(center(f.ambient()).matrix(), f);
  while (true) {
    Mat next = solve_ad_into(g, zero_rows, &f);
    if (next.rows() == zero_rows.rows()) break;
    zero_rows = next;
  }
  return Subspace(f.ambient(), solve_ad_into(g, zero_rows, nullptr));
}

DarbouxBasis darboux_basis(const Functional& f) {
  const auto& g = *f.ambient();
  require_nilpotent(g, "darboux_basis");
  if (g.graded())
    throw std::invalid_argument("darboux_basis requires an ungraded algebra");

  Subspace scalars = scalar_acting(f);
  auto pairing = [&](const Vec& u, const Vec& v) { return f(g.bracket(u, v)); };

  std::vector<Vec> work;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vec e(g.dim());
    e[i] = 1;
    work.push_back(e);
  }

  DarbouxBasis out;
  while (true) {
    std::size_t pi = work.size(), pj = work.size();
    // Preferred pivots: bracket acts as a scalar on every induced module.
    for (std::size_t i = 0; i < work.size() && pi == work.size(); ++i)
      for (std::size_t j = i + 1; j < work.size(); ++j) {
        if (pairing(work[i], work[j]) == 0) continue;
        if (scalars.contains(g.bracket(work[i], work[j]))) {
          pi = i;
          pj = j;
          break;
        }
      }
    if (pi == work.size()) {
      for (std::size_t i = 0; i < work.size() && pi == work.size(); ++i)
        for (std::size_t j = i + 1; j < work.size(); ++j)
          if (pairing(work[i], work[j]) != 0) {
            pi = i;
            pj = j;
            break;
          }
    }
    if (pi == work.size()) break;

    Vec x = work[pi];
    Vec y = vec_scale(Rational(1) / pairing(work[pi], work[pj]), work[pj]);
    std::vector<Vec> rest;
    for (std::size_t k = 0; k < work.size(); ++k) {
      if (k == pi || k == pj) continue;
      const Vec& w = work[k];
      Vec adjusted = vec_sub(w, vec_scale(pairing(w, y), x));
      adjusted = vec_add(adjusted, vec_scale(pairing(w, x), y));
      rest.push_back(std::move(adjusted));
    }
    out.pairs.emplace_back(std::move(x), std::move(y));
    work = std::move(rest);
  }

  Mat kernel_rows(0, g.dim());
  for (const auto& w : work)
    if (!vec_is_zero(w)) kernel_rows.append_row(w);
  out.kernel_rows = row_space(kernel_rows);

  if (out.kernel_rows != radical(f).matrix())
    throw std::logic_error("darboux kernel does not match the radical");
  if (out.pairs.size() != weight(f))
    throw std::logic_error("darboux pair count does not match the weight");
  for (std::size_t i = 0; i < out.pairs.size(); ++i)
    for (std::size_t j = 0; j < out.pairs.size(); ++j) {
      Rational xy = pairing(out.pairs[i].first, out.pairs[j].second);
      Rational xx = pairing(out.pairs[i].first, out.pairs[j].first);
      Rational yy = pairing(out.pairs[i].second, out.pairs[j].second);
      if (xy != ((i == j) ? 1 : 0) || xx != 0 || yy != 0)
        throw std::logic_error("darboux pairs fail the symplectic relations");
    }
  return out;
}

OrbitReach same_orbit(const Functional& f, const Functional& h) {
  require_same_ambient(f, h, "same_orbit");
  const auto& g = *f.ambient();
  require_nilpotent(g, "same_orbit");
  if (f.coords() == h.coords()) return OrbitReach::confirmed;
  if (orbit_dim(f) != orbit_dim(h)) return OrbitReach::refuted;

  // Central coordinates are constant along an orbit.
  Subspace c = center(f.ambient());
  for (std::size_t i = 0; i < c.matrix().rows(); ++i) {
    Vec v = c.matrix().row(i);
    if (f(v) != h(v)) return OrbitReach::refuted;
  }

  // Greedy triangular reachability: move h toward f one coordinate at a
  // time, accepting only moves that extend the matched prefix.
  const std::size_t d = g.dim();
  auto matched_prefix = [&](const Vec& coords) {
    std::size_t i = 0;
    while (i < d && coords[i] == f.coords()[i]) ++i;
    return i;
  };

  Vec cur = h.coords();
  std::size_t prefix = matched_prefix(cur);
  for (std::size_t pass = 0; pass < d && prefix < d; ++pass) {
    bool moved = false;
    for (std::size_t dir = 0; dir < d && !moved; ++dir) {
      Vec e(d);
      e[dir] = 1;
      // Coordinates of cur o exp(-t ad e) are polynomials in t:
      // sum_k t^k ((-ad e)^T)^k / k! applied to cur.
      Mat step = g.ad(e).scaled(Rational(-1)).transpose();
      std::vector<Vec> layers{cur};
      Vec layer = cur;
      for (std::size_t k = 1; k <= d; ++k) {
        layer = vec_scale(Rational(1) / Rational(Int(k)), mat_vec(step, layer));
        if (vec_is_zero(layer)) break;
        layers.push_back(layer);
      }
      std::size_t target = prefix;  // first mismatching coordinate
      bool linear = layers.size() > 1 && layers[1][target] != 0;
      for (std::size_t k = 2; k < layers.size() && linear; ++k)
        if (layers[k][target] != 0) linear = false;
      if (!linear) continue;
      Rational t = (f.coords()[target] - cur[target]) / layers[1][target];
      Vec candidate(d);
      Rational tk = 1;
      for (std::size_t k = 0; k < layers.size(); ++k) {
        candidate = vec_add(candidate, vec_scale(tk, layers[k]));
        tk *= t;
      }
      std::size_t new_prefix = matched_prefix(candidate);
      if (new_prefix > prefix) {
        cur = candidate;
        prefix = new_prefix;
        moved = true;
      }
    }
    if (!moved) break;
  }
  if (cur == f.coords()) return OrbitReach::confirmed;
  return OrbitReach::inconclusive;
}

}  // namespace orbweyl
