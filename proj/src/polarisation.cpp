#include "orbweyl/polarisation.hpp"

#include <stdexcept>

namespace orbweyl {

namespace {

void require_ambient_match(const Subspace& k, const Functional& f, const char* op) {
  if (!k.ambient()->structurally_equal(*f.ambient()))
    throw std::invalid_argument(std::string(op) +
                                " requires the subspace and functional to share an algebra");
}

bool vanishes_on_brackets(const Subspace& k, const Functional& f) {
  const auto& g = *f.ambient();
  const Mat& rows = k.matrix();
  for (std::size_t i = 0; i < rows.rows(); ++i)
    for (std::size_t j = i; j < rows.rows(); ++j)
      if (f(g.bracket(rows.row(i), rows.row(j))) != 0) return false;
  return true;
}

// rad(f restricted to V) = {x in V : f([x, V]) = 0}, rows in ambient coords.
Mat restricted_radical(const Functional& f, const Mat& v_rows) {
  const auto& g = *f.ambient();
  const std::size_t k = v_rows.rows();
  Mat gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      gram.at(i, j) = f(g.bracket(v_rows.row(i), v_rows.row(j)));
  Mat coeff = kernel(gram);
  Mat out(0, g.dim());
  for (std::size_t r = 0; r < coeff.rows(); ++r) {
    Vec x(g.dim());
    for (std::size_t i = 0; i < k; ++i) x = vec_add(x, vec_scale(coeff.at(r, i), v_rows.row(i)));
    out.append_row(x);
  }
  return row_space(out);
}

bool is_ideal(const Subspace& s) {
  const auto& g = *s.ambient();
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Vec e(g.dim());
    e[i] = 1;
    for (std::size_t r = 0; r < s.matrix().rows(); ++r)
      if (!s.contains(g.bracket(e, s.matrix().row(r)))) return false;
  }
  return true;
}

}  // namespace

bool is_subordinate(const Subspace& k, const Functional& f) {
  require_ambient_match(k, f, "is_subordinate");
  if (!k.is_subalgebra())
    throw std::invalid_argument("is_subordinate requires a subalgebra");
  return vanishes_on_brackets(k, f);
}

std::vector<Subspace> default_ideal_flag(const AlgebraPtr& g) {
  if (!g->nilpotent())
    throw std::invalid_argument("ideal flag construction requires a nilpotent algebra");
  std::vector<Subspace> series = lower_central_series(g);  // g^0 > g^1 > ... > 0
  std::vector<Subspace> flag;
  flag.push_back(Subspace::zero(g));
  // Walk the series from the deep end up; any subspace wedged between two
  // successive terms is an ideal because [g, g^i] = g^{i+1}.
  for (auto it = series.rbegin(); it != series.rend(); ++it) {
    const Subspace& term = *it;
    Subspace cur = flag.back();
    for (std::size_t r = 0; r < term.matrix().rows(); ++r) {
      Vec row = term.matrix().row(r);
      if (cur.contains(row)) continue;
      Mat rows = cur.matrix();
      rows.append_row(row);
      cur = Subspace(g, rows);
      flag.push_back(cur);
    }
  }
  return flag;
}

Subspace vergne_polarisation(const Functional& f, const std::vector<Subspace>* flag) {
  const AlgebraPtr& g = f.ambient();
  if (!g->nilpotent())
    throw std::invalid_argument("vergne_polarisation requires a nilpotent algebra");

  std::vector<Subspace> local;
  if (flag == nullptr) {
    local = default_ideal_flag(g);
    flag = &local;
  } else {
    if (flag->size() != g->dim() + 1)
      throw std::invalid_argument("flag must have dim(g)+1 terms");
    for (std::size_t i = 0; i < flag->size(); ++i) {
      const Subspace& s = (*flag)[i];
      if (!s.ambient()->structurally_equal(*g))
        throw std::invalid_argument("flag terms must live in the functional's algebra");
      if (s.dim() != i) throw std::invalid_argument("flag dimensions must step by one");
      if (i > 0 && !s.contains((*flag)[i - 1]))
        throw std::invalid_argument("flag terms must be nested");
      if (!is_ideal(s)) throw std::invalid_argument("flag terms must be ideals");
    }
  }

  Mat rows(0, g->dim());
  for (const Subspace& v : *flag) {
    Mat rad = restricted_radical(f, v.matrix());
    for (std::size_t r = 0; r < rad.rows(); ++r) rows.append_row(rad.row(r));
  }
  Subspace p(g, rows);

  if (!is_polarisation(p, f))
    throw std::logic_error("vergne construction failed its polarisation certificate");
  return p;
}

bool is_polarisation(const Subspace& p, const Functional& f) {
  require_ambient_match(p, f, "is_polarisation");
  if (!p.is_subalgebra()) return false;
  if (!vanishes_on_brackets(p, f)) return false;
  Subspace rad = radical(f);
  if (!p.contains(rad)) return false;
  return 2 * p.dim() == p.ambient()->dim() + rad.dim();
}

AffineSlice affine_slice(const Functional& f, const Subspace& k) {
  require_ambient_match(k, f, "affine_slice");
  if (!k.is_subalgebra())
    throw std::invalid_argument("affine_slice requires a subalgebra");
  if (!vanishes_on_brackets(k, f))
    throw std::invalid_argument("affine_slice requires f to vanish on [k, k]");
  return AffineSlice{f, k, f.ambient()->dim() - k.dim(), true};
}

const char* slice_status_name(SliceStatus s) {
  switch (s) {
    case SliceStatus::lagrangian_unique_module:
      return "lagrangian_unique_module";
    case SliceStatus::empty:
      return "empty";
    case SliceStatus::not_lagrangian:
      return "not_lagrangian";
    case SliceStatus::inconclusive:
      return "inconclusive";
  }
  return "?";
}

SliceVerdict slice_verdict(const Functional& f, const Subspace& k,
                           const Functional& orbit_of) {
  require_ambient_match(k, f, "slice_verdict");
  if (!f.ambient()->structurally_equal(*orbit_of.ambient()))
    throw std::invalid_argument("slice_verdict requires functionals on the same algebra");
  AffineSlice slice = affine_slice(f, k);  // validates the preconditions on k

  // Emptiness first: central coordinates are orbit invariants, so the slice
  // misses the orbit whenever f and orbit_of disagree on k intersect center.
  Subspace pinned = k.intersect(center(f.ambient()));
  for (std::size_t i = 0; i < pinned.matrix().rows(); ++i) {
    Vec v = pinned.matrix().row(i);
    if (f(v) != orbit_of(v))
      return {SliceStatus::empty,
              "f and the orbit base point disagree on k intersect center", 0};
  }

  bool polar = is_polarisation(k, f);
  OrbitReach reach = same_orbit(f, orbit_of);
  if (polar && reach == OrbitReach::refuted)
    return {SliceStatus::empty,
            "k polarises f but the base point lies on a different orbit", 0};
  if (polar && reach == OrbitReach::confirmed)
    return {SliceStatus::lagrangian_unique_module,
            "k polarises f and the slice sits inside the orbit", 1};

  std::size_t odim = orbit_dim(orbit_of);
  if (k.dim() == 0 || 2 * slice.dim > odim)
    return {SliceStatus::not_lagrangian,
            "slice dimension exceeds half the orbit dimension", std::nullopt};

  return {SliceStatus::inconclusive,
          "slice dim " + std::to_string(slice.dim) + ", orbit dim " + std::to_string(odim),
          std::nullopt};
}

}  // namespace orbweyl
