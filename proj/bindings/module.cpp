// Python bindings for the main operations: builders, orbit data,
// polarisations, induced modules, and the graded classification.

#include "orbweyl/enveloping.hpp"
#include "orbweyl/json_io.hpp"
#include "orbweyl/superalgebra.hpp"

#include <nlohmann/json.hpp>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

namespace py = pybind11;
using namespace orbweyl;

namespace pybind11 {
namespace detail {

// Exact rationals cross the boundary as fractions.Fraction (ints and "p/q"
// strings are accepted on the way in; floats are rejected).
template <>
struct type_caster<Rational> {
  PYBIND11_TYPE_CASTER(Rational, const_name("Fraction"));

  bool load(handle src, bool) {
    if (src.is_none() || PyFloat_Check(src.ptr())) return false;
    std::string text = py::str(src);
    try {
      value = parse_rational(text);
    } catch (const std::exception&) {
      return false;
    }
    return true;
  }

  static handle cast(const Rational& r, return_value_policy, handle) {
    object fraction = module_::import("fractions").attr("Fraction");
    return fraction(rational_str(r)).release();
  }
};

}  // namespace detail
}  // namespace pybind11

namespace {

struct Algebra {
  AlgebraPtr ptr;
};

Vec coords_of(const Algebra& a, const py::object& obj) {
  const std::size_t dim = a.ptr->dim();
  Vec v(dim, Rational(0));
  if (py::isinstance<py::dict>(obj)) {
    for (auto item : obj.cast<py::dict>()) {
      auto i = item.first.cast<long long>();
      if (i < 0 || static_cast<std::size_t>(i) >= dim)
        throw std::invalid_argument("coordinate index out of range");
      v[static_cast<std::size_t>(i)] = item.second.cast<Rational>();
    }
    return v;
  }
  auto seq = obj.cast<std::vector<Rational>>();
  if (seq.size() != dim)
    throw std::invalid_argument("coordinate list length must equal the dimension");
  return Vec(seq.begin(), seq.end());
}

Functional functional_of(const Algebra& a, const py::object& obj) {
  return Functional(a.ptr, coords_of(a, obj));
}

Subspace subspace_of(const Algebra& a, const py::object& rows) {
  Mat m(0, a.ptr->dim());
  for (auto row : rows.cast<py::iterable>())
    m.append_row(coords_of(a, py::reinterpret_borrow<py::object>(row)));
  return Subspace(a.ptr, m);
}

std::vector<Vec> rows_of(const Mat& m) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
  return rows;
}

Subspace polarisation_or_default(const Algebra& a, const Functional& f,
                                 const py::object& p_rows) {
  if (p_rows.is_none()) return vergne_polarisation(f);
  return subspace_of(a, p_rows);
}

py::dict shape_dict(const QuotientShape& shape) {
  py::dict d;
  d["s"] = shape.s;
  d["n"] = shape.n;
  d["two_block"] = shape.two_block;
  d["provenance"] = shape.provenance;
  d["text"] = shape.str();
  return d;
}

py::dict rep_dict(const DiffOpRep& rep) {
  py::dict d;
  d["vars"] = rep.vars();
  d["complement"] = rep.complement;
  std::vector<std::string> ops;
  for (const WeylElement& w : rep.rho) ops.push_back(w.str());
  d["rho"] = ops;
  d["polarisation"] = rows_of(rep.polarisation.matrix());
  return d;
}

const char* reach_name(OrbitReach r) {
  switch (r) {
    case OrbitReach::confirmed:
      return "confirmed";
    case OrbitReach::refuted:
      return "refuted";
    case OrbitReach::inconclusive:
      return "inconclusive";
  }
  return "?";
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "exact nilpotent orbit and induced-module computations";

  py::class_<Algebra>(m, "Algebra")
      .def_property_readonly("name", [](const Algebra& a) { return a.ptr->name(); })
      .def_property_readonly("dim", [](const Algebra& a) { return a.ptr->dim(); })
      .def_property_readonly("basis", [](const Algebra& a) { return a.ptr->basis_names(); })
      .def_property_readonly("parity", [](const Algebra& a) { return a.ptr->parity(); })
      .def_property_readonly("graded", [](const Algebra& a) { return a.ptr->graded(); })
      .def_property_readonly("nilpotent", [](const Algebra& a) { return a.ptr->nilpotent(); })
      .def_property_readonly("nilpotency_class",
                             [](const Algebra& a) { return a.ptr->nilpotency_class(); })
      .def_property_readonly("series_dims",
                             [](const Algebra& a) { return a.ptr->series_dims(); })
      .def("bracket",
           [](const Algebra& a, int i, int j) { return a.ptr->bracket_basis(i, j); },
           py::arg("i"), py::arg("j"))
      .def("validate",
           [](const Algebra& a) {
             ValidationReport rep = validate(*a.ptr);
             py::dict d;
             d["ok"] = rep.ok();
             d["nilpotent"] = rep.nilpotent;
             d["nilpotency_class"] = rep.nilpotency_class;
             py::list violations;
             for (const Violation& v : rep.violations) {
               py::dict vd;
               vd["axiom"] = v.axiom;
               vd["triple"] = v.triple;
               violations.append(vd);
             }
             d["violations"] = violations;
             return d;
           })
      .def("center",
           [](const Algebra& a) { return rows_of(center(a.ptr).matrix()); })
      .def("to_json", [](const Algebra& a) { return algebra_to_json(*a.ptr).dump(); })
      .def("__repr__", [](const Algebra& a) {
        return "<Algebra " + a.ptr->name() + " dim=" + std::to_string(a.ptr->dim()) + ">";
      });

  m.def("build_n", [](int m_) { return Algebra{build_n_m(m_)}; }, py::arg("m"));
  m.def("build_gl_plus",
        [](int m_, int n_) { return Algebra{build_glmn_plus(m_, n_)}; }, py::arg("m"),
        py::arg("n"));
  m.def("build_super_heisenberg", [] { return Algebra{build_super_heisenberg()}; });
  m.def("algebra_from_json", [](const std::string& text) {
    return Algebra{algebra_from_json(nlohmann::json::parse(text))};
  });

  m.def("orbit_dim",
        [](const Algebra& a, const py::object& f) { return orbit_dim(functional_of(a, f)); });
  m.def("weight",
        [](const Algebra& a, const py::object& f) { return weight(functional_of(a, f)); });
  m.def("radical_rows", [](const Algebra& a, const py::object& f) {
    return rows_of(radical(functional_of(a, f)).matrix());
  });
  m.def("gram", [](const Algebra& a, const py::object& f) {
    return rows_of(gram_matrix(functional_of(a, f)).entries);
  });
  m.def("coadjoint_act", [](const Algebra& a, const py::object& x, const py::object& f) {
    return coadjoint_act(coords_of(a, x), functional_of(a, f)).coords();
  });
  m.def("orbit_sample",
        [](const Algebra& a, const py::object& f,
           const std::vector<std::pair<int, Rational>>& params) {
          return orbit_sample(functional_of(a, f), params).coords();
        });
  m.def("same_orbit", [](const Algebra& a, const py::object& f, const py::object& h) {
    return std::string(reach_name(same_orbit(functional_of(a, f), functional_of(a, h))));
  });
  m.def("darboux", [](const Algebra& a, const py::object& f) {
    DarbouxBasis db = darboux_basis(functional_of(a, f));
    py::dict d;
    d["pairs"] = db.pairs;
    d["kernel"] = rows_of(db.kernel_rows);
    return d;
  });
  m.def("scalar_acting_rows", [](const Algebra& a, const py::object& f) {
    return rows_of(scalar_acting(functional_of(a, f)).matrix());
  });

  m.def("vergne_rows", [](const Algebra& a, const py::object& f) {
    return rows_of(vergne_polarisation(functional_of(a, f)).matrix());
  });
  m.def("is_polarisation", [](const Algebra& a, const py::object& rows, const py::object& f) {
    return is_polarisation(subspace_of(a, rows), functional_of(a, f));
  });
  m.def("slice_verdict",
        [](const Algebra& a, const py::object& f, const py::object& k_rows,
           const py::object& orbit_of) {
          SliceVerdict v =
              slice_verdict(functional_of(a, f), subspace_of(a, k_rows),
                            functional_of(a, orbit_of));
          py::dict d;
          d["status"] = slice_status_name(v.status);
          d["detail"] = v.detail;
          d["module_count"] = v.module_count ? py::cast(*v.module_count) : py::none();
          return d;
        });

  m.def(
      "induce",
      [](const Algebra& a, const py::object& f, const py::object& p_rows) {
        Functional fn = functional_of(a, f);
        return rep_dict(induce(fn, polarisation_or_default(a, fn, p_rows)));
      },
      py::arg("algebra"), py::arg("f"), py::arg("p_rows") = py::none());
  m.def(
      "act",
      [](const Algebra& a, const py::object& f, const py::object& x,
         const py::object& p_rows) {
        Functional fn = functional_of(a, f);
        DiffOpRep rep = induce(fn, polarisation_or_default(a, fn, p_rows));
        return rep.rho_of(coords_of(a, x)).str();
      },
      py::arg("algebra"), py::arg("f"), py::arg("x"), py::arg("p_rows") = py::none());
  m.def(
      "eigenspace",
      [](const Algebra& a, const py::object& f, const py::object& k_rows, std::size_t cap,
         const py::object& p_rows) {
        Functional fn = functional_of(a, f);
        DiffOpRep rep = induce(fn, polarisation_or_default(a, fn, p_rows));
        Subspace k = k_rows.is_none() ? rep.polarisation : subspace_of(a, k_rows);
        std::vector<std::string> out;
        for (const Poly& q : eigenspace(rep, k, fn, cap)) out.push_back(q.str());
        return out;
      },
      py::arg("algebra"), py::arg("f"), py::arg("k_rows") = py::none(), py::arg("cap") = 8,
      py::arg("p_rows") = py::none());
  m.def(
      "weyl_pairs",
      [](const Algebra& a, const py::object& f, const py::object& p_rows) {
        Functional fn = functional_of(a, f);
        DiffOpRep rep = induce(fn, polarisation_or_default(a, fn, p_rows));
        std::vector<std::pair<std::string, std::string>> out;
        for (const auto& [x, y] : weyl_generators(rep, darboux_basis(fn)))
          out.emplace_back(x.str(), y.str());
        return out;
      },
      py::arg("algebra"), py::arg("f"), py::arg("p_rows") = py::none());

  m.def("classify_lambda", [](const Algebra& a, const py::object& f) {
    SuperFunctional sf = classify_lambda(functional_of(a, f));
    return std::make_pair(sf.in_lambda, sf.in_lambda_prime);
  });
  m.def("classify_quotient", [](const Algebra& a, const py::object& f) {
    return shape_dict(classify_quotient(functional_of(a, f)));
  });
  m.def("graded_polarisation_rows", [](const Algebra& a, const py::object& f) {
    return rows_of(graded_polarisation(functional_of(a, f)).matrix());
  });

  m.def("s_bound", &s_bound, py::arg("i"));
  m.def("s_table", [](long long max) {
    std::vector<long long> out;
    for (long long i = 1; i <= max; ++i) out.push_back(s_bound(i));
    return out;
  });
  m.def(
      "weight_range_audit",
      [](const Algebra& a, const std::string& family, std::size_t trials,
         std::uint64_t seed) {
        AuditRecord rec = weight_range_audit(a.ptr, family, trials, seed);
        py::dict d;
        d["family"] = rec.family;
        d["seed"] = rec.seed;
        d["trials"] = rec.trials;
        d["bound"] = rec.bound;
        d["histogram"] = rec.histogram;
        d["attained"] = rec.attained;
        d["max_weight"] = rec.max_weight;
        d["within_bound"] = rec.within_bound;
        d["table"] = rec.table();
        return d;
      },
      py::arg("algebra"), py::arg("family"), py::arg("trials") = 200, py::arg("seed") = 42);
}
