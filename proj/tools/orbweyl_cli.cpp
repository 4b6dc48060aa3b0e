// Command-line front end: loads an algebra (builtin family or JSON file),
// runs one operation, and prints a deterministic text or JSON report.

#include "orbweyl/algebra.hpp"
#include "orbweyl/coadjoint.hpp"
#include "orbweyl/enveloping.hpp"
#include "orbweyl/json_io.hpp"
#include "orbweyl/polarisation.hpp"
#include "orbweyl/superalgebra.hpp"
#include "orbweyl/weyl.hpp"

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

using nlohmann::json;
using namespace orbweyl;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json_arg(const std::string& text) {
  std::size_t i = text.find_first_not_of(" \t\r\n");
  if (i != std::string::npos && (text[i] == '{' || text[i] == '[')) return json::parse(text);
  return json::parse(read_file(text));
}

AlgebraPtr builtin_algebra(const std::string& token) {
  if (token.rfind("n_m:", 0) == 0) return build_n_m(std::stoi(token.substr(4)));
  if (token.rfind("glmn:", 0) == 0) {
    std::string rest = token.substr(5);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("glmn builtin needs the form glmn:<m>,<n>");
    return build_glmn_plus(std::stoi(rest.substr(0, comma)), std::stoi(rest.substr(comma + 1)));
  }
  if (token == "super_heisenberg") return build_super_heisenberg();
  throw std::invalid_argument("unknown builtin: " + token +
                              " (expected n_m:<m>, glmn:<m>,<n>, or super_heisenberg)");
}

AlgebraPtr load_algebra(const std::string& builtin, const std::string& input, bool check_axioms) {
  AlgebraPtr g;
  if (!builtin.empty())
    g = builtin_algebra(builtin);
  else
    g = algebra_from_json(parse_json_arg(input));
  if (check_axioms && input.size()) {
    ValidationReport rep = validate(*g);
    if (!rep.ok()) {
      const Violation& v = rep.violations.front();
      std::string where = "(" + std::to_string(v.triple[0]) + ", " + std::to_string(v.triple[1]);
      if (v.triple[2] >= 0) where += ", " + std::to_string(v.triple[2]);
      where += ")";
      throw std::invalid_argument("input algebra violates " + v.axiom + " at " + where);
    }
  }
  return g;
}

std::string sparse_line(const Vec& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += ' ';
    s += std::to_string(i) + ":" + rational_str(v[i]);
  }
  return s.empty() ? "0" : s;
}

std::vector<std::pair<int, Rational>> parse_params(const AlgebraPtr& g, const json& j) {
  if (!j.is_array()) throw std::invalid_argument("params must be an array of [index, value] pairs");
  std::vector<std::pair<int, Rational>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw std::invalid_argument("params must be an array of [index, value] pairs");
    int idx = item[0].get<int>();
    if (idx < 0 || static_cast<std::size_t>(idx) >= g->dim())
      throw std::invalid_argument("params index out of range: " + std::to_string(idx));
    Rational val = item[1].is_string() ? parse_rational(item[1].get<std::string>())
                                       : make_rational(item[1].get<long long>());
    out.emplace_back(idx, val);
  }
  return out;
}

json params_to_json(const std::vector<std::pair<int, Rational>>& params) {
  json arr = json::array();
  for (const auto& [i, t] : params) arr.push_back(json::array({i, rational_str(t)}));
  return arr;
}

struct Report {
  bool json_mode = false;
  bool with_hash_line = true;  // value verbs print bare text
  json inputs = json::object();
  json out = json::object();
  std::vector<std::string> lines;

  std::string hash() const { return input_hash(inputs); }
  void line(const std::string& s) { lines.push_back(s); }

  void emit() {
    if (json_mode) {
      out["input_hash"] = hash();
      std::cout << out.dump(2) << '\n';
      return;
    }
    if (with_hash_line) std::cout << "input-hash: " << hash() << '\n';
    for (const auto& s : lines) std::cout << s << '\n';
  }
};

json subspace_report(const Subspace& s) {
  json j = subspace_to_json(s);
  j["dim"] = s.dim();
  return j;
}

void subspace_lines(Report& rep, const Subspace& s, const std::string& word) {
  rep.line("dim " + std::to_string(s.dim()));
  for (std::size_t i = 0; i < s.dim(); ++i) rep.line(word + " " + sparse_line(s.matrix().row(i)));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact coadjoint-orbit and induced-module calculator for nilpotent Lie (super)algebras"};
  app.require_subcommand(1);

  std::string builtin, input, f_arg, p_arg, k_arg, x_arg, params_arg, orbit_of_arg, lambda_arg;
  std::size_t cap = 8, max_i = 10, trials = 200;
  std::uint64_t seed = 42;
  bool json_mode = false;

  auto add_source = [&](CLI::App* sub) {
    auto* b = sub->add_option("--builtin", builtin, "builtin family: n_m:<m>, glmn:<m>,<n>, super_heisenberg");
    auto* i = sub->add_option("--input", input, "algebra JSON (inline or a file path)");
    b->excludes(i);
    sub->add_flag("--json", json_mode, "emit a JSON report");
    return sub;
  };

  auto* c_validate = add_source(app.add_subcommand("validate", "check axioms and nilpotency"));
  auto* c_lcs = add_source(app.add_subcommand("lcs", "lower central series dimensions"));
  auto* c_center = add_source(app.add_subcommand("center", "center of the algebra"));

  auto* c_orbitdim = add_source(app.add_subcommand("orbit-dim", "coadjoint orbit dimension at f"));
  c_orbitdim->add_option("--f", f_arg, "functional JSON")->required();
  auto* c_weight = add_source(app.add_subcommand("weight", "half the orbit dimension at f"));
  c_weight->add_option("--f", f_arg, "functional JSON")->required();
  auto* c_radical = add_source(app.add_subcommand("radical", "radical of the form f([x,y])"));
  c_radical->add_option("--f", f_arg, "functional JSON")->required();
  auto* c_darboux = add_source(app.add_subcommand("darboux", "Darboux basis of the form f([x,y])"));
  c_darboux->add_option("--f", f_arg, "functional JSON")->required();

  auto* c_polarise = add_source(app.add_subcommand("polarise", "Vergne polarisation at f"));
  c_polarise->add_option("--f", f_arg, "functional JSON")->required();
  auto* c_ispol = add_source(app.add_subcommand("is-polarisation", "test a subspace against f"));
  c_ispol->add_option("--f", f_arg, "functional JSON")->required();
  c_ispol->add_option("--p", p_arg, "subspace JSON")->required();

  auto* c_slice = add_source(app.add_subcommand("slice-verdict", "analyse an orbit-slice intersection"));
  c_slice->add_option("--f", f_arg, "base point functional JSON")->required();
  c_slice->add_option("--k", k_arg, "annihilated subspace JSON")->required();
  c_slice->add_option("--orbit-of", orbit_of_arg, "functional whose orbit is intersected")->required();

  auto* c_act = add_source(app.add_subcommand("act", "coadjoint action on f"));
  c_act->add_option("--f", f_arg, "functional JSON")->required();
  auto* act_x = c_act->add_option("--x", x_arg, "algebra element JSON ({\"coords\":...})");
  auto* act_params = c_act->add_option("--params", params_arg, "orbit sample params [[index, value], ...]");
  act_x->excludes(act_params);

  auto* c_induce = add_source(app.add_subcommand("induce", "differential-operator model induced from a polarisation"));
  c_induce->add_option("--f", f_arg, "functional JSON")->required();
  c_induce->add_option("--p", p_arg, "polarisation JSON (default: Vergne polarisation)");

  auto* c_eigen = add_source(app.add_subcommand("eigenspace", "joint eigenspace of a subalgebra in the induced module"));
  c_eigen->add_option("--f", f_arg, "functional JSON")->required();
  c_eigen->add_option("--p", p_arg, "polarisation JSON (default: Vergne polarisation)");
  c_eigen->add_option("--k", k_arg, "subalgebra JSON (default: the polarisation)");
  c_eigen->add_option("--cap", cap, "polynomial degree cap");

  auto* c_weyl = add_source(app.add_subcommand("weyl-check", "Darboux generators as operators, relations verified"));
  c_weyl->add_option("--f", f_arg, "functional JSON")->required();
  c_weyl->add_option("--p", p_arg, "polarisation JSON (default: Vergne polarisation)");

  auto* c_super = add_source(app.add_subcommand("super-classify", "shape of the graded-primitive quotient at lambda"));
  c_super->add_option("--lambda", lambda_arg, "functional JSON")->required();

  auto* c_stable = app.add_subcommand("s-table", "the weight bound s_i for i = 1..max");
  c_stable->add_option("--max", max_i, "largest i");
  c_stable->add_flag("--json", json_mode, "emit a JSON report");

  auto* c_audit = app.add_subcommand("audit", "sampled weight-range audit for a builtin family");
  c_audit->add_option("--builtin", builtin, "builtin family token")->required();
  c_audit->add_option("--trials", trials, "number of sampled functionals");
  c_audit->add_option("--seed", seed, "RNG seed");
  c_audit->add_flag("--json", json_mode, "emit a JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  const std::string verb = sub->get_name();

  try {
    if (sub != c_stable && sub != c_audit && builtin.empty() && input.empty()) {
      std::cerr << verb << ": one of --builtin or --input is required\n";
      return 2;
    }

    Report rep;
    rep.json_mode = json_mode;

    if (sub == c_stable) {
      rep.inputs["max"] = max_i;
      rep.with_hash_line = false;
      json rows = json::array();
      for (std::size_t i = 1; i <= max_i; ++i) {
        long long s = s_bound(static_cast<long long>(i));
        rep.line(std::to_string(i) + " " + std::to_string(s));
        rows.push_back(json::array({i, s}));
      }
      rep.out["rows"] = rows;
      rep.emit();
      return 0;
    }

    if (sub == c_audit) {
      AlgebraPtr g = builtin_algebra(builtin);
      rep.inputs["algebra"] = algebra_to_json(*g);
      rep.inputs["family"] = builtin;
      rep.inputs["seed"] = seed;
      rep.inputs["trials"] = trials;
      AuditRecord rec = weight_range_audit(g, builtin, trials, seed);
      std::istringstream table(rec.table());
      for (std::string l; std::getline(table, l);) rep.line(l);
      rep.out["family"] = rec.family;
      rep.out["seed"] = rec.seed;
      rep.out["trials"] = rec.trials;
      rep.out["bound"] = rec.bound;
      json hist = json::object();
      for (const auto& [w, count] : rec.histogram) hist[std::to_string(w)] = count;
      rep.out["histogram"] = hist;
      rep.out["attained"] = rec.attained;
      rep.out["max"] = rec.max_weight;
      rep.out["within_bound"] = rec.within_bound;
      rep.emit();
      return 0;
    }

    AlgebraPtr g = load_algebra(builtin, input, sub != c_validate);
    rep.inputs["algebra"] = algebra_to_json(*g);

    auto get_functional = [&](const std::string& arg, const char* key) {
      Functional f = functional_from_json(g, parse_json_arg(arg));
      rep.inputs[key] = functional_to_json(f);
      return f;
    };
    auto get_subspace = [&](const std::string& arg, const char* key) {
      Subspace s = subspace_from_json(g, parse_json_arg(arg));
      rep.inputs[key] = subspace_to_json(s);
      return s;
    };

    if (sub == c_validate) {
      ValidationReport vr = validate(*g);
      json viols = json::array();
      for (const Violation& v : vr.violations) {
        json idx = json::array();
        for (int t : v.triple)
          if (t >= 0) idx.push_back(t);
        viols.push_back(json{{"axiom", v.axiom}, {"indices", idx}});
        std::string where;
        for (const auto& t : idx) where += (where.empty() ? "(" : ", ") + std::to_string(t.get<int>());
        rep.line("violation " + v.axiom + " at " + where + ")");
      }
      if (vr.ok())
        rep.line(vr.nilpotent ? "valid, nilpotency class " + std::to_string(vr.nilpotency_class)
                              : "valid, not nilpotent");
      else
        rep.line("invalid");
      rep.out["ok"] = vr.ok();
      rep.out["violations"] = viols;
      rep.out["nilpotent"] = vr.nilpotent;
      if (vr.nilpotent)
        rep.out["nilpotency_class"] = vr.nilpotency_class;
      else
        rep.out["nilpotency_class"] = nullptr;
    } else if (sub == c_lcs) {
      auto series = lower_central_series(g);
      std::string dims;
      json jd = json::array();
      for (const auto& term : series) {
        if (!dims.empty()) dims += ",";
        dims += std::to_string(term.dim());
        jd.push_back(term.dim());
      }
      rep.line("dims " + dims);
      rep.out["dims"] = jd;
    } else if (sub == c_center) {
      Subspace z = center(g);
      subspace_lines(rep, z, "row");
      rep.out = subspace_report(z);
    } else if (sub == c_orbitdim) {
      Functional f = get_functional(f_arg, "f");
      rep.with_hash_line = false;
      std::size_t od = orbit_dim(f);
      rep.line(std::to_string(od));
      rep.out["orbit_dim"] = od;
    } else if (sub == c_weight) {
      Functional f = get_functional(f_arg, "f");
      rep.with_hash_line = false;
      std::size_t w = weight(f);
      rep.line(std::to_string(w));
      rep.out["weight"] = w;
    } else if (sub == c_radical) {
      Functional f = get_functional(f_arg, "f");
      Subspace r = radical(f);
      subspace_lines(rep, r, "row");
      rep.out = subspace_report(r);
    } else if (sub == c_darboux) {
      Functional f = get_functional(f_arg, "f");
      DarbouxBasis db = darboux_basis(f);
      rep.line("pairs " + std::to_string(db.pairs.size()));
      json pairs = json::array();
      for (std::size_t i = 0; i < db.pairs.size(); ++i) {
        rep.line("x" + std::to_string(i + 1) + " " + sparse_line(db.pairs[i].first));
        rep.line("y" + std::to_string(i + 1) + " " + sparse_line(db.pairs[i].second));
        pairs.push_back(json{
            {"x", functional_to_json(Functional(g, db.pairs[i].first))},
            {"y", functional_to_json(Functional(g, db.pairs[i].second))}});
      }
      rep.line("kernel dim " + std::to_string(db.kernel_rows.rows()));
      for (std::size_t i = 0; i < db.kernel_rows.rows(); ++i)
        rep.line("kernel " + sparse_line(db.kernel_rows.row(i)));
      rep.out["pairs"] = pairs;
      rep.out["kernel"] = subspace_to_json(Subspace(g, db.kernel_rows));
    } else if (sub == c_polarise) {
      Functional f = get_functional(f_arg, "f");
      Subspace p = vergne_polarisation(f);
      subspace_lines(rep, p, "row");
      rep.out = subspace_report(p);
    } else if (sub == c_ispol) {
      Functional f = get_functional(f_arg, "f");
      Subspace p = get_subspace(p_arg, "p");
      rep.with_hash_line = false;
      bool ok = is_polarisation(p, f);
      rep.line(ok ? "true" : "false");
      rep.out["is_polarisation"] = ok;
    } else if (sub == c_slice) {
      Functional f = get_functional(f_arg, "f");
      Subspace k = get_subspace(k_arg, "k");
      Functional h = get_functional(orbit_of_arg, "orbit_of");
      SliceVerdict v = slice_verdict(f, k, h);
      rep.line(std::string("status ") + slice_status_name(v.status));
      rep.line("detail " + v.detail);
      if (v.module_count) rep.line("modules " + std::to_string(*v.module_count));
      rep.out["status"] = slice_status_name(v.status);
      rep.out["detail"] = v.detail;
      rep.out["module_count"] = v.module_count ? json(*v.module_count) : json(nullptr);
    } else if (sub == c_act) {
      Functional f = get_functional(f_arg, "f");
      rep.with_hash_line = false;
      Functional result = f;
      if (!x_arg.empty()) {
        Functional xf = functional_from_json(g, parse_json_arg(x_arg));
        rep.inputs["x"] = functional_to_json(xf);
        result = coadjoint_act(xf.coords(), f);
      } else if (!params_arg.empty()) {
        auto params = parse_params(g, parse_json_arg(params_arg));
        rep.inputs["params"] = params_to_json(params);
        result = orbit_sample(f, params);
      } else {
        std::cerr << "act: one of --x or --params is required\n";
        return 2;
      }
      rep.line(sparse_line(result.coords()));
      rep.out["result"] = functional_to_json(result);
    } else if (sub == c_induce || sub == c_eigen || sub == c_weyl) {
      Functional f = get_functional(f_arg, "f");
      Subspace p = p_arg.empty() ? vergne_polarisation(f) : get_subspace(p_arg, "p");
      if (p_arg.empty()) rep.inputs["p"] = subspace_to_json(p);
      DiffOpRep drep = induce(f, p);

      if (sub == c_induce) {
        rep.line("variables " + std::to_string(drep.vars()));
        std::string comp;
        json jcomp = json::array();
        for (std::size_t idx : drep.complement) {
          if (!comp.empty()) comp += ",";
          comp += std::to_string(idx);
          jcomp.push_back(idx);
        }
        rep.line("complement " + comp);
        json ops = json::array();
        for (std::size_t i = 0; i < g->dim(); ++i) {
          const std::string& nm = g->basis_names()[i];
          rep.line("rho(" + nm + ") = " + drep.rho[i].str());
          ops.push_back(json{{"name", nm}, {"op", drep.rho[i].str()}});
        }
        rep.line("check ok");
        rep.out["variables"] = drep.vars();
        rep.out["complement"] = jcomp;
        rep.out["polarisation"] = subspace_to_json(p);
        rep.out["rho"] = ops;
        rep.out["check"] = "ok";
      } else if (sub == c_eigen) {
        Subspace k = k_arg.empty() ? p : get_subspace(k_arg, "k");
        if (k_arg.empty()) rep.inputs["k"] = subspace_to_json(k);
        rep.inputs["cap"] = cap;
        auto basis = eigenspace(drep, k, f, cap);
        rep.line("dim " + std::to_string(basis.size()));
        json jb = json::array();
        for (std::size_t i = 0; i < basis.size(); ++i) {
          rep.line("q" + std::to_string(i + 1) + " = " + basis[i].str());
          jb.push_back(basis[i].str());
        }
        rep.out["dim"] = basis.size();
        rep.out["basis"] = jb;
      } else {
        DarbouxBasis db = darboux_basis(f);
        auto gens = weyl_generators(drep, db);
        rep.line("pairs " + std::to_string(gens.size()));
        json jp = json::array();
        for (std::size_t i = 0; i < gens.size(); ++i) {
          rep.line("X" + std::to_string(i + 1) + " = " + gens[i].first.str());
          rep.line("Y" + std::to_string(i + 1) + " = " + gens[i].second.str());
          jp.push_back(json{{"X", gens[i].first.str()}, {"Y", gens[i].second.str()}});
        }
        rep.line("relations ok");
        rep.out["pairs"] = jp;
        rep.out["relations"] = "ok";
      }
    } else if (sub == c_super) {
      Functional lam = get_functional(lambda_arg, "lambda");
      rep.with_hash_line = false;
      QuotientShape shape = classify_quotient(lam);
      rep.line(shape.str() + ", provenance: " + shape.provenance);
      rep.out["s"] = shape.s;
      rep.out["n"] = shape.n;
      rep.out["two_block"] = shape.two_block;
      rep.out["provenance"] = shape.provenance;
      rep.out["shape"] = shape.str();
    }

    rep.emit();
    return 0;
  } catch (const json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
