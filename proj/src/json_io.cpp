#include "orbweyl/json_io.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace orbweyl {

namespace {

using nlohmann::json;

Rational rational_from_json(const json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
  throw std::invalid_argument("rational values must be \"p/q\" strings or integers");
}

int index_from_key(const std::string& key, std::size_t dim) {
  for (char c : key)
    if (!std::isdigit(static_cast<unsigned char>(c)))
      throw std::invalid_argument("coordinate keys must be 0-based indices, got \"" + key + "\"");
  if (key.empty()) throw std::invalid_argument("empty coordinate key");
  long idx = std::stol(key);
  if (idx < 0 || static_cast<std::size_t>(idx) >= dim)
    throw std::invalid_argument("coordinate index " + key + " out of range");
  return static_cast<int>(idx);
}

Vec coords_from_json(const json& j, std::size_t dim) {
  if (!j.is_object() || !j.contains("coords") || !j.at("coords").is_object())
    throw std::invalid_argument("expected an object with a \"coords\" map");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "coords") throw std::invalid_argument("unexpected key \"" + key + "\"");
  }
  Vec coords(dim);
  for (const auto& [key, value] : j.at("coords").items())
    coords[static_cast<std::size_t>(index_from_key(key, dim))] = rational_from_json(value);
  return coords;
}

json coords_to_json(const Vec& coords) {
  json map = json::object();
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) map[std::to_string(i)] = rational_str(coords[i]);
  return json{{"coords", map}};
}

}  // namespace

nlohmann::json algebra_to_json(const LieAlgebra& g) {
  json j;
  j["name"] = g.name();
  j["dim"] = g.dim();
  j["basis"] = g.basis_names();
  if (g.graded()) j["parity"] = g.parity();
  json brackets = json::array();
  for (const auto& [key, coeffs] : g.table()) {
    json cell;
    cell["i"] = key.first;
    cell["j"] = key.second;
    json cmap = json::object();
    for (const auto& [k, c] : coeffs) cmap[std::to_string(k)] = rational_str(c);
    cell["coeffs"] = cmap;
    brackets.push_back(cell);
  }
  j["brackets"] = brackets;
  return j;
}

AlgebraPtr algebra_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("algebra JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "name" && key != "dim" && key != "basis" && key != "parity" && key != "brackets")
      throw std::invalid_argument("unexpected algebra key \"" + key + "\"");
  }
  if (!j.contains("name") || !j.at("name").is_string())
    throw std::invalid_argument("algebra JSON needs a string \"name\"");
  if (!j.contains("dim") || !j.at("dim").is_number_integer())
    throw std::invalid_argument("algebra JSON needs an integer \"dim\"");
  if (!j.contains("basis") || !j.at("basis").is_array())
    throw std::invalid_argument("algebra JSON needs a \"basis\" array");
  if (!j.contains("brackets") || !j.at("brackets").is_array())
    throw std::invalid_argument("algebra JSON needs a \"brackets\" array");

  auto dim = j.at("dim").get<long long>();
  std::vector<std::string> basis;
  for (const auto& name : j.at("basis")) {
    if (!name.is_string()) throw std::invalid_argument("basis entries must be strings");
    basis.push_back(name.get<std::string>());
  }
  if (dim < 0 || static_cast<std::size_t>(dim) != basis.size())
    throw std::invalid_argument("\"dim\" must match the basis length");

  std::vector<int> parity;
  if (j.contains("parity")) {
    if (!j.at("parity").is_array()) throw std::invalid_argument("\"parity\" must be an array");
    for (const auto& p : j.at("parity")) {
      if (!p.is_number_integer()) throw std::invalid_argument("parity entries must be integers");
      parity.push_back(p.get<int>());
    }
  }

  std::vector<LieAlgebra::Entry> table;
  for (const auto& cell : j.at("brackets")) {
    if (!cell.is_object() || !cell.contains("i") || !cell.contains("j") ||
        !cell.contains("coeffs") || !cell.at("coeffs").is_object())
      throw std::invalid_argument("bracket cells need \"i\", \"j\" and a \"coeffs\" map");
    for (const auto& [key, value] : cell.items()) {
      (void)value;
      if (key != "i" && key != "j" && key != "coeffs")
        throw std::invalid_argument("unexpected bracket cell key \"" + key + "\"");
    }
    LieAlgebra::Entry entry;
    entry.i = cell.at("i").get<int>();
    entry.j = cell.at("j").get<int>();
    for (const auto& [key, value] : cell.at("coeffs").items())
      entry.coeffs[index_from_key(key, static_cast<std::size_t>(dim))] = rational_from_json(value);
    table.push_back(std::move(entry));
  }

  return LieAlgebra::create(j.at("name").get<std::string>(), std::move(basis), std::move(parity),
                            std::move(table));
}

nlohmann::json functional_to_json(const Functional& f) { return coords_to_json(f.coords()); }

Functional functional_from_json(AlgebraPtr ambient, const nlohmann::json& j) {
  Vec coords = coords_from_json(j, ambient->dim());
  return Functional(std::move(ambient), std::move(coords));
}

nlohmann::json subspace_to_json(const Subspace& s) {
  json rows = json::array();
  for (std::size_t i = 0; i < s.matrix().rows(); ++i)
    rows.push_back(coords_to_json(s.matrix().row(i)));
  return nlohmann::json{{"rows", rows}};
}

Subspace subspace_from_json(AlgebraPtr ambient, const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("rows") || !j.at("rows").is_array())
    throw std::invalid_argument("subspace JSON needs a \"rows\" array");
  for (const auto& [key, value] : j.items()) {
    (void)value;
    if (key != "rows") throw std::invalid_argument("unexpected subspace key \"" + key + "\"");
  }
  Mat rows(0, ambient->dim());
  for (const auto& row : j.at("rows")) rows.append_row(coords_from_json(row, ambient->dim()));
  return Subspace(std::move(ambient), rows);
}

std::uint64_t fnv1a64(const std::string& text) {
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  return hash;
}

std::string input_hash(const nlohmann::json& j) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a64(j.dump())));
  return buf;
}

}  // namespace orbweyl
