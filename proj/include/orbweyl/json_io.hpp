#pragma once

// Wire formats. Algebras carry name/dim/basis/parity plus sparse brackets
// over i <= j cells; functionals and subspace rows are sparse coordinate
// maps keyed by 0-based index strings with "p/q" values.

#include "orbweyl/coadjoint.hpp"

#include <nlohmann/json_fwd.hpp>

#include <cstdint>
#include <string>

namespace orbweyl {

nlohmann::json algebra_to_json(const LieAlgebra& g);
AlgebraPtr algebra_from_json(const nlohmann::json& j);

nlohmann::json functional_to_json(const Functional& f);
Functional functional_from_json(AlgebraPtr ambient, const nlohmann::json& j);

nlohmann::json subspace_to_json(const Subspace& s);
Subspace subspace_from_json(AlgebraPtr ambient, const nlohmann::json& j);

// FNV-1a over the canonical dump; embedded in reports to catch format drift.
std::uint64_t fnv1a64(const std::string& text);
std::string input_hash(const nlohmann::json& j);

}  // namespace orbweyl
