#pragma once

#include <json.hpp>

#include "dainf/algebra.hpp"
#include "dainf/hochschild.hpp"

namespace dainf {

using json = nlohmann::json;

/// File schema: {"ring": {...}, "basis": [{"name","h","v"}...],
/// "operations": [{"i","j","entries":[{"inputs":[...],"output","coeff"}]}]}.
/// Coefficients are exact scalar strings; the declared (i,j) bidegree is
/// validated against every entry on load.
json structure_to_json(const DAInfStructure& s);
DAInfStructure structure_from_json(const json& j);

/// Morphism files carry "source"/"target" structure blocks plus a "morphism"
/// list in the same entry shape.
json morphism_to_json(const InfMorphism& f);
InfMorphism morphism_from_json(const json& j);

/// Retract files: {"ring", "structure", "v_basis", "incl", "proj", "h"} with
/// the arity-1 entry shape for the three maps.
HomotopyRetract retract_from_json(const json& j);

/// Cochain files: {"total": N, "components": [{"i","j","entries": ...}]}
/// where i is the horizontal degree and j the arity, over a given carrier.
json cochain_to_json(const HochschildElement& e);
HochschildElement cochain_from_json(const json& j, const BigradedModule& carrier);

json ring_to_json(const CoefficientRing& r);
CoefficientRing ring_from_json(const json& j);

/// Canonical dump: sorted keys, entries in column-major order, normalized
/// scalars; identical values print byte-identically.
std::string canonical_dump(const json& j);

json relation_report_to_json(const RelationReport& r, const char* relation);

} // namespace dainf
