#pragma once

#include <string>

#include <json.hpp>

#include "xmodknot/crossed_module.hpp"
#include "xmodknot/group.hpp"
#include "xmodknot/rack.hpp"
#include "xmodknot/reidemeister_pair.hpp"
#include "xmodknot/state_sum.hpp"
#include "xmodknot/tangle.hpp"

namespace xmodknot {

using json = nlohmann::json;

// Group names understood everywhere a group is referenced:
//   sN, aN (alternating), zN, d4, gl2-P, pgl2-P, "GL(2,P)", and .csv or .json Cayley tables.
FiniteGroup resolve_group(const std::string& spec);
// Central quotient E -> E / Z(E), used for lifting pairs.
GroupHom central_extension_of(const std::string& spec);

json group_to_json(const FiniteGroup& g);
// {"ref": "s5"} or {"name", "labels", "table"}.
FiniteGroup group_from_json(const json& j);

json xmod_to_json(const CrossedModule& x);
CrossedModule xmod_from_json(const json& j);

json diagram_to_json(const SlicedTangleDiagram& d);
SlicedTangleDiagram diagram_from_json(const json& j);
// A .tng or .json file, or "catalog:name".
SlicedTangleDiagram resolve_diagram(const std::string& spec);

// Pair descriptors:
//   {"kind": "rack", "quandle": "dihedral"|"cyclic"|"conjugation"|"eisermann", "n"|"group"|"x"}
//   {"kind": "cocycle", "rack": {...}, "values": "z3", "table": [[...]]}
//   {"kind": "eisermann", "group": "s5", "x": "(1 2 3 4 5)", "carrier": "full"|"commutator"}
//   {"kind": "2xmod", "group": "s3"}
//   {"kind": "lift_unframed"|"lift_framed", "extension": "gl2-5", "x": "(2 0; 0 1)"}
//   {"kind": "tables", "xmod": {...}, "mode": "framed"|"unframed", "psi": [[...]], "phi": [[...]]}
// Every kind except "tables" is validated on construction.
ReidemeisterPair pair_from_descriptor(const json& j);
// Materialised tables in the "tables" descriptor format.
json pair_to_json(const ReidemeisterPair& p);

Rack rack_from_descriptor(const json& j, FiniteGroup* carrier = nullptr);

json invariant_to_json(const InvariantValue& v, const FiniteGroup& colours);
json algebra_to_json(const GroupAlgebraElement& a);
json report_to_json(const ValidationReport& r);

json read_json_file(const std::string& path);

}  // namespace xmodknot
