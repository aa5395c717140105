#pragma once

#include <json.hpp>

#include "tilekit/arrangement.hpp"
#include "tilekit/bolle.hpp"
#include "tilekit/families.hpp"
#include "tilekit/lattice.hpp"
#include "tilekit/local_structure.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

using Json = nlohmann::json;

// Rational literal format everywhere: "p/q" with q omitted when 1; parsing
// accepts unreduced fractions, emission always reduces with q > 0.
Json to_json(const Rational& value);
Rational rational_from_json(const Json& j);

Json to_json(const Vec2& v);  // ["x","y"]
Vec2 vec2_from_json(const Json& j);

Json to_json(const CSPolygon& polygon);  // {"vertices": [["x","y"], ...]}
CSPolygon polygon_from_json(const Json& j);

Json to_json(const Lattice& lattice);  // {"basis": [["x","y"],["x","y"]]}
Lattice lattice_from_json(const Json& j);

// {"lattice": {...}, "offsets": [["x","y"], ...]}; repeated offsets encode
// multiset multiplicity.
Json to_json(const TranslateSet& x);
TranslateSet translate_set_from_json(const Json& j);

Json to_json(const AffineMap& map);
AffineMap affine_map_from_json(const Json& j);

Json to_json(const BolleReport& report);
BolleReport bolle_report_from_json(const Json& j);

Json to_json(const MultiplicityReport& report);
MultiplicityReport multiplicity_report_from_json(const Json& j);

Json to_json(const WheelReport& report);
WheelReport wheel_report_from_json(const Json& j);
Json to_json(const VertexStar& star);

Json to_json(const VertexIdentityTable& table);
VertexIdentityTable vertex_identity_table_from_json(const Json& j);

Json to_json(const FamilyInstance& instance);
Json to_json(const Classification& result);
Classification classification_from_json(const Json& j);
Json to_json(const std::vector<CaseLattice>& cases);
std::vector<CaseLattice> case_lattices_from_json(const Json& j);

Json read_json_file(const std::string& path);  // throws ParseError

}  // namespace tilekit
