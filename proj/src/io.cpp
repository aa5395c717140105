#include "tilekit/io.hpp"

#include <fstream>

#include "tilekit/error.hpp"

namespace tilekit {

Json to_json(const Rational& value) { return rational_str(value); }

Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (!j.is_string()) fail(ErrorKind::ParseError, "expected rational literal, got " + j.dump());
    return parse_rational(j.get<std::string>());
}

Json to_json(const Vec2& v) { return Json::array({rational_str(v.x), rational_str(v.y)}); }

Vec2 vec2_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        fail(ErrorKind::ParseError, "expected [\"x\",\"y\"], got " + j.dump());
    return {rational_from_json(j[0]), rational_from_json(j[1])};
}

namespace {

Json points_to_json(const std::vector<Point>& points) {
    Json out = Json::array();
    for (const Point& p : points) out.push_back(to_json(p));
    return out;
}

std::vector<Point> points_from_json(const Json& j) {
    if (!j.is_array()) fail(ErrorKind::ParseError, "expected an array of points");
    std::vector<Point> out;
    out.reserve(j.size());
    for (const Json& item : j) out.push_back(vec2_from_json(item));
    return out;
}

const Json& require_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key))
        fail(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
    return j.at(key);
}

}  // namespace

Json to_json(const CSPolygon& polygon) { return Json{{"vertices", points_to_json(polygon.vertices())}}; }

CSPolygon polygon_from_json(const Json& j) {
    return CSPolygon::validate(points_from_json(require_field(j, "vertices")));
}

Json to_json(const Lattice& lattice) {
    return Json{{"basis", Json::array({to_json(lattice.b1()), to_json(lattice.b2())})}};
}

Lattice lattice_from_json(const Json& j) {
    const Json& basis = require_field(j, "basis");
    if (!basis.is_array() || basis.size() != 2)
        fail(ErrorKind::ParseError, "basis must hold two vectors");
    return Lattice(vec2_from_json(basis[0]), vec2_from_json(basis[1]));
}

Json to_json(const TranslateSet& x) {
    return Json{{"lattice", to_json(x.lattice)}, {"offsets", points_to_json(x.offsets)}};
}

TranslateSet translate_set_from_json(const Json& j) {
    TranslateSet x{lattice_from_json(require_field(j, "lattice")),
                   points_from_json(require_field(j, "offsets"))};
    if (x.offsets.empty()) fail(ErrorKind::ParseError, "translate set needs at least one offset");
    return x;
}

Json to_json(const AffineMap& map) {
    return Json{{"linear", Json::array({Json::array({rational_str(map.linear.a), rational_str(map.linear.b)}),
                                        Json::array({rational_str(map.linear.c), rational_str(map.linear.d)})})},
                {"translation", to_json(map.translation)}};
}

AffineMap affine_map_from_json(const Json& j) {
    const Json& linear = require_field(j, "linear");
    if (!linear.is_array() || linear.size() != 2 || linear[0].size() != 2 || linear[1].size() != 2)
        fail(ErrorKind::ParseError, "linear part must be a 2x2 matrix");
    Mat2 m{rational_from_json(linear[0][0]), rational_from_json(linear[0][1]),
           rational_from_json(linear[1][0]), rational_from_json(linear[1][1])};
    return {m, vec2_from_json(require_field(j, "translation"))};
}

Json to_json(const BolleReport& report) {
    Json edges = Json::array();
    for (const EdgeBolleCheck& check : report.per_edge) {
        Json e{{"edge", check.edge + 1},
               {"interior_half_lattice_witness",
                check.interior_half_lattice_witness ? to_json(*check.interior_half_lattice_witness)
                                                    : Json(nullptr)},
               {"midpoint_in_half_lattice", check.midpoint_in_half_lattice},
               {"edge_is_lattice_vector", check.edge_is_lattice_vector},
               {"verdict", check.verdict}};
        edges.push_back(std::move(e));
    }
    Json out{{"pass", report.pass},
             {"per_edge", std::move(edges)},
             {"multiplicity", report.multiplicity ? Json(*report.multiplicity) : Json(nullptr)},
             {"area", rational_str(report.area)},
             {"lattice_det", rational_str(report.lattice_det)}};
    if (report.diagnostic) out["diagnostic"] = *report.diagnostic;
    return out;
}

BolleReport bolle_report_from_json(const Json& j) {
    BolleReport report;
    report.pass = require_field(j, "pass").get<bool>();
    for (const Json& e : require_field(j, "per_edge")) {
        EdgeBolleCheck check;
        check.edge = e.at("edge").get<int>() - 1;
        if (!e.at("interior_half_lattice_witness").is_null())
            check.interior_half_lattice_witness = vec2_from_json(e.at("interior_half_lattice_witness"));
        check.midpoint_in_half_lattice = e.at("midpoint_in_half_lattice").get<bool>();
        check.edge_is_lattice_vector = e.at("edge_is_lattice_vector").get<bool>();
        check.verdict = e.at("verdict").get<bool>();
        report.per_edge.push_back(std::move(check));
    }
    if (!require_field(j, "multiplicity").is_null())
        report.multiplicity = j.at("multiplicity").get<long>();
    report.area = rational_from_json(require_field(j, "area"));
    report.lattice_det = rational_from_json(require_field(j, "lattice_det"));
    if (j.contains("diagnostic")) report.diagnostic = j.at("diagnostic").get<std::string>();
    return report;
}

Json to_json(const MultiplicityReport& report) {
    Json samples = Json::array();
    for (const MultiplicitySample& s : report.samples)
        samples.push_back(Json{{"point", to_json(s.point)}, {"interior_count", s.interior_count}});
    return Json{{"pass", report.pass},
                {"k_expected", report.k_expected},
                {"area_ratio", rational_str(report.area_ratio)},
                {"min_count", report.min_count},
                {"max_count", report.max_count},
                {"samples", std::move(samples)}};
}

MultiplicityReport multiplicity_report_from_json(const Json& j) {
    MultiplicityReport report;
    report.pass = require_field(j, "pass").get<bool>();
    report.k_expected = require_field(j, "k_expected").get<long>();
    report.area_ratio = rational_from_json(require_field(j, "area_ratio"));
    report.min_count = require_field(j, "min_count").get<long>();
    report.max_count = require_field(j, "max_count").get<long>();
    for (const Json& s : require_field(j, "samples"))
        report.samples.push_back(
            {vec2_from_json(s.at("point")), s.at("interior_count").get<long>()});
    return report;
}

Json to_json(const WheelReport& report) {
    Json wheels = Json::array();
    for (const Wheel& wheel : report.wheels)
        wheels.push_back(
            Json{{"translates", points_to_json(wheel.translates)}, {"winding", wheel.winding}});
    return Json{{"wheels", std::move(wheels)},
                {"phi", report.phi},
                {"kappa", report.kappa},
                {"ell", report.ell}};
}

WheelReport wheel_report_from_json(const Json& j) {
    WheelReport report;
    for (const Json& w : require_field(j, "wheels")) {
        Wheel wheel;
        wheel.translates = points_from_json(w.at("translates"));
        wheel.winding = w.at("winding").get<long>();
        report.wheels.push_back(std::move(wheel));
    }
    report.phi = require_field(j, "phi").get<long>();
    report.kappa = require_field(j, "kappa").get<long>();
    report.ell = require_field(j, "ell").get<long>();
    return report;
}

Json to_json(const VertexStar& star) {
    return Json{{"vertex", to_json(star.vertex)},
                {"on_boundary", points_to_json(star.on_boundary)},
                {"varphi", star.in_interior_count},
                {"ell", star.edge_through_count}};
}

Json to_json(const VertexIdentityTable& table) {
    Json rows = Json::array();
    for (const VertexIdentityRow& row : table.rows)
        rows.push_back(Json{{"vertex", to_json(row.vertex)},
                            {"phi", row.phi},
                            {"varphi", row.varphi},
                            {"sum", row.phi + row.varphi}});
    return Json{{"pass", table.pass}, {"k", table.k}, {"vertices", std::move(rows)}};
}

VertexIdentityTable vertex_identity_table_from_json(const Json& j) {
    VertexIdentityTable table;
    table.pass = require_field(j, "pass").get<bool>();
    table.k = require_field(j, "k").get<long>();
    for (const Json& row : require_field(j, "vertices"))
        table.rows.push_back({vec2_from_json(row.at("vertex")), row.at("phi").get<long>(),
                              row.at("varphi").get<long>()});
    return table;
}

Json to_json(const FamilyInstance& instance) {
    Json out{{"family", family_tag_name(instance.tag)},
             {"polygon", to_json(instance.polygon)},
             {"lattice", to_json(instance.lattice)},
             {"expected_k", instance.expected_k}};
    if (instance.parameter) out["parameter"] = rational_str(*instance.parameter);
    if (instance.seed_vertex) out["seed_vertex"] = to_json(*instance.seed_vertex);
    return out;
}

Json to_json(const Classification& result) {
    Json out{{"five_fold", result.five_fold()}};
    if (result.family) out["family"] = family_tag_name(*result.family);
    if (result.parameter) out["parameter"] = rational_str(*result.parameter);
    if (result.seed_vertex) out["seed_vertex"] = to_json(*result.seed_vertex);
    if (result.normalizing_map) out["normalizing_map"] = to_json(*result.normalizing_map);
    if (!result.reason.empty()) out["reason"] = result.reason;
    return out;
}

Classification classification_from_json(const Json& j) {
    Classification result;
    if (j.contains("family")) {
        std::string name = j.at("family").get<std::string>();
        for (FamilyTag tag : {FamilyTag::parallelogram, FamilyTag::hexagon,
                              FamilyTag::octagon_type1, FamilyTag::octagon_type2,
                              FamilyTag::decagon})
            if (name == family_tag_name(tag)) result.family = tag;
        if (!result.family) fail(ErrorKind::ParseError, "unknown family \"" + name + "\"");
    }
    if (j.contains("parameter")) result.parameter = rational_from_json(j.at("parameter"));
    if (j.contains("seed_vertex")) result.seed_vertex = vec2_from_json(j.at("seed_vertex"));
    if (j.contains("normalizing_map"))
        result.normalizing_map = affine_map_from_json(j.at("normalizing_map"));
    if (j.contains("reason")) result.reason = j.at("reason").get<std::string>();
    return result;
}

Json to_json(const std::vector<CaseLattice>& cases) {
    Json out = Json::array();
    for (const CaseLattice& entry : cases) {
        Json item{{"case", entry.label},
                  {"basis", Json::array({to_json(entry.e1), to_json(entry.e2)})},
                  {"degenerate", entry.degenerate},
                  {"bolle_k", entry.bolle_k ? Json(*entry.bolle_k) : Json(nullptr)}};
        out.push_back(std::move(item));
    }
    return out;
}

std::vector<CaseLattice> case_lattices_from_json(const Json& j) {
    std::vector<CaseLattice> out;
    for (const Json& item : j) {
        CaseLattice entry;
        entry.label = item.at("case").get<std::string>();
        entry.e1 = vec2_from_json(item.at("basis").at(0));
        entry.e2 = vec2_from_json(item.at("basis").at(1));
        entry.degenerate = item.at("degenerate").get<bool>();
        if (!item.at("bolle_k").is_null()) entry.bolle_k = item.at("bolle_k").get<long>();
        out.push_back(std::move(entry));
    }
    return out;
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::ParseError, "cannot open " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::ParseError, "invalid JSON in " + path);
    return j;
}

}  // namespace tilekit
