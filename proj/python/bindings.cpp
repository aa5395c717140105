#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <utility>
#include <vector>

#include "tilekit/arrangement.hpp"
#include "tilekit/bolle.hpp"
#include "tilekit/error.hpp"
#include "tilekit/families.hpp"
#include "tilekit/io.hpp"
#include "tilekit/local_structure.hpp"
#include "tilekit/render.hpp"

namespace py = pybind11;
using namespace tilekit;

namespace {

// Rationals cross the boundary as "p/q" strings; exactness survives the trip.
Vec2 vec_from_pair(const std::pair<std::string, std::string>& p) {
    return {parse_rational(p.first), parse_rational(p.second)};
}

std::pair<std::string, std::string> pair_from_vec(const Vec2& v) {
    return {rational_str(v.x), rational_str(v.y)};
}

py::object json_to_py(const Json& j) {
    switch (j.type()) {
        case Json::value_t::null: return py::none();
        case Json::value_t::boolean: return py::bool_(j.get<bool>());
        case Json::value_t::number_integer: return py::int_(j.get<long>());
        case Json::value_t::number_unsigned: return py::int_(j.get<unsigned long>());
        case Json::value_t::number_float: return py::float_(j.get<double>());
        case Json::value_t::string: return py::str(j.get<std::string>());
        case Json::value_t::array: {
            py::list out;
            for (const Json& item : j) out.append(json_to_py(item));
            return out;
        }
        case Json::value_t::object: {
            py::dict out;
            for (auto it = j.begin(); it != j.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default: return py::none();
    }
}

std::vector<Point> points_from_pairs(const std::vector<std::pair<std::string, std::string>>& raw) {
    std::vector<Point> out;
    out.reserve(raw.size());
    for (const auto& p : raw) out.push_back(vec_from_pair(p));
    return out;
}

}  // namespace

PYBIND11_MODULE(_tilekit, m) {
    m.doc() = "exact-arithmetic toolkit for k-fold translative tilings by centrally "
              "symmetric convex polygons";

    py::register_exception<Error>(m, "TilekitError");

    py::class_<CSPolygon>(m, "Polygon")
        .def(py::init([](const std::vector<std::pair<std::string, std::string>>& vertices) {
                 return CSPolygon::validate(points_from_pairs(vertices));
             }),
             py::arg("vertices"), "validate a centrally symmetric convex polygon")
        .def_property_readonly("m", &CSPolygon::half_size)
        .def_property_readonly("is_ccw", &CSPolygon::is_ccw)
        .def_property_readonly("area", [](const CSPolygon& p) { return rational_str(p.area()); })
        .def_property_readonly("vertices",
                               [](const CSPolygon& p) {
                                   std::vector<std::pair<std::string, std::string>> out;
                                   for (const Point& v : p.vertices()) out.push_back(pair_from_vec(v));
                                   return out;
                               })
        .def("locate",
             [](const CSPolygon& p, const std::pair<std::string, std::string>& point,
                const std::pair<std::string, std::string>& translate) {
                 PointLocation loc = p.locate(vec_from_pair(point), vec_from_pair(translate));
                 const char* kind = loc.kind == PointLocation::Kind::interior ? "interior"
                                    : loc.kind == PointLocation::Kind::exterior
                                        ? "exterior"
                                        : loc.kind == PointLocation::Kind::vertex ? "vertex"
                                                                                  : "edge_interior";
                 return py::make_tuple(kind, loc.index + 1);
             },
             py::arg("point"), py::arg("translate") = std::make_pair(std::string("0"), std::string("0")))
        .def("to_json", [](const CSPolygon& p) { return to_json(p).dump(); })
        .def("__repr__", [](const CSPolygon& p) {
            return "<tilekit.Polygon 2m=" + std::to_string(p.size()) + ">";
        });

    py::class_<Lattice>(m, "Lattice")
        .def(py::init([](const std::pair<std::string, std::string>& b1,
                         const std::pair<std::string, std::string>& b2) {
                 return Lattice(vec_from_pair(b1), vec_from_pair(b2));
             }),
             py::arg("b1"), py::arg("b2"))
        .def_property_readonly("det",
                               [](const Lattice& l) { return rational_str(l.determinant()); })
        .def("member",
             [](const Lattice& l, const std::pair<std::string, std::string>& p) {
                 return l.member(vec_from_pair(p));
             })
        .def("half_member",
             [](const Lattice& l, const std::pair<std::string, std::string>& p) {
                 return l.half_member(vec_from_pair(p));
             })
        .def("reduce_mod",
             [](const Lattice& l, const std::pair<std::string, std::string>& p) {
                 return pair_from_vec(l.reduce_mod(vec_from_pair(p)));
             })
        .def("to_json", [](const Lattice& l) { return to_json(l).dump(); })
        .def("__repr__", [](const Lattice& l) {
            return "<tilekit.Lattice det=" + rational_str(l.determinant()) + ">";
        });

    py::class_<TranslateSet>(m, "TranslateSet")
        .def(py::init([](const Lattice& lattice,
                         const std::vector<std::pair<std::string, std::string>>& offsets) {
                 if (offsets.empty()) throw Error(ErrorKind::ParseError, "need at least one offset");
                 return TranslateSet{lattice, points_from_pairs(offsets)};
             }),
             py::arg("lattice"),
             py::arg("offsets") = std::vector<std::pair<std::string, std::string>>{{"0", "0"}})
        .def("to_json", [](const TranslateSet& x) { return to_json(x).dump(); });

    m.def("check_bolle",
          [](const CSPolygon& p, const Lattice& l) { return json_to_py(to_json(check_bolle(p, l))); },
          py::arg("polygon"), py::arg("lattice"));

    m.def("verify_k_fold",
          [](const CSPolygon& p, const TranslateSet& x, long k) {
              return json_to_py(to_json(verify_k_fold(p, x, k)));
          },
          py::arg("polygon"), py::arg("translates"), py::arg("k"));

    m.def("multiplicity_at",
          [](const CSPolygon& p, const TranslateSet& x,
             const std::pair<std::string, std::string>& point) {
              PointMultiplicity counts = multiplicity_at(p, x, vec_from_pair(point));
              return py::make_tuple(counts.interior, counts.boundary);
          },
          py::arg("polygon"), py::arg("translates"), py::arg("point"));

    m.def("wheels_at",
          [](const CSPolygon& p, const TranslateSet& x,
             const std::pair<std::string, std::string>& v) {
              return json_to_py(to_json(wheels_at(p, x, vec_from_pair(v))));
          },
          py::arg("polygon"), py::arg("translates"), py::arg("vertex"));

    m.def("vertex_identity",
          [](const CSPolygon& p, const TranslateSet& x, long k) {
              return json_to_py(to_json(check_vertex_identity(p, x, k)));
          },
          py::arg("polygon"), py::arg("translates"), py::arg("k"));

    m.def("classify",
          [](const CSPolygon& p) { return json_to_py(to_json(classify(p))); }, py::arg("polygon"));

    m.def("case_lattices",
          [](const CSPolygon& p) { return json_to_py(to_json(case_lattices(p))); },
          py::arg("polygon"));

    m.def("gen_parallelogram",
          [](const std::pair<std::string, std::string>& e1,
             const std::pair<std::string, std::string>& e2) {
              return json_to_py(to_json(parallelogram(vec_from_pair(e1), vec_from_pair(e2))));
          });
    m.def("gen_hexagon",
          [](const std::pair<std::string, std::string>& v1,
             const std::pair<std::string, std::string>& v2,
             const std::pair<std::string, std::string>& v3) {
              return json_to_py(
                  to_json(hexagon(vec_from_pair(v1), vec_from_pair(v2), vec_from_pair(v3))));
          });
    m.def("gen_octagon1", [](const std::string& alpha) {
        return json_to_py(to_json(octagon_type1(parse_rational(alpha))));
    });
    m.def("gen_octagon2", [](const std::string& beta) {
        return json_to_py(to_json(octagon_type2(parse_rational(beta))));
    });
    m.def("gen_decagon", [](const std::pair<std::string, std::string>& v1) {
        return json_to_py(to_json(decagon_from_vertex(vec_from_pair(v1))));
    });

    m.def("polygon_from_json",
          [](const std::string& text) { return polygon_from_json(Json::parse(text)); });
    m.def("lattice_from_json",
          [](const std::string& text) { return lattice_from_json(Json::parse(text)); });
    m.def("translates_from_json",
          [](const std::string& text) { return translate_set_from_json(Json::parse(text)); });

    m.def("render_svg",
          [](const CSPolygon& p, const TranslateSet& x, const std::string& window,
             const std::string& mode) {
              RenderSpec spec;
              std::vector<Rational> parts;
              std::size_t begin = 0;
              for (int i = 0; i < 4; ++i) {
                  std::size_t comma = window.find(',', begin);
                  parts.push_back(parse_rational(
                      comma == std::string::npos ? window.substr(begin)
                                                 : window.substr(begin, comma - begin)));
                  begin = comma + 1;
              }
              spec.window = {parts[0], parts[1], parts[2], parts[3]};
              spec.mode = mode == "shade" ? RenderSpec::Mode::multiplicity_shade
                                          : RenderSpec::Mode::outline;
              return render_svg(p, x, spec);
          },
          py::arg("polygon"), py::arg("translates"), py::arg("window"),
          py::arg("mode") = "outline");
}
