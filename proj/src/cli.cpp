#include "tilekit/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <ostream>
#include <string>

#include "tilekit/arrangement.hpp"
#include "tilekit/bolle.hpp"
#include "tilekit/error.hpp"
#include "tilekit/families.hpp"
#include "tilekit/io.hpp"
#include "tilekit/local_structure.hpp"
#include "tilekit/render.hpp"

namespace tilekit::cli {

namespace {

Vec2 parse_vec(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        fail(ErrorKind::ParseError, "expected \"x,y\", got '" + text + "'");
    return {parse_rational(text.substr(0, comma)), parse_rational(text.substr(comma + 1))};
}

Box parse_window(const std::string& text) {
    std::vector<Rational> parts;
    std::size_t begin = 0;
    while (begin <= text.size()) {
        std::size_t comma = text.find(',', begin);
        std::string piece = comma == std::string::npos ? text.substr(begin)
                                                       : text.substr(begin, comma - begin);
        parts.push_back(parse_rational(piece));
        if (comma == std::string::npos) break;
        begin = comma + 1;
    }
    if (parts.size() != 4) fail(ErrorKind::ParseError, "expected \"x0,y0,x1,y1\"");
    return {parts[0], parts[1], parts[2], parts[3]};
}

CSPolygon load_polygon(const std::string& path) { return polygon_from_json(read_json_file(path)); }

// Either a full translate set or a bare lattice treated as offsets {(0,0)}.
TranslateSet load_translates(const std::string& translates_path, const std::string& lattice_path) {
    if (!translates_path.empty()) return translate_set_from_json(read_json_file(translates_path));
    if (!lattice_path.empty())
        return TranslateSet::plain(lattice_from_json(read_json_file(lattice_path)));
    fail(ErrorKind::ParseError, "need --translates or --lattice");
}

void emit(std::ostream& out, const std::string& path, const std::string& text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream file(path);
    if (!file) fail(ErrorKind::ParseError, "cannot write " + path);
    file << text;
}

void print_bolle_text(std::ostream& out, const BolleReport& report) {
    for (const EdgeBolleCheck& check : report.per_edge) {
        out << "edge G" << check.edge + 1 << ": ";
        if (check.interior_half_lattice_witness) {
            const Point& w = *check.interior_half_lattice_witness;
            out << "interior half-lattice point (" << rational_str(w.x) << ","
                << rational_str(w.y) << ")";
        } else {
            out << "no interior half-lattice point";
        }
        out << ", midpoint in (1/2)L: " << (check.midpoint_in_half_lattice ? "yes" : "no")
            << ", edge vector in L: " << (check.edge_is_lattice_vector ? "yes" : "no")
            << " -> " << (check.verdict ? "ok" : "FAIL") << "\n";
    }
    out << "area " << rational_str(report.area) << ", |det| " << rational_str(report.lattice_det);
    if (report.multiplicity) out << ", multiplicity " << *report.multiplicity;
    if (report.diagnostic) out << "\n" << *report.diagnostic;
    out << "\n" << (report.pass ? "PASS" : "FAIL") << "\n";
}

void print_verify_text(std::ostream& out, const MultiplicityReport& report) {
    out << "samples " << report.samples.size() << ", interior count min " << report.min_count
        << " max " << report.max_count << ", expected " << report.k_expected << ", area ratio "
        << rational_str(report.area_ratio) << "\n"
        << (report.pass ? "PASS" : "FAIL") << "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact-arithmetic toolkit for k-fold translative tilings by centrally "
                 "symmetric convex polygons",
                 "tilekit"};
    app.require_subcommand(1);

    std::string polygon_path, lattice_path, translates_path, out_path;
    std::string report_format = "text";
    std::string family, alpha, beta, vertex, point, e1, e2, v1, v2, v3;
    std::string window_text, mode_text = "outline";
    long k_value = 0;
    double stroke_width = 0.03, fill_opacity = 0.12;

    auto* gen = app.add_subcommand(
        "gen", "emit a family instance: polygon, lattice, expected multiplicity");
    gen->add_option("--family", family, "parallelogram|hexagon|octagon1|octagon2|decagon")
        ->required();
    gen->add_option("--alpha", alpha, "octagon1 parameter, 0 < alpha < 2/3");
    gen->add_option("--beta", beta, "octagon2 parameter, 0 < beta <= 1");
    gen->add_option("--vertex", vertex, "decagon seed vertex \"x,y\" inside W");
    gen->add_option("--e1", e1, "parallelogram edge vector \"x,y\"");
    gen->add_option("--e2", e2, "parallelogram edge vector \"x,y\"");
    gen->add_option("--v1", v1, "hexagon vertex \"x,y\"");
    gen->add_option("--v2", v2, "hexagon vertex \"x,y\"");
    gen->add_option("--v3", v3, "hexagon vertex \"x,y\"");
    gen->add_option("--out", out_path, "output file (default stdout)");

    auto* bolle = app.add_subcommand("bolle", "lattice-tile criterion check for polygon + lattice");
    bolle->add_option("--polygon", polygon_path)->required();
    bolle->add_option("--lattice", lattice_path)->required();
    bolle->add_option("--report", report_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* verify = app.add_subcommand(
        "verify", "exact k-fold verification over one fundamental domain");
    verify->add_option("--polygon", polygon_path)->required();
    verify->add_option("--translates", translates_path, "translate-set JSON");
    verify->add_option("--lattice", lattice_path, "bare lattice JSON, offsets {(0,0)}");
    verify->add_option("--k", k_value)->required();
    verify->add_option("--report", report_format, "json|text")
        ->check(CLI::IsMember({"json", "text"}));

    auto* multiplicity = app.add_subcommand("multiplicity", "covering counts at one point");
    multiplicity->add_option("--polygon", polygon_path)->required();
    multiplicity->add_option("--translates", translates_path);
    multiplicity->add_option("--lattice", lattice_path);
    multiplicity->add_option("--point", point, "\"x,y\"")->required();

    auto* wheel = app.add_subcommand("wheel", "adjacent-wheel decomposition at a tiling vertex");
    wheel->add_option("--polygon", polygon_path)->required();
    wheel->add_option("--translates", translates_path);
    wheel->add_option("--lattice", lattice_path);
    wheel->add_option("--vertex", vertex, "\"x,y\"")->required();

    auto* eq1 = app.add_subcommand(
        "eq1", "per-vertex phi + varphi = k identity table over one period");
    eq1->add_option("--polygon", polygon_path)->required();
    eq1->add_option("--translates", translates_path);
    eq1->add_option("--lattice", lattice_path);
    eq1->add_option("--k", k_value)->required();

    auto* classify_cmd = app.add_subcommand("classify", "recover family tag and parameter");
    classify_cmd->add_option("--polygon", polygon_path)->required();

    auto* cases = app.add_subcommand("cases", "candidate decagon lattice bases");
    cases->add_option("--polygon", polygon_path)->required();

    auto* render = app.add_subcommand("render", "SVG figure of the tiling");
    render->add_option("--polygon", polygon_path)->required();
    render->add_option("--translates", translates_path);
    render->add_option("--lattice", lattice_path);
    render->add_option("--window", window_text, "\"x0,y0,x1,y1\"")->required();
    render->add_option("--mode", mode_text, "outline|shade")
        ->check(CLI::IsMember({"outline", "shade"}));
    render->add_option("--out", out_path, "output file (default stdout)");
    render->add_option("--stroke-width", stroke_width);
    render->add_option("--fill-opacity", fill_opacity);

    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) {
            std::optional<FamilyInstance> instance;
            if (family == "parallelogram") {
                if (e1.empty() || e2.empty()) fail(ErrorKind::ParseError, "need --e1 and --e2");
                instance = parallelogram(parse_vec(e1), parse_vec(e2));
            } else if (family == "hexagon") {
                if (v1.empty() || v2.empty() || v3.empty())
                    fail(ErrorKind::ParseError, "need --v1, --v2, --v3");
                instance = hexagon(parse_vec(v1), parse_vec(v2), parse_vec(v3));
            } else if (family == "octagon1") {
                if (alpha.empty()) fail(ErrorKind::ParseError, "need --alpha");
                instance = octagon_type1(parse_rational(alpha));
            } else if (family == "octagon2") {
                if (beta.empty()) fail(ErrorKind::ParseError, "need --beta");
                instance = octagon_type2(parse_rational(beta));
            } else if (family == "decagon") {
                if (vertex.empty()) fail(ErrorKind::ParseError, "need --vertex");
                instance = decagon_from_vertex(parse_vec(vertex));
            } else {
                fail(ErrorKind::ParseError, "unknown family '" + family + "'");
            }
            emit(out, out_path, to_json(*instance).dump(2) + "\n");
            return 0;
        }
        if (bolle->parsed()) {
            BolleReport report =
                check_bolle(load_polygon(polygon_path), lattice_from_json(read_json_file(lattice_path)));
            if (report_format == "json")
                out << to_json(report).dump(2) << "\n";
            else
                print_bolle_text(out, report);
            return report.pass ? 0 : 1;
        }
        if (verify->parsed()) {
            MultiplicityReport report =
                verify_k_fold(load_polygon(polygon_path),
                              load_translates(translates_path, lattice_path), k_value);
            if (report_format == "json")
                out << to_json(report).dump(2) << "\n";
            else
                print_verify_text(out, report);
            return report.pass ? 0 : 1;
        }
        if (multiplicity->parsed()) {
            PointMultiplicity counts =
                multiplicity_at(load_polygon(polygon_path),
                                load_translates(translates_path, lattice_path), parse_vec(point));
            out << Json{{"interior", counts.interior}, {"boundary", counts.boundary}}.dump(2)
                << "\n";
            return 0;
        }
        if (wheel->parsed()) {
            CSPolygon polygon = load_polygon(polygon_path);
            TranslateSet x = load_translates(translates_path, lattice_path);
            Point v = parse_vec(vertex);
            Json report = to_json(wheels_at(polygon, x, v));
            report["vertex"] = to_json(v);
            report["varphi"] = vertex_star(polygon, x, v).in_interior_count;
            out << report.dump(2) << "\n";
            return 0;
        }
        if (eq1->parsed()) {
            VertexIdentityTable table = check_vertex_identity(
                load_polygon(polygon_path), load_translates(translates_path, lattice_path), k_value);
            out << to_json(table).dump(2) << "\n";
            return table.pass ? 0 : 1;
        }
        if (classify_cmd->parsed()) {
            Classification result = classify(load_polygon(polygon_path));
            out << to_json(result).dump(2) << "\n";
            return result.five_fold() ? 0 : 1;
        }
        if (cases->parsed()) {
            out << to_json(case_lattices(load_polygon(polygon_path))).dump(2) << "\n";
            return 0;
        }
        if (render->parsed()) {
            RenderSpec spec;
            spec.window = parse_window(window_text);
            if (mode_text == "outline")
                spec.mode = RenderSpec::Mode::outline;
            else if (mode_text == "shade")
                spec.mode = RenderSpec::Mode::multiplicity_shade;
            else
                fail(ErrorKind::ParseError, "mode must be outline or shade");
            spec.stroke_width = stroke_width;
            spec.fill_opacity = fill_opacity;
            emit(out, out_path,
                 render_svg(load_polygon(polygon_path),
                            load_translates(translates_path, lattice_path), spec));
            return 0;
        }
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace tilekit::cli
