#include "tilekit/families.hpp"

#include <stdexcept>
#include <utility>

#include "tilekit/error.hpp"

namespace tilekit {

const char* family_tag_name(FamilyTag tag) {
    switch (tag) {
        case FamilyTag::parallelogram: return "parallelogram";
        case FamilyTag::hexagon: return "hexagon";
        case FamilyTag::octagon_type1: return "octagon1";
        case FamilyTag::octagon_type2: return "octagon2";
        case FamilyTag::decagon: return "decagon";
    }
    return "?";
}

namespace {

// Every generator vouches for its own constants before returning them.
FamilyInstance checked_instance(FamilyTag tag, CSPolygon polygon, Lattice lattice, long expected_k,
                                std::optional<Rational> parameter = std::nullopt,
                                std::optional<Point> seed_vertex = std::nullopt) {
    BolleReport report = check_bolle(polygon, lattice);
    if (!report.pass || report.multiplicity != expected_k)
        throw std::logic_error(std::string("family constant failed its own Bolle check: ") +
                               family_tag_name(tag));
    return {tag, std::move(polygon), std::move(lattice), expected_k, std::move(parameter),
            std::move(seed_vertex)};
}

}  // namespace

FamilyInstance parallelogram(const Vec2& e1, const Vec2& e2) {
    if (cross(e1, e2) == 0) fail(ErrorKind::DegenerateEdges, "edge vectors are collinear");
    Rational half(1, 2);
    Point c1 = half * (e1 + e2);
    Point c2 = half * (e2 - e1);
    CSPolygon polygon = CSPolygon::validate({c1, c2, -c1, -c2});
    return checked_instance(FamilyTag::parallelogram, std::move(polygon), Lattice(e1, e2), 1);
}

FamilyInstance hexagon(const Point& v1, const Point& v2, const Point& v3) {
    CSPolygon polygon = CSPolygon::validate({v1, v2, v3, -v1, -v2, -v3});
    Lattice lattice(v1 + v2, v2 + v3);  // a_1 and a_2
    return checked_instance(FamilyTag::hexagon, std::move(polygon), std::move(lattice), 1);
}

FamilyInstance octagon_type1(const Rational& alpha) {
    if (!(0 < alpha && alpha < Rational(2, 3)))
        fail(ErrorKind::ParameterOutOfRange, "alpha must lie in (0, 2/3), got " +
                                                 rational_str(alpha));
    Point v1(Rational(3, 2) - Rational(5, 4) * alpha, -2);
    Point v2(Rational(-1, 2) - Rational(5, 4) * alpha, -2);
    Point v3(alpha / 4 - Rational(3, 2), 0);
    Point v4(alpha / 4 - Rational(3, 2), 1);
    CSPolygon polygon = CSPolygon::validate({v1, v2, v3, v4, -v1, -v2, -v3, -v4});
    Lattice lattice(Vec2(2, 0), Vec2(1 + alpha / 2, 1));
    return checked_instance(FamilyTag::octagon_type1, std::move(polygon), std::move(lattice), 5,
                            alpha);
}

FamilyInstance octagon_type2(const Rational& beta) {
    if (!(0 < beta && beta <= 1))
        fail(ErrorKind::ParameterOutOfRange, "beta must lie in (0, 1], got " + rational_str(beta));
    Point v1(2 - beta, -3);
    Point v2(-beta, -3);
    Point v3(-2, -1);
    Point v4(-2, 1);
    CSPolygon polygon = CSPolygon::validate({v1, v2, v3, v4, -v1, -v2, -v3, -v4});
    Lattice lattice(Vec2(2, 0), Vec2(1 + beta / 2, 2));
    return checked_instance(FamilyTag::octagon_type2, std::move(polygon), std::move(lattice), 5,
                            beta);
}

Lattice printed_octagon_type2_basis(const Rational& beta) {
    return Lattice(Vec2(2, 0), Vec2(1 + beta / 2, 1));
}

const std::array<Point, 4>& w_quadrilateral() {
    static const std::array<Point, 4> corners = {
        Point(-1, 2), Point(-1, Rational(3, 2)), Point(Rational(-4, 3), Rational(4, 3)),
        Point(Rational(-3, 2), Rational(3, 2))};
    return corners;
}

bool inside_w_quadrilateral(const Point& p) {
    const auto& w = w_quadrilateral();
    // Corners run clockwise; strict interior means every turn stays negative.
    for (std::size_t i = 0; i < w.size(); ++i) {
        const Point& a = w[i];
        const Point& b = w[(i + 1) % w.size()];
        if (cross(b - a, p - a) >= 0) return false;
    }
    return true;
}

const std::array<Point, 5>& canonical_decagon_midpoints() {
    static const std::array<Point, 5> midpoints = {Point(0, 2), Point(2, 2), Point(3, 1),
                                                   Point(3, 0), Point(2, -1)};
    return midpoints;
}

FamilyInstance decagon_from_vertex(const Point& v1) {
    if (!inside_w_quadrilateral(v1))
        fail(ErrorKind::VertexNotInW, "(" + rational_str(v1.x) + "," + rational_str(v1.y) +
                                          ") is not strictly inside the W quadrilateral");
    const auto& u = canonical_decagon_midpoints();
    std::vector<Point> vertices;
    vertices.reserve(10);
    vertices.push_back(v1);
    for (int i = 0; i < 9; ++i) {
        Point mid = i < 5 ? u[i] : -u[i - 5];
        vertices.push_back(mid + mid - vertices.back());  // reflect across u_i
    }
    Point closure = -u[4] - u[4] - vertices.back();  // v11 = 2*u10 - v10
    if (closure != vertices.front())
        fail(ErrorKind::ChainDoesNotClose, "midpoint reflection chain failed to close");
    CSPolygon polygon = CSPolygon::validate(std::move(vertices));
    // Basis {a_3, a_2 + a_5} = {(6,2), (8,2)}.
    Lattice lattice(Vec2(6, 2), Vec2(8, 2));
    return checked_instance(FamilyTag::decagon, std::move(polygon), std::move(lattice), 5,
                            std::nullopt, v1);
}

std::array<Vec2, 5> midpoint_vectors(const CSPolygon& decagon) {
    if (decagon.half_size() != 5)
        fail(ErrorKind::WrongGonality,
             "need a decagon, got a " + std::to_string(decagon.size()) + "-gon");
    std::array<Vec2, 5> a;
    for (int i = 0; i < 5; ++i) a[i] = decagon.midpoint_vector(i);
    return a;
}

Vec2 midpoint_alternating_sum(const CSPolygon& decagon) {
    std::array<Vec2, 5> a = midpoint_vectors(decagon);
    return a[0] - a[1] + a[2] - a[3] + a[4];
}

bool midpoint_alternating_sum_is_zero(const CSPolygon& decagon) {
    return midpoint_alternating_sum(decagon).is_zero();
}

std::vector<CaseLattice> case_lattices(const CSPolygon& decagon) {
    std::array<Vec2, 5> a = midpoint_vectors(decagon);
    const std::pair<const char*, std::pair<Vec2, Vec2>> bases[5] = {
        {"i", {a[0], a[2] - a[3]}},
        {"ii", {a[2], a[1] + a[4]}},
        {"iii", {a[3], a[0] - a[1]}},
        {"iv", {a[2], a[0] + a[4]}},
        {"v", {a[4], a[1] - a[3]}},
    };
    std::vector<CaseLattice> out;
    out.reserve(5);
    for (const auto& [label, basis] : bases) {
        CaseLattice entry;
        entry.label = label;
        entry.e1 = basis.first;
        entry.e2 = basis.second;
        entry.degenerate = cross(entry.e1, entry.e2) == 0;
        if (!entry.degenerate) {
            BolleReport report = check_bolle(decagon, Lattice(entry.e1, entry.e2));
            if (report.pass) entry.bolle_k = report.multiplicity;
        }
        out.push_back(std::move(entry));
    }
    return out;
}

namespace {

// Vertex sequence for one of the dihedral relabelings of the input.
std::vector<Point> relabeled_vertices(const CSPolygon& polygon, int rotation, bool reflected) {
    int n = polygon.size();
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        out.push_back(polygon.vertex(reflected ? rotation - i : rotation + i));
    return out;
}

struct OctagonConditions {
    bool matches = false;
    Rational parameter;
};

// Normal form one: y5-y4 = y4-y3, y3-y2 = 2(y4-y3), x6-x5 = 2(x7-x6)+3(x5-x4);
// parameter alpha = 2(x5-x4)/(x6-x5). Indices are 1-based labels.
OctagonConditions octagon_conditions_type1(const std::vector<Point>& q) {
    auto x = [&](int i) { return q[static_cast<std::size_t>(i - 1)].x; };
    auto y = [&](int i) { return q[static_cast<std::size_t>(i - 1)].y; };
    OctagonConditions result;
    if (y(5) - y(4) != y(4) - y(3)) return result;
    if (y(3) - y(2) != 2 * (y(4) - y(3))) return result;
    if (x(6) - x(5) != 2 * (x(7) - x(6)) + 3 * (x(5) - x(4))) return result;
    Rational den = x(6) - x(5);
    if (den == 0) return result;
    result.matches = true;
    result.parameter = 2 * (x(5) - x(4)) / den;
    return result;
}

// Normal form two: y3 = y8, y5-y4 = y4-y3, x8-x3 = 2(x1-x2);
// parameter beta = 2*x6/(x1-x2).
OctagonConditions octagon_conditions_type2(const std::vector<Point>& q) {
    auto x = [&](int i) { return q[static_cast<std::size_t>(i - 1)].x; };
    auto y = [&](int i) { return q[static_cast<std::size_t>(i - 1)].y; };
    OctagonConditions result;
    if (y(3) != y(8)) return result;
    if (y(5) - y(4) != y(4) - y(3)) return result;
    if (x(8) - x(3) != 2 * (x(1) - x(2))) return result;
    Rational den = x(1) - x(2);
    if (den == 0) return result;
    result.matches = true;
    result.parameter = 2 * x(6) / den;
    return result;
}

// The residual freedom after pinning the labeled G1 and G3 directions is a
// diagonal scaling; solve it from the first vertex and demand an exact
// vertex-for-vertex match with the canonical polygon.
std::optional<Mat2> solve_diagonal_match(const std::vector<Point>& q,
                                         const CSPolygon& canonical) {
    const Point& c1 = canonical.vertex(0);
    if (c1.x == 0 || c1.y == 0) return std::nullopt;
    Rational sx = q[0].x / c1.x;
    Rational sy = q[0].y / c1.y;
    if (sx == 0 || sy == 0) return std::nullopt;
    for (int i = 0; i < canonical.size(); ++i) {
        const Point& c = canonical.vertex(i);
        if (q[static_cast<std::size_t>(i)] != Point(sx * c.x, sy * c.y)) return std::nullopt;
    }
    return Mat2::diagonal(sx, sy);
}

std::optional<Classification> classify_octagon(const CSPolygon& polygon) {
    for (int reflected = 0; reflected < 2; ++reflected) {
        for (int rotation = 0; rotation < 8; ++rotation) {
            std::vector<Point> v = relabeled_vertices(polygon, rotation, reflected != 0);
            Vec2 d1 = v[1] - v[0];  // labeled G1
            Vec2 d3 = v[3] - v[2];  // labeled G3
            Mat2 frame = Mat2::from_columns(d1, d3);
            if (frame.det() == 0) continue;
            Mat2 normal = frame.inverse();
            std::vector<Point> q;
            q.reserve(v.size());
            for (const Point& p : v) q.push_back(normal.apply(p));

            OctagonConditions cond1 = octagon_conditions_type1(q);
            if (cond1.matches && 0 < cond1.parameter && cond1.parameter < Rational(2, 3)) {
                FamilyInstance canonical = octagon_type1(cond1.parameter);
                if (auto diag = solve_diagonal_match(q, canonical.polygon)) {
                    Classification result;
                    result.family = FamilyTag::octagon_type1;
                    result.parameter = cond1.parameter;
                    result.normalizing_map = AffineMap::from_linear(diag->inverse() * normal);
                    return result;
                }
            }
            OctagonConditions cond2 = octagon_conditions_type2(q);
            if (cond2.matches && 0 < cond2.parameter && cond2.parameter <= 1) {
                FamilyInstance canonical = octagon_type2(cond2.parameter);
                if (auto diag = solve_diagonal_match(q, canonical.polygon)) {
                    Classification result;
                    result.family = FamilyTag::octagon_type2;
                    result.parameter = cond2.parameter;
                    result.normalizing_map = AffineMap::from_linear(diag->inverse() * normal);
                    return result;
                }
            }
        }
    }
    return std::nullopt;
}

std::optional<Classification> classify_decagon(const CSPolygon& polygon) {
    const auto& target = canonical_decagon_midpoints();
    for (int reflected = 0; reflected < 2; ++reflected) {
        for (int rotation = 0; rotation < 10; ++rotation) {
            std::vector<Point> v = relabeled_vertices(polygon, rotation, reflected != 0);
            std::array<Point, 5> u;
            for (int i = 0; i < 5; ++i)
                u[static_cast<std::size_t>(i)] =
                    Rational(1, 2) * (v[static_cast<std::size_t>(i)] +
                                      v[static_cast<std::size_t>((i + 1) % 10)]);
            Mat2 frame = Mat2::from_columns(u[0], u[1]);
            if (frame.det() == 0) continue;
            // Send u1, u2 onto the canonical midpoints, then demand the rest.
            Mat2 map = Mat2::from_columns(target[0], target[1]) * frame.inverse();
            bool ok = true;
            for (int i = 2; i < 5 && ok; ++i)
                ok = map.apply(u[static_cast<std::size_t>(i)]) == target[static_cast<std::size_t>(i)];
            if (!ok) continue;
            Point seed = map.apply(v[0]);
            if (!inside_w_quadrilateral(seed))
                throw std::logic_error("canonical decagon vertex escaped the W quadrilateral");
            Classification result;
            result.family = FamilyTag::decagon;
            result.seed_vertex = seed;
            result.normalizing_map = AffineMap::from_linear(map);
            return result;
        }
    }
    return std::nullopt;
}

}  // namespace

Classification classify(const CSPolygon& polygon) {
    Classification result;
    int m = polygon.half_size();
    if (m == 2) {
        result.family = FamilyTag::parallelogram;
        result.normalizing_map = AffineMap();
        return result;
    }
    if (m == 3) {
        result.family = FamilyTag::hexagon;
        result.normalizing_map = AffineMap();
        return result;
    }
    if (m >= 6) {
        result.reason = "2m-gon with m >= 6 cannot tile five-fold (Lemma 3: tau >= 6)";
        return result;
    }
    if (m == 4) {
        if (auto hit = classify_octagon(polygon)) return *hit;
        result.reason = "no relabeling satisfies either octagon normal form";
        return result;
    }
    if (auto hit = classify_decagon(polygon)) return *hit;
    result.reason = "no relabeling matches the canonical decagon midpoint system";
    return result;
}

}  // namespace tilekit
