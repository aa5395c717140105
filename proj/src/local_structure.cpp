#include "tilekit/local_structure.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <map>
#include <set>

#include "tilekit/error.hpp"

namespace tilekit {

VertexStar vertex_star(const CSPolygon& polygon, const TranslateSet& x, const Point& v) {
    VertexStar star;
    star.vertex = v;
    bool vertex_hit = false;
    for (const Vec2& t : overlapping_translates(polygon, x, Box{v.x, v.y, v.x, v.y})) {
        PointLocation loc = polygon.locate(v, t);
        switch (loc.kind) {
            case PointLocation::Kind::interior:
                ++star.in_interior_count;
                break;
            case PointLocation::Kind::vertex:
                vertex_hit = true;
                star.on_boundary.push_back(t);
                break;
            case PointLocation::Kind::edge_interior:
                // One edge per translate can hold v in its relative interior.
                ++star.edge_through_count;
                star.on_boundary.push_back(t);
                break;
            case PointLocation::Kind::exterior:
                break;
        }
    }
    if (!vertex_hit)
        fail(ErrorKind::NotAVertexOfTiling, "(" + rational_str(v.x) + "," + rational_str(v.y) +
                                                ") is not a translated vertex of the tiling");
    return star;
}

namespace {

// Canonical primitive integer vector with the ray's own orientation.
using DirKey = std::pair<Integer, Integer>;

DirKey direction_key(const Vec2& d) {
    assert(!d.is_zero());
    Integer common;
    mpz_lcm(common.get_mpz_t(), d.x.get_den_mpz_t(), d.y.get_den_mpz_t());
    Integer nx = d.x.get_num() * (common / d.x.get_den());
    Integer ny = d.y.get_num() * (common / d.y.get_den());
    Integer g;
    mpz_gcd(g.get_mpz_t(), nx.get_mpz_t(), ny.get_mpz_t());
    return {nx / g, ny / g};
}

bool same_ray(const Vec2& a, const Vec2& b) { return cross(a, b) == 0 && dot(a, b) > 0; }

// Counterclockwise angular sector of x measured from a:
// 0 same ray, 1 in (0,pi), 2 opposite ray, 3 in (pi,2pi).
int ccw_sector(const Vec2& a, const Vec2& x) {
    Rational c = cross(a, x);
    if (c > 0) return 1;
    if (c < 0) return 3;
    return dot(a, x) > 0 ? 0 : 2;
}

// Strict comparison of counterclockwise angles from a.
bool ccw_angle_less(const Vec2& a, const Vec2& u, const Vec2& v) {
    int su = ccw_sector(a, u);
    int sv = ccw_sector(a, v);
    if (su != sv) return su < sv;
    if (su == 0 || su == 2) return false;
    return cross(u, v) > 0;
}

// Reference direction r inside the half-open ccw arc (a -> b].
bool arc_counts(const Vec2& a, const Vec2& b, const Vec2& r) {
    if (same_ray(r, a)) return false;
    if (same_ray(r, b)) return true;
    return ccw_angle_less(a, r, b);
}

struct WheelEntry {
    Vec2 translate;
    Vec2 sweep_start;  // boundary ray the sweep starts from
    Vec2 sweep_end;   // boundary ray the sweep ends at
    DirKey start_key;
    DirKey end_key;
};

}  // namespace

WheelReport wheels_at(const CSPolygon& polygon, const TranslateSet& x, const Point& v) {
    VertexStar star = vertex_star(polygon, x, v);
    int m = polygon.half_size();

    std::vector<WheelEntry> entries;
    entries.reserve(star.on_boundary.size());
    for (const Vec2& t : star.on_boundary) {
        PointLocation loc = polygon.locate(v, t);
        WheelEntry entry;
        entry.translate = t;
        if (loc.kind == PointLocation::Kind::vertex) {
            entry.sweep_start = polygon.vertex(polygon.ccw_next(loc.index)) + t - v;
            entry.sweep_end = polygon.vertex(polygon.ccw_prev(loc.index)) + t - v;
        } else {
            // Inner angle pi: rays run along the edge both ways.
            Segment edge = polygon.edge(loc.index);
            bool forward_is_b = polygon.is_ccw();
            const Point& fwd = forward_is_b ? edge.b : edge.a;
            const Point& bwd = forward_is_b ? edge.a : edge.b;
            entry.sweep_start = fwd + t - v;
            entry.sweep_end = bwd + t - v;
        }
        // The translate's center direction sits strictly inside the sector
        // swept counterclockwise from sweep_start to sweep_end.
        Vec2 g = t - v;
        assert(arc_counts(entry.sweep_start, entry.sweep_end, g) && !same_ray(g, entry.sweep_end));
        entry.start_key = direction_key(entry.sweep_start);
        entry.end_key = direction_key(entry.sweep_end);
        entries.push_back(std::move(entry));
    }

    // The matching pairs each translate's end ray with a successor whose
    // start ray points the same way; a perfect pairing exists iff the per
    // direction counts balance.
    std::map<DirKey, std::deque<std::size_t>> by_sweep_start;
    std::map<DirKey, long> balance;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        by_sweep_start[entries[i].start_key].push_back(i);
        ++balance[entries[i].start_key];
        --balance[entries[i].end_key];
    }
    for (const auto& [key, count] : balance) {
        if (count != 0)
            fail(ErrorKind::WheelMatchingFailed,
                 "boundary rays at (" + rational_str(v.x) + "," + rational_str(v.y) +
                     ") admit no perfect cyclic matching");
    }

    const Vec2 reference(1, 0);
    WheelReport report;
    report.ell = star.edge_through_count;
    std::vector<bool> used(entries.size(), false);
    for (std::size_t seed = 0; seed < entries.size(); ++seed) {
        if (used[seed]) continue;
        auto& seed_queue = by_sweep_start[entries[seed].start_key];
        seed_queue.erase(std::find(seed_queue.begin(), seed_queue.end(), seed));
        used[seed] = true;

        Wheel wheel;
        std::size_t cur = seed;
        while (true) {
            wheel.translates.push_back(entries[cur].translate);
            wheel.winding += arc_counts(entries[cur].sweep_start, entries[cur].sweep_end, reference) ? 1 : 0;
            const DirKey& need = entries[cur].end_key;
            auto queue_it = by_sweep_start.find(need);
            if (queue_it == by_sweep_start.end() || queue_it->second.empty()) {
                // Balanced degrees strand a walk only back at its seed ray.
                if (need != entries[seed].start_key)
                    fail(ErrorKind::WheelMatchingFailed, "wheel walk stranded off its seed");
                break;
            }
            cur = queue_it->second.front();
            queue_it->second.pop_front();
            used[cur] = true;
        }
        report.phi += wheel.winding;
        report.wheels.push_back(std::move(wheel));
    }

    // phi = kappa*(m-1)/2 + ell/2 with kappa a positive integer.
    long numerator = 2 * report.phi - report.ell;
    if (numerator <= 0 || numerator % (m - 1) != 0)
        fail(ErrorKind::Lemma2Violation,
             "phi = " + std::to_string(report.phi) + ", ell = " + std::to_string(report.ell) +
                 " admit no positive integer kappa for m = " + std::to_string(m));
    report.kappa = numerator / (m - 1);
    return report;
}

std::vector<Point> tiling_vertices_in_region(const CSPolygon& polygon, const TranslateSet& x,
                                             const Box& region) {
    std::set<Point, Vec2Less> reduced;
    for (const Vec2& t : overlapping_translates(polygon, x, region)) {
        for (const Point& vertex : polygon.vertices()) {
            Point p = vertex + t;
            if (!region.contains(p)) continue;
            reduced.insert(x.lattice.reduce_mod(p));
        }
    }
    return {reduced.begin(), reduced.end()};
}

VertexIdentityTable check_vertex_identity(const CSPolygon& polygon, const TranslateSet& x,
                                          long k) {
    return check_vertex_identity(polygon, x, k, x.lattice.fundamental_bounding_box());
}

VertexIdentityTable check_vertex_identity(const CSPolygon& polygon, const TranslateSet& x,
                                          long k, const Box& region) {
    VertexIdentityTable table;
    table.k = k;
    table.pass = true;
    for (const Point& v : tiling_vertices_in_region(polygon, x, region)) {
        WheelReport wheels = wheels_at(polygon, x, v);
        VertexStar star = vertex_star(polygon, x, v);
        table.rows.push_back({v, wheels.phi, star.in_interior_count});
        table.pass = table.pass && (wheels.phi + star.in_interior_count == k);
    }
    return table;
}

long min_incident_edge_support(const CSPolygon& polygon, const TranslateSet& x, const Point& v) {
    VertexStar star = vertex_star(polygon, x, v);
    long min_count = -1;
    for (const Vec2& t : star.on_boundary) {
        PointLocation loc = polygon.locate(v, t);
        if (loc.kind != PointLocation::Kind::vertex) continue;
        // The two edges of Gamma+X ending at v through this translate.
        const Point far_ends[2] = {polygon.vertex(loc.index - 1) + t,
                                   polygon.vertex(loc.index + 1) + t};
        for (const Point& far_end : far_ends) {
            long count = 0;
            for (const Vec2& other : star.on_boundary) {
                // v stays on the boundary of P+other; the edge minus v lies
                // inside iff its far end does (convexity).
                if (polygon.locate(far_end, other).is_interior()) ++count;
            }
            if (min_count < 0 || count < min_count) min_count = count;
        }
    }
    if (min_count < 0) fail(ErrorKind::NotAVertexOfTiling, "no incident edges at the vertex");
    return min_count;
}

}  // namespace tilekit
