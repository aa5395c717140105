#include "tilekit/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "tilekit/error.hpp"
#include "tilekit/parallel.hpp"

namespace tilekit {

std::vector<Vec2> overlapping_translates(const CSPolygon& polygon, const TranslateSet& x,
                                         const Box& region) {
    if (!region.valid()) fail(ErrorKind::EmptyRegion, "invalid region");
    const Box& pbb = polygon.bounding_box();
    // P+t meets the region only if t lies in region (-) bbox(P).
    Box tbox{region.x0 - pbb.x1, region.y0 - pbb.y1, region.x1 - pbb.x0, region.y1 - pbb.y0};
    std::vector<Vec2> out;
    for (const Vec2& offset : x.offsets) {
        for (const Point& z : x.lattice.points_in_box(tbox.shifted(-offset)))
            out.push_back(z + offset);
    }
    std::stable_sort(out.begin(), out.end(), Vec2Less{});
    return out;
}

PointMultiplicity multiplicity_at(const CSPolygon& polygon, const TranslateSet& x,
                                  const Point& p) {
    PointMultiplicity counts;
    for (const Vec2& t : overlapping_translates(polygon, x, Box{p.x, p.y, p.x, p.y})) {
        PointLocation loc = polygon.locate(p, t);
        if (loc.is_interior())
            ++counts.interior;
        else if (loc.is_boundary())
            ++counts.boundary;
    }
    return counts;
}

std::vector<Point> slab_sample_points(const std::vector<Segment>& segments, const Box& region) {
    if (!region.has_area()) fail(ErrorKind::EmptyRegion, "region must have positive area");

    std::set<Rational> xs{region.x0, region.x1};
    auto add_breakpoint = [&](const Rational& v) {
        if (region.x0 < v && v < region.x1) xs.insert(v);
    };
    for (const Segment& s : segments) {
        add_breakpoint(s.a.x);
        add_breakpoint(s.b.x);
    }
    std::vector<Box> bounds;
    bounds.reserve(segments.size());
    for (const Segment& s : segments)
        bounds.push_back({std::min(s.a.x, s.b.x), std::min(s.a.y, s.b.y),
                          std::max(s.a.x, s.b.x), std::max(s.a.y, s.b.y)});
    for (std::size_t i = 0; i < segments.size(); ++i) {
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            if (bounds[i].x1 < bounds[j].x0 || bounds[j].x1 < bounds[i].x0 ||
                bounds[i].y1 < bounds[j].y0 || bounds[j].y1 < bounds[i].y0)
                continue;
            SegmentIntersection hit = intersect_segments(segments[i], segments[j]);
            if (hit.kind == SegmentIntersection::Kind::point) {
                add_breakpoint(hit.point.x);
            } else if (hit.kind == SegmentIntersection::Kind::overlap) {
                add_breakpoint(hit.overlap.a.x);
                add_breakpoint(hit.overlap.b.x);
            }
        }
    }

    std::vector<Point> samples;
    auto it = xs.begin();
    Rational prev = *it;
    for (++it; it != xs.end(); ++it) {
        Rational mid_x = (prev + *it) / 2;
        prev = *it;
        // Crossing ordinates at mid_x; mid_x is never a breakpoint, so no
        // vertical segment and no endpoint can sit on this abscissa.
        std::set<Rational> ys{region.y0, region.y1};
        for (const Segment& s : segments) {
            const Rational& ax = s.a.x;
            const Rational& bx = s.b.x;
            bool crosses = (ax < mid_x && mid_x < bx) || (bx < mid_x && mid_x < ax);
            if (!crosses) continue;
            Rational y = s.a.y + (mid_x - ax) * (s.b.y - s.a.y) / (bx - ax);
            if (region.y0 < y && y < region.y1) ys.insert(y);
        }
        auto yit = ys.begin();
        Rational prev_y = *yit;
        for (++yit; yit != ys.end(); ++yit) {
            samples.emplace_back(mid_x, (prev_y + *yit) / 2);
            prev_y = *yit;
        }
    }
    return samples;
}

namespace {

// Clips a segment to the closed box; returns false when at most one point
// survives (single touch points separate nothing inside the region).
bool clip_segment_to_box(const Segment& s, const Box& box, Segment& out) {
    Vec2 d = s.direction();
    Rational lo(0), hi(1);
    auto narrow = [&](const Rational& p0, const Rational& dp, const Rational& min_v,
                      const Rational& max_v) {
        if (dp == 0) return min_v <= p0 && p0 <= max_v;
        Rational t0 = (min_v - p0) / dp;
        Rational t1 = (max_v - p0) / dp;
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
        return true;
    };
    if (!narrow(s.a.x, d.x, box.x0, box.x1)) return false;
    if (!narrow(s.a.y, d.y, box.y0, box.y1)) return false;
    if (lo >= hi) return false;
    out = {s.a + lo * d, s.a + hi * d};
    return true;
}

struct SegmentLess {
    bool operator()(const Segment& s, const Segment& t) const {
        if (s.a != t.a) return lex_less(s.a, t.a);
        return lex_less(s.b, t.b);
    }
};

}  // namespace

MultiplicityReport verify_k_fold(const CSPolygon& polygon, const TranslateSet& x, long k) {
    if (k <= 0) fail(ErrorKind::ParseError, "k must be positive");
    MultiplicityReport report;
    report.k_expected = k;
    report.area_ratio =
        polygon.area() * Rational(static_cast<long>(x.offsets.size())) / x.lattice.abs_determinant();

    Box region = x.lattice.fundamental_bounding_box();
    std::vector<Vec2> translates = overlapping_translates(polygon, x, region);

    // Deduplicated edge segments clipped to the region; clipping keeps the
    // arrangement inside the region intact and keeps the slab pass small.
    std::set<Segment, SegmentLess> segment_set;
    for (const Vec2& t : translates) {
        for (int i = 0; i < polygon.size(); ++i) {
            Segment edge = polygon.edge(i);
            edge.a += t;
            edge.b += t;
            Segment clipped;
            if (!clip_segment_to_box(edge, region, clipped)) continue;
            if (lex_less(clipped.b, clipped.a)) std::swap(clipped.a, clipped.b);
            segment_set.insert(clipped);
        }
    }
    std::vector<Segment> segments(segment_set.begin(), segment_set.end());
    std::vector<Point> samples = slab_sample_points(segments, region);

    report.samples.resize(samples.size());
    std::vector<char> boundary_hit(samples.size(), 0);
    const Box& pbb = polygon.bounding_box();
    parallel_for(samples.size(), [&](std::size_t i) {
        const Point& p = samples[i];
        long interior = 0;
        for (const Vec2& t : translates) {
            if (p.x < pbb.x0 + t.x || p.x > pbb.x1 + t.x || p.y < pbb.y0 + t.y ||
                p.y > pbb.y1 + t.y)
                continue;
            PointLocation loc = polygon.locate(p, t);
            if (loc.is_interior()) ++interior;
            if (loc.is_boundary()) boundary_hit[i] = 1;
        }
        report.samples[i] = {p, interior};
    });
    // Samples are face-interior by construction.
    for (char hit : boundary_hit)
        if (hit) throw std::logic_error("slab sample landed on a translate boundary");

    if (report.samples.empty()) {
        report.pass = false;
        return report;
    }
    report.min_count = report.samples.front().interior_count;
    report.max_count = report.min_count;
    for (const MultiplicitySample& s : report.samples) {
        report.min_count = std::min(report.min_count, s.interior_count);
        report.max_count = std::max(report.max_count, s.interior_count);
    }
    report.pass = report.min_count == k && report.max_count == k && report.area_ratio == k;
    return report;
}

}  // namespace tilekit
