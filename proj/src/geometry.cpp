#include "tilekit/geometry.hpp"

#include <algorithm>

#include "tilekit/error.hpp"

namespace tilekit {

bool lex_less(const Vec2& a, const Vec2& b) {
    int cx = cmp(a.x, b.x);
    if (cx != 0) return cx < 0;
    return a.y < b.y;
}

Box bounding_box_of(const std::vector<Point>& points) {
    if (points.empty()) fail(ErrorKind::EmptyRegion, "bounding box of no points");
    Box box{points[0].x, points[0].y, points[0].x, points[0].y};
    for (const Point& p : points) {
        box.x0 = std::min(box.x0, p.x);
        box.x1 = std::max(box.x1, p.x);
        box.y0 = std::min(box.y0, p.y);
        box.y1 = std::max(box.y1, p.y);
    }
    return box;
}

SegmentIntersection intersect_segments(const Segment& s, const Segment& t) {
    Vec2 ds = s.direction();
    Vec2 dt = t.direction();
    if (ds.is_zero() || dt.is_zero())
        fail(ErrorKind::DegenerateSegment, "segment endpoints coincide");

    SegmentIntersection result;
    Vec2 w = t.a - s.a;
    Rational denom = cross(ds, dt);
    if (denom != 0) {
        Rational u = cross(w, dt) / denom;  // param on s
        Rational v = cross(w, ds) / denom;  // param on t
        if (u < 0 || u > 1 || v < 0 || v > 1) return result;
        result.kind = SegmentIntersection::Kind::point;
        result.point = s.a + u * ds;
        return result;
    }
    if (cross(w, ds) != 0) return result;  // parallel, different lines

    // Collinear: overlap interval in s-parameters.
    Rational dd = dot(ds, ds);
    Rational ta = dot(t.a - s.a, ds) / dd;
    Rational tb = dot(t.b - s.a, ds) / dd;
    if (ta > tb) std::swap(ta, tb);
    Rational lo = std::max(Rational(0), ta);
    Rational hi = std::min(Rational(1), tb);
    if (lo > hi) return result;
    if (lo == hi) {
        result.kind = SegmentIntersection::Kind::point;
        result.point = s.a + lo * ds;
        return result;
    }
    result.kind = SegmentIntersection::Kind::overlap;
    result.overlap = {s.a + lo * ds, s.a + hi * ds};
    return result;
}

Mat2 Mat2::inverse() const {
    Rational dt = det();
    if (dt == 0) fail(ErrorKind::SingularMap, "2x2 matrix is singular");
    return {d / dt, -b / dt, -c / dt, a / dt};
}

AffineMap AffineMap::compose(const AffineMap& inner) const {
    return {linear * inner.linear, linear.apply(inner.translation) + translation};
}

AffineMap AffineMap::inverse() const {
    Mat2 inv = linear.inverse();
    return {inv, -inv.apply(translation)};
}

}  // namespace tilekit
