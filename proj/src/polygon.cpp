#include "tilekit/polygon.hpp"

#include <utility>

#include "tilekit/error.hpp"

namespace tilekit {

CSPolygon::CSPolygon(std::vector<Point> vertices) : vertices_(std::move(vertices)) {
    int n = size();
    int m = n / 2;
    for (int i = 0; i < m; ++i) {
        if (vertices_[i + m] != -vertices_[i])
            fail(ErrorKind::NotCentered,
                 "vertex " + std::to_string(i + m + 1) + " is not the negation of vertex " +
                     std::to_string(i + 1));
    }
    int sign = 0;
    for (int i = 0; i < n; ++i) {
        Vec2 e1 = vertices_[(i + 1) % n] - vertices_[i];
        Vec2 e2 = vertices_[(i + 2) % n] - vertices_[(i + 1) % n];
        if (e1.is_zero()) fail(ErrorKind::NotStrictlyConvex, "zero-length edge");
        Rational c = cross(e1, e2);
        if (c == 0)
            fail(ErrorKind::NotStrictlyConvex,
                 "collinear vertices around index " + std::to_string(i + 1));
        int s = c > 0 ? 1 : -1;
        if (sign == 0)
            sign = s;
        else if (s != sign)
            fail(ErrorKind::NotStrictlyConvex, "turn sign flips at index " + std::to_string(i + 1));
    }
    ccw_ = sign > 0;

    Rational twice;
    for (int i = 0; i < n; ++i) twice += cross(vertices_[i], vertices_[(i + 1) % n]);
    area_ = abs(twice) / 2;
    bbox_ = bounding_box_of(vertices_);
}

CSPolygon CSPolygon::validate(std::vector<Point> vertices) {
    if (vertices.size() < 4) fail(ErrorKind::TooFewVertices, "need at least 4 vertices");
    if (vertices.size() % 2 != 0) fail(ErrorKind::NotCentered, "odd vertex count");
    return CSPolygon(std::move(vertices));
}

Vec2 CSPolygon::midpoint_vector(int i) const {
    Point u = edge_midpoint(i);
    return u + u;  // u_i - u_{i+m} = 2 u_i by central symmetry
}

PointLocation CSPolygon::locate(const Point& p, const Vec2& t) const {
    Point q = p - t;
    int n = size();
    int on_edge = -1;
    for (int i = 0; i < n; ++i) {
        Rational c = cross(vertices_[(i + 1) % n] - vertices_[i], q - vertices_[i]);
        if (!ccw_) c = -c;
        if (c < 0) return {PointLocation::Kind::exterior, -1};
        if (c == 0) on_edge = i;
    }
    if (on_edge < 0) return {PointLocation::Kind::interior, -1};
    for (int i = 0; i < n; ++i)
        if (q == vertices_[i]) return {PointLocation::Kind::vertex, i};
    return {PointLocation::Kind::edge_interior, on_edge};
}

CSPolygon validate_polygon(std::vector<Point> vertices) {
    return CSPolygon::validate(std::move(vertices));
}

Rational shoelace_area(const CSPolygon& polygon) { return polygon.area(); }

PointLocation point_location(const CSPolygon& polygon, const Vec2& translate, const Point& p) {
    return polygon.locate(p, translate);
}

CSPolygon apply_affine(const AffineMap& map, const CSPolygon& polygon) {
    if (!map.translation.is_zero())
        fail(ErrorKind::NonCenteringTranslation,
             "translation would move the polygon off the origin");
    if (map.det() == 0) fail(ErrorKind::SingularMap, "affine map has zero determinant");
    std::vector<Point> mapped;
    mapped.reserve(polygon.vertices().size());
    for (const Point& v : polygon.vertices()) mapped.push_back(map.linear.apply(v));
    return CSPolygon::validate(std::move(mapped));
}

}  // namespace tilekit
