#pragma once

#include <vector>

#include "tilekit/geometry.hpp"

namespace tilekit {

struct PointLocation {
    enum class Kind { interior, exterior, vertex, edge_interior };
    Kind kind = Kind::exterior;
    int index = -1;  // vertex index or edge index for boundary hits

    bool is_interior() const { return kind == Kind::interior; }
    bool is_boundary() const {
        return kind == Kind::vertex || kind == Kind::edge_interior;
    }
};

// Centrally symmetric, strictly convex 2m-gon centered at the origin.
// Vertices keep the caller's cyclic order, clockwise or counterclockwise;
// handedness is tracked so the exact predicates work for both. Edge G_i
// runs from v_i to v_{i+1}, u_i is its midpoint and
// a_i = u_i - u_{i+m} = 2 u_i.
class CSPolygon {
public:
    // Sole entry point; throws TooFewVertices / NotCentered / NotStrictlyConvex.
    static CSPolygon validate(std::vector<Point> vertices);

    int size() const { return static_cast<int>(vertices_.size()); }
    int half_size() const { return size() / 2; }
    bool is_ccw() const { return ccw_; }
    const std::vector<Point>& vertices() const { return vertices_; }
    const Point& vertex(int i) const { return vertices_[wrap(i)]; }
    Segment edge(int i) const { return {vertex(i), vertex(i + 1)}; }
    Point edge_midpoint(int i) const { return edge(i).midpoint(); }
    Vec2 midpoint_vector(int i) const;  // a_i = 2 u_i
    const Rational& area() const { return area_; }
    const Box& bounding_box() const { return bbox_; }

    // Index stepping in counterclockwise sense regardless of storage order.
    int ccw_next(int i) const { return wrap(ccw_ ? i + 1 : i - 1); }
    int ccw_prev(int i) const { return wrap(ccw_ ? i - 1 : i + 1); }

    // Exact location of p relative to this polygon translated by t.
    PointLocation locate(const Point& p, const Vec2& t = Vec2()) const;

private:
    explicit CSPolygon(std::vector<Point> vertices);
    int wrap(int i) const {
        int n = size();
        int r = i % n;
        return r < 0 ? r + n : r;
    }

    std::vector<Point> vertices_;
    bool ccw_ = true;
    Rational area_;
    Box bbox_;
};

CSPolygon validate_polygon(std::vector<Point> vertices);
Rational shoelace_area(const CSPolygon& polygon);
PointLocation point_location(const CSPolygon& polygon, const Vec2& translate, const Point& p);

// Vertex-wise image; requires an invertible linear part and a zero
// translation so the image stays centered at the origin.
CSPolygon apply_affine(const AffineMap& map, const CSPolygon& polygon);

}  // namespace tilekit
