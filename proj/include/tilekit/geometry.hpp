#pragma once

#include <utility>
#include <vector>

#include "tilekit/rational.hpp"

namespace tilekit {

struct Vec2 {
    Rational x;
    Rational y;

    Vec2() : x(0), y(0) {}
    Vec2(Rational px, Rational py) : x(std::move(px)), y(std::move(py)) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2& operator+=(const Vec2& o) {
        x += o.x;
        y += o.y;
        return *this;
    }
    Vec2& operator-=(const Vec2& o) {
        x -= o.x;
        y -= o.y;
        return *this;
    }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }
    bool operator!=(const Vec2& o) const { return !(*this == o); }
    bool is_zero() const { return x == 0 && y == 0; }
};

// Points and displacement vectors share one exact representation.
using Point = Vec2;

inline Vec2 operator*(const Rational& s, const Vec2& v) { return {s * v.x, s * v.y}; }

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

// Lexicographic (x, then y); used for deterministic ordering and set keys.
bool lex_less(const Vec2& a, const Vec2& b);

struct Vec2Less {
    bool operator()(const Vec2& a, const Vec2& b) const { return lex_less(a, b); }
};

// Closed axis-aligned rectangle [x0,x1] x [y0,y1].
struct Box {
    Rational x0, y0, x1, y1;

    bool valid() const { return x0 <= x1 && y0 <= y1; }
    bool has_area() const { return x0 < x1 && y0 < y1; }
    bool contains(const Point& p) const {
        return x0 <= p.x && p.x <= x1 && y0 <= p.y && p.y <= y1;
    }
    Box shifted(const Vec2& t) const { return {x0 + t.x, y0 + t.y, x1 + t.x, y1 + t.y}; }
};

Box bounding_box_of(const std::vector<Point>& points);

struct Segment {
    Point a;
    Point b;

    bool operator==(const Segment& o) const { return a == o.a && b == o.b; }
    Vec2 direction() const { return b - a; }
    Point midpoint() const { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }
};

struct SegmentIntersection {
    enum class Kind { none, point, overlap };
    Kind kind = Kind::none;
    Point point;      // kind == point
    Segment overlap;  // kind == overlap
};

// Exact intersection of two non-degenerate segments; collinear overlaps are
// returned as segments. Throws DegenerateSegment on zero-length input.
SegmentIntersection intersect_segments(const Segment& s, const Segment& t);

// Row-major 2x2 matrix [[a,b],[c,d]].
struct Mat2 {
    Rational a, b, c, d;

    static Mat2 identity() { return {1, 0, 0, 1}; }
    static Mat2 diagonal(const Rational& sx, const Rational& sy) { return {sx, 0, 0, sy}; }
    static Mat2 from_columns(const Vec2& u, const Vec2& v) { return {u.x, v.x, u.y, v.y}; }

    Vec2 apply(const Vec2& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    Rational det() const { return a * d - b * c; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    bool operator==(const Mat2& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
    Mat2 inverse() const;  // throws SingularMap
};

// p -> linear * p + translation; exact composition and inversion.
struct AffineMap {
    Mat2 linear = Mat2::identity();
    Vec2 translation;

    static AffineMap from_linear(const Mat2& m) { return {m, Vec2()}; }

    Vec2 apply(const Vec2& p) const { return linear.apply(p) + translation; }
    Rational det() const { return linear.det(); }
    bool operator==(const AffineMap& o) const {
        return linear == o.linear && translation == o.translation;
    }
    AffineMap compose(const AffineMap& inner) const;  // this after inner
    AffineMap inverse() const;                        // throws SingularMap
};

}  // namespace tilekit
