#include "tilekit/lattice.hpp"

#include <algorithm>

#include "tilekit/error.hpp"

namespace tilekit {

Lattice::Lattice(Vec2 b1, Vec2 b2) : b1_(std::move(b1)), b2_(std::move(b2)) {
    det_ = cross(b1_, b2_);
    if (det_ == 0) fail(ErrorKind::SingularBasis, "basis vectors are collinear");
    abs_det_ = abs(det_);
}

Vec2 Lattice::solve(const Point& p) const {
    // p = z1*b1 + z2*b2  =>  z1 = cross(p,b2)/det, z2 = cross(b1,p)/det
    return {cross(p, b2_) / det_, cross(b1_, p) / det_};
}

bool Lattice::member(const Point& p) const {
    Vec2 z = solve(p);
    return is_integer(z.x) && is_integer(z.y);
}

bool Lattice::half_member(const Point& p) const { return member(p + p); }

Point Lattice::reduce_mod(const Point& p) const {
    Vec2 z = solve(p);
    Rational f1 = z.x - Rational(floor_to_integer(z.x));
    Rational f2 = z.y - Rational(floor_to_integer(z.y));
    return f1 * b1_ + f2 * b2_;
}

std::vector<Point> Lattice::points_in_box(const Box& box) const {
    if (!box.valid()) fail(ErrorKind::EmptyRegion, "empty box");
    const Point corners[4] = {{box.x0, box.y0}, {box.x1, box.y0}, {box.x0, box.y1}, {box.x1, box.y1}};
    Vec2 z0 = solve(corners[0]);
    Rational z1_min = z0.x, z1_max = z0.x, z2_min = z0.y, z2_max = z0.y;
    for (int i = 1; i < 4; ++i) {
        Vec2 z = solve(corners[i]);
        z1_min = std::min(z1_min, z.x);
        z1_max = std::max(z1_max, z.x);
        z2_min = std::min(z2_min, z.y);
        z2_max = std::max(z2_max, z.y);
    }
    // z1, z2 are linear in p, so their extremes over the box sit at corners.
    std::vector<Point> out;
    Integer lo1 = ceil_to_integer(z1_min), hi1 = floor_to_integer(z1_max);
    Integer lo2 = ceil_to_integer(z2_min), hi2 = floor_to_integer(z2_max);
    for (Integer i = lo1; i <= hi1; ++i) {
        for (Integer j = lo2; j <= hi2; ++j) {
            Point p = Rational(i) * b1_ + Rational(j) * b2_;
            if (box.contains(p)) out.push_back(p);
        }
    }
    return out;
}

Box Lattice::fundamental_bounding_box() const {
    return bounding_box_of({Point(), b1_, b2_, b1_ + b2_});
}

}  // namespace tilekit
