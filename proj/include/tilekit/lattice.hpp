#pragma once

#include <vector>

#include "tilekit/geometry.hpp"

namespace tilekit {

// Two-dimensional lattice spanned by an ordered basis pair.
class Lattice {
public:
    Lattice(Vec2 b1, Vec2 b2);  // throws SingularBasis when det == 0

    const Vec2& b1() const { return b1_; }
    const Vec2& b2() const { return b2_; }
    const Rational& determinant() const { return det_; }      // signed
    const Rational& abs_determinant() const { return abs_det_; }

    // Rational coordinates (z1, z2) with p = z1*b1 + z2*b2.
    Vec2 solve(const Point& p) const;

    bool member(const Point& p) const;
    // p in (1/2)Lambda, i.e. 2p is a lattice member.
    bool half_member(const Point& p) const;

    // Unique representative in the half-open fundamental parallelogram
    // {s*b1 + t*b2 : 0 <= s,t < 1}.
    Point reduce_mod(const Point& p) const;

    // All lattice points in the closed box; complete by construction
    // (integer ranges derived from exact corner bounds).
    std::vector<Point> points_in_box(const Box& box) const;

    // Bounding rectangle of {0, b1, b2, b1+b2}.
    Box fundamental_bounding_box() const;

    bool operator==(const Lattice& o) const { return b1_ == o.b1_ && b2_ == o.b2_; }

private:
    Vec2 b1_, b2_;
    Rational det_, abs_det_;
};

// X = union over offsets o_j of (lattice + o_j). Offsets form a multiset:
// repeated entries are meaningful and double-count in every computation.
struct TranslateSet {
    Lattice lattice;
    std::vector<Vec2> offsets;

    static TranslateSet plain(Lattice l) { return {std::move(l), {Vec2()}}; }
};

struct FundamentalDomain {
    Lattice lattice;

    bool contains(const Point& p) const { return lattice.reduce_mod(p) == p; }
    Box bounding_box() const { return lattice.fundamental_bounding_box(); }
};

}  // namespace tilekit
