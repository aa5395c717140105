#pragma once

#include <vector>

#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

// All translation vectors t in X whose translate P+t can meet the region,
// derived from exact bounding-box arithmetic. A superset is allowed, misses
// are not. Multiset duplicates are preserved; output is sorted.
std::vector<Vec2> overlapping_translates(const CSPolygon& polygon, const TranslateSet& x,
                                         const Box& region);

struct PointMultiplicity {
    long interior = 0;
    long boundary = 0;
};

// Exact count of translates containing p in their interior / on their
// boundary, honoring offset multiplicity.
PointMultiplicity multiplicity_at(const CSPolygon& polygon, const TranslateSet& x,
                                  const Point& p);

// One interior sample point per face of the segment arrangement restricted
// to the region: vertical slabs between breakpoint x-values (segment
// endpoints and pairwise intersections), then midpoints of the crossing
// gaps at each slab's midpoint abscissa. No emitted point lies on any
// segment. Throws EmptyRegion unless the region has positive area.
std::vector<Point> slab_sample_points(const std::vector<Segment>& segments, const Box& region);

struct MultiplicitySample {
    Point point;
    long interior_count = 0;

    bool operator==(const MultiplicitySample& o) const {
        return point == o.point && interior_count == o.interior_count;
    }
};

struct MultiplicityReport {
    long k_expected = 0;
    Rational area_ratio;  // area(P) * |offsets| / |det|
    std::vector<MultiplicitySample> samples;
    long min_count = 0;
    long max_count = 0;
    bool pass = false;

    bool operator==(const MultiplicityReport& o) const {
        return k_expected == o.k_expected && area_ratio == o.area_ratio &&
               samples == o.samples && min_count == o.min_count && max_count == o.max_count &&
               pass == o.pass;
    }
};

// Ground-truth verifier. Samples one point per arrangement face inside the
// bounding rectangle of one fundamental domain of X.lattice and counts the
// covering multiplicity exactly. Multiplicity is constant on every open face
// and Lambda-periodic, so constant k on all faces of a region containing a
// fundamental domain, together with the area identity
// k * |det| = area(P) * |offsets|, is equivalent to a k-fold tiling.
MultiplicityReport verify_k_fold(const CSPolygon& polygon, const TranslateSet& x, long k);

}  // namespace tilekit
