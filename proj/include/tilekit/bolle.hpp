#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

// Points of (1/2)Lambda on a segment, as start + j*step for j in [0, count).
struct HalfLatticeProgression {
    Point start;
    Vec2 step;
    long count = 0;

    std::vector<Point> points() const;
};

// Solves one linear Diophantine equation (extended gcd) for the half-lattice
// points on the closed segment; never samples. With include_endpoints=false
// the range is restricted to the relative interior.
HalfLatticeProgression half_lattice_points_on_segment(const Lattice& lattice,
                                                      const Segment& segment,
                                                      bool include_endpoints = true);

struct EdgeBolleCheck {
    int edge = 0;  // 0-based index into the polygon's edge list
    std::optional<Point> interior_half_lattice_witness;
    bool midpoint_in_half_lattice = false;
    bool edge_is_lattice_vector = false;
    bool verdict = false;

    bool operator==(const EdgeBolleCheck& o) const {
        return edge == o.edge && interior_half_lattice_witness == o.interior_half_lattice_witness &&
               midpoint_in_half_lattice == o.midpoint_in_half_lattice &&
               edge_is_lattice_vector == o.edge_is_lattice_vector && verdict == o.verdict;
    }
};

struct BolleReport {
    bool pass = false;
    std::vector<EdgeBolleCheck> per_edge;
    std::optional<long> multiplicity;  // area / |det|, present iff pass
    Rational area;
    Rational lattice_det;  // |det|
    // Set when every edge condition holds but area/|det| is not a positive
    // integer; reported as a failure rather than asserted away.
    std::optional<std::string> diagnostic;

    bool operator==(const BolleReport& o) const {
        return pass == o.pass && per_edge == o.per_edge && multiplicity == o.multiplicity &&
               area == o.area && lattice_det == o.lattice_det && diagnostic == o.diagnostic;
    }
};

// Per edge G: (exists half-lattice point in the relative interior of G) AND
// (midpoint(G) in (1/2)Lambda OR the edge vector of G is a lattice vector).
// When all edges pass, the multiplicity is area / |det|.
BolleReport check_bolle(const CSPolygon& polygon, const Lattice& lattice);

}  // namespace tilekit
