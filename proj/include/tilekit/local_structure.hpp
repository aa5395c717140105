#pragma once

#include <vector>

#include "tilekit/arrangement.hpp"
#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

// Local data of the tiling at a translated vertex v:
//   on_boundary        X^v, the translates with v on their boundary
//   in_interior_count  varphi(v), translates with v strictly inside
//   edge_through_count ell, translated edges with v in their relative
//                      interior, counted with multiset multiplicity
struct VertexStar {
    Point vertex;
    std::vector<Vec2> on_boundary;
    long in_interior_count = 0;
    long edge_through_count = 0;
};

// Throws NotAVertexOfTiling unless v is a translated vertex of P+X.
VertexStar vertex_star(const CSPolygon& polygon, const TranslateSet& x, const Point& v);

struct Wheel {
    std::vector<Vec2> translates;  // cyclic order around v
    long winding = 0;

    bool operator==(const Wheel& o) const {
        return translates == o.translates && winding == o.winding;
    }
};

// Wheel decomposition at v. phi is the total winding of all wheels; the
// decomposition phi = kappa*(m-1)/2 + ell/2 must produce a positive integer
// kappa on any tiling. Windings are computed by counting passes of a fixed
// reference direction in the exact cyclic direction order (sign tests only,
// no angle arithmetic).
struct WheelReport {
    std::vector<Wheel> wheels;
    long phi = 0;
    long kappa = 0;
    long ell = 0;

    bool operator==(const WheelReport& o) const {
        return wheels == o.wheels && phi == o.phi && kappa == o.kappa && ell == o.ell;
    }
};

// Throws WheelMatchingFailed when X^v admits no perfect cyclic matching and
// Lemma2Violation when kappa fails to be a positive integer; both indicate
// that X is not a tiling near v.
WheelReport wheels_at(const CSPolygon& polygon, const TranslateSet& x, const Point& v);

struct VertexIdentityRow {
    Point vertex;
    long phi = 0;
    long varphi = 0;

    bool operator==(const VertexIdentityRow& o) const {
        return vertex == o.vertex && phi == o.phi && varphi == o.varphi;
    }
};

struct VertexIdentityTable {
    bool pass = false;
    long k = 0;
    std::vector<VertexIdentityRow> rows;

    bool operator==(const VertexIdentityTable& o) const {
        return pass == o.pass && k == o.k && rows == o.rows;
    }
};

// Checks phi(v) + varphi(v) = k at every vertex class of V+X in the region
// (default: bounding box of one fundamental domain). Vertices are reduced
// mod the lattice and deduplicated; rows are ordered by reduced coordinates.
VertexIdentityTable check_vertex_identity(const CSPolygon& polygon, const TranslateSet& x,
                                          long k);
VertexIdentityTable check_vertex_identity(const CSPolygon& polygon, const TranslateSet& x,
                                          long k, const Box& region);

// Distinct vertex classes of V+X meeting the region, reduced mod the lattice.
std::vector<Point> tiling_vertices_in_region(const CSPolygon& polygon, const TranslateSet& x,
                                             const Box& region);

// Minimum over the edges of Gamma+X ending at v of the number of translates
// that keep v on their boundary while containing the rest of the edge in
// their interior. On a verified tiling with m >= 4 this is at least
// ceil((m-3)/2).
long min_incident_edge_support(const CSPolygon& polygon, const TranslateSet& x, const Point& v);

}  // namespace tilekit
