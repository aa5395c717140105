#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "tilekit/bolle.hpp"
#include "tilekit/lattice.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit {

enum class FamilyTag { parallelogram, hexagon, octagon_type1, octagon_type2, decagon };

const char* family_tag_name(FamilyTag tag);

// A family polygon together with the lattice that tiles it. Constructors
// self-verify through check_bolle, so an invalid family constant can never
// escape this module.
struct FamilyInstance {
    FamilyTag tag;
    CSPolygon polygon;
    Lattice lattice;
    long expected_k = 0;
    std::optional<Rational> parameter;  // alpha or beta
    std::optional<Point> seed_vertex;   // decagon v1
};

FamilyInstance parallelogram(const Vec2& e1, const Vec2& e2);
FamilyInstance hexagon(const Point& v1, const Point& v2, const Point& v3);

// Octagon with v1=(3/2-5a/4,-2), v2=(-1/2-5a/4,-2), v3=(a/4-3/2,0),
// v4=(a/4-3/2,1) and negations; lattice <(2,0),(1+a/2,1)>; k = 5.
FamilyInstance octagon_type1(const Rational& alpha);  // 0 < alpha < 2/3

// Octagon with v1=(2-b,-3), v2=(-b,-3), v3=(-2,-1), v4=(-2,1) and
// negations; lattice <(2,0),(1+b/2,2)>; k = 5. The second basis vector
// (1+b/2,2) replaces a printed (1+b/2,1) that fails the area identity
// (area 20 over det 2); see printed_octagon_type2_basis.
FamilyInstance octagon_type2(const Rational& beta);  // 0 < beta <= 1

// The misprinted second basis vector, kept for the documented erratum demo.
Lattice printed_octagon_type2_basis(const Rational& beta);

// Decagon with edge midpoints (0,2),(2,2),(3,1),(3,0),(2,-1) and negations,
// built by the reflection chain v_{i+1} = 2u_i - v_i from a seed vertex v1
// strictly inside the W quadrilateral; lattice <(6,2),(8,2)>; k = 5.
FamilyInstance decagon_from_vertex(const Point& v1);

// W quadrilateral: w1=(-1,2), w2=(-1,3/2), w3=(-4/3,4/3), w4=(-3/2,3/2).
const std::array<Point, 4>& w_quadrilateral();
bool inside_w_quadrilateral(const Point& p);

// Canonical decagon edge midpoints u_1..u_5 (the other five are negations).
const std::array<Point, 5>& canonical_decagon_midpoints();

// a_i = u_i - u_{i+5} = 2 u_i in the polygon's own labeling; m must be 5.
std::array<Vec2, 5> midpoint_vectors(const CSPolygon& decagon);
// a1 - a2 + a3 - a4 + a5; identically zero for every valid cs decagon.
Vec2 midpoint_alternating_sum(const CSPolygon& decagon);
bool midpoint_alternating_sum_is_zero(const CSPolygon& decagon);

// The five candidate bases {a1, a3-a4}, {a3, a2+a5}, {a4, a1-a2},
// {a3, a1+a5}, {a5, a2-a4}; degenerate ones are flagged, the rest carry the
// Bolle multiplicity when the check passes.
struct CaseLattice {
    std::string label;  // "i" .. "v"
    Vec2 e1, e2;
    bool degenerate = false;
    std::optional<long> bolle_k;

    bool operator==(const CaseLattice& o) const {
        return label == o.label && e1 == o.e1 && e2 == o.e2 && degenerate == o.degenerate &&
               bolle_k == o.bolle_k;
    }
};
std::vector<CaseLattice> case_lattices(const CSPolygon& decagon);

struct Classification {
    std::optional<FamilyTag> family;  // empty => not a five-fold tile
    std::optional<Rational> parameter;
    std::optional<Point> seed_vertex;
    std::optional<AffineMap> normalizing_map;  // maps input onto the canonical polygon
    std::string reason;                        // set when rejected

    bool five_fold() const { return family.has_value(); }
    bool operator==(const Classification& o) const {
        return family == o.family && parameter == o.parameter && seed_vertex == o.seed_vertex &&
               normalizing_map == o.normalizing_map && reason == o.reason;
    }
};

// Recovers family tag, parameter, and the normalizing linear map for an
// arbitrary polygon, trying every cyclic relabeling and reflection; exact
// vertex matching against the rebuilt canonical polygon, no tolerances.
Classification classify(const CSPolygon& polygon);

}  // namespace tilekit
