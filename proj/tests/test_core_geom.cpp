#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"
#include "tilekit/error.hpp"
#include "tilekit/polygon.hpp"

using namespace tilekit;
using tilekit::testing::rand_vec;
using tilekit::testing::random_cs_polygon;
using tilekit::testing::random_invertible_linear;
using tilekit::testing::seven_fold_octagon;

namespace {

Point pt(const char* x, const char* y) { return {parse_rational(x), parse_rational(y)}; }

CSPolygon unit_square() {
    return CSPolygon::validate({pt("1", "1"), pt("-1", "1"), pt("-1", "-1"), pt("1", "-1")});
}

CSPolygon d8_half() {
    return CSPolygon::validate({pt("7/8", "-2"), pt("-9/8", "-2"), pt("-11/8", "0"),
                                pt("-11/8", "1"), pt("-7/8", "2"), pt("9/8", "2"),
                                pt("11/8", "0"), pt("11/8", "-1")});
}

}  // namespace

TEST_CASE("rational parsing and emission") {
    CHECK(rational_str(parse_rational("-5/4")) == "-5/4");
    CHECK(rational_str(parse_rational("2/4")) == "1/2");
    CHECK(rational_str(parse_rational("5/-4")) == "-5/4");
    CHECK(rational_str(parse_rational(" 7 ")) == "7");
    CHECK(parse_rational("3") == Rational(3));
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("abc"), Error);
    CHECK_THROWS_AS(parse_rational(""), Error);
    CHECK(floor_to_integer(parse_rational("-5/4")) == -2);
    CHECK(ceil_to_integer(parse_rational("-5/4")) == -1);
}

TEST_CASE("validate_polygon accepts the squares and octagons it should") {
    CSPolygon square = unit_square();
    CHECK(square.half_size() == 2);
    CHECK(square.is_ccw());

    CSPolygon oct = d8_half();
    CHECK(oct.half_size() == 4);
    CHECK_FALSE(oct.is_ccw());  // the octagon families enumerate clockwise
}

TEST_CASE("validate_polygon rejections") {
    CHECK_THROWS_AS(CSPolygon::validate({pt("1", "0"), pt("-1", "0")}), Error);
    // not centered
    CHECK_THROWS_AS(
        CSPolygon::validate({pt("1", "1"), pt("-1", "1"), pt("-1", "-1"), pt("1", "0")}), Error);
    // non-convex order / collinear run
    CHECK_THROWS_AS(CSPolygon::validate({pt("1", "0"), pt("2", "0"), pt("0", "1"), pt("-1", "0"),
                                         pt("-2", "0"), pt("0", "-1")}),
                    Error);
    try {
        CSPolygon::validate({pt("1", "0"), pt("2", "0"), pt("0", "1"), pt("-1", "0"),
                             pt("-2", "0"), pt("0", "-1")});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotStrictlyConvex);
    }
    // odd count
    CHECK_THROWS_AS(CSPolygon::validate({pt("1", "0"), pt("0", "1"), pt("-1", "0")}), Error);
}

TEST_CASE("shoelace areas") {
    CHECK(unit_square().area() == 4);
    CHECK(d8_half().area() == 10);
    CHECK(seven_fold_octagon().area() == 7);
}

TEST_CASE("point location against the named examples") {
    CSPolygon square = unit_square();
    CHECK(square.locate(pt("0", "0")).kind == PointLocation::Kind::interior);

    PointLocation edge_hit = square.locate(pt("1", "0"));
    CHECK(edge_hit.kind == PointLocation::Kind::edge_interior);
    CHECK(edge_hit.index == 3);  // G4 runs from v4 back to v1

    PointLocation vertex_hit = d8_half().locate(pt("7/8", "-2"));
    CHECK(vertex_hit.kind == PointLocation::Kind::vertex);
    CHECK(vertex_hit.index == 0);

    CHECK(square.locate(pt("3", "0")).kind == PointLocation::Kind::exterior);
    CHECK(square.locate(pt("0", "0"), Vec2(5, 5)).kind == PointLocation::Kind::exterior);
}

TEST_CASE("point location agrees with the half-plane oracle") {
    for (int trial = 0; trial < 60; ++trial) {
        CSPolygon poly = random_cs_polygon(static_cast<int>(tilekit::testing::rand_int(2, 5)));
        Point p = rand_vec(8, 3);
        PointLocation loc = poly.locate(p);

        int n = poly.size();
        bool any_zero = false, any_neg = false;
        for (int i = 0; i < n; ++i) {
            Rational c = cross(poly.vertex(i + 1) - poly.vertex(i), p - poly.vertex(i));
            if (!poly.is_ccw()) c = -c;
            any_zero = any_zero || c == 0;
            any_neg = any_neg || c < 0;
        }
        if (any_neg)
            CHECK(loc.kind == PointLocation::Kind::exterior);
        else if (any_zero)
            CHECK(loc.is_boundary());
        else
            CHECK(loc.kind == PointLocation::Kind::interior);
    }
}

TEST_CASE("segment intersection") {
    Segment cross1{pt("0", "0"), pt("2", "2")};
    Segment cross2{pt("0", "2"), pt("2", "0")};
    SegmentIntersection hit = intersect_segments(cross1, cross2);
    CHECK(hit.kind == SegmentIntersection::Kind::point);
    CHECK(hit.point == pt("1", "1"));

    SegmentIntersection miss =
        intersect_segments({pt("0", "0"), pt("1", "0")}, {pt("2", "0"), pt("3", "0")});
    CHECK(miss.kind == SegmentIntersection::Kind::none);

    SegmentIntersection overlap =
        intersect_segments({pt("0", "0"), pt("2", "0")}, {pt("1", "0"), pt("3", "0")});
    CHECK(overlap.kind == SegmentIntersection::Kind::overlap);
    CHECK(overlap.overlap.a == pt("1", "0"));
    CHECK(overlap.overlap.b == pt("2", "0"));

    CHECK_THROWS_AS(intersect_segments({pt("0", "0"), pt("0", "0")}, cross1), Error);
}

TEST_CASE("apply_affine examples") {
    CSPolygon oct = d8_half();
    CSPolygon same = apply_affine(AffineMap(), oct);
    CHECK(same.vertices() == oct.vertices());

    AffineMap stretch = AffineMap::from_linear(Mat2::diagonal(2, 1));
    CHECK(apply_affine(stretch, unit_square()).area() == 8);

    AffineMap shear = AffineMap::from_linear(Mat2{1, 1, 0, 1});
    CHECK(apply_affine(shear, oct).area() == 10);

    CHECK_THROWS_AS(apply_affine(AffineMap::from_linear(Mat2{1, 1, 1, 1}), oct), Error);
    AffineMap shifted;
    shifted.translation = Vec2(1, 0);
    CHECK_THROWS_AS(apply_affine(shifted, oct), Error);
}

TEST_CASE("edge vectors of any valid polygon close up") {
    for (int trial = 0; trial < 20; ++trial) {
        CSPolygon poly = random_cs_polygon(static_cast<int>(tilekit::testing::rand_int(2, 6)));
        Vec2 sum;
        for (int i = 0; i < poly.size(); ++i) sum += poly.edge(i).direction();
        CHECK(sum.is_zero());
    }
}

TEST_CASE("area scales by |det| under random linear maps") {
    for (int trial = 0; trial < 30; ++trial) {
        CSPolygon poly = random_cs_polygon(static_cast<int>(tilekit::testing::rand_int(2, 5)));
        Mat2 linear = random_invertible_linear();
        CSPolygon mapped = apply_affine(AffineMap::from_linear(linear), poly);
        CHECK(mapped.area() == abs(linear.det()) * poly.area());
    }
}

TEST_CASE("affine maps compose and invert exactly") {
    for (int trial = 0; trial < 20; ++trial) {
        AffineMap map{random_invertible_linear(), rand_vec(5, 3)};
        AffineMap inverse = map.inverse();
        Point p = rand_vec(7, 3);
        CHECK(inverse.apply(map.apply(p)) == p);
        CHECK(map.compose(inverse).apply(p) == p);
    }
}
