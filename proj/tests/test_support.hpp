#pragma once

#include <random>
#include <vector>

#include "tilekit/geometry.hpp"
#include "tilekit/polygon.hpp"

namespace tilekit::testing {

inline std::mt19937& rng() {
    static std::mt19937 engine(20240517u);  // fixed seed, reproducible suites
    return engine;
}

inline long rand_int(long lo, long hi) {
    std::uniform_int_distribution<long> dist(lo, hi);
    return dist(rng());
}

inline Rational rand_rational(long num_range = 9, long den_max = 4) {
    Rational q(rand_int(-num_range, num_range), rand_int(1, den_max));
    q.canonicalize();
    return q;
}

inline Vec2 rand_vec(long num_range = 9, long den_max = 4) {
    return {rand_rational(num_range, den_max), rand_rational(num_range, den_max)};
}

// Random centrally symmetric strictly convex 2m-gon: m generator vectors
// with pairwise distinct directions, folded into the upper half-plane and
// sorted by angle, then chained and centered (every cs convex polygon in
// the plane is a zonogon).
inline CSPolygon random_cs_polygon(int m) {
    std::vector<Vec2> gens;
    while (static_cast<int>(gens.size()) < m) {
        Vec2 g = rand_vec(6, 3);
        if (g.is_zero()) continue;
        if (g.y < 0 || (g.y == 0 && g.x < 0)) g = -g;
        bool parallel = false;
        for (const Vec2& h : gens) parallel = parallel || cross(g, h) == 0;
        if (!parallel) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(),
              [](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
    std::vector<Point> vertices;
    Point walk;
    vertices.push_back(walk);
    for (const Vec2& g : gens) {
        walk += g;
        vertices.push_back(walk);
    }
    Point center = Rational(1, 2) * walk;
    std::vector<Point> out;
    for (int i = 0; i < m; ++i) out.push_back(vertices[static_cast<std::size_t>(i)] - center);
    for (int i = 0; i < m; ++i) out.push_back(-out[static_cast<std::size_t>(i)]);
    return CSPolygon::validate(out);
}

// Same construction with small integer generators: vertices land in
// (1/2)Z^2, which makes random lattice hits common.
inline CSPolygon random_small_zonogon(int m) {
    std::vector<Vec2> gens;
    while (static_cast<int>(gens.size()) < m) {
        Vec2 g(Rational(rand_int(-2, 2)), Rational(rand_int(-2, 2)));
        if (g.is_zero()) continue;
        if (g.y < 0 || (g.y == 0 && g.x < 0)) g = -g;
        bool parallel = false;
        for (const Vec2& h : gens) parallel = parallel || cross(g, h) == 0;
        if (!parallel) gens.push_back(g);
    }
    std::sort(gens.begin(), gens.end(),
              [](const Vec2& a, const Vec2& b) { return cross(a, b) > 0; });
    std::vector<Point> vertices;
    Point walk;
    vertices.push_back(walk);
    for (const Vec2& g : gens) {
        walk += g;
        vertices.push_back(walk);
    }
    Point center = Rational(1, 2) * walk;
    std::vector<Point> out;
    for (int i = 0; i < m; ++i) out.push_back(vertices[static_cast<std::size_t>(i)] - center);
    for (int i = 0; i < m; ++i) out.push_back(-out[static_cast<std::size_t>(i)]);
    return CSPolygon::validate(out);
}

// Random invertible linear map with small rational entries.
inline Mat2 random_invertible_linear() {
    while (true) {
        Mat2 m{rand_rational(4, 3), rand_rational(4, 3), rand_rational(4, 3), rand_rational(4, 3)};
        if (m.det() != 0) return m;
    }
}

// Product of elementary shears (unimodular) times a positive diagonal.
inline Mat2 random_unimodular_with_scaling() {
    Mat2 m = Mat2::identity();
    int steps = static_cast<int>(rand_int(1, 4));
    for (int i = 0; i < steps; ++i) {
        Rational a(rand_int(-3, 3));
        m = (rand_int(0, 1) ? Mat2{1, a, 0, 1} : Mat2{1, 0, a, 1}) * m;
    }
    Rational sx = make_rational(rand_int(1, 5), rand_int(1, 3));
    Rational sy = make_rational(rand_int(1, 5), rand_int(1, 3));
    return Mat2::diagonal(sx, sy) * m;
}

// The paragraph-one octagon (1,0),(2,0),(3,1),(3,2),(2,3),(1,3),(0,2),(0,1)
// recentered at the origin; a seven-fold tile for the integer lattice.
inline CSPolygon seven_fold_octagon() {
    const long raw[8][2] = {{1, 0}, {2, 0}, {3, 1}, {3, 2}, {2, 3}, {1, 3}, {0, 2}, {0, 1}};
    std::vector<Point> vertices;
    for (const auto& v : raw)
        vertices.emplace_back(Rational(2 * v[0] - 3, 2), Rational(2 * v[1] - 3, 2));
    return CSPolygon::validate(vertices);
}

}  // namespace tilekit::testing
