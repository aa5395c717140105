#include "tilekit/bolle.hpp"

#include <cassert>

#include "tilekit/error.hpp"

namespace tilekit {

std::vector<Point> HalfLatticeProgression::points() const {
    std::vector<Point> out;
    out.reserve(static_cast<std::size_t>(count));
    Point p = start;
    for (long i = 0; i < count; ++i) {
        out.push_back(p);
        p += step;
    }
    return out;
}

namespace {

// Scales the rationals A, B, C by their common denominator.
void to_integer_equation(const Rational& qa, const Rational& qb, const Rational& qc,
                         Integer& a, Integer& b, Integer& c) {
    Integer common;
    mpz_lcm(common.get_mpz_t(), qa.get_den_mpz_t(), qb.get_den_mpz_t());
    mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), qc.get_den_mpz_t());
    a = qa.get_num() * (common / qa.get_den());
    b = qb.get_num() * (common / qb.get_den());
    c = qc.get_num() * (common / qc.get_den());
}

}  // namespace

HalfLatticeProgression half_lattice_points_on_segment(const Lattice& lattice,
                                                      const Segment& segment,
                                                      bool include_endpoints) {
    Vec2 d = segment.direction();
    if (d.is_zero()) fail(ErrorKind::DegenerateSegment, "segment endpoints coincide");

    // (z1*b1 + z2*b2)/2 lies on the supporting line iff
    //   z1*cross(b1,d) + z2*cross(b2,d) = 2*cross(a,d).
    Integer a, b, c;
    to_integer_equation(cross(lattice.b1(), d), cross(lattice.b2(), d),
                        2 * cross(segment.a, d), a, b, c);
    assert(a != 0 || b != 0);  // both zero would force a singular basis

    HalfLatticeProgression prog;
    Integer g, s, t;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!mpz_divisible_p(c.get_mpz_t(), g.get_mpz_t())) return prog;

    Integer scale = c / g;
    Rational z1(s * scale), z2(t * scale);
    Point q0 = Rational(1, 2) * (z1 * lattice.b1() + z2 * lattice.b2());
    Vec2 step = Rational(1, 2) * (Rational(b / g) * lattice.b1() - Rational(a / g) * lattice.b2());
    assert(!step.is_zero() && cross(step, d) == 0);

    // Segment parameter of q0 + n*step is linear in n; solve for the range.
    Rational dd = dot(d, d);
    Rational t0 = dot(q0 - segment.a, d) / dd;
    Rational dt = dot(step, d) / dd;
    Rational n_at_zero = -t0 / dt;
    Rational n_at_one = (1 - t0) / dt;
    Rational n_lo = std::min(n_at_zero, n_at_one);
    Rational n_hi = std::max(n_at_zero, n_at_one);
    Integer lo = ceil_to_integer(n_lo);
    Integer hi = floor_to_integer(n_hi);
    if (!include_endpoints) {
        if (lo <= hi && Rational(lo) == n_lo) ++lo;
        if (lo <= hi && Rational(hi) == n_hi) --hi;
    }
    if (lo > hi) return prog;

    Integer count = hi - lo + 1;
    assert(count.fits_slong_p());
    prog.count = count.get_si();
    prog.start = q0 + Rational(lo) * step;
    // Orient the progression along the segment direction.
    prog.step = dt > 0 ? step : -step;
    if (dt < 0) prog.start = q0 + Rational(hi) * step;
    return prog;
}

BolleReport check_bolle(const CSPolygon& polygon, const Lattice& lattice) {
    BolleReport report;
    report.area = polygon.area();
    report.lattice_det = lattice.abs_determinant();
    report.pass = true;
    int n = polygon.size();
    report.per_edge.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        EdgeBolleCheck check;
        check.edge = i;
        Segment edge = polygon.edge(i);
        HalfLatticeProgression prog = half_lattice_points_on_segment(lattice, edge, false);
        if (prog.count > 0) check.interior_half_lattice_witness = prog.start;
        check.midpoint_in_half_lattice = lattice.half_member(edge.midpoint());
        // Sign of the directed edge vector is irrelevant: Lambda = -Lambda.
        check.edge_is_lattice_vector = lattice.member(edge.direction());
        check.verdict = check.interior_half_lattice_witness.has_value() &&
                        (check.midpoint_in_half_lattice || check.edge_is_lattice_vector);
        report.pass = report.pass && check.verdict;
        report.per_edge.push_back(std::move(check));
    }
    if (report.pass) {
        Rational ratio = report.area / report.lattice_det;
        if (is_integer(ratio) && ratio > 0) {
            report.multiplicity = to_long(ratio);
        } else {
            report.pass = false;
            report.diagnostic = "edge conditions hold but area/|det| = " + rational_str(ratio) +
                                " is not a positive integer";
        }
    }
    return report;
}

}  // namespace tilekit
