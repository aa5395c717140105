#include "tilekit/rational.hpp"

#include <cctype>

#include "tilekit/error.hpp"

namespace tilekit {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

namespace {

Integer parse_integer(const std::string& text) {
    if (text.empty()) fail(ErrorKind::ParseError, "empty integer literal");
    Integer value;
    if (mpz_set_str(value.get_mpz_t(), text.c_str(), 10) != 0)
        fail(ErrorKind::ParseError, "bad integer literal '" + text + "'");
    return value;
}

std::string strip(const std::string& text) {
    std::size_t lo = 0, hi = text.size();
    while (lo < hi && std::isspace(static_cast<unsigned char>(text[lo]))) ++lo;
    while (hi > lo && std::isspace(static_cast<unsigned char>(text[hi - 1]))) --hi;
    return text.substr(lo, hi - lo);
}

}  // namespace

Rational parse_rational(const std::string& text) {
    std::string s = strip(text);
    if (s.empty()) fail(ErrorKind::ParseError, "empty rational literal");
    auto slash = s.find('/');
    if (slash == std::string::npos) {
        return Rational(parse_integer(s));
    }
    Integer num = parse_integer(strip(s.substr(0, slash)));
    Integer den = parse_integer(strip(s.substr(slash + 1)));
    return make_rational(num, den);
}

std::string rational_str(const Rational& value) { return value.get_str(); }

Integer floor_to_integer(const Rational& value) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

Integer ceil_to_integer(const Rational& value) {
    Integer q;
    mpz_cdiv_q(q.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
    return q;
}

long to_long(const Rational& value) {
    if (!is_integer(value)) fail(ErrorKind::ParseError, "not an integer: " + rational_str(value));
    if (!value.get_num().fits_slong_p())
        fail(ErrorKind::ParseError, "integer out of range: " + rational_str(value));
    return value.get_num().get_si();
}

}  // namespace tilekit
