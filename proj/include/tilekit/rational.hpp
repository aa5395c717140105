#pragma once

#include <gmpxx.h>

#include <string>

namespace tilekit {

// Every coordinate in the toolkit is an exact rational; no floating point
// participates in any decision. mpq_class stays canonical (gcd-reduced,
// positive denominator) as long as construction goes through these helpers.
using Rational = mpq_class;
using Integer = mpz_class;

// num/den with canonicalization; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);

// Accepts "p", "p/q", optional sign on either part, unreduced fractions.
Rational parse_rational(const std::string& text);

// Reduced form, denominator > 0, "/1" omitted: "-5/4", "3".
std::string rational_str(const Rational& value);

Integer floor_to_integer(const Rational& value);
Integer ceil_to_integer(const Rational& value);

inline bool is_integer(const Rational& value) { return value.get_den() == 1; }

// Exact value as long; only valid for integers that fit.
long to_long(const Rational& value);

}  // namespace tilekit
