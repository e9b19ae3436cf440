#pragma once
// Exact rational scalar used throughout the library. All arithmetic is
// exact; values are kept canonical (lowest terms, positive denominator).

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>

namespace lipfree {

using Rat = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Accepts "7", "-3/4", "1.25", "2.5e-3". Decimal and scientific forms are
// converted exactly (digits over a power of ten). Throws ParseError.
Rat parse_rational(std::string_view text);

// Canonical text form: "a" when the denominator is 1, otherwise "a/b".
std::string format_rational(const Rat& q);

// Exact value of the double's binary expansion. Rejects NaN/inf.
Rat rational_from_double(double x);

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace lipfree
