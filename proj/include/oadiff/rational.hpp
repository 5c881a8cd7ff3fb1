// ---------------------------------------------------------------------------
// rational.hpp -- exact rational arithmetic used throughout the toolkit.
//
// Every quantity handled by the library (frequencies, LP coefficients,
// objective values, certificates) is an exact fraction.  We use GMP's
// mpq_class; this header adds the few helpers the rest of the code needs:
// safe construction, parsing/printing in "num/den" form, and integer
// rounding for the branch-and-bound code.
// ---------------------------------------------------------------------------
#pragma once

#include <gmpxx.h>

#include <string>

namespace oadiff {

using Rational = mpq_class;
using Integer = mpz_class;

// Build a canonical fraction num/den (den != 0).
Rational rat(long num, long den = 1);

// Exact parse of "num", "num/den", or "-num/den"; throws Error("BadRational")
// on malformed input or a zero denominator.
Rational parse_rational(const std::string& text);

// Canonical text form: "num" when the denominator is 1, else "num/den".
std::string rational_str(const Rational& value);

bool is_integral(const Rational& value);

// Largest integer <= value / smallest integer >= value.
Integer floor_of(const Rational& value);
Integer ceil_of(const Rational& value);

// Exact binomial coefficient C(n, k); zero when k < 0 or k > n.
Integer binomial(long n, long k);

}  // namespace oadiff
