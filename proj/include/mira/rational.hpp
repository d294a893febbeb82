#pragma once

#include <gmpxx.h>

#include <string>

namespace mira {

// Exact base-field arithmetic over Q. mpq_class keeps values canonical
// (gcd-reduced, positive denominator), which is exactly the invariant we need.
using Rational = mpq_class;
using Integer = mpz_class;

// Parses "num", "num/den" or a decimal-free integer string.
Rational parse_rational(const std::string& s);

// "num/den" with the denominator omitted when it is 1.
std::string rational_str(const Rational& x);

// p-adic valuation of a nonzero rational.
long p_valuation(const Rational& x, long p);

// p^e as an exact rational, e may be negative.
Rational p_power(long p, long e);

// x mod p^k Z_p for a p-integral part: the unique representative
// r = sum_{j=v}^{k-1} d_j p^j with digits in [0,p) such that x - r lies in
// p^k Z_p. Returns 0 when x itself is in p^k Z_p.
Rational padic_canonical_rep(const Rational& x, long p, long k);

double to_double(const Rational& x);

}  // namespace mira
