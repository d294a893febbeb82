#pragma once

#include <vector>

#include "mira/cyclotomic.hpp"
#include "mira/rational.hpp"

namespace mira {

// Element of Q_p constructed from an exact rational, carrying a guaranteed
// absolute precision: the value is known modulo p^{abs_precision}. Arithmetic
// keeps the rational exact but tracks precision the way genuine p-adic
// arithmetic would, and operations that would need digits beyond the
// guarantee fail hard instead of rounding.
class PAdicScalar {
public:
    PAdicScalar() = default;
    // Digit budget N: the value is guaranteed modulo p^{v(x)+N} (for x = 0 the
    // guarantee is modulo p^N).
    PAdicScalar(long p, const Rational& value, long digits = kDefaultDigits);

    static constexpr long kDefaultDigits = 64;

    long prime() const { return p_; }
    const Rational& value() const { return value_; }
    long abs_precision() const { return abs_prec_; }
    bool is_exact_zero() const { return value_ == 0; }

    // v with |x|_p = p^{-v}. Errors on zero-to-precision input.
    long valuation() const;
    Rational norm() const;

    // Unit part u with x = p^v u, reduced mod p^digits.
    Rational unit_mod(long digits) const;

    PAdicScalar operator+(const PAdicScalar& o) const;
    PAdicScalar operator-(const PAdicScalar& o) const;
    PAdicScalar operator*(const PAdicScalar& o) const;
    PAdicScalar operator-() const;

    // psi(x) = zeta_{p^m}^u for fractional part u/p^m; requires the value to
    // be determined modulo Z_p, i.e. abs_precision >= 0.
    Cyclotomic additive_character() const;

private:
    long p_ = 0;
    Rational value_;
    long abs_prec_ = 0;

    void check_same_prime(const PAdicScalar& o) const;
};

struct PAdicVector {
    long p = 0;
    std::vector<PAdicScalar> entries;

    PAdicVector() = default;
    PAdicVector(long p_, std::vector<PAdicScalar> e);
    static PAdicVector from_rationals(long p, const std::vector<Rational>& v,
                                      long digits = PAdicScalar::kDefaultDigits);

    size_t dim() const { return entries.size(); }
    std::vector<Rational> rationals() const;
};

}  // namespace mira
