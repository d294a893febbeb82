#pragma once

#include <complex>
#include <map>
#include <string>

#include "mira/rational.hpp"

namespace mira {

// Exact element of Q(zeta_{p^M}), stored as a coefficient vector on the
// power basis zeta^e, 0 <= e < phi(p^M), reduced modulo the p^M-th
// cyclotomic polynomial Phi_{p^M}(x) = sum_{j<p} x^{j p^{M-1}}.
//
// Canonical form compresses to the smallest level containing the value, so
// equality is plain coefficient-map equality; rationals live at level 0
// with no prime attached.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(const Rational& r);
    Cyclotomic(long n) : Cyclotomic(Rational(n)) {}

    // zeta_{p^level}^exponent
    static Cyclotomic root_of_unity(long p, int level, long exponent);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_rational() const { return level_ == 0; }
    Rational rational_value() const;  // requires is_rational()

    long prime() const { return p_; }
    int level() const { return level_; }
    const std::map<long, Rational>& coeffs() const { return coeffs_; }

    Cyclotomic operator+(const Cyclotomic& o) const;
    Cyclotomic operator-(const Cyclotomic& o) const;
    Cyclotomic operator*(const Cyclotomic& o) const;
    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

    // Multiplicative inverse, by solving the multiplication linear system
    // over Q. Throws on zero.
    Cyclotomic inverse() const;

    bool operator==(const Cyclotomic& o) const;
    bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

    // Total order used for canonical sorting of denominator factors.
    int compare(const Cyclotomic& o) const;
    bool operator<(const Cyclotomic& o) const { return compare(o) < 0; }

    std::complex<double> eval() const;

    std::string str() const;

private:
    long p_ = 0;    // 0 at level 0 (rational value)
    int level_ = 0; // M
    std::map<long, Rational> coeffs_;  // exponent -> coefficient, no zeros

    long phi() const;  // phi(p^level)
    void reduce();     // mod p^M exponents, reduce against Phi, compress level
    void raise_to_level(long p, int level);
    friend std::pair<Cyclotomic, Cyclotomic> reconcile(const Cyclotomic&, const Cyclotomic&);
};

// Value of the standard additive character with conductor Z_p at an exact
// rational: psi(x) = zeta_{p^m}^u where the p-adic fractional part of x is
// u / p^m, and 1 for x in Z_p.
Cyclotomic additive_character_value(const Rational& x, long p);

}  // namespace mira
