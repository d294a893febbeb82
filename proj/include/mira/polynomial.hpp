#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mira/rational.hpp"

namespace mira {

// Univariate polynomial over Q, coefficients ascending, trailing zeros
// trimmed. The zero polynomial has an empty coefficient list and degree -1.
class RationalPoly {
public:
    RationalPoly() = default;
    RationalPoly(const Rational& c);
    RationalPoly(long c) : RationalPoly(Rational(c)) {}
    explicit RationalPoly(std::vector<Rational> coeffs);
    static RationalPoly monomial(const Rational& c, long e);

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(long i) const;  // 0 outside range
    Rational leading() const;      // requires nonzero
    bool is_monic() const;
    RationalPoly monic() const;  // divide by leading coefficient

    RationalPoly operator+(const RationalPoly& o) const;
    RationalPoly operator-(const RationalPoly& o) const;
    RationalPoly operator*(const RationalPoly& o) const;
    RationalPoly operator-() const;
    RationalPoly scale(const Rational& c) const;
    RationalPoly& operator+=(const RationalPoly& o) { return *this = *this + o; }
    RationalPoly& operator-=(const RationalPoly& o) { return *this = *this - o; }
    RationalPoly& operator*=(const RationalPoly& o) { return *this = *this * o; }

    bool operator==(const RationalPoly& o) const { return c_ == o.c_; }
    bool operator!=(const RationalPoly& o) const { return !(*this == o); }
    bool operator<(const RationalPoly& o) const;  // (degree, coeff list) order

    RationalPoly derivative() const;
    Rational eval(const Rational& x) const;

    std::string str(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

// Quotient and remainder; divisor must be nonzero.
std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b);

// Monic gcd (zero when both inputs are zero).
RationalPoly poly_gcd(RationalPoly a, RationalPoly b);

Rational resultant(const RationalPoly& a, const RationalPoly& b);

}  // namespace mira
