#pragma once

#include <complex>
#include <map>
#include <string>

#include "mira/cyclotomic.hpp"

namespace mira {

// Laurent polynomial in the formal variable t = q^{-s} with cyclotomic
// coefficients. No zero coefficients are stored.
class LaurentPoly {
public:
    LaurentPoly() = default;
    LaurentPoly(const Cyclotomic& c);  // constant
    static LaurentPoly monomial(const Cyclotomic& c, long exponent);

    bool is_zero() const { return terms_.empty(); }
    const std::map<long, Cyclotomic>& terms() const { return terms_; }

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    // Substitution t -> 1/(q t): term c t^e becomes c q^{-e} t^{-e}.
    LaurentPoly substitute_one_minus_s(long q) const;

    std::complex<double> eval(std::complex<double> t) const;

    std::string str() const;

    void set_term(long exponent, const Cyclotomic& c);

private:
    std::map<long, Cyclotomic> terms_;
    void prune();
};

}  // namespace mira
