#pragma once

#include <complex>
#include <vector>

#include "mira/laurent.hpp"

namespace mira {

// One denominator factor (1 - c t^k), k >= 1, c != 0.
struct DenFactor {
    Cyclotomic c;
    long k = 1;

    bool operator==(const DenFactor& o) const { return k == o.k && c == o.c; }
    bool operator<(const DenFactor& o) const {
        if (k != o.k) return k < o.k;
        return c < o.c;
    }
};

// Exact rational function in t = q^{-s}: a Laurent-polynomial numerator over
// a multiset of factors (1 - c t^k) kept in factored form. Equality is
// decided by cross-multiplication, never by polynomial gcd.
class ZetaExpr {
public:
    ZetaExpr() = default;
    explicit ZetaExpr(long q) : q_(q) {}
    ZetaExpr(long q, LaurentPoly num, std::vector<DenFactor> den);

    static ZetaExpr constant(long q, const Cyclotomic& c);
    // 1 / (1 - c t^k)
    static ZetaExpr geometric(long q, const Cyclotomic& c, long k);

    long q() const { return q_; }
    const LaurentPoly& num() const { return num_; }
    const std::vector<DenFactor>& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    ZetaExpr operator+(const ZetaExpr& o) const;
    ZetaExpr operator-(const ZetaExpr& o) const;
    ZetaExpr operator*(const ZetaExpr& o) const;
    ZetaExpr& operator+=(const ZetaExpr& o) { return *this = *this + o; }
    ZetaExpr& operator*=(const ZetaExpr& o) { return *this = *this * o; }

    // Equality as rational functions.
    bool equals(const ZetaExpr& o) const;

    // The substitution s -> 1-s, i.e. t -> 1/(q t), as an exact operation.
    ZetaExpr substitute_one_minus_s() const;

    // Evaluate at t = q^{-s}. Throws PoleAtSample when a denominator factor
    // vanishes within 1e-12.
    std::complex<double> eval_at_s(std::complex<double> s) const;
    std::complex<double> eval_at_t(std::complex<double> t) const;

    // Denominator expanded as a Laurent polynomial.
    LaurentPoly den_poly() const;

    std::string str() const;

private:
    long q_ = 0;
    LaurentPoly num_;
    std::vector<DenFactor> den_;  // sorted

    void check_q(const ZetaExpr& o) const;
};

}  // namespace mira
