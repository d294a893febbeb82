#pragma once

#include "mira/schwartz.hpp"
#include "mira/zeta_expr.hpp"

namespace mira {

// zeta_E(h s - a) for the unramified extension of degree deg: as a rational
// function in t = q^{-s} this is 1 / (1 - q^{deg*a} t^{deg*h}).
struct LocalZetaFactor {
    long deg = 1;
    long h = 1;
    long a = 0;

    bool operator==(const LocalZetaFactor& o) const {
        return deg == o.deg && h == o.h && a == o.a;
    }
    bool operator<(const LocalZetaFactor& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (h != o.h) return h < o.h;
        return a < o.a;
    }
    std::string str() const;
};

ZetaExpr zeta_factor_to_expression(const LocalZetaFactor& z, long q);

// Exact local Tate integral  int_{Q_p^x} Phi(x) |x|^s d^x x  with the
// normalization vol_{d^x}(Z_p^x) = 1, returned as its closed-form rational
// function in t = p^{-s}. Requires dim(Phi) = 1.
ZetaExpr local_tate_integral(const SchwartzFunction& phi);

struct TateFunctionalEquation {
    bool holds = false;
    ZetaExpr lhs;  // I(s;Phi1) * I(1-s;F[Phi2])
    ZetaExpr rhs;  // I(1-s;F[Phi1]) * I(s;Phi2)
};

// Checks I(s;Phi1) I(1-s;F[Phi2]) = I(1-s;F[Phi1]) I(s;Phi2) exactly.
TateFunctionalEquation verify_local_functional_equation(const SchwartzFunction& phi1,
                                                        const SchwartzFunction& phi2);

}  // namespace mira
