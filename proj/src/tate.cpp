#include "mira/tate.hpp"

#include <algorithm>

#include "mira/errors.hpp"

namespace mira {

std::string LocalZetaFactor::str() const {
    std::string field = deg == 1 ? "F" : "E" + std::to_string(deg);
    std::string arg = h == 1 ? "s" : std::to_string(h) + "s";
    if (a > 0) arg += "-" + std::to_string(a);
    if (a < 0) arg += "+" + std::to_string(-a);
    return "zeta_" + field + "(" + arg + ")";
}

ZetaExpr zeta_factor_to_expression(const LocalZetaFactor& z, long q) {
    if (q < 2) throw Error("residue cardinality must be >= 2");
    return ZetaExpr::geometric(q, Cyclotomic(p_power(q, z.deg * z.a)), z.deg * z.h);
}

ZetaExpr local_tate_integral(const SchwartzFunction& phi) {
    if (phi.dim() != 1) throw Error("local Tate integral requires a one-dimensional function");
    long p = phi.prime();

    long bound = 2;
    for (const auto& t : phi.terms()) {
        bound = std::max(bound, std::abs(t.levels[0]) + 2);
        if (t.center[0] != 0) bound = std::max(bound, std::abs(p_valuation(t.center[0], p)) + 2);
        if (t.twist[0] != 0) bound = std::max(bound, std::abs(p_valuation(t.twist[0], p)) + 2);
    }

    // Additive integral of phi over p^m Z_p.
    auto ball_integral = [&](long m) {
        SchwartzFunction cut =
            phi * SchwartzFunction::ball(p, {Rational(0)}, {m});
        return cut.integrate();
    };

    // d^x-integral of phi over the shell p^m Z_p^x, for |x| = p^{-m} there:
    // c_m = (I_m - I_{m+1}) * p^{m+1} / (p - 1).
    auto shell = [&](long m) {
        Cyclotomic diff = ball_integral(m) - ball_integral(m + 1);
        return diff * Cyclotomic(p_power(p, m + 1) / Rational(p - 1));
    };

    Cyclotomic at_zero = phi.evaluate(std::vector<Rational>{Rational(0)});
    if (shell(-bound) != Cyclotomic() )
        throw InternalCheckFailure("negative shell bound violated");
    if (shell(bound) != at_zero || shell(bound + 1) != at_zero)
        throw InternalCheckFailure("geometric tail not stabilized");

    LaurentPoly explicit_part;
    for (long m = -bound; m < bound; ++m) {
        Cyclotomic c = shell(m);
        if (!c.is_zero()) explicit_part += LaurentPoly::monomial(c, m);
    }
    ZetaExpr result(p, explicit_part, {});
    if (!at_zero.is_zero()) {
        // Tail sum_{m >= bound} phi(0) t^m = phi(0) t^bound / (1 - t).
        result += ZetaExpr(p, LaurentPoly::monomial(at_zero, bound),
                           {DenFactor{Cyclotomic(Rational(1)), 1}});
    }
    return result;
}

TateFunctionalEquation verify_local_functional_equation(const SchwartzFunction& phi1,
                                                        const SchwartzFunction& phi2) {
    TateFunctionalEquation r;
    ZetaExpr i1 = local_tate_integral(phi1);
    ZetaExpr i2 = local_tate_integral(phi2);
    ZetaExpr i1hat = local_tate_integral(phi1.fourier()).substitute_one_minus_s();
    ZetaExpr i2hat = local_tate_integral(phi2.fourier()).substitute_one_minus_s();
    r.lhs = i1 * i2hat;
    r.rhs = i1hat * i2;
    r.holds = r.lhs.equals(r.rhs);
    return r;
}

}  // namespace mira
