#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>

#include "doctest.h"
#include "mira/tate.hpp"
#include "mira/verify.hpp"
#include "support.hpp"

using namespace mira;
using testsupport::brute_tate_sum;

static ZetaExpr one_over_one_minus_t(long q) {
    return ZetaExpr::geometric(q, Cyclotomic(Rational(1)), 1);
}

TEST_CASE("closed forms for basic multiplicative integrals") {
    for (long p : {2L, 3L, 5L}) {
        SchwartzFunction unit = SchwartzFunction::unit_ball(p, 1);
        CHECK(local_tate_integral(unit).equals(one_over_one_minus_t(p)));

        SchwartzFunction principal = SchwartzFunction::ball(p, {Rational(1)}, {1});
        CHECK(local_tate_integral(principal)
                  .equals(ZetaExpr::constant(p, Cyclotomic(Rational(1) / Rational(p - 1)))));

        SchwartzFunction maximal = SchwartzFunction::ball(p, {Rational(0)}, {1});
        ZetaExpr expected(p, LaurentPoly::monomial(Cyclotomic(Rational(1)), 1),
                          {DenFactor{Cyclotomic(Rational(1)), 1}});
        CHECK(local_tate_integral(maximal).equals(expected));
    }
}

TEST_CASE("closed form matches the defining shell sum numerically") {
    Rng rng(31);
    for (int trial = 0; trial < 12; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        SchwartzFunction phi = random_schwartz(rng, p, 1, 2, 1);
        ZetaExpr I = local_tate_integral(phi);
        for (double s : {0.8, 1.3, 2.0}) {
            // At Re(s) > 0 the positive shells converge fast; negative shells
            // terminate exactly because the support is compact.
            std::complex<double> direct = brute_tate_sum(phi, s, -4, 120, 3);
            std::complex<double> closed = I.eval_at_s(s);
            CHECK(std::abs(direct - closed) < 1e-9);
        }
    }
}

TEST_CASE("zeta factor expressions") {
    LocalZetaFactor z{2, 2, 1};  // zeta_E(2s - 1), E of degree 2 over Q_p
    CHECK(z.str() == "zeta_E2(2s-1)");
    long q = 3;
    ZetaExpr e = zeta_factor_to_expression(z, q);
    // 1 / (1 - q^2 t^4)
    CHECK(e.equals(ZetaExpr::geometric(q, Cyclotomic(Rational(9)), 4)));
}

TEST_CASE("functional equation on fixed pairs") {
    for (long p : {2L, 3L}) {
        SchwartzFunction unit = SchwartzFunction::unit_ball(p, 1);
        SchwartzFunction maximal = SchwartzFunction::ball(p, {Rational(0)}, {1});
        CHECK(verify_local_functional_equation(unit, maximal).holds);

        SchwartzFunction twisted =
            unit.multiply_character({Rational(1) / Rational(p)});
        CHECK(verify_local_functional_equation(unit, twisted).holds);
        CHECK(verify_local_functional_equation(twisted, maximal).holds);
    }
}

TEST_CASE("functional equation on random pairs") {
    Rng rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        SchwartzFunction a = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction b = random_schwartz(rng, p, 1, 2, 1);
        if (a.is_zero() || b.is_zero()) continue;
        auto fe = verify_local_functional_equation(a, b);
        CHECK(fe.holds);
        CHECK(fe.lhs.equals(fe.rhs));
    }
}
