#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cmath>
#include <complex>

#include "doctest.h"
#include "mira/cyclotomic.hpp"
#include "mira/laurent.hpp"
#include "mira/padic.hpp"
#include "mira/rational.hpp"
#include "mira/verify.hpp"
#include "mira/zeta_expr.hpp"

using namespace mira;

TEST_CASE("rational parsing canonicalizes") {
    CHECK(parse_rational("3/6") == Rational(1) / Rational(2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(rational_str(parse_rational("10/15")) == "2/3");
}

TEST_CASE("p-adic valuation and powers") {
    CHECK(p_valuation(Rational(12), 2) == 2);
    CHECK(p_valuation(Rational(3) / Rational(8), 2) == -3);
    CHECK(p_power(2, -3) == Rational(1) / Rational(8));
    CHECK(p_power(5, 2) == Rational(25));
}

TEST_CASE("canonical representative mod p^k") {
    // x and its representative differ by an element of p^k Z_p.
    Rational x = Rational(7) / Rational(3);
    Rational r = padic_canonical_rep(x, 2, 3);
    CHECK(p_valuation(x - r, 2) >= 3);
}

TEST_CASE("sum of all p-th roots of unity vanishes") {
    for (long p : {2L, 3L, 5L, 7L}) {
        Cyclotomic sum;
        std::complex<double> numeric = 0.0;
        for (long e = 0; e < p; ++e) {
            sum += Cyclotomic::root_of_unity(p, 1, e);
            double theta = 2.0 * M_PI * e / p;
            numeric += std::complex<double>(std::cos(theta), std::sin(theta));
        }
        CHECK(sum.is_zero());
        CHECK(std::abs(numeric) < 1e-12);  // independent numeric cross-check
    }
}

TEST_CASE("roots of unity match their numeric values") {
    for (long p : {2L, 3L, 5L}) {
        for (int level = 1; level <= 2; ++level) {
            long order = 1;
            for (int i = 0; i < level; ++i) order *= p;
            for (long e = 0; e < order; ++e) {
                std::complex<double> got = Cyclotomic::root_of_unity(p, level, e).eval();
                double theta = 2.0 * M_PI * e / order;
                std::complex<double> want(std::cos(theta), std::sin(theta));
                CHECK(std::abs(got - want) < 1e-9);
            }
        }
    }
}

TEST_CASE("level compression identifies equal values") {
    // zeta_{p^2}^p = zeta_p, so the two constructions must compare equal.
    for (long p : {2L, 3L, 5L}) {
        CHECK(Cyclotomic::root_of_unity(p, 2, p) == Cyclotomic::root_of_unity(p, 1, 1));
    }
}

TEST_CASE("cyclotomic inverse on random elements") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        Cyclotomic z(random_rational(rng));
        z += Cyclotomic::root_of_unity(p, 2, 1 + trial % p) * Cyclotomic(random_rational(rng));
        if (z.is_zero()) continue;
        CHECK(z * z.inverse() == Cyclotomic(Rational(1)));
    }
}

TEST_CASE("additive character values and additivity") {
    CHECK(additive_character_value(Rational(3) / Rational(4), 2) ==
          Cyclotomic::root_of_unity(2, 2, 3));
    CHECK(additive_character_value(Rational(5), 3) == Cyclotomic(Rational(1)));
    // Numeric oracle: psi(3/4) = exp(2*pi*i*3/4).
    std::complex<double> got = additive_character_value(Rational(3) / Rational(4), 2).eval();
    CHECK(std::abs(got - std::complex<double>(0.0, -1.0)) < 1e-12);

    Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        Rational x = random_rational(rng, 9, 8);
        Rational y = random_rational(rng, 9, 8);
        CHECK(additive_character_value(x + y, p) ==
              additive_character_value(x, p) * additive_character_value(y, p));
    }
}

TEST_CASE("Laurent substitution t -> 1/(qt) is an involution") {
    LaurentPoly f = LaurentPoly::monomial(Cyclotomic(Rational(3)), 2) +
                    LaurentPoly::monomial(Cyclotomic(Rational(-1) / Rational(2)), -1) +
                    LaurentPoly(Cyclotomic(Rational(5)));
    CHECK(f.substitute_one_minus_s(3).substitute_one_minus_s(3) == f);
}

TEST_CASE("zeta expression arithmetic and numeric evaluation") {
    long q = 4;
    // 1/(1-t) + 1/(qt-1); at s = 1/2 (t = 1/2) this is 2 + 1 = 3.
    ZetaExpr a = ZetaExpr::geometric(q, Cyclotomic(Rational(1)), 1);
    ZetaExpr b(q, LaurentPoly(Cyclotomic(Rational(-1))),
               {DenFactor{Cyclotomic(Rational(q)), 1}});
    ZetaExpr sum = a + b;
    std::complex<double> v = sum.eval_at_s(0.5);
    CHECK(std::abs(v - std::complex<double>(3.0, 0.0)) < 1e-12);
}

TEST_CASE("zeta expression equality is cross-multiplicative") {
    long q = 3;
    // (1 - qt)/( (1-t)(1-qt) ) equals 1/(1-t).
    ZetaExpr lhs(q,
                 LaurentPoly(Cyclotomic(Rational(1))) -
                     LaurentPoly::monomial(Cyclotomic(Rational(q)), 1),
                 {DenFactor{Cyclotomic(Rational(1)), 1}, DenFactor{Cyclotomic(Rational(q)), 1}});
    ZetaExpr rhs = ZetaExpr::geometric(q, Cyclotomic(Rational(1)), 1);
    CHECK(lhs.equals(rhs));
    CHECK_FALSE(lhs.equals(ZetaExpr::geometric(q, Cyclotomic(Rational(q)), 1)));
}

TEST_CASE("s -> 1-s substitution is exact and involutive") {
    long q = 5;
    ZetaExpr e = ZetaExpr::geometric(q, Cyclotomic(Rational(q)), 2) *
                 ZetaExpr(q, LaurentPoly::monomial(Cyclotomic(Rational(7)), 1), {});
    CHECK(e.substitute_one_minus_s().substitute_one_minus_s().equals(e));
    // Numeric oracle: value at s equals substituted value at 1-s.
    std::complex<double> lhs = e.eval_at_s(0.3);
    std::complex<double> rhs = e.substitute_one_minus_s().eval_at_s(0.7);
    CHECK(std::abs(lhs - rhs) < 1e-10);
}

TEST_CASE("p-adic scalars track valuation and character values") {
    PAdicScalar x(2, Rational(3) / Rational(4));
    CHECK(x.valuation() == -2);
    CHECK(x.norm() == Rational(4));
    CHECK(x.additive_character() == additive_character_value(Rational(3) / Rational(4), 2));

    PAdicScalar y(2, Rational(5));
    CHECK((x + y).valuation() == -2);
    CHECK((x * y).valuation() == -2);
}
