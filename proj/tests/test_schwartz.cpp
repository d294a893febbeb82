#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <complex>

#include "doctest.h"
#include "mira/errors.hpp"
#include "mira/schwartz.hpp"
#include "mira/verify.hpp"
#include "support.hpp"

using namespace mira;
using testsupport::brute_product_integral;

TEST_CASE("Fourier transform of lattice indicators") {
    for (long p : {2L, 3L}) {
        for (long k : {-2L, -1L, 0L, 1L, 2L}) {
            SchwartzFunction f = SchwartzFunction::ball(p, {Rational(0)}, {k});
            SchwartzFunction expected =
                SchwartzFunction::ball(p, {Rational(0)}, {-k}).scale(Cyclotomic(p_power(p, -k)));
            CHECK(f.fourier() == expected);
        }
    }
}

TEST_CASE("integral of a nontrivial character over its lattice vanishes") {
    for (long p : {2L, 3L, 5L}) {
        SchwartzFunction f =
            SchwartzFunction::unit_ball(p, 1).multiply_character({Rational(1) / Rational(p)});
        CHECK(f.integrate().is_zero());
        // Oracle: direct character sum over residues mod p.
        Cyclotomic sum;
        for (long u = 0; u < p; ++u)
            sum += Cyclotomic::root_of_unity(p, 1, u) * Cyclotomic(Rational(1) / Rational(p));
        CHECK(sum.is_zero());
    }
}

TEST_CASE("Fourier transform matches its defining sum on sample points") {
    Rng rng(21);
    for (int trial = 0; trial < 10; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        SchwartzFunction f = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction fhat = f.fourier();
        // Oracle: F[f](y) = sum over x in p^{-2} Z / p^3 Z of f(x) psi(-x y) p^{-3},
        // exact for the generated levels and twists when |y| is small.
        for (long ynum : {0L, 1L, p}) {
            Rational y(ynum);
            Cyclotomic direct;
            long per = 1;
            for (int i = -2; i < 3; ++i) per *= p;
            for (long idx = 0; idx < per; ++idx) {
                Rational x = Rational(idx) * p_power(p, -2);
                direct += f.evaluate(std::vector<Rational>{x}) *
                          additive_character_value(-x * y, p);
            }
            direct *= Cyclotomic(p_power(p, -3));
            CHECK(fhat.evaluate(std::vector<Rational>{y}) == direct);
        }
    }
}

TEST_CASE("Fourier involution gives reflection") {
    Rng rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        long d = 1 + trial % 3;
        SchwartzFunction f = random_schwartz(rng, p, d);
        CHECK(f.fourier().fourier() == f.negate_argument());
    }
}

TEST_CASE("Plancherel identity, dot and trace pairings") {
    Rng rng(8);
    for (int trial = 0; trial < 20; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        SchwartzFunction f1 = random_schwartz(rng, p, 4, 2, 1);
        SchwartzFunction f2 = random_schwartz(rng, p, 4, 2, 1);
        for (Pairing pr : {Pairing::dot, Pairing::trace}) {
            Cyclotomic lhs = (f1.fourier(pr) * f2).integrate();
            Cyclotomic rhs = (f1 * f2.fourier(pr)).integrate();
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("argument transforms agree with pointwise evaluation") {
    Rng rng(9);
    for (int trial = 0; trial < 15; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        SchwartzFunction f = random_schwartz(rng, p, 2, 2, 1);
        std::vector<Rational> c = {random_rational(rng, 5, 1), random_rational(rng, 5, 1)};
        for (auto& ci : c)
            if (ci == 0) ci = Rational(1);
        SchwartzFunction g = f.scale_argument(c);
        std::vector<Rational> shift = {random_rational(rng, 5, 2), random_rational(rng, 5, 2)};
        SchwartzFunction h = f.translate(shift);
        for (int s = 0; s < 6; ++s) {
            std::vector<Rational> x = {random_rational(rng, 9, 4), random_rational(rng, 9, 4)};
            CHECK(g.evaluate(x) == f.evaluate({c[0] * x[0], c[1] * x[1]}));
            CHECK(h.evaluate(x) == f.evaluate({x[0] - shift[0], x[1] - shift[1]}));
        }
    }
}

TEST_CASE("pullback product integral: coset containment example") {
    // 1_{1+pZ_p}(x) * 1_{Z_p}(2x) for odd p: the constraint is implied, so the
    // integral is the volume of 1 + pZ_p.
    long p = 3;
    SchwartzFunction f1 = SchwartzFunction::ball(p, {Rational(1)}, {1});
    SchwartzFunction f2 = SchwartzFunction::unit_ball(p, 1);
    AffineMap dbl;
    dbl.matrix = {{Rational(2)}};
    dbl.offset = {Rational(0)};
    Cyclotomic got = affine_pullback_product_integral(
        {{f1, AffineMap::identity(1)}, {f2, dbl}}, 1);
    CHECK(got == Cyclotomic(Rational(1) / Rational(p)));
}

TEST_CASE("pullback product integral throws on non-compact intersections") {
    long p = 2;
    SchwartzFunction f = SchwartzFunction::unit_ball(p, 1);
    AffineMap sum2;
    sum2.matrix = {{Rational(1), Rational(1)}};
    sum2.offset = {Rational(0)};
    CHECK_THROWS_AS(affine_pullback_product_integral({{f, sum2}}, 2), UnboundedSupport);
}

TEST_CASE("pullback product integral matches residue enumeration") {
    Rng rng(13);
    int checked = 0;
    for (int trial = 0; trial < 60 && checked < 40; ++trial) {
        long p = 2;
        long d = 2;
        SchwartzFunction f1 = random_schwartz(rng, p, d, 1, 1);
        SchwartzFunction f2 = random_schwartz(rng, p, d, 1, 1);
        AffineMap m;
        RationalMatrix A = random_invertible(rng, d);
        m.matrix.assign(d, std::vector<Rational>(d));
        m.offset.assign(d, Rational(0));
        for (long i = 0; i < d; ++i)
            for (long j = 0; j < d; ++j) m.matrix[i][j] = A(i, j);
        m.offset[0] = random_rational(rng, 3, 2);
        std::vector<std::pair<SchwartzFunction, AffineMap>> factors = {
            {f1, AffineMap::identity(d)}, {f2, m}};
        Cyclotomic got;
        try {
            got = affine_pullback_product_integral(factors, d);
        } catch (const UnboundedSupport&) {
            continue;
        }
        CHECK(got == brute_product_integral(factors, p, d, -3, 4));
        ++checked;
    }
    CHECK(checked >= 30);
}
