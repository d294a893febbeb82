#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "mira/mirabolic.hpp"
#include "mira/verify.hpp"
#include "support.hpp"

using namespace mira;
using testsupport::brute_product_integral;

namespace {

RationalMatrix mat2(Rational a, Rational b, Rational c, Rational d) {
    RationalMatrix m(2, 2);
    m(0, 0) = a; m(0, 1) = b; m(1, 0) = c; m(1, 1) = d;
    return m;
}

// Conjugation X -> g^{-1} X g as a linear map on row-major flattened
// matrices, built directly from the defining formula as an oracle for the
// kernel's internal pullback.
AffineMap conjugation_map(const GroupElement& g) {
    long n = g.n();
    RationalMatrix ginv = g.g.inverse();
    AffineMap m;
    m.matrix.assign(n * n, std::vector<Rational>(n * n, Rational(0)));
    m.offset.assign(n * n, Rational(0));
    for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l)
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    m.matrix[k * n + l][i * n + j] = ginv(k, i) * g.g(j, l);
    return m;
}

}  // namespace

TEST_CASE("kernel value for diag(p,1) on unit balls") {
    for (long p : {2L, 3L}) {
        GroupElement g(p, mat2(Rational(p), Rational(0), Rational(0), Rational(1)));
        SchwartzFunction ball = SchwartzFunction::unit_ball(p, 4);
        Cyclotomic got = local_kernel(g, ball, ball);
        // g^{-1} X g multiplies the upper-right entry by 1/p, so the only
        // constraint is that entry lying in pZ_p: volume 1/p.
        CHECK(got == Cyclotomic(Rational(1) / Rational(p)));
        // Oracle: residue enumeration against the hand-built conjugation map.
        Cyclotomic brute = brute_product_integral(
            {{ball, AffineMap::identity(4)}, {ball, conjugation_map(g)}}, p, 4, 0, 1);
        CHECK(got == brute);
    }
}

TEST_CASE("kernel matches residue enumeration on twisted inputs") {
    // Regression for the character weights of the lattice-coset solver: a
    // non-diagonal, non-integral g with a surviving twist on both sides.
    long p = 2;
    GroupElement g(p, mat2(Rational(3), Rational(-1) / Rational(2), Rational(0), Rational(1)));

    SchwartzFunction f1(p, 4);
    {
        ModulatedBall b;
        b.coeff = Cyclotomic(Rational(-3) / Rational(2));
        b.center = {Rational(3) / Rational(2), Rational(3) / Rational(2), Rational(1), Rational(0)};
        b.levels = {1, 1, 1, 0};
        b.twist = std::vector<Rational>(4, Rational(0));
        f1.add_term(b);
    }
    SchwartzFunction f2(p, 4);
    {
        ModulatedBall b;
        b.coeff = Cyclotomic(Rational(-3));
        b.center = std::vector<Rational>(4, Rational(0));
        b.levels = {0, 1, 1, -1};
        b.twist = {Rational(0), Rational(0), Rational(0), Rational(3) / Rational(2)};
        f2.add_term(b);
    }

    SchwartzFunction F1 = f1.fourier(Pairing::trace);
    Cyclotomic got = local_kernel(g, F1, f2);
    Cyclotomic brute = brute_product_integral(
        {{F1, AffineMap::identity(4)}, {f2, conjugation_map(g)}}, p, 4, -1, 4);
    CHECK(got == brute);
    CHECK(verify_kernel_swap(g, f1, f2));
}

TEST_CASE("kernel Plancherel swap on random data") {
    Rng rng(51);
    for (int trial = 0; trial < 12; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        long n = 1 + trial % 2;
        RationalMatrix m = random_invertible(rng, n);
        GroupElement g(p, m);
        SchwartzFunction f1 = random_schwartz(rng, p, n * n, 1, 1);
        SchwartzFunction f2 = random_schwartz(rng, p, n * n, 1, 1);
        CHECK(verify_kernel_swap(g, f1, f2));
    }
}

TEST_CASE("Eisenstein integral closed forms in rank one") {
    for (long p : {2L, 3L, 5L}) {
        GroupElement one(p, RationalMatrix::identity(1));
        SchwartzFunction unit = SchwartzFunction::unit_ball(p, 1);
        ZetaExpr got = local_eisenstein_integral(one, unit, unit);
        // Hand derivation: nonnegative shells contribute sum t^m, negative
        // shells contribute sum (pt)^{-j}, so E = 1/(1-t) + 1/(pt-1).
        ZetaExpr expected =
            ZetaExpr::geometric(p, Cyclotomic(Rational(1)), 1) +
            ZetaExpr(p, LaurentPoly(Cyclotomic(Rational(-1))),
                     {DenFactor{Cyclotomic(Rational(p)), 1}});
        CHECK(got.equals(expected));

        // With the first function supported away from 0 only the nonnegative
        // shells survive and the inner integral is the coset volume 1/p.
        SchwartzFunction principal = SchwartzFunction::ball(p, {Rational(1)}, {1});
        ZetaExpr got2 = local_eisenstein_integral(one, principal, unit);
        ZetaExpr expected2 =
            ZetaExpr::geometric(p, Cyclotomic(Rational(1)), 1) *
            ZetaExpr::constant(p, Cyclotomic(Rational(1) / Rational(p)));
        CHECK(got2.equals(expected2));
    }
}

TEST_CASE("Eisenstein integral is invariant under scaling g by p in rank one") {
    Rng rng(52);
    for (int trial = 0; trial < 10; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        Rational u = random_rational(rng, 5, 1);
        if (u == 0) u = Rational(1);
        RationalMatrix m(1, 1);
        m(0, 0) = u;
        RationalMatrix mp(1, 1);
        mp(0, 0) = u * Rational(p);
        SchwartzFunction phi1 = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction phi2 = random_schwartz(rng, p, 1, 2, 1);
        if (phi1.is_zero() || phi2.is_zero()) continue;
        ZetaExpr a = local_eisenstein_integral(GroupElement(p, m), phi1, phi2);
        ZetaExpr b = local_eisenstein_integral(GroupElement(p, mp), phi1, phi2);
        CHECK(a.equals(b));
    }
}

TEST_CASE("Eisenstein integral against the numeric double-sum oracle") {
    auto results = suite_eisenstein(53, 6);
    for (const auto& r : results) {
        INFO(r.name, ": ", r.witness);
        CHECK(r.pass);
    }
}

TEST_CASE("rank-one trace swap identity") {
    for (long p : {2L, 3L}) {
        SchwartzFunction unit = SchwartzFunction::unit_ball(p, 1);
        ZetaExpr direct = gl1_local_trace(unit, unit, unit, unit);
        ZetaExpr expected =
            ZetaExpr::geometric(p, Cyclotomic(Rational(1)), 1) +
            ZetaExpr(p, LaurentPoly(Cyclotomic(Rational(-1))),
                     {DenFactor{Cyclotomic(Rational(p)), 1}});
        CHECK(direct.equals(expected));
    }

    Rng rng(54);
    for (int trial = 0; trial < 10; ++trial) {
        long p = (trial % 2) ? 3 : 2;
        SchwartzFunction f1 = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction f2 = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction phi1 = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction phi2 = random_schwartz(rng, p, 1, 2, 1);
        if (phi1.is_zero() || phi2.is_zero()) continue;
        // Swapping the kernel pair through the Fourier transform leaves the
        // trace unchanged.
        ZetaExpr lhs = gl1_local_trace(f1.fourier(), f2, phi1, phi2);
        ZetaExpr rhs = gl1_local_trace(f1, f2.fourier(), phi1, phi2);
        CHECK(lhs.equals(rhs));
    }
}
