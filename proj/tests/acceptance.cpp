// Acceptance gate: one line per criterion, exit nonzero if any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "mira/mirabolic.hpp"
#include "mira/partitions.hpp"
#include "mira/tate.hpp"
#include "mira/verify.hpp"

using namespace mira;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, double ms,
            const std::string& detail = "") {
    std::printf("criterion %2d %-36s %s (%.0f ms)%s\n", number, name.c_str(),
                pass ? "PASS" : "FAIL", ms, detail.empty() ? "" : ("  " + detail).c_str());
    if (!pass) ++failures;
}

template <typename Fn>
void timed(int number, const std::string& name, Fn&& fn) {
    auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = false;
    try {
        pass = fn(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    double ms = std::chrono::duration<double, std::milli>(
                    std::chrono::steady_clock::now() - start)
                    .count();
    report(number, name, pass, ms, detail);
}

bool all_pass(const std::vector<CheckResult>& results, std::string& detail) {
    for (const auto& r : results)
        if (!r.pass) {
            detail = r.name + ": " + r.witness;
            return false;
        }
    return true;
}

RationalPoly linear(long root) {
    return RationalPoly::monomial(Rational(1), 1) + RationalPoly(Rational(-root));
}

RationalPoly quadratic_irreducible() {
    return RationalPoly::monomial(Rational(1), 2) + RationalPoly(Rational(1));
}

}  // namespace

int main() {
    const uint64_t seed = 2026;

    timed(1, "rank-two zeta-factor table", [](std::string& detail) {
        using F = LocalZetaFactor;
        using V = std::vector<F>;
        struct Case {
            const char* name;
            ClassDatum datum;
            V expected;
        };
        std::vector<Case> cases = {
            {"elliptic", {{{quadratic_irreducible(), Partition({1})}}}, V{{2, 1, 0}}},
            {"hyperbolic",
             {{{linear(1), Partition({1})}, {linear(2), Partition({1})}}},
             V{{1, 1, 0}, {1, 1, 0}}},
            {"parabolic", {{{linear(1), Partition({2})}}}, V{{1, 1, 0}, {1, 2, 1}}},
            {"central", {{{linear(1), Partition({1, 1})}}}, V{{1, 1, 0}, {1, 2, 0}}},
        };
        for (auto& c : cases) {
            std::sort(c.expected.begin(), c.expected.end());
            if (predict_zeta_multiset(c.datum) != c.expected) {
                detail = std::string("case ") + c.name;
                return false;
            }
        }
        return true;
    });

    timed(2, "single-row chain, m = 1..6", [](std::string& detail) {
        for (long m = 1; m <= 6; ++m) {
            ClassDatum datum{{{quadratic_irreducible(), Partition({m})}}};
            std::vector<LocalZetaFactor> expected;
            for (long k = 1; k <= m; ++k) expected.push_back({2, k, k - 1});
            std::sort(expected.begin(), expected.end());
            if (predict_zeta_multiset(datum) != expected) {
                detail = "m = " + std::to_string(m);
                return false;
            }
        }
        return true;
    });

    timed(3, "hook formulas, exhaustive n <= 12", [](std::string& detail) {
        return all_pass(suite_hooks(12), detail);
    });

    timed(4, "conjugation symmetry, n <= 12", [](std::string& detail) {
        return all_pass(suite_conjugation(12), detail);
    });

    timed(5, "Fourier involution and Plancherel x100", [](std::string& detail) {
        return all_pass(suite_fourier(seed, 100), detail) &&
               all_pass(suite_plancherel(seed, 100), detail);
    });

    timed(6, "Tate functional equation x200", [](std::string& detail) {
        return all_pass(suite_tate_fe(seed, 200), detail);
    });

    timed(7, "kernel Plancherel swap x100", [](std::string& detail) {
        return all_pass(suite_kernel_swap(seed, 100), detail);
    });

    timed(8, "Frobenius form certificates x200", [](std::string& detail) {
        return all_pass(suite_frobenius(seed, 200), detail);
    });

    timed(9, "rank-one trace swap x50", [](std::string& detail) {
        return all_pass(suite_gl1_trace(seed, 50), detail);
    });

    timed(10, "Eisenstein closed form and oracle x20", [seed = seed](std::string& detail) {
        for (long p : {2L, 3L}) {
            GroupElement one(p, RationalMatrix::identity(1));
            SchwartzFunction unit = SchwartzFunction::unit_ball(p, 1);
            ZetaExpr got = local_eisenstein_integral(one, unit, unit);
            ZetaExpr expected =
                ZetaExpr::geometric(p, Cyclotomic(Rational(1)), 1) +
                ZetaExpr(p, LaurentPoly(Cyclotomic(Rational(-1))),
                         {DenFactor{Cyclotomic(Rational(p)), 1}});
            if (!got.equals(expected)) {
                detail = "closed form, p = " + std::to_string(p);
                return false;
            }
        }
        return all_pass(suite_eisenstein(seed, 20), detail);
    });

    return failures == 0 ? 0 : 1;
}
