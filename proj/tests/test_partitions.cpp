#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <map>
#include <vector>

#include "doctest.h"
#include "mira/partitions.hpp"
#include "mira/polynomial.hpp"

using namespace mira;

namespace {

// Independent oracle: materialize the Young diagram as a boolean grid and
// count arm/leg boxes by direct scan.
struct Grid {
    std::vector<std::vector<bool>> cell;

    explicit Grid(const Partition& lam) {
        for (long j = 1; j <= lam.num_rows(); ++j)
            cell.push_back(std::vector<bool>(lam.row(j), true));
    }
    bool has(long j, long k) const {  // 1-based
        return j >= 1 && j <= static_cast<long>(cell.size()) &&
               k >= 1 && k <= static_cast<long>(cell[j - 1].size());
    }
    long arm(long j, long k) const {
        long n = 0;
        while (has(j, k + n + 1)) ++n;
        return n;
    }
    long leg(long j, long k) const {
        long n = 0;
        while (has(j + n + 1, k)) ++n;
        return n;
    }
};

RationalPoly linear(long root) {
    // t - root
    return RationalPoly::monomial(Rational(1), 1) + RationalPoly(Rational(-root));
}

RationalPoly irreducible_quadratic() {
    // t^2 + 1
    return RationalPoly::monomial(Rational(1), 2) + RationalPoly(Rational(1));
}

}  // namespace

TEST_CASE("partition enumeration counts") {
    // p(n) for n = 1..10.
    const long expected[] = {1, 2, 3, 5, 7, 11, 15, 22, 30, 42};
    for (long n = 1; n <= 10; ++n) {
        auto parts = partitions_of(n);
        CHECK(static_cast<long>(parts.size()) == expected[n - 1]);
        for (const auto& lam : parts) {
            CHECK(lam.size() == n);
            CHECK(std::is_sorted(lam.rows.rbegin(), lam.rows.rend()));
        }
    }
}

TEST_CASE("conjugation against the grid transpose oracle") {
    for (long n = 1; n <= 9; ++n) {
        for (const auto& lam : partitions_of(n)) {
            Grid g(lam);
            Partition conj = conjugate(lam);
            CHECK(conjugate(conj) == lam);
            for (long k = 1; k <= conj.num_rows(); ++k) {
                long count = 0;
                for (long j = 1; g.has(j, k); ++j) ++count;
                CHECK(conj.row(k) == count);
            }
        }
    }
}

TEST_CASE("hook lengths: both derivations match the grid oracle") {
    for (long n = 1; n <= 10; ++n) {
        for (const auto& lam : partitions_of(n)) {
            Grid g(lam);
            long boxes = 0;
            for (long j = 1; j <= lam.num_rows(); ++j)
                for (long k = 1; k <= lam.row(j); ++k) {
                    ++boxes;
                    HookData hd = hook_arm_leg(lam, j, k);
                    CHECK(hd.a == g.arm(j, k));
                    CHECK(hd.l == g.leg(j, k));
                    CHECK(hd.h == hd.a + hd.l + 1);
                    CHECK(hook_row_count(lam, j, k) == hd.h);
                }
            CHECK(boxes == n);
        }
    }
}

TEST_CASE("conjugation symmetry of (hook, arm) vs (hook, leg)") {
    for (long n = 1; n <= 10; ++n)
        for (const auto& lam : partitions_of(n)) CHECK(verify_conjugation_symmetry(lam));
}

TEST_CASE("rank-two golden table") {
    auto factors_of = [](ClassDatum d) { return predict_zeta_multiset(d); };

    // Irreducible quadratic, partition [1]: a single degree-2 factor.
    ClassDatum elliptic{{{irreducible_quadratic(), Partition({1})}}};
    CHECK(factors_of(elliptic) == std::vector<LocalZetaFactor>{{2, 1, 0}});

    // Two distinct linear factors: zeta_F(s) twice.
    ClassDatum hyperbolic{{{linear(1), Partition({1})}, {linear(2), Partition({1})}}};
    CHECK(factors_of(hyperbolic) == std::vector<LocalZetaFactor>{{1, 1, 0}, {1, 1, 0}});

    // One linear factor with partition [2]: zeta_F(s) zeta_F(2s-1).
    ClassDatum parabolic{{{linear(1), Partition({2})}}};
    CHECK(factors_of(parabolic) == std::vector<LocalZetaFactor>{{1, 1, 0}, {1, 2, 1}});

    // One linear factor with partition [1,1]: zeta_F(s) zeta_F(2s).
    ClassDatum central{{{linear(1), Partition({1, 1})}}};
    CHECK(factors_of(central) == std::vector<LocalZetaFactor>{{1, 1, 0}, {1, 2, 0}});
}

TEST_CASE("single-row partitions give the regular chain") {
    for (long m = 1; m <= 6; ++m) {
        ClassDatum datum{{{irreducible_quadratic(), Partition({m})}}};
        std::vector<LocalZetaFactor> expected;
        for (long k = 1; k <= m; ++k) expected.push_back({2, k, k - 1});
        std::sort(expected.begin(), expected.end());
        CHECK(predict_zeta_multiset(datum) == expected);
    }
}

TEST_CASE("factor multiset size equals weighted diagram size") {
    ClassDatum datum{{{irreducible_quadratic(), Partition({3, 1})},
                      {linear(5), Partition({2, 2})}}};
    CHECK(datum.total_size() == 2 * 4 + 1 * 4);
    CHECK(predict_zeta_multiset(datum).size() == 8);  // one factor per box
}
