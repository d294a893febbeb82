#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "mira/cyclotomic.hpp"
#include "mira/rational.hpp"
#include "mira/schwartz.hpp"

namespace testsupport {

using namespace mira;

// Exact integral of prod_i f_i(A_i x + c_i) over Q_p^d, evaluated from the
// definition: enumerate representatives x with coordinates in p^lo Z / p^S Z
// and weight each by the cell volume p^{-S} per coordinate. Valid whenever
// every factor is supported on points of valuation >= lo and constant on
// cells of radius p^{-S}.
inline Cyclotomic brute_product_integral(
    const std::vector<std::pair<SchwartzFunction, AffineMap>>& factors, long p,
    long d, long lo, long S) {
    long per = 1;
    for (long i = lo; i < S; ++i) per *= p;
    Cyclotomic sum;
    std::vector<long> idx(d, 0);
    for (;;) {
        std::vector<Rational> x(d);
        for (long i = 0; i < d; ++i) x[i] = Rational(idx[i]) * p_power(p, lo);
        Cyclotomic val(Rational(1));
        for (const auto& [f, m] : factors) {
            val *= f.evaluate(m.apply(x));
            if (val.is_zero()) break;
        }
        sum += val;
        long i = 0;
        while (i < d && ++idx[i] == per) {
            idx[i] = 0;
            ++i;
        }
        if (i == d) break;
    }
    Rational cell(1);
    for (long i = 0; i < d; ++i) cell *= p_power(p, -S);
    return sum * Cyclotomic(cell);
}

// Numeric multiplicative-group integral int Phi(x)|x|^s d^x x computed from
// the definition: for each valuation shell m, enumerate unit classes
// u mod p^K (u not divisible by p) with d^x-volume 1/((p-1) p^{K-1}) each,
// normalized so vol(Z_p^x) = 1.
inline std::complex<double> brute_tate_sum(const SchwartzFunction& phi, double s,
                                           long min_shell, long max_shell, long K) {
    long p = phi.prime();
    long pK = 1;
    for (long i = 0; i < K; ++i) pK *= p;
    double class_vol = 1.0 / ((p - 1.0) * (pK / p));
    std::complex<double> total = 0.0;
    for (long m = min_shell; m <= max_shell; ++m) {
        std::complex<double> shell = 0.0;
        for (long u = 1; u < pK; ++u) {
            if (u % p == 0) continue;
            Rational x = Rational(u) * p_power(p, m);
            shell += phi.evaluate(std::vector<Rational>{x}).eval();
        }
        total += shell * class_vol * std::pow(static_cast<double>(p), -m * s);
    }
    return total;
}

}  // namespace testsupport
