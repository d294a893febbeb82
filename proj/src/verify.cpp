#include "mira/verify.hpp"

#include <cmath>
#include <complex>

#include "mira/canonical.hpp"
#include "mira/errors.hpp"
#include "mira/mirabolic.hpp"
#include "mira/partitions.hpp"
#include "mira/tate.hpp"

namespace mira {

Rational random_rational(Rng& rng, long num_range, long den_range) {
    long num = static_cast<long>(rng() % (2 * num_range + 1)) - num_range;
    long den = 1 + static_cast<long>(rng() % den_range);
    return Rational(num) / Rational(den);
}

SchwartzFunction random_schwartz(Rng& rng, long p, long d, long max_terms, long max_level) {
    SchwartzFunction f(p, d);
    long terms = 1 + static_cast<long>(rng() % max_terms);
    for (long t = 0; t < terms; ++t) {
        ModulatedBall b;
        Rational c = random_rational(rng);
        if (c == 0) c = 1;
        b.coeff = Cyclotomic(c);
        if (rng() % 3 == 0)
            b.coeff *= Cyclotomic::root_of_unity(p, 1, static_cast<long>(rng() % p));
        for (long i = 0; i < d; ++i) {
            b.center.push_back(random_rational(rng, 6, p));
            b.twist.push_back(random_rational(rng, 6, p));
            b.levels.push_back(static_cast<long>(rng() % (2 * max_level + 1)) - max_level);
        }
        f.add_term(std::move(b));
    }
    if (f.is_zero()) return SchwartzFunction::unit_ball(p, d);
    return f;
}

RationalMatrix random_matrix(Rng& rng, long n) {
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) m(i, j) = random_rational(rng, 4, 2);
    return m;
}

RationalMatrix random_invertible(Rng& rng, long n) {
    for (;;) {
        RationalMatrix m = random_matrix(rng, n);
        if (m.det() != 0) return m;
    }
}

RationalPoly random_monic_poly(Rng& rng, long deg) {
    std::vector<Rational> c;
    for (long i = 0; i < deg; ++i) c.push_back(random_rational(rng, 5, 2));
    c.push_back(Rational(1));
    return RationalPoly(std::move(c));
}

namespace {

CheckResult equality_check(const std::string& name, const Cyclotomic& lhs,
                           const Cyclotomic& rhs) {
    CheckResult r{name, lhs == rhs, ""};
    if (!r.pass) r.witness = lhs.str() + " != " + rhs.str();
    return r;
}

CheckResult equality_check(const std::string& name, const ZetaExpr& lhs, const ZetaExpr& rhs) {
    CheckResult r{name, lhs.equals(rhs), ""};
    if (!r.pass) r.witness = lhs.str() + " != " + rhs.str();
    return r;
}

long pick_prime(Rng& rng) {
    static const long primes[] = {2, 3, 5};
    return primes[rng() % 3];
}

// Truncated multiplicative shell sum for the Tate integral, summed
// numerically at s; shells far in the tail repeat phi(0).
std::complex<double> tate_truncated_sum(const SchwartzFunction& phi, double s, long max_shell) {
    long p = phi.prime();
    auto ball_integral = [&](long m) {
        return (phi * SchwartzFunction::ball(p, {Rational(0)}, {m})).integrate();
    };
    std::complex<double> total(0);
    double t = std::pow(static_cast<double>(p), -s);
    Rational unit_scale = Rational(p) / Rational(p - 1);
    for (long m = -max_shell; m <= max_shell; ++m) {
        Cyclotomic shell =
            (ball_integral(m) - ball_integral(m + 1)) * Cyclotomic(p_power(p, m) * unit_scale);
        total += shell.eval() * std::pow(t, static_cast<double>(m));
    }
    return total;
}

}  // namespace

std::vector<CheckResult> suite_fourier(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long p = pick_prime(rng);
        bool trace = rng() % 2 == 0;
        long d = trace ? (rng() % 2 ? 1 : 4) : 1 + static_cast<long>(rng() % 4);
        Pairing pairing = trace ? Pairing::trace : Pairing::dot;
        SchwartzFunction f = random_schwartz(rng, p, d);
        SchwartzFunction twice = f.fourier(pairing).fourier(pairing);
        CheckResult r;
        r.name = "fourier-involution #" + std::to_string(i) + " p=" + std::to_string(p) +
                 " d=" + std::to_string(d) + (trace ? " trace" : " dot");
        r.pass = twice == f.negate_argument();
        if (!r.pass) r.witness = "F(F(f)) differs from f(-x)";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_plancherel(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long p = pick_prime(rng);
        bool trace = rng() % 2 == 0;
        long d = trace ? (rng() % 2 ? 1 : 4) : 1 + static_cast<long>(rng() % 4);
        Pairing pairing = trace ? Pairing::trace : Pairing::dot;
        SchwartzFunction f1 = random_schwartz(rng, p, d);
        SchwartzFunction f2 = random_schwartz(rng, p, d);
        std::string name = "plancherel #" + std::to_string(i) + " p=" + std::to_string(p) +
                           " d=" + std::to_string(d) + (trace ? " trace" : " dot");
        out.push_back(equality_check(name, (f1.fourier(pairing) * f2).integrate(),
                                     (f1 * f2.fourier(pairing)).integrate()));
    }
    return out;
}

std::vector<CheckResult> suite_tate_fe(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long p = pick_prime(rng);
        SchwartzFunction phi1 = random_schwartz(rng, p, 1);
        SchwartzFunction phi2 = random_schwartz(rng, p, 1);
        TateFunctionalEquation fe = verify_local_functional_equation(phi1, phi2);
        CheckResult r;
        r.name = "tate-fe #" + std::to_string(i) + " p=" + std::to_string(p);
        r.pass = fe.holds;
        if (!r.pass) r.witness = fe.lhs.str() + " != " + fe.rhs.str();
        out.push_back(std::move(r));

        // Numeric cross-check of the closed form against a truncated shell
        // sum at three interior sample points.
        ZetaExpr exact = local_tate_integral(phi1);
        CheckResult num;
        num.name = "tate-numeric #" + std::to_string(i) + " p=" + std::to_string(p);
        num.pass = true;
        for (double s : {0.25, 0.5, 0.75}) {
            std::complex<double> direct = tate_truncated_sum(phi1, s, 160);
            std::complex<double> closed = exact.eval_at_s({s, 0.0});
            if (std::abs(direct - closed) > 1e-9) {
                num.pass = false;
                num.witness = "s=" + std::to_string(s) + ": " + std::to_string(direct.real()) +
                              " vs " + std::to_string(closed.real());
                break;
            }
        }
        out.push_back(std::move(num));
    }
    return out;
}

std::vector<CheckResult> suite_kernel_swap(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long p = rng() % 2 ? 2 : 3;
        long n = 1 + static_cast<long>(rng() % 3);
        GroupElement g(p, random_invertible(rng, n));
        SchwartzFunction f1 = random_schwartz(rng, p, n * n, 2, 1);
        SchwartzFunction f2 = random_schwartz(rng, p, n * n, 2, 1);
        CheckResult r;
        r.name = "kernel-swap #" + std::to_string(i) + " p=" + std::to_string(p) +
                 " n=" + std::to_string(n);
        r.pass = verify_kernel_swap(g, f1, f2);
        if (!r.pass) r.witness = "K(g; F f1, f2) != K(g; f1, F f2)";
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_hooks(long max_n) {
    std::vector<CheckResult> out;
    for (long n = 1; n <= max_n; ++n) {
        CheckResult r;
        r.name = "hook-formula n=" + std::to_string(n);
        r.pass = true;
        for (const Partition& lam : partitions_of(n)) {
            long boxes = 0;
            std::vector<long> first_col;
            for (long j = 1; j <= lam.num_rows() && r.pass; ++j)
                for (long k = 1; k <= lam.row(j); ++k) {
                    ++boxes;
                    HookData d = hook_arm_leg(lam, j, k);
                    if (k == 1) first_col.push_back(d.h);
                    if (hook_row_count(lam, j, k) != d.h) {
                        r.pass = false;
                        r.witness = lam.str() + " box (" + std::to_string(j) + "," +
                                    std::to_string(k) + ")";
                        break;
                    }
                }
            if (boxes != n) {
                r.pass = false;
                r.witness = lam.str() + " box count " + std::to_string(boxes);
            }
            std::sort(first_col.begin(), first_col.end());
            if (std::adjacent_find(first_col.begin(), first_col.end()) != first_col.end()) {
                r.pass = false;
                r.witness = lam.str() + " repeated first-column hook";
            }
            if (!r.pass) break;
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_conjugation(long max_n) {
    std::vector<CheckResult> out;
    for (long n = 1; n <= max_n; ++n) {
        CheckResult r;
        r.name = "conjugation-symmetry n=" + std::to_string(n);
        r.pass = true;
        for (const Partition& lam : partitions_of(n)) {
            if (conjugate(conjugate(lam)) != lam) {
                r.pass = false;
                r.witness = lam.str() + ": double conjugate differs";
                break;
            }
            if (!verify_conjugation_symmetry(lam)) {
                r.pass = false;
                r.witness = lam.str() + ": (h,a)/(h,l) multisets differ";
                break;
            }
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_gl1_trace(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long p = rng() % 2 ? 2 : 3;
        SchwartzFunction f1 = random_schwartz(rng, p, 1);
        SchwartzFunction f2 = random_schwartz(rng, p, 1);
        SchwartzFunction phi1 = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction phi2 = random_schwartz(rng, p, 1, 2, 1);
        out.push_back(equality_check(
            "gl1-trace-swap #" + std::to_string(i) + " p=" + std::to_string(p),
            gl1_local_trace(f1.fourier(), f2, phi1, phi2),
            gl1_local_trace(f1, f2.fourier(), phi1, phi2)));
    }
    return out;
}

std::vector<CheckResult> suite_frobenius(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long n = 1 + static_cast<long>(rng() % 5);
        RationalMatrix X = random_matrix(rng, n);
        CheckResult r;
        r.name = "frobenius #" + std::to_string(i) + " n=" + std::to_string(n);
        r.pass = true;
        try {
            FrobeniusForm f = frobenius_normal_form(X);  // certificate verified inside
            RationalPoly prod(Rational(1));
            for (size_t k = 0; k < f.factors.size(); ++k) {
                prod *= f.factors[k];
                if (k > 0 && !poly_divmod(f.factors[k], f.factors[k - 1]).second.is_zero()) {
                    r.pass = false;
                    r.witness = "divisibility chain broken";
                }
            }
            if (prod != char_poly(X)) {
                r.pass = false;
                r.witness = "invariant factor product differs from char poly";
            }
            RationalMatrix g = random_invertible(rng, n);
            ClassDatum d1 = class_datum(X);
            ClassDatum d2 = class_datum(g.inverse() * X * g);
            bool same = d1.components.size() == d2.components.size();
            for (size_t k = 0; same && k < d1.components.size(); ++k)
                same = d1.components[k].poly == d2.components[k].poly &&
                       d1.components[k].partition == d2.components[k].partition;
            if (!same) {
                r.pass = false;
                r.witness = "class datum not conjugation invariant";
            }
        } catch (const Error& e) {
            r.pass = false;
            r.witness = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<CheckResult> suite_eisenstein(uint64_t seed, long count) {
    Rng rng(seed);
    std::vector<CheckResult> out;
    for (long i = 0; i < count; ++i) {
        long p = rng() % 2 ? 2 : 3;
        SchwartzFunction phi1 = random_schwartz(rng, p, 1, 2, 1);
        SchwartzFunction phi2 = random_schwartz(rng, p, 1, 2, 1);
        RationalMatrix gm(1, 1);
        gm(0, 0) = p_power(p, static_cast<long>(rng() % 3) - 1);
        GroupElement g(p, gm);
        CheckResult r;
        r.name = "eisenstein #" + std::to_string(i) + " p=" + std::to_string(p);
        r.pass = true;
        try {
            ZetaExpr closed = local_eisenstein_integral(g, phi1, phi2);
            // Numeric oracle: truncated double sum over shells and unit
            // classes of z at s = 1/2.
            double s = 0.5;
            std::complex<double> t = std::pow(static_cast<double>(p), -s);
            std::complex<double> direct(0);
            long level = p == 2 ? 6 : 5;  // finer than the implementation's class level
            long max_shell = p == 2 ? 80 : 50;
            long modulus = 1;
            for (long k = 0; k < level; ++k) modulus *= p;
            long unit_count = modulus / p * (p - 1);
            for (long m = -max_shell; m <= max_shell; ++m) {
                std::complex<double> shell(0);
                for (long u = 1; u < modulus; ++u) {
                    if (u % p == 0) continue;
                    Rational z = p_power(p, m) * Rational(u) * g.g(0, 0);
                    shell += (phi1 * phi2.scale_argument({z})).integrate().eval();
                }
                direct += shell / static_cast<double>(unit_count) *
                          std::pow(t, static_cast<double>(m));
            }
            direct *= std::pow(t, static_cast<double>(g.det_valuation()));
            std::complex<double> closed_val = closed.eval_at_s({s, 0.0});
            if (std::abs(direct - closed_val) > 1e-9) {
                r.pass = false;
                r.witness = "numeric " + std::to_string(direct.real()) + " vs closed " +
                            std::to_string(closed_val.real());
            }
            // Rank-one covariance: scaling g by p does not change the value.
            RationalMatrix gp(1, 1);
            gp(0, 0) = g.g(0, 0) * p;
            ZetaExpr scaled = local_eisenstein_integral(GroupElement(p, gp), phi1, phi2);
            if (!scaled.equals(closed)) {
                r.pass = false;
                r.witness = "E(p*g) != E(g): " + scaled.str() + " vs " + closed.str();
            }
        } catch (const Error& e) {
            r.pass = false;
            r.witness = e.what();
        }
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<std::string> suite_names() {
    return {"fourier",     "plancherel", "tate-fe",   "kernel-swap", "hooks",
            "conjugation", "gl1-trace",  "frobenius", "eisenstein"};
}

std::vector<CheckResult> run_suite(const std::string& name, uint64_t seed, long count) {
    if (name == "fourier") return suite_fourier(seed, count);
    if (name == "plancherel") return suite_plancherel(seed, count);
    if (name == "tate-fe") return suite_tate_fe(seed, count);
    if (name == "kernel-swap") return suite_kernel_swap(seed, count);
    if (name == "hooks") return suite_hooks();
    if (name == "conjugation") return suite_conjugation();
    if (name == "gl1-trace") return suite_gl1_trace(seed, count);
    if (name == "frobenius") return suite_frobenius(seed, count);
    if (name == "eisenstein") return suite_eisenstein(seed, count);
    throw Error("unknown verification suite: " + name);
}

}  // namespace mira
