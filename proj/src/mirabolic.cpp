#include "mira/mirabolic.hpp"

#include <algorithm>

#include "mira/errors.hpp"
#include "mira/laurent.hpp"

namespace mira {

GroupElement::GroupElement(long p_in, RationalMatrix g_in) : p(p_in), g(std::move(g_in)) {
    if (g.rows() != g.cols() || g.rows() < 1) throw Error("group element must be square");
    if (g.det() == 0) throw Error("group element must be invertible");
}

bool GroupElement::is_diagonal() const {
    for (long i = 0; i < n(); ++i)
        for (long j = 0; j < n(); ++j)
            if (i != j && g(i, j) != 0) return false;
    return true;
}

long GroupElement::det_valuation() const { return p_valuation(g.det(), p); }

Cyclotomic local_kernel(const GroupElement& g, const SchwartzFunction& f1,
                        const SchwartzFunction& f2) {
    long n = g.n();
    long d = n * n;
    if (f1.dim() != d || f2.dim() != d) throw Error("kernel inputs must live on n^2 coordinates");
    if (f1.prime() != g.p || f2.prime() != g.p) throw Error("kernel inputs use a different prime");

    RationalMatrix ginv = g.g.inverse();
    // Columns of the adjoint action on flattened matrices:
    // (g^{-1} E_{ij} g)_{kl} = (g^{-1})_{ki} g_{jl}.
    AffineMap ad;
    ad.matrix.assign(d, std::vector<Rational>(d, Rational(0)));
    ad.offset.assign(d, Rational(0));
    for (long k = 0; k < n; ++k)
        for (long l = 0; l < n; ++l)
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j)
                    ad.matrix[k * n + l][i * n + j] = ginv(k, i) * g.g(j, l);

    try {
        return affine_pullback_product_integral({{f1, AffineMap::identity(d)}, {f2, ad}}, d);
    } catch (const UnboundedSupport&) {
        throw InternalCheckFailure("kernel integrand unexpectedly non-compact");
    }
}

bool verify_kernel_swap(const GroupElement& g, const SchwartzFunction& f1,
                        const SchwartzFunction& f2) {
    Cyclotomic lhs = local_kernel(g, f1.fourier(Pairing::trace), f2);
    Cyclotomic rhs = local_kernel(g, f1, f2.fourier(Pairing::trace));
    return lhs == rhs;
}

namespace {

// Largest |valuation| hiding in a Schwartz function's ball data.
long data_radius(const SchwartzFunction& f) {
    long r = 0;
    for (const auto& t : f.terms())
        for (long i = 0; i < f.dim(); ++i) {
            r = std::max(r, std::abs(t.levels[i]));
            if (t.center[i] != 0) r = std::max(r, std::abs(p_valuation(t.center[i], f.prime())));
            if (t.twist[i] != 0) r = std::max(r, std::abs(p_valuation(t.twist[i], f.prime())));
        }
    return r;
}

}  // namespace

ZetaExpr local_eisenstein_integral(const GroupElement& g, const SchwartzFunction& phi1,
                                   const SchwartzFunction& phi2) {
    long n = g.n();
    long p = g.p;
    if (!g.is_diagonal()) throw Error("eisenstein integral requires diagonal g");
    if (phi1.dim() != n || phi2.dim() != n) throw Error("eisenstein inputs must live on n coordinates");
    if (phi1.prime() != p || phi2.prime() != p) throw Error("eisenstein inputs use a different prime");

    long gval = 0;
    for (long i = 0; i < n; ++i)
        gval = std::max(gval, std::abs(p_valuation(g.g(i, i), p)));
    long radius = std::max(data_radius(phi1), data_radius(phi2)) + gval;
    long bound = radius + 2;  // shell range for z
    long level = radius + 2;  // unit residue classes mod p^level

    // phi1(v) phi2(z v g) integrated over v, for one exact z.
    auto inner = [&](const Rational& z) {
        std::vector<Rational> c(n);
        for (long i = 0; i < n; ++i) c[i] = z * g.g(i, i);
        return (phi1 * phi2.scale_argument(c)).integrate();
    };

    // Average of the inner integral over the shell v(z) = m, with the
    // multiplicative normalization vol(Z_p^x) = 1.
    Integer classes(1);
    for (long i = 0; i < level - 1; ++i) classes *= p;
    classes *= (p - 1);
    Rational class_measure = Rational(1) / Rational(classes);
    Integer modulus(1);
    for (long i = 0; i < level; ++i) modulus *= p;
    auto shell = [&](long m) {
        Cyclotomic sum;
        for (Integer u(1); u < modulus; ++u) {
            if (u % p == 0) continue;
            sum += inner(p_power(p, m) * Rational(u));
        }
        return sum * Cyclotomic(class_measure);
    };

    long det_val = 0;
    for (long i = 0; i < n; ++i) det_val += p_valuation(g.g(i, i), p);

    std::vector<Rational> origin(n, Rational(0));
    // For v(z) large, z v g sits in the constancy ball of phi2 at 0.
    Cyclotomic c_pos = phi2.evaluate(origin) * phi1.integrate();
    // For v(z) very negative, phi1 is constant on the shrunken support and
    // the inner integral scales by |z|^{-n} |det g|^{-1}.
    Cyclotomic c_neg = phi1.evaluate(origin) * phi2.integrate() * Cyclotomic(p_power(p, det_val));

    if (shell(bound) != c_pos || shell(bound + 1) != c_pos)
        throw InternalCheckFailure("positive shell tail not stabilized");
    if (shell(-bound) != c_neg * Cyclotomic(p_power(p, -n * bound)) ||
        shell(-bound - 1) != c_neg * Cyclotomic(p_power(p, -n * (bound + 1))))
        throw InternalCheckFailure("negative shell tail not stabilized");

    LaurentPoly explicit_part;
    for (long m = -bound; m <= bound; ++m) {
        Cyclotomic s = shell(m);
        if (!s.is_zero()) explicit_part += LaurentPoly::monomial(s, n * m);
    }
    ZetaExpr result(p, explicit_part, {});
    if (!c_pos.is_zero()) {
        // sum_{m > bound} c_pos t^{nm} = c_pos t^{n(bound+1)} / (1 - t^n)
        result += ZetaExpr(p, LaurentPoly::monomial(c_pos, n * (bound + 1)),
                           {DenFactor{Cyclotomic(Rational(1)), n}});
    }
    if (!c_neg.is_zero()) {
        // sum_{m < -bound} c_neg (q^n t^n)^m = -c_neg (q^n t^n)^{-bound} / (1 - q^n t^n)
        result += ZetaExpr(
            p, LaurentPoly::monomial(-c_neg * Cyclotomic(p_power(p, -n * bound)), -n * bound),
            {DenFactor{Cyclotomic(p_power(p, n)), n}});
    }
    // |det g|^s = t^{v_p(det g)}
    return result * ZetaExpr(p, LaurentPoly::monomial(Cyclotomic(Rational(1)), det_val), {});
}

ZetaExpr gl1_local_trace(const SchwartzFunction& f1, const SchwartzFunction& f2,
                         const SchwartzFunction& phi1, const SchwartzFunction& phi2) {
    if (f1.dim() != 1 || f2.dim() != 1 || phi1.dim() != 1 || phi2.dim() != 1)
        throw Error("gl1 trace requires one-dimensional inputs");
    Cyclotomic kernel = (f1 * f2).integrate();
    GroupElement one(f1.prime(), RationalMatrix::identity(1));
    ZetaExpr eis = local_eisenstein_integral(one, phi1, phi2);
    return ZetaExpr::constant(f1.prime(), kernel) * eis;
}

}  // namespace mira
