#include "mira/canonical.hpp"

#include <algorithm>
#include <map>

#include "mira/errors.hpp"

namespace mira {

RationalPoly char_poly(const RationalMatrix& X) {
    if (X.rows() != X.cols()) throw Error("char_poly requires a square matrix");
    long n = X.rows();
    // Faddeev-LeVerrier: exact and division-light.
    std::vector<Rational> coeffs(n + 1, Rational(0));
    coeffs[n] = 1;
    RationalMatrix M = RationalMatrix::identity(n);
    for (long k = 1; k <= n; ++k) {
        M = X * M;
        Rational tr(0);
        for (long i = 0; i < n; ++i) tr += M(i, i);
        Rational ck = -tr / Rational(k);
        coeffs[n - k] = ck;
        for (long i = 0; i < n; ++i) M(i, i) += ck;
    }
    return RationalPoly(std::move(coeffs));
}

RationalMatrix companion(const RationalPoly& p) {
    if (!p.is_monic() || p.degree() < 1) throw Error("companion requires a monic polynomial of degree >= 1");
    long n = p.degree();
    RationalMatrix X(n, n);
    // p = t^n - a_1 t^{n-1} - ... - a_n, so a_i = -coeff(n - i).
    for (long j = 0; j < n; ++j) X(0, j) = -p.coeff(n - 1 - j);
    for (long i = 1; i < n; ++i) X(i, i - 1) = 1;
    return X;
}

namespace {

using PolyMatrix = std::vector<std::vector<RationalPoly>>;

// Smith normal form of M over Q[t] by row/column reduction, tracking
// W = U^{-1} for the accumulated row operations U. Row operations on M map
// to column operations on W so that U M_orig V = diag holds with W = U^{-1}.
struct SmithState {
    PolyMatrix m;
    PolyMatrix w;  // U^{-1}

    explicit SmithState(PolyMatrix mm) : m(std::move(mm)) {
        long n = static_cast<long>(m.size());
        w.assign(n, std::vector<RationalPoly>(n));
        for (long i = 0; i < n; ++i) w[i][i] = RationalPoly(1);
    }
    long n() const { return static_cast<long>(m.size()); }

    void swap_rows(long i, long j) {
        std::swap(m[i], m[j]);
        for (long r = 0; r < n(); ++r) std::swap(w[r][i], w[r][j]);
    }
    void swap_cols(long i, long j) {
        for (long r = 0; r < n(); ++r) std::swap(m[r][i], m[r][j]);
    }
    // row_i += q * row_j
    void add_row(long i, long j, const RationalPoly& q) {
        for (long c = 0; c < n(); ++c) m[i][c] += q * m[j][c];
        for (long r = 0; r < n(); ++r) w[r][j] -= q * w[r][i];
    }
    // col_i += q * col_j
    void add_col(long i, long j, const RationalPoly& q) {
        for (long r = 0; r < n(); ++r) m[r][i] += q * m[r][j];
    }
    void scale_row(long i, const Rational& c) {
        for (long j = 0; j < n(); ++j) m[i][j] = m[i][j].scale(c);
        for (long r = 0; r < n(); ++r) w[r][i] = w[r][i].scale(Rational(1) / c);
    }

    void reduce() {
        for (long k = 0; k < n(); ++k) pivot_step(k);
    }

    void pivot_step(long k) {
        for (;;) {
            // Bring a minimal-degree nonzero entry to (k,k).
            long bi = -1, bj = -1;
            for (long i = k; i < n(); ++i)
                for (long j = k; j < n(); ++j)
                    if (!m[i][j].is_zero() &&
                        (bi < 0 || m[i][j].degree() < m[bi][bj].degree())) {
                        bi = i;
                        bj = j;
                    }
            if (bi < 0) return;  // submatrix is zero
            if (bi != k) swap_rows(bi, k);
            if (bj != k) swap_cols(bj, k);

            bool clean = true;
            for (long i = k + 1; i < n(); ++i) {
                if (m[i][k].is_zero()) continue;
                add_row(i, k, -poly_divmod(m[i][k], m[k][k]).first);
                if (!m[i][k].is_zero()) clean = false;  // degree dropped
            }
            for (long j = k + 1; j < n(); ++j) {
                if (m[k][j].is_zero()) continue;
                add_col(j, k, -poly_divmod(m[k][j], m[k][k]).first);
                if (!m[k][j].is_zero()) clean = false;
            }
            if (!clean) continue;

            // Enforce the divisibility chain: fold a non-divisible entry
            // into the pivot row and reduce again.
            bool chain_ok = true;
            for (long i = k + 1; i < n() && chain_ok; ++i)
                for (long j = k + 1; j < n() && chain_ok; ++j)
                    if (!m[i][j].is_zero() &&
                        !poly_divmod(m[i][j], m[k][k]).second.is_zero()) {
                        add_row(k, i, RationalPoly(1));
                        chain_ok = false;
                    }
            if (chain_ok) {
                scale_row(k, Rational(1) / m[k][k].leading());
                return;
            }
        }
    }
};

PolyMatrix t_identity_minus(const RationalMatrix& X) {
    long n = X.rows();
    PolyMatrix m(n, std::vector<RationalPoly>(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            m[i][j] = RationalPoly(-X(i, j));
            if (i == j) m[i][j] += RationalPoly::monomial(Rational(1), 1);
        }
    return m;
}

// Evaluate a vector of polynomials at X applied to the standard basis:
// (u_1(t),...,u_n(t)) -> sum_j u_j(X) e_j, computed by Horner on vectors.
std::vector<Rational> eval_poly_column(const std::vector<RationalPoly>& col,
                                       const RationalMatrix& X) {
    long n = X.rows();
    long deg = -1;
    for (const auto& p : col) deg = std::max(deg, p.degree());
    std::vector<Rational> acc(n, Rational(0));
    for (long k = deg; k >= 0; --k) {
        std::vector<Rational> next(n, Rational(0));
        for (long i = 0; i < n; ++i) {
            for (long j = 0; j < n; ++j) next[i] += X(i, j) * acc[j];
            next[i] += col[i].coeff(k);
        }
        acc = std::move(next);
    }
    return acc;
}

}  // namespace

std::vector<RationalPoly> invariant_factors(const RationalMatrix& X) {
    if (X.rows() != X.cols()) throw Error("invariant_factors requires a square matrix");
    SmithState s(t_identity_minus(X));
    s.reduce();
    std::vector<RationalPoly> out;
    for (long k = 0; k < s.n(); ++k)
        if (s.m[k][k].degree() >= 1) out.push_back(s.m[k][k]);
    return out;
}

FrobeniusForm frobenius_normal_form(const RationalMatrix& X) {
    if (X.rows() != X.cols()) throw Error("frobenius_normal_form requires a square matrix");
    long n = X.rows();
    SmithState s(t_identity_minus(X));
    s.reduce();

    FrobeniusForm out;
    out.F = RationalMatrix(n, n);
    out.S = RationalMatrix(n, n);
    long col = 0;
    for (long k = 0; k < n; ++k) {
        const RationalPoly& d = s.m[k][k];
        if (d.degree() < 1) continue;
        out.factors.push_back(d);
        long m = d.degree();
        RationalMatrix block = companion(d);
        for (long i = 0; i < m; ++i)
            for (long j = 0; j < m; ++j) out.F(col + i, col + j) = block(i, j);

        // Cyclic generator for this block: column k of U^{-1} evaluated at X.
        std::vector<RationalPoly> wk(n);
        for (long r = 0; r < n; ++r) wk[r] = s.w[r][k];
        std::vector<Rational> u1 = eval_poly_column(wk, X);
        std::vector<Rational> u = u1;
        for (long j = 0; j < m; ++j) {
            for (long r = 0; r < n; ++r) out.S(r, col + j) = u[r];
            if (j + 1 == m) break;
            // u_{j+1} = X u_j - a_{j+1} u_1 with a_i = -coeff(m-i).
            std::vector<Rational> next(n, Rational(0));
            for (long r = 0; r < n; ++r)
                for (long c = 0; c < n; ++c) next[r] += X(r, c) * u[c];
            Rational aj = -d.coeff(m - 1 - j);
            for (long r = 0; r < n; ++r) next[r] -= aj * u1[r];
            u = std::move(next);
        }
        col += m;
    }
    if (col != n) throw InternalCheckFailure("invariant factor degrees do not sum to n");
    if (out.S.det() == 0) throw InternalCheckFailure("similarity certificate is singular");
    if (X * out.S != out.S * out.F)
        throw InternalCheckFailure("similarity certificate identity failed");
    return out;
}

bool is_regular_pair(const RationalMatrix& X, const std::vector<Rational>& v) {
    if (X.rows() != X.cols()) throw Error("is_regular_pair requires a square matrix");
    long n = X.rows();
    if (static_cast<long>(v.size()) != n) throw Error("row vector has wrong dimension");
    RationalMatrix krylov(n, n);
    std::vector<Rational> row = v;
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) krylov(i, j) = row[j];
        if (i + 1 < n) row = row_times_matrix(row, X);
    }
    return krylov.rank() == n;
}

namespace {

// Positive and negative divisors of a nonzero integer.
std::vector<Integer> all_divisors(const Integer& v) {
    Integer n = abs(v);
    std::vector<Integer> divs;
    for (Integer d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            divs.push_back(d);
            if (d * d != n) divs.push_back(n / d);
        }
    }
    size_t pos = divs.size();
    for (size_t i = 0; i < pos; ++i) divs.push_back(-divs[i]);
    return divs;
}

// Clear denominators and content: primitive integer polynomial with
// positive leading coefficient, a rational multiple of p.
std::vector<Integer> primitive_integer_form(const RationalPoly& p) {
    Integer lcm(1);
    for (const auto& c : p.coeffs()) lcm = lcm / gcd(lcm, c.get_den()) * c.get_den();
    std::vector<Integer> out;
    Integer content(0);
    for (const auto& c : p.coeffs()) {
        Rational scaled = c * Rational(lcm);
        out.push_back(scaled.get_num());
        content = gcd(content, out.back());
    }
    for (auto& c : out) c /= content;
    if (out.back() < 0)
        for (auto& c : out) c = -c;
    return out;
}

Rational eval_int_poly(const std::vector<Integer>& c, long x) {
    Rational v(0);
    for (auto it = c.rbegin(); it != c.rend(); ++it) v = v * Rational(x) + Rational(*it);
    return v;
}

// Lagrange interpolation through (xs[i], ys[i]).
RationalPoly interpolate(const std::vector<long>& xs, const std::vector<Rational>& ys) {
    RationalPoly out;
    for (size_t i = 0; i < xs.size(); ++i) {
        RationalPoly basis(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (i == j) continue;
            basis *= RationalPoly(std::vector<Rational>{Rational(-xs[j]), Rational(1)});
            denom *= Rational(xs[i] - xs[j]);
        }
        out += basis.scale(ys[i] / denom);
    }
    return out;
}

// Strip all monic linear factors found by the rational root theorem.
void extract_rational_roots(RationalPoly& f, std::vector<RationalPoly>& out) {
    for (;;) {
        if (f.degree() < 1) return;
        std::vector<Integer> P = primitive_integer_form(f);
        if (P.front() == 0) {
            out.push_back(RationalPoly(std::vector<Rational>{Rational(0), Rational(1)}));
            f = poly_divmod(f, out.back()).first;
            continue;
        }
        bool found = false;
        for (const Integer& u : all_divisors(P.front())) {
            for (const Integer& v : all_divisors(P.back())) {
                if (v < 0) continue;
                Rational root = Rational(u) / Rational(v);
                if (f.eval(root) != 0) continue;
                RationalPoly lin(std::vector<Rational>{-root, Rational(1)});
                out.push_back(lin);
                f = poly_divmod(f, lin).first;
                found = true;
                break;
            }
            if (found) break;
        }
        if (!found) return;
    }
}

void factor_squarefree(RationalPoly f, std::vector<RationalPoly>& out) {
    f = f.monic();
    extract_rational_roots(f, out);
    if (f.degree() < 1) return;
    if (f.degree() <= 3) {  // no rational roots and degree <= 3: irreducible
        out.push_back(f);
        return;
    }
    std::vector<Integer> P = primitive_integer_form(f);
    long deg = f.degree();
    // Kronecker search: a degree-e factor g satisfies g(x) | P(x) at every
    // integer point, so interpolate through divisor tuples.
    for (long e = 2; e * 2 <= deg; ++e) {
        std::vector<long> xs;
        std::vector<std::vector<Integer>> choices;
        for (long x = 0; static_cast<long>(xs.size()) < e + 1; ++x) {
            xs.push_back(x);
            Rational val = eval_int_poly(P, x);
            if (val == 0) throw InternalCheckFailure("unexpected integer root after root extraction");
            choices.push_back(all_divisors(val.get_num()));
        }
        std::vector<size_t> idx(e + 1, 0);
        // Fix the sign of the value at xs[0] (g and -g give the same factor).
        size_t first_count = choices[0].size() / 2;
        for (;;) {
            std::vector<Rational> ys;
            for (long i = 0; i <= e; ++i) ys.push_back(Rational(choices[i][idx[i]]));
            RationalPoly g = interpolate(xs, ys);
            if (g.degree() == e && poly_divmod(f, g).second.is_zero()) {
                RationalPoly gm = g.monic();
                factor_squarefree(gm, out);
                factor_squarefree(poly_divmod(f, gm).first, out);
                return;
            }
            long pos = e;
            while (pos >= 0) {
                size_t limit = pos == 0 ? first_count : choices[pos].size();
                if (++idx[pos] < limit) break;
                idx[pos] = 0;
                --pos;
            }
            if (pos < 0) break;
        }
    }
    out.push_back(f);  // no factor of degree <= deg/2: irreducible
}

}  // namespace

std::vector<std::pair<RationalPoly, long>> factor_over_rationals(const RationalPoly& p,
                                                                 long degree_bound) {
    if (p.degree() < 1) throw Error("factorization requires degree >= 1");
    if (p.degree() > degree_bound)
        throw DegreeBoundExceeded("polynomial degree " + std::to_string(p.degree()) +
                                  " exceeds factorization bound " + std::to_string(degree_bound));
    // Yun's squarefree decomposition, then factor each squarefree part.
    std::map<RationalPoly, long> found;
    RationalPoly f = p.monic();
    RationalPoly g = poly_gcd(f, f.derivative());
    RationalPoly w = poly_divmod(f, g).first;
    RationalPoly y = poly_divmod(f.derivative(), g).first;
    RationalPoly z = y - w.derivative();
    for (long mult = 1; w.degree() >= 1; ++mult) {
        RationalPoly part = poly_gcd(w, z);
        if (part.degree() >= 1) {
            std::vector<RationalPoly> irred;
            factor_squarefree(part, irred);
            for (const auto& q : irred) found[q] += mult;
        }
        w = poly_divmod(w, part).first;
        y = poly_divmod(z, part).first;
        z = y - w.derivative();
    }
    std::vector<std::pair<RationalPoly, long>> out(found.begin(), found.end());

    RationalPoly check(Rational(1));
    for (const auto& [q, m] : out)
        for (long i = 0; i < m; ++i) check *= q;
    if (check != p.monic()) throw InternalCheckFailure("factorization does not reproduce input");
    return out;
}

ClassDatum class_datum(const RationalMatrix& X, long degree_bound) {
    std::vector<RationalPoly> inv = invariant_factors(X);
    // The largest invariant factor contains every irreducible factor.
    auto irred = factor_over_rationals(inv.back(), degree_bound);
    ClassDatum datum;
    for (const auto& [q, mult_unused] : irred) {
        std::vector<long> rows;
        for (auto it = inv.rbegin(); it != inv.rend(); ++it) {
            long e = 0;
            RationalPoly f = *it;
            for (;;) {
                auto [quot, rem] = poly_divmod(f, q);
                if (!rem.is_zero()) break;
                f = quot;
                ++e;
            }
            if (e == 0) break;  // divisibility chain: later factors have no q either
            rows.push_back(e);
        }
        datum.components.push_back({q, Partition(std::move(rows))});
    }
    if (datum.total_size() != X.rows())
        throw InternalCheckFailure("class datum size mismatch");
    return datum;
}

std::string Classification::str() const {
    if (elliptic) return "elliptic";
    if (regular_semisimple) return "regular-semisimple";
    if (regular) return "regular";
    if (semisimple) return "semisimple";
    return "other";
}

Classification classify(const RationalPoly& p, const ClassDatum& datum) {
    RationalPoly check(Rational(1));
    for (const auto& comp : datum.components)
        for (long i = 0; i < comp.partition.size(); ++i) check *= comp.poly;
    if (check != p.monic()) throw Error("class datum inconsistent with polynomial");

    Classification c;
    c.regular = true;
    c.semisimple = true;
    for (const auto& comp : datum.components) {
        if (comp.partition.num_rows() != 1) c.regular = false;
        if (comp.partition.rows[0] != 1) c.semisimple = false;
    }
    c.regular_semisimple = c.regular && c.semisimple;
    c.elliptic = datum.components.size() == 1 &&
                 datum.components[0].partition == Partition({1}) &&
                 datum.components[0].poly.degree() == p.degree();
    return c;
}

Rational discriminant(const RationalPoly& p) {
    long n = p.degree();
    if (n < 1) throw Error("discriminant requires degree >= 1");
    Rational sign = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    return sign * resultant(p, p.derivative()) / p.leading();
}

}  // namespace mira
