#include "mira/schwartz.hpp"

#include <algorithm>
#include <climits>
#include <cmath>

#include "mira/errors.hpp"

namespace mira {

namespace {

constexpr long kInfVal = LONG_MAX / 4;

long val_or_inf(const Rational& x, long p) {
    if (x == 0) return kInfVal;
    return p_valuation(x, p);
}

Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s(0);
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

int compare_rat_vec(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c;
    }
    return 0;
}

bool term_key_less(const ModulatedBall& a, const ModulatedBall& b) {
    if (a.levels != b.levels) return a.levels < b.levels;
    int c = compare_rat_vec(a.center, b.center);
    if (c != 0) return c < 0;
    return compare_rat_vec(a.twist, b.twist) < 0;
}

bool term_key_equal(const ModulatedBall& a, const ModulatedBall& b) {
    return a.levels == b.levels && compare_rat_vec(a.center, b.center) == 0 &&
           compare_rat_vec(a.twist, b.twist) == 0;
}

}  // namespace

SchwartzFunction SchwartzFunction::unit_ball(long p, long d) {
    return ball(p, std::vector<Rational>(d, Rational(0)), std::vector<long>(d, 0));
}

SchwartzFunction SchwartzFunction::ball(long p, const std::vector<Rational>& center,
                                        const std::vector<long>& levels) {
    SchwartzFunction f(p, static_cast<long>(center.size()));
    ModulatedBall t;
    t.coeff = Cyclotomic(Rational(1));
    t.twist = std::vector<Rational>(center.size(), Rational(0));
    t.center = center;
    t.levels = levels;
    f.add_term(std::move(t));
    return f;
}

void SchwartzFunction::add_term(ModulatedBall term) {
    if (static_cast<long>(term.twist.size()) != d_ ||
        static_cast<long>(term.center.size()) != d_ ||
        static_cast<long>(term.levels.size()) != d_)
        throw Error("term dimension mismatch");
    terms_.push_back(std::move(term));
    canonicalize();
}

void SchwartzFunction::canonicalize() {
    std::vector<ModulatedBall> canon;
    for (auto& t : terms_) {
        if (t.coeff.is_zero()) continue;
        ModulatedBall c = t;
        for (long i = 0; i < d_; ++i)
            c.center[i] = padic_canonical_rep(t.center[i], p_, t.levels[i]);
        // psi(<b,x>) on the coset depends on b mod the dual lattice; the
        // difference contributes a constant character value.
        Rational correction(0);
        for (long i = 0; i < d_; ++i) {
            Rational reduced = padic_canonical_rep(t.twist[i], p_, -t.levels[i]);
            correction += (t.twist[i] - reduced) * c.center[i];
            c.twist[i] = reduced;
        }
        c.coeff = t.coeff * additive_character_value(correction, p_);
        if (!c.coeff.is_zero()) canon.push_back(std::move(c));
    }
    std::sort(canon.begin(), canon.end(), term_key_less);
    std::vector<ModulatedBall> merged;
    for (auto& t : canon) {
        if (!merged.empty() && term_key_equal(merged.back(), t)) {
            merged.back().coeff += t.coeff;
            if (merged.back().coeff.is_zero()) merged.pop_back();
        } else {
            merged.push_back(std::move(t));
        }
    }
    terms_ = std::move(merged);
}

SchwartzFunction SchwartzFunction::operator+(const SchwartzFunction& o) const {
    if (p_ != o.p_ || d_ != o.d_) throw Error("schwartz function shape mismatch");
    SchwartzFunction r = *this;
    r.terms_.insert(r.terms_.end(), o.terms_.begin(), o.terms_.end());
    r.canonicalize();
    return r;
}

SchwartzFunction SchwartzFunction::scale(const Cyclotomic& c) const {
    SchwartzFunction r = *this;
    for (auto& t : r.terms_) t.coeff = t.coeff * c;
    r.canonicalize();
    return r;
}

SchwartzFunction SchwartzFunction::operator-(const SchwartzFunction& o) const {
    return *this + o.scale(Cyclotomic(Rational(-1)));
}

SchwartzFunction SchwartzFunction::operator*(const SchwartzFunction& o) const {
    if (p_ != o.p_ || d_ != o.d_) throw Error("schwartz function shape mismatch");
    SchwartzFunction r(p_, d_);
    for (const auto& t1 : terms_)
        for (const auto& t2 : o.terms_) {
            ModulatedBall t;
            t.coeff = t1.coeff * t2.coeff;
            t.twist.resize(d_);
            t.center.resize(d_);
            t.levels.resize(d_);
            bool empty = false;
            for (long i = 0; i < d_; ++i) {
                t.twist[i] = t1.twist[i] + t2.twist[i];
                // Two balls intersect iff one contains the other.
                const auto& inner = t1.levels[i] >= t2.levels[i] ? t1 : t2;
                const auto& outer = t1.levels[i] >= t2.levels[i] ? t2 : t1;
                if (val_or_inf(inner.center[i] - outer.center[i], p_) < outer.levels[i]) {
                    empty = true;
                    break;
                }
                t.center[i] = inner.center[i];
                t.levels[i] = inner.levels[i];
            }
            if (!empty) r.terms_.push_back(std::move(t));
        }
    r.canonicalize();
    return r;
}

bool SchwartzFunction::operator==(const SchwartzFunction& o) const {
    if (p_ != o.p_ || d_ != o.d_) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (size_t i = 0; i < terms_.size(); ++i) {
        if (!term_key_equal(terms_[i], o.terms_[i])) return false;
        if (terms_[i].coeff != o.terms_[i].coeff) return false;
    }
    return true;
}

Cyclotomic SchwartzFunction::evaluate(const std::vector<Rational>& x) const {
    if (static_cast<long>(x.size()) != d_) throw Error("evaluation point dimension mismatch");
    Cyclotomic sum;
    for (const auto& t : terms_) {
        bool inside = true;
        for (long i = 0; i < d_; ++i)
            if (val_or_inf(x[i] - t.center[i], p_) < t.levels[i]) {
                inside = false;
                break;
            }
        if (!inside) continue;
        sum += t.coeff * additive_character_value(dot(t.twist, x), p_);
    }
    return sum;
}

Cyclotomic SchwartzFunction::evaluate(const PAdicVector& x) const {
    if (x.p != p_) throw MismatchedPrimes("evaluation point over a different prime");
    for (const auto& t : terms_)
        for (long i = 0; i < d_; ++i) {
            long need = t.levels[i];
            if (t.twist[i] != 0) need = std::max(need, -p_valuation(t.twist[i], p_));
            if (x.entries[i].abs_precision() < need)
                throw InsufficientPrecision("point not determined finely enough to evaluate");
        }
    return evaluate(x.rationals());
}

SchwartzFunction SchwartzFunction::negate_argument() const {
    SchwartzFunction r(p_, d_);
    for (const auto& t : terms_) {
        ModulatedBall n = t;
        for (long i = 0; i < d_; ++i) {
            n.twist[i] = -t.twist[i];
            n.center[i] = -t.center[i];
        }
        r.terms_.push_back(std::move(n));
    }
    r.canonicalize();
    return r;
}

SchwartzFunction SchwartzFunction::multiply_character(const std::vector<Rational>& b0) const {
    SchwartzFunction r = *this;
    for (auto& t : r.terms_)
        for (long i = 0; i < d_; ++i) t.twist[i] += b0[i];
    r.canonicalize();
    return r;
}

SchwartzFunction SchwartzFunction::translate(const std::vector<Rational>& shift) const {
    SchwartzFunction r(p_, d_);
    for (const auto& t : terms_) {
        ModulatedBall n = t;
        // psi(<b, x - shift>) 1[x - shift in a + L] =
        // psi(-<b, shift>) psi(<b, x>) 1[x in a + shift + L]
        for (long i = 0; i < d_; ++i) n.center[i] = t.center[i] + shift[i];
        n.coeff = t.coeff * additive_character_value(-dot(t.twist, shift), p_);
        r.terms_.push_back(std::move(n));
    }
    r.canonicalize();
    return r;
}

SchwartzFunction SchwartzFunction::scale_argument(const std::vector<Rational>& c) const {
    if (static_cast<long>(c.size()) != d_) throw Error("scale vector dimension mismatch");
    for (const auto& ci : c)
        if (ci == 0) throw Error("scale_argument requires nonzero scalars");
    SchwartzFunction r(p_, d_);
    for (const auto& t : terms_) {
        ModulatedBall n = t;
        for (long i = 0; i < d_; ++i) {
            // c x in a + p^k Z_p  <=>  x in a/c + p^{k - v(c)} Z_p.
            n.center[i] = t.center[i] / c[i];
            n.levels[i] = t.levels[i] - p_valuation(c[i], p_);
            n.twist[i] = t.twist[i] * c[i];
        }
        r.terms_.push_back(std::move(n));
    }
    r.canonicalize();
    return r;
}

SchwartzFunction SchwartzFunction::fourier(Pairing pairing) const {
    long n = 0;
    if (pairing == Pairing::trace) {
        n = static_cast<long>(std::llround(std::sqrt(static_cast<double>(d_))));
        if (n * n != d_) throw Error("trace pairing requires a square dimension");
    }
    SchwartzFunction r(p_, d_);
    for (const auto& t : terms_) {
        // c psi(<b,x>) 1_{a + L}  |->  c psi(<b,a>) vol(L) psi(<-a,y>) 1_{b + L*}
        ModulatedBall h;
        h.coeff = t.coeff * additive_character_value(dot(t.twist, t.center), p_);
        long level_sum = 0;
        h.twist.resize(d_);
        h.center.resize(d_);
        h.levels.resize(d_);
        for (long i = 0; i < d_; ++i) {
            h.twist[i] = -t.center[i];
            h.center[i] = t.twist[i];
            h.levels[i] = -t.levels[i];
            level_sum += t.levels[i];
        }
        h.coeff = h.coeff * Cyclotomic(p_power(p_, -level_sum));
        if (pairing == Pairing::trace) {
            // tr(YX) pairs coordinate (i,j) with (j,i): precompose with the
            // transpose permutation.
            ModulatedBall s = h;
            for (long i = 0; i < n; ++i)
                for (long j = 0; j < n; ++j) {
                    s.twist[i * n + j] = h.twist[j * n + i];
                    s.center[i * n + j] = h.center[j * n + i];
                    s.levels[i * n + j] = h.levels[j * n + i];
                }
            h = std::move(s);
        }
        r.terms_.push_back(std::move(h));
    }
    r.canonicalize();
    return r;
}

Cyclotomic SchwartzFunction::integrate() const {
    Cyclotomic sum;
    for (const auto& t : terms_) {
        long level_sum = 0;
        bool vanishes = false;
        for (long i = 0; i < d_; ++i) {
            if (val_or_inf(t.twist[i], p_) < -t.levels[i]) {
                vanishes = true;  // nontrivial character on the ball lattice
                break;
            }
            level_sum += t.levels[i];
        }
        if (vanishes) continue;
        sum += t.coeff * additive_character_value(dot(t.twist, t.center), p_) *
               Cyclotomic(p_power(p_, -level_sum));
    }
    return sum;
}

AffineMap AffineMap::identity(long d) {
    AffineMap m;
    m.matrix.assign(d, std::vector<Rational>(d, Rational(0)));
    for (long i = 0; i < d; ++i) m.matrix[i][i] = 1;
    m.offset.assign(d, Rational(0));
    return m;
}

std::vector<Rational> AffineMap::apply(const std::vector<Rational>& x) const {
    std::vector<Rational> y(matrix.size(), Rational(0));
    for (size_t r = 0; r < matrix.size(); ++r) {
        for (size_t c = 0; c < x.size(); ++c) y[r] += matrix[r][c] * x[c];
        y[r] += offset[r];
    }
    return y;
}

namespace {

// Smith normal form of a rational matrix over the localization Z_(p):
// U A V = diag(p^{e_0}, ..., p^{e_{r-1}}, 0, ...) with U, V invertible over
// Z_(p). Pivoting on the entry of minimal p-valuation keeps every multiplier
// p-integral.
struct LocalSmith {
    std::vector<std::vector<Rational>> U, V;
    std::vector<long> exps;  // e_0 <= e_1 <= ... for the nonzero diagonal
    long rank = 0;
};

LocalSmith local_smith(std::vector<std::vector<Rational>> a, long p) {
    long nr = static_cast<long>(a.size());
    long nc = nr ? static_cast<long>(a[0].size()) : 0;
    const std::vector<std::vector<Rational>> original = a;
    LocalSmith s;
    s.U.assign(nr, std::vector<Rational>(nr, Rational(0)));
    s.V.assign(nc, std::vector<Rational>(nc, Rational(0)));
    for (long i = 0; i < nr; ++i) s.U[i][i] = 1;
    for (long i = 0; i < nc; ++i) s.V[i][i] = 1;

    long k = 0;
    while (k < nr && k < nc) {
        long best_r = -1, best_c = -1, best_v = kInfVal;
        for (long r = k; r < nr; ++r)
            for (long c = k; c < nc; ++c) {
                if (a[r][c] == 0) continue;
                long v = p_valuation(a[r][c], p);
                if (v < best_v) {
                    best_v = v;
                    best_r = r;
                    best_c = c;
                }
            }
        if (best_r < 0) break;
        std::swap(a[best_r], a[k]);
        std::swap(s.U[best_r], s.U[k]);
        if (best_c != k)
            for (long r = 0; r < nr; ++r) std::swap(a[r][best_c], a[r][k]);
        if (best_c != k)
            for (long r = 0; r < nc; ++r) std::swap(s.V[r][best_c], s.V[r][k]);

        const Rational pivot = a[k][k];
        for (long r = k + 1; r < nr; ++r) {
            if (a[r][k] == 0) continue;
            Rational m = a[r][k] / pivot;
            for (long c = 0; c < nc; ++c) a[r][c] -= m * a[k][c];
            for (long c = 0; c < nr; ++c) s.U[r][c] -= m * s.U[k][c];
        }
        for (long c = k + 1; c < nc; ++c) {
            if (a[k][c] == 0) continue;
            Rational m = a[k][c] / pivot;
            for (long r = 0; r < nr; ++r) a[r][c] -= m * a[r][k];
            for (long r = 0; r < nc; ++r) s.V[r][c] -= m * s.V[r][k];
        }
        // Normalize the pivot to a pure power of p.
        Rational unit = pivot / p_power(p, best_v);
        for (long c = 0; c < nc; ++c) a[k][c] /= unit;
        for (long c = 0; c < nr; ++c) s.U[k][c] /= unit;
        s.exps.push_back(best_v);
        ++k;
    }
    s.rank = k;
    // Certify U A V = diag(p^{e_i}) on the untouched input.
    for (long r = 0; r < nr; ++r)
        for (long c = 0; c < nc; ++c) {
            Rational entry(0);
            for (long i = 0; i < nr; ++i)
                for (long j = 0; j < nc; ++j)
                    entry += s.U[r][i] * original[i][j] * s.V[j][c];
            Rational expect =
                (r == c && r < s.rank) ? p_power(p, s.exps[r]) : Rational(0);
            if (entry != expect)
                throw InternalCheckFailure("local Smith certificate failed");
        }
    return s;
}

std::vector<Rational> mat_vec(const std::vector<std::vector<Rational>>& m,
                              const std::vector<Rational>& x) {
    std::vector<Rational> y(m.size(), Rational(0));
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < x.size(); ++c) y[r] += m[r][c] * x[c];
    return y;
}

std::vector<Rational> mat_transpose_vec(const std::vector<std::vector<Rational>>& m,
                                        const std::vector<Rational>& x) {
    size_t cols = m.empty() ? 0 : m[0].size();
    std::vector<Rational> y(cols, Rational(0));
    for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < cols; ++c) y[c] += m[r][c] * x[r];
    return y;
}

}  // namespace

Cyclotomic affine_pullback_product_integral(
    const std::vector<std::pair<SchwartzFunction, AffineMap>>& factors, long ambient_dim) {
    if (factors.empty()) throw Error("no factors");
    long p = factors[0].first.prime();
    for (const auto& [f, map] : factors) {
        if (f.prime() != p) throw MismatchedPrimes("factors over different primes");
        if (map.cols() != ambient_dim || map.rows() != f.dim())
            throw Error("affine map shape mismatch");
        if (f.is_zero()) return Cyclotomic();
    }

    // Expand the product of term sums.
    std::vector<size_t> idx(factors.size(), 0);
    Cyclotomic total;
    while (true) {
        bool live = true;
        for (size_t i = 0; i < factors.size(); ++i)
            if (idx[i] >= factors[i].first.terms().size()) live = false;
        if (live) {
            // Assemble the coset system  {x : <row, x> in g_r + p^{m_r} Z_p}
            // and the combined character twist.
            std::vector<std::vector<Rational>> rows;
            std::vector<Rational> rhs;
            std::vector<long> mods;
            std::vector<Rational> w(ambient_dim, Rational(0));
            Cyclotomic coeff(Rational(1));
            for (size_t i = 0; i < factors.size(); ++i) {
                const auto& f = factors[i].first;
                const auto& map = factors[i].second;
                const auto& t = f.terms()[idx[i]];
                coeff *= t.coeff;
                Rational twist_const(0);
                for (long r = 0; r < f.dim(); ++r) {
                    rows.push_back(map.matrix[r]);
                    rhs.push_back(t.center[r] - map.offset[r]);
                    mods.push_back(t.levels[r]);
                    twist_const += t.twist[r] * map.offset[r];
                    for (long c = 0; c < ambient_dim; ++c)
                        w[c] += t.twist[r] * map.matrix[r][c];
                }
                coeff *= additive_character_value(twist_const, p);
            }
            // Scale each constraint to  <row', x> in g' + Z_p.
            for (size_t r = 0; r < rows.size(); ++r) {
                Rational scale = p_power(p, -mods[r]);
                for (auto& e : rows[r]) e *= scale;
                rhs[r] *= scale;
            }
            LocalSmith s = local_smith(rows, p);
            std::vector<Rational> g = mat_vec(s.U, rhs);
            bool consistent = true;
            for (long r = s.rank; r < static_cast<long>(rows.size()); ++r)
                if (val_or_inf(g[r], p) < 0) {
                    consistent = false;
                    break;
                }
            if (consistent) {
                if (s.rank < ambient_dim)
                    throw UnboundedSupport("pulled-back supports intersect in an unbounded set");
                // Solution set in y = V^{-1} x coordinates: y_i in h_i + p^{-e_i} Z_p.
                std::vector<Rational> wp = mat_transpose_vec(s.V, w);
                Cyclotomic contrib = coeff;
                Rational char_arg(0);
                bool vanishes = false;
                long vol_exp = 0;
                for (long i = 0; i < ambient_dim; ++i) {
                    long e = s.exps[i];
                    if (val_or_inf(wp[i], p) < e) {
                        vanishes = true;  // character nontrivial on the solution lattice
                        break;
                    }
                    Rational h = g[i] * p_power(p, -e);
                    char_arg += wp[i] * h;
                    vol_exp += e;
                }
                if (!vanishes) {
                    contrib *= additive_character_value(char_arg, p);
                    contrib *= Cyclotomic(p_power(p, vol_exp));
                    total += contrib;
                }
            }
        }
        // Advance the multi-index.
        size_t i = 0;
        for (; i < factors.size(); ++i) {
            if (factors[i].first.terms().empty()) return Cyclotomic();
            if (++idx[i] < factors[i].first.terms().size()) break;
            idx[i] = 0;
        }
        if (i == factors.size()) break;
    }
    return total;
}

}  // namespace mira
