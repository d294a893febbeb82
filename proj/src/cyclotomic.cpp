#include "mira/cyclotomic.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "mira/errors.hpp"

namespace mira {

namespace {

long ipow(long p, int e) {
    long r = 1;
    for (int i = 0; i < e; ++i) r *= p;
    return r;
}

}  // namespace

Cyclotomic::Cyclotomic(const Rational& r) {
    if (r != 0) coeffs_[0] = r;
}

Cyclotomic Cyclotomic::root_of_unity(long p, int level, long exponent) {
    if (p < 2 || level < 0) throw Error("bad root of unity parameters");
    Cyclotomic z;
    if (level == 0) {
        z.coeffs_[0] = 1;
        return z;
    }
    long n = ipow(p, level);
    long e = ((exponent % n) + n) % n;
    z.p_ = p;
    z.level_ = level;
    z.coeffs_[e] = 1;
    z.reduce();
    return z;
}

long Cyclotomic::phi() const {
    if (level_ == 0) return 1;
    return ipow(p_, level_ - 1) * (p_ - 1);
}

void Cyclotomic::reduce() {
    if (level_ == 0) {
        auto it = coeffs_.begin();
        while (it != coeffs_.end()) {
            if (it->second == 0)
                it = coeffs_.erase(it);
            else
                ++it;
        }
        if (coeffs_.empty()) p_ = 0;
        return;
    }
    long n = ipow(p_, level_);
    long ph = phi();
    long step = ipow(p_, level_ - 1);  // p^{M-1}

    // Fold exponents mod p^M, then eliminate exponents >= phi using
    // x^{phi + r} = -sum_{j=0}^{p-2} x^{r + j p^{M-1}}.
    std::map<long, Rational> folded;
    for (auto& [e, c] : coeffs_) {
        long em = ((e % n) + n) % n;
        folded[em] += c;
    }
    std::map<long, Rational> out;
    for (auto& [e, c] : folded) {
        if (c == 0) continue;
        if (e < ph) {
            out[e] += c;
        } else {
            long r = e - ph;
            for (long j = 0; j + 1 < p_; ++j) out[r + j * step] -= c;
        }
    }
    for (auto it = out.begin(); it != out.end();) {
        if (it->second == 0)
            it = out.erase(it);
        else
            ++it;
    }
    coeffs_ = std::move(out);

    // Compress to the smallest level: the value lies in Q(zeta_{p^{M-1}})
    // iff every surviving exponent is divisible by p.
    while (level_ > 0) {
        bool divisible = true;
        for (auto& [e, c] : coeffs_)
            if (e % p_ != 0) {
                divisible = false;
                break;
            }
        if (!divisible) break;
        std::map<long, Rational> down;
        for (auto& [e, c] : coeffs_) down[e / p_] = c;
        coeffs_ = std::move(down);
        --level_;
    }
    if (level_ == 0) p_ = 0;  // rationals carry no prime
}

void Cyclotomic::raise_to_level(long p, int level) {
    if (level_ > level) throw InternalCheckFailure("raise_to_level below current level");
    long factor = ipow(p, level - level_);
    std::map<long, Rational> up;
    for (auto& [e, c] : coeffs_) up[e * factor] = c;
    coeffs_ = std::move(up);
    p_ = p;
    level_ = level;
}

std::pair<Cyclotomic, Cyclotomic> reconcile(const Cyclotomic& a, const Cyclotomic& b) {
    Cyclotomic x = a, y = b;
    if (x.level_ > 0 && y.level_ > 0 && x.p_ != y.p_)
        throw MismatchedPrimes("cyclotomic arithmetic across different primes");
    long p = x.level_ > 0 ? x.p_ : y.p_;
    int lvl = std::max(x.level_, y.level_);
    if (lvl > 0) {
        x.raise_to_level(p, lvl);
        y.raise_to_level(p, lvl);
    }
    return {x, y};
}

Rational Cyclotomic::rational_value() const {
    if (level_ != 0) throw Error("not a rational cyclotomic value");
    if (coeffs_.empty()) return Rational(0);
    return coeffs_.begin()->second;
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
    auto [x, y] = reconcile(*this, o);
    for (auto& [e, c] : y.coeffs_) x.coeffs_[e] += c;
    x.reduce();
    return x;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const { return *this + (-o); }

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& [e, c] : r.coeffs_) c = -c;
    return r;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
    auto [x, y] = reconcile(*this, o);
    Cyclotomic r;
    r.p_ = x.p_;
    r.level_ = x.level_;
    for (auto& [e1, c1] : x.coeffs_)
        for (auto& [e2, c2] : y.coeffs_) r.coeffs_[e1 + e2] += c1 * c2;
    r.reduce();
    return r;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
    if (level_ != o.level_) return false;
    if (level_ > 0 && p_ != o.p_) return false;
    return coeffs_ == o.coeffs_;
}

int Cyclotomic::compare(const Cyclotomic& o) const {
    if (level_ != o.level_) return level_ < o.level_ ? -1 : 1;
    if (level_ > 0 && p_ != o.p_) return p_ < o.p_ ? -1 : 1;
    auto it = coeffs_.begin();
    auto jt = o.coeffs_.begin();
    for (; it != coeffs_.end() && jt != o.coeffs_.end(); ++it, ++jt) {
        if (it->first != jt->first) return it->first < jt->first ? -1 : 1;
        int c = cmp(it->second, jt->second);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (it != coeffs_.end()) return 1;
    if (jt != o.coeffs_.end()) return -1;
    return 0;
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw Error("cyclotomic inverse of zero");
    if (level_ == 0) return Cyclotomic(Rational(1) / rational_value());
    long n = phi();
    // Build the matrix of multiplication by *this on the power basis and
    // solve M x = e_0.
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n, Rational(0)));
    for (long j = 0; j < n; ++j) {
        Cyclotomic basis;
        basis.p_ = p_;
        basis.level_ = level_;
        basis.coeffs_[j] = 1;
        Cyclotomic col = *this * basis;
        if (col.level_ < level_) col.raise_to_level(p_, level_);
        for (auto& [e, c] : col.coeffs_) m[e][j] = c;
    }
    std::vector<Rational> rhs(n, Rational(0));
    rhs[0] = 1;
    // Gaussian elimination.
    for (long col = 0, row = 0; col < n && row < n; ++col) {
        long piv = -1;
        for (long r = row; r < n; ++r)
            if (m[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw InternalCheckFailure("singular multiplication matrix");
        std::swap(m[piv], m[row]);
        std::swap(rhs[piv], rhs[row]);
        Rational inv = Rational(1) / m[row][col];
        for (long c = col; c < n; ++c) m[row][c] *= inv;
        rhs[row] *= inv;
        for (long r = 0; r < n; ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (long c = col; c < n; ++c) m[r][c] -= f * m[row][c];
            rhs[r] -= f * rhs[row];
        }
        ++row;
    }
    Cyclotomic result;
    result.p_ = p_;
    result.level_ = level_;
    for (long e = 0; e < n; ++e)
        if (rhs[e] != 0) result.coeffs_[e] = rhs[e];
    result.reduce();
    return result;
}

std::complex<double> Cyclotomic::eval() const {
    if (coeffs_.empty()) return {0.0, 0.0};
    if (level_ == 0) return {to_double(coeffs_.begin()->second), 0.0};
    double n = static_cast<double>(ipow(p_, level_));
    std::complex<double> sum{0.0, 0.0};
    for (auto& [e, c] : coeffs_) {
        double theta = 2.0 * std::numbers::pi * static_cast<double>(e) / n;
        sum += to_double(c) * std::complex<double>(std::cos(theta), std::sin(theta));
    }
    return sum;
}

std::string Cyclotomic::str() const {
    if (coeffs_.empty()) return "0";
    if (level_ == 0) return rational_str(coeffs_.begin()->second);
    std::string s;
    std::string zeta = "z(" + std::to_string(p_) + "^" + std::to_string(level_) + ")";
    bool first = true;
    for (auto& [e, c] : coeffs_) {
        if (!first) s += " + ";
        first = false;
        s += rational_str(c);
        if (e > 0) s += "*" + zeta + "^" + std::to_string(e);
    }
    return s;
}

Cyclotomic additive_character_value(const Rational& x, long p) {
    if (x == 0) return Cyclotomic(Rational(1));
    long v = p_valuation(x, p);
    if (v >= 0) return Cyclotomic(Rational(1));
    long m = -v;
    Rational frac = padic_canonical_rep(x, p, 0);  // u / p^m with u integer
    Rational scaled = frac * p_power(p, m);
    if (scaled.get_den() != 1) throw InternalCheckFailure("fractional part not of the form u/p^m");
    long u = static_cast<long>(scaled.get_num().get_si());
    return Cyclotomic::root_of_unity(p, static_cast<int>(m), u);
}

}  // namespace mira
