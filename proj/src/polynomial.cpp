#include "mira/polynomial.hpp"

#include <algorithm>

#include "mira/errors.hpp"

namespace mira {

RationalPoly::RationalPoly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::monomial(const Rational& c, long e) {
    RationalPoly p;
    if (c != 0) {
        p.c_.assign(e + 1, Rational(0));
        p.c_[e] = c;
    }
    return p;
}

void RationalPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational RationalPoly::coeff(long i) const {
    if (i < 0 || i >= static_cast<long>(c_.size())) return Rational(0);
    return c_[i];
}

Rational RationalPoly::leading() const {
    if (c_.empty()) throw Error("leading coefficient of zero polynomial");
    return c_.back();
}

bool RationalPoly::is_monic() const { return !c_.empty() && c_.back() == 1; }

RationalPoly RationalPoly::monic() const {
    if (is_zero()) return *this;
    return scale(Rational(1) / leading());
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
    std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return RationalPoly(std::move(r));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const { return *this + (-o); }

RationalPoly RationalPoly::operator-() const {
    RationalPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

RationalPoly RationalPoly::scale(const Rational& c) const {
    if (c == 0) return RationalPoly();
    RationalPoly r = *this;
    for (auto& x : r.c_) x *= c;
    return r;
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
    if (is_zero() || o.is_zero()) return RationalPoly();
    std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    return RationalPoly(std::move(r));
}

bool RationalPoly::operator<(const RationalPoly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    // Compare from the leading coefficient down.
    for (long i = degree(); i >= 0; --i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i];
    }
    return false;
}

RationalPoly RationalPoly::derivative() const {
    if (degree() < 1) return RationalPoly();
    std::vector<Rational> r(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<long>(i));
    return RationalPoly(std::move(r));
}

Rational RationalPoly::eval(const Rational& x) const {
    Rational v(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) v = v * x + *it;
    return v;
}

std::string RationalPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (long i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        Rational c = c_[i];
        if (!out.empty()) {
            out += c > 0 ? " + " : " - ";
            if (c < 0) c = -c;
        } else if (c < 0) {
            out += "-";
            c = -c;
        }
        if (i == 0 || c != 1) out += rational_str(c);
        if (i > 0) {
            if (c != 1) out += "*";
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

std::pair<RationalPoly, RationalPoly> poly_divmod(const RationalPoly& a, const RationalPoly& b) {
    if (b.is_zero()) throw Error("polynomial division by zero");
    RationalPoly q, r = a;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational c = r.leading() / b.leading();
        long e = r.degree() - b.degree();
        RationalPoly m = RationalPoly::monomial(c, e);
        q += m;
        r -= m * b;
    }
    return {q, r};
}

RationalPoly poly_gcd(RationalPoly a, RationalPoly b) {
    while (!b.is_zero()) {
        RationalPoly r = poly_divmod(a, b).second;
        a = b;
        b = r;
    }
    return a.is_zero() ? a : a.monic();
}

Rational resultant(const RationalPoly& a, const RationalPoly& b) {
    long m = a.degree(), n = b.degree();
    if (m < 0 || n < 0) return Rational(0);
    if (m == 0) {
        Rational r(1);
        for (long i = 0; i < n; ++i) r *= a.coeff(0);
        return r;
    }
    if (n == 0) {
        Rational r(1);
        for (long i = 0; i < m; ++i) r *= b.coeff(0);
        return r;
    }
    // Sylvester matrix determinant.
    long size = m + n;
    std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size, Rational(0)));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j <= m; ++j) s[i][i + j] = a.coeff(m - j);
    for (long i = 0; i < m; ++i)
        for (long j = 0; j <= n; ++j) s[n + i][i + j] = b.coeff(n - j);
    // Fraction-based Gaussian elimination.
    Rational det(1);
    for (long col = 0; col < size; ++col) {
        long piv = -1;
        for (long r = col; r < size; ++r)
            if (s[r][col] != 0) { piv = r; break; }
        if (piv < 0) return Rational(0);
        if (piv != col) { std::swap(s[piv], s[col]); det = -det; }
        det *= s[col][col];
        for (long r = col + 1; r < size; ++r) {
            if (s[r][col] == 0) continue;
            Rational f = s[r][col] / s[col][col];
            for (long c = col; c < size; ++c) s[r][c] -= f * s[col][c];
        }
    }
    return det;
}

}  // namespace mira
