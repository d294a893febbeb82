#include "mira/zeta_expr.hpp"

#include <algorithm>
#include <map>

#include "mira/errors.hpp"

namespace mira {

ZetaExpr::ZetaExpr(long q, LaurentPoly num, std::vector<DenFactor> den)
    : q_(q), num_(std::move(num)), den_(std::move(den)) {
    for (auto& f : den_)
        if (f.c.is_zero() || f.k < 1) throw Error("invalid denominator factor");
    if (num_.is_zero()) den_.clear();
    std::sort(den_.begin(), den_.end());
}

ZetaExpr ZetaExpr::constant(long q, const Cyclotomic& c) {
    return ZetaExpr(q, LaurentPoly(c), {});
}

ZetaExpr ZetaExpr::geometric(long q, const Cyclotomic& c, long k) {
    return ZetaExpr(q, LaurentPoly(Cyclotomic(Rational(1))), {DenFactor{c, k}});
}

void ZetaExpr::check_q(const ZetaExpr& o) const {
    if (q_ != o.q_) throw Error("zeta expressions over different residue cardinalities");
}

namespace {

LaurentPoly factor_poly(const DenFactor& f) {
    LaurentPoly p(Cyclotomic(Rational(1)));
    p = p - LaurentPoly::monomial(f.c, f.k);
    return p;
}

// Multiset difference target \ part, assuming part is contained in target.
std::vector<DenFactor> multiset_diff(const std::vector<DenFactor>& target,
                                     const std::vector<DenFactor>& part) {
    std::vector<DenFactor> out;
    size_t j = 0;
    for (const auto& f : target) {
        if (j < part.size() && part[j] == f)
            ++j;
        else
            out.push_back(f);
    }
    return out;
}

// Multiset max-union of two sorted factor lists.
std::vector<DenFactor> multiset_union(const std::vector<DenFactor>& a,
                                      const std::vector<DenFactor>& b) {
    std::vector<DenFactor> out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && (a[i] < b[j] || a[i] == b[j]))) {
            if (j < b.size() && a[i] == b[j]) ++j;
            out.push_back(a[i++]);
        } else {
            out.push_back(b[j++]);
        }
    }
    return out;
}

}  // namespace

ZetaExpr ZetaExpr::operator+(const ZetaExpr& o) const {
    check_q(o);
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    std::vector<DenFactor> den = multiset_union(den_, o.den_);
    LaurentPoly na = num_, nb = o.num_;
    for (const auto& f : multiset_diff(den, den_)) na *= factor_poly(f);
    for (const auto& f : multiset_diff(den, o.den_)) nb *= factor_poly(f);
    return ZetaExpr(q_, na + nb, std::move(den));
}

ZetaExpr ZetaExpr::operator-(const ZetaExpr& o) const {
    ZetaExpr neg = o;
    neg.num_ = -neg.num_;
    return *this + neg;
}

ZetaExpr ZetaExpr::operator*(const ZetaExpr& o) const {
    check_q(o);
    std::vector<DenFactor> den = den_;
    den.insert(den.end(), o.den_.begin(), o.den_.end());
    return ZetaExpr(q_, num_ * o.num_, std::move(den));
}

bool ZetaExpr::equals(const ZetaExpr& o) const {
    check_q(o);
    LaurentPoly lhs = num_;
    for (const auto& f : o.den_) lhs *= factor_poly(f);
    LaurentPoly rhs = o.num_;
    for (const auto& f : den_) rhs *= factor_poly(f);
    return lhs == rhs;
}

ZetaExpr ZetaExpr::substitute_one_minus_s() const {
    // t -> 1/(qt). A factor (1 - c t^k) becomes -c q^{-k} t^{-k} (1 - (q^k/c) t^k),
    // so each factor contributes -(1/c) q^k t^k to the numerator.
    LaurentPoly num = num_.substitute_one_minus_s(q_);
    std::vector<DenFactor> den;
    for (const auto& f : den_) {
        Cyclotomic cinv = f.c.inverse();
        den.push_back(DenFactor{cinv * Cyclotomic(p_power(q_, f.k)), f.k});
        num *= LaurentPoly::monomial(-(cinv * Cyclotomic(p_power(q_, f.k))), f.k);
    }
    return ZetaExpr(q_, std::move(num), std::move(den));
}

LaurentPoly ZetaExpr::den_poly() const {
    LaurentPoly p(Cyclotomic(Rational(1)));
    for (const auto& f : den_) p *= factor_poly(f);
    return p;
}

std::complex<double> ZetaExpr::eval_at_t(std::complex<double> t) const {
    std::complex<double> d{1.0, 0.0};
    for (const auto& f : den_) {
        std::complex<double> fv = 1.0 - f.c.eval() * std::pow(t, static_cast<double>(f.k));
        if (std::abs(fv) < 1e-12) throw PoleAtSample("denominator factor vanishes at sample");
        d *= fv;
    }
    return num_.eval(t) / d;
}

std::complex<double> ZetaExpr::eval_at_s(std::complex<double> s) const {
    std::complex<double> t = std::exp(-s * std::log(static_cast<double>(q_)));
    return eval_at_t(t);
}

std::string ZetaExpr::str() const {
    std::string s = "(" + num_.str() + ")";
    for (const auto& f : den_)
        s += " / (1 - (" + f.c.str() + ")*t^" + std::to_string(f.k) + ")";
    return s + "  [t = " + std::to_string(q_) + "^-s]";
}

}  // namespace mira
