#include "mira/padic.hpp"

#include <algorithm>

#include "mira/errors.hpp"

namespace mira {

PAdicScalar::PAdicScalar(long p, const Rational& value, long digits) : p_(p), value_(value) {
    if (p < 2) throw Error("prime must be >= 2");
    if (digits < 1) throw Error("precision budget must be positive");
    abs_prec_ = (value == 0 ? digits : p_valuation(value, p) + digits);
}

void PAdicScalar::check_same_prime(const PAdicScalar& o) const {
    if (p_ != o.p_) throw MismatchedPrimes("p-adic arithmetic across different primes");
}

long PAdicScalar::valuation() const {
    if (value_ == 0) throw IndeterminateValuation("valuation of zero-to-precision value");
    long v = p_valuation(value_, p_);
    if (v >= abs_prec_)
        throw InsufficientPrecision("value is zero to the tracked precision");
    return v;
}

Rational PAdicScalar::norm() const { return p_power(p_, -valuation()); }

Rational PAdicScalar::unit_mod(long digits) const {
    long v = valuation();
    if (v + digits > abs_prec_)
        throw InsufficientPrecision("unit requested beyond guaranteed digits");
    Rational u = value_ / p_power(p_, v);
    return padic_canonical_rep(u, p_, digits);
}

PAdicScalar PAdicScalar::operator+(const PAdicScalar& o) const {
    check_same_prime(o);
    PAdicScalar r;
    r.p_ = p_;
    r.value_ = value_ + o.value_;
    // A sum is known only modulo the coarser of the two guarantees.
    r.abs_prec_ = std::min(abs_prec_, o.abs_prec_);
    return r;
}

PAdicScalar PAdicScalar::operator-() const {
    PAdicScalar r = *this;
    r.value_ = -r.value_;
    return r;
}

PAdicScalar PAdicScalar::operator-(const PAdicScalar& o) const { return *this + (-o); }

PAdicScalar PAdicScalar::operator*(const PAdicScalar& o) const {
    check_same_prime(o);
    PAdicScalar r;
    r.p_ = p_;
    r.value_ = value_ * o.value_;
    long va = value_ == 0 ? abs_prec_ : p_valuation(value_, p_);
    long vb = o.value_ == 0 ? o.abs_prec_ : p_valuation(o.value_, p_);
    r.abs_prec_ = std::min(va + o.abs_prec_, vb + abs_prec_);
    return r;
}

Cyclotomic PAdicScalar::additive_character() const {
    if (abs_prec_ < 0)
        throw InsufficientPrecision("fractional part not determined at this precision");
    return additive_character_value(value_, p_);
}

PAdicVector::PAdicVector(long p_, std::vector<PAdicScalar> e) : p(p_), entries(std::move(e)) {
    if (entries.empty()) throw Error("p-adic vector must have positive dimension");
    for (const auto& x : entries)
        if (x.prime() != p) throw MismatchedPrimes("vector entries over different primes");
}

PAdicVector PAdicVector::from_rationals(long p, const std::vector<Rational>& v, long digits) {
    std::vector<PAdicScalar> e;
    e.reserve(v.size());
    for (const auto& x : v) e.emplace_back(p, x, digits);
    return PAdicVector(p, std::move(e));
}

std::vector<Rational> PAdicVector::rationals() const {
    std::vector<Rational> out;
    out.reserve(entries.size());
    for (const auto& x : entries) out.push_back(x.value());
    return out;
}

}  // namespace mira
