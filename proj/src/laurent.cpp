#include "mira/laurent.hpp"

namespace mira {

LaurentPoly::LaurentPoly(const Cyclotomic& c) {
    if (!c.is_zero()) terms_[0] = c;
}

LaurentPoly LaurentPoly::monomial(const Cyclotomic& c, long exponent) {
    LaurentPoly p;
    if (!c.is_zero()) p.terms_[exponent] = c;
    return p;
}

void LaurentPoly::prune() {
    for (auto it = terms_.begin(); it != terms_.end();)
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    LaurentPoly r = *this;
    for (auto& [e, c] : o.terms_) {
        auto it = r.terms_.find(e);
        if (it == r.terms_.end())
            r.terms_[e] = c;
        else
            it->second += c;
    }
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly r;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            auto it = r.terms_.find(e1 + e2);
            if (it == r.terms_.end())
                r.terms_[e1 + e2] = c1 * c2;
            else
                it->second += c1 * c2;
        }
    r.prune();
    return r;
}

LaurentPoly LaurentPoly::substitute_one_minus_s(long q) const {
    LaurentPoly r;
    for (auto& [e, c] : terms_) {
        Cyclotomic scaled = c * Cyclotomic(p_power(q, -e));
        if (!scaled.is_zero()) r.terms_[-e] = scaled;
    }
    return r;
}

std::complex<double> LaurentPoly::eval(std::complex<double> t) const {
    std::complex<double> sum{0.0, 0.0};
    for (auto& [e, c] : terms_) sum += c.eval() * std::pow(t, static_cast<double>(e));
    return sum;
}

void LaurentPoly::set_term(long exponent, const Cyclotomic& c) {
    if (c.is_zero())
        terms_.erase(exponent);
    else
        terms_[exponent] = c;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    for (auto& [e, c] : terms_) {
        if (!first) s += " + ";
        first = false;
        s += "(" + c.str() + ")";
        if (e != 0) s += "*t^" + std::to_string(e);
    }
    return s;
}

}  // namespace mira
