#include "mira/rational.hpp"

#include "mira/errors.hpp"

namespace mira {

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            Rational r(s);
            r.canonicalize();
            return r;
        }
        Rational r(s.substr(0, slash) + "/" + s.substr(slash + 1));
        if (r.get_den() == 0) throw Error("zero denominator in rational literal: " + s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw Error("malformed rational literal: " + s);
    }
}

std::string rational_str(const Rational& x) {
    if (x.get_den() == 1) return x.get_num().get_str();
    return x.get_num().get_str() + "/" + x.get_den().get_str();
}

long p_valuation(const Rational& x, long p) {
    if (x == 0) throw IndeterminateValuation("valuation of exact zero");
    long v = 0;
    Integer n = x.get_num();
    Integer d = x.get_den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
        n /= p;
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p))) {
        d /= p;
        --v;
    }
    return v;
}

Rational p_power(long p, long e) {
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(e < 0 ? -e : e));
    if (e >= 0) return Rational(pe);
    return Rational(1) / Rational(pe);
}

Rational padic_canonical_rep(const Rational& x, long p, long k) {
    if (x == 0) return Rational(0);
    long v = p_valuation(x, p);
    if (v >= k) return Rational(0);
    // x = p^v * num/den with num, den coprime to p. Reduce num * den^{-1}
    // modulo p^{k-v} and reassemble.
    Rational u = x / p_power(p, v);
    Integer n = u.get_num();
    Integer d = u.get_den();
    Integer mod;
    mpz_ui_pow_ui(mod.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(k - v));
    Integer dinv;
    if (mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), mod.get_mpz_t()) == 0)
        throw InternalCheckFailure("denominator not invertible mod p^k");
    Integer r = (n * dinv) % mod;
    if (r < 0) r += mod;
    return Rational(r) * p_power(p, v);
}

double to_double(const Rational& x) { return x.get_d(); }

}  // namespace mira
