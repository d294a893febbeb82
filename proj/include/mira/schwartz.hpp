#pragma once

#include <optional>
#include <vector>

#include "mira/cyclotomic.hpp"
#include "mira/padic.hpp"
#include "mira/rational.hpp"

namespace mira {

// One atom: x |-> coeff * psi(<twist,x>) * prod_i 1[x_i in center_i + p^{level_i} Z_p].
// Canonical form reduces center_i mod p^{level_i}, twist_i mod p^{-level_i}
// (absorbing the character correction into coeff), so identical functions
// have identical term lists.
struct ModulatedBall {
    Cyclotomic coeff;
    std::vector<Rational> twist;
    std::vector<Rational> center;
    std::vector<long> levels;
};

enum class Pairing { dot, trace };

class SchwartzFunction {
public:
    SchwartzFunction(long p, long d) : p_(p), d_(d) {}

    // 1_{Z_p^d}
    static SchwartzFunction unit_ball(long p, long d);
    static SchwartzFunction ball(long p, const std::vector<Rational>& center,
                                 const std::vector<long>& levels);

    long prime() const { return p_; }
    long dim() const { return d_; }
    const std::vector<ModulatedBall>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(ModulatedBall term);

    SchwartzFunction operator+(const SchwartzFunction& o) const;
    SchwartzFunction operator-(const SchwartzFunction& o) const;
    // Pointwise product. Ball intersections stay rectangular.
    SchwartzFunction operator*(const SchwartzFunction& o) const;
    SchwartzFunction scale(const Cyclotomic& c) const;

    bool operator==(const SchwartzFunction& o) const;
    bool operator!=(const SchwartzFunction& o) const { return !(*this == o); }

    // Exact value at an exact rational point.
    Cyclotomic evaluate(const std::vector<Rational>& x) const;
    // Precision-checked evaluation: fails hard when ball membership or a
    // character value is not determined by the tracked digits.
    Cyclotomic evaluate(const PAdicVector& x) const;

    // x |-> f(-x)
    SchwartzFunction negate_argument() const;
    // f * psi(<b0, .>)
    SchwartzFunction multiply_character(const std::vector<Rational>& b0) const;
    // x |-> f(x - shift)
    SchwartzFunction translate(const std::vector<Rational>& shift) const;
    // x |-> f(c_1 x_1, ..., c_d x_d), each c_i a nonzero rational
    SchwartzFunction scale_argument(const std::vector<Rational>& c) const;

    // Exact Fourier transform F[f](y) = int f(x) psi(-<x,y>) dx with the
    // self-dual measure vol(Z_p^d) = 1 and the conductor-Z_p character.
    // Pairing::trace requires d = n*n and pairs coordinate (i,j) with (j,i).
    SchwartzFunction fourier(Pairing pairing = Pairing::dot) const;

    // Integral over Q_p^d.
    Cyclotomic integrate() const;

private:
    long p_;
    long d_;
    std::vector<ModulatedBall> terms_;

    void canonicalize();
};

// Affine map x |-> A x + c from dimension A.cols to dimension A.rows.
struct AffineMap {
    std::vector<std::vector<Rational>> matrix;
    std::vector<Rational> offset;

    static AffineMap identity(long d);
    long rows() const { return static_cast<long>(matrix.size()); }
    long cols() const { return matrix.empty() ? 0 : static_cast<long>(matrix[0].size()); }
    std::vector<Rational> apply(const std::vector<Rational>& x) const;
};

// Exact value of  int_{Q_p^d} prod_i f_i(A_i x + c_i) dx.  Each term
// combination reduces to the measure of an affine lattice-coset system,
// solved by a Smith normal form over the localization Z_(p), times an exact
// character integral. Throws UnboundedSupport when the intersection of
// pulled-back supports is not compact.
Cyclotomic affine_pullback_product_integral(
    const std::vector<std::pair<SchwartzFunction, AffineMap>>& factors, long ambient_dim);

}  // namespace mira
