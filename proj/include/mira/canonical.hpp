#pragma once

#include <utility>
#include <vector>

#include "mira/matrix.hpp"
#include "mira/partitions.hpp"
#include "mira/polynomial.hpp"

namespace mira {

// Monic characteristic polynomial det(tI - X).
RationalPoly char_poly(const RationalMatrix& X);

// Companion matrix of a monic p(t) = t^n - a_1 t^{n-1} - ... - a_n:
// first row (a_1, ..., a_n), ones on the subdiagonal.
RationalMatrix companion(const RationalPoly& p);

// Nontrivial diagonal entries of the Smith normal form of tI - X over Q[t],
// monic, in ascending divisibility order (each divides the next). Their
// product is char_poly(X).
std::vector<RationalPoly> invariant_factors(const RationalMatrix& X);

struct FrobeniusForm {
    RationalMatrix F;  // block diagonal of companion blocks, smallest first
    RationalMatrix S;  // exact certificate: S^{-1} X S = F
    std::vector<RationalPoly> factors;
};

// Rational canonical form with similarity certificate; the certificate
// identity is verified before returning.
FrobeniusForm frobenius_normal_form(const RationalMatrix& X);

// True iff the rows v, vX, ..., vX^{n-1} span the full row space.
bool is_regular_pair(const RationalMatrix& X, const std::vector<Rational>& v);

inline constexpr long kDefaultFactorDegreeBound = 8;

// Complete factorization over Q into monic irreducibles with
// multiplicities, sorted. Throws DegreeBoundExceeded above the bound.
std::vector<std::pair<RationalPoly, long>> factor_over_rationals(
    const RationalPoly& p, long degree_bound = kDefaultFactorDegreeBound);

// Conjugacy-class datum of X: one component per irreducible factor q of the
// characteristic polynomial, with the partition of the exponents of q
// across the invariant factors (largest invariant factor first).
ClassDatum class_datum(const RationalMatrix& X, long degree_bound = kDefaultFactorDegreeBound);

struct Classification {
    bool regular = false;          // every partition has a single row
    bool semisimple = false;       // every partition is all ones
    bool regular_semisimple = false;
    bool elliptic = false;         // characteristic polynomial irreducible
    std::string str() const;
};

// Throws on a datum inconsistent with p.
Classification classify(const RationalPoly& p, const ClassDatum& datum);

Rational discriminant(const RationalPoly& p);

}  // namespace mira
