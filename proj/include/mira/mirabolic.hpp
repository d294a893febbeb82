#pragma once

#include "mira/matrix.hpp"
#include "mira/schwartz.hpp"
#include "mira/zeta_expr.hpp"

namespace mira {

// Invertible element of GL_n(Q_p) with exact rational entries.
struct GroupElement {
    long p = 0;
    RationalMatrix g;

    GroupElement(long p_in, RationalMatrix g_in);
    long n() const { return g.rows(); }
    bool is_diagonal() const;
    long det_valuation() const;  // v_p(det g)
};

// K(g; f1, f2) = int_{gl_n(Q_p)} f1(X) f2(g^{-1} X g) dX, with matrices
// flattened row-major into Q_p^{n^2}.
Cyclotomic local_kernel(const GroupElement& g, const SchwartzFunction& f1,
                        const SchwartzFunction& f2);

// The Plancherel swap K(g; F[f1], f2) = K(g; f1, F[f2]) with the
// trace-pairing Fourier transform; returns exact equality.
bool verify_kernel_swap(const GroupElement& g, const SchwartzFunction& f1,
                        const SchwartzFunction& f2);

// Local mirabolic Eisenstein integral for diagonal g:
//   E(g,s; Phi1, Phi2) = |det g|^s int int Phi1(v) Phi2(z v g) dv |z|^{ns} d^x z
// as an exact rational function in t = p^{-s}. The z-integral is decomposed
// over valuation shells and unit residue classes; both tails are summed as
// closed-form geometric series after an internal stabilization check.
ZetaExpr local_eisenstein_integral(const GroupElement& g, const SchwartzFunction& phi1,
                                   const SchwartzFunction& phi2);

// GL(1) local mirabolic trace: (int f1 f2) * E(1, s; Phi1, Phi2). The kernel
// is independent of g in rank one and the center equals the whole group, so
// the group average is the single kernel value.
ZetaExpr gl1_local_trace(const SchwartzFunction& f1, const SchwartzFunction& f2,
                         const SchwartzFunction& phi1, const SchwartzFunction& phi2);

}  // namespace mira
