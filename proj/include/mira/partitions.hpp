#pragma once

#include <string>
#include <vector>

#include "mira/polynomial.hpp"
#include "mira/tate.hpp"

namespace mira {

// Partition of n, rows in non-increasing order.
struct Partition {
    std::vector<long> rows;

    explicit Partition(std::vector<long> r = {});
    long size() const;  // n = sum of rows
    long row(long j) const { return rows[j - 1]; }  // 1-based
    long num_rows() const { return static_cast<long>(rows.size()); }

    bool operator==(const Partition& o) const { return rows == o.rows; }
    bool operator<(const Partition& o) const { return rows < o.rows; }
    std::string str() const;
};

Partition conjugate(const Partition& lam);

struct HookData {
    long h = 0;  // hook = a + l + 1
    long a = 0;  // arm: boxes strictly to the right in the same row
    long l = 0;  // leg: boxes strictly below in the same column
};

// Box (j,k), 1-based row/column; throws on a box outside the diagram.
HookData hook_arm_leg(const Partition& lam, long j, long k);

// The row-count form of the hook length: m_j - k + |{l >= j : m_l >= k}|.
// Always equals hook_arm_leg(...).h; kept separate so the two derivations
// can be compared exhaustively.
long hook_row_count(const Partition& lam, long j, long k);

// One conjugacy-class component: an irreducible monic q over Q together
// with the partition of its exponents across the invariant factors.
struct ClassComponent {
    RationalPoly poly;
    Partition partition;
};

struct ClassDatum {
    std::vector<ClassComponent> components;

    // Sum of deg(q_i) * |lambda_i|.
    long total_size() const;
};

// Predicted multiset of local zeta factors for a conjugacy class: one
// factor zeta_{E_i}(h s - a) per box of each lambda_i, where E_i is the
// degree-d_i extension, h is the hook length and a the arm length of the
// box. Returned sorted.
std::vector<LocalZetaFactor> predict_zeta_multiset(const ClassDatum& c);

// The combinatorial shadow of the s -> 1-s functional equation: the
// multiset of (hook, arm) pairs over the conjugate diagram equals the
// multiset of (hook, leg) pairs over the original.
bool verify_conjugation_symmetry(const Partition& lam);

// All partitions of n, in lexicographically decreasing order of rows.
std::vector<Partition> partitions_of(long n);

}  // namespace mira
