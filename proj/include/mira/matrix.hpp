#pragma once

#include <vector>

#include "mira/rational.hpp"

namespace mira {

// Dense matrix over Q.
struct RationalMatrix {
    std::vector<std::vector<Rational>> a;

    RationalMatrix() = default;
    RationalMatrix(long rows, long cols);
    static RationalMatrix identity(long n);

    long rows() const { return static_cast<long>(a.size()); }
    long cols() const { return a.empty() ? 0 : static_cast<long>(a[0].size()); }

    Rational& operator()(long i, long j) { return a[i][j]; }
    const Rational& operator()(long i, long j) const { return a[i][j]; }

    RationalMatrix operator+(const RationalMatrix& o) const;
    RationalMatrix operator-(const RationalMatrix& o) const;
    RationalMatrix operator*(const RationalMatrix& o) const;
    bool operator==(const RationalMatrix& o) const { return a == o.a; }
    bool operator!=(const RationalMatrix& o) const { return !(*this == o); }

    RationalMatrix transpose() const;
    Rational det() const;
    long rank() const;
    // Throws on a singular matrix.
    RationalMatrix inverse() const;

    std::string str() const;
};

std::vector<Rational> row_times_matrix(const std::vector<Rational>& v, const RationalMatrix& X);

}  // namespace mira
