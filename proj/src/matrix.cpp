#include "mira/matrix.hpp"

#include <algorithm>

#include "mira/errors.hpp"

namespace mira {

RationalMatrix::RationalMatrix(long rows, long cols)
    : a(rows, std::vector<Rational>(cols, Rational(0))) {}

RationalMatrix RationalMatrix::identity(long n) {
    RationalMatrix m(n, n);
    for (long i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
    RationalMatrix r = *this;
    for (long i = 0; i < rows(); ++i)
        for (long j = 0; j < cols(); ++j) r(i, j) += o(i, j);
    return r;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
    RationalMatrix r = *this;
    for (long i = 0; i < rows(); ++i)
        for (long j = 0; j < cols(); ++j) r(i, j) -= o(i, j);
    return r;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
    if (cols() != o.rows()) throw Error("matrix dimension mismatch");
    RationalMatrix r(rows(), o.cols());
    for (long i = 0; i < rows(); ++i)
        for (long k = 0; k < cols(); ++k) {
            if (a[i][k] == 0) continue;
            for (long j = 0; j < o.cols(); ++j) r(i, j) += a[i][k] * o(k, j);
        }
    return r;
}

RationalMatrix RationalMatrix::transpose() const {
    RationalMatrix r(cols(), rows());
    for (long i = 0; i < rows(); ++i)
        for (long j = 0; j < cols(); ++j) r(j, i) = a[i][j];
    return r;
}

namespace {

// Row-reduce in place; returns (rank, det sign-and-product for square full
// rank, else 0).
std::pair<long, Rational> eliminate(std::vector<std::vector<Rational>>& m) {
    long rows = static_cast<long>(m.size());
    long cols = rows ? static_cast<long>(m[0].size()) : 0;
    Rational det(1);
    long r = 0;
    for (long c = 0; c < cols && r < rows; ++c) {
        long piv = -1;
        for (long i = r; i < rows; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) { det = 0; continue; }
        if (piv != r) { std::swap(m[piv], m[r]); det = -det; }
        det *= m[r][c];
        for (long i = r + 1; i < rows; ++i) {
            if (m[i][c] == 0) continue;
            Rational f = m[i][c] / m[r][c];
            for (long j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        ++r;
    }
    if (r < rows) det = 0;
    return {r, det};
}

}  // namespace

Rational RationalMatrix::det() const {
    if (rows() != cols()) throw Error("determinant of non-square matrix");
    auto m = a;
    return eliminate(m).second;
}

long RationalMatrix::rank() const {
    auto m = a;
    return eliminate(m).first;
}

RationalMatrix RationalMatrix::inverse() const {
    if (rows() != cols()) throw Error("inverse of non-square matrix");
    long n = rows();
    // Gauss-Jordan on [A | I].
    auto m = a;
    RationalMatrix inv = identity(n);
    for (long c = 0; c < n; ++c) {
        long piv = -1;
        for (long i = c; i < n; ++i)
            if (m[i][c] != 0) { piv = i; break; }
        if (piv < 0) throw Error("singular matrix has no inverse");
        std::swap(m[piv], m[c]);
        std::swap(inv.a[piv], inv.a[c]);
        Rational d = m[c][c];
        for (long j = 0; j < n; ++j) { m[c][j] /= d; inv(c, j) /= d; }
        for (long i = 0; i < n; ++i) {
            if (i == c || m[i][c] == 0) continue;
            Rational f = m[i][c];
            for (long j = 0; j < n; ++j) {
                m[i][j] -= f * m[c][j];
                inv(i, j) -= f * inv(c, j);
            }
        }
    }
    return inv;
}

std::string RationalMatrix::str() const {
    std::string out = "[";
    for (long i = 0; i < rows(); ++i) {
        out += i ? "; " : "";
        for (long j = 0; j < cols(); ++j) out += (j ? ", " : "") + rational_str(a[i][j]);
    }
    return out + "]";
}

std::vector<Rational> row_times_matrix(const std::vector<Rational>& v, const RationalMatrix& X) {
    if (static_cast<long>(v.size()) != X.rows()) throw Error("row-vector dimension mismatch");
    std::vector<Rational> r(X.cols(), Rational(0));
    for (long i = 0; i < X.rows(); ++i) {
        if (v[i] == 0) continue;
        for (long j = 0; j < X.cols(); ++j) r[j] += v[i] * X(i, j);
    }
    return r;
}

}  // namespace mira
