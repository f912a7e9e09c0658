#pragma once

// Small dense exact linear algebra: fraction-free (Bareiss) determinants
// for integer matrices, Gauss-Jordan inverse and rank over the rationals.
// Matrices here are at most a few hundred rows (Bell-number bases), so
// simplicity beats asymptotics; entry growth is what matters, and Bareiss
// keeps intermediate integers single-division exact.

#include <stdexcept>
#include <vector>

#include "eqg/rational.hpp"

namespace eqg {

template <typename T>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(int r, int c, T init = T(0)) : rows_(r), cols_(c), data_((size_t)r * c, init) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    T& operator()(int i, int j) { return data_[(size_t)i * cols_ + j]; }
    const T& operator()(int i, int j) const { return data_[(size_t)i * cols_ + j]; }

    bool operator==(const Matrix&) const = default;

    static Matrix identity(int n) {
        Matrix m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        Matrix out(rows_, o.cols_);
        for (int i = 0; i < rows_; ++i)
            for (int k = 0; k < cols_; ++k) {
                const T& a = (*this)(i, k);
                if (a == T(0)) continue;
                for (int j = 0; j < o.cols_; ++j) out(i, j) += a * o(k, j);
            }
        return out;
    }

private:
    int rows_, cols_;
    std::vector<T> data_;
};

using IMatrix = Matrix<Int>;
using QMatrix = Matrix<Rat>;

// Bareiss fraction-free elimination; exact integer determinant.
inline Int det_bareiss(IMatrix m) {
    int n = m.rows();
    if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
    if (n == 0) return 1;
    Int prev = 1;
    int sign = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (m(k, k) == 0) {
            int piv = -1;
            for (int r = k + 1; r < n; ++r)
                if (m(r, k) != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0) return 0;
            for (int c = k; c < n; ++c) std::swap(m(k, c), m(piv, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                Int t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
        prev = m(k, k);
    }
    return sign > 0 ? m(n - 1, n - 1) : -m(n - 1, n - 1);
}

// Gauss-Jordan inverse over the rationals; throws if singular.
inline QMatrix inverse(QMatrix a) {
    int n = a.rows();
    if (n != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
    QMatrix inv = QMatrix::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) throw std::domain_error("matrix is singular");
        if (piv != col)
            for (int c = 0; c < n; ++c) {
                std::swap(a(piv, c), a(col, c));
                std::swap(inv(piv, c), inv(col, c));
            }
        Rat d = 1 / a(col, col);
        for (int c = 0; c < n; ++c) {
            a(col, c) *= d;
            inv(col, c) *= d;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (int c = 0; c < n; ++c) {
                if (a(col, c) != 0) a(r, c) -= f * a(col, c);
                if (inv(col, c) != 0) inv(r, c) -= f * inv(col, c);
            }
        }
    }
    return inv;
}

inline int rank(QMatrix a) {
    int n = a.rows(), m = a.cols(), rk = 0;
    for (int col = 0; col < m && rk < n; ++col) {
        int piv = -1;
        for (int r = rk; r < n; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rk)
            for (int c = col; c < m; ++c) std::swap(a(piv, c), a(rk, c));
        Rat d = 1 / a(rk, col);
        for (int c = col; c < m; ++c) a(rk, c) *= d;
        for (int r = 0; r < n; ++r) {
            if (r == rk || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (int c = col; c < m; ++c) a(r, c) -= f * a(rk, c);
        }
        ++rk;
    }
    return rk;
}

// Moore-Penrose style quasi-inverse via rank factorization: returns W with
// G W G = G. Experimental path behind the --quasi flag.
inline QMatrix quasi_inverse(const QMatrix& g) {
    // Row-reduce [g | I] to find a maximal invertible submatrix.
    int n = g.rows();
    // pivot columns of g
    QMatrix a = g;
    std::vector<int> pivot_cols, pivot_rows;
    int rk = 0;
    std::vector<int> rowperm(n);
    for (int i = 0; i < n; ++i) rowperm[i] = i;
    for (int col = 0; col < n && rk < n; ++col) {
        int piv = -1;
        for (int r = rk; r < n; ++r)
            if (a(r, col) != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        if (piv != rk) {
            for (int c = 0; c < n; ++c) std::swap(a(piv, c), a(rk, c));
            std::swap(rowperm[piv], rowperm[rk]);
        }
        pivot_cols.push_back(col);
        pivot_rows.push_back(rowperm[rk]);
        Rat d = 1 / a(rk, col);
        for (int c = 0; c < n; ++c) a(rk, c) *= d;
        for (int r = 0; r < n; ++r) {
            if (r == rk || a(r, col) == 0) continue;
            Rat f = a(r, col);
            for (int c = 0; c < n; ++c) a(r, c) -= f * a(rk, c);
        }
        ++rk;
    }
    // g is symmetric in our uses; the (pivot_rows x pivot_cols) block is
    // invertible. W = S (B^-1) S^T with S the column-selection map works for
    // symmetric g when pivot rows/cols coincide as index sets.
    QMatrix b(rk, rk);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j) b(i, j) = g(pivot_cols[i], pivot_cols[j]);
    QMatrix binv = inverse(b);
    QMatrix w(n, n);
    for (int i = 0; i < rk; ++i)
        for (int j = 0; j < rk; ++j) w(pivot_cols[i], pivot_cols[j]) = binv(i, j);
    return w;
}

}  // namespace eqg
