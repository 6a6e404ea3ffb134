#pragma once

// Small exact linear algebra over Q(zeta12): Gaussian elimination, inverses,
// determinants, and congruence diagonalization of symmetric matrices.

#include <optional>
#include <stdexcept>
#include <vector>

#include "algnum.hpp"

namespace minsing {

using Mat = std::vector<std::vector<AlgNum>>;
using Vec = std::vector<AlgNum>;

inline Mat identity_matrix(size_t n) {
    Mat m(n, Vec(n, AlgNum(0)));
    for (size_t k = 0; k < n; ++k) m[k][k] = AlgNum(1);
    return m;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
    size_t n = a.size(), p = b[0].size(), m = b.size();
    Mat r(n, Vec(p, AlgNum(0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t k = 0; k < m; ++k) {
            if (a[i][k].is_zero()) continue;
            for (size_t j = 0; j < p; ++j) r[i][j] += a[i][k] * b[k][j];
        }
    return r;
}

inline Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size(), AlgNum(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) r[i] += a[i][j] * x[j];
    return r;
}

inline Mat transpose(const Mat& a) {
    Mat r(a[0].size(), Vec(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
    return r;
}

inline AlgNum determinant(Mat a) {
    size_t n = a.size();
    AlgNum det(1);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return AlgNum(0);
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        AlgNum inv = a[col][col].inverse();
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col].is_zero()) continue;
            AlgNum f = a[r][col] * inv;
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

// Solves A x = b; nullopt when A is singular.
inline std::optional<Vec> solve_linear(Mat a, Vec b) {
    size_t n = a.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        AlgNum inv = a[col][col].inverse();
        for (size_t c = col; c < n; ++c) a[col][c] *= inv;
        b[col] *= inv;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            AlgNum f = a[r][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    return b;
}

inline std::optional<Mat> invert_matrix(const Mat& a) {
    size_t n = a.size();
    Mat aug = a;
    Mat inv = identity_matrix(n);
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && aug[piv][col].is_zero()) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(aug[piv], aug[col]);
        std::swap(inv[piv], inv[col]);
        AlgNum d = aug[col][col].inverse();
        for (size_t c = 0; c < n; ++c) {
            aug[col][c] *= d;
            inv[col][c] *= d;
        }
        for (size_t r = 0; r < n; ++r) {
            if (r == col || aug[r][col].is_zero()) continue;
            AlgNum f = aug[r][col];
            for (size_t c = 0; c < n; ++c) {
                aug[r][c] -= f * aug[col][c];
                inv[r][c] -= f * inv[col][c];
            }
        }
    }
    return inv;
}

inline size_t matrix_rank(Mat a) {
    if (a.empty()) return 0;
    size_t rows = a.size(), cols = a[0].size(), rank = 0;
    for (size_t col = 0; col < cols && rank < rows; ++col) {
        size_t piv = rank;
        while (piv < rows && a[piv][col].is_zero()) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[rank]);
        AlgNum inv = a[rank][col].inverse();
        for (size_t r = rank + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            AlgNum f = a[r][col] * inv;
            for (size_t c = col; c < cols; ++c) a[r][c] -= f * a[rank][c];
        }
        ++rank;
    }
    return rank;
}

// For symmetric A returns (P, d) with P^T A P diagonal with entries d.
// P is invertible; zero diagonal entries mark the kernel directions.
inline std::pair<Mat, Vec> congruence_diagonalize(Mat a) {
    size_t n = a.size();
    Mat p = identity_matrix(n);
    for (size_t k = 0; k < n; ++k) {
        if (a[k][k].is_zero()) {
            // Bring a nonzero entry onto the diagonal.
            size_t j = k + 1;
            while (j < n && a[j][j].is_zero()) ++j;
            if (j < n) {
                // Swap basis vectors k and j (congruence by a permutation).
                for (size_t c = 0; c < n; ++c) std::swap(a[k][c], a[j][c]);
                for (size_t r = 0; r < n; ++r) std::swap(a[r][k], a[r][j]);
                for (size_t r = 0; r < n; ++r) std::swap(p[r][k], p[r][j]);
            } else {
                // All remaining diagonal entries vanish; use an off-diagonal
                // one via e_k := e_k + e_j, which puts 2*a[k][j] on the
                // diagonal.
                size_t jj = n;
                for (size_t c = k + 1; c < n && jj == n; ++c)
                    if (!a[k][c].is_zero()) jj = c;
                if (jj == n) continue;  // row (and column) k are zero
                for (size_t c = 0; c < n; ++c) a[k][c] += a[jj][c];
                for (size_t r = 0; r < n; ++r) a[r][k] += a[r][jj];
                for (size_t r = 0; r < n; ++r) p[r][k] += p[r][jj];
            }
        }
        if (a[k][k].is_zero()) continue;
        AlgNum inv = a[k][k].inverse();
        for (size_t j = 0; j < n; ++j) {
            if (j == k || a[k][j].is_zero()) continue;
            AlgNum f = a[k][j] * inv;
            // e_j := e_j - f * e_k clears row/column k outside the diagonal.
            for (size_t c = 0; c < n; ++c) a[j][c] -= f * a[k][c];
            for (size_t r = 0; r < n; ++r) a[r][j] -= f * a[r][k];
            for (size_t r = 0; r < n; ++r) p[r][j] -= f * p[r][k];
        }
    }
    Vec d(n);
    for (size_t k = 0; k < n; ++k) d[k] = a[k][k];
    return {p, d};
}

}  // namespace minsing
