#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "blas1.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "gemm.hpp"

namespace jnt {

/// Packed LU factorization with partial pivoting: P A = L U.
/// `lu` stores U on and above the diagonal and the multipliers of the
/// unit-lower L below it.  `pivots[k]` is the row swapped with row k at
/// elimination step k (LAPACK-style successive transpositions).
struct LuFactorization {
    DenseMatrix lu;
    std::vector<std::size_t> pivots;
    int perm_sign = 1; ///< determinant sign of P: +1 / -1

    std::size_t order() const noexcept { return lu.rows(); }
};

/// Right-looking blocked LU with partial pivoting.  Panels of `rank_k`
/// columns are eliminated column by column; the trailing submatrix is
/// then updated in one rank-`rank_k` multiply through the gemm kernel.
/// A pivot of magnitude <= n * eps * max|A| raises SingularMatrixError.
inline LuFactorization lu_factor(const DenseMatrix& a, std::size_t rank_k = 16) {
    if (a.rows() != a.cols())
        throw DimensionError("lu_factor: matrix is " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + ", must be square");
    if (rank_k == 0) throw ConfigError("lu_factor: rank_k must be positive");
    const std::size_t n = a.rows();
    LuFactorization f{a, std::vector<std::size_t>(n), 1};
    double* m = f.lu.data();
    const double threshold =
        static_cast<double>(n) * std::numeric_limits<double>::epsilon() * max_abs(a);

    for (std::size_t j0 = 0; j0 < n; j0 += rank_k) {
        const std::size_t jb = (rank_k < n - j0) ? rank_k : n - j0;
        const std::size_t jend = j0 + jb;

        // Panel factorization: unblocked elimination of columns [j0, jend).
        for (std::size_t j = j0; j < jend; ++j) {
            std::size_t p = j;
            double best = std::fabs(m[j * n + j]);
            for (std::size_t i = j + 1; i < n; ++i) {
                const double v = std::fabs(m[i * n + j]);
                if (v > best) {
                    best = v;
                    p = i;
                }
            }
            if (best <= threshold)
                throw SingularMatrixError("lu_factor: pivot " + std::to_string(best) +
                                              " at column " + std::to_string(j) +
                                              " below threshold " + std::to_string(threshold),
                                          j);
            f.pivots[j] = p;
            if (p != j) {
                for (std::size_t t = 0; t < n; ++t) std::swap(m[j * n + t], m[p * n + t]);
                f.perm_sign = -f.perm_sign;
            }
            const double d = m[j * n + j];
            for (std::size_t i = j + 1; i < n; ++i) m[i * n + j] /= d;
            // Rank-1 update of the rest of the panel only; the trailing
            // matrix right of the panel is deferred to the blocked update.
            for (std::size_t i = j + 1; i < n; ++i) {
                const double lij = m[i * n + j];
                if (lij != 0.0)
                    for (std::size_t t = j + 1; t < jend; ++t) m[i * n + t] -= lij * m[j * n + t];
            }
        }

        if (jend == n) break;

        // U12 <- L11^{-1} U12: forward substitution against the panel's
        // unit-lower triangle, row by row.
        for (std::size_t r = j0 + 1; r < jend; ++r) {
            for (std::size_t i = j0; i < r; ++i) {
                const double l = m[r * n + i];
                if (l != 0.0)
                    for (std::size_t t = jend; t < n; ++t) m[r * n + t] -= l * m[i * n + t];
            }
        }

        // A22 <- A22 - L21 * U12, as one gemm: C += (-L21) * U12.
        const std::size_t rest = n - jend;
        DenseMatrix l21(rest, jb), u12(jb, rest), c22(rest, rest);
        for (std::size_t i = 0; i < rest; ++i)
            for (std::size_t t = 0; t < jb; ++t) l21(i, t) = -m[(jend + i) * n + j0 + t];
        for (std::size_t r = 0; r < jb; ++r)
            for (std::size_t t = 0; t < rest; ++t) u12(r, t) = m[(j0 + r) * n + jend + t];
        gemm(l21, u12, c22);
        for (std::size_t i = 0; i < rest; ++i)
            for (std::size_t t = 0; t < rest; ++t) m[(jend + i) * n + jend + t] += c22(i, t);
    }
    return f;
}

/// Solve A x = b from a factorization: apply P to b, then forward- and
/// back-substitute.  b is read only; the solution is returned.
inline std::vector<double> lu_solve(const LuFactorization& f, VectorView b) {
    const std::size_t n = f.order();
    if (b.size() != n)
        throw DimensionError("lu_solve: b has " + std::to_string(b.size()) +
                             " elements, system order is " + std::to_string(n));
    std::vector<double> x(b.data(), b.data() + n);
    const double* m = f.lu.data();
    for (std::size_t i = 0; i < n; ++i)
        if (f.pivots[i] != i) std::swap(x[i], x[f.pivots[i]]);
    for (std::size_t i = 1; i < n; ++i)
        x[i] -= detail::ddot1(i, m + i * n, x.data());
    for (std::size_t i = n; i-- > 0;) {
        const double s = detail::ddot1(n - i - 1, m + i * n + i + 1, x.data() + i + 1);
        x[i] = (x[i] - s) / m[i * n + i];
    }
    return x;
}

} // namespace jnt
