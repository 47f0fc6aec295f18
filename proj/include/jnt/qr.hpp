#pragma once

#include <cmath>
#include <cstddef>
#include <limits>
#include <string>
#include <vector>

#include "blas1.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"

namespace jnt {

/// Householder QR of an m x n matrix with m >= n.
/// `qr` stores R on and above the diagonal; below the diagonal of column
/// k lives the tail of the k-th Householder vector v, normalized so that
/// v[k] = 1 (the implicit leading 1 is not stored).  tau[k] is the
/// reflector coefficient: H_k = I - tau[k] * v v^T.
struct QrFactorization {
    DenseMatrix qr;
    std::vector<double> tau;

    std::size_t rows() const noexcept { return qr.rows(); }
    std::size_t cols() const noexcept { return qr.cols(); }
};

namespace detail {

// Euclidean norm of the column segment a(row0..m-1, col), scaled like dnrm2.
inline double column_nrm2(const double* a, std::size_t lda, std::size_t row0, std::size_t m,
                          std::size_t col) {
    double scale = 0.0, ssq = 1.0;
    for (std::size_t i = row0; i < m; ++i) {
        const double v = a[i * lda + col];
        if (v == 0.0) continue;
        const double av = std::fabs(v);
        if (scale < av) {
            const double r = scale / av;
            ssq = 1.0 + ssq * r * r;
            scale = av;
        } else {
            const double r = av / scale;
            ssq += r * r;
        }
    }
    return scale * std::sqrt(ssq);
}

// Apply H_k = I - tau v v^T (v stored in column k of qr, leading 1
// implicit) to the columns [t0, n) of qr, row-orientedly: accumulate
// w = v^T A into a row workspace with daxpy over rows, then subtract
// tau * v * w from each row.
inline void apply_reflector(double* q, std::size_t lda, std::size_t m, std::size_t n,
                            std::size_t k, double tau, std::size_t t0, double* w) {
    const std::size_t tw = n - t0;
    if (tw == 0 || tau == 0.0) return;
    for (std::size_t t = 0; t < tw; ++t) w[t] = q[k * lda + t0 + t];
    for (std::size_t i = k + 1; i < m; ++i)
        daxpy1(tw, q[i * lda + k], q + i * lda + t0, w);
    daxpy1(tw, -tau, w, q + k * lda + t0);
    for (std::size_t i = k + 1; i < m; ++i)
        daxpy1(tw, -tau * q[i * lda + k], w, q + i * lda + t0);
}

} // namespace detail

/// Factor A (m x n, m >= n) as Q R by Householder reflections, applied
/// row-orientedly (daxpy across rows) so the row-major layout is walked
/// contiguously.  The sign convention is v = x + sign(x[0]) * ||x|| e1,
/// which makes R's diagonal entry -sign(x[0]) * ||x||.  A zero column
/// yields tau = 0 (identity reflector) and a zero on R's diagonal; the
/// rank check happens at solve time.
inline QrFactorization qr_factor(const DenseMatrix& a) {
    const std::size_t m = a.rows(), n = a.cols();
    if (m < n)
        throw DimensionError("qr_factor: matrix is " + std::to_string(m) + "x" +
                             std::to_string(n) + ", needs rows >= cols");
    QrFactorization f{a, std::vector<double>(n, 0.0)};
    double* q = f.qr.data();
    std::vector<double> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double norm = detail::column_nrm2(q, n, k, m, k);
        if (norm == 0.0) continue; // tau stays 0, R(k,k) stays 0
        const double alpha = q[k * n + k];
        const double sigma = (alpha >= 0.0) ? norm : -norm;
        const double v1 = alpha + sigma;
        for (std::size_t i = k + 1; i < m; ++i) q[i * n + k] /= v1;
        f.tau[k] = v1 / sigma;
        q[k * n + k] = -sigma;
        detail::apply_reflector(q, n, m, n, k, f.tau[k], k + 1, w.data());
    }
    return f;
}

/// Least-squares solution of A x ~= b through the factorization: apply
/// Q^T to b, check R for rank deficiency, back-substitute the top n x n
/// triangle.  A diagonal entry of R with magnitude <= m * eps * max|R|
/// raises SingularMatrixError naming the offending column.
inline std::vector<double> qr_solve_lstsq(const QrFactorization& f, VectorView b) {
    const std::size_t m = f.rows(), n = f.cols();
    if (b.size() != m)
        throw DimensionError("qr_solve_lstsq: b has " + std::to_string(b.size()) +
                             " elements, matrix has " + std::to_string(m) + " rows");
    const double* q = f.qr.data();
    std::vector<double> y(b.data(), b.data() + m);
    for (std::size_t k = 0; k < n; ++k) {
        if (f.tau[k] == 0.0) continue;
        double s = y[k];
        for (std::size_t i = k + 1; i < m; ++i) s += q[i * n + k] * y[i];
        s *= f.tau[k];
        y[k] -= s;
        for (std::size_t i = k + 1; i < m; ++i) y[i] -= q[i * n + k] * s;
    }
    double rmax = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            const double v = std::fabs(q[i * n + j]);
            if (v > rmax) rmax = v;
        }
    const double threshold =
        static_cast<double>(m) * std::numeric_limits<double>::epsilon() * rmax;
    std::vector<double> x(n);
    for (std::size_t i = n; i-- > 0;) {
        if (std::fabs(q[i * n + i]) <= threshold)
            throw SingularMatrixError("qr_solve_lstsq: rank-deficient at column " +
                                          std::to_string(i),
                                      i);
        double s = y[i];
        for (std::size_t j = i + 1; j < n; ++j) s -= q[i * n + j] * x[j];
        x[i] = s / q[i * n + i];
    }
    return x;
}

/// Explicit thin Q (m x n): apply the reflectors in reverse to the first
/// n columns of the identity.
inline DenseMatrix qr_q(const QrFactorization& f) {
    const std::size_t m = f.rows(), n = f.cols();
    DenseMatrix out(m, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    const double* q = f.qr.data();
    std::vector<double> w(n);
    for (std::size_t k = n; k-- > 0;) {
        if (f.tau[k] == 0.0) continue;
        // w = v^T out over all n columns, then out -= tau v w.
        double* o = out.data();
        for (std::size_t t = 0; t < n; ++t) w[t] = o[k * n + t];
        for (std::size_t i = k + 1; i < m; ++i)
            detail::daxpy1(n, q[i * n + k], o + i * n, w.data());
        detail::daxpy1(n, -f.tau[k], w.data(), o + k * n);
        for (std::size_t i = k + 1; i < m; ++i)
            detail::daxpy1(n, -f.tau[k] * q[i * n + k], w.data(), o + i * n);
    }
    return out;
}

/// Extract the n x n upper triangle R.
inline DenseMatrix qr_r(const QrFactorization& f) {
    const std::size_t n = f.cols();
    DenseMatrix r(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) r(i, j) = f.qr(i, j);
    return r;
}

} // namespace jnt
