#pragma once

#include <cmath>
#include <cstddef>
#include <string>

#include "dense_matrix.hpp"
#include "errors.hpp"
#include "vector_view.hpp"

// Level-1 kernels with explicit unrolling variants.  Every unrolled loop
// performs the same floating-point operations in the same order as the
// rolled one (one accumulator, ascending index), so all variants of a
// kernel produce bitwise identical results; only the loop overhead differs.

namespace jnt {

/// Loop-unrolling variant selector for daxpy/ddot.
enum class Unroll {
    one,      ///< plain loop
    four,     ///< body repeated 4x, index arithmetic per element
    four_inc, ///< body repeated 4x, pointers bumped once per pass
    eight     ///< body repeated 8x
};

namespace detail {

inline void daxpy1(std::size_t n, double a, const double* x, double* y) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

inline void daxpy4(std::size_t n, double a, const double* x, double* y) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        y[i] += a * x[i];
        y[i + 1] += a * x[i + 1];
        y[i + 2] += a * x[i + 2];
        y[i + 3] += a * x[i + 3];
    }
    for (std::size_t r = 0; r < n % 4; ++r) y[i + r] += a * x[i + r];
}

inline void daxpy4_inc(std::size_t n, double a, const double* x, double* y) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        y[0] += a * x[0];
        y[1] += a * x[1];
        y[2] += a * x[2];
        y[3] += a * x[3];
        x += 4;
        y += 4;
    }
    for (std::size_t r = 0; r < n % 4; ++r) y[r] += a * x[r];
}

inline void daxpy8(std::size_t n, double a, const double* x, double* y) {
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        y[i] += a * x[i];
        y[i + 1] += a * x[i + 1];
        y[i + 2] += a * x[i + 2];
        y[i + 3] += a * x[i + 3];
        y[i + 4] += a * x[i + 4];
        y[i + 5] += a * x[i + 5];
        y[i + 6] += a * x[i + 6];
        y[i + 7] += a * x[i + 7];
    }
    for (std::size_t r = 0; r < n % 8; ++r) y[i + r] += a * x[i + r];
}

inline double ddot1(std::size_t n, const double* x, const double* y) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += x[i] * y[i];
    return s;
}

// Single accumulator on purpose: partial sums would be faster but would
// change the rounding sequence and break bit-identity with ddot1.
inline double ddot4(std::size_t n, const double* x, const double* y) {
    double s = 0.0;
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        s += x[i] * y[i];
        s += x[i + 1] * y[i + 1];
        s += x[i + 2] * y[i + 2];
        s += x[i + 3] * y[i + 3];
    }
    for (std::size_t r = 0; r < n % 4; ++r) s += x[i + r] * y[i + r];
    return s;
}

inline double ddot8(std::size_t n, const double* x, const double* y) {
    double s = 0.0;
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        s += x[i] * y[i];
        s += x[i + 1] * y[i + 1];
        s += x[i + 2] * y[i + 2];
        s += x[i + 3] * y[i + 3];
        s += x[i + 4] * y[i + 4];
        s += x[i + 5] * y[i + 5];
        s += x[i + 6] * y[i + 6];
        s += x[i + 7] * y[i + 7];
    }
    for (std::size_t r = 0; r < n % 8; ++r) s += x[i + r] * y[i + r];
    return s;
}

inline void check_length(const char* who, std::size_t n, const VectorView& v, const char* name) {
    if (n > v.size())
        throw DimensionError(std::string(who) + ": needs " + std::to_string(n) +
                             " elements of " + name + ", view has " + std::to_string(v.size()));
}

} // namespace detail

/// y <- y + alpha * x over the first n elements of both views.
inline void daxpy(std::size_t n, double alpha, VectorView x, VectorView y,
                  Unroll variant = Unroll::one) {
    detail::check_length("daxpy", n, x, "x");
    detail::check_length("daxpy", n, y, "y");
    switch (variant) {
    case Unroll::one: detail::daxpy1(n, alpha, x.data(), y.data()); break;
    case Unroll::four: detail::daxpy4(n, alpha, x.data(), y.data()); break;
    case Unroll::four_inc: detail::daxpy4_inc(n, alpha, x.data(), y.data()); break;
    case Unroll::eight: detail::daxpy8(n, alpha, x.data(), y.data()); break;
    }
}

/// Dot product of the first n elements of x and y.
inline double ddot(std::size_t n, VectorView x, VectorView y, Unroll variant = Unroll::one) {
    detail::check_length("ddot", n, x, "x");
    detail::check_length("ddot", n, y, "y");
    switch (variant) {
    case Unroll::one: return detail::ddot1(n, x.data(), y.data());
    case Unroll::four: return detail::ddot4(n, x.data(), y.data());
    case Unroll::eight: return detail::ddot8(n, x.data(), y.data());
    case Unroll::four_inc: break;
    }
    throw DomainError("ddot: no 4-inc variant");
}

/// x <- alpha * x over the first n elements.
inline void dscal(std::size_t n, double alpha, VectorView x) {
    detail::check_length("dscal", n, x, "x");
    double* p = x.data();
    for (std::size_t i = 0; i < n; ++i) p[i] *= alpha;
}

/// y <- x over the first n elements.
inline void dcopy(std::size_t n, VectorView x, VectorView y) {
    detail::check_length("dcopy", n, x, "x");
    detail::check_length("dcopy", n, y, "y");
    const double* p = x.data();
    double* q = y.data();
    for (std::size_t i = 0; i < n; ++i) q[i] = p[i];
}

/// Euclidean norm of the first n elements, by scaled sum of squares so
/// that vectors near the overflow/underflow boundary still come out right.
inline double dnrm2(std::size_t n, VectorView x) {
    detail::check_length("dnrm2", n, x, "x");
    const double* p = x.data();
    double scale = 0.0, ssq = 1.0;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == 0.0) continue;
        const double ax = std::fabs(p[i]);
        if (scale < ax) {
            const double r = scale / ax;
            ssq = 1.0 + ssq * r * r;
            scale = ax;
        } else {
            const double r = ax / scale;
            ssq += r * r;
        }
    }
    return scale * std::sqrt(ssq);
}

/// Index of the first element of largest magnitude; n must be >= 1.
inline std::size_t idamax(std::size_t n, VectorView x) {
    if (n == 0) throw DimensionError("idamax: empty range");
    detail::check_length("idamax", n, x, "x");
    const double* p = x.data();
    std::size_t best = 0;
    double bv = std::fabs(p[0]);
    for (std::size_t i = 1; i < n; ++i) {
        const double v = std::fabs(p[i]);
        if (v > bv) {
            bv = v;
            best = i;
        }
    }
    return best;
}

/// Column-wise daxpy between matrices:
/// b(brow + i, bcol) += alpha * a(arow + i, acol) for i in [0, n).
inline void daxpy_col(std::size_t n, double alpha,
                      const DenseMatrix& a, std::size_t arow, std::size_t acol,
                      DenseMatrix& b, std::size_t brow, std::size_t bcol) {
    if (acol >= a.cols() || arow + n > a.rows())
        throw DimensionError("daxpy_col: source column window out of range");
    if (bcol >= b.cols() || brow + n > b.rows())
        throw DimensionError("daxpy_col: destination column window out of range");
    const double* ap = a.data() + arow * a.cols() + acol;
    double* bp = b.data() + brow * b.cols() + bcol;
    const std::size_t as = a.cols(), bs = b.cols();
    for (std::size_t i = 0; i < n; ++i) bp[i * bs] += alpha * ap[i * as];
}

} // namespace jnt
