#pragma once

#include <cstddef>

#include "blas1.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "vector_view.hpp"

namespace jnt {

/// y <- alpha * A x + beta * y, traversing A row by row (each row is a
/// contiguous dot product against x).  When beta == 0 the old y is never
/// read, so an uninitialized y is fine.
inline void dgemv(double alpha, const DenseMatrix& a, VectorView x, double beta, VectorView y) {
    if (x.size() != a.cols())
        throw DimensionError("dgemv: x has " + std::to_string(x.size()) +
                             " elements, A has " + std::to_string(a.cols()) + " columns");
    if (y.size() != a.rows())
        throw DimensionError("dgemv: y has " + std::to_string(y.size()) +
                             " elements, A has " + std::to_string(a.rows()) + " rows");
    const double* ap = a.data();
    const double* xp = x.data();
    double* yp = y.data();
    const std::size_t m = a.rows(), n = a.cols();
    for (std::size_t i = 0; i < m; ++i) {
        const double s = detail::ddot1(n, ap + i * n, xp);
        yp[i] = (beta == 0.0) ? alpha * s : alpha * s + beta * yp[i];
    }
}

} // namespace jnt
