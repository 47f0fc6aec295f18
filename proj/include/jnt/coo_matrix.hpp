#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dense_matrix.hpp"
#include "errors.hpp"
#include "vector_view.hpp"

namespace jnt {

/// Sparse matrix in coordinate (triplet) form: parallel arrays of row
/// index, column index and value, in whatever order the entries were
/// added.  Duplicate (i, j) entries are legal and act additively.
struct CooMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::size_t> row_index;
    std::vector<std::size_t> col_index;
    std::vector<double> values;

    CooMatrix() = default;
    CooMatrix(std::size_t r, std::size_t c) : rows(r), cols(c) {}

    std::size_t nnz() const noexcept { return values.size(); }

    /// Append one entry, bounds-checked against the declared shape.
    void add(std::size_t i, std::size_t j, double v) {
        if (i >= rows || j >= cols)
            throw DimensionError("CooMatrix::add: entry (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") out of " + std::to_string(rows) + "x" +
                                 std::to_string(cols));
        row_index.push_back(i);
        col_index.push_back(j);
        values.push_back(v);
    }
};

namespace detail {

inline void check_coo(const CooMatrix& a, const char* who) {
    if (a.row_index.size() != a.values.size() || a.col_index.size() != a.values.size())
        throw MalformedMatrixError(std::string(who) + ": triplet arrays have unequal lengths " +
                                   std::to_string(a.row_index.size()) + "/" +
                                   std::to_string(a.col_index.size()) + "/" +
                                   std::to_string(a.values.size()));
}

} // namespace detail

/// y <- A x, accumulating the triplets in stored order.  Duplicates sum.
inline void coo_matvec(const CooMatrix& a, VectorView x, VectorView y) {
    detail::check_coo(a, "coo_matvec");
    if (x.size() != a.cols)
        throw DimensionError("coo_matvec: x has " + std::to_string(x.size()) +
                             " elements, matrix has " + std::to_string(a.cols) + " columns");
    if (y.size() != a.rows)
        throw DimensionError("coo_matvec: y has " + std::to_string(y.size()) +
                             " elements, matrix has " + std::to_string(a.rows) + " rows");
    double* yp = y.data();
    const double* xp = x.data();
    for (std::size_t i = 0; i < a.rows; ++i) yp[i] = 0.0;
    for (std::size_t t = 0, nz = a.nnz(); t < nz; ++t) {
        const std::size_t i = a.row_index[t], j = a.col_index[t];
        if (i >= a.rows || j >= a.cols)
            throw MalformedMatrixError("coo_matvec: entry " + std::to_string(t) + " at (" +
                                       std::to_string(i) + ", " + std::to_string(j) +
                                       ") outside " + std::to_string(a.rows) + "x" +
                                       std::to_string(a.cols));
        yp[i] += a.values[t] * xp[j];
    }
}

/// Dense copy; duplicate entries accumulate.
inline DenseMatrix densify(const CooMatrix& a) {
    detail::check_coo(a, "densify");
    DenseMatrix d(a.rows, a.cols);
    for (std::size_t t = 0, nz = a.nnz(); t < nz; ++t) {
        const std::size_t i = a.row_index[t], j = a.col_index[t];
        if (i >= a.rows || j >= a.cols)
            throw MalformedMatrixError("densify: entry " + std::to_string(t) + " at (" +
                                       std::to_string(i) + ", " + std::to_string(j) +
                                       ") outside " + std::to_string(a.rows) + "x" +
                                       std::to_string(a.cols));
        d(i, j) += a.values[t];
    }
    return d;
}

} // namespace jnt
