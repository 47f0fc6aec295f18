#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "vector_view.hpp"

namespace jnt {

/// Dense matrix over a single contiguous row-major binary64 array.
/// Element (i, j) lives at flat index i * cols + j; all indexing is 0-based.
/// operator() is unchecked (hot paths); at() throws DimensionError.
class DenseMatrix {
public:
    DenseMatrix() = default;

    DenseMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

    DenseMatrix(std::size_t rows, std::size_t cols, std::vector<double> data)
        : rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols)
            throw DimensionError("DenseMatrix: " + std::to_string(rows) + "x" +
                                 std::to_string(cols) + " needs " +
                                 std::to_string(rows * cols) + " elements, got " +
                                 std::to_string(data_.size()));
    }

    static DenseMatrix identity(std::size_t n) {
        DenseMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
        return m;
    }

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::size_t size() const noexcept { return data_.size(); }

    double& operator()(std::size_t i, std::size_t j) noexcept { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * cols_ + j]; }

    double& at(std::size_t i, std::size_t j) {
        check_index(i, j);
        return data_[i * cols_ + j];
    }
    double at(std::size_t i, std::size_t j) const {
        check_index(i, j);
        return data_[i * cols_ + j];
    }

    double* data() noexcept { return data_.data(); }
    const double* data() const noexcept { return data_.data(); }

    /// Contiguous view of row i.
    VectorView row(std::size_t i) {
        if (i >= rows_)
            throw DimensionError("DenseMatrix::row: index " + std::to_string(i) +
                                 " out of " + std::to_string(rows_));
        return VectorView(std::span<double>(data_), i * cols_, cols_);
    }

    void fill(double value) { data_.assign(data_.size(), value); }

private:
    void check_index(std::size_t i, std::size_t j) const {
        if (i >= rows_ || j >= cols_)
            throw DimensionError("DenseMatrix: index (" + std::to_string(i) + ", " +
                                 std::to_string(j) + ") out of " + std::to_string(rows_) +
                                 "x" + std::to_string(cols_));
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

/// Largest |a(i, j)| over the whole matrix; 0 for an empty matrix.
inline double max_abs(const DenseMatrix& a) {
    double m = 0.0;
    const double* p = a.data();
    for (std::size_t k = 0, n = a.size(); k < n; ++k) {
        const double v = std::fabs(p[k]);
        if (v > m) m = v;
    }
    return m;
}

/// Frobenius norm.
inline double frobenius_norm(const DenseMatrix& a) {
    double s = 0.0;
    const double* p = a.data();
    for (std::size_t k = 0, n = a.size(); k < n; ++k) s += p[k] * p[k];
    return std::sqrt(s);
}

} // namespace jnt
