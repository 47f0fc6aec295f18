#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "dense_matrix.hpp"
#include "errors.hpp"
#include "lu.hpp"
#include "qr.hpp"
#include "vector_view.hpp"

namespace jnt {

/// Matrix that remembers its factorizations.  Every mutation bumps a
/// modification stamp; solve() and solve_lstsq() reuse their cached LU /
/// QR factorization as long as the stamp has not moved, and refactorize
/// otherwise.  factorization_count() exposes how many factorizations
/// have actually been computed, so the caching is observable.
class SmartMatrix {
public:
    explicit SmartMatrix(DenseMatrix m) : m_(std::move(m)) {}

    std::size_t rows() const noexcept { return m_.rows(); }
    std::size_t cols() const noexcept { return m_.cols(); }
    const DenseMatrix& matrix() const noexcept { return m_; }

    double get(std::size_t i, std::size_t j) const { return m_.at(i, j); }

    void set(std::size_t i, std::size_t j, double value) {
        m_.at(i, j) = value;
        ++stamp_;
    }

    /// A x = b through the cached LU factorization.
    std::vector<double> solve(VectorView b) {
        if (!lu_ || lu_stamp_ != stamp_) {
            lu_ = lu_factor(m_);
            lu_stamp_ = stamp_;
            ++factorizations_;
        }
        return lu_solve(*lu_, b);
    }

    /// min ||A x - b|| through the cached QR factorization.
    std::vector<double> solve_lstsq(VectorView b) {
        if (!qr_ || qr_stamp_ != stamp_) {
            qr_ = qr_factor(m_);
            qr_stamp_ = stamp_;
            ++factorizations_;
        }
        return qr_solve_lstsq(*qr_, b);
    }

    std::uint64_t stamp() const noexcept { return stamp_; }
    std::size_t factorization_count() const noexcept { return factorizations_; }

private:
    DenseMatrix m_;
    std::uint64_t stamp_ = 0;
    std::optional<LuFactorization> lu_;
    std::optional<QrFactorization> qr_;
    std::uint64_t lu_stamp_ = 0;
    std::uint64_t qr_stamp_ = 0;
    std::size_t factorizations_ = 0;
};

} // namespace jnt
