#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "coo_matrix.hpp"
#include "errors.hpp"
#include "vector_view.hpp"

namespace jnt {

/// Abstract y <- A x.  Iterative solvers see operators only through this
/// interface, so they work identically for sparse, dense or matrix-free
/// representations.
class LinearOperator {
public:
    virtual ~LinearOperator() = default;
    virtual std::size_t rows() const = 0;
    virtual std::size_t cols() const = 0;
    virtual void apply(VectorView x, VectorView y) const = 0;
};

/// Abstract z <- M^{-1} r for preconditioning.
class Preconditioner {
public:
    virtual ~Preconditioner() = default;
    virtual void apply(VectorView r, VectorView z) const = 0;
};

/// LinearOperator facade over a CooMatrix.  Holds a pointer: the matrix
/// must outlive the operator.
class CooOperator final : public LinearOperator {
public:
    explicit CooOperator(const CooMatrix& a) : a_(&a) {}
    std::size_t rows() const override { return a_->rows; }
    std::size_t cols() const override { return a_->cols; }
    void apply(VectorView x, VectorView y) const override { coo_matvec(*a_, x, y); }

private:
    const CooMatrix* a_;
};

inline CooOperator coo_as_operator(const CooMatrix& a) { return CooOperator(a); }

/// Diagonal (Jacobi) preconditioner: z_i = r_i / a_ii.
class JacobiPreconditioner final : public Preconditioner {
public:
    explicit JacobiPreconditioner(std::vector<double> inverse_diagonal)
        : inv_diag_(std::move(inverse_diagonal)) {}

    void apply(VectorView r, VectorView z) const override {
        if (r.size() != inv_diag_.size() || z.size() != inv_diag_.size())
            throw DimensionError("JacobiPreconditioner: vector size " + std::to_string(r.size()) +
                                 "/" + std::to_string(z.size()) + " vs diagonal " +
                                 std::to_string(inv_diag_.size()));
        const double* rp = r.data();
        double* zp = z.data();
        for (std::size_t i = 0; i < inv_diag_.size(); ++i) zp[i] = rp[i] * inv_diag_[i];
    }

private:
    std::vector<double> inv_diag_;
};

/// Build the Jacobi preconditioner from a square CooMatrix.  Duplicate
/// diagonal entries accumulate; a zero (or absent) diagonal makes the
/// preconditioner singular and raises SingularMatrixError naming the row.
inline JacobiPreconditioner jacobi_preconditioner(const CooMatrix& a) {
    detail::check_coo(a, "jacobi_preconditioner");
    if (a.rows != a.cols)
        throw DimensionError("jacobi_preconditioner: matrix is " + std::to_string(a.rows) + "x" +
                             std::to_string(a.cols) + ", must be square");
    std::vector<double> diag(a.rows, 0.0);
    for (std::size_t t = 0, nz = a.nnz(); t < nz; ++t)
        if (a.row_index[t] == a.col_index[t]) diag[a.row_index[t]] += a.values[t];
    for (std::size_t i = 0; i < diag.size(); ++i) {
        if (diag[i] == 0.0)
            throw SingularMatrixError("jacobi_preconditioner: zero diagonal at row " +
                                          std::to_string(i),
                                      i);
        diag[i] = 1.0 / diag[i];
    }
    return JacobiPreconditioner(std::move(diag));
}

} // namespace jnt
