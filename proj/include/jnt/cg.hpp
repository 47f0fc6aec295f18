#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "blas1.hpp"
#include "errors.hpp"
#include "linear_operator.hpp"
#include "vector_view.hpp"

namespace jnt {

/// Outcome of a conjugate-gradient run.  residual_history[0] is the
/// relative residual of the zero start (i.e. 1), followed by one entry
/// per iteration; the entry recorded when the method stops is the *true*
/// residual ||b - A x|| / ||b||, recomputed from scratch, not the
/// recurrence value.
struct CgResult {
    std::vector<double> x;
    std::size_t iterations = 0;
    std::vector<double> residual_history;
    bool converged = false;
};

/// Preconditioned conjugate gradients for SPD operators, starting from
/// x = 0.  Pass nullptr for `precond` to run unpreconditioned.  Before a
/// convergence claim is accepted, the residual is recomputed as
/// b - A x; if the recurrence had drifted optimistic, iteration resumes
/// from the true residual.  A direction with p^T A p <= 0 means the
/// operator is not SPD and raises BreakdownError.  Hitting max_iter
/// returns the current iterate with converged = false (no throw).
inline CgResult cg_solve(const LinearOperator& op, VectorView b,
                         const Preconditioner* precond = nullptr, double tol = 1e-10,
                         std::size_t max_iter = 1000) {
    if (op.rows() != op.cols())
        throw DimensionError("cg_solve: operator is " + std::to_string(op.rows()) + "x" +
                             std::to_string(op.cols()) + ", must be square");
    const std::size_t n = op.rows();
    if (b.size() != n)
        throw DimensionError("cg_solve: b has " + std::to_string(b.size()) +
                             " elements, operator order is " + std::to_string(n));
    if (!(tol > 0.0)) throw DomainError("cg_solve: tol must be positive");

    CgResult out;
    out.x.assign(n, 0.0);
    const double bnorm = dnrm2(n, b);
    if (bnorm == 0.0) {
        out.residual_history.push_back(0.0);
        out.converged = true;
        return out;
    }
    std::vector<double> r(b.data(), b.data() + n);
    std::vector<double> z(n), p(n), ap(n);
    out.residual_history.push_back(1.0);

    // Recompute ||b - A x|| / ||b|| from the current iterate.
    const auto true_residual = [&](std::vector<double>& dst) {
        op.apply(out.x, ap);
        for (std::size_t i = 0; i < n; ++i) dst[i] = b[i] - ap[i];
        return dnrm2(n, dst) / bnorm;
    };

    double rz_prev = 0.0;
    for (std::size_t it = 1; it <= max_iter; ++it) {
        if (precond != nullptr)
            precond->apply(r, z);
        else
            dcopy(n, r, z);
        const double rz = ddot(n, r, z);
        if (it == 1) {
            dcopy(n, z, p);
        } else {
            const double beta = rz / rz_prev;
            for (std::size_t i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
        }
        op.apply(p, ap);
        const double pap = ddot(n, p, ap);
        if (pap <= 0.0)
            throw BreakdownError("cg_solve: direction with p^T A p = " + std::to_string(pap) +
                                 " at iteration " + std::to_string(it) +
                                 "; operator is not SPD");
        const double alpha = rz / pap;
        daxpy(n, alpha, p, out.x);
        daxpy(n, -alpha, ap, r);
        out.iterations = it;
        rz_prev = rz;

        const double rel = dnrm2(n, r) / bnorm;
        if (rel <= tol) {
            std::vector<double> rt(n);
            const double true_rel = true_residual(rt);
            out.residual_history.push_back(true_rel);
            if (true_rel <= tol) {
                out.converged = true;
                return out;
            }
            r = rt; // recurrence was optimistic: continue from the true residual
        } else {
            out.residual_history.push_back(rel);
        }
    }
    // Out of iterations: make the last history entry honest.
    std::vector<double> rt(n);
    out.residual_history.back() = true_residual(rt);
    out.converged = out.residual_history.back() <= tol;
    return out;
}

} // namespace jnt
