#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstddef>
#include <vector>

#include "jnt/blas2.hpp"
#include "jnt/cg.hpp"
#include "jnt/coo_matrix.hpp"
#include "jnt/errors.hpp"
#include "jnt/linear_operator.hpp"
#include "jnt/rng.hpp"
#include "test_support.hpp"

using jnt::CooMatrix;

namespace {

CooMatrix dense_to_coo(const jnt::DenseMatrix& d) {
    CooMatrix a(d.rows(), d.cols());
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (d(i, j) != 0.0) a.add(i, j, d(i, j));
    return a;
}

// Random SPD test matrix: M^T M + I.
jnt::DenseMatrix random_spd(jnt::Rng& rng, std::size_t n) {
    const auto m = testsupport::random_matrix(rng, n, n);
    jnt::DenseMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double s = (i == j) ? 1.0L : 0.0L;
            for (std::size_t k = 0; k < n; ++k) s += static_cast<long double>(m(k, i)) * m(k, j);
            a(i, j) = static_cast<double>(s);
        }
    return a;
}

} // namespace

TEST_CASE("coo_matvec agrees with the densified product", "[sparse]") {
    jnt::Rng rng(3001);
    CooMatrix a(15, 11);
    for (int t = 0; t < 60; ++t)
        a.add(static_cast<std::size_t>(rng.next_uniform() * 15.0),
              static_cast<std::size_t>(rng.next_uniform() * 11.0),
              2.0 * rng.next_uniform() - 1.0);
    auto x = testsupport::random_vector(rng, 11);
    std::vector<double> y(15);
    jnt::coo_matvec(a, x, y);
    const auto ref = testsupport::naive_matvec(jnt::densify(a), x);
    for (std::size_t i = 0; i < 15; ++i)
        CHECK(std::fabs(y[i] - ref[i]) <= 1e-13 * (1.0 + std::fabs(ref[i])));
}

TEST_CASE("duplicate triplets accumulate", "[sparse]") {
    CooMatrix a(2, 2);
    a.add(0, 0, 1.0);
    a.add(0, 0, 2.0);
    a.add(1, 1, -1.0);
    CHECK(a.nnz() == 3);
    const auto d = jnt::densify(a);
    CHECK(d(0, 0) == 3.0);
    CHECK(d(1, 1) == -1.0);
    std::vector<double> x{2.0, 5.0}, y(2);
    jnt::coo_matvec(a, x, y);
    CHECK(y[0] == 6.0);
    CHECK(y[1] == -5.0);
}

TEST_CASE("coo matvec overwrites y rather than accumulating into it", "[sparse]") {
    CooMatrix a(2, 2);
    a.add(0, 0, 1.0);
    std::vector<double> x{1.0, 1.0}, y{100.0, 100.0};
    jnt::coo_matvec(a, x, y);
    CHECK(y[0] == 1.0);
    CHECK(y[1] == 0.0);
}

TEST_CASE("malformed triplet structures are rejected", "[sparse]") {
    CooMatrix a(3, 3);
    a.add(1, 1, 5.0);
    a.row_index.push_back(2); // now the arrays disagree
    std::vector<double> x(3, 1.0), y(3);
    CHECK_THROWS_AS(jnt::coo_matvec(a, x, y), jnt::MalformedMatrixError);
    CHECK_THROWS_AS(jnt::densify(a), jnt::MalformedMatrixError);

    CooMatrix b(3, 3);
    b.add(1, 1, 5.0);
    b.col_index[0] = 7; // corrupt an index past the declared shape
    CHECK_THROWS_AS(jnt::coo_matvec(b, x, y), jnt::MalformedMatrixError);
    CHECK_THROWS_AS(jnt::densify(b), jnt::MalformedMatrixError);

    CHECK_THROWS_AS(b.add(3, 0, 1.0), jnt::DimensionError);
    CHECK_THROWS_AS(b.add(0, 3, 1.0), jnt::DimensionError);

    CooMatrix c(2, 3);
    c.add(0, 0, 1.0);
    std::vector<double> wrong_x(2, 1.0), y2(2);
    CHECK_THROWS_AS(jnt::coo_matvec(c, wrong_x, y2), jnt::DimensionError);
    std::vector<double> x3(3, 1.0), wrong_y(3);
    CHECK_THROWS_AS(jnt::coo_matvec(c, x3, wrong_y), jnt::DimensionError);
}

TEST_CASE("coo operator exposes the matrix through the abstract interface", "[sparse]") {
    jnt::Rng rng(3002);
    CooMatrix a(8, 8);
    for (std::size_t i = 0; i < 8; ++i) a.add(i, i, 1.0 + rng.next_uniform());
    const auto op = jnt::coo_as_operator(a);
    CHECK(op.rows() == 8);
    CHECK(op.cols() == 8);
    auto x = testsupport::random_vector(rng, 8);
    std::vector<double> y1(8), y2(8);
    op.apply(x, y1);
    jnt::coo_matvec(a, x, y2);
    for (std::size_t i = 0; i < 8; ++i) CHECK(y1[i] == y2[i]);
}

TEST_CASE("jacobi preconditioner inverts the accumulated diagonal", "[sparse]") {
    CooMatrix a(3, 3);
    a.add(0, 0, 2.0);
    a.add(1, 1, 1.0);
    a.add(1, 1, 3.0); // duplicates sum: effective diagonal 4
    a.add(2, 2, 8.0);
    a.add(0, 2, 5.0); // off-diagonal entries are ignored
    const auto pre = jnt::jacobi_preconditioner(a);
    std::vector<double> r{2.0, 8.0, 8.0}, z(3);
    pre.apply(r, z);
    CHECK(z[0] == 1.0);
    CHECK(z[1] == 2.0);
    CHECK(z[2] == 1.0);

    std::vector<double> bad(2, 0.0);
    CHECK_THROWS_AS(pre.apply(bad, z), jnt::DimensionError);
}

TEST_CASE("jacobi preconditioner refuses a vanishing diagonal", "[sparse]") {
    CooMatrix a(3, 3);
    a.add(0, 0, 1.0);
    a.add(2, 2, 1.0); // row 1 has no diagonal entry at all
    try {
        jnt::jacobi_preconditioner(a);
        FAIL("expected SingularMatrixError");
    } catch (const jnt::SingularMatrixError& e) {
        CHECK(e.column() == 1);
    }

    CooMatrix b(2, 2);
    b.add(0, 0, 1.0);
    b.add(1, 1, 2.0);
    b.add(1, 1, -2.0); // duplicates cancel to zero
    CHECK_THROWS_AS(jnt::jacobi_preconditioner(b), jnt::SingularMatrixError);

    CooMatrix rect(2, 3);
    CHECK_THROWS_AS(jnt::jacobi_preconditioner(rect), jnt::DimensionError);
}

TEST_CASE("cg solves the identity in one iteration", "[sparse]") {
    CooMatrix a(4, 4);
    for (std::size_t i = 0; i < 4; ++i) a.add(i, i, 1.0);
    const auto op = jnt::coo_as_operator(a);
    std::vector<double> b{1.0, -2.0, 3.0, 0.5};
    const auto res = jnt::cg_solve(op, b);
    CHECK(res.converged);
    CHECK(res.iterations == 1);
    REQUIRE(res.residual_history.size() == 2);
    CHECK(res.residual_history.front() == 1.0);
    CHECK(res.residual_history.back() <= 1e-10);
    for (std::size_t i = 0; i < 4; ++i) CHECK(res.x[i] == b[i]);
}

TEST_CASE("cg with jacobi preconditioning solves a diagonal system immediately", "[sparse]") {
    const std::size_t n = 50;
    CooMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) a.add(i, i, 1.0 + static_cast<double>(i));
    const auto op = jnt::coo_as_operator(a);
    jnt::Rng rng(3003);
    auto b = testsupport::random_vector(rng, n);

    const auto plain = jnt::cg_solve(op, b);
    const auto pre = jnt::jacobi_preconditioner(a);
    const auto accel = jnt::cg_solve(op, b, &pre);

    CHECK(plain.converged);
    CHECK(accel.converged);
    CHECK(accel.iterations < plain.iterations);
    CHECK(accel.iterations == 1);
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = b[i] / (1.0 + static_cast<double>(i));
        CHECK(std::fabs(accel.x[i] - xi) <= 1e-12 * (1.0 + std::fabs(xi)));
        CHECK(std::fabs(plain.x[i] - xi) <= 1e-8 * (1.0 + std::fabs(xi)));
    }
}

TEST_CASE("cg solves a random SPD system and reports a true final residual", "[sparse]") {
    jnt::Rng rng(3004);
    const std::size_t n = 30;
    const auto ad = random_spd(rng, n);
    const auto a = dense_to_coo(ad);
    const auto op = jnt::coo_as_operator(a);
    auto b = testsupport::random_vector(rng, n);

    const auto res = jnt::cg_solve(op, b, nullptr, 1e-10, 1000);
    CHECK(res.converged);
    CHECK(res.residual_history.front() == 1.0);
    CHECK(res.residual_history.size() == res.iterations + 1);
    CHECK(res.residual_history.back() <= 1e-10);

    // The recorded final residual is the honestly recomputed one.
    auto x = res.x;
    std::vector<double> ax(n);
    jnt::coo_matvec(a, x, ax);
    double rnorm = 0.0, bnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        rnorm += (b[i] - ax[i]) * (b[i] - ax[i]);
        bnorm += b[i] * b[i];
    }
    const double true_rel = std::sqrt(rnorm / bnorm);
    CHECK(std::fabs(true_rel - res.residual_history.back()) <= 1e-12);

    const auto xref = testsupport::gauss_solve(ad, b);
    for (std::size_t i = 0; i < n; ++i)
        CHECK(std::fabs(res.x[i] - xref[i]) <= 1e-6 * (1.0 + std::fabs(xref[i])));
}

TEST_CASE("cg flags exhaustion honestly", "[sparse]") {
    // 1-D Laplacian: well-posed but needs far more than 3 iterations.
    const std::size_t n = 100;
    CooMatrix a(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        a.add(i, i, 2.0);
        if (i + 1 < n) {
            a.add(i, i + 1, -1.0);
            a.add(i + 1, i, -1.0);
        }
    }
    const auto op = jnt::coo_as_operator(a);
    jnt::Rng rng(3005);
    auto b = testsupport::random_vector(rng, n);
    const auto res = jnt::cg_solve(op, b, nullptr, 1e-10, 3);
    CHECK_FALSE(res.converged);
    CHECK(res.iterations == 3);
    REQUIRE(res.residual_history.size() == 4);

    // Even on exhaustion the last entry is the recomputed residual.
    std::vector<double> ax(n);
    auto x = res.x;
    jnt::coo_matvec(a, x, ax);
    double rnorm = 0.0, bnorm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        rnorm += (b[i] - ax[i]) * (b[i] - ax[i]);
        bnorm += b[i] * b[i];
    }
    CHECK(std::fabs(std::sqrt(rnorm / bnorm) - res.residual_history.back()) <= 1e-12);
}

TEST_CASE("cg raises BreakdownError off the SPD cone", "[sparse]") {
    CooMatrix a(2, 2);
    a.add(0, 0, 1.0);
    a.add(1, 1, -1.0);
    const auto op = jnt::coo_as_operator(a);
    std::vector<double> b{1.0, 2.0};
    CHECK_THROWS_AS(jnt::cg_solve(op, b), jnt::BreakdownError);
}

TEST_CASE("cg handles the trivial right-hand side", "[sparse]") {
    CooMatrix a(3, 3);
    for (std::size_t i = 0; i < 3; ++i) a.add(i, i, 2.0);
    const auto op = jnt::coo_as_operator(a);
    std::vector<double> b(3, 0.0);
    const auto res = jnt::cg_solve(op, b);
    CHECK(res.converged);
    CHECK(res.iterations == 0);
    REQUIRE(res.residual_history.size() == 1);
    CHECK(res.residual_history[0] == 0.0);
    for (double v : res.x) CHECK(v == 0.0);
}

TEST_CASE("cg validates its arguments", "[sparse]") {
    CooMatrix rect(2, 3);
    const auto op_rect = jnt::coo_as_operator(rect);
    std::vector<double> b2(2, 1.0);
    CHECK_THROWS_AS(jnt::cg_solve(op_rect, b2), jnt::DimensionError);

    CooMatrix sq(3, 3);
    for (std::size_t i = 0; i < 3; ++i) sq.add(i, i, 1.0);
    const auto op = jnt::coo_as_operator(sq);
    CHECK_THROWS_AS(jnt::cg_solve(op, b2), jnt::DimensionError);
    std::vector<double> b3(3, 1.0);
    CHECK_THROWS_AS(jnt::cg_solve(op, b3, nullptr, 0.0), jnt::DomainError);
    CHECK_THROWS_AS(jnt::cg_solve(op, b3, nullptr, -1e-3), jnt::DomainError);
}
