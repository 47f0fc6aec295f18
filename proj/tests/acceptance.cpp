// Acceptance gate for the toolkit: eight self-contained criteria, one
// PASS/FAIL line each.  Criterion 8 drives the installed jnt-bench binary
// end to end.
//
//   jnt_acceptance <path-to-jnt-bench> <data-dir>
//
// Exit code 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <sys/wait.h>

#include "jnt/jnt.hpp"

namespace {

using jnt::DenseMatrix;

bool bitwise_equal(const std::vector<double>& a, const std::vector<double>& b) {
    return a.size() == b.size() &&
           (a.empty() || std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0);
}

void fill_pm1(jnt::Rng& rng, double* p, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) p[i] = 2.0 * rng.next_uniform() - 1.0;
}

DenseMatrix random_matrix(jnt::Rng& rng, std::size_t rows, std::size_t cols) {
    DenseMatrix m(rows, cols);
    fill_pm1(rng, m.data(), m.size());
    return m;
}

DenseMatrix naive_matmul(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) {
            long double s = 0.0L;
            for (std::size_t k = 0; k < a.cols(); ++k)
                s += static_cast<long double>(a(i, k)) * b(k, j);
            c(i, j) = static_cast<double>(s);
        }
    return c;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- 1 ----

bool criterion_variant_bit_identity() {
    const auto t0 = std::chrono::steady_clock::now();
    jnt::Rng rng(1297);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto n = static_cast<std::size_t>(rng.next_uniform() * 258.0);
        std::vector<double> x(n), y0(n);
        fill_pm1(rng, x.data(), n);
        fill_pm1(rng, y0.data(), n);
        const double alpha = 2.0 * rng.next_uniform() - 1.0;

        std::vector<double> ref(y0);
        jnt::daxpy(n, alpha, x, ref, jnt::Unroll::one);
        for (const auto u : {jnt::Unroll::four, jnt::Unroll::four_inc, jnt::Unroll::eight}) {
            std::vector<double> y(y0);
            jnt::daxpy(n, alpha, x, y, u);
            if (!bitwise_equal(y, ref)) {
                std::printf("    daxpy variant differs at trial %d, n=%zu\n", trial, n);
                return false;
            }
        }
        const double dref = jnt::ddot(n, x, y0, jnt::Unroll::one);
        for (const auto u : {jnt::Unroll::four, jnt::Unroll::eight}) {
            if (jnt::ddot(n, x, y0, u) != dref) {
                std::printf("    ddot variant differs at trial %d, n=%zu\n", trial, n);
                return false;
            }
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto a = random_matrix(rng, 13, 7);
        const auto b = random_matrix(rng, 7, 11);
        DenseMatrix c1(13, 11), c2(13, 11), c3(13, 11);
        jnt::gemm(a, b, c1, {jnt::LoopOrder::ijk, jnt::Indexing::nested, 1});
        jnt::gemm(a, b, c2, {jnt::LoopOrder::kij, jnt::Indexing::nested, 1});
        jnt::gemm(a, b, c3, {jnt::LoopOrder::ikj, jnt::Indexing::nested, 1});
        if (std::memcmp(c1.data(), c2.data(), c1.size() * sizeof(double)) != 0 ||
            std::memcmp(c1.data(), c3.data(), c1.size() * sizeof(double)) != 0) {
            std::printf("    gemm loop orders differ at trial %d\n", trial);
            return false;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 30.0) {
        std::printf("    took %.1f s, budget is 30 s\n", elapsed);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 2 ----

bool criterion_gemm_oracle() {
    const auto t0 = std::chrono::steady_clock::now();
    jnt::Rng rng(5501);
    const std::size_t shapes[][3] = {{300, 300, 300}, {257, 123, 64}, {31, 299, 17},
                                     {100, 100, 100}};
    const jnt::GemmConfig configs[] = {
        {jnt::LoopOrder::ijk, jnt::Indexing::nested, 1},
        {jnt::LoopOrder::kij, jnt::Indexing::nested, 1},
        {jnt::LoopOrder::ikj, jnt::Indexing::nested, 1},
        {jnt::LoopOrder::ijk, jnt::Indexing::one_dim, 1},
        {jnt::LoopOrder::kij, jnt::Indexing::one_dim, 1},
        {jnt::LoopOrder::ikj, jnt::Indexing::one_dim, 1},
        {jnt::LoopOrder::ijk, jnt::Indexing::one_dim, 4},
        {jnt::LoopOrder::kij, jnt::Indexing::one_dim, 4},
        {jnt::LoopOrder::ikj, jnt::Indexing::one_dim, 4},
    };
    for (const auto& [l, m, n] : shapes) {
        const auto a = random_matrix(rng, l, m);
        const auto b = random_matrix(rng, m, n);
        const auto ref = naive_matmul(a, b);
        const double tol = 1e-13 * static_cast<double>(m);
        const auto check = [&](const DenseMatrix& c, const char* what) {
            for (std::size_t t = 0; t < c.size(); ++t) {
                const double r = ref.data()[t];
                const double scale = std::fabs(r) > 1.0 ? std::fabs(r) : 1.0;
                if (!(std::fabs(c.data()[t] - r) <= tol * scale)) {
                    std::printf("    %s off at %zux%zux%zu element %zu\n", what, l, m, n, t);
                    return false;
                }
            }
            return true;
        };
        for (std::size_t ci = 0; ci < 9; ++ci) {
            DenseMatrix c(l, n);
            jnt::gemm(a, b, c, configs[ci]);
            if (!check(c, "config")) return false;
        }
        for (const std::size_t outer : {40u, 64u}) {
            DenseMatrix c(l, n);
            jnt::gemm_blocked(a, b, c, outer, 8);
            if (!check(c, "blocked")) return false;
        }
    }
    const double elapsed = seconds_since(t0);
    if (elapsed >= 60.0) {
        std::printf("    took %.1f s, budget is 60 s\n", elapsed);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 3 ----

bool criterion_lu() {
    jnt::Rng rng(3301);
    const std::size_t n = 100;
    const auto a = random_matrix(rng, n, n);
    const auto f = jnt::lu_factor(a);

    // || P A - L U ||_F / || A ||_F
    DenseMatrix pa = a;
    for (std::size_t i = 0; i < n; ++i)
        if (f.pivots[i] != i)
            for (std::size_t t = 0; t < n; ++t) std::swap(pa(i, t), pa(f.pivots[i], t));
    long double err2 = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double s = 0.0L;
            const std::size_t kmax = std::min(i, j + 1);
            for (std::size_t k = 0; k < kmax; ++k)
                s += static_cast<long double>(f.lu(i, k)) * f.lu(k, j);
            if (i <= j) s += f.lu(i, j);
            const long double d = s - pa(i, j);
            err2 += d * d;
        }
    const double recon = static_cast<double>(std::sqrt(err2)) / jnt::frobenius_norm(a);
    if (!(recon <= 1e-13)) {
        std::printf("    ||PA-LU||_F/||A||_F = %.3g, want <= 1e-13\n", recon);
        return false;
    }

    std::vector<double> b(n);
    fill_pm1(rng, b.data(), n);
    const auto x = jnt::lu_solve(f, b);
    double rinf = 0.0, ainf = 0.0, xinf = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        long double s = 0.0L;
        double rowsum = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            s += static_cast<long double>(a(i, j)) * x[j];
            rowsum += std::fabs(a(i, j));
        }
        rinf = std::max(rinf, std::fabs(static_cast<double>(s - b[i])));
        ainf = std::max(ainf, rowsum);
        xinf = std::max(xinf, std::fabs(x[i]));
    }
    const double resid = rinf / (ainf * xinf);
    if (!(resid <= 1e-12)) {
        std::printf("    ||Ax-b||_inf/(||A||_inf ||x||_inf) = %.3g, want <= 1e-12\n", resid);
        return false;
    }

    for (const std::size_t rank_k : {1u, 4u, 16u, 64u}) {
        if (jnt::lu_factor(a, rank_k).pivots != f.pivots) {
            std::printf("    pivot sequence changed at rank_k=%zu\n", rank_k);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- 4 ----

bool criterion_qr() {
    jnt::Rng rng(4407);
    const std::size_t m = 50, n = 10;
    const auto a = random_matrix(rng, m, n);
    const auto f = jnt::qr_factor(a);
    const auto q = jnt::qr_q(f);
    const auto r = jnt::qr_r(f);

    long double orth2 = 0.0L;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double s = (i == j) ? -1.0L : 0.0L;
            for (std::size_t k = 0; k < m; ++k)
                s += static_cast<long double>(q(k, i)) * q(k, j);
            orth2 += s * s;
        }
    const double orth = static_cast<double>(std::sqrt(orth2));
    if (!(orth <= 1e-13)) {
        std::printf("    ||QtQ-I||_F = %.3g, want <= 1e-13\n", orth);
        return false;
    }

    const auto qr = naive_matmul(q, r);
    long double diff2 = 0.0L;
    for (std::size_t t = 0; t < a.size(); ++t) {
        const long double d = qr.data()[t] - a.data()[t];
        diff2 += d * d;
    }
    const double recon = static_cast<double>(std::sqrt(diff2)) / jnt::frobenius_norm(a);
    if (!(recon <= 1e-13)) {
        std::printf("    ||A-QR||_F/||A||_F = %.3g, want <= 1e-13\n", recon);
        return false;
    }

    std::vector<double> b(m);
    fill_pm1(rng, b.data(), m);
    const auto x = jnt::qr_solve_lstsq(f, b);
    DenseMatrix ata(n, n);
    std::vector<double> atb(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            long double s = 0.0L;
            for (std::size_t k = 0; k < m; ++k)
                s += static_cast<long double>(a(k, i)) * a(k, j);
            ata(i, j) = static_cast<double>(s);
        }
        long double s = 0.0L;
        for (std::size_t k = 0; k < m; ++k) s += static_cast<long double>(a(k, i)) * b[k];
        atb[i] = static_cast<double>(s);
    }
    const auto xref = jnt::lu_solve(jnt::lu_factor(ata), atb);
    for (std::size_t i = 0; i < n; ++i) {
        if (!(std::fabs(x[i] - xref[i]) <= 1e-8 * (1.0 + std::fabs(xref[i])))) {
            std::printf("    lstsq[%zu] = %.17g vs normal equations %.17g\n", i, x[i], xref[i]);
            return false;
        }
    }
    return true;
}

// ---------------------------------------------------------------- 5 ----

bool criterion_sparse() {
    jnt::Rng rng(5503);
    for (int inst = 0; inst < 100; ++inst) {
        const auto rows = 1 + static_cast<std::size_t>(rng.next_uniform() * 40.0);
        const auto cols = 1 + static_cast<std::size_t>(rng.next_uniform() * 40.0);
        const auto nnz = static_cast<std::size_t>(rng.next_uniform() * 200.0);
        jnt::CooMatrix a(rows, cols);
        for (std::size_t t = 0; t < nnz; ++t)
            a.add(static_cast<std::size_t>(rng.next_uniform() * static_cast<double>(rows)),
                  static_cast<std::size_t>(rng.next_uniform() * static_cast<double>(cols)),
                  2.0 * rng.next_uniform() - 1.0);
        if (nnz > 1) { // force at least one duplicate coordinate
            a.add(a.row_index[0], a.col_index[0], 0.5);
        }
        std::vector<double> x(cols), y(rows), yref(rows);
        fill_pm1(rng, x.data(), cols);
        jnt::coo_matvec(a, x, y);
        jnt::dgemv(1.0, jnt::densify(a), x, 0.0, yref);
        for (std::size_t i = 0; i < rows; ++i) {
            const double scale = std::fabs(yref[i]) > 1.0 ? std::fabs(yref[i]) : 1.0;
            if (!(std::fabs(y[i] - yref[i]) <= 1e-13 * scale)) {
                std::printf("    coo_matvec differs at instance %d row %zu\n", inst, i);
                return false;
            }
        }
    }

    const std::size_t n = 100;
    const auto m = random_matrix(rng, n, n);
    jnt::CooMatrix spd(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            long double s = (i == j) ? 1.0L : 0.0L;
            for (std::size_t k = 0; k < n; ++k)
                s += static_cast<long double>(m(k, i)) * m(k, j);
            spd.add(i, j, static_cast<double>(s));
        }
    std::vector<double> b(n);
    fill_pm1(rng, b.data(), n);
    const auto op = jnt::coo_as_operator(spd);
    const auto res = jnt::cg_solve(op, b, nullptr, 1e-8, 300);
    if (!res.converged || !(res.residual_history.back() <= 1e-8)) {
        std::printf("    cg on SPD n=100: converged=%d iters=%zu final=%.3g\n", res.converged,
                    res.iterations, res.residual_history.back());
        return false;
    }

    jnt::CooMatrix diag(32, 32);
    for (std::size_t i = 0; i < 32; ++i) diag.add(i, i, 1.0 + static_cast<double>(i));
    std::vector<double> db(32);
    fill_pm1(rng, db.data(), 32);
    const auto dop = jnt::coo_as_operator(diag);
    const auto pre = jnt::jacobi_preconditioner(diag);
    const auto dres = jnt::cg_solve(dop, db, &pre, 1e-10, 100);
    if (!dres.converged || dres.iterations != 1) {
        std::printf("    jacobi-preconditioned diagonal: converged=%d iters=%zu\n",
                    dres.converged, dres.iterations);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 6 ----

bool criterion_special() {
    const double j01 = jnt::bessel_j0(1.0);
    if (!(std::fabs(j01 - 0.7651976865579666) <= 1e-10)) {
        std::printf("    J0(1) = %.17g\n", j01);
        return false;
    }
    for (int i = 0; i < 200; ++i) {
        const double lx = -3.0 + (std::log10(50.0) + 3.0) * i / 199.0;
        const double x = std::pow(10.0, lx);
        const double wjy = jnt::bessel_j1(x) * jnt::bessel_y0(x) -
                           jnt::bessel_j0(x) * jnt::bessel_y1(x);
        if (!(std::fabs(wjy - 2.0 / (M_PI * x)) * (M_PI * x) / 2.0 <= 1e-9)) {
            std::printf("    J/Y wronskian off at x=%.6g\n", x);
            return false;
        }
        const double wik = jnt::bessel_i0(x) * jnt::bessel_k1(x) +
                           jnt::bessel_i1(x) * jnt::bessel_k0(x);
        if (!(std::fabs(wik - 1.0 / x) * x <= 1e-9)) {
            std::printf("    I/K wronskian off at x=%.6g\n", x);
            return false;
        }
    }

    const auto root = jnt::find_root([](double x) { return x * x - 2.0; }, 1.0, 2.0, 1e-12, 100);
    if (!root.converged || root.iterations > 100 ||
        !(std::fabs(root.root - std::sqrt(2.0)) <= 1e-12)) {
        std::printf("    sqrt2 root = %.17g after %zu iterations\n", root.root, root.iterations);
        return false;
    }

    jnt::Rng r1(555), r2(555);
    for (int i = 0; i < 10000; ++i)
        if (r1.next_uniform() != r2.next_uniform()) {
            std::printf("    same-seed streams diverged at draw %d\n", i);
            return false;
        }
    jnt::Rng rm(12345);
    double mean = 0.0;
    for (int i = 0; i < 1000000; ++i) mean += rm.next_uniform();
    mean /= 1e6;
    if (!(mean >= 0.497 && mean <= 0.503)) {
        std::printf("    uniform mean over 1e6 draws = %.6f\n", mean);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 7 ----

bool criterion_matio(const std::string& data_dir) {
    jnt::Rng rng(7703);
    jnt::CooMatrix a(61, 47);
    for (int t = 0; t < 300; ++t)
        a.add(static_cast<std::size_t>(rng.next_uniform() * 61.0),
              static_cast<std::size_t>(rng.next_uniform() * 47.0),
              std::ldexp(2.0 * rng.next_uniform() - 1.0,
                         static_cast<int>(rng.next_uniform() * 120.0) - 60));
    a.add(0, 0, a.values[0]); // guaranteed duplicate coordinate
    std::ostringstream out;
    jnt::write_matrix_market(a, out);
    std::istringstream in(out.str());
    const auto data = jnt::read_matrix_market(in);
    const auto* b = std::get_if<jnt::CooMatrix>(&data);
    if (b == nullptr || b->nnz() != a.nnz() || b->row_index != a.row_index ||
        b->col_index != a.col_index ||
        std::memcmp(b->values.data(), a.values.data(), a.nnz() * sizeof(double)) != 0) {
        std::printf("    coordinate round-trip not bitwise\n");
        return false;
    }

    if (jnt::parse_float("2.13e+6") != 2130000.0) {
        std::printf("    parse_float(\"2.13e+6\") = %.17g\n", jnt::parse_float("2.13e+6"));
        return false;
    }

    const auto fixture = jnt::read_matrix_market_file(data_dir + "/west0156.mtx");
    const auto* w = std::get_if<jnt::CooMatrix>(&fixture);
    if (w == nullptr || w->rows != 156 || w->cols != 156 || w->nnz() != 371) {
        std::printf("    west0156 fixture: %zux%zu nnz=%zu\n", w ? w->rows : 0,
                    w ? w->cols : 0, w ? w->nnz() : 0);
        return false;
    }
    return true;
}

// ---------------------------------------------------------------- 8 ----

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> out;
    std::string cur;
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                cur += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int run_command(const std::string& cmd) {
    const int rc = std::system(cmd.c_str());
    if (rc == -1) return -1;
    if (WIFEXITED(rc)) return WEXITSTATUS(rc);
    return -1;
}

bool criterion_harness(const std::string& bench, const std::string& data_dir) {
    namespace fs = std::filesystem;
    const std::string csv_path = (fs::temp_directory_path() / "jnt_acceptance_bench.csv").string();
    const std::string txt_path = (fs::temp_directory_path() / "jnt_acceptance_bench.txt").string();

    // Full run, CSV, with the small sparse fixtures.  Budget: 5 minutes.
    const std::string cmd_csv = "\"" + bench + "\" all --min-time 0.1 --seed 12345" +
                                " --matrix \"" + data_dir + "/west0156.mtx\"" +
                                " --matrix \"" + data_dir + "/diag500.mtx\"" +
                                " --format csv --out \"" + csv_path + "\"";
    const auto t0 = std::chrono::steady_clock::now();
    const int rc = run_command(cmd_csv);
    const double wall = seconds_since(t0);
    std::printf("    jnt-bench all (csv): exit %d in %.1f s\n", rc, wall);
    if (rc != 0 || wall >= 300.0) return false;

    std::ifstream csv(csv_path);
    if (!csv) {
        std::printf("    cannot read %s\n", csv_path.c_str());
        return false;
    }
    std::string line;
    if (!std::getline(csv, line)) return false;
    const std::string want_header =
        "scenario,kernel,variant,dims,flop_count,repetitions,elapsed_seconds,mflops,checksum";
    if (line != want_header) {
        std::printf("    header mismatch: %s\n", line.c_str());
        return false;
    }
    std::size_t rows = 0, level1 = 0, mm = 0, blocked = 0, sparse = 0;
    double blocked_peak = 0.0, blocked_1000 = 0.0;
    while (std::getline(csv, line)) {
        if (line.empty()) continue;
        const auto f = split_csv_line(line);
        if (f.size() != 9) {
            std::printf("    row with %zu fields: %s\n", f.size(), line.c_str());
            return false;
        }
        ++rows;
        const std::string& scen = f[0];
        if (scen == "level1") ++level1;
        else if (scen == "mm") ++mm;
        else if (scen == "blocked") ++blocked;
        else if (scen == "sparse") ++sparse;
        else {
            std::printf("    unknown scenario \"%s\"\n", scen.c_str());
            return false;
        }
        const double flops = std::strtod(f[4].c_str(), nullptr);
        const double reps = std::strtod(f[5].c_str(), nullptr);
        const double elapsed = std::strtod(f[6].c_str(), nullptr);
        const double mflops = std::strtod(f[7].c_str(), nullptr);
        char* endp = nullptr;
        (void)std::strtod(f[8].c_str(), &endp); // checksum must parse as a number
        if (endp == f[8].c_str() || *endp != '\0') {
            std::printf("    unparseable checksum \"%s\"\n", f[8].c_str());
            return false;
        }
        if (!(reps >= 1.0) || !(elapsed > 0.0)) {
            std::printf("    bad repetitions/elapsed in: %s\n", line.c_str());
            return false;
        }
        // The mflops column must be the sibling columns pushed through the
        // formula; 0.051 absorbs its one-decimal rounding.
        const double recomputed = reps * flops / (elapsed * 1e6);
        if (!(std::fabs(mflops - recomputed) <= 0.051)) {
            std::printf("    mflops %.3f vs recomputed %.3f in: %s\n", mflops, recomputed,
                        line.c_str());
            return false;
        }
        if (f[1] == "daxpy" && flops != 400.0) {
            std::printf("    daxpy flop_count %s, want 400\n", f[4].c_str());
            return false;
        }
        if (f[1] == "gemm" && f[3] == "100x16x100" && flops != 320000.0) {
            std::printf("    gemm 100x16x100 flop_count %s, want 320000\n", f[4].c_str());
            return false;
        }
        if (f[2] == "blocked") {
            blocked_peak = std::max(blocked_peak, mflops);
            if (f[3] == "1000x1000x1000") blocked_1000 = mflops;
        }
    }
    // Every emitted case passed its verification (the harness refuses to
    // time otherwise), so the row counts double as the verified counts.
    if (level1 != 7 || mm != 18 || blocked != 22 || sparse != 2) {
        std::printf("    case counts level1=%zu mm=%zu blocked=%zu sparse=%zu\n", level1, mm,
                    blocked, sparse);
        return false;
    }
    std::printf("    %zu cases, all verified before timing\n", rows);
    if (blocked_1000 > 0.0 && blocked_peak > 0.0)
        std::printf("    note: blocked n=1000 at %.1f%% of peak %.1f mflops (informational)\n",
                    100.0 * blocked_1000 / blocked_peak, blocked_peak);

    // Text run against the built-in sparse set for the exact table labels.
    const std::string cmd_txt = "\"" + bench + "\" all --min-time 0.02 --sizes 40,100" +
                                " --format text --out \"" + txt_path + "\"";
    if (run_command(cmd_txt) != 0) {
        std::printf("    text-mode run failed\n");
        return false;
    }
    std::ifstream txtf(txt_path);
    std::stringstream buf;
    buf << txtf.rdbuf();
    const std::string text = buf.str();
    const char* labels[] = {
        "daxpy:1", "daxpy:4", "daxpy:4-inc", "daxpy:8", "ddot:1", "ddot:4", "ddot:8",
        "loop order", "(i,j,k)", "(k,i,j)", "(i,k,j)",
        "plain:N=100", "plain:N=16", "1d:N=100", "1d:N=16",
        "1d+unroll4:N=100", "1d+unroll4:N=16",
        "unblocked_mflops", "blocked_mflops",
        "WEST0156", "SHERMAN3", "MCFE", "MEMPLUS",
    };
    for (const char* label : labels) {
        if (text.find(label) == std::string::npos) {
            std::printf("    text output is missing label \"%s\"\n", label);
            return false;
        }
    }
    // The Table-4-shaped block lists WEST0156 with its order and entries.
    std::istringstream lines(text);
    bool west_row_ok = false;
    while (std::getline(lines, line)) {
        if (line.rfind("WEST0156", 0) == 0 && line.find(" 156") != std::string::npos &&
            line.find(" 371") != std::string::npos) {
            west_row_ok = true;
            break;
        }
    }
    if (!west_row_ok) {
        std::printf("    WEST0156 row does not show order 156 and entries 371\n");
        return false;
    }

    std::error_code ec;
    fs::remove(csv_path, ec);
    fs::remove(txt_path, ec);
    return true;
}

} // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::fprintf(stderr, "usage: %s <path-to-jnt-bench> <data-dir>\n", argv[0]);
        return 2;
    }
    const std::string bench = argv[1];
    const std::string data_dir = argv[2];

    struct Criterion {
        const char* name;
        bool passed;
    };
    std::vector<Criterion> results;
    results.push_back({"variant bit-identity (daxpy/ddot/gemm loop orders)",
                       criterion_variant_bit_identity()});
    results.push_back({"gemm oracle agreement (9 configs + blocked)", criterion_gemm_oracle()});
    results.push_back({"blocked LU: reconstruction, residual, pivot invariance",
                       criterion_lu()});
    results.push_back({"householder QR: orthogonality, reconstruction, least squares",
                       criterion_qr()});
    results.push_back({"sparse matvec oracle + conjugate gradient", criterion_sparse()});
    results.push_back({"special functions, root finding, rng", criterion_special()});
    results.push_back({"matrix market round-trip and fixtures", criterion_matio(data_dir)});
    results.push_back({"benchmark harness end to end", criterion_harness(bench, data_dir)});

    int failures = 0;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const bool ok = results[i].passed;
        std::printf("criterion %zu: %s  %s\n", i + 1, ok ? "PASS" : "FAIL", results[i].name);
        if (!ok) ++failures;
    }
    std::printf("acceptance: %zu/%zu criteria passed\n", results.size() - failures,
                results.size());
    return failures == 0 ? 0 : 1;
}
