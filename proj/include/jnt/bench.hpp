#pragma once

#include <algorithm>
#include <bit>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <numeric>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "blas1.hpp"
#include "blas2.hpp"
#include "coo_matrix.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"
#include "gemm.hpp"
#include "matrix_market.hpp"
#include "rng.hpp"
#include "table.hpp"
#include "vector_view.hpp"

// Benchmark harness.  Protocol for every timed case:
//   1. verify: run the kernel once on fresh buffers and compare against
//      its reference implementation; any disagreement aborts the run
//      with VerificationError (nothing is timed).  The checksum is the
//      sum of this verification run's output elements, so it is stable
//      across runs with the same options.
//   2. time: repeat the kernel, doubling the repetition count until the
//      batch takes at least min_time; working buffers are reused without
//      resetting between repetitions.
//   3. report mflops = repetitions * flops / (elapsed * 1e6).
// Input data always comes from the seeded Rng so results and checksums
// are reproducible.

namespace jnt::bench {

struct BenchOptions {
    double min_time = 1.0;
    std::vector<std::size_t> sizes = {40, 100, 200, 300, 400, 500, 600, 700, 800, 900, 1000};
    std::vector<std::string> matrix_paths;
    std::uint64_t seed = 12345;
};

struct CaseResult {
    std::string scenario;
    std::string kernel;
    std::string variant;
    std::string dims;
    double flop_count = 0;
    std::uint64_t repetitions = 0;
    double elapsed_seconds = 0;
    double mflops = 0;
    double checksum = 0;
};

/// One kernel under test.  `verify_and_checksum` applies the kernel once
/// to fresh buffers, throws VerificationError on mismatch with the
/// reference, and returns the output sum.  `run` is one timed
/// application on the (unreset) working buffers.
struct TimedKernel {
    std::string kernel;
    std::string variant;
    std::string dims;
    double flop_count = 0;
    std::function<double()> verify_and_checksum;
    std::function<void()> run;
};

struct ScenarioReport {
    std::string name;
    std::string title;
    std::vector<Column> columns;
    std::vector<Row> rows;
    std::vector<CaseResult> cases;
};

namespace detail {

// Defeats dead-code elimination of otherwise-unobserved kernel results.
inline volatile double consume_slot = 0.0;

inline void consume(double v) noexcept { consume_slot = v; }

inline double sum_elements(const double* p, std::size_t n) {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) s += p[i];
    return s;
}

inline void check_bitwise(const char* label, const double* got, const double* ref,
                          std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        if (std::bit_cast<std::uint64_t>(got[i]) != std::bit_cast<std::uint64_t>(ref[i]))
            throw VerificationError(std::string(label) + ": element " + std::to_string(i) +
                                    " = " + std::to_string(got[i]) + ", reference " +
                                    std::to_string(ref[i]) + " (not bit-identical)");
}

inline void check_close(const char* label, const double* got, const double* ref, std::size_t n,
                        double rel_tol) {
    for (std::size_t i = 0; i < n; ++i) {
        const double scale = std::fabs(ref[i]) > 1.0 ? std::fabs(ref[i]) : 1.0;
        if (!(std::fabs(got[i] - ref[i]) <= rel_tol * scale))
            throw VerificationError(std::string(label) + ": element " + std::to_string(i) +
                                    " = " + std::to_string(got[i]) + ", reference " +
                                    std::to_string(ref[i]) + ", tolerance " +
                                    std::to_string(rel_tol * scale));
    }
}

} // namespace detail

/// Verify, then time with doubling repetitions until the batch reaches
/// min_time (which must be positive).
inline CaseResult measure(const std::string& scenario, const TimedKernel& k, double min_time) {
    if (!(min_time > 0.0)) throw DomainError("measure: min_time must be positive");
    CaseResult r;
    r.scenario = scenario;
    r.kernel = k.kernel;
    r.variant = k.variant;
    r.dims = k.dims;
    r.flop_count = k.flop_count;
    r.checksum = k.verify_and_checksum();

    using clock = std::chrono::steady_clock;
    std::uint64_t reps = 1;
    for (;;) {
        const auto t0 = clock::now();
        for (std::uint64_t i = 0; i < reps; ++i) k.run();
        const std::chrono::duration<double> dt = clock::now() - t0;
        r.elapsed_seconds = dt.count();
        if (r.elapsed_seconds >= min_time || reps >= (std::uint64_t{1} << 32)) break;
        reps *= 2;
    }
    r.repetitions = reps;
    r.mflops = static_cast<double>(reps) * r.flop_count / (r.elapsed_seconds * 1e6);
    return r;
}

inline std::string environment_label() {
#if defined(__clang__)
    std::string compiler = "clang " + std::to_string(__clang_major__) + "." +
                           std::to_string(__clang_minor__) + "." +
                           std::to_string(__clang_patchlevel__);
#elif defined(__GNUC__)
    std::string compiler = "gcc " + std::to_string(__GNUC__) + "." +
                           std::to_string(__GNUC_MINOR__) + "." +
                           std::to_string(__GNUC_PATCHLEVEL__);
#else
    std::string compiler = "unknown compiler";
#endif
#if defined(__linux__)
    const char* os = "linux";
#elif defined(__APPLE__)
    const char* os = "darwin";
#else
    const char* os = "unknown os";
#endif
#if defined(__x86_64__)
    const char* arch = "x86-64";
#elif defined(__aarch64__)
    const char* arch = "arm64";
#else
    const char* arch = "unknown arch";
#endif
    return compiler + ", " + os + ", " + arch;
}

/// Table-1 protocol: daxpy unrolled 1/4/4-inc/8 and ddot unrolled 1/4/8
/// on vectors of length 200; one table row (this environment), one
/// mflops column per variant.  Variants must match the rolled loop
/// bitwise before they are timed.
inline ScenarioReport run_level1(const BenchOptions& opt) {
    constexpr std::size_t n = 200;
    Rng rng(opt.seed);
    std::vector<double> x(n), y0(n);
    rng.fill_uniform(x);
    rng.fill_uniform(y0);
    const double alpha = 2.0 * rng.next_uniform() - 1.0;

    std::vector<double> daxpy_ref(y0);
    daxpy(n, alpha, x, daxpy_ref, Unroll::one);
    const double ddot_ref = ddot(n, x, y0, Unroll::one);

    ScenarioReport rep;
    rep.name = "level1";
    rep.title = "level1: unrolled daxpy/ddot, n=200 (mflops)";
    rep.columns.push_back({"environment", 0, -1, true});
    rep.rows.emplace_back();
    rep.rows[0].emplace_back(environment_label());

    const std::pair<Unroll, const char*> daxpy_variants[] = {
        {Unroll::one, "unroll-1"},
        {Unroll::four, "unroll-4"},
        {Unroll::four_inc, "unroll-4-inc"},
        {Unroll::eight, "unroll-8"},
    };
    const char* daxpy_headers[] = {"daxpy:1", "daxpy:4", "daxpy:4-inc", "daxpy:8"};
    std::vector<double> yw(y0);
    for (std::size_t v = 0; v < 4; ++v) {
        const Unroll u = daxpy_variants[v].first;
        TimedKernel k;
        k.kernel = "daxpy";
        k.variant = daxpy_variants[v].second;
        k.dims = "n=200";
        k.flop_count = 2.0 * n;
        k.verify_and_checksum = [&, u]() {
            std::vector<double> yv(y0);
            daxpy(n, alpha, x, yv, u);
            detail::check_bitwise(("daxpy " + std::string(daxpy_variants[v].second)).c_str(),
                                  yv.data(), daxpy_ref.data(), n);
            return detail::sum_elements(yv.data(), n);
        };
        k.run = [&, u]() { daxpy(n, alpha, x, yw, u); };
        rep.cases.push_back(measure(rep.name, k, opt.min_time));
        detail::consume(yw[0] + yw[n - 1]);
        rep.columns.push_back({daxpy_headers[v], 8, 1, false});
        rep.rows[0].emplace_back(rep.cases.back().mflops);
    }

    const std::pair<Unroll, const char*> ddot_variants[] = {
        {Unroll::one, "unroll-1"},
        {Unroll::four, "unroll-4"},
        {Unroll::eight, "unroll-8"},
    };
    const char* ddot_headers[] = {"ddot:1", "ddot:4", "ddot:8"};
    double sink = 0.0;
    for (std::size_t v = 0; v < 3; ++v) {
        const Unroll u = ddot_variants[v].first;
        TimedKernel k;
        k.kernel = "ddot";
        k.variant = ddot_variants[v].second;
        k.dims = "n=200";
        k.flop_count = 2.0 * n;
        k.verify_and_checksum = [&, u]() {
            const double got = ddot(n, x, y0, u);
            detail::check_bitwise(("ddot " + std::string(ddot_variants[v].second)).c_str(), &got,
                                  &ddot_ref, 1);
            return got;
        };
        k.run = [&, u]() { sink += ddot(n, x, y0, u); };
        rep.cases.push_back(measure(rep.name, k, opt.min_time));
        detail::consume(sink);
        rep.columns.push_back({ddot_headers[v], 8, 1, false});
        rep.rows[0].emplace_back(rep.cases.back().mflops);
    }
    return rep;
}

/// Table-3 protocol: gemm with every loop order crossed with indexing
/// style {nested ("plain"), flat ("1d"), flat + unroll 4}, at
/// L = M = 100 and inner dimensions N = 100 and N = 16.  Every variant
/// is verified against the (i,j,k)/plain result first.
inline ScenarioReport run_mm(const BenchOptions& opt) {
    constexpr std::size_t kL = 100, kM = 100;
    const std::size_t inner[] = {100, 16};

    ScenarioReport rep;
    rep.name = "mm";
    rep.title = "mm: gemm loop order x indexing, L=M=100 (mflops)";
    rep.columns.push_back({"loop order", 0, -1, true});
    const std::pair<LoopOrder, const char*> orders[] = {
        {LoopOrder::ijk, "(i,j,k)"},
        {LoopOrder::kij, "(k,i,j)"},
        {LoopOrder::ikj, "(i,k,j)"},
    };
    struct Style {
        const char* label;
        Indexing indexing;
        unsigned unroll;
    };
    const Style styles[] = {
        {"plain", Indexing::nested, 1},
        {"1d", Indexing::one_dim, 1},
        {"1d+unroll4", Indexing::one_dim, 4},
    };
    for (const Style& st : styles)
        for (const std::size_t n : inner)
            rep.columns.push_back(
                {std::string(st.label) + ":N=" + std::to_string(n), 8, 1, false});
    for (const auto& [order, olabel] : orders) {
        Row row;
        row.emplace_back(std::string(olabel));
        row.resize(1 + 3 * 2);
        rep.rows.push_back(std::move(row));
    }

    std::size_t col = 1;
    for (std::size_t si = 0; si < 3; ++si) {
        for (const std::size_t n : inner) {
            Rng rng(opt.seed + n); // same inputs for every variant at this N
            DenseMatrix a(kL, n), b(n, kM);
            rng.fill_uniform(VectorView(std::span<double>(a.data(), a.size())));
            rng.fill_uniform(VectorView(std::span<double>(b.data(), b.size())));
            DenseMatrix cref(kL, kM);
            gemm(a, b, cref, GemmConfig{LoopOrder::ijk, Indexing::nested, 1});
            const double tol = 1e-13 * static_cast<double>(n);

            for (std::size_t oi = 0; oi < 3; ++oi) {
                const GemmConfig cfg{orders[oi].first, styles[si].indexing, styles[si].unroll};
                const std::string variant =
                    std::string(orders[oi].second) +
                    (si == 0 ? "" : si == 1 ? "+1d" : "+1d+unroll4");
                TimedKernel k;
                k.kernel = "gemm";
                k.variant = variant;
                k.dims = std::to_string(kL) + "x" + std::to_string(n) + "x" + std::to_string(kM);
                k.flop_count = 2.0 * static_cast<double>(kL) * n * kM;
                k.verify_and_checksum = [&]() {
                    DenseMatrix cv(kL, kM);
                    gemm(a, b, cv, cfg);
                    detail::check_close(("gemm " + variant).c_str(), cv.data(), cref.data(),
                                        cv.size(), tol);
                    return detail::sum_elements(cv.data(), cv.size());
                };
                DenseMatrix cw(kL, kM);
                k.run = [&]() { gemm(a, b, cw, cfg); };
                rep.cases.push_back(measure(rep.name, k, opt.min_time));
                detail::consume(cw(0, 0));
                rep.rows[oi][col] = rep.cases.back().mflops;
            }
            ++col;
        }
    }
    return rep;
}

/// Blocked-vs-unblocked gemm over square sizes (Table-2 protocol).  The
/// block pair comes from optimal_block_size(), i.e. JNT_BLOCK can
/// override it from the environment.
inline ScenarioReport run_blocked(const BenchOptions& opt) {
    const BlockPair blocks = optimal_block_size();
    ScenarioReport rep;
    rep.name = "blocked";
    rep.title = "blocked: gemm with " + std::to_string(blocks.outer) + "x" +
                std::to_string(blocks.outer) + " blocks, " + std::to_string(blocks.inner) + "x" +
                std::to_string(blocks.inner) + " tiles (mflops)";
    rep.columns = {{"n", 4, 0, false},
                   {"unblocked_mflops", 16, 1, false},
                   {"blocked_mflops", 14, 1, false}};

    Rng rng(opt.seed);
    for (const std::size_t n : opt.sizes) {
        DenseMatrix a(n, n), b(n, n);
        rng.fill_uniform(VectorView(std::span<double>(a.data(), a.size())));
        rng.fill_uniform(VectorView(std::span<double>(b.data(), b.size())));
        DenseMatrix cref(n, n);
        gemm(a, b, cref);
        const double tol = 1e-13 * static_cast<double>(n);
        const std::string dims =
            std::to_string(n) + "x" + std::to_string(n) + "x" + std::to_string(n);
        const double flops = 2.0 * static_cast<double>(n) * n * n;

        TimedKernel unblocked;
        unblocked.kernel = "gemm";
        unblocked.variant = "unblocked";
        unblocked.dims = dims;
        unblocked.flop_count = flops;
        unblocked.verify_and_checksum = [&]() {
            DenseMatrix cv(n, n);
            gemm(a, b, cv);
            detail::check_close("gemm unblocked", cv.data(), cref.data(), cv.size(), tol);
            return detail::sum_elements(cv.data(), cv.size());
        };
        DenseMatrix cw1(n, n);
        unblocked.run = [&]() { gemm(a, b, cw1); };
        rep.cases.push_back(measure(rep.name, unblocked, opt.min_time));
        detail::consume(cw1(0, 0));
        const double mf_unblocked = rep.cases.back().mflops;

        TimedKernel blocked;
        blocked.kernel = "gemm";
        blocked.variant = "blocked";
        blocked.dims = dims;
        blocked.flop_count = flops;
        blocked.verify_and_checksum = [&]() {
            DenseMatrix cv(n, n);
            gemm_blocked(a, b, cv, blocks.outer, blocks.inner);
            detail::check_close("gemm blocked", cv.data(), cref.data(), cv.size(), tol);
            return detail::sum_elements(cv.data(), cv.size());
        };
        DenseMatrix cw2(n, n);
        blocked.run = [&]() { gemm_blocked(a, b, cw2, blocks.outer, blocks.inner); };
        rep.cases.push_back(measure(rep.name, blocked, opt.min_time));
        detail::consume(cw2(0, 0));

        rep.rows.push_back(
            {static_cast<double>(n), mf_unblocked, rep.cases.back().mflops});
    }
    return rep;
}

namespace detail {

struct SparseInput {
    std::string name;
    CooMatrix matrix;
};

inline CooMatrix synthetic_coo(Rng& gen, std::size_t order, std::size_t entries) {
    CooMatrix a(order, order);
    for (std::size_t i = 0; i < order; ++i) a.add(i, i, 2.0 + gen.next_uniform());
    for (std::size_t t = order; t < entries; ++t) {
        const auto i = static_cast<std::size_t>(gen.next_uniform() * static_cast<double>(order));
        const auto j = static_cast<std::size_t>(gen.next_uniform() * static_cast<double>(order));
        a.add(i, j, 2.0 * gen.next_uniform() - 1.0);
    }
    return a;
}

inline std::vector<SparseInput> sparse_inputs(const BenchOptions& opt) {
    std::vector<SparseInput> out;
    if (!opt.matrix_paths.empty()) {
        for (const std::string& path : opt.matrix_paths) {
            std::string name = std::filesystem::path(path).stem().string();
            for (char& c : name) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
            MatrixMarketData data = read_matrix_market_file(path);
            if (CooMatrix* coo = std::get_if<CooMatrix>(&data)) {
                out.push_back({std::move(name), std::move(*coo)});
            } else {
                // array-format file: keep the nonzero structure
                const DenseMatrix& d = std::get<DenseMatrix>(data);
                CooMatrix a(d.rows(), d.cols());
                for (std::size_t i = 0; i < d.rows(); ++i)
                    for (std::size_t j = 0; j < d.cols(); ++j)
                        if (d(i, j) != 0.0) a.add(i, j, d(i, j));
                out.push_back({std::move(name), std::move(a)});
            }
        }
        return out;
    }
    struct Shape {
        const char* name;
        std::size_t order, entries;
    };
    // Same order/entry shapes as the classic Harwell-Boeing test set the
    // sparse table mirrors; the entries themselves are synthetic.
    const Shape shapes[] = {
        {"WEST0156", 156, 371},
        {"SHERMAN3", 5505, 20033},
        {"MCFE", 765, 24382},
        {"MEMPLUS", 17758, 126150},
    };
    for (std::size_t s = 0; s < 4; ++s) {
        Rng gen(opt.seed + 7919 * (s + 1));
        out.push_back({shapes[s].name, synthetic_coo(gen, shapes[s].order, shapes[s].entries)});
    }
    return out;
}

// Reference matvec with an entry order independent of storage order:
// accumulate sorted by (row, col, position).
inline std::vector<double> permuted_matvec(const CooMatrix& a, const std::vector<double>& x) {
    std::vector<std::size_t> perm(a.nnz());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    std::sort(perm.begin(), perm.end(), [&a](std::size_t s, std::size_t t) {
        if (a.row_index[s] != a.row_index[t]) return a.row_index[s] < a.row_index[t];
        if (a.col_index[s] != a.col_index[t]) return a.col_index[s] < a.col_index[t];
        return s < t;
    });
    std::vector<double> y(a.rows, 0.0);
    for (const std::size_t t : perm) y[a.row_index[t]] += a.values[t] * x[a.col_index[t]];
    return y;
}

} // namespace detail

/// Table-4 protocol: sparse matvec mflops per matrix (name, order,
/// entries), 2 * nnz flops per product.  Without --matrix paths a
/// built-in synthetic set with the classic orders/entry counts is used.
/// Verification is against densify + dgemv for orders up to 1000 and
/// against a storage-order-independent accumulation beyond that.
inline ScenarioReport run_sparse(const BenchOptions& opt) {
    ScenarioReport rep;
    rep.name = "sparse";
    rep.title = "sparse: coo_matvec (mflops)";
    rep.columns = {{"matrix", 0, -1, true},
                   {"order", 6, 0, false},
                   {"entries", 8, 0, false},
                   {"mflops", 8, 1, false}};

    std::vector<detail::SparseInput> inputs = detail::sparse_inputs(opt);
    Rng xrng(opt.seed + 1);
    for (const detail::SparseInput& in : inputs) {
        const CooMatrix& a = in.matrix;
        std::vector<double> x(a.cols);
        xrng.fill_uniform(x);
        std::vector<double> yref;
        if (a.rows <= 1000 && a.cols <= 1000) {
            const DenseMatrix d = densify(a);
            yref.assign(a.rows, 0.0);
            dgemv(1.0, d, x, 0.0, yref);
        } else {
            yref = detail::permuted_matvec(a, x);
        }

        TimedKernel k;
        k.kernel = "coo_matvec";
        k.variant = "coo";
        k.dims = std::to_string(a.rows) + "x" + std::to_string(a.cols) + " nnz=" +
                 std::to_string(a.nnz());
        k.flop_count = 2.0 * static_cast<double>(a.nnz());
        k.verify_and_checksum = [&]() {
            std::vector<double> yv(a.rows);
            coo_matvec(a, x, yv);
            detail::check_close(("coo_matvec " + in.name).c_str(), yv.data(), yref.data(),
                                yv.size(), 1e-13);
            return detail::sum_elements(yv.data(), yv.size());
        };
        std::vector<double> yw(a.rows);
        k.run = [&]() { coo_matvec(a, x, yw); };
        rep.cases.push_back(measure(rep.name, k, opt.min_time));
        detail::consume(yw.empty() ? 0.0 : yw[0]);
        rep.rows.push_back({in.name, static_cast<double>(a.rows),
                            static_cast<double>(a.nnz()), rep.cases.back().mflops});
    }
    return rep;
}

/// Run one scenario by name, or all four in table order.
inline std::vector<ScenarioReport> run_scenarios(const std::string& which,
                                                 const BenchOptions& opt) {
    std::vector<ScenarioReport> out;
    const bool all = which == "all";
    if (all || which == "level1") out.push_back(run_level1(opt));
    if (all || which == "mm") out.push_back(run_mm(opt));
    if (all || which == "blocked") out.push_back(run_blocked(opt));
    if (all || which == "sparse") out.push_back(run_sparse(opt));
    if (out.empty()) throw DomainError("unknown scenario \"" + which + "\"");
    return out;
}

/// Column schema of the cross-scenario CSV.
inline std::vector<Column> csv_columns() {
    return {{"scenario", 0, -1, false},   {"kernel", 0, -1, false},
            {"variant", 0, -1, false},    {"dims", 0, -1, false},
            {"flop_count", 0, 0, false},  {"repetitions", 0, 0, false},
            {"elapsed_seconds", 0, 9, false}, {"mflops", 0, 1, false},
            {"checksum", 0, -1, false}};
}

inline std::vector<Row> csv_rows(const std::vector<ScenarioReport>& reports) {
    std::vector<Row> rows;
    for (const ScenarioReport& rep : reports)
        for (const CaseResult& c : rep.cases)
            rows.push_back({c.scenario, c.kernel, c.variant, c.dims, c.flop_count,
                            static_cast<double>(c.repetitions), c.elapsed_seconds, c.mflops,
                            c.checksum});
    return rows;
}

} // namespace jnt::bench
