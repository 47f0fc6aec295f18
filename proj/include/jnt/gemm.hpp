#pragma once

#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <string>

#include "dense_matrix.hpp"
#include "errors.hpp"

// Matrix-multiply kernels: C <- C + A * B in every combination of loop
// order, indexing style and inner-loop unrolling, plus a two-level cache
// blocked version.  The point of keeping all the variants around is to be
// able to time them against each other; they all compute the same product.
//
// Accumulation-order contract: with unroll 1, every variant adds the N
// products into each C element in ascending-k order, so the three loop
// orders are bitwise identical.  Unrolled ijk uses one partial accumulator
// per unrolled lane, combined pairwise, then the remainder tail; that
// changes the rounding sequence, so unrolled results agree with the plain
// ones only to roundoff.

namespace jnt {

enum class LoopOrder { ijk, kij, ikj };

/// `nested` addresses elements through DenseMatrix::operator(), i.e. an
/// index computation per access, like nested-array indexing.  `one_dim`
/// hoists row bases out of the inner loop and walks the flat array.
enum class Indexing { nested, one_dim };

struct GemmConfig {
    LoopOrder loop_order = LoopOrder::ijk;
    Indexing indexing = Indexing::nested;
    unsigned unroll = 1; // 1, 4 or 8
};

struct BlockPair {
    std::size_t outer = 40;
    std::size_t inner = 8;
};

namespace detail {

inline void check_gemm_shapes(const DenseMatrix& a, const DenseMatrix& b, const DenseMatrix& c) {
    if (b.rows() != a.cols() || c.rows() != a.rows() || c.cols() != b.cols())
        throw DimensionError("gemm: shapes " + std::to_string(a.rows()) + "x" +
                             std::to_string(a.cols()) + " * " + std::to_string(b.rows()) + "x" +
                             std::to_string(b.cols()) + " -> " + std::to_string(c.rows()) + "x" +
                             std::to_string(c.cols()) + " do not conform");
}

template <unsigned U>
void gemm_ijk_nested(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            double s = c(i, j);
            std::size_t k = 0;
            if constexpr (U > 1) {
                double acc[U] = {};
                for (; k + U <= n; k += U)
                    for (unsigned u = 0; u < U; ++u) acc[u] += a(i, k + u) * b(k + u, j);
                if constexpr (U == 4)
                    s += (acc[0] + acc[1]) + (acc[2] + acc[3]);
                else
                    s += ((acc[0] + acc[1]) + (acc[2] + acc[3])) +
                         ((acc[4] + acc[5]) + (acc[6] + acc[7]));
            }
            for (; k < n; ++k) s += a(i, k) * b(k, j);
            c(i, j) = s;
        }
    }
}

template <unsigned U>
void gemm_ijk_1d(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    const double* ap = a.data();
    const double* bp = b.data();
    double* cp = c.data();
    for (std::size_t i = 0; i < l; ++i) {
        const double* ai = ap + i * n;
        double* ci = cp + i * m;
        for (std::size_t j = 0; j < m; ++j) {
            double s = ci[j];
            std::size_t k = 0;
            if constexpr (U > 1) {
                double acc[U] = {};
                for (; k + U <= n; k += U)
                    for (unsigned u = 0; u < U; ++u) acc[u] += ai[k + u] * bp[(k + u) * m + j];
                if constexpr (U == 4)
                    s += (acc[0] + acc[1]) + (acc[2] + acc[3]);
                else
                    s += ((acc[0] + acc[1]) + (acc[2] + acc[3])) +
                         ((acc[4] + acc[5]) + (acc[6] + acc[7]));
            }
            for (; k < n; ++k) s += ai[k] * bp[k * m + j];
            ci[j] = s;
        }
    }
}

template <unsigned U>
void gemm_kij_nested(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < l; ++i) {
            std::size_t j = 0;
            if constexpr (U > 1)
                for (; j + U <= m; j += U)
                    for (unsigned u = 0; u < U; ++u) c(i, j + u) += a(i, k) * b(k, j + u);
            for (; j < m; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
}

template <unsigned U>
void gemm_kij_1d(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    const double* ap = a.data();
    const double* bp = b.data();
    double* cp = c.data();
    for (std::size_t k = 0; k < n; ++k) {
        const double* bk = bp + k * m;
        for (std::size_t i = 0; i < l; ++i) {
            const double aik = ap[i * n + k];
            double* ci = cp + i * m;
            std::size_t j = 0;
            if constexpr (U > 1)
                for (; j + U <= m; j += U)
                    for (unsigned u = 0; u < U; ++u) ci[j + u] += aik * bk[j + u];
            for (; j < m; ++j) ci[j] += aik * bk[j];
        }
    }
}

template <unsigned U>
void gemm_ikj_nested(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t k = 0; k < n; ++k) {
            std::size_t j = 0;
            if constexpr (U > 1)
                for (; j + U <= m; j += U)
                    for (unsigned u = 0; u < U; ++u) c(i, j + u) += a(i, k) * b(k, j + u);
            for (; j < m; ++j) c(i, j) += a(i, k) * b(k, j);
        }
    }
}

template <unsigned U>
void gemm_ikj_1d(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c) {
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    const double* ap = a.data();
    const double* bp = b.data();
    double* cp = c.data();
    for (std::size_t i = 0; i < l; ++i) {
        const double* ai = ap + i * n;
        double* ci = cp + i * m;
        for (std::size_t k = 0; k < n; ++k) {
            const double aik = ai[k];
            const double* bk = bp + k * m;
            std::size_t j = 0;
            if constexpr (U > 1)
                for (; j + U <= m; j += U)
                    for (unsigned u = 0; u < U; ++u) ci[j + u] += aik * bk[j + u];
            for (; j < m; ++j) ci[j] += aik * bk[j];
        }
    }
}

template <unsigned U>
void gemm_dispatch(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c,
                   const GemmConfig& cfg) {
    if (cfg.indexing == Indexing::nested) {
        switch (cfg.loop_order) {
        case LoopOrder::ijk: gemm_ijk_nested<U>(a, b, c); return;
        case LoopOrder::kij: gemm_kij_nested<U>(a, b, c); return;
        case LoopOrder::ikj: gemm_ikj_nested<U>(a, b, c); return;
        }
    } else {
        switch (cfg.loop_order) {
        case LoopOrder::ijk: gemm_ijk_1d<U>(a, b, c); return;
        case LoopOrder::kij: gemm_kij_1d<U>(a, b, c); return;
        case LoopOrder::ikj: gemm_ikj_1d<U>(a, b, c); return;
        }
    }
}

// 8x8 tile with fully accumulator-resident partial products: acc[][] has
// fixed bounds so the compiler unrolls and keeps it in registers.
inline void tile_8x8(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                     double* c, std::size_t ldc, std::size_t kh) {
    double acc[8][8] = {};
    for (std::size_t k = 0; k < kh; ++k) {
        const double* bk = b + k * ldb;
        for (int r = 0; r < 8; ++r) {
            const double ar = a[r * lda + k];
            for (int s = 0; s < 8; ++s) acc[r][s] += ar * bk[s];
        }
    }
    for (int r = 0; r < 8; ++r)
        for (int s = 0; s < 8; ++s) c[r * ldc + s] += acc[r][s];
}

// Ragged edges and non-default inner blocks: per-element accumulator,
// same ascending-k order within the tile.
inline void tile_any(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                     double* c, std::size_t ldc, std::size_t mr, std::size_t nr, std::size_t kh) {
    for (std::size_t r = 0; r < mr; ++r) {
        for (std::size_t s = 0; s < nr; ++s) {
            double t = 0.0;
            for (std::size_t k = 0; k < kh; ++k) t += a[r * lda + k] * b[k * ldb + s];
            c[r * ldc + s] += t;
        }
    }
}

inline void block_mul(const double* a, std::size_t lda, const double* b, std::size_t ldb,
                      double* c, std::size_t ldc, std::size_t ih, std::size_t kh, std::size_t jh,
                      std::size_t inner) {
    for (std::size_t i0 = 0; i0 < ih; i0 += inner) {
        const std::size_t mr = (inner < ih - i0) ? inner : ih - i0;
        for (std::size_t j0 = 0; j0 < jh; j0 += inner) {
            const std::size_t nr = (inner < jh - j0) ? inner : jh - j0;
            if (mr == 8 && nr == 8)
                tile_8x8(a + i0 * lda, lda, b + j0, ldb, c + i0 * ldc + j0, ldc, kh);
            else
                tile_any(a + i0 * lda, lda, b + j0, ldb, c + i0 * ldc + j0, ldc, mr, nr, kh);
        }
    }
}

} // namespace detail

/// C <- C + A * B with the loop order, indexing style and unroll factor
/// given by `cfg`.  All variants compute the same product; see the
/// accumulation-order notes at the top of this header.
inline void gemm(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c,
                 const GemmConfig& cfg = {}) {
    detail::check_gemm_shapes(a, b, c);
    switch (cfg.unroll) {
    case 1: detail::gemm_dispatch<1>(a, b, c, cfg); return;
    case 4: detail::gemm_dispatch<4>(a, b, c, cfg); return;
    case 8: detail::gemm_dispatch<8>(a, b, c, cfg); return;
    default:
        throw ConfigError("gemm: unroll must be 1, 4 or 8, got " + std::to_string(cfg.unroll));
    }
}

/// Two-level blocked C <- C + A * B: outer_block x outer_block cache
/// blocks, each multiplied through inner_block x inner_block tiles with
/// accumulator-resident partial sums.  Ragged edges are handled; the
/// inner block must divide the outer one.
inline void gemm_blocked(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c,
                         std::size_t outer_block = 40, std::size_t inner_block = 8) {
    detail::check_gemm_shapes(a, b, c);
    if (outer_block == 0 || inner_block == 0)
        throw ConfigError("gemm_blocked: block sizes must be positive");
    if (outer_block % inner_block != 0)
        throw ConfigError("gemm_blocked: inner block " + std::to_string(inner_block) +
                          " does not divide outer block " + std::to_string(outer_block));
    const std::size_t l = a.rows(), n = a.cols(), m = b.cols();
    const double* ap = a.data();
    const double* bp = b.data();
    double* cp = c.data();
    for (std::size_t ii = 0; ii < l; ii += outer_block) {
        const std::size_t ih = (outer_block < l - ii) ? outer_block : l - ii;
        for (std::size_t kk = 0; kk < n; kk += outer_block) {
            const std::size_t kh = (outer_block < n - kk) ? outer_block : n - kk;
            for (std::size_t jj = 0; jj < m; jj += outer_block) {
                const std::size_t jh = (outer_block < m - jj) ? outer_block : m - jj;
                detail::block_mul(ap + ii * n + kk, n, bp + kk * m + jj, m,
                                  cp + ii * m + jj, m, ih, kh, jh, inner_block);
            }
        }
    }
}

/// Block sizes for gemm_blocked: the built-in default unless the
/// JNT_BLOCK environment variable ("outer,inner", e.g. "64,8") overrides
/// it.  A malformed or inconsistent override is a ConfigError.
inline BlockPair optimal_block_size() {
    const char* env = std::getenv("JNT_BLOCK");
    if (env == nullptr || *env == '\0') return BlockPair{};
    const std::string s(env);
    const auto bad = [&s](const std::string& why) {
        return ConfigError("JNT_BLOCK=\"" + s + "\": " + why);
    };
    const std::size_t comma = s.find(',');
    if (comma == std::string::npos) throw bad("expected \"outer,inner\"");
    std::size_t outer = 0, inner = 0;
    const char* b = s.data();
    auto r1 = std::from_chars(b, b + comma, outer);
    if (r1.ec != std::errc{} || r1.ptr != b + comma) throw bad("bad outer block");
    auto r2 = std::from_chars(b + comma + 1, b + s.size(), inner);
    if (r2.ec != std::errc{} || r2.ptr != b + s.size()) throw bad("bad inner block");
    if (outer == 0 || inner == 0) throw bad("block sizes must be positive");
    if (outer % inner != 0) throw bad("inner block does not divide outer block");
    return BlockPair{outer, inner};
}

} // namespace jnt
