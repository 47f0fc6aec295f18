#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "coo_matrix.hpp"
#include "dense_matrix.hpp"
#include "errors.hpp"

// Matrix Market I/O: coordinate and array formats, real field, general
// and symmetric symmetries.  Everything else in the format zoo
// (integer, pattern, complex, skew-symmetric, hermitian) is rejected
// loudly rather than half-read.

namespace jnt {

/// Strict floating-point literal parser.  Grammar:
///     [+-]? ( digits [ '.' digits? ] | '.' digits ) ( [eE] [+-]? digits )?
/// The whole token must match; anything else raises ParseError carrying
/// the 0-based offset of the first offending character.  Notably, "nan",
/// "inf" and Fortran-style "1D6" exponents are errors, and exponents are
/// honored exactly as written ("2.13e+6" is 2130000.0, not 2.13).
/// Conversion itself is correctly rounded; values beyond the double
/// range overflow to +/-inf or underflow to +/-0.
inline double parse_float(std::string_view token) {
    const auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
    const auto fail = [&token](const std::string& why, std::size_t pos) {
        throw ParseError("parse_float: " + why + " in \"" + std::string(token) +
                             "\" at position " + std::to_string(pos),
                         pos);
    };
    const std::size_t n = token.size();
    if (n == 0) fail("empty token", 0);
    std::size_t i = 0;
    bool negative = false;
    if (token[i] == '+' || token[i] == '-') {
        negative = token[i] == '-';
        ++i;
    }
    std::size_t mantissa_digits = 0;
    const std::size_t int_start = i;
    while (i < n && is_digit(token[i])) ++i;
    mantissa_digits += i - int_start;
    std::size_t frac_digits = 0;
    if (i < n && token[i] == '.') {
        ++i;
        const std::size_t frac_start = i;
        while (i < n && is_digit(token[i])) ++i;
        frac_digits = i - frac_start;
        mantissa_digits += frac_digits;
    }
    if (mantissa_digits == 0) fail("expected digits", i);
    if (i < n && (token[i] == 'e' || token[i] == 'E')) {
        ++i;
        if (i < n && (token[i] == '+' || token[i] == '-')) ++i;
        const std::size_t exp_start = i;
        while (i < n && is_digit(token[i])) ++i;
        if (i == exp_start) fail("malformed exponent", i);
    }
    if (i != n) fail("unexpected character", i);

    const char* first = token.data() + (token[0] == '+' ? 1 : 0);
    const char* last = token.data() + n;
    double value = 0.0;
    const auto res = std::from_chars(first, last, value);
    if (res.ec == std::errc::result_out_of_range) {
        // Either above the double range or below the subnormals; decide
        // by the decimal magnitude and round to inf / 0 accordingly.
        const std::string_view body(first, static_cast<std::size_t>(last - first));
        const std::size_t epos = body.find_first_of("eE");
        long e10 = 0;
        if (epos != std::string_view::npos) {
            const char* eb = body.data() + epos + 1;
            bool eneg = false;
            if (*eb == '+' || *eb == '-') {
                eneg = *eb == '-';
                ++eb;
            }
            const auto er = std::from_chars(eb, last, e10);
            if (er.ec == std::errc::result_out_of_range) e10 = 1000000;
            if (eneg) e10 = -e10;
        }
        const std::string_view mant = body.substr(0, epos);
        const std::size_t point = mant.find('.');
        const std::size_t int_len = point == std::string_view::npos ? mant.size() : point;
        bool significant = false;
        long eff = 0;
        for (std::size_t k = 0; k < mant.size(); ++k) {
            if (mant[k] != '.' && mant[k] != '0') {
                significant = true;
                eff = k < int_len ? static_cast<long>(int_len - k) - 1
                                  : static_cast<long>(point) - static_cast<long>(k);
                break;
            }
        }
        if (!significant) return negative ? -0.0 : 0.0;
        value = eff + e10 >= 0 ? HUGE_VAL : 0.0;
        return negative ? -value : value;
    }
    if (res.ec != std::errc{} || res.ptr != last)
        fail("conversion failed", static_cast<std::size_t>(res.ptr - token.data()));
    return value;
}

namespace detail {

struct MmToken {
    std::string text;
    std::size_t line;
};

// Whitespace tokens of all content lines after the banner, with full-line
// '%' comments and blank lines dropped.  CR from CRLF endings is eaten.
inline std::vector<MmToken> mm_tokenize(std::istream& in, std::size_t first_line) {
    std::vector<MmToken> out;
    std::string line;
    std::size_t lineno = first_line;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t i = 0;
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i >= line.size() || line[i] == '%') continue;
        while (i < line.size()) {
            const std::size_t start = i;
            while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
            out.push_back({line.substr(start, i - start), lineno});
            while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        }
    }
    return out;
}

inline std::size_t mm_index(const std::vector<MmToken>& toks, std::size_t& pos, const char* what) {
    if (pos >= toks.size())
        throw MalformedMatrixError(std::string("matrix market: unexpected end of data, expected ") +
                                   what);
    const MmToken& t = toks[pos++];
    std::size_t v = 0;
    const char* b = t.text.data();
    const auto r = std::from_chars(b, b + t.text.size(), v);
    if (r.ec != std::errc{} || r.ptr != b + t.text.size())
        throw MalformedMatrixError("matrix market: line " + std::to_string(t.line) + ": bad " +
                                   what + " \"" + t.text + "\"");
    return v;
}

inline double mm_value(const std::vector<MmToken>& toks, std::size_t& pos) {
    if (pos >= toks.size())
        throw MalformedMatrixError("matrix market: unexpected end of data, expected value");
    const MmToken& t = toks[pos++];
    try {
        return parse_float(t.text);
    } catch (const ParseError& e) {
        throw MalformedMatrixError("matrix market: line " + std::to_string(t.line) + ": " +
                                   e.what());
    }
}

inline std::string mm_lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

} // namespace detail

/// Either a sparse (coordinate format) or dense (array format) matrix.
using MatrixMarketData = std::variant<CooMatrix, DenseMatrix>;

/// Read a Matrix Market stream.  Supported: object `matrix`, formats
/// `coordinate` | `array`, field `real`, symmetries `general` |
/// `symmetric`.  Indices are 1-based in the file and 0-based in the
/// returned structure.  Symmetric input stores the lower triangle; the
/// strictly-lower entries are mirrored on read.  Structural problems
/// (bad banner, unsupported qualifiers, indices out of the declared
/// shape, wrong entry counts, trailing junk) raise MalformedMatrixError.
inline MatrixMarketData read_matrix_market(std::istream& in) {
    std::string banner;
    if (!std::getline(in, banner)) throw MalformedMatrixError("matrix market: empty input");
    if (!banner.empty() && banner.back() == '\r') banner.pop_back();
    std::vector<std::string> words;
    {
        std::size_t i = 0;
        while (i < banner.size()) {
            while (i < banner.size() && std::isspace(static_cast<unsigned char>(banner[i]))) ++i;
            const std::size_t start = i;
            while (i < banner.size() && !std::isspace(static_cast<unsigned char>(banner[i]))) ++i;
            if (i > start) words.push_back(banner.substr(start, i - start));
        }
    }
    if (words.size() != 5 || words[0] != "%%MatrixMarket")
        throw MalformedMatrixError("matrix market: bad banner \"" + banner + "\"");
    const std::string object = detail::mm_lower(words[1]);
    const std::string format = detail::mm_lower(words[2]);
    const std::string field = detail::mm_lower(words[3]);
    const std::string symmetry = detail::mm_lower(words[4]);
    if (object != "matrix")
        throw MalformedMatrixError("matrix market: unsupported object \"" + object + "\"");
    if (format != "coordinate" && format != "array")
        throw MalformedMatrixError("matrix market: unsupported format \"" + format + "\"");
    if (field != "real")
        throw MalformedMatrixError("matrix market: unsupported field \"" + field + "\"");
    if (symmetry != "general" && symmetry != "symmetric")
        throw MalformedMatrixError("matrix market: unsupported symmetry \"" + symmetry + "\"");
    const bool symmetric = symmetry == "symmetric";

    const std::vector<detail::MmToken> toks = detail::mm_tokenize(in, 1);
    std::size_t pos = 0;
    const std::size_t rows = detail::mm_index(toks, pos, "row count");
    const std::size_t cols = detail::mm_index(toks, pos, "column count");
    if (symmetric && rows != cols)
        throw MalformedMatrixError("matrix market: symmetric matrix must be square, got " +
                                   std::to_string(rows) + "x" + std::to_string(cols));

    if (format == "coordinate") {
        const std::size_t nnz = detail::mm_index(toks, pos, "entry count");
        CooMatrix a(rows, cols);
        a.row_index.reserve(nnz);
        a.col_index.reserve(nnz);
        a.values.reserve(nnz);
        for (std::size_t t = 0; t < nnz; ++t) {
            const std::size_t entry_line = pos < toks.size() ? toks[pos].line : 0;
            const std::size_t i = detail::mm_index(toks, pos, "row index");
            const std::size_t j = detail::mm_index(toks, pos, "column index");
            const double v = detail::mm_value(toks, pos);
            if (i < 1 || i > rows || j < 1 || j > cols)
                throw MalformedMatrixError("matrix market: line " + std::to_string(entry_line) +
                                           ": entry (" + std::to_string(i) + ", " +
                                           std::to_string(j) + ") outside declared " +
                                           std::to_string(rows) + "x" + std::to_string(cols));
            a.add(i - 1, j - 1, v);
            if (symmetric && i != j) a.add(j - 1, i - 1, v);
        }
        if (pos != toks.size())
            throw MalformedMatrixError("matrix market: line " + std::to_string(toks[pos].line) +
                                       ": trailing data after " + std::to_string(nnz) +
                                       " declared entries");
        return a;
    }

    // array format: dense values in column-major order; symmetric input
    // lists each column from the diagonal down.
    DenseMatrix d(rows, cols);
    if (!symmetric) {
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = 0; i < rows; ++i) d(i, j) = detail::mm_value(toks, pos);
    } else {
        for (std::size_t j = 0; j < cols; ++j)
            for (std::size_t i = j; i < rows; ++i) {
                const double v = detail::mm_value(toks, pos);
                d(i, j) = v;
                d(j, i) = v;
            }
    }
    if (pos != toks.size())
        throw MalformedMatrixError("matrix market: line " + std::to_string(toks[pos].line) +
                                   ": trailing data after dense payload");
    return d;
}

inline MatrixMarketData read_matrix_market_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open \"" + path + "\" for reading");
    return read_matrix_market(in);
}

/// Write coordinate/real/general with 1-based indices.  Values print
/// with 17 significant digits, enough to round-trip doubles bitwise.
inline void write_matrix_market(const CooMatrix& a, std::ostream& out) {
    detail::check_coo(a, "write_matrix_market");
    out << "%%MatrixMarket matrix coordinate real general\n";
    out << a.rows << " " << a.cols << " " << a.nnz() << "\n";
    char buf[64];
    for (std::size_t t = 0, nz = a.nnz(); t < nz; ++t) {
        std::snprintf(buf, sizeof buf, "%.17g", a.values[t]);
        out << (a.row_index[t] + 1) << " " << (a.col_index[t] + 1) << " " << buf << "\n";
    }
    if (!out) throw IoError("write_matrix_market: stream failure");
}

inline void write_matrix_market_file(const CooMatrix& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open \"" + path + "\" for writing");
    write_matrix_market(a, out);
    out.flush();
    if (!out) throw IoError("write failure on \"" + path + "\"");
}

} // namespace jnt
