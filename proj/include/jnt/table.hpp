#pragma once

#include <cstddef>
#include <cstdio>
#include <string>
#include <variant>
#include <vector>

#include "errors.hpp"

// Small deterministic table formatter shared by the benchmark harness:
// fixed column specs, right-aligned cells, and a CSV twin that renders
// exactly the same numbers so the two outputs never disagree.

namespace jnt {

struct Column {
    std::string name;
    std::size_t width = 0; ///< minimum width; cells and header can widen it
    int precision = -1;    ///< digits after the point; -1 means %.17g
    bool left_align = false;
};

using Cell = std::variant<std::string, double>;
using Row = std::vector<Cell>;

namespace detail {

inline std::string format_cell(const Column& col, const Cell& cell) {
    if (const std::string* s = std::get_if<std::string>(&cell)) return *s;
    const double v = std::get<double>(cell);
    char buf[64];
    if (col.precision < 0)
        std::snprintf(buf, sizeof buf, "%.17g", v);
    else
        std::snprintf(buf, sizeof buf, "%.*f", col.precision, v);
    return buf;
}

inline void check_arity(const std::vector<Column>& columns, const std::vector<Row>& rows) {
    for (std::size_t r = 0; r < rows.size(); ++r)
        if (rows[r].size() != columns.size())
            throw DimensionError("format_table: row " + std::to_string(r) + " has " +
                                 std::to_string(rows[r].size()) + " cells, expected " +
                                 std::to_string(columns.size()));
}

} // namespace detail

/// Render a header row plus data rows as fixed-width text.  Every column
/// is as wide as its widest formatted cell (including the header), but
/// never narrower than the declared width.  Columns are separated by two
/// spaces; numeric cells are right-aligned.
inline std::string format_table(const std::vector<Column>& columns, const std::vector<Row>& rows) {
    detail::check_arity(columns, rows);
    const std::size_t nc = columns.size();
    std::vector<std::vector<std::string>> text(rows.size(), std::vector<std::string>(nc));
    std::vector<std::size_t> width(nc);
    for (std::size_t c = 0; c < nc; ++c)
        width[c] = columns[c].width > columns[c].name.size() ? columns[c].width
                                                             : columns[c].name.size();
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < nc; ++c) {
            text[r][c] = detail::format_cell(columns[c], rows[r][c]);
            if (text[r][c].size() > width[c]) width[c] = text[r][c].size();
        }
    std::string out;
    const auto emit = [&](const std::string& s, std::size_t c) {
        const std::size_t pad = width[c] - s.size();
        if (columns[c].left_align) {
            out += s;
            out.append(pad, ' ');
        } else {
            out.append(pad, ' ');
            out += s;
        }
        out += (c + 1 < nc) ? "  " : "";
    };
    for (std::size_t c = 0; c < nc; ++c) emit(columns[c].name, c);
    out += '\n';
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < nc; ++c) emit(text[r][c], c);
        out += '\n';
    }
    return out;
}

/// RFC-4180-style CSV of the same table: header line, comma-separated
/// cells, quotes doubled and fields quoted when they contain a comma,
/// quote or newline.  Numbers are rendered exactly as in format_table.
inline std::string format_csv(const std::vector<Column>& columns, const std::vector<Row>& rows) {
    detail::check_arity(columns, rows);
    const auto quote = [](const std::string& s) {
        if (s.find_first_of(",\"\n") == std::string::npos) return s;
        std::string q = "\"";
        for (const char ch : s) {
            q += ch;
            if (ch == '"') q += '"';
        }
        q += '"';
        return q;
    };
    std::string out;
    for (std::size_t c = 0; c < columns.size(); ++c) {
        out += quote(columns[c].name);
        out += (c + 1 < columns.size()) ? "," : "\n";
    }
    for (const Row& row : rows) {
        for (std::size_t c = 0; c < columns.size(); ++c) {
            out += quote(detail::format_cell(columns[c], row[c]));
            out += (c + 1 < columns.size()) ? "," : "\n";
        }
    }
    return out;
}

} // namespace jnt
