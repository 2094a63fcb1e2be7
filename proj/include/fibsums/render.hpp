#pragma once

// Text forms of the a- and s-tables and OEIS b-files.
//
// Grid layout (tsv shown; csv uses commas, md wraps cells in pipes):
//
//   k\n  1  2  3 ...
//   0    1  1  2 ...
//   1    1  2  4 ...

#include <cstdint>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "natural.hpp"
#include "seq_core.hpp"

namespace fibsums {

enum class Family { a, s };
enum class Format { tsv, csv, markdown };

inline std::optional<Family> parse_family(std::string_view s) {
    if (s == "a") return Family::a;
    if (s == "s") return Family::s;
    return std::nullopt;
}

inline std::optional<Format> parse_format(std::string_view s) {
    if (s == "tsv") return Format::tsv;
    if (s == "csv") return Format::csv;
    if (s == "md" || s == "markdown") return Format::markdown;
    return std::nullopt;
}

struct RenderSpec {
    Family family = Family::a;
    Order k_max = 5;
    Index n_max = 12;
    Format format = Format::tsv;

    void validate() const {
        if (k_max < 0) throw std::invalid_argument("kmax must be >= 0");
        if (n_max < 1) throw std::invalid_argument("nmax must be >= 1");
    }
};

inline constexpr std::string_view kCornerLabel = "k\\n";

namespace detail {

inline void write_row(std::ostream& out, Format fmt, const std::vector<std::string>& cells) {
    if (fmt == Format::markdown) {
        out << '|';
        for (const auto& c : cells) out << ' ' << c << " |";
        out << '\n';
        return;
    }
    const char sep = fmt == Format::tsv ? '\t' : ',';
    for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != 0) out << sep;
        out << cells[i];
    }
    out << '\n';
}

inline std::vector<std::string> split_row(std::string_view line, Format fmt) {
    std::vector<std::string> cells;
    if (fmt == Format::markdown) {
        if (line.size() < 2 || line.front() != '|' || line.back() != '|') {
            throw std::invalid_argument("markdown row must start and end with '|'");
        }
        line = line.substr(1, line.size() - 2);
    }
    const char sep = fmt == Format::tsv ? '\t' : fmt == Format::csv ? ',' : '|';
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = line.find(sep, start);
        std::string_view cell = line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start);
        if (fmt == Format::markdown) {
            while (!cell.empty() && cell.front() == ' ') cell.remove_prefix(1);
            while (!cell.empty() && cell.back() == ' ') cell.remove_suffix(1);
        }
        cells.emplace_back(cell);
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return cells;
}

}  // namespace detail

inline void render_grid(std::ostream& out, const Grid& g, Format fmt) {
    std::vector<std::string> cells;
    cells.reserve(static_cast<std::size_t>(g.n_max) + 1);
    cells.emplace_back(kCornerLabel);
    for (Index n = 1; n <= g.n_max; ++n) cells.push_back(std::to_string(n));
    detail::write_row(out, fmt, cells);
    if (fmt == Format::markdown) {
        out << '|';
        for (Index n = 0; n <= g.n_max; ++n) out << "---|";
        out << '\n';
    }
    for (Order k = 0; k <= g.k_max; ++k) {
        cells.clear();
        cells.push_back(std::to_string(k));
        for (const Natural& v : g.rows.at(k)) cells.push_back(v.to_string());
        detail::write_row(out, fmt, cells);
    }
}

inline std::string render_grid(const Grid& g, Format fmt) {
    std::ostringstream os;
    render_grid(os, g, fmt);
    return os.str();
}

/// Inverse of render_grid. Validates the header and the k column.
inline Grid parse_grid(std::string_view text, Format fmt) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start < text.size()) {
        const std::size_t nl = text.find('\n', start);
        const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
        lines.push_back(text.substr(start, end - start));
        start = end + 1;
    }
    if (lines.empty()) throw std::invalid_argument("empty table");

    const auto header = detail::split_row(lines[0], fmt);
    if (header.size() < 2 || header[0] != kCornerLabel) throw std::invalid_argument("bad table header");
    Grid g;
    g.n_max = static_cast<Index>(header.size()) - 1;
    for (Index n = 1; n <= g.n_max; ++n) {
        if (header[n] != std::to_string(n)) throw std::invalid_argument("header column " + std::to_string(n));
    }

    std::size_t first = 1;
    if (fmt == Format::markdown) {
        if (lines.size() < 2) throw std::invalid_argument("markdown table missing separator");
        first = 2;
    }
    for (std::size_t i = first; i < lines.size(); ++i) {
        const auto cells = detail::split_row(lines[i], fmt);
        const auto k = static_cast<Order>(i - first);
        if (static_cast<Index>(cells.size()) != g.n_max + 1) throw std::invalid_argument("ragged row");
        if (cells[0] != std::to_string(k)) throw std::invalid_argument("row label out of sequence");
        std::vector<Natural> row;
        row.reserve(static_cast<std::size_t>(g.n_max));
        for (std::size_t c = 1; c < cells.size(); ++c) row.push_back(Natural::parse(cells[c]));
        g.rows.push_back(std::move(row));
    }
    if (g.rows.empty()) throw std::invalid_argument("table has no rows");
    g.k_max = static_cast<Order>(g.rows.size()) - 1;
    return g;
}

/// b-file body: "n value" per line, n = 1..values.size().
inline void render_bfile(std::ostream& out, const std::vector<Natural>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) out << (i + 1) << ' ' << values[i] << '\n';
}

}  // namespace fibsums
