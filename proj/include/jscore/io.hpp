#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "contingency.hpp"
#include "error.hpp"

/**
 * @file io.hpp
 * @brief Readers for the delimited label file and similarity table formats.
 *
 * Label file: a header row, then one row per point with either
 * `true_label,cluster_label` or `point_id,true_label,cluster_label`.
 *
 * Similarity table: a header row `<corner>,<col 1>,...,<col K>`, then rows
 * `<row name>,<value>,...`. Values are any finite reals.
 *
 * Fields are split on the delimiter without quoting. Blank lines are skipped
 * and a trailing carriage return is stripped.
 */

namespace jscore {

struct LabelTable {
    /// Empty when the file has no id column.
    std::vector<std::string> point_ids;
    std::vector<std::string> truth;
    std::vector<std::string> hypo;
};

namespace detail {

inline std::vector<std::string> split_fields(std::string_view line, char delimiter) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        auto pos = line.find(delimiter, start);
        if (pos == std::string_view::npos) {
            out.emplace_back(line.substr(start));
            return out;
        }
        out.emplace_back(line.substr(start, pos - start));
        start = pos + 1;
    }
}

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

// Reads non-blank lines as trimmed fields together with their 1-based line numbers.
struct Row {
    std::size_t line = 0;
    std::vector<std::string> fields;
};

inline std::vector<Row> read_rows(std::istream& in, char delimiter) {
    std::vector<Row> rows;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        std::string_view view = line;
        if (!view.empty() && view.back() == '\r') {
            view.remove_suffix(1);
        }
        if (trim(view).empty()) {
            continue;
        }
        Row row{number, {}};
        for (auto& f : split_fields(view, delimiter)) {
            row.fields.emplace_back(trim(f));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Error line_error(std::size_t line, const std::string& what) {
    return Error("line " + std::to_string(line) + ": " + what);
}

} // namespace detail

inline LabelTable read_label_file(std::istream& in, char delimiter = ',') {
    auto rows = detail::read_rows(in, delimiter);
    if (rows.empty()) {
        throw Error("missing header row");
    }
    const auto width = rows.front().fields.size();
    if (width != 2 && width != 3) {
        throw detail::line_error(rows.front().line, "header must have 2 or 3 columns, found " + std::to_string(width));
    }
    const bool has_id = width == 3;

    LabelTable out;
    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != width) {
            throw detail::line_error(row.line, "expected " + std::to_string(width) + " fields, found " +
                                                   std::to_string(row.fields.size()));
        }
        for (std::size_t c = 0; c < width; ++c) {
            if (row.fields[c].empty()) {
                throw detail::line_error(row.line, "empty field in column " + std::to_string(c + 1));
            }
        }
        if (has_id) {
            out.point_ids.push_back(row.fields[0]);
        }
        out.truth.push_back(row.fields[width - 2]);
        out.hypo.push_back(row.fields[width - 1]);
    }
    if (out.truth.empty()) {
        throw Error("empty labeling");
    }
    return out;
}

inline SimilarityMatrix read_similarity_table(std::istream& in, char delimiter = ',') {
    auto rows = detail::read_rows(in, delimiter);
    if (rows.empty()) {
        throw Error("missing header row");
    }
    const auto& header = rows.front();
    if (header.fields.size() < 2) {
        throw detail::line_error(header.line, "header needs a corner cell and at least one column name");
    }
    std::vector<std::string> col_names(header.fields.begin() + 1, header.fields.end());
    std::vector<std::string> row_names;
    std::vector<std::vector<double>> values;

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != header.fields.size()) {
            throw detail::line_error(row.line, "expected " + std::to_string(header.fields.size()) +
                                                   " fields, found " + std::to_string(row.fields.size()));
        }
        row_names.push_back(row.fields[0]);
        std::vector<double> parsed;
        for (std::size_t c = 1; c < row.fields.size(); ++c) {
            const auto& cell = row.fields[c];
            double v = 0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v)) {
                throw Error("line " + std::to_string(row.line) + ", column " + std::to_string(c + 1) +
                            ": invalid similarity value '" + cell + "'");
            }
            parsed.push_back(v);
        }
        values.push_back(std::move(parsed));
    }
    if (row_names.empty()) {
        throw Error("similarity table has no rows");
    }
    return SimilarityMatrix(std::move(values), std::move(row_names), std::move(col_names));
}

} // namespace jscore
