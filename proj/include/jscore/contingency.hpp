#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "labeling.hpp"

/**
 * @file contingency.hpp
 * @brief Class-by-cluster overlap counts and the Jaccard similarity matrix built from them.
 */

namespace jscore {

/**
 * T x K matrix of shared-point counts, rows are classes and columns are clusters.
 *
 * Every row and column sum is strictly positive; the constructor enforces it.
 */
class ContingencyTable {
public:
    using Count = std::int64_t;

    /**
     * @param counts Row-major T x K counts.
     * @param row_names Class names, one per row.
     * @param col_names Cluster names, one per column.
     */
    ContingencyTable(std::vector<std::vector<Count>> counts, std::vector<std::string> row_names,
                     std::vector<std::string> col_names)
        : rows_(row_names.size()), cols_(col_names.size()), row_names_(std::move(row_names)),
          col_names_(std::move(col_names)) {
        if (rows_ == 0 || cols_ == 0) {
            throw Error("contingency table needs at least one row and one column");
        }
        if (counts.size() != rows_) {
            throw Error("contingency table row count does not match row names");
        }
        counts_.reserve(rows_ * cols_);
        for (const auto& row : counts) {
            if (row.size() != cols_) {
                throw Error("contingency table is not rectangular");
            }
            for (auto c : row) {
                if (c < 0) {
                    throw Error("negative count in contingency table");
                }
                counts_.push_back(c);
            }
        }
        finish();
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Count count(std::size_t t, std::size_t k) const { return counts_[t * cols_ + k]; }

    /// |V_t| per class.
    const std::vector<Count>& row_sums() const { return row_sums_; }
    /// |V_k| per cluster.
    const std::vector<Count>& col_sums() const { return col_sums_; }
    Count total() const { return total_; }

    const std::vector<std::string>& row_names() const { return row_names_; }
    const std::vector<std::string>& col_names() const { return col_names_; }

    /// Same table with classes and clusters swapped.
    ContingencyTable transposed() const {
        ContingencyTable out;
        out.rows_ = cols_;
        out.cols_ = rows_;
        out.row_names_ = col_names_;
        out.col_names_ = row_names_;
        out.counts_.resize(counts_.size());
        for (std::size_t t = 0; t < rows_; ++t) {
            for (std::size_t k = 0; k < cols_; ++k) {
                out.counts_[k * rows_ + t] = count(t, k);
            }
        }
        out.finish();
        return out;
    }

    std::vector<std::vector<Count>> to_rows() const {
        std::vector<std::vector<Count>> out(rows_, std::vector<Count>(cols_));
        for (std::size_t t = 0; t < rows_; ++t) {
            for (std::size_t k = 0; k < cols_; ++k) {
                out[t][k] = count(t, k);
            }
        }
        return out;
    }

    friend bool operator==(const ContingencyTable&, const ContingencyTable&) = default;

private:
    ContingencyTable() = default;

    friend ContingencyTable build_contingency(const Labeling&, const Labeling&);

    void finish() {
        row_sums_.assign(rows_, 0);
        col_sums_.assign(cols_, 0);
        total_ = 0;
        for (std::size_t t = 0; t < rows_; ++t) {
            for (std::size_t k = 0; k < cols_; ++k) {
                auto c = count(t, k);
                row_sums_[t] += c;
                col_sums_[k] += c;
                total_ += c;
            }
        }
        for (auto s : row_sums_) {
            if (s <= 0) {
                throw Error("contingency table has an empty class");
            }
        }
        for (auto s : col_sums_) {
            if (s <= 0) {
                throw Error("contingency table has an empty cluster");
            }
        }
    }

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Count> counts_;
    std::vector<Count> row_sums_;
    std::vector<Count> col_sums_;
    Count total_ = 0;
    std::vector<std::string> row_names_;
    std::vector<std::string> col_names_;
};

/// Cross-tabulates two labelings of the same points, matched by position.
inline ContingencyTable build_contingency(const Labeling& truth, const Labeling& hypo) {
    if (truth.size() != hypo.size()) {
        throw Error("labelings cover different point sets");
    }
    ContingencyTable out;
    out.rows_ = truth.group_count();
    out.cols_ = hypo.group_count();
    out.row_names_ = truth.group_names();
    out.col_names_ = hypo.group_names();
    out.counts_.assign(out.rows_ * out.cols_, 0);
    auto t = truth.codes();
    auto h = hypo.codes();
    for (std::size_t i = 0; i < t.size(); ++i) {
        ++out.counts_[static_cast<std::size_t>(t[i]) * out.cols_ + h[i]];
    }
    out.finish();
    return out;
}

/// T x K real matrix of class/cluster similarities with its row and column names.
class SimilarityMatrix {
public:
    SimilarityMatrix(std::vector<std::vector<double>> values, std::vector<std::string> row_names,
                     std::vector<std::string> col_names)
        : rows_(row_names.size()), cols_(col_names.size()), row_names_(std::move(row_names)),
          col_names_(std::move(col_names)) {
        if (rows_ == 0 || cols_ == 0) {
            throw Error("similarity matrix needs at least one row and one column");
        }
        if (values.size() != rows_) {
            throw Error("similarity matrix row count does not match row names");
        }
        values_.reserve(rows_ * cols_);
        for (const auto& row : values) {
            if (row.size() != cols_) {
                throw Error("similarity matrix is not rectangular");
            }
            values_.insert(values_.end(), row.begin(), row.end());
        }
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    double at(std::size_t t, std::size_t k) const { return values_[t * cols_ + k]; }
    const std::vector<std::string>& row_names() const { return row_names_; }
    const std::vector<std::string>& col_names() const { return col_names_; }

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<double> values_;
    std::vector<std::string> row_names_;
    std::vector<std::string> col_names_;
};

/// Jaccard index |V_t ∩ V_k| / |V_t ∪ V_k| for every class/cluster pair.
inline SimilarityMatrix jaccard_matrix(const ContingencyTable& table) {
    std::vector<std::vector<double>> values(table.rows(), std::vector<double>(table.cols()));
    const auto& a = table.row_sums();
    const auto& b = table.col_sums();
    for (std::size_t t = 0; t < table.rows(); ++t) {
        for (std::size_t k = 0; k < table.cols(); ++k) {
            auto shared = table.count(t, k);
            // union is at least max(a, b) > 0
            values[t][k] = static_cast<double>(shared) / static_cast<double>(a[t] + b[k] - shared);
        }
    }
    return SimilarityMatrix(std::move(values), table.row_names(), table.col_names());
}

} // namespace jscore
