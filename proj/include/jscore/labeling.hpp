#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"

/**
 * @file labeling.hpp
 * @brief Assignment of data points to named groups.
 */

namespace jscore {

/**
 * A partition of N points into nonempty named groups.
 *
 * Group names are opaque strings kept in lexicographic order; each point stores
 * the index of its group in that order. Groups without members cannot exist.
 */
class Labeling {
public:
    using Code = std::uint32_t;

    /**
     * Build from per-point group codes and the names the codes refer to.
     * Names need not be sorted; unused names are dropped and codes are
     * renumbered so that the stored order is lexicographic.
     */
    static Labeling from_codes(std::span<const Code> codes, std::span<const std::string> names) {
        if (codes.empty()) {
            throw Error("empty labeling");
        }
        std::vector<std::size_t> used(names.size(), 0);
        for (auto c : codes) {
            if (c >= names.size()) {
                throw Error("group code out of range");
            }
            ++used[c];
        }

        std::vector<std::size_t> order;
        for (std::size_t g = 0; g < names.size(); ++g) {
            if (used[g] > 0) {
                order.push_back(g);
            }
        }
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return names[a] < names[b]; });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (names[order[i - 1]] == names[order[i]]) {
                throw Error("duplicate group name '" + names[order[i]] + "'");
            }
        }

        Labeling out;
        std::vector<Code> remap(names.size(), 0);
        out.names_.reserve(order.size());
        out.sizes_.reserve(order.size());
        for (std::size_t i = 0; i < order.size(); ++i) {
            remap[order[i]] = static_cast<Code>(i);
            out.names_.push_back(names[order[i]]);
            out.sizes_.push_back(used[order[i]]);
        }
        out.codes_.reserve(codes.size());
        for (auto c : codes) {
            out.codes_.push_back(remap[c]);
        }
        return out;
    }

    /// Number of data points, N.
    std::size_t size() const { return codes_.size(); }

    std::size_t group_count() const { return names_.size(); }

    const std::vector<std::string>& group_names() const { return names_; }

    /// Members per group, aligned with group_names(). Sums to size().
    const std::vector<std::size_t>& group_sizes() const { return sizes_; }

    /// Per-point index into group_names().
    std::span<const Code> codes() const { return codes_; }

    const std::string& label(std::size_t point) const { return names_[codes_[point]]; }

    /// Per-point group names, in point order.
    std::vector<std::string> labels() const {
        std::vector<std::string> out;
        out.reserve(codes_.size());
        for (auto c : codes_) {
            out.push_back(names_[c]);
        }
        return out;
    }

    friend bool operator==(const Labeling&, const Labeling&) = default;

private:
    Labeling() = default;

    std::vector<Code> codes_;
    std::vector<std::string> names_;
    std::vector<std::size_t> sizes_;
};

/// Builds a Labeling from raw per-point identifiers. Throws on empty input.
inline Labeling build_labeling(std::span<const std::string> raw_labels) {
    if (raw_labels.empty()) {
        throw Error("empty labeling");
    }
    std::map<std::string, Labeling::Code> index;
    std::vector<std::string> names;
    std::vector<Labeling::Code> codes;
    codes.reserve(raw_labels.size());
    for (const auto& label : raw_labels) {
        auto [it, inserted] = index.try_emplace(label, static_cast<Labeling::Code>(names.size()));
        if (inserted) {
            names.push_back(label);
        }
        codes.push_back(it->second);
    }
    return Labeling::from_codes(codes, names);
}

inline Labeling build_labeling(const std::vector<std::string>& raw_labels) {
    return build_labeling(std::span<const std::string>(raw_labels));
}

/**
 * Zero-padded names `<prefix>1 .. <prefix>count` whose lexicographic order
 * matches their numeric order (e.g. K01..K12).
 */
inline std::vector<std::string> numbered_names(const std::string& prefix, std::size_t count) {
    std::size_t width = std::to_string(count).size();
    std::vector<std::string> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        auto digits = std::to_string(i);
        out.push_back(prefix + std::string(width - digits.size(), '0') + digits);
    }
    return out;
}

} // namespace jscore
