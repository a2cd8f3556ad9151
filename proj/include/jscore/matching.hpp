#pragma once

#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "contingency.hpp"
#include "error.hpp"

/**
 * @file matching.hpp
 * @brief Bidirectional best-match search over an arbitrary similarity table.
 */

namespace jscore {

/// Best partner of one reference group and the similarity achieved.
struct MatchAssignment {
    std::string reference_group;
    std::string matched_group;
    double similarity = 0;

    friend bool operator==(const MatchAssignment&, const MatchAssignment&) = default;
};

/**
 * Independent per-reference argmax in both directions. Every class and every
 * cluster appears exactly once as a reference, so nothing is left unmatched.
 */
struct BidirectionalMatching {
    std::vector<MatchAssignment> class_to_cluster;
    std::vector<MatchAssignment> cluster_to_class;

    friend bool operator==(const BidirectionalMatching&, const BidirectionalMatching&) = default;
};

namespace detail {

// Strictly larger value wins; equal values go to the lexicographically smaller name.
inline bool better_candidate(double value, const std::string& name, double best, const std::string& best_name) {
    return value > best || (value == best && name < best_name);
}

} // namespace detail

/**
 * Matches each row to its highest-scoring column and each column to its
 * highest-scoring row. Any similarity values are accepted as long as they are
 * finite; ties go to the lexicographically smallest name.
 */
inline BidirectionalMatching match_sets(const SimilarityMatrix& sim) {
    for (std::size_t t = 0; t < sim.rows(); ++t) {
        for (std::size_t k = 0; k < sim.cols(); ++k) {
            if (!std::isfinite(sim.at(t, k))) {
                throw Error("invalid similarity value");
            }
        }
    }

    const auto& rows = sim.row_names();
    const auto& cols = sim.col_names();
    BidirectionalMatching out;
    out.class_to_cluster.reserve(sim.rows());
    out.cluster_to_class.reserve(sim.cols());

    for (std::size_t t = 0; t < sim.rows(); ++t) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < sim.cols(); ++k) {
            if (detail::better_candidate(sim.at(t, k), cols[k], sim.at(t, best), cols[best])) {
                best = k;
            }
        }
        out.class_to_cluster.push_back({rows[t], cols[best], sim.at(t, best)});
    }

    for (std::size_t k = 0; k < sim.cols(); ++k) {
        std::size_t best = 0;
        for (std::size_t t = 1; t < sim.rows(); ++t) {
            if (detail::better_candidate(sim.at(t, k), rows[t], sim.at(best, k), rows[best])) {
                best = t;
            }
        }
        out.cluster_to_class.push_back({cols[k], rows[best], sim.at(best, k)});
    }
    return out;
}

} // namespace jscore
