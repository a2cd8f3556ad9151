#pragma once

#include <cstddef>

#include "error.hpp"
#include "labeling.hpp"
#include "measures.hpp"

namespace jscore {

/// Upper bound on N for the quadratic pair enumeration.
inline constexpr std::size_t kPairOracleMaxPoints = 500;

/**
 * Classifies every unordered point pair directly, O(N^2). Independent of the
 * contingency-table path; intended as a test oracle for pair_counts().
 */
inline PairCounts brute_force_pair_oracle(const Labeling& truth, const Labeling& hypo) {
    if (truth.size() != hypo.size()) {
        throw Error("labelings cover different point sets");
    }
    const std::size_t n = truth.size();
    if (n < 2) {
        throw Error("pair counting undefined");
    }
    if (n > kPairOracleMaxPoints) {
        throw Error("pair oracle limited to 500 points");
    }
    auto t = truth.codes();
    auto h = hypo.codes();
    PairCounts out;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            bool same_t = t[i] == t[j];
            bool same_h = h[i] == h[j];
            if (same_t && same_h) {
                ++out.together_both;
            } else if (same_t) {
                ++out.together_truth_only;
            } else if (same_h) {
                ++out.together_hypo_only;
            } else {
                ++out.separate_both;
            }
            ++out.total_pairs;
        }
    }
    return out;
}

} // namespace jscore
