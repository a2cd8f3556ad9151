#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "contingency.hpp"
#include "matching.hpp"

/**
 * @file j_score.hpp
 * @brief J-score: harmonic mean of the size-weighted best-match Jaccard sums in both directions.
 */

namespace jscore {

struct JScoreReport {
    BidirectionalMatching matching;
    /// R: class-size-weighted sum of each class's best Jaccard index.
    double recall_sum = 0;
    /// P: cluster-size-weighted sum of each cluster's best Jaccard index.
    double precision_sum = 0;
    double j = 0;
};

/**
 * Weighted sum of best-match similarities, each weighted by its group's share
 * of N. Terms are added in ascending order so that the result does not depend
 * on how the groups are named or ordered.
 */
inline double weighted_match_sum(const std::vector<MatchAssignment>& matches,
                                 const std::vector<ContingencyTable::Count>& sizes,
                                 ContingencyTable::Count total) {
    const auto n = static_cast<double>(total);
    std::vector<double> terms;
    terms.reserve(matches.size());
    for (std::size_t i = 0; i < matches.size(); ++i) {
        terms.push_back(static_cast<double>(sizes[i]) / n * matches[i].similarity);
    }
    std::sort(terms.begin(), terms.end());
    double sum = 0;
    for (auto t : terms) {
        sum += t;
    }
    return sum;
}

/// Harmonic mean of R and P, defined as 0 when both vanish.
inline double harmonic_mean(double r, double p) {
    if (r + p == 0) {
        return 0;
    }
    // R*P and R+P are both commutative in floating point, so swapping the
    // arguments reproduces the result bit for bit. The clamp absorbs rounding
    // that would otherwise step outside [min(R,P), max(R,P)].
    return std::clamp(2 * (r * p) / (r + p), std::min(r, p), std::max(r, p));
}

inline JScoreReport j_score(const ContingencyTable& table) {
    JScoreReport out;
    out.matching = match_sets(jaccard_matrix(table));
    out.recall_sum = weighted_match_sum(out.matching.class_to_cluster, table.row_sums(), table.total());
    out.precision_sum = weighted_match_sum(out.matching.cluster_to_class, table.col_sums(), table.total());
    out.j = harmonic_mean(out.recall_sum, out.precision_sum);
    return out;
}

} // namespace jscore
