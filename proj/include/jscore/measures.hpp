#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>

#include "contingency.hpp"
#include "error.hpp"
#include "j_score.hpp"

/**
 * @file measures.hpp
 * @brief Reference accuracy measures computed from a contingency table:
 * H-score, F-score, Rand and adjusted Rand indices, NMI, V-measure, VI and NVI.
 */

namespace jscore {

/**
 * 1 - (sum over classes of the largest shared count) / N, where each class
 * picks its best cluster independently. Lower is better; 0 is a perfect match.
 */
inline double h_score(const ContingencyTable& table) {
    ContingencyTable::Count covered = 0;
    for (std::size_t t = 0; t < table.rows(); ++t) {
        ContingencyTable::Count best = 0;
        for (std::size_t k = 0; k < table.cols(); ++k) {
            best = std::max(best, table.count(t, k));
        }
        covered += best;
    }
    return 1.0 - static_cast<double>(covered) / static_cast<double>(table.total());
}

/// Class-size-weighted best F1 per class, F1(t,k) = 2 n_tk / (|V_t| + |V_k|).
inline double f_score(const ContingencyTable& table) {
    const auto& a = table.row_sums();
    const auto& b = table.col_sums();
    const auto n = static_cast<double>(table.total());
    double sum = 0;
    for (std::size_t t = 0; t < table.rows(); ++t) {
        double best = 0;
        for (std::size_t k = 0; k < table.cols(); ++k) {
            best = std::max(best, 2.0 * static_cast<double>(table.count(t, k)) / static_cast<double>(a[t] + b[k]));
        }
        sum += static_cast<double>(a[t]) / n * best;
    }
    return sum;
}

/// Classification of all N(N-1)/2 unordered point pairs.
struct PairCounts {
    std::int64_t together_both = 0;
    std::int64_t together_truth_only = 0;
    std::int64_t together_hypo_only = 0;
    std::int64_t separate_both = 0;
    std::int64_t total_pairs = 0;

    friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

namespace detail {

inline std::int64_t choose2(std::int64_t n) { return n * (n - 1) / 2; }

} // namespace detail

/// Pair counts from the table via the sum-of-binomials identities.
inline PairCounts pair_counts(const ContingencyTable& table) {
    if (table.total() < 2) {
        throw Error("pair counting undefined");
    }
    std::int64_t cells = 0, rows = 0, cols = 0;
    for (std::size_t t = 0; t < table.rows(); ++t) {
        for (std::size_t k = 0; k < table.cols(); ++k) {
            cells += detail::choose2(table.count(t, k));
        }
    }
    for (auto s : table.row_sums()) {
        rows += detail::choose2(s);
    }
    for (auto s : table.col_sums()) {
        cols += detail::choose2(s);
    }

    PairCounts out;
    out.total_pairs = detail::choose2(table.total());
    out.together_both = cells;
    out.together_truth_only = rows - cells;
    out.together_hypo_only = cols - cells;
    out.separate_both = out.total_pairs - rows - cols + cells;
    return out;
}

struct PairCountingScores {
    double ri = 0;
    double ari = 0;
};

/**
 * Rand index and its Hubert-Arabie adjustment under the permutation model.
 * When the expected and maximum index coincide (both partitions are a single
 * group, or both are all singletons) the partitions are identical and ARI is 1.
 */
inline PairCountingScores pair_counting_scores(const ContingencyTable& table) {
    auto pairs = pair_counts(table);
    const auto total = static_cast<double>(pairs.total_pairs);
    const auto index = static_cast<double>(pairs.together_both);
    const auto rows = static_cast<double>(pairs.together_both + pairs.together_truth_only);
    const auto cols = static_cast<double>(pairs.together_both + pairs.together_hypo_only);

    PairCountingScores out;
    out.ri = static_cast<double>(pairs.together_both + pairs.separate_both) / total;

    const double expected = rows * cols / total;
    const double maximum = (rows + cols) / 2;
    out.ari = (maximum == expected) ? 1.0 : (index - expected) / (maximum - expected);
    return out;
}

/// Plug-in entropies in nats.
struct EntropyStats {
    double h_truth = 0;
    double h_hypo = 0;
    double h_joint = 0;
    double mutual_info = 0;
};

inline EntropyStats entropy_stats(const ContingencyTable& table) {
    const auto n = static_cast<double>(table.total());
    auto plogp = [n](ContingencyTable::Count c) {
        if (c == 0) {
            return 0.0;
        }
        double p = static_cast<double>(c) / n;
        return -p * std::log(p);
    };

    EntropyStats out;
    for (auto s : table.row_sums()) {
        out.h_truth += plogp(s);
    }
    for (auto s : table.col_sums()) {
        out.h_hypo += plogp(s);
    }

    const auto& a = table.row_sums();
    const auto& b = table.col_sums();
    double mi = 0;
    for (std::size_t t = 0; t < table.rows(); ++t) {
        for (std::size_t k = 0; k < table.cols(); ++k) {
            auto c = table.count(t, k);
            if (c == 0) {
                continue;
            }
            out.h_joint += plogp(c);
            double ratio = static_cast<double>(c) * n / (static_cast<double>(a[t]) * static_cast<double>(b[k]));
            mi += static_cast<double>(c) / n * std::log(ratio);
        }
    }
    out.mutual_info = std::clamp(mi, 0.0, std::min(out.h_truth, out.h_hypo));
    return out;
}

struct InformationScores {
    double nmi = 0;
    double v_measure = 0;
    /// In nats.
    double vi = 0;
    /// VI / H(joint), a distance in [0, 1].
    double nvi = 0;
};

inline InformationScores information_scores(const ContingencyTable& table) {
    auto e = entropy_stats(table);
    InformationScores out;

    const bool truth_trivial = table.rows() == 1;
    const bool hypo_trivial = table.cols() == 1;
    if (truth_trivial && hypo_trivial) {
        out.nmi = 1;
        out.v_measure = 1;
    } else if (truth_trivial || hypo_trivial) {
        out.nmi = 0;
        out.v_measure = 0;
    } else {
        out.nmi = std::min(1.0, e.mutual_info / std::sqrt(e.h_truth * e.h_hypo));
        out.v_measure = std::min(1.0, 2 * e.mutual_info / (e.h_truth + e.h_hypo));
    }

    out.vi = std::max(0.0, e.h_truth + e.h_hypo - 2 * e.mutual_info);
    out.nvi = e.h_joint > 0 ? std::clamp(out.vi / e.h_joint, 0.0, 1.0) : 0.0;
    return out;
}

/// All measures for one truth/hypothesis pair, plus the matching behind J.
struct ScoreReport {
    double j = 0;
    double recall_sum = 0;
    double precision_sum = 0;
    double h_score = 0;
    double f_score = 0;
    double ri = 0;
    double ari = 0;
    double nmi = 0;
    double v_measure = 0;
    double vi = 0;
    double nvi = 0;
    BidirectionalMatching matching;
};

/// Requires N >= 2 for the pair-counting measures.
inline ScoreReport score_all(const ContingencyTable& table) {
    ScoreReport out;
    auto js = j_score(table);
    out.j = js.j;
    out.recall_sum = js.recall_sum;
    out.precision_sum = js.precision_sum;
    out.matching = std::move(js.matching);
    out.h_score = h_score(table);
    out.f_score = f_score(table);
    auto pc = pair_counting_scores(table);
    out.ri = pc.ri;
    out.ari = pc.ari;
    auto info = information_scores(table);
    out.nmi = info.nmi;
    out.v_measure = info.v_measure;
    out.vi = info.vi;
    out.nvi = info.nvi;
    return out;
}

} // namespace jscore
