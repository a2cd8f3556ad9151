#pragma once

// Random instance generators and independent reference implementations for tests.
// Nothing here calls into the contingency / measure code paths it is used to check.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "jscore/labeling.hpp"
#include "jscore/random.hpp"

namespace jscore::testkit {

/// Random label vector of length n over at most `max_groups` names drawn from `alphabet`.
inline std::vector<std::string> random_labels(RandomStream& rng, std::size_t n, std::size_t max_groups,
                                              const std::string& prefix) {
    std::size_t groups = 1 + static_cast<std::size_t>(rng.below(max_groups));
    std::vector<std::string> out(n);
    for (auto& l : out) {
        l = prefix + std::to_string(rng.below(groups));
    }
    return out;
}

struct LabelPair {
    std::vector<std::string> truth;
    std::vector<std::string> hypo;
};

inline LabelPair random_pair(RandomStream& rng, std::size_t min_n, std::size_t max_n, std::size_t max_groups) {
    std::size_t n = static_cast<std::size_t>(rng.between(min_n, max_n));
    return {random_labels(rng, n, max_groups, "t"), random_labels(rng, n, max_groups, "c")};
}

/// Naive J: explicit point sets, set intersection/union per pair, no contingency table.
inline double naive_j(const std::vector<std::string>& truth, const std::vector<std::string>& hypo) {
    std::map<std::string, std::set<std::size_t>> classes, clusters;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        classes[truth[i]].insert(i);
        clusters[hypo[i]].insert(i);
    }
    auto jaccard = [](const std::set<std::size_t>& a, const std::set<std::size_t>& b) {
        std::vector<std::size_t> inter, uni;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(inter));
        std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(uni));
        return static_cast<double>(inter.size()) / static_cast<double>(uni.size());
    };
    const double n = static_cast<double>(truth.size());
    double r = 0, p = 0;
    for (const auto& [_, vt] : classes) {
        double best = 0;
        for (const auto& [__, vk] : clusters) {
            best = std::max(best, jaccard(vt, vk));
        }
        r += static_cast<double>(vt.size()) / n * best;
    }
    for (const auto& [_, vk] : clusters) {
        double best = 0;
        for (const auto& [__, vt] : classes) {
            best = std::max(best, jaccard(vt, vk));
        }
        p += static_cast<double>(vk.size()) / n * best;
    }
    return 2 * r * p / (r + p);
}

/// True when the two label vectors induce the same partition of positions.
inline bool same_partition(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    std::map<std::string, std::string> ab, ba;
    for (std::size_t i = 0; i < a.size(); ++i) {
        auto [it1, new1] = ab.try_emplace(a[i], b[i]);
        auto [it2, new2] = ba.try_emplace(b[i], a[i]);
        if (it1->second != b[i] || it2->second != a[i]) {
            return false;
        }
    }
    return true;
}

/// Applies an injective renaming to every label.
inline std::vector<std::string> rename(const std::vector<std::string>& labels, const std::string& tag) {
    std::vector<std::string> out;
    out.reserve(labels.size());
    for (const auto& l : labels) {
        // Reversing the characters and prefixing changes lexicographic order between groups.
        out.push_back(tag + std::string(l.rbegin(), l.rend()));
    }
    return out;
}

inline std::vector<std::size_t> random_permutation(RandomStream& rng, std::size_t n) {
    std::vector<std::size_t> p(n);
    for (std::size_t i = 0; i < n; ++i) {
        p[i] = i;
    }
    rng.shuffle(p);
    return p;
}

template <typename T>
std::vector<T> permute(const std::vector<T>& values, const std::vector<std::size_t>& perm) {
    std::vector<T> out;
    out.reserve(values.size());
    for (auto i : perm) {
        out.push_back(values[i]);
    }
    return out;
}

} // namespace jscore::testkit
