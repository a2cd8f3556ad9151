#pragma once

#include <algorithm>
#include <cstddef>
#include <iterator>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "labeling.hpp"
#include "random.hpp"

/**
 * @file simulation.hpp
 * @brief Synthetic ground truths and the three hypothetical-partition generators
 * (predetermined, random, split/merge).
 */

namespace jscore {

struct GaussianClass {
    double mean = 0;
    std::size_t size = 1;
    /// Defaults to T1, T2, ... (zero-padded) when empty.
    std::string name;
};

struct GaussianClassSpec {
    std::vector<GaussianClass> classes;
    double std_dev = 0.05;
};

struct LabeledDataset {
    std::vector<double> values;
    Labeling truth;
};

/// Draws each class from G(mean, std_dev) and concatenates them in class order.
inline LabeledDataset generate_gaussian_dataset(const GaussianClassSpec& spec, RandomStream& rng) {
    if (spec.classes.empty()) {
        throw Error("gaussian spec needs at least one class");
    }
    if (!(spec.std_dev > 0)) {
        throw Error("standard deviation must be positive");
    }
    auto defaults = numbered_names("T", spec.classes.size());
    std::vector<std::string> names;
    std::vector<Labeling::Code> codes;
    std::vector<double> values;
    for (std::size_t c = 0; c < spec.classes.size(); ++c) {
        const auto& cls = spec.classes[c];
        if (cls.size == 0) {
            throw Error("class sizes must be at least 1");
        }
        names.push_back(cls.name.empty() ? defaults[c] : cls.name);
        for (std::size_t i = 0; i < cls.size; ++i) {
            values.push_back(rng.normal(cls.mean, spec.std_dev));
            codes.push_back(static_cast<Labeling::Code>(c));
        }
    }
    return {std::move(values), Labeling::from_codes(codes, names)};
}

/// Sizes as equal as possible; the first N mod T classes get one extra point.
inline std::vector<std::size_t> equal_sizes(std::size_t n, std::size_t parts) {
    if (parts == 0 || parts > n) {
        throw Error("more clusters than points");
    }
    std::vector<std::size_t> out(parts, n / parts);
    for (std::size_t i = 0; i < n % parts; ++i) {
        ++out[i];
    }
    return out;
}

/// Classes with means 1, 2, ..., T and the given sizes.
inline GaussianClassSpec ladder_spec(const std::vector<std::size_t>& sizes, double std_dev = 0.05) {
    GaussianClassSpec spec;
    spec.std_dev = std_dev;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        spec.classes.push_back({static_cast<double>(i + 1), sizes[i], {}});
    }
    return spec;
}

/**
 * Predetermined partition: consecutive runs of points of the given sizes,
 * named K1, K2, ... (zero-padded).
 */
inline Labeling contiguous_partition(const std::vector<std::size_t>& sizes) {
    auto names = numbered_names("K", sizes.size());
    std::vector<Labeling::Code> codes;
    for (std::size_t k = 0; k < sizes.size(); ++k) {
        if (sizes[k] == 0) {
            throw Error("cluster sizes must be at least 1");
        }
        codes.insert(codes.end(), sizes[k], static_cast<Labeling::Code>(k));
    }
    return Labeling::from_codes(codes, names);
}

/// How random_partition draws cluster sizes.
enum class SizeModel {
    /// Uniform composition of N into K positive parts (K-1 distinct cut points).
    composition,
    /// Every point to a uniformly random cluster, conditioned on no cluster being empty.
    multinomial,
};

namespace detail {

inline constexpr std::size_t kMaxSurjectionAttempts = 100000;

inline std::vector<Labeling::Code> composition_codes(std::size_t n, std::size_t k, RandomStream& rng) {
    // k-1 distinct cut points from 1..n-1 by partial Fisher-Yates.
    std::vector<std::size_t> pool(n - 1);
    for (std::size_t i = 0; i < pool.size(); ++i) {
        pool[i] = i + 1;
    }
    for (std::size_t i = 0; i + 1 < k; ++i) {
        std::size_t j = i + static_cast<std::size_t>(rng.below(pool.size() - i));
        std::swap(pool[i], pool[j]);
    }
    std::vector<std::size_t> cuts(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(k - 1));
    std::sort(cuts.begin(), cuts.end());
    cuts.push_back(n);

    std::vector<Labeling::Code> codes;
    codes.reserve(n);
    std::size_t start = 0;
    for (std::size_t c = 0; c < k; ++c) {
        codes.insert(codes.end(), cuts[c] - start, static_cast<Labeling::Code>(c));
        start = cuts[c];
    }
    rng.shuffle(codes);
    return codes;
}

inline std::vector<Labeling::Code> multinomial_codes(std::size_t n, std::size_t k, RandomStream& rng) {
    std::vector<Labeling::Code> codes(n);
    if (k == n) {
        for (std::size_t i = 0; i < n; ++i) {
            codes[i] = static_cast<Labeling::Code>(i);
        }
        rng.shuffle(codes);
        return codes;
    }
    std::vector<std::size_t> seen(k);
    for (std::size_t attempt = 0; attempt < kMaxSurjectionAttempts; ++attempt) {
        std::fill(seen.begin(), seen.end(), 0);
        std::size_t filled = 0;
        for (auto& c : codes) {
            c = static_cast<Labeling::Code>(rng.below(k));
            filled += (seen[c]++ == 0);
        }
        if (filled == k) {
            return codes;
        }
    }
    throw Error("multinomial sizes: every draw left a cluster empty; use composition sizes");
}

} // namespace detail

/**
 * Random partition of n points into exactly k nonempty clusters named K1..Kk.
 * With SizeModel::composition the sizes are a uniform composition and the
 * ordered label list is then uniformly permuted.
 */
inline Labeling random_partition(std::size_t n, std::size_t k, RandomStream& rng,
                                 SizeModel model = SizeModel::composition) {
    if (k == 0) {
        throw Error("at least one cluster is required");
    }
    if (k > n) {
        throw Error("more clusters than points");
    }
    auto codes = model == SizeModel::composition ? detail::composition_codes(n, k, rng)
                                                 : detail::multinomial_codes(n, k, rng);
    return Labeling::from_codes(codes, numbered_names("K", k));
}

/**
 * Mutable list of clusters, each a sorted list of point indices. Used to derive
 * hypotheses from a truth by splitting and merging.
 */
class ClusterLayout {
public:
    static ClusterLayout from_labeling(const Labeling& labeling) {
        ClusterLayout out;
        out.points_ = labeling.size();
        out.clusters_.resize(labeling.group_count());
        auto codes = labeling.codes();
        for (std::size_t i = 0; i < codes.size(); ++i) {
            out.clusters_[codes[i]].push_back(i);
        }
        return out;
    }

    std::size_t cluster_count() const { return clusters_.size(); }
    const std::vector<std::size_t>& members(std::size_t cluster) const { return clusters_.at(cluster); }

    /// Keeps the first `first_size` members in place and appends the rest as a new cluster.
    void split(std::size_t cluster, std::size_t first_size) {
        auto& c = clusters_.at(cluster);
        if (first_size == 0 || first_size >= c.size()) {
            throw Error("split must leave at least one point on each side");
        }
        std::vector<std::size_t> tail(c.begin() + static_cast<std::ptrdiff_t>(first_size), c.end());
        c.resize(first_size);
        clusters_.push_back(std::move(tail));
    }

    /// Merges cluster `b` into cluster `a`; `b` is removed.
    void merge(std::size_t a, std::size_t b) {
        if (a == b || a >= clusters_.size() || b >= clusters_.size()) {
            throw Error("merge needs two distinct existing clusters");
        }
        std::vector<std::size_t> merged;
        merged.reserve(clusters_[a].size() + clusters_[b].size());
        std::merge(clusters_[a].begin(), clusters_[a].end(), clusters_[b].begin(), clusters_[b].end(),
                   std::back_inserter(merged));
        clusters_[a] = std::move(merged);
        clusters_.erase(clusters_.begin() + static_cast<std::ptrdiff_t>(b));
    }

    /// Clusters named K1..Kk in layout order.
    Labeling to_labeling() const {
        std::vector<Labeling::Code> codes(points_);
        for (std::size_t k = 0; k < clusters_.size(); ++k) {
            for (auto p : clusters_[k]) {
                codes[p] = static_cast<Labeling::Code>(k);
            }
        }
        return Labeling::from_codes(codes, numbered_names("K", clusters_.size()));
    }

private:
    std::size_t points_ = 0;
    std::vector<std::vector<std::size_t>> clusters_;
};

/**
 * Hypothesis with exactly k clusters derived from the truth. For k above the
 * class count, a uniformly chosen cluster with at least two points is split at
 * a uniformly random contiguous cut until k clusters exist; for k below it, two
 * uniformly chosen clusters are merged until k remain. k equal to the class
 * count returns the truth's grouping unchanged.
 */
inline Labeling split_merge_partition(const Labeling& truth, std::size_t k, RandomStream& rng) {
    if (k == 0) {
        throw Error("at least one cluster is required");
    }
    if (k > truth.size()) {
        throw Error("more clusters than points");
    }
    if (k == truth.group_count()) {
        return truth;
    }
    auto layout = ClusterLayout::from_labeling(truth);
    std::vector<std::size_t> splittable;
    while (layout.cluster_count() < k) {
        splittable.clear();
        for (std::size_t c = 0; c < layout.cluster_count(); ++c) {
            if (layout.members(c).size() >= 2) {
                splittable.push_back(c);
            }
        }
        if (splittable.empty()) {
            throw Error("cannot split further");
        }
        auto target = splittable[rng.below(splittable.size())];
        auto size = layout.members(target).size();
        layout.split(target, static_cast<std::size_t>(rng.between(1, size - 1)));
    }
    while (layout.cluster_count() > k) {
        auto a = static_cast<std::size_t>(rng.below(layout.cluster_count()));
        auto b = static_cast<std::size_t>(rng.below(layout.cluster_count() - 1));
        if (b >= a) {
            ++b;
        }
        layout.merge(std::min(a, b), std::max(a, b));
    }
    return layout.to_labeling();
}

} // namespace jscore
