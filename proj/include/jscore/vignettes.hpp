#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "labeling.hpp"
#include "random.hpp"
#include "simulation.hpp"

/**
 * @file vignettes.hpp
 * @brief The five hand-built structures that illustrate the problem of matching:
 * a 3-class truth (sizes 10/30/60 at means 1/2/3) and four predetermined hypotheses.
 *
 * - more_clusters:       Ta, Tb whole; Tc split 40/20 into K3/K4.
 * - more_clusters_split: as above with K4 split evenly into K4.1/K4.2.
 * - fewer_clusters:      K1 takes the first 70% of every class, K2 the rest.
 * - fewer_clusters_split: as above with K2 split evenly by alternating its
 *   members into K2.1/K2.2, so neither half becomes a better match for any class.
 */

namespace jscore {

struct MatchingVignettes {
    LabeledDataset truth;
    Labeling more_clusters;
    Labeling more_clusters_split;
    Labeling fewer_clusters;
    Labeling fewer_clusters_split;
};

inline MatchingVignettes matching_vignettes(std::uint64_t seed = 1) {
    GaussianClassSpec spec{{{1.0, 10, "Ta"}, {2.0, 30, "Tb"}, {3.0, 60, "Tc"}}, 0.05};
    RandomStream rng(seed);
    auto data = generate_gaussian_dataset(spec, rng);

    std::vector<std::string> b(100), c(100), d(100), e(100);
    for (std::size_t i = 0; i < 100; ++i) {
        if (i < 10) {
            b[i] = "K1";
        } else if (i < 40) {
            b[i] = "K2";
        } else if (i < 80) {
            b[i] = "K3";
        } else {
            b[i] = "K4";
        }
        c[i] = b[i];
        if (i >= 80) {
            c[i] = i < 90 ? "K4.1" : "K4.2";
        }
    }

    // First 70% of each class (by index) into K1.
    const std::size_t starts[] = {0, 10, 40, 100};
    std::size_t alternate = 0;
    for (std::size_t cls = 0; cls < 3; ++cls) {
        std::size_t size = starts[cls + 1] - starts[cls];
        std::size_t keep = size * 7 / 10;
        for (std::size_t i = starts[cls]; i < starts[cls + 1]; ++i) {
            if (i - starts[cls] < keep) {
                d[i] = "K1";
                e[i] = "K1";
            } else {
                d[i] = "K2";
                e[i] = (alternate++ % 2 == 0) ? "K2.1" : "K2.2";
            }
        }
    }

    return {std::move(data), build_labeling(b), build_labeling(c), build_labeling(d), build_labeling(e)};
}

} // namespace jscore
