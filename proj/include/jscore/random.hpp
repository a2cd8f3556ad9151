#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "error.hpp"

/**
 * @file random.hpp
 * @brief Seedable, splittable random stream.
 *
 * Integer draws and shuffles are implemented here instead of through
 * std::uniform_int_distribution / std::shuffle so that every label sequence
 * is identical across standard library implementations. Gaussian draws use
 * std::normal_distribution; those values never feed a score.
 */

namespace jscore {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed) : RandomStream(seed, {}) {}

    /**
     * Independent substream addressed by a seed and a path of tags, e.g.
     * (seed, {k, repetition}). Streams with different paths do not share state,
     * so cells of a sweep can be drawn in any order.
     */
    RandomStream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
        std::vector<std::uint32_t> words;
        auto push = [&](std::uint64_t v) {
            words.push_back(static_cast<std::uint32_t>(v));
            words.push_back(static_cast<std::uint32_t>(v >> 32));
        };
        push(seed);
        push(path.size());
        for (auto p : path) {
            push(p);
        }
        std::seed_seq seq(words.begin(), words.end());
        engine_.seed(seq);
    }

    std::uint64_t next() { return engine_(); }

    /// Uniform integer in [0, bound). Rejection sampling, no modulo bias.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) {
            throw Error("empty range");
        }
        const std::uint64_t limit = -bound % bound; // 2^64 mod bound
        while (true) {
            std::uint64_t x = engine_();
            if (x >= limit) {
                return x % bound;
            }
        }
    }

    /// Uniform integer in [lo, hi].
    std::uint64_t between(std::uint64_t lo, std::uint64_t hi) { return lo + below(hi - lo + 1); }

    double normal(double mean, double sd) { return std::normal_distribution<double>(mean, sd)(engine_); }

    /// Fisher-Yates.
    template <typename T>
    void shuffle(std::vector<T>& values) {
        for (std::size_t i = values.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(values[i - 1], values[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

} // namespace jscore
