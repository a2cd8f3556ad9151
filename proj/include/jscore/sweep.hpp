#pragma once

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "contingency.hpp"
#include "error.hpp"
#include "measures.hpp"
#include "random.hpp"
#include "simulation.hpp"

/**
 * @file sweep.hpp
 * @brief Monte-Carlo sweeps over the number of clusters K.
 *
 * Each (K, repetition) cell draws from its own substream of the seed and the
 * results are aggregated in (K, repetition) order, so output does not depend on
 * how many worker threads run the cells.
 */

namespace jscore {

enum class Measure { j, f_score, h_score, ri, ari, nmi, v_measure, vi, one_minus_nvi };

inline constexpr Measure kAllMeasures[] = {Measure::j,   Measure::f_score, Measure::h_score,
                                           Measure::ri,  Measure::ari,     Measure::nmi,
                                           Measure::v_measure, Measure::vi, Measure::one_minus_nvi};

/// The seven measures compared in the class-count and baseline studies.
inline std::vector<Measure> default_sweep_measures() {
    return {Measure::j, Measure::f_score, Measure::v_measure, Measure::ri,
            Measure::ari, Measure::nmi, Measure::one_minus_nvi};
}

inline std::string_view measure_name(Measure m) {
    switch (m) {
    case Measure::j: return "j";
    case Measure::f_score: return "f";
    case Measure::h_score: return "h";
    case Measure::ri: return "ri";
    case Measure::ari: return "ari";
    case Measure::nmi: return "nmi";
    case Measure::v_measure: return "v";
    case Measure::vi: return "vi";
    case Measure::one_minus_nvi: return "one_minus_nvi";
    }
    return "?";
}

inline Measure parse_measure(std::string_view name) {
    for (auto m : kAllMeasures) {
        if (measure_name(m) == name) {
            return m;
        }
    }
    throw Error("unknown measure '" + std::string(name) + "'");
}

/// H-score and VI improve downward; everything else improves upward.
inline bool lower_is_better(Measure m) { return m == Measure::h_score || m == Measure::vi; }

inline double measure_value(const ScoreReport& r, Measure m) {
    switch (m) {
    case Measure::j: return r.j;
    case Measure::f_score: return r.f_score;
    case Measure::h_score: return r.h_score;
    case Measure::ri: return r.ri;
    case Measure::ari: return r.ari;
    case Measure::nmi: return r.nmi;
    case Measure::v_measure: return r.v_measure;
    case Measure::vi: return r.vi;
    case Measure::one_minus_nvi: return 1.0 - r.nvi;
    }
    return 0;
}

enum class Generator { split_merge, random };

struct SweepConfig {
    std::size_t n_points = 1000;
    /// Ground-truth class count; used by split_merge only.
    std::size_t n_true_classes = 10;
    std::size_t k_min = 1;
    std::size_t k_max = 50;
    std::size_t repetitions = 200;
    Generator generator = Generator::split_merge;
    std::vector<Measure> measures = default_sweep_measures();
    std::uint64_t seed = 0;
    /// Worker threads; 0 picks std::thread::hardware_concurrency().
    std::size_t threads = 1;
    /// Size model for the random generator.
    SizeModel size_model = SizeModel::multinomial;
    /// Draw a fresh Gaussian truth in every cell instead of one per sweep.
    bool regenerate_truth = false;
};

struct SweepCell {
    std::size_t k = 0;
    double mean = 0;
    double sd = 0;
    std::size_t reps = 0;
};

struct MeasureCurve {
    Measure measure = Measure::j;
    std::vector<SweepCell> cells;
    /// K with the best mean (argmax, or argmin for lower-is-better measures); ties go to the smaller K.
    std::size_t best_k = 0;
};

struct SweepResult {
    std::vector<MeasureCurve> curves;

    const MeasureCurve& curve(Measure m) const {
        for (const auto& c : curves) {
            if (c.measure == m) {
                return c;
            }
        }
        throw Error("measure '" + std::string(measure_name(m)) + "' not in sweep");
    }
};

inline void validate(const SweepConfig& config) {
    if (config.n_points == 0) {
        throw Error("n_points must be at least 1");
    }
    if (config.repetitions == 0) {
        throw Error("repetitions must be at least 1");
    }
    if (config.k_min == 0 || config.k_min > config.k_max) {
        throw Error("k range must satisfy 1 <= k_min <= k_max");
    }
    if (config.k_max > config.n_points) {
        throw Error("more clusters than points");
    }
    if (config.generator == Generator::split_merge &&
        (config.n_true_classes == 0 || config.n_true_classes > config.n_points)) {
        throw Error("class count must be between 1 and n_points");
    }
    if (config.measures.empty()) {
        throw Error("at least one measure is required");
    }
}

namespace detail {

// Stream tags keep the truth stream apart from the cell streams.
inline constexpr std::uint64_t kTruthTag = 0x7472757468ull;
inline constexpr std::uint64_t kCellTag = 0x63656c6cull;

inline std::vector<double> score_row(const ScoreReport& r, const std::vector<Measure>& measures) {
    std::vector<double> row;
    row.reserve(measures.size());
    for (auto m : measures) {
        row.push_back(measure_value(r, m));
    }
    return row;
}

template <typename CellFn>
SweepResult run_cells(const SweepConfig& config, CellFn&& cell) {
    const std::size_t k_count = config.k_max - config.k_min + 1;
    const std::size_t cell_count = k_count * config.repetitions;
    std::vector<std::vector<double>> scores(cell_count);

    std::atomic<std::size_t> next{0};
    std::mutex error_mutex;
    std::optional<std::size_t> failed_cell;
    std::string failure;

    auto worker = [&] {
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= cell_count) {
                return;
            }
            std::size_t k = config.k_min + idx / config.repetitions;
            std::size_t rep = idx % config.repetitions;
            try {
                scores[idx] = score_row(cell(k, rep), config.measures);
            } catch (const std::exception& ex) {
                std::lock_guard lock(error_mutex);
                // Report the first failing cell in (K, rep) order regardless of scheduling.
                if (!failed_cell || idx < *failed_cell) {
                    failed_cell = idx;
                    failure = "sweep cell K=" + std::to_string(k) + " repetition=" + std::to_string(rep) + ": " +
                              ex.what();
                }
            }
        }
    };

    std::size_t threads = config.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : config.threads;
    threads = std::min(threads, cell_count);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) {
            pool.emplace_back(worker);
        }
    }
    if (failed_cell) {
        throw Error(failure);
    }

    SweepResult out;
    for (std::size_t m = 0; m < config.measures.size(); ++m) {
        MeasureCurve curve;
        curve.measure = config.measures[m];
        for (std::size_t ki = 0; ki < k_count; ++ki) {
            const std::size_t base = ki * config.repetitions;
            double sum = 0;
            for (std::size_t r = 0; r < config.repetitions; ++r) {
                sum += scores[base + r][m];
            }
            const double mean = sum / static_cast<double>(config.repetitions);
            double ss = 0;
            for (std::size_t r = 0; r < config.repetitions; ++r) {
                double d = scores[base + r][m] - mean;
                ss += d * d;
            }
            double sd = config.repetitions > 1 ? std::sqrt(ss / static_cast<double>(config.repetitions - 1)) : 0.0;
            curve.cells.push_back({config.k_min + ki, mean, sd, config.repetitions});
        }

        const bool lower = lower_is_better(curve.measure);
        std::size_t best = 0;
        for (std::size_t i = 1; i < curve.cells.size(); ++i) {
            double v = curve.cells[i].mean;
            double b = curve.cells[best].mean;
            if (lower ? v < b : v > b) {
                best = i;
            }
        }
        curve.best_k = curve.cells[best].k;
        out.curves.push_back(std::move(curve));
    }
    return out;
}

} // namespace detail

/**
 * Class-count inference: one Gaussian truth of n_true_classes equal-size
 * classes, and for every K in range `repetitions` split/merge hypotheses
 * scored against it.
 */
inline SweepResult run_inference_sweep(const SweepConfig& config) {
    validate(config);
    if (config.generator != Generator::split_merge) {
        throw Error("inference sweep requires the split_merge generator");
    }
    const auto spec = ladder_spec(equal_sizes(config.n_points, config.n_true_classes));
    RandomStream truth_rng(config.seed, {detail::kTruthTag});
    const auto fixed_truth = generate_gaussian_dataset(spec, truth_rng).truth;

    return detail::run_cells(config, [&](std::size_t k, std::size_t rep) {
        RandomStream rng(config.seed, {detail::kCellTag, k, rep});
        if (config.regenerate_truth) {
            auto truth = generate_gaussian_dataset(spec, rng).truth;
            return score_all(build_contingency(truth, split_merge_partition(truth, k, rng)));
        }
        return score_all(build_contingency(fixed_truth, split_merge_partition(fixed_truth, k, rng)));
    });
}

/// Baseline: for every K, pairs of independent random partitions of the same points.
inline SweepResult run_baseline_sweep(const SweepConfig& config) {
    validate(config);
    if (config.generator != Generator::random) {
        throw Error("baseline sweep requires the random generator");
    }
    return detail::run_cells(config, [&](std::size_t k, std::size_t rep) {
        RandomStream rng(config.seed, {detail::kCellTag, k, rep});
        auto a = random_partition(config.n_points, k, rng, config.size_model);
        auto b = random_partition(config.n_points, k, rng, config.size_model);
        return score_all(build_contingency(a, b));
    });
}

/// Shortest decimal form that round-trips; independent of the C locale.
inline std::string format_number(double value) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, res.ptr);
}

/// `measure,k,mean,sd,reps` rows followed by one `# argmax <measure> <k>` line per measure.
inline void write_sweep_csv(std::ostream& out, const SweepResult& result) {
    out << "measure,k,mean,sd,reps\n";
    for (const auto& curve : result.curves) {
        for (const auto& cell : curve.cells) {
            out << measure_name(curve.measure) << ',' << cell.k << ',' << format_number(cell.mean) << ','
                << format_number(cell.sd) << ',' << cell.reps << '\n';
        }
    }
    for (const auto& curve : result.curves) {
        out << "# argmax " << measure_name(curve.measure) << ' ' << curve.best_k << '\n';
    }
}

} // namespace jscore
