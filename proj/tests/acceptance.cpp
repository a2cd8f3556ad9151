// Acceptance suite: one PASS/FAIL line per criterion, details indented below it.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <sys/wait.h>
#include <vector>

#include "jscore/jscore.hpp"
#include "test_support.hpp"

using namespace jscore;

namespace {

struct Criterion {
    int id;
    std::string title;
    bool ok = true;
    std::vector<std::string> notes;

    Criterion(int i, std::string t) : id(i), title(std::move(t)) {}

    void check(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
        }
        notes.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    }
};

std::string num(double v, int digits = 4) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
    return buf;
}

double round2(double v) { return std::round(v * 100.0) / 100.0; }

Criterion vignette_regression() {
    Criterion c{1, "matching vignettes regression"};
    auto start = std::chrono::steady_clock::now();
    auto v = matching_vignettes();
    const auto& truth = v.truth.truth;
    auto b = score_all(build_contingency(truth, v.more_clusters));
    auto cc = score_all(build_contingency(truth, v.more_clusters_split));
    auto d = score_all(build_contingency(truth, v.fewer_clusters));
    auto e = score_all(build_contingency(truth, v.fewer_clusters_split));
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

    c.check(std::abs(round2(b.h_score) - 0.20) <= 0.005, "B: H = " + num(b.h_score) + " (0.20)");
    c.check(std::abs(round2(b.f_score) - 0.88) <= 0.005, "B: F = " + num(b.f_score) + " (0.88)");
    c.check(std::abs(round2(b.j) - 0.77) <= 0.005, "B: J = " + num(b.j) + " (0.77)");
    c.check(num(b.recall_sum) == "0.8000" && num(b.precision_sum) == "0.7333",
            "B: R = " + num(b.recall_sum) + ", P = " + num(b.precision_sum) + " (0.8000 / 0.7333)");
    c.check(std::abs(round2(cc.j) - 0.75) <= 0.005, "C: J = " + num(cc.j) + " (0.75)");
    c.check(cc.h_score == b.h_score && cc.f_score == b.f_score, "C: H and F unchanged from B");
    c.check(std::abs(round2(d.j) - 0.39) <= 0.005, "D: J = " + num(d.j) + " (0.39)");
    c.check(e.j < d.j, "E: J = " + num(e.j) + " < J(D)");
    c.check(e.h_score == d.h_score && e.f_score == d.f_score, "E: H and F unchanged from D");
    c.check(std::abs(e.j - 0.38) <= 0.01, "E: |J - 0.38| <= 0.01");
    c.check(elapsed < 1.0, "runtime " + num(elapsed, 3) + " s < 1 s");
    return c;
}

SweepConfig inference_config(std::size_t classes) {
    SweepConfig config;
    config.n_points = 1000;
    config.n_true_classes = classes;
    config.k_min = 1;
    config.k_max = 50;
    config.repetitions = 200;
    config.seed = 7;
    config.threads = 0;
    config.generator = Generator::split_merge;
    config.measures = default_sweep_measures();
    return config;
}

Criterion class_count_inference() {
    Criterion c{2, "class-count inference (N=1000, K=1..50, 200 reps)"};
    {
        auto r = run_inference_sweep(inference_config(10));
        for (auto m : {Measure::j, Measure::f_score, Measure::ari, Measure::nmi}) {
            auto k = r.curve(m).best_k;
            c.check(k == 10, "T=10 " + std::string(measure_name(m)) + " argmax K=" + std::to_string(k) + " (== 10)");
        }
        for (auto m : {Measure::v_measure, Measure::ri, Measure::one_minus_nvi}) {
            auto k = r.curve(m).best_k;
            c.check(k > 10, "T=10 " + std::string(measure_name(m)) + " argmax K=" + std::to_string(k) + " (> 10)");
        }
    }
    {
        auto r = run_inference_sweep(inference_config(5));
        auto k = r.curve(Measure::j).best_k;
        c.check(k == 5, "T=5 j argmax K=" + std::to_string(k) + " (== 5)");
        for (auto m : {Measure::f_score, Measure::v_measure, Measure::ri, Measure::ari, Measure::nmi,
                       Measure::one_minus_nvi}) {
            auto km = r.curve(m).best_k;
            c.check(km > 5, "T=5 " + std::string(measure_name(m)) + " argmax K=" + std::to_string(km) + " (> 5)");
        }
    }
    return c;
}

// At most two local decreases along the curve, each smaller than 0.005.
void check_nondecreasing(Criterion& c, const MeasureCurve& curve) {
    int drops = 0;
    double worst = 0;
    for (std::size_t i = 1; i < curve.cells.size(); ++i) {
        double d = curve.cells[i - 1].mean - curve.cells[i].mean;
        if (d > 0) {
            ++drops;
            worst = std::max(worst, d);
        }
    }
    c.check(drops <= 2 && worst < 0.005, std::string(measure_name(curve.measure)) + " nondecreasing in K: " +
                                             std::to_string(drops) + " local decreases, largest " + num(worst, 5));
}

Criterion baseline_stability() {
    Criterion c{3, "baseline stability (N=1000, K=2..50, 200 random pairs)"};
    SweepConfig config;
    config.n_points = 1000;
    config.k_min = 2;
    config.k_max = 50;
    config.repetitions = 200;
    config.seed = 7;
    config.threads = 0;
    config.generator = Generator::random;
    config.measures = default_sweep_measures();
    auto r = run_baseline_sweep(config);

    double worst_ari = 0;
    for (const auto& cell : r.curve(Measure::ari).cells) {
        worst_ari = std::max(worst_ari, std::abs(cell.mean));
    }
    c.check(worst_ari < 0.01, "max |mean ARI| = " + num(worst_ari, 5) + " < 0.01");

    double lo = 1, hi = 0;
    for (const auto& cell : r.curve(Measure::j).cells) {
        if (cell.k >= 12) {
            lo = std::min(lo, cell.mean);
            hi = std::max(hi, cell.mean);
        }
    }
    c.check(lo >= 0.05 && hi <= 0.11, "mean J for K>=12 in [" + num(lo) + ", " + num(hi) + "] within [0.05, 0.11]");
    c.check(hi - lo < 0.03, "mean J spread over K=12..50 = " + num(hi - lo) + " < 0.03");

    bool f_above = true;
    const auto& f = r.curve(Measure::f_score).cells;
    const auto& j = r.curve(Measure::j).cells;
    for (std::size_t i = 0; i < f.size(); ++i) {
        f_above = f_above && f[i].mean > j[i].mean;
    }
    c.check(f_above, "mean F > mean J at every K");

    for (auto m : {Measure::ri, Measure::nmi, Measure::v_measure, Measure::one_minus_nvi}) {
        check_nondecreasing(c, r.curve(m));
    }
    return c;
}

Criterion oracle_equivalence() {
    Criterion c{4, "oracle equivalence (500 random pairs, N<=100, T,K<=8)"};
    RandomStream rng(2024);
    int pair_mismatch = 0;
    double worst = 0;
    for (int iter = 0; iter < 500; ++iter) {
        auto p = testkit::random_pair(rng, 2, 100, 8);
        auto t = build_labeling(p.truth);
        auto h = build_labeling(p.hypo);
        auto table = build_contingency(t, h);
        pair_mismatch += !(pair_counts(table) == brute_force_pair_oracle(t, h));
        worst = std::max(worst, std::abs(j_score(table).j - testkit::naive_j(p.truth, p.hypo)));
    }
    c.check(pair_mismatch == 0, "pair counts equal brute force on all instances (" + std::to_string(pair_mismatch) +
                                    " mismatches)");
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", worst);
    c.check(worst <= 1e-12, std::string("max |J - naive J| = ") + buf + " <= 1e-12");
    return c;
}

Criterion property_suite() {
    Criterion c{5, "property suite (symmetry, invariance, bounds, identity, sandwich)"};
    RandomStream rng(4048);
    int asym = 0, variant = 0, out_of_bounds = 0, identity = 0, sandwich = 0;
    auto scores = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        return score_all(build_contingency(build_labeling(a), build_labeling(b)));
    };
    auto close = [](const ScoreReport& x, const ScoreReport& y) {
        auto near = [](double a, double b) { return std::abs(a - b) <= 1e-12; };
        return x.j == y.j && near(x.h_score, y.h_score) && near(x.f_score, y.f_score) && near(x.ri, y.ri) &&
               near(x.ari, y.ari) && near(x.nmi, y.nmi) && near(x.v_measure, y.v_measure) && near(x.vi, y.vi) &&
               near(x.nvi, y.nvi);
    };
    for (int iter = 0; iter < 1000; ++iter) {
        auto p = testkit::random_pair(rng, 2, 120, 8);
        auto s = scores(p.truth, p.hypo);
        asym += s.j != scores(p.hypo, p.truth).j;

        auto perm = testkit::random_permutation(rng, p.truth.size());
        variant += !close(s, scores(testkit::rename(p.truth, "R"), testkit::rename(p.hypo, "S")));
        variant += !close(s, scores(testkit::permute(p.truth, perm), testkit::permute(p.hypo, perm)));

        bool bounded = s.j > 0 && s.j <= 1 && s.ari <= 1 && s.vi >= 0;
        for (double x : {s.h_score, s.f_score, s.ri, s.nmi, s.v_measure, s.nvi}) {
            bounded = bounded && x >= 0 && x <= 1;
        }
        out_of_bounds += !bounded;

        sandwich += !(std::min(s.recall_sum, s.precision_sum) <= s.j && s.j <= std::max(s.recall_sum, s.precision_sum));

        // small instances hit identical partitions often enough to test both directions
        auto q = testkit::random_pair(rng, 1, 12, 3);
        bool same = testkit::same_partition(q.truth, q.hypo);
        double jq = j_score(build_contingency(build_labeling(q.truth), build_labeling(q.hypo))).j;
        identity += (jq == 1.0) != same;
        identity += j_score(build_contingency(build_labeling(q.truth), build_labeling(testkit::rename(q.truth, "z")))).j != 1.0;
    }
    c.check(asym == 0, "J(a,b) == J(b,a) exactly on 1000 pairs (" + std::to_string(asym) + " violations)");
    c.check(variant == 0, "relabel and point-order invariance for all measures (" + std::to_string(variant) +
                              " violations)");
    c.check(out_of_bounds == 0, "bounds hold (" + std::to_string(out_of_bounds) + " violations)");
    c.check(identity == 0, "J = 1 iff identical up to relabeling (" + std::to_string(identity) + " violations)");
    c.check(sandwich == 0, "min(R,P) <= J <= max(R,P) (" + std::to_string(sandwich) + " violations)");
    return c;
}

std::string capture(const std::string& args, int& status) {
    std::string out;
    FILE* pipe = popen((std::string(JSCORE_CLI) + " " + args).c_str(), "r");
    if (!pipe) {
        status = -1;
        return out;
    }
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) {
        out.append(buf, n);
    }
    int raw = pclose(pipe);
    status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    return out;
}

Criterion determinism() {
    Criterion c{6, "sweep determinism (byte-identical CSV, any worker count)"};
    const std::string runs[] = {
        "sweep inference --n 1000 --classes 10 --k-min 1 --k-max 50 --reps 200 --seed 7",
        "sweep baseline --n 1000 --k-min 2 --k-max 50 --reps 200 --seed 7",
    };
    for (const auto& args : runs) {
        int s1 = 0, s2 = 0, s3 = 0;
        auto first = capture(args + " --threads 1", s1);
        auto second = capture(args + " --threads 1", s2);
        auto parallel = capture(args + " --threads 4", s3);
        c.check(s1 == 0 && s2 == 0 && s3 == 0 && !first.empty(), "exit status 0: " + args);
        c.check(first == second, "repeat run identical (" + std::to_string(first.size()) + " bytes)");
        c.check(first == parallel, "--threads 4 identical to --threads 1");
    }
    return c;
}

} // namespace

int main() {
    std::vector<Criterion (*)()> suite{vignette_regression,    class_count_inference, baseline_stability,
                                       oracle_equivalence, property_suite,        determinism};
    int failed = 0;
    for (auto run : suite) {
        auto start = std::chrono::steady_clock::now();
        Criterion c = run();
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::cout << (c.ok ? "[PASS] " : "[FAIL] ") << c.id << ". " << c.title << " (" << num(secs, 2) << " s)\n";
        for (const auto& note : c.notes) {
            std::cout << "         " << note << '\n';
        }
        failed += !c.ok;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
