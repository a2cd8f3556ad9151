// jscore: score label files, match similarity tables, and run Monte-Carlo sweeps.

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "jscore/jscore.hpp"
#include "jscore/report.hpp"

namespace {

using namespace jscore;

std::string fixed2(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open '" + path + "'");
    }
    return in;
}

void print_matches(std::ostream& out, const std::vector<MatchAssignment>& matches, bool parenthesize) {
    for (const auto& m : matches) {
        out << "  " << std::left << std::setw(12) << m.reference_group << ' '
            << std::setw(14) << (parenthesize ? "(" + m.matched_group + ")" : "[" + m.matched_group + "]") << ' '
            << fixed2(m.similarity) << '\n';
    }
}

struct ScoreOptions {
    std::string path;
    bool tsv = false;
    bool verbose = false;
    bool json = false;
};

int run_score(const ScoreOptions& opt) {
    auto in = open_input(opt.path);
    LabelTable labels;
    ContingencyTable table = [&] {
        try {
            labels = read_label_file(in, opt.tsv ? '\t' : ',');
            return build_contingency(build_labeling(labels.truth), build_labeling(labels.hypo));
        } catch (const Error& ex) {
            throw Error(opt.path + ": " + ex.what());
        }
    }();
    ReportDocument doc = [&] {
        try {
            return make_report(table);
        } catch (const Error& ex) {
            throw Error(opt.path + ": " + ex.what());
        }
    }();

    if (opt.json) {
        std::cout << nlohmann::json(doc).dump(2) << '\n';
        return 0;
    }

    const auto& s = doc.scores;
    std::cout << "N=" << doc.n << " T=" << doc.t << " K=" << doc.k << '\n';
    const std::pair<const char*, double> rows[] = {
        {"j", s.j},     {"h_score", s.h_score}, {"f_score", s.f_score},     {"ri", s.ri},   {"ari", s.ari},
        {"nmi", s.nmi}, {"v_measure", s.v_measure}, {"vi", s.vi}, {"nvi", s.nvi},
    };
    for (const auto& [name, value] : rows) {
        std::cout << std::left << std::setw(10) << name << ' ' << fixed2(value) << '\n';
    }
    if (opt.verbose) {
        std::cout << "R=" << fixed2(s.recall_sum) << " P=" << fixed2(s.precision_sum) << '\n';
        std::cout << "class -> cluster\n";
        print_matches(std::cout, s.matching.class_to_cluster, false);
        std::cout << "cluster -> class\n";
        print_matches(std::cout, s.matching.cluster_to_class, true);
    }
    return 0;
}

int run_match(const std::string& path, bool tsv) {
    auto in = open_input(path);
    BidirectionalMatching matching;
    try {
        matching = match_sets(read_similarity_table(in, tsv ? '\t' : ','));
    } catch (const Error& ex) {
        throw Error(path + ": " + ex.what());
    }
    std::cout << "class -> cluster\n";
    print_matches(std::cout, matching.class_to_cluster, false);
    std::cout << "cluster -> class\n";
    print_matches(std::cout, matching.cluster_to_class, true);
    return 0;
}

struct SweepOptions {
    std::size_t n = 1000;
    std::size_t classes = 10;
    std::optional<std::size_t> k_min;
    std::size_t k_max = 50;
    std::size_t reps = 200;
    std::uint64_t seed = 0;
    std::vector<std::string> measures;
    std::string out;
    std::size_t threads = 1;
    std::string sizes = "multinomial";
    bool regenerate_truth = false;
};

int run_sweep(const SweepOptions& opt, bool inference) {
    SweepConfig config;
    config.n_points = opt.n;
    config.n_true_classes = opt.classes;
    config.k_min = opt.k_min.value_or(inference ? 1 : 2);
    config.k_max = opt.k_max;
    config.repetitions = opt.reps;
    config.seed = opt.seed;
    config.threads = opt.threads;
    config.regenerate_truth = opt.regenerate_truth;
    config.generator = inference ? Generator::split_merge : Generator::random;
    config.size_model = opt.sizes == "composition" ? SizeModel::composition : SizeModel::multinomial;
    if (!opt.measures.empty()) {
        config.measures.clear();
        for (const auto& name : opt.measures) {
            try {
                config.measures.push_back(parse_measure(name));
            } catch (const Error& ex) {
                throw CLI::ValidationError("--measures", ex.what());
            }
        }
    }
    if (config.k_min > config.k_max) {
        throw CLI::ValidationError("--k-min", "must not exceed --k-max");
    }
    if (config.k_max > config.n_points) {
        throw CLI::ValidationError("--k-max", "must not exceed --n");
    }
    if (inference && config.n_true_classes > config.n_points) {
        throw CLI::ValidationError("--classes", "must not exceed --n");
    }

    auto result = inference ? run_inference_sweep(config) : run_baseline_sweep(config);
    if (opt.out.empty()) {
        write_sweep_csv(std::cout, result);
    } else {
        std::ofstream file(opt.out, std::ios::binary);
        if (!file) {
            throw Error("cannot write '" + opt.out + "'");
        }
        write_sweep_csv(file, result);
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"J-score clustering accuracy: scoring, set matching and simulation sweeps"};
    app.require_subcommand(1);
    app.set_version_flag("--version", jscore::kToolVersion);

    ScoreOptions score;
    auto* score_cmd = app.add_subcommand("score", "Score a label file (header + true,cluster or id,true,cluster)");
    score_cmd->add_option("file", score.path, "Label file")->required();
    score_cmd->add_flag("--tsv", score.tsv, "Tab-delimited input");
    score_cmd->add_flag("-v,--verbose", score.verbose, "Print bidirectional matching tables");
    score_cmd->add_flag("--json", score.json, "Emit the full-precision JSON report");

    std::string match_path;
    bool match_tsv = false;
    auto* match_cmd = app.add_subcommand("match", "Bidirectional best matches for an arbitrary similarity table");
    match_cmd->add_option("file", match_path, "Similarity table with row and column headers")->required();
    match_cmd->add_flag("--tsv", match_tsv, "Tab-delimited input");

    SweepOptions sweep;
    auto* sweep_cmd = app.add_subcommand("sweep", "Monte-Carlo sweep over the number of clusters");
    sweep_cmd->require_subcommand(1);
    auto add_sweep_flags = [&](CLI::App* cmd) {
        cmd->add_option("--n", sweep.n, "Number of points")->check(CLI::PositiveNumber);
        cmd->add_option("--classes", sweep.classes, "True class count (inference)")->check(CLI::PositiveNumber);
        cmd->add_option("--k-min", sweep.k_min, "Smallest K (default 1 for inference, 2 for baseline)")->check(CLI::PositiveNumber);
        cmd->add_option("--k-max", sweep.k_max, "Largest K")->check(CLI::PositiveNumber);
        cmd->add_option("--reps", sweep.reps, "Repetitions per K")->check(CLI::PositiveNumber);
        cmd->add_option("--seed", sweep.seed, "Random seed");
        cmd->add_option("--measures", sweep.measures, "Comma-separated measures (j,f,h,ri,ari,nmi,v,vi,one_minus_nvi)")
            ->delimiter(',');
        cmd->add_option("--out", sweep.out, "Write CSV here instead of standard output");
        cmd->add_option("--threads", sweep.threads, "Worker threads (0 = all cores)");
        cmd->add_option("--sizes", sweep.sizes, "Random partition size model (baseline)")
            ->check(CLI::IsMember({"multinomial", "composition"}));
        cmd->add_flag("--regenerate-truth", sweep.regenerate_truth, "Draw a new truth per cell (inference)");
    };
    auto* inference_cmd = sweep_cmd->add_subcommand("inference", "Split/merge hypotheses against a Gaussian truth");
    auto* baseline_cmd = sweep_cmd->add_subcommand("baseline", "Pairs of independent random partitions");
    add_sweep_flags(inference_cmd);
    add_sweep_flags(baseline_cmd);

    try {
        app.parse(argc, argv);
        if (*score_cmd) {
            return run_score(score);
        }
        if (*match_cmd) {
            return run_match(match_path, match_tsv);
        }
        return run_sweep(sweep, static_cast<bool>(*inference_cmd));
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
