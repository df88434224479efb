// Command-line front end: bench (parameter sweeps -> CSV), detect (seeded
// community detection on a real network), gen (emit a benchmark graph), and
// score (NMI between two community files). Talks to the library through the
// C API only.

#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "abwalk/abwalk.h"

namespace {

int exit_code_for(abw_status status) {
    switch (status) {
        case ABW_OK:
            return 0;
        case ABW_ERR_ARGUMENT:
        case ABW_ERR_PARSE:
        case ABW_ERR_CONFIG:
            return 1;
        default:
            return 2;
    }
}

int report(abw_status status, const char* stage) {
    if (status == ABW_OK) return 0;
    std::fprintf(stderr, "abwalk: %s: %s\n", stage, abw_last_error());
    return exit_code_for(status);
}

// plain key=value config file; '#' comments; flags given on the command
// line win over file values
std::map<std::string, std::string> load_config(const std::string& path) {
    std::map<std::string, std::string> kv;
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--config", "expected key=value: " + line);
        auto trim = [](std::string s) {
            size_t b = s.find_first_not_of(" \t\r");
            size_t e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        kv[trim(line.substr(0, eq))] = trim(line.substr(eq + 1));
    }
    return kv;
}

std::vector<double> parse_values(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::stod(tok));
    return out;
}

struct BenchOptions {
    abw_experiment_spec spec{};
    std::string config_path;
    std::string sweep_name = "mu";
    std::string sweep_values_csv = "0.1,0.2,0.3,0.4,0.5,0.6,0.7,0.8";
    std::string mode = "disjoint";
    std::string out = "-";
    std::vector<double> values;
};

void apply_config_file(BenchOptions& opt, const CLI::App& cmd) {
    if (opt.config_path.empty()) return;
    auto kv = load_config(opt.config_path);
    auto has_flag = [&](const std::string& name) {
        return cmd.count("--" + name) > 0;
    };
    auto getd = [&](const char* key, double& slot, const char* flag) {
        if (kv.contains(key) && !has_flag(flag)) slot = std::stod(kv.at(key));
    };
    auto geti = [&](const char* key, int32_t& slot, const char* flag) {
        if (kv.contains(key) && !has_flag(flag)) slot = std::stoi(kv.at(key));
    };
    auto& b = opt.spec.benchmark;
    geti("n", b.n, "n");
    getd("avg_degree", b.avg_degree, "avg-degree");
    geti("max_degree", b.max_degree, "max-degree");
    getd("degree_exponent", b.degree_exponent, "degree-exponent");
    getd("community_exponent", b.community_exponent, "community-exponent");
    geti("c_min", b.c_min, "c-min");
    geti("c_max", b.c_max, "c-max");
    getd("mu", b.mu, "mu");
    getd("overlap_fraction", b.overlap_fraction, "overlap-fraction");
    geti("memberships_per_overlap_node", b.memberships_per_overlap_node, "memberships");
    getd("seed_fraction", opt.spec.seed_fraction, "seed-fraction");
    geti("iterations", opt.spec.iterations, "iterations");
    getd("epsilon", opt.spec.epsilon, "epsilon");
    geti("reps", opt.spec.repetitions, "reps");
    getd("tol", opt.spec.rel_tolerance, "tol");
    geti("workers", opt.spec.workers, "workers");
    if (kv.contains("rng_seed") && !has_flag("rng-seed"))
        opt.spec.rng_seed = std::stoull(kv.at("rng_seed"));
    if (kv.contains("mode") && !has_flag("mode")) opt.mode = kv.at("mode");
    if (kv.contains("sweep") && !has_flag("sweep")) opt.sweep_name = kv.at("sweep");
    if (kv.contains("sweep_values") && !has_flag("sweep-values"))
        opt.sweep_values_csv = kv.at("sweep_values");
    if (kv.contains("out") && !has_flag("out")) opt.out = kv.at("out");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semi-supervised community detection via absorbing random walks"};
    app.require_subcommand(1);

    // ---- bench ----
    BenchOptions bench;
    abw_experiment_spec_default(&bench.spec);
    auto* cmd_bench = app.add_subcommand("bench", "Run a benchmark sweep and emit CSV");
    cmd_bench->add_option("--config", bench.config_path, "key=value config file");
    cmd_bench->add_option("--n", bench.spec.benchmark.n, "node count");
    cmd_bench->add_option("--avg-degree", bench.spec.benchmark.avg_degree);
    cmd_bench->add_option("--max-degree", bench.spec.benchmark.max_degree);
    cmd_bench->add_option("--degree-exponent", bench.spec.benchmark.degree_exponent);
    cmd_bench->add_option("--community-exponent", bench.spec.benchmark.community_exponent);
    cmd_bench->add_option("--c-min", bench.spec.benchmark.c_min);
    cmd_bench->add_option("--c-max", bench.spec.benchmark.c_max);
    cmd_bench->add_option("--mu", bench.spec.benchmark.mu, "fixed mixing parameter");
    cmd_bench->add_option("--overlap-fraction", bench.spec.benchmark.overlap_fraction);
    cmd_bench->add_option("--memberships",
                          bench.spec.benchmark.memberships_per_overlap_node);
    cmd_bench->add_option("--seed-fraction", bench.spec.seed_fraction);
    cmd_bench->add_option("--iterations", bench.spec.iterations);
    cmd_bench->add_option("--epsilon", bench.spec.epsilon);
    cmd_bench->add_option("--reps", bench.spec.repetitions);
    cmd_bench->add_option("--rng-seed", bench.spec.rng_seed);
    cmd_bench->add_option("--tol", bench.spec.rel_tolerance);
    cmd_bench->add_option("--workers", bench.spec.workers);
    cmd_bench->add_option("--mode", bench.mode, "disjoint|overlapping");
    cmd_bench->add_option("--sweep", bench.sweep_name, "mu|overlap_fraction");
    cmd_bench->add_option("--sweep-values", bench.sweep_values_csv, "comma-separated");
    cmd_bench->add_option("--out", bench.out, "CSV path, '-' for stdout");

    // ---- detect ----
    std::string det_graph, det_seeds, det_out = "-", det_mode = "disjoint";
    int det_iterations = 1;
    double det_epsilon = 0.1, det_tol = 1e-10;
    bool det_zero_indexed = false;
    auto* cmd_detect = app.add_subcommand("detect", "Classify a network from seed nodes");
    cmd_detect->add_option("graph", det_graph, "edge-list file")->required();
    cmd_detect->add_option("seeds", det_seeds, "seed file")->required();
    cmd_detect->add_option("--mode", det_mode, "disjoint|overlapping");
    cmd_detect->add_option("--iterations", det_iterations);
    cmd_detect->add_option("--epsilon", det_epsilon);
    cmd_detect->add_option("--tol", det_tol);
    cmd_detect->add_flag("--zero-indexed", det_zero_indexed, "edge list is 0-indexed");
    cmd_detect->add_option("--out", det_out, "assignment file, '-' for stdout");

    // ---- gen ----
    abw_benchmark_config gen_cfg;
    abw_benchmark_config_default(&gen_cfg);
    std::string gen_network = "network.dat", gen_community = "community.dat";
    auto* cmd_gen = app.add_subcommand("gen", "Generate a benchmark graph to files");
    cmd_gen->add_option("--n", gen_cfg.n);
    cmd_gen->add_option("--avg-degree", gen_cfg.avg_degree);
    cmd_gen->add_option("--max-degree", gen_cfg.max_degree);
    cmd_gen->add_option("--degree-exponent", gen_cfg.degree_exponent);
    cmd_gen->add_option("--community-exponent", gen_cfg.community_exponent);
    cmd_gen->add_option("--c-min", gen_cfg.c_min);
    cmd_gen->add_option("--c-max", gen_cfg.c_max);
    cmd_gen->add_option("--mu", gen_cfg.mu);
    cmd_gen->add_option("--overlap-fraction", gen_cfg.overlap_fraction);
    cmd_gen->add_option("--memberships", gen_cfg.memberships_per_overlap_node);
    cmd_gen->add_option("--rng-seed", gen_cfg.rng_seed);
    cmd_gen->add_option("--network-out", gen_network);
    cmd_gen->add_option("--community-out", gen_community);

    // ---- score ----
    std::string score_a, score_b;
    bool score_overlapping = false;
    auto* cmd_score = app.add_subcommand("score", "NMI between two community files");
    cmd_score->add_option("found", score_a, "community file")->required();
    cmd_score->add_option("truth", score_b, "community file")->required();
    cmd_score->add_flag("--overlapping", score_overlapping, "score covers with LFK NMI");

    CLI11_PARSE(app, argc, argv);

    if (cmd_bench->parsed()) {
        try {
            apply_config_file(bench, *cmd_bench);
        } catch (const CLI::Error& e) {
            std::fprintf(stderr, "abwalk: %s\n", e.what());
            return 1;
        }
        bench.values = parse_values(bench.sweep_values_csv);
        bench.spec.sweep_values = bench.values.data();
        bench.spec.sweep_count = static_cast<int32_t>(bench.values.size());
        if (bench.sweep_name == "mu") {
            bench.spec.sweep_variable = 0;
        } else if (bench.sweep_name == "overlap_fraction") {
            bench.spec.sweep_variable = 1;
        } else {
            std::fprintf(stderr, "abwalk: unknown sweep variable '%s'\n",
                         bench.sweep_name.c_str());
            return 1;
        }
        if (bench.mode == "overlapping")
            bench.spec.mode = ABW_MODE_OVERLAPPING;
        else if (bench.mode != "disjoint") {
            std::fprintf(stderr, "abwalk: unknown mode '%s'\n", bench.mode.c_str());
            return 1;
        }
        return report(abw_run_experiment_csv(&bench.spec, bench.out.c_str()), "bench");
    }

    if (cmd_detect->parsed()) {
        abw_mode mode = det_mode == "overlapping" ? ABW_MODE_OVERLAPPING : ABW_MODE_DISJOINT;
        if (det_mode != "disjoint" && det_mode != "overlapping") {
            std::fprintf(stderr, "abwalk: unknown mode '%s'\n", det_mode.c_str());
            return 1;
        }
        return report(abw_detect_file(det_graph.c_str(), det_zero_indexed ? 0 : 1,
                                      det_seeds.c_str(), mode, det_iterations, det_epsilon,
                                      det_tol, det_out.c_str()),
                      "detect");
    }

    if (cmd_gen->parsed()) {
        abw_graph* g = nullptr;
        abw_truth* t = nullptr;
        if (int rc = report(abw_generate(&gen_cfg, &g, &t), "gen")) return rc;
        int rc = report(abw_graph_write_file(g, gen_network.c_str(), 1), "gen");
        if (rc == 0) rc = report(abw_truth_write_file(t, g, gen_community.c_str(), 1), "gen");
        abw_truth_free(t);
        abw_graph_free(g);
        return rc;
    }

    if (cmd_score->parsed()) {
        double nmi = 0.0;
        if (int rc = report(
                abw_score_files(score_a.c_str(), score_b.c_str(), score_overlapping, &nmi),
                "score"))
            return rc;
        std::printf("%.6f\n", nmi);
        return 0;
    }

    return 1;
}
