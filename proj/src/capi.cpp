#include "abwalk/abwalk.h"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "abwalk/benchmark.hpp"
#include "abwalk/classify.hpp"
#include "abwalk/error.hpp"
#include "abwalk/experiment.hpp"
#include "abwalk/graph.hpp"
#include "abwalk/metrics.hpp"
#include "abwalk/seeding.hpp"

using namespace abwalk;

struct abw_graph {
    Graph g;
};
struct abw_truth {
    GroundTruth t;
};
struct abw_seeds {
    NamedSeeds s;
};
struct abw_result {
    ClassifyMode mode;
    RunResult r;
    int k;
};

namespace {

thread_local std::string g_last_error;

abw_status fail(abw_status code, const std::string& msg) {
    g_last_error = msg;
    return code;
}

template <typename F>
abw_status guarded(F&& f) {
    try {
        return f();
    } catch (const ParseError& e) {
        return fail(ABW_ERR_PARSE, e.what());
    } catch (const ConfigError& e) {
        return fail(ABW_ERR_CONFIG, e.what());
    } catch (const GenerationError& e) {
        return fail(ABW_ERR_GENERATION, e.what());
    } catch (const SolverError& e) {
        return fail(ABW_ERR_SOLVER, e.what());
    } catch (const ArgumentError& e) {
        return fail(ABW_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return fail(ABW_ERR_INTERNAL, e.what());
    }
}

abw_status require(bool cond, const char* what) {
    return cond ? ABW_OK : fail(ABW_ERR_ARGUMENT, what);
}

BenchmarkConfig to_config(const abw_benchmark_config& c) {
    BenchmarkConfig cfg;
    cfg.n = c.n;
    cfg.avg_degree = c.avg_degree;
    cfg.max_degree = c.max_degree;
    cfg.degree_exponent = c.degree_exponent;
    cfg.community_exponent = c.community_exponent;
    cfg.mu = c.mu;
    cfg.c_min = c.c_min;
    cfg.c_max = c.c_max;
    cfg.overlap_fraction = c.overlap_fraction;
    cfg.memberships_per_overlap_node = c.memberships_per_overlap_node;
    cfg.rng_seed = c.rng_seed;
    return cfg;
}

// community.dat-style reader used by abw_score_files; keyed by raw node id
std::vector<std::vector<std::int64_t>> read_membership_file(const std::string& path,
                                                            std::map<std::int64_t, int>& nodes) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::map<std::int64_t, std::vector<std::int64_t>> per_node;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        std::int64_t node;
        if (!(ss >> node)) throw ParseError(path + ": bad node id", lineno);
        std::vector<std::int64_t> cs;
        std::string tok;
        while (ss >> tok) {
            // allow comma-separated membership lists
            std::string cur;
            for (char ch : tok + ",") {
                if (ch == ',') {
                    if (!cur.empty()) cs.push_back(std::stoll(cur));
                    cur.clear();
                } else {
                    cur.push_back(ch);
                }
            }
        }
        if (cs.empty()) throw ParseError(path + ": node without communities", lineno);
        per_node[node] = std::move(cs);
    }
    if (per_node.empty()) throw ParseError(path + ": empty community file");
    for (const auto& [node, cs] : per_node) nodes.emplace(node, 0);

    std::map<std::int64_t, int> comm_index;
    for (const auto& [node, cs] : per_node)
        for (auto c : cs) comm_index.emplace(c, 0);
    int next = 0;
    for (auto& [c, idx] : comm_index) idx = next++;

    std::vector<std::vector<std::int64_t>> comms(next);
    for (const auto& [node, cs] : per_node)
        for (auto c : cs) comms[comm_index.at(c)].push_back(node);
    return comms;
}

}  // namespace

extern "C" {

const char* abw_last_error(void) { return g_last_error.c_str(); }

abw_status abw_graph_load_file(const char* path, int one_indexed, abw_graph** out) {
    if (auto s = require(path && out, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        std::ifstream in(path);
        if (!in) return fail(ABW_ERR_IO, std::string("cannot open ") + path);
        EdgeListOptions opts;
        opts.one_indexed = one_indexed != 0;
        *out = new abw_graph{Graph::load_edge_list(in, opts)};
        return ABW_OK;
    });
}

abw_status abw_graph_node_count(const abw_graph* g, int32_t* out) {
    if (auto s = require(g && out, "null argument"); s != ABW_OK) return s;
    *out = g->g.node_count();
    return ABW_OK;
}

abw_status abw_graph_edge_count(const abw_graph* g, int64_t* out) {
    if (auto s = require(g && out, "null argument"); s != ABW_OK) return s;
    *out = g->g.edge_count();
    return ABW_OK;
}

abw_status abw_graph_degree(const abw_graph* g, int32_t node, int32_t* out) {
    if (auto s = require(g && out, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        *out = g->g.degree(node);
        return ABW_OK;
    });
}

abw_status abw_graph_is_connected(const abw_graph* g, int32_t* out) {
    if (auto s = require(g && out, "null argument"); s != ABW_OK) return s;
    *out = g->g.is_connected() ? 1 : 0;
    return ABW_OK;
}

abw_status abw_graph_write_file(const abw_graph* g, const char* path, int one_indexed) {
    if (auto s = require(g && path, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        std::ofstream out(path);
        if (!out) return fail(ABW_ERR_IO, std::string("cannot open ") + path);
        const std::int64_t shift = one_indexed ? 1 : 0;
        for (int v = 0; v < g->g.node_count(); ++v)
            for (int w : g->g.neighbors(v))
                out << (g->g.external_id(v) + shift) << '\t' << (g->g.external_id(w) + shift)
                    << '\n';
        return ABW_OK;
    });
}

void abw_graph_free(abw_graph* g) { delete g; }

void abw_benchmark_config_default(abw_benchmark_config* cfg) {
    if (!cfg) return;
    BenchmarkConfig d;
    *cfg = {d.n,    d.avg_degree,       d.max_degree, d.degree_exponent,
            d.community_exponent,       d.mu,         d.c_min,
            d.c_max, d.overlap_fraction, d.memberships_per_overlap_node,
            d.rng_seed};
}

abw_status abw_generate(const abw_benchmark_config* cfg, abw_graph** graph, abw_truth** truth) {
    if (auto s = require(cfg && graph && truth, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        auto [g, t] = generate(to_config(*cfg));
        *graph = new abw_graph{std::move(g)};
        *truth = new abw_truth{std::move(t)};
        return ABW_OK;
    });
}

abw_status abw_read_lfr_files(const char* network_path, const char* community_path,
                              abw_graph** graph, abw_truth** truth) {
    if (auto s = require(network_path && community_path && graph && truth, "null argument");
        s != ABW_OK)
        return s;
    return guarded([&] {
        std::ifstream net(network_path), com(community_path);
        if (!net) return fail(ABW_ERR_IO, std::string("cannot open ") + network_path);
        if (!com) return fail(ABW_ERR_IO, std::string("cannot open ") + community_path);
        auto [g, t] = read_lfr_files(net, com);
        *graph = new abw_graph{std::move(g)};
        *truth = new abw_truth{std::move(t)};
        return ABW_OK;
    });
}

abw_status abw_truth_community_count(const abw_truth* t, int32_t* out) {
    if (auto s = require(t && out, "null argument"); s != ABW_OK) return s;
    *out = t->t.k();
    return ABW_OK;
}

abw_status abw_truth_write_file(const abw_truth* t, const abw_graph* g, const char* path,
                                int one_indexed) {
    if (auto s = require(t && g && path, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        std::ofstream out(path);
        if (!out) return fail(ABW_ERR_IO, std::string("cannot open ") + path);
        const std::int64_t shift = one_indexed ? 1 : 0;
        auto memb = t->t.memberships(g->g.node_count());
        for (int v = 0; v < g->g.node_count(); ++v) {
            out << (g->g.external_id(v) + shift) << '\t';
            for (size_t i = 0; i < memb[v].size(); ++i)
                out << (i ? " " : "") << (memb[v][i] + shift);
            out << '\n';
        }
        return ABW_OK;
    });
}

void abw_truth_free(abw_truth* t) { delete t; }

abw_status abw_pick_seeds(const abw_graph* g, const abw_truth* t, double fraction,
                          uint64_t rng_seed, abw_seeds** out) {
    if (auto s = require(g && t && out, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        std::mt19937_64 rng(rng_seed);
        NamedSeeds named;
        named.seeds = pick_seeds(g->g, t->t, fraction, rng);
        for (int c = 0; c < t->t.k(); ++c) named.community_names.push_back(std::to_string(c));
        *out = new abw_seeds{std::move(named)};
        return ABW_OK;
    });
}

abw_status abw_seeds_load_file(const char* path, const abw_graph* g, abw_seeds** out) {
    if (auto s = require(path && g && out, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        std::ifstream in(path);
        if (!in) return fail(ABW_ERR_IO, std::string("cannot open ") + path);
        *out = new abw_seeds{load_seed_file(in, g->g)};
        return ABW_OK;
    });
}

abw_status abw_seeds_count(const abw_seeds* s, int32_t* out) {
    if (auto st = require(s && out, "null argument"); st != ABW_OK) return st;
    *out = s->s.seeds.count();
    return ABW_OK;
}

abw_status abw_seeds_community_count(const abw_seeds* s, int32_t* out) {
    if (auto st = require(s && out, "null argument"); st != ABW_OK) return st;
    *out = s->s.seeds.k;
    return ABW_OK;
}

void abw_seeds_free(abw_seeds* s) { delete s; }

abw_status abw_run(const abw_graph* g, const abw_seeds* s, abw_mode mode, int32_t iterations,
                   double epsilon, double rel_tolerance, abw_result** out) {
    if (auto st = require(g && s && out, "null argument"); st != ABW_OK) return st;
    return guarded([&] {
        SolveParams params;
        if (rel_tolerance > 0) params.rel_tolerance = rel_tolerance;
        const ClassifyMode m =
            mode == ABW_MODE_DISJOINT ? ClassifyMode::disjoint : ClassifyMode::overlapping;
        RunResult r = run(g->g, s->s.seeds, m, iterations, epsilon, params);
        *out = new abw_result{m, std::move(r), s->s.seeds.k};
        return ABW_OK;
    });
}

abw_status abw_result_affinity(const abw_result* r, int32_t node, int32_t community,
                               double* out) {
    if (auto s = require(r && out, "null argument"); s != ABW_OK) return s;
    if (node < 0 || node >= r->r.affinities.n || community < 0 || community >= r->k)
        return fail(ABW_ERR_ARGUMENT, "node or community index out of range");
    *out = r->r.affinities.at(node, community);
    return ABW_OK;
}

abw_status abw_result_label(const abw_result* r, int32_t node, int32_t* out) {
    if (auto s = require(r && out, "null argument"); s != ABW_OK) return s;
    if (r->mode != ClassifyMode::disjoint)
        return fail(ABW_ERR_ARGUMENT, "abw_result_label: result is overlapping");
    const auto& p = std::get<Partition>(r->r.assignment);
    if (node < 0 || node >= p.node_count())
        return fail(ABW_ERR_ARGUMENT, "node index out of range");
    *out = p.labels[node];
    return ABW_OK;
}

abw_status abw_result_memberships(const abw_result* r, int32_t node, int32_t* buf, int32_t cap,
                                  int32_t* count) {
    if (auto s = require(r && count, "null argument"); s != ABW_OK) return s;
    if (r->mode != ClassifyMode::overlapping)
        return fail(ABW_ERR_ARGUMENT, "abw_result_memberships: result is disjoint");
    const auto& c = std::get<Cover>(r->r.assignment);
    if (node < 0 || node >= c.node_count())
        return fail(ABW_ERR_ARGUMENT, "node index out of range");
    const auto& ms = c.memberships[node];
    *count = static_cast<int32_t>(ms.size());
    for (int32_t i = 0; i < cap && i < *count; ++i) buf[i] = ms[i];
    return ABW_OK;
}

abw_status abw_result_score(const abw_result* r, const abw_truth* t, double* nmi) {
    if (auto s = require(r && t && nmi, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        if (r->mode == ClassifyMode::disjoint) {
            const auto& p = std::get<Partition>(r->r.assignment);
            Partition truth_part;
            truth_part.labels.assign(p.node_count(), -1);
            for (int c = 0; c < t->t.k(); ++c)
                for (int v : t->t.communities[c]) truth_part.labels[v] = c;
            *nmi = nmi_partition(truth_part, p);
        } else {
            const auto& c = std::get<Cover>(r->r.assignment);
            *nmi = nmi_cover_lfk(t->t.communities, c.as_communities(r->k), c.node_count());
        }
        return ABW_OK;
    });
}

void abw_result_free(abw_result* r) { delete r; }

abw_status abw_detect_file(const char* graph_path, int one_indexed, const char* seed_path,
                           abw_mode mode, int32_t iterations, double epsilon,
                           double rel_tolerance, const char* out_path) {
    if (auto s = require(graph_path && seed_path && out_path, "null argument"); s != ABW_OK)
        return s;
    return guarded([&] {
        std::ifstream gin(graph_path);
        if (!gin) return fail(ABW_ERR_IO, std::string("cannot open ") + graph_path);
        EdgeListOptions opts;
        opts.one_indexed = one_indexed != 0;
        Graph g = Graph::load_edge_list(gin, opts);

        std::ifstream sin(seed_path);
        if (!sin) return fail(ABW_ERR_IO, std::string("cannot open ") + seed_path);
        NamedSeeds named = load_seed_file(sin, g);

        SolveParams params;
        if (rel_tolerance > 0) params.rel_tolerance = rel_tolerance;
        const ClassifyMode m =
            mode == ABW_MODE_DISJOINT ? ClassifyMode::disjoint : ClassifyMode::overlapping;

        if (std::string(out_path) == "-") {
            detect(g, named, m, iterations, epsilon, params, std::cout);
        } else {
            std::ofstream out(out_path);
            if (!out) return fail(ABW_ERR_IO, std::string("cannot open ") + out_path);
            detect(g, named, m, iterations, epsilon, params, out);
        }
        return ABW_OK;
    });
}

abw_status abw_score_files(const char* file_a, const char* file_b, int overlapping,
                           double* out_nmi) {
    if (auto s = require(file_a && file_b && out_nmi, "null argument"); s != ABW_OK) return s;
    return guarded([&] {
        std::map<std::int64_t, int> nodes_a, nodes_b;
        auto comms_a = read_membership_file(file_a, nodes_a);
        auto comms_b = read_membership_file(file_b, nodes_b);
        if (nodes_a != nodes_b)
            return fail(ABW_ERR_CONFIG, "score: the two files cover different node sets");
        int next = 0;
        for (auto& [node, idx] : nodes_a) idx = next++;

        auto densify = [&](const std::vector<std::vector<std::int64_t>>& comms) {
            std::vector<std::vector<int>> out(comms.size());
            for (size_t c = 0; c < comms.size(); ++c)
                for (auto node : comms[c]) out[c].push_back(nodes_a.at(node));
            return out;
        };
        auto a = densify(comms_a);
        auto b = densify(comms_b);

        if (overlapping) {
            *out_nmi = nmi_cover_lfk(a, b, next);
            return ABW_OK;
        }
        auto as_partition = [&](const std::vector<std::vector<int>>& comms) {
            Partition p;
            p.labels.assign(next, -1);
            for (size_t c = 0; c < comms.size(); ++c)
                for (int v : comms[c]) {
                    if (p.labels[v] != -1)
                        throw ConfigError(
                            "score: overlapping memberships in partition mode");
                    p.labels[v] = static_cast<int>(c);
                }
            return p;
        };
        *out_nmi = nmi_partition(as_partition(a), as_partition(b));
        return ABW_OK;
    });
}

void abw_experiment_spec_default(abw_experiment_spec* spec) {
    if (!spec) return;
    abw_benchmark_config_default(&spec->benchmark);
    spec->seed_fraction = 0.10;
    spec->mode = ABW_MODE_DISJOINT;
    spec->iterations = 1;
    spec->epsilon = 0.1;
    spec->repetitions = 100;
    spec->sweep_variable = 0;
    spec->sweep_values = nullptr;
    spec->sweep_count = 0;
    spec->rel_tolerance = 1e-10;
    spec->rng_seed = 1;
    spec->workers = 0;
}

abw_status abw_run_experiment_csv(const abw_experiment_spec* spec, const char* out_path) {
    if (auto s = require(spec && out_path, "null argument"); s != ABW_OK) return s;
    if (auto s = require(spec->sweep_values && spec->sweep_count > 0, "no sweep values");
        s != ABW_OK)
        return s;
    return guarded([&] {
        ExperimentSpec es;
        es.benchmark = to_config(spec->benchmark);
        es.seed_fraction = spec->seed_fraction;
        es.mode = spec->mode == ABW_MODE_DISJOINT ? ClassifyMode::disjoint
                                                  : ClassifyMode::overlapping;
        es.iterations = spec->iterations;
        es.epsilon = spec->epsilon;
        es.repetitions = spec->repetitions;
        es.sweep = spec->sweep_variable == 0 ? SweepVariable::mu
                                             : SweepVariable::overlap_fraction;
        es.sweep_values.assign(spec->sweep_values, spec->sweep_values + spec->sweep_count);
        if (spec->rel_tolerance > 0) es.solver.rel_tolerance = spec->rel_tolerance;
        es.rng_seed = spec->rng_seed;
        es.workers = spec->workers;

        auto rows = run_experiment(es);
        if (std::string(out_path) == "-") {
            write_csv(std::cout, es, rows);
        } else {
            std::ofstream out(out_path);
            if (!out) return fail(ABW_ERR_IO, std::string("cannot open ") + out_path);
            write_csv(out, es, rows);
        }
        return ABW_OK;
    });
}

}  // extern "C"
