#include "abwalk/experiment.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <future>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "abwalk/error.hpp"
#include "abwalk/metrics.hpp"
#include "abwalk/seeding.hpp"

namespace abwalk {

void ExperimentSpec::validate() const {
    benchmark.validate();
    if (repetitions < 1) throw ConfigError("experiment: repetitions must be >= 1");
    if (iterations < 1) throw ConfigError("experiment: iterations must be >= 1");
    if (seed_fraction <= 0.0 || seed_fraction > 1.0)
        throw ConfigError("experiment: seed_fraction must be in (0,1]");
    if (epsilon <= 0.0) throw ConfigError("experiment: epsilon must be > 0");
    if (sweep_values.empty()) throw ConfigError("experiment: no sweep values");
    for (double v : sweep_values)
        if (v < 0.0 || v > 1.0)
            throw ConfigError("experiment: sweep value out of range: " + std::to_string(v));
}

std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t sweep_index,
                                 std::uint64_t repetition) {
    // splitmix64 over a counter, so streams are independent per (point, rep)
    std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (sweep_index * 1000003ULL + repetition + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double run_repetition(const ExperimentSpec& spec, double sweep_value, std::uint64_t rep_seed) {
    BenchmarkConfig cfg = spec.benchmark;
    if (spec.sweep == SweepVariable::mu)
        cfg.mu = sweep_value;
    else
        cfg.overlap_fraction = sweep_value;
    cfg.rng_seed = rep_seed;

    auto [graph, truth] = generate(cfg);
    if (!graph.is_connected()) throw GenerationError("experiment: generated graph disconnected");

    std::mt19937_64 seed_rng(rep_seed ^ 0xA5A5A5A5A5A5A5A5ULL);
    SeedAssignment seeds = pick_seeds(graph, truth, spec.seed_fraction, seed_rng);

    RunResult result = run(graph, seeds, spec.mode, spec.iterations, spec.epsilon, spec.solver);

    if (spec.mode == ClassifyMode::disjoint) {
        Partition truth_part;
        truth_part.labels.assign(graph.node_count(), -1);
        for (int c = 0; c < truth.k(); ++c)
            for (int v : truth.communities[c]) truth_part.labels[v] = c;
        return nmi_partition(truth_part, std::get<Partition>(result.assignment));
    }
    const auto& cover = std::get<Cover>(result.assignment);
    return nmi_cover_lfk(truth.communities, cover.as_communities(truth.k()),
                         graph.node_count());
}

std::vector<SweepRow> run_experiment(const ExperimentSpec& spec) {
    spec.validate();
    const int workers = spec.workers > 0
                            ? spec.workers
                            : std::max(1u, std::thread::hardware_concurrency());

    std::vector<SweepRow> rows;
    for (size_t si = 0; si < spec.sweep_values.size(); ++si) {
        const double value = spec.sweep_values[si];
        std::vector<double> nmis(spec.repetitions);
        int next = 0;
        while (next < spec.repetitions) {
            const int batch = std::min(workers, spec.repetitions - next);
            std::vector<std::future<double>> futures;
            futures.reserve(batch);
            for (int b = 0; b < batch; ++b) {
                const int rep = next + b;
                futures.push_back(std::async(std::launch::async, [&spec, value, si, rep] {
                    return run_repetition(spec, value,
                                          derive_stream_seed(spec.rng_seed, si, rep));
                }));
            }
            for (int b = 0; b < batch; ++b) nmis[next + b] = futures[b].get();
            next += batch;
        }
        double mean = 0.0;
        for (double x : nmis) mean += x;
        mean /= nmis.size();
        double var = 0.0;
        for (double x : nmis) var += (x - mean) * (x - mean);
        var = nmis.size() > 1 ? var / (nmis.size() - 1) : 0.0;
        rows.push_back({value, mean, std::sqrt(var), spec.repetitions});
    }
    return rows;
}

void write_csv(std::ostream& out, const ExperimentSpec& spec,
               const std::vector<SweepRow>& rows) {
    out << "sweep_variable,value,mean_nmi,std_nmi,reps,n,seed_fraction,iterations,epsilon,"
           "mode\n";
    const char* var = spec.sweep == SweepVariable::mu ? "mu" : "overlap_fraction";
    const char* mode = spec.mode == ClassifyMode::disjoint ? "disjoint" : "overlapping";
    char buf[256];
    for (const auto& row : rows) {
        std::snprintf(buf, sizeof buf, "%s,%g,%.6f,%.6f,%d,%d,%g,%d,%g,%s\n", var, row.value,
                      row.mean_nmi, row.std_nmi, row.reps, spec.benchmark.n,
                      spec.seed_fraction, spec.iterations, spec.epsilon, mode);
        out << buf;
    }
}

namespace {

std::vector<std::string> split_fields(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : text) {
        if (ch == ' ' || ch == '\t' || ch == ',' || ch == '\r') {
            if (!cur.empty()) out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

bool parse_i64(const std::string& s, std::int64_t& out) {
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    return ec == std::errc{} && p == s.data() + s.size();
}

bool parse_f64(const std::string& s, double& out) {
    try {
        size_t pos = 0;
        out = std::stod(s, &pos);
        return pos == s.size();
    } catch (...) {
        return false;
    }
}

}  // namespace

NamedSeeds load_seed_file(std::istream& in, const Graph& g) {
    struct RawLine {
        std::int64_t node;
        std::vector<std::string> fields;
        long lineno;
    };
    std::vector<RawLine> lines;
    std::string line;
    long lineno = 0;
    bool all_float = true, all_integer = true;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        auto fields = split_fields(line);
        if (fields.size() < 2) throw ParseError("seed file: expected node id and data", lineno);
        std::int64_t node;
        if (!parse_i64(fields[0], node)) throw ParseError("seed file: bad node id", lineno);
        fields.erase(fields.begin());
        for (const auto& f : fields) {
            std::int64_t i;
            double d;
            if (!parse_i64(f, i)) all_integer = false;
            if (!parse_f64(f, d)) all_float = false;
        }
        lines.push_back({node, std::move(fields), lineno});
    }
    if (lines.empty()) throw ConfigError("seed file: no seeds given");

    for (const auto& rl : lines)
        if (g.internal_index(rl.node) < 0)
            throw ConfigError("unknown node " + std::to_string(rl.node));

    // fractional numeric fields mean affinity vectors; anything else is a
    // membership list whose labels may be arbitrary strings
    const bool affinity_form = all_float && !all_integer;

    NamedSeeds named;
    if (!affinity_form) {
        std::map<std::string, int> comm_index;
        for (const auto& rl : lines)
            for (const auto& f : rl.fields) comm_index.emplace(f, 0);
        int next = 0;
        for (auto& [c, idx] : comm_index) {
            idx = next++;
            named.community_names.push_back(c);
        }
        named.seeds.k = next;
        for (const auto& rl : lines) {
            auto& vec = named.seeds.seeds
                            .try_emplace(g.internal_index(rl.node),
                                         std::vector<double>(next, 0.0))
                            .first->second;
            for (const auto& f : rl.fields) vec[comm_index.at(f)] = 1.0;
        }
    } else {
        // explicit affinity-vector form; every line must carry k values
        const size_t k = lines.front().fields.size();
        named.seeds.k = static_cast<int>(k);
        for (size_t l = 0; l < k; ++l) named.community_names.push_back(std::to_string(l));
        for (const auto& rl : lines) {
            if (rl.fields.size() != k)
                throw ParseError("seed file: inconsistent affinity vector length", rl.lineno);
            std::vector<double> vec(k);
            for (size_t i = 0; i < k; ++i) {
                if (!parse_f64(rl.fields[i], vec[i]) || vec[i] < 0.0 || vec[i] > 1.0)
                    throw ParseError("seed file: affinity outside [0,1]", rl.lineno);
            }
            named.seeds.seeds[g.internal_index(rl.node)] = std::move(vec);
        }
    }
    return named;
}

void detect(const Graph& g, const NamedSeeds& named, ClassifyMode mode, int iterations,
            double epsilon, const SolveParams& params, std::ostream& out) {
    if (!g.is_connected()) throw ConfigError("detect: input graph is not connected");
    RunResult result = run(g, named.seeds, mode, iterations, epsilon, params);

    char buf[64];
    for (int v = 0; v < g.node_count(); ++v) {
        out << g.external_id(v) << '\t';
        if (mode == ClassifyMode::disjoint) {
            out << named.community_names[std::get<Partition>(result.assignment).labels[v]];
        } else {
            const auto& ms = std::get<Cover>(result.assignment).memberships[v];
            for (size_t i = 0; i < ms.size(); ++i) {
                if (i) out << ',';
                out << named.community_names[ms[i]];
            }
        }
        out << '\t';
        for (int l = 0; l < result.affinities.k; ++l) {
            std::snprintf(buf, sizeof buf, "%s%.6f", l ? " " : "",
                          result.affinities.at(v, l));
            out << buf;
        }
        out << '\n';
    }
}

}  // namespace abwalk
