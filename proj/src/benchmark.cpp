#include "abwalk/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <istream>
#include <limits>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "abwalk/error.hpp"

namespace abwalk {

void BenchmarkConfig::validate() const {
    if (n < 1) throw ConfigError("benchmark: n must be >= 1");
    if (mu < 0.0 || mu > 1.0) throw ConfigError("benchmark: mu must be in [0,1]");
    if (overlap_fraction < 0.0 || overlap_fraction > 1.0)
        throw ConfigError("benchmark: overlap_fraction must be in [0,1]");
    if (c_min < 1 || c_min > c_max || c_max > n)
        throw ConfigError("benchmark: need 1 <= c_min <= c_max <= n");
    if (avg_degree < 1.0 || avg_degree > max_degree)
        throw ConfigError("benchmark: need 1 <= avg_degree <= max_degree");
    if (degree_exponent <= 0.0 || community_exponent <= 0.0)
        throw ConfigError("benchmark: power-law exponents must be > 0");
    if (overlap_fraction > 0.0 && memberships_per_overlap_node < 2)
        throw ConfigError("benchmark: overlap nodes need >= 2 memberships");
    // the expected intra-degree must fit inside at least the largest allowed
    // community; smaller communities clamp their members' intra shares
    if ((1.0 - mu) * avg_degree >= c_max)
        throw ConfigError("benchmark: expected intra-degree (1-mu)*avg_degree=" +
                          std::to_string((1.0 - mu) * avg_degree) +
                          " cannot be placed in communities of size <= " + std::to_string(c_max));
}

std::vector<std::vector<int>> GroundTruth::memberships(int node_count) const {
    std::vector<std::vector<int>> memb(node_count);
    for (int c = 0; c < k(); ++c)
        for (int v : communities[c]) memb[v].push_back(c);
    for (auto& m : memb) std::sort(m.begin(), m.end());
    return memb;
}

namespace {

// Discrete power law with precomputed cumulative weights.
class PowerLawSampler {
public:
    PowerLawSampler(double exponent, int lo, int hi) : lo_(lo) {
        cum_.reserve(hi - lo + 1);
        double acc = 0.0;
        for (int x = lo; x <= hi; ++x) {
            acc += std::pow(static_cast<double>(x), -exponent);
            cum_.push_back(acc);
        }
    }

    int operator()(std::mt19937_64& rng) const {
        std::uniform_real_distribution<double> u(0.0, cum_.back());
        auto it = std::lower_bound(cum_.begin(), cum_.end(), u(rng));
        return lo_ + static_cast<int>(it - cum_.begin());
    }

    double mean() const {
        double total = cum_.back(), m = 0.0, prev = 0.0;
        for (size_t i = 0; i < cum_.size(); ++i) {
            m += (lo_ + static_cast<int>(i)) * (cum_[i] - prev);
            prev = cum_[i];
        }
        return m / total;
    }

private:
    int lo_;
    std::vector<double> cum_;
};

struct EdgeSet {
    std::set<std::pair<int, int>> edges;

    bool contains(int u, int v) const {
        return edges.contains({std::min(u, v), std::max(u, v)});
    }
    void insert(int u, int v) { edges.insert({std::min(u, v), std::max(u, v)}); }
    void erase(int u, int v) { edges.erase({std::min(u, v), std::max(u, v)}); }
};

// Pair up stubs; self-pairs and duplicates are repaired by swapping with an
// already-accepted pair, irreparable pairs are dropped.
void wire_stubs(std::vector<int>& stubs, EdgeSet& edges,
                const std::function<bool(int, int)>& acceptable, std::mt19937_64& rng,
                std::vector<std::pair<int, int>>& out) {
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::vector<std::pair<int, int>> bad;
    std::vector<std::pair<int, int>> good;
    for (size_t i = 0; i + 1 < stubs.size(); i += 2) {
        int u = stubs[i], v = stubs[i + 1];
        if (u != v && !edges.contains(u, v) && acceptable(u, v)) {
            edges.insert(u, v);
            good.push_back({u, v});
        } else {
            bad.push_back({u, v});
        }
    }
    // repair passes: swap a bad pair's endpoints with a random good pair
    std::uniform_int_distribution<size_t> pick(0, good.empty() ? 0 : good.size() - 1);
    for (int pass = 0; pass < 3 && !bad.empty(); ++pass) {
        std::vector<std::pair<int, int>> still_bad;
        for (auto [u, v] : bad) {
            bool fixed = false;
            for (int attempt = 0; attempt < 20 && !good.empty(); ++attempt) {
                size_t idx = std::uniform_int_distribution<size_t>(0, good.size() - 1)(rng);
                auto [a, b] = good[idx];
                // replace {a,b} with {u,a} and {v,b}
                if (u != a && v != b && !edges.contains(u, a) && !edges.contains(v, b) &&
                    acceptable(u, a) && acceptable(v, b)) {
                    edges.erase(a, b);
                    edges.insert(u, a);
                    edges.insert(v, b);
                    good[idx] = {u, a};
                    good.push_back({v, b});
                    fixed = true;
                    break;
                }
            }
            if (!fixed) still_bad.push_back({u, v});
        }
        bad = std::move(still_bad);
    }
    // leftover bad pairs are dropped (their stubs are lost)
    out.insert(out.end(), good.begin(), good.end());
}

struct Plan {
    std::vector<int> sizes;                     // community sizes (slot counts)
    std::vector<std::vector<int>> member_of;    // node -> communities
    std::vector<std::vector<int>> comm_nodes;   // community -> nodes
    std::vector<int> degree;                    // target degree per node
};

std::vector<int> draw_community_sizes(const BenchmarkConfig& cfg, int total_slots,
                                      std::mt19937_64& rng) {
    PowerLawSampler size_law(cfg.community_exponent, cfg.c_min, cfg.c_max);
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<int> sizes;
        int sum = 0;
        while (sum < total_slots) {
            int s = size_law(rng);
            sizes.push_back(s);
            sum += s;
        }
        // shave the overshoot off communities that are above c_min
        int over = sum - total_slots;
        bool progress = true;
        while (over > 0 && progress) {
            progress = false;
            for (auto& s : sizes) {
                if (over == 0) break;
                if (s > cfg.c_min) {
                    --s;
                    --over;
                    progress = true;
                }
            }
        }
        if (over == 0) return sizes;
    }
    throw GenerationError("benchmark: could not tile n with community sizes in [" +
                          std::to_string(cfg.c_min) + "," + std::to_string(cfg.c_max) + "]");
}

int choose_degree_lower_bound(const BenchmarkConfig& cfg) {
    int best_lo = 1;
    double best_gap = std::numeric_limits<double>::infinity();
    for (int lo = 1; lo <= cfg.max_degree; ++lo) {
        PowerLawSampler law(cfg.degree_exponent, lo, cfg.max_degree);
        double gap = std::abs(law.mean() - cfg.avg_degree);
        if (gap < best_gap) {
            best_gap = gap;
            best_lo = lo;
        }
    }
    return best_lo;
}

// Assign nodes to communities: overlap nodes get `t` distinct memberships,
// others one, respecting community capacities and preferring communities
// large enough to host the node's intra-degree share.
bool assign_memberships(const BenchmarkConfig& cfg, Plan& plan, int n_over,
                        const std::vector<int>& intra_share, std::mt19937_64& rng) {
    const int k = static_cast<int>(plan.sizes.size());
    const int t = cfg.memberships_per_overlap_node;
    std::vector<int> capacity = plan.sizes;
    plan.member_of.assign(cfg.n, {});
    plan.comm_nodes.assign(k, {});

    std::vector<int> order(cfg.n);
    std::iota(order.begin(), order.end(), 0);
    // overlap nodes (t memberships) first, then by intra share descending
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        bool oa = a < n_over, ob = b < n_over;
        if (oa != ob) return oa;
        return intra_share[a] > intra_share[b];
    });

    std::vector<int> cand;
    for (int v : order) {
        const int want = (v < n_over) ? t : 1;
        for (int rep = 0; rep < want; ++rep) {
            cand.clear();
            for (int c = 0; c < k; ++c) {
                if (capacity[c] <= 0) continue;
                if (std::find(plan.member_of[v].begin(), plan.member_of[v].end(), c) !=
                    plan.member_of[v].end())
                    continue;
                if (plan.sizes[c] - 1 >= intra_share[v]) cand.push_back(c);
            }
            if (cand.empty()) {
                // fall back to any community with room; the share is clamped later
                for (int c = 0; c < k; ++c) {
                    if (capacity[c] > 0 &&
                        std::find(plan.member_of[v].begin(), plan.member_of[v].end(), c) ==
                            plan.member_of[v].end())
                        cand.push_back(c);
                }
            }
            if (cand.empty()) return false;
            int c = cand[std::uniform_int_distribution<size_t>(0, cand.size() - 1)(rng)];
            --capacity[c];
            plan.member_of[v].push_back(c);
            plan.comm_nodes[c].push_back(v);
        }
    }
    return true;
}

bool share_community(const Plan& plan, int u, int v) {
    for (int c : plan.member_of[u])
        if (std::find(plan.member_of[v].begin(), plan.member_of[v].end(), c) !=
            plan.member_of[v].end())
            return true;
    return false;
}

std::vector<std::pair<int, int>> wire_graph(const BenchmarkConfig& cfg, Plan& plan,
                                            std::mt19937_64& rng) {
    const int n = cfg.n;
    const int k = static_cast<int>(plan.sizes.size());

    // per node: intra budget per membership, remainder to the first ones
    std::vector<std::vector<int>> intra(n);
    std::vector<int> ext(n);
    for (int v = 0; v < n; ++v) {
        const int d = plan.degree[v];
        const int ti = static_cast<int>(plan.member_of[v].size());
        int want_intra = static_cast<int>(std::ceil((1.0 - cfg.mu) * d));
        want_intra = std::min(want_intra, d);
        intra[v].assign(ti, want_intra / ti);
        for (int r = 0; r < want_intra % ti; ++r) ++intra[v][r];
        // clamp each share to what the community can host
        int actual = 0;
        for (int i = 0; i < ti; ++i) {
            const int c = plan.member_of[v][i];
            intra[v][i] = std::min(intra[v][i], plan.sizes[c] - 1);
            actual += intra[v][i];
        }
        ext[v] = d - actual;
    }

    EdgeSet edges;
    std::vector<std::pair<int, int>> result;

    // intra wiring, one stub pool per community
    for (int c = 0; c < k; ++c) {
        std::vector<int> stubs;
        for (int v : plan.comm_nodes[c]) {
            const auto& mo = plan.member_of[v];
            const int i = static_cast<int>(std::find(mo.begin(), mo.end(), c) - mo.begin());
            for (int s = 0; s < intra[v][i]; ++s) stubs.push_back(v);
        }
        if (stubs.size() % 2 == 1) {
            // parity fix: move one stub of the most loaded member to ext
            int best = -1, best_cnt = 0;
            for (size_t i = 0; i < stubs.size(); ++i) {
                int cnt = static_cast<int>(std::count(stubs.begin(), stubs.end(), stubs[i]));
                if (cnt > best_cnt) {
                    best_cnt = cnt;
                    best = static_cast<int>(i);
                }
            }
            ++ext[stubs[best]];
            stubs.erase(stubs.begin() + best);
        }
        wire_stubs(stubs, edges, [](int, int) { return true; }, rng, result);
    }

    // inter wiring, single global pool; endpoints must not share a community.
    // At mu = 0 cross-community edges are forbidden, so leftover stubs from
    // clamped intra budgets are dropped rather than wired outside.
    if (cfg.mu > 0.0) {
        std::vector<int> stubs;
        for (int v = 0; v < n; ++v)
            for (int s = 0; s < ext[v]; ++s) stubs.push_back(v);
        if (stubs.size() % 2 == 1) stubs.pop_back();
        wire_stubs(
            stubs, edges, [&](int u, int v) { return !share_community(plan, u, v); }, rng,
            result);
    }

    return result;
}

// Join components to the largest one with degree-preserving double swaps.
bool make_connected(std::vector<std::pair<int, int>>& edges, int n, std::mt19937_64& rng) {
    for (int round = 0; round < 200; ++round) {
        // component labeling via union-find
        std::vector<int> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (auto [u, v] : edges) parent[find(u)] = find(v);
        std::map<int, int> comp_size;
        for (int v = 0; v < n; ++v) ++comp_size[find(v)];
        if (comp_size.size() == 1) return true;
        int giant = comp_size.begin()->first;
        for (auto [c, s] : comp_size)
            if (s > comp_size[giant]) giant = c;

        EdgeSet es;
        for (auto [u, v] : edges) es.insert(u, v);

        bool changed = false;
        std::vector<size_t> giant_edges, other_edges;
        for (size_t i = 0; i < edges.size(); ++i) {
            if (find(edges[i].first) == giant)
                giant_edges.push_back(i);
            else
                other_edges.push_back(i);
        }
        if (giant_edges.empty() || other_edges.empty()) return false;
        for (size_t oi : other_edges) {
            auto [a, b] = edges[oi];
            for (int attempt = 0; attempt < 50; ++attempt) {
                size_t gi =
                    giant_edges[std::uniform_int_distribution<size_t>(0, giant_edges.size() - 1)(
                        rng)];
                auto [c, d] = edges[gi];
                if (a == c || b == d || es.contains(a, c) || es.contains(b, d)) continue;
                es.erase(a, b);
                es.erase(c, d);
                es.insert(a, c);
                es.insert(b, d);
                edges[oi] = {a, c};
                edges[gi] = {b, d};
                changed = true;
                break;
            }
            if (changed) break;  // recompute components before the next swap
        }
        if (!changed) return false;
    }
    return false;
}

}  // namespace

int sample_power_law(double exponent, int lo, int hi, std::mt19937_64& rng) {
    if (lo < 1 || lo > hi) throw ArgumentError("sample_power_law: need 1 <= lo <= hi");
    if (exponent <= 0.0) throw ArgumentError("sample_power_law: exponent must be > 0");
    if (lo == hi) return lo;
    PowerLawSampler law(exponent, lo, hi);
    return law(rng);
}

std::pair<Graph, GroundTruth> generate(const BenchmarkConfig& config) {
    config.validate();
    std::mt19937_64 rng(config.rng_seed);

    const int n_over = static_cast<int>(std::floor(config.overlap_fraction * config.n));
    const int t = n_over > 0 ? config.memberships_per_overlap_node : 1;
    const int total_slots = config.n + n_over * (t - 1);

    const int d_lo = choose_degree_lower_bound(config);
    PowerLawSampler deg_law(config.degree_exponent, d_lo, config.max_degree);

    for (int attempt = 0; attempt < 100; ++attempt) {
        Plan plan;
        plan.sizes = draw_community_sizes(config, total_slots, rng);
        if (static_cast<int>(plan.sizes.size()) < t)
            throw GenerationError("benchmark: fewer communities than memberships per node");

        plan.degree.resize(config.n);
        for (int v = 0; v < config.n; ++v)
            plan.degree[v] = std::min(deg_law(rng), config.n - 1);

        std::vector<int> intra_share(config.n);
        for (int v = 0; v < config.n; ++v) {
            const int ti = v < n_over ? t : 1;
            intra_share[v] = static_cast<int>(
                std::ceil(std::ceil((1.0 - config.mu) * plan.degree[v]) / ti));
        }
        if (!assign_memberships(config, plan, n_over, intra_share, rng)) continue;

        auto edge_pairs = wire_graph(config, plan, rng);
        if (config.mu > 0.0 && !make_connected(edge_pairs, config.n, rng)) continue;

        Graph g = Graph::from_edges(config.n, std::move(edge_pairs));
        if (config.mu > 0.0 && !g.is_connected()) continue;

        GroundTruth truth;
        truth.communities = plan.comm_nodes;
        for (auto& c : truth.communities) std::sort(c.begin(), c.end());
        return {std::move(g), std::move(truth)};
    }
    throw GenerationError("benchmark: failed to build a valid graph after 100 attempts "
                          "(connectivity or membership assignment)");
}

std::pair<Graph, GroundTruth> read_lfr_files(std::istream& network, std::istream& communities) {
    Graph g = Graph::load_edge_list(network, {.one_indexed = true, .dedupe = true});

    std::map<std::int64_t, std::vector<std::int64_t>> node_comms;  // external ids
    std::string line;
    long lineno = 0;
    while (std::getline(communities, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;
        std::istringstream ss(line);
        std::int64_t node;
        if (!(ss >> node)) throw ParseError("community file: bad node id", lineno);
        std::vector<std::int64_t> cs;
        std::int64_t c;
        while (ss >> c) cs.push_back(c);
        if (cs.empty()) throw ParseError("community file: node without communities", lineno);
        auto [it, inserted] = node_comms.emplace(node, std::move(cs));
        if (!inserted) throw ParseError("community file: duplicate node entry", lineno);
    }

    for (int v = 0; v < g.node_count(); ++v)
        if (!node_comms.contains(g.external_id(v)))
            throw ParseError("node " + std::to_string(g.external_id(v)) +
                             " present in network but missing from community file");
    for (const auto& [node, cs] : node_comms)
        if (g.internal_index(node) < 0)
            throw ParseError("node " + std::to_string(node) +
                             " present in community file but missing from network");

    std::map<std::int64_t, int> comm_index;
    for (const auto& [node, cs] : node_comms)
        for (std::int64_t c : cs) comm_index.emplace(c, 0);
    int next = 0;
    for (auto& [c, idx] : comm_index) idx = next++;

    GroundTruth truth;
    truth.communities.assign(next, {});
    for (const auto& [node, cs] : node_comms)
        for (std::int64_t c : cs)
            truth.communities[comm_index.at(c)].push_back(g.internal_index(node));
    for (auto& c : truth.communities) std::sort(c.begin(), c.end());
    return {std::move(g), std::move(truth)};
}

double measured_mixing(const Graph& g, const GroundTruth& truth) {
    auto memb = truth.memberships(g.node_count());
    double total = 0.0;
    int counted = 0;
    for (int v = 0; v < g.node_count(); ++v) {
        auto nb = g.neighbors(v);
        if (nb.empty()) continue;
        int outside = 0;
        for (int w : nb) {
            bool shared = false;
            for (int c : memb[v]) {
                if (std::binary_search(memb[w].begin(), memb[w].end(), c)) {
                    shared = true;
                    break;
                }
            }
            if (!shared) ++outside;
        }
        total += static_cast<double>(outside) / nb.size();
        ++counted;
    }
    return counted ? total / counted : 0.0;
}

}  // namespace abwalk
