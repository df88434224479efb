// Shared helpers for the test suites: small fixture graphs, independent
// oracles (dense elimination, walk simulation, brute-force NMI), and
// set-partition enumeration. Everything here is deliberately implemented
// without touching the library's solver or metric code paths.
#ifndef ABWALK_TESTS_SUPPORT_HPP
#define ABWALK_TESTS_SUPPORT_HPP

#include <cmath>
#include <map>
#include <random>
#include <vector>

#include "abwalk/affinity.hpp"
#include "abwalk/graph.hpp"

namespace testsupport {

inline abwalk::Graph make_path(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return abwalk::Graph::from_edges(n, std::move(edges));
}

// node 0 is the center
inline abwalk::Graph make_star(int leaves) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
    return abwalk::Graph::from_edges(leaves + 1, std::move(edges));
}

inline abwalk::Graph random_connected_graph(int n, int extra_edges, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) {
        int u = std::uniform_int_distribution<int>(0, v - 1)(rng);
        edges.emplace_back(u, v);
    }
    for (int e = 0; e < extra_edges; ++e) {
        int u = std::uniform_int_distribution<int>(0, n - 1)(rng);
        int v = std::uniform_int_distribution<int>(0, n - 1)(rng);
        if (u != v) edges.emplace_back(u, v);
    }
    return abwalk::Graph::from_edges(n, std::move(edges));
}

// Gaussian elimination with partial pivoting on a dense copy.
inline std::vector<double> dense_solve(std::vector<std::vector<double>> a,
                                       std::vector<double> b) {
    const int n = static_cast<int>(b.size());
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int i = col + 1; i < n; ++i)
            if (std::abs(a[i][col]) > std::abs(a[piv][col])) piv = i;
        std::swap(a[col], a[piv]);
        std::swap(b[col], b[piv]);
        for (int i = col + 1; i < n; ++i) {
            double f = a[i][col] / a[col][col];
            if (f == 0.0) continue;
            for (int j = col; j < n; ++j) a[i][j] -= f * a[col][j];
            b[i] -= f * b[col];
        }
    }
    std::vector<double> x(n);
    for (int i = n - 1; i >= 0; --i) {
        double acc = b[i];
        for (int j = i + 1; j < n; ++j) acc -= a[i][j] * x[j];
        x[i] = acc / a[i][i];
    }
    return x;
}

// Monte-Carlo absorption estimate: walks from `start` until a seed is hit;
// returns per-seed hit frequencies keyed by seed node.
inline std::map<int, double> simulate_absorption(const abwalk::Graph& g,
                                                 const abwalk::SeedAssignment& seeds,
                                                 int start, int walks,
                                                 std::mt19937_64& rng) {
    std::map<int, double> hits;
    for (int w = 0; w < walks; ++w) {
        int v = start;
        while (!seeds.is_seed(v)) {
            auto nb = g.neighbors(v);
            v = nb[std::uniform_int_distribution<size_t>(0, nb.size() - 1)(rng)];
        }
        hits[v] += 1.0;
    }
    for (auto& [node, h] : hits) h /= walks;
    return hits;
}

// Independent partition-NMI evaluation straight from the label vectors.
inline double brute_nmi(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    std::map<int, int> ca, cb;
    std::map<std::pair<int, int>, int> joint;
    for (int v = 0; v < n; ++v) {
        ++ca[a[v]];
        ++cb[b[v]];
        ++joint[{a[v], b[v]}];
    }
    auto h = [&](const std::map<int, int>& c) {
        double out = 0.0;
        for (auto [id, cnt] : c) {
            double p = static_cast<double>(cnt) / n;
            out -= p * std::log2(p);
        }
        return out;
    };
    double ha = h(ca), hb = h(cb);
    if (ha + hb == 0.0) return 1.0;
    double mi = 0.0;
    for (auto& [ab, cnt] : joint) {
        double pab = static_cast<double>(cnt) / n;
        double pa = static_cast<double>(ca[ab.first]) / n;
        double pb = static_cast<double>(cb[ab.second]) / n;
        mi += pab * std::log2(pab / (pa * pb));
    }
    return 2.0 * mi / (ha + hb);
}

// All set partitions of {0..n-1} as label vectors (restricted growth strings).
inline std::vector<std::vector<int>> all_partitions(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> labels(n, 0);
    auto rec = [&](auto&& self, int i, int max_used) -> void {
        if (i == n) {
            out.push_back(labels);
            return;
        }
        for (int l = 0; l <= max_used + 1; ++l) {
            labels[i] = l;
            self(self, i + 1, std::max(max_used, l));
        }
    };
    rec(rec, 0, -1);
    return out;
}

}  // namespace testsupport

#endif
