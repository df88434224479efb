#include "abwalk/affinity.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

#include "abwalk/error.hpp"

namespace abwalk {

void SeedAssignment::validate(int node_count) const {
    if (k < 1) throw ConfigError("seed assignment: community count must be >= 1");
    if (seeds.empty()) throw ConfigError("seed assignment: no seeds given");
    std::vector<bool> covered(k, false);
    for (const auto& [v, vec] : seeds) {
        if (v < 0 || v >= node_count)
            throw ConfigError("seed node index out of range: " + std::to_string(v));
        if (static_cast<int>(vec.size()) != k)
            throw ConfigError("seed affinity vector has wrong length for node " +
                              std::to_string(v));
        for (int l = 0; l < k; ++l) {
            if (vec[l] < 0.0 || vec[l] > 1.0)
                throw ConfigError("seed affinity outside [0,1] for node " + std::to_string(v));
            if (vec[l] > 0.0) covered[l] = true;
        }
    }
    for (int l = 0; l < k; ++l)
        if (!covered[l])
            throw ConfigError("community " + std::to_string(l) +
                              " has no seed with positive affinity");
}

AbsorbingSystem build_absorbing_system(const Graph& g, const SeedAssignment& seeds) {
    seeds.validate(g.node_count());
    const int n = g.node_count();
    const int s = seeds.count();
    if (s >= n) throw ArgumentError("build_absorbing_system: no non-seed nodes");

    AbsorbingSystem sys;
    sys.node_to_row.assign(n, -1);
    sys.row_to_node.reserve(n - s);
    for (int v = 0; v < n; ++v) {
        if (!seeds.is_seed(v)) {
            sys.node_to_row[v] = static_cast<int>(sys.row_to_node.size());
            sys.row_to_node.push_back(v);
        }
    }

    const int rows = n - s;
    sys.d1.resize(rows);
    sys.boundary.resize(rows);
    std::vector<std::tuple<int, int, double>> triplets;
    for (int i = 0; i < rows; ++i) {
        const int u = sys.row_to_node[i];
        sys.d1[i] = static_cast<double>(g.degree(u));
        triplets.emplace_back(i, i, sys.d1[i]);
        for (int w : g.neighbors(u)) {
            const int j = sys.node_to_row[w];
            if (j >= 0) {
                if (j > i) triplets.emplace_back(i, j, -1.0);
            } else {
                sys.boundary[i].push_back(w);
            }
        }
    }
    sys.matrix = SparseSymmetricMatrix::from_triplets(rows, triplets);
    return sys;
}

AffinityMatrix compute_affinities(const Graph& g, const SeedAssignment& seeds,
                                  const SolveParams& params) {
    seeds.validate(g.node_count());
    const int n = g.node_count();
    const int k = seeds.k;

    AffinityMatrix aff;
    aff.n = n;
    aff.k = k;
    aff.values.assign(static_cast<size_t>(n) * k, 0.0);
    for (const auto& [v, vec] : seeds.seeds)
        for (int l = 0; l < k; ++l) aff.at(v, l) = vec[l];
    if (seeds.count() == n) return aff;  // everything is a seed

    const AbsorbingSystem sys = build_absorbing_system(g, seeds);
    const int rows = static_cast<int>(sys.row_to_node.size());

    auto solve_community = [&](int l) {
        std::vector<double> b(rows, 0.0);
        for (int i = 0; i < rows; ++i)
            for (int x : sys.boundary[i]) b[i] += seeds.seeds.at(x)[l];
        try {
            return solve(sys.matrix, b, params).x;
        } catch (const SolverError& e) {
            throw SolverError("community " + std::to_string(l) + ": " + e.what(),
                              e.best_iterate, e.residual);
        }
    };

    std::vector<std::vector<double>> solutions(k);
    unsigned hw = std::thread::hardware_concurrency();
    if (k > 1 && hw > 1) {
        std::vector<std::future<std::vector<double>>> futures;
        futures.reserve(k);
        for (int l = 0; l < k; ++l)
            futures.push_back(std::async(std::launch::async, solve_community, l));
        for (int l = 0; l < k; ++l) solutions[l] = futures[l].get();
    } else {
        for (int l = 0; l < k; ++l) solutions[l] = solve_community(l);
    }

    for (int l = 0; l < k; ++l)
        for (int i = 0; i < rows; ++i)
            aff.at(sys.row_to_node[i], l) = std::clamp(solutions[l][i], 0.0, 1.0);
    return aff;
}

std::vector<std::vector<double>> absorption_matrix_oracle(const Graph& g,
                                                          const SeedAssignment& seeds) {
    seeds.validate(g.node_count());
    const int n = g.node_count();
    if (n > 500) throw ArgumentError("absorption oracle limited to n <= 500");
    const int s = seeds.count();
    if (s >= n) return {};

    std::vector<int> seed_nodes;
    for (const auto& [v, vec] : seeds.seeds) seed_nodes.push_back(v);
    std::vector<int> seed_col(n, -1);
    for (int j = 0; j < s; ++j) seed_col[seed_nodes[j]] = j;

    std::vector<int> non_seed;
    std::vector<int> row_of(n, -1);
    for (int v = 0; v < n; ++v)
        if (seed_col[v] < 0) {
            row_of[v] = static_cast<int>(non_seed.size());
            non_seed.push_back(v);
        }
    const int r = static_cast<int>(non_seed.size());

    // dense (I - Q) with augmented right-hand side R; Gaussian elimination
    // with partial pivoting
    std::vector<std::vector<double>> m(r, std::vector<double>(r + s, 0.0));
    for (int i = 0; i < r; ++i) {
        const int u = non_seed[i];
        const double inv_deg = 1.0 / g.degree(u);
        m[i][i] = 1.0;
        for (int w : g.neighbors(u)) {
            if (row_of[w] >= 0)
                m[i][row_of[w]] -= inv_deg;
            else
                m[i][r + seed_col[w]] += inv_deg;
        }
    }
    for (int col = 0; col < r; ++col) {
        int piv = col;
        for (int i = col + 1; i < r; ++i)
            if (std::abs(m[i][col]) > std::abs(m[piv][col])) piv = i;
        std::swap(m[col], m[piv]);
        const double d = m[col][col];
        for (int i = col + 1; i < r; ++i) {
            const double f = m[i][col] / d;
            if (f == 0.0) continue;
            for (int j = col; j < r + s; ++j) m[i][j] -= f * m[col][j];
        }
    }
    std::vector<std::vector<double>> x(r, std::vector<double>(s, 0.0));
    for (int i = r - 1; i >= 0; --i) {
        for (int j = 0; j < s; ++j) {
            double acc = m[i][r + j];
            for (int c = i + 1; c < r; ++c) acc -= m[i][c] * x[c][j];
            x[i][j] = acc / m[i][i];
        }
    }
    return x;
}

}  // namespace abwalk
