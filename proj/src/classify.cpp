#include "abwalk/classify.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "abwalk/error.hpp"

namespace abwalk {

std::vector<std::vector<int>> Partition::as_communities(int k) const {
    std::vector<std::vector<int>> comms(k);
    for (int v = 0; v < node_count(); ++v) comms[labels[v]].push_back(v);
    return comms;
}

std::vector<std::vector<int>> Cover::as_communities(int k) const {
    std::vector<std::vector<int>> comms(k);
    for (int v = 0; v < node_count(); ++v)
        for (int c : memberships[v]) comms[c].push_back(v);
    return comms;
}

Partition classify_disjoint(const AffinityMatrix& aff) {
    if (aff.k < 1) throw ArgumentError("classify_disjoint: k must be >= 1");
    Partition p;
    p.labels.resize(aff.n);
    for (int v = 0; v < aff.n; ++v) {
        int best = 0;
        for (int l = 1; l < aff.k; ++l)
            if (aff.at(v, l) > aff.at(v, best)) best = l;
        p.labels[v] = best;
    }
    return p;
}

Cover classify_overlapping(const AffinityMatrix& aff) {
    if (aff.k < 1) throw ArgumentError("classify_overlapping: k must be >= 1");
    Cover cover;
    cover.memberships.resize(aff.n);
    std::vector<int> order(aff.k);
    for (int v = 0; v < aff.n; ++v) {
        std::iota(order.begin(), order.end(), 0);
        // descending affinity, lower index first among equals
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return aff.at(v, a) > aff.at(v, b);
        });
        int cut = 1;
        if (aff.k > 1) {
            double max_gap = -1.0;
            for (int j = 0; j + 1 < aff.k; ++j) {
                double gap = aff.at(v, order[j]) - aff.at(v, order[j + 1]);
                if (gap > max_gap) {
                    max_gap = gap;
                    cut = j + 1;
                }
            }
        }
        auto& m = cover.memberships[v];
        m.assign(order.begin(), order.begin() + cut);
        std::sort(m.begin(), m.end());
    }
    return cover;
}

SeedAssignment expand_seeds(const AffinityMatrix& aff,
                            const std::variant<Partition, Cover>& assignment,
                            const SeedAssignment& seeds, double epsilon) {
    if (epsilon <= 0.0) throw ArgumentError("expand_seeds: epsilon must be > 0");
    const int k = aff.k;

    // classified members per community, seeds excluded
    std::vector<std::vector<int>> classified(k);
    const bool disjoint = std::holds_alternative<Partition>(assignment);
    if (disjoint) {
        const auto& p = std::get<Partition>(assignment);
        for (int v = 0; v < aff.n; ++v)
            if (!seeds.is_seed(v)) classified[p.labels[v]].push_back(v);
    } else {
        const auto& c = std::get<Cover>(assignment);
        for (int v = 0; v < aff.n; ++v)
            if (!seeds.is_seed(v))
                for (int l : c.memberships[v]) classified[l].push_back(v);
    }

    SeedAssignment next = seeds;
    for (int a = 0; a < k; ++a) {
        auto& members = classified[a];
        if (members.empty()) continue;
        const int promote = static_cast<int>(
            std::ceil(epsilon * static_cast<double>(members.size())));
        // highest affinity to A first; ties to the lower node index
        std::stable_sort(members.begin(), members.end(), [&](int u, int v) {
            return aff.at(u, a) > aff.at(v, a);
        });
        for (int i = 0; i < promote && i < static_cast<int>(members.size()); ++i) {
            const int v = members[i];
            auto& vec =
                next.seeds.try_emplace(v, std::vector<double>(k, 0.0)).first->second;
            vec[a] = 1.0;
            if (!disjoint) {
                // a promoted overlap node seeds every community its current
                // cover assignment contains
                for (int l : std::get<Cover>(assignment).memberships[v]) vec[l] = 1.0;
            }
        }
    }
    return next;
}

RunResult run(const Graph& g, const SeedAssignment& seeds, ClassifyMode mode, int iterations,
              double epsilon, const SolveParams& params) {
    if (iterations < 1) throw ArgumentError("run: iterations must be >= 1");
    SeedAssignment current = seeds;
    for (int it = 0; it < iterations - 1; ++it) {
        try {
            AffinityMatrix aff = compute_affinities(g, current, params);
            std::variant<Partition, Cover> assignment;
            if (mode == ClassifyMode::disjoint)
                assignment = classify_disjoint(aff);
            else
                assignment = classify_overlapping(aff);
            current = expand_seeds(aff, assignment, current, epsilon);
        } catch (const SolverError& e) {
            throw SolverError("iteration " + std::to_string(it + 1) + ": " + e.what(),
                              e.best_iterate, e.residual);
        }
    }
    RunResult result;
    result.affinities = compute_affinities(g, current, params);
    if (mode == ClassifyMode::disjoint)
        result.assignment = classify_disjoint(result.affinities);
    else
        result.assignment = classify_overlapping(result.affinities);
    result.final_seeds = std::move(current);
    return result;
}

}  // namespace abwalk
