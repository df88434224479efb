#include "abwalk/seeding.hpp"

#include <cmath>
#include <numeric>

#include "abwalk/error.hpp"

namespace abwalk {

SeedAssignment pick_seeds(const Graph& g, const GroundTruth& truth, double fraction,
                          std::mt19937_64& rng) {
    if (fraction <= 0.0 || fraction > 1.0)
        throw ArgumentError("pick_seeds: fraction must be in (0,1]");

    SeedAssignment seeds;
    seeds.k = truth.k();
    for (int l = 0; l < truth.k(); ++l) {
        const auto& comm = truth.communities[l];
        if (comm.empty()) throw ConfigError("pick_seeds: community " + std::to_string(l) +
                                            " is empty");
        const int want = std::max(
            1, static_cast<int>(std::llround(fraction * static_cast<double>(comm.size()))));

        // iterative weighted draws with removal
        std::vector<int> pool = comm;
        std::vector<double> weight(pool.size());
        for (size_t i = 0; i < pool.size(); ++i) weight[i] = g.degree(pool[i]);
        for (int drawn = 0; drawn < want && !pool.empty(); ++drawn) {
            double total = std::accumulate(weight.begin(), weight.end(), 0.0);
            size_t idx = pool.size() - 1;
            if (total > 0.0) {
                double u = std::uniform_real_distribution<double>(0.0, total)(rng);
                double acc = 0.0;
                for (size_t i = 0; i < pool.size(); ++i) {
                    acc += weight[i];
                    if (u < acc) {
                        idx = i;
                        break;
                    }
                }
            } else {
                idx = std::uniform_int_distribution<size_t>(0, pool.size() - 1)(rng);
            }
            const int node = pool[idx];
            auto& vec = seeds.seeds.try_emplace(node, std::vector<double>(seeds.k, 0.0))
                            .first->second;
            vec[l] = 1.0;
            pool.erase(pool.begin() + idx);
            weight.erase(weight.begin() + idx);
        }
    }
    // a multi-member node may have been drawn via one community only; its
    // vector still marks every membership it holds
    auto memb = truth.memberships(g.node_count());
    for (auto& [v, vec] : seeds.seeds)
        for (int c : memb[v]) vec[c] = 1.0;
    return seeds;
}

}  // namespace abwalk
