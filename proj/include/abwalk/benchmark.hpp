#ifndef ABWALK_BENCHMARK_HPP
#define ABWALK_BENCHMARK_HPP

#include <iosfwd>
#include <random>
#include <utility>
#include <vector>

#include "abwalk/graph.hpp"

namespace abwalk {

struct BenchmarkConfig {
    int n = 1000;
    double avg_degree = 20.0;
    int max_degree = 50;
    double degree_exponent = 2.0;
    double community_exponent = 1.0;
    double mu = 0.2;  // mixing parameter
    int c_min = 10;
    int c_max = 50;
    double overlap_fraction = 0.0;
    int memberships_per_overlap_node = 2;
    std::uint64_t rng_seed = 1;

    void validate() const;  // throws ConfigError on infeasible settings
};

struct GroundTruth {
    std::vector<std::vector<int>> communities;  // community -> sorted node list

    int k() const { return static_cast<int>(communities.size()); }
    // node -> sorted community indices
    std::vector<std::vector<int>> memberships(int node_count) const;
};

// Integer power-law sample: P(x) proportional to x^(-exponent) on [lo, hi].
int sample_power_law(double exponent, int lo, int hi, std::mt19937_64& rng);

// LFR-style planted-community generator: power-law degrees and community
// sizes, per-node mixing around mu, optional overlapping memberships.
// Deterministic for a fixed config.rng_seed. The graph is connected for
// mu > 0; at mu = 0 communities are islands and no repair is attempted.
std::pair<Graph, GroundTruth> generate(const BenchmarkConfig& config);

// Reads official LFR output: network.dat (edge list, both orientations) and
// community.dat ("node<TAB>c1 [c2 ...]"). Node sets of the two files must
// coincide.
std::pair<Graph, GroundTruth> read_lfr_files(std::istream& network, std::istream& communities);

// Measured mixing: fraction of each node's neighbors outside all of its
// communities, averaged over nodes.
double measured_mixing(const Graph& g, const GroundTruth& truth);

}  // namespace abwalk

#endif
