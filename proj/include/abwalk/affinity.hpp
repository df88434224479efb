#ifndef ABWALK_AFFINITY_HPP
#define ABWALK_AFFINITY_HPP

#include <map>
#include <vector>

#include "abwalk/graph.hpp"
#include "abwalk/solver.hpp"

namespace abwalk {

// User- or benchmark-supplied seed nodes with their affinity vectors.
// Entries lie in [0,1]; rows need not sum to 1 (overlapping seeds).
struct SeedAssignment {
    int k = 0;
    std::map<int, std::vector<double>> seeds;  // node index -> length-k vector

    bool is_seed(int v) const { return seeds.contains(v); }
    int count() const { return static_cast<int>(seeds.size()); }

    // Throws ConfigError when empty, when a vector has the wrong length or
    // out-of-range entries, or when some community has no positive seed.
    void validate(int node_count) const;
};

// The linear system (D1 - A1) alpha_l = b_l over the non-seed nodes, plus
// the seed-boundary structure needed to assemble each right-hand side.
struct AbsorbingSystem {
    SparseSymmetricMatrix matrix;            // D1 - A1, dimension n - s
    std::vector<double> d1;                  // deg_G of each non-seed node
    std::vector<std::vector<int>> boundary;  // per row: adjacent seed nodes
    std::vector<int> row_to_node;            // row index -> node index
    std::vector<int> node_to_row;            // node index -> row, -1 for seeds
};

struct AffinityMatrix {
    int n = 0;
    int k = 0;
    std::vector<double> values;  // row-major n x k

    double at(int v, int l) const { return values[static_cast<size_t>(v) * k + l]; }
    double& at(int v, int l) { return values[static_cast<size_t>(v) * k + l]; }
};

// Builds D1 - A1 per the absorbing-walk construction: diagonal entries are
// full-graph degrees, off-diagonals -1 per non-seed edge; edges between two
// seed nodes vanish. Requires at least one non-seed node.
AbsorbingSystem build_absorbing_system(const Graph& g, const SeedAssignment& seeds);

// Solves one system per community and assembles the n x k affinity matrix.
// Seed rows are copied verbatim; non-seed results are clamped to [0,1].
AffinityMatrix compute_affinities(const Graph& g, const SeedAssignment& seeds,
                                  const SolveParams& params = {});

// Dense-elimination absorption matrix X = (I - Q)^{-1} R, rows indexed by
// non-seed nodes (system row order), columns by seeds in ascending node
// order. Test oracle; refuses graphs with more than 500 nodes.
std::vector<std::vector<double>> absorption_matrix_oracle(const Graph& g,
                                                          const SeedAssignment& seeds);

}  // namespace abwalk

#endif
