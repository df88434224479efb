#ifndef ABWALK_CLASSIFY_HPP
#define ABWALK_CLASSIFY_HPP

#include <variant>
#include <vector>

#include "abwalk/affinity.hpp"
#include "abwalk/graph.hpp"

namespace abwalk {

struct Partition {
    std::vector<int> labels;  // node -> community index

    int node_count() const { return static_cast<int>(labels.size()); }
    // community -> sorted node list (empty communities included)
    std::vector<std::vector<int>> as_communities(int k) const;
};

struct Cover {
    std::vector<std::vector<int>> memberships;  // node -> sorted community indices

    int node_count() const { return static_cast<int>(memberships.size()); }
    std::vector<std::vector<int>> as_communities(int k) const;
};

enum class ClassifyMode { disjoint, overlapping };

// Highest affinity wins; ties go to the lowest community index.
Partition classify_disjoint(const AffinityMatrix& aff);

// Max-gap rule on the descending affinity sequence: keep the prefix before
// the first largest drop.
Cover classify_overlapping(const AffinityMatrix& aff);

// Promotes, per community A, the ceil(epsilon * |C_A|) highest-affinity
// classified non-seed nodes to seed status. Existing seed vectors are only
// ever extended with additional 1 entries.
SeedAssignment expand_seeds(const AffinityMatrix& aff,
                            const std::variant<Partition, Cover>& assignment,
                            const SeedAssignment& seeds, double epsilon);

struct RunResult {
    std::variant<Partition, Cover> assignment;
    AffinityMatrix affinities;
    SeedAssignment final_seeds;
};

// The full pipeline loop: iterations-1 rounds of
// {compute_affinities -> classify -> expand_seeds}, then a final
// compute + classify.
RunResult run(const Graph& g, const SeedAssignment& seeds, ClassifyMode mode, int iterations,
              double epsilon, const SolveParams& params = {});

}  // namespace abwalk

#endif
