#ifndef ABWALK_METRICS_HPP
#define ABWALK_METRICS_HPP

#include <vector>

#include "abwalk/classify.hpp"

namespace abwalk {

// Shannon entropy of a partition, in bits.
double entropy(const Partition& p);

// Normalized mutual information between two partitions over the same node
// set, I_N = 2 I / (H(A) + H(B)), base-2 logs. Two single-block partitions
// are identical and score 1; a single-block partition against anything else
// scores 0.
double nmi_partition(const Partition& a, const Partition& b);

// Lancichinetti-Fortunato-Kertesz cover NMI,
// 1 - (H(A|B)/H(A) + H(B|A)/H(B)) / 2 with per-community normalization.
// Communities are node sets; every node must appear in at least one set.
// Throws ConfigError when a cover carries no information (every community
// equals the full node set).
double nmi_cover_lfk(const std::vector<std::vector<int>>& a,
                     const std::vector<std::vector<int>>& b, int node_count);

}  // namespace abwalk

#endif
