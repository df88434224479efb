#ifndef ABWALK_SEEDING_HPP
#define ABWALK_SEEDING_HPP

#include <random>

#include "abwalk/affinity.hpp"
#include "abwalk/benchmark.hpp"
#include "abwalk/graph.hpp"

namespace abwalk {

// Samples max(1, round(fraction * |C|)) seeds from each ground-truth
// community, without replacement, with probability proportional to degree.
// A node drawn via several communities becomes one seed with a multi-hot
// vector (1 for every community it belongs to).
SeedAssignment pick_seeds(const Graph& g, const GroundTruth& truth, double fraction,
                          std::mt19937_64& rng);

}  // namespace abwalk

#endif
