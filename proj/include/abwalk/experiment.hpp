#ifndef ABWALK_EXPERIMENT_HPP
#define ABWALK_EXPERIMENT_HPP

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "abwalk/benchmark.hpp"
#include "abwalk/classify.hpp"
#include "abwalk/solver.hpp"

namespace abwalk {

enum class SweepVariable { mu, overlap_fraction };

struct ExperimentSpec {
    BenchmarkConfig benchmark;
    double seed_fraction = 0.10;
    ClassifyMode mode = ClassifyMode::disjoint;
    int iterations = 1;
    double epsilon = 0.1;
    int repetitions = 100;
    SweepVariable sweep = SweepVariable::mu;
    std::vector<double> sweep_values;
    SolveParams solver;
    std::uint64_t rng_seed = 1;
    int workers = 0;  // 0 -> hardware concurrency

    void validate() const;
};

struct SweepRow {
    double value = 0.0;
    double mean_nmi = 0.0;
    double std_nmi = 0.0;
    int reps = 0;
};

// One pipeline repetition: generate (retrying disconnected graphs), pick
// seeds, run, score against ground truth. Returns the NMI.
double run_repetition(const ExperimentSpec& spec, double sweep_value, std::uint64_t rep_seed);

// Full sweep; rows come back in sweep-value order, deterministic for a
// fixed spec.rng_seed.
std::vector<SweepRow> run_experiment(const ExperimentSpec& spec);

void write_csv(std::ostream& out, const ExperimentSpec& spec,
               const std::vector<SweepRow>& rows);

// Seed file: "node_id<TAB>community_id[,community_id...]" or
// "node_id<TAB>a_1 a_2 ... a_k" (fractional affinities, detected when the
// line has k floating-point fields). Community ids are external labels,
// mapped to dense indices in sorted order.
struct NamedSeeds {
    SeedAssignment seeds;
    std::vector<std::string> community_names;  // dense index -> label
};

NamedSeeds load_seed_file(std::istream& in, const Graph& g);

// detect: load graph + seeds, run, write one line per node: external id,
// community label(s), affinity vector.
void detect(const Graph& g, const NamedSeeds& named, ClassifyMode mode, int iterations,
            double epsilon, const SolveParams& params, std::ostream& out);

std::uint64_t derive_stream_seed(std::uint64_t base, std::uint64_t sweep_index,
                                 std::uint64_t repetition);

}  // namespace abwalk

#endif
