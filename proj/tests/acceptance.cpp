// End-to-end acceptance checks. Each criterion prints one PASS/FAIL line;
// the process exits nonzero when any criterion fails. The experiment
// criteria run real benchmark sweeps and take tens of minutes combined.
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "abwalk/affinity.hpp"
#include "abwalk/benchmark.hpp"
#include "abwalk/classify.hpp"
#include "abwalk/experiment.hpp"
#include "abwalk/metrics.hpp"
#include "abwalk/seeding.hpp"
#include "abwalk/solver.hpp"
#include "support.hpp"

using namespace abwalk;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, bool ok, const std::string& detail) {
    std::printf("[%s] criterion %d: %s\n", ok ? "PASS" : "FAIL", num, detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

double elapsed_s(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SeedAssignment random_seed_set(int n, std::mt19937_64& rng) {
    SeedAssignment s;
    s.k = std::uniform_int_distribution<int>(1, 4)(rng);
    int count = std::uniform_int_distribution<int>(s.k, std::max(s.k, n / 4))(rng);
    std::vector<int> nodes(n);
    std::iota(nodes.begin(), nodes.end(), 0);
    std::shuffle(nodes.begin(), nodes.end(), rng);
    bool fractional = std::uniform_int_distribution<int>(0, 1)(rng) == 1;
    for (int i = 0; i < count; ++i) {
        std::vector<double> vec(s.k, 0.0);
        if (fractional) {
            for (auto& x : vec) x = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
        }
        vec[i % s.k] = 1.0;
        s.seeds[nodes[i]] = std::move(vec);
    }
    return s;
}

void criterion1() {
    auto start = Clock::now();
    std::mt19937_64 rng(101);
    double worst = 0.0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = std::uniform_int_distribution<int>(5, 200)(rng);
        Graph g = testsupport::random_connected_graph(n, 2 * n, rng);
        auto seeds = random_seed_set(n, rng);
        auto aff = compute_affinities(g, seeds);
        auto x = absorption_matrix_oracle(g, seeds);
        std::vector<int> seed_nodes;
        for (auto& [v, vec] : seeds.seeds) seed_nodes.push_back(v);
        int row = 0;
        for (int v = 0; v < n; ++v) {
            if (seeds.is_seed(v)) continue;
            for (int l = 0; l < seeds.k; ++l) {
                double expect = 0.0;
                for (size_t j = 0; j < seed_nodes.size(); ++j)
                    expect += x[row][j] * seeds.seeds.at(seed_nodes[j])[l];
                worst = std::max(worst, std::abs(aff.at(v, l) - expect));
            }
            ++row;
        }
    }
    std::ostringstream msg;
    msg << "oracle equivalence on 200 graphs, max |diff| = " << worst << " (" << elapsed_s(start)
        << " s)";
    report(1, worst <= 1e-8, msg.str());
}

void criterion2() {
    bool ok = true;
    Graph path = testsupport::make_path(5);
    SeedAssignment ends;
    ends.k = 2;
    ends.seeds[0] = {1.0, 0.0};
    ends.seeds[4] = {0.0, 1.0};
    auto aff = compute_affinities(path, ends);
    double expect[3] = {0.75, 0.5, 0.25};
    for (int i = 0; i < 3; ++i) ok = ok && std::abs(aff.at(i + 1, 0) - expect[i]) <= 1e-10;

    for (int s = 2; s <= 6; ++s) {
        Graph star = testsupport::make_star(s);
        SeedAssignment leaves;
        leaves.k = s;
        for (int l = 1; l <= s; ++l) {
            std::vector<double> vec(s, 0.0);
            vec[l - 1] = 1.0;
            leaves.seeds[l] = std::move(vec);
        }
        auto sa = compute_affinities(star, leaves);
        for (int l = 0; l < s; ++l) ok = ok && std::abs(sa.at(0, l) - 1.0 / s) <= 1e-10;
    }
    report(2, ok, "analytic absorption values on path-of-5 and stars");
}

void criterion3() {
    std::mt19937_64 rng(103);
    double worst = 0.0;
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(5, 150)(rng);
        Graph g = testsupport::random_connected_graph(n, n, rng);
        SeedAssignment seeds;
        seeds.k = std::uniform_int_distribution<int>(1, 5)(rng);
        int count = std::uniform_int_distribution<int>(seeds.k, std::max(seeds.k, n / 3))(rng);
        std::vector<int> nodes(n);
        std::iota(nodes.begin(), nodes.end(), 0);
        std::shuffle(nodes.begin(), nodes.end(), rng);
        for (int i = 0; i < count; ++i) {
            std::vector<double> vec(seeds.k, 0.0);
            vec[i % seeds.k] = 1.0;
            seeds.seeds[nodes[i]] = std::move(vec);
        }
        auto aff = compute_affinities(g, seeds);
        for (int v = 0; v < n; ++v) {
            double sum = 0.0;
            for (int l = 0; l < seeds.k; ++l) sum += aff.at(v, l);
            worst = std::max(worst, std::abs(sum - 1.0));
        }
    }
    std::ostringstream msg;
    msg << "stochastic closure, max |row sum - 1| = " << worst;
    report(3, worst <= 1e-8, msg.str());
}

void criterion4() {
    std::mt19937_64 rng(104);
    bool ok = true;
    double worst = 0.0;
    for (int trial = 0; trial < 50; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 200)(rng);
        std::vector<std::vector<double>> dense(n, std::vector<double>(n, 0.0));
        std::uniform_real_distribution<double> val(-1.0, 1.0);
        std::uniform_int_distribution<int> col(0, n - 1);
        for (int e = 0; e < 4 * n; ++e) {
            int i = col(rng), j = col(rng);
            if (i == j) continue;
            double v = val(rng);
            dense[i][j] += v;
            dense[j][i] += v;
        }
        std::vector<std::tuple<int, int, double>> trip;
        for (int i = 0; i < n; ++i) {
            double s = 0.0;
            for (int j = 0; j < n; ++j)
                if (j != i) s += std::abs(dense[i][j]);
            dense[i][i] = 1.0 + s;
            for (int j = i; j < n; ++j)
                if (dense[i][j] != 0.0) trip.emplace_back(i, j, dense[i][j]);
        }
        auto a = SparseSymmetricMatrix::from_triplets(n, trip);
        std::vector<double> b(n);
        for (auto& x : b) x = val(rng);
        auto res = solve(a, b);
        double bn = std::sqrt(std::inner_product(b.begin(), b.end(), b.begin(), 0.0));
        ok = ok && residual_norm(a, res.x, b) <= 1e-10 * bn * (1.0 + 1e-9);
        auto oracle = testsupport::dense_solve(dense, b);
        double scale = 1.0;
        for (double v : oracle) scale = std::max(scale, std::abs(v));
        for (int i = 0; i < n; ++i)
            worst = std::max(worst, std::abs(res.x[i] - oracle[i]) / scale);
    }
    std::ostringstream msg;
    msg << "solver residual contract and dense agreement, max relative diff = " << worst;
    report(4, ok && worst <= 1e-8, msg.str());
}

// fast partition-NMI oracle for labels in [0, 8)
double brute_nmi_small(const std::vector<int>& a, const std::vector<int>& b) {
    const int n = static_cast<int>(a.size());
    int ca[8] = {}, cb[8] = {}, joint[8][8] = {};
    for (int v = 0; v < n; ++v) {
        ++ca[a[v]];
        ++cb[b[v]];
        ++joint[a[v]][b[v]];
    }
    double ha = 0.0, hb = 0.0, mi = 0.0;
    for (int i = 0; i < 8; ++i) {
        if (ca[i]) ha -= (double(ca[i]) / n) * std::log2(double(ca[i]) / n);
        if (cb[i]) hb -= (double(cb[i]) / n) * std::log2(double(cb[i]) / n);
    }
    if (ha + hb == 0.0) return 1.0;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            if (joint[i][j]) {
                double pab = double(joint[i][j]) / n;
                mi += pab * std::log2(pab * n * n / (double(ca[i]) * cb[j]));
            }
    return 2.0 * mi / (ha + hb);
}

void criterion5() {
    auto start = Clock::now();
    bool ok = true;
    auto part = [](std::vector<int> l) {
        Partition p;
        p.labels = std::move(l);
        return p;
    };
    auto ident = part({0, 0, 1, 1, 2, 2});
    ok = ok && std::abs(nmi_partition(ident, ident) - 1.0) <= 1e-12;
    // statistically independent 4-node pair
    ok = ok && std::abs(nmi_partition(part({0, 0, 1, 1}), part({0, 1, 0, 1}))) <= 1e-12;
    ok = ok && std::abs(nmi_partition(part({0, 0, 1, 1}), part({0, 1, 1, 1})) - 0.3437) <= 1e-4;

    double worst = 0.0;
    for (int n = 2; n <= 8 && ok; ++n) {
        auto parts = testsupport::all_partitions(n);
        for (const auto& a : parts) {
            Partition pa = part(a);
            for (const auto& b : parts) {
                double diff = std::abs(nmi_partition(pa, part(b)) - brute_nmi_small(a, b));
                worst = std::max(worst, diff);
            }
        }
    }
    std::ostringstream msg;
    msg << "metric pins and enumeration oracle to n=8, max |diff| = " << worst << " ("
        << elapsed_s(start) << " s)";
    report(5, ok && worst <= 1e-10, msg.str());
}

ExperimentSpec paper_spec() {
    ExperimentSpec spec;
    spec.benchmark.n = 1000;
    spec.benchmark.avg_degree = 20.0;
    spec.benchmark.max_degree = 50;
    spec.benchmark.c_min = 10;
    spec.benchmark.c_max = 50;
    // 100 repetitions per sweep point; a 20-rep mean has a standard error
    // around 0.04 at mu=0.5 and flips the 0.85 gate on harness-seed luck
    spec.repetitions = 100;
    spec.rng_seed = 2024;
    return spec;
}

std::string fmt_rows(const std::vector<SweepRow>& rows) {
    std::ostringstream out;
    for (const auto& r : rows) {
        char buf[64];
        std::snprintf(buf, sizeof buf, " %.2f:%.3f", r.value, r.mean_nmi);
        out << buf;
    }
    return out.str();
}

void criterion6() {
    auto start = Clock::now();
    auto spec = paper_spec();
    spec.seed_fraction = 0.10;
    spec.sweep_values = {0.1, 0.2, 0.3, 0.4};
    auto rows = run_experiment(spec);
    bool ok = true;
    for (const auto& r : rows) ok = ok && r.mean_nmi >= 0.85;
    std::ostringstream msg;
    msg << "non-iterative curve, mean NMI" << fmt_rows(rows) << " (" << elapsed_s(start)
        << " s)";
    report(6, ok, msg.str());
}

void criterion7() {
    auto start = Clock::now();
    auto spec = paper_spec();
    spec.seed_fraction = 0.06;
    spec.sweep_values = {0.1, 0.2, 0.3, 0.4, 0.5};

    auto base = run_experiment(spec);
    spec.iterations = 10;
    spec.epsilon = 0.1;
    auto iter = run_experiment(spec);

    bool ok = true;
    for (size_t i = 0; i < iter.size(); ++i) {
        ok = ok && iter[i].mean_nmi >= 0.85;
        ok = ok && iter[i].mean_nmi >= base[i].mean_nmi;
    }
    std::ostringstream msg;
    msg << "iterative curve, mean NMI" << fmt_rows(iter) << " vs non-iterative"
        << fmt_rows(base) << " (" << elapsed_s(start) << " s)";
    report(7, ok, msg.str());
}

void criterion8() {
    auto start = Clock::now();
    auto spec = paper_spec();
    spec.benchmark.mu = 0.1;
    spec.mode = ClassifyMode::overlapping;
    spec.sweep = SweepVariable::overlap_fraction;
    spec.sweep_values = {0.1, 0.2, 0.3};

    spec.seed_fraction = 0.10;
    auto trend = run_experiment(spec);
    bool ok = trend[0].mean_nmi >= 0.6;
    for (size_t i = 1; i < trend.size(); ++i) ok = ok && trend[i].mean_nmi <= trend[i - 1].mean_nmi;

    spec.seed_fraction = 0.08;
    auto base = run_experiment(spec);
    spec.iterations = 10;
    auto iter = run_experiment(spec);
    for (size_t i = 0; i < iter.size(); ++i) ok = ok && iter[i].mean_nmi >= base[i].mean_nmi;

    std::ostringstream msg;
    msg << "overlapping LFK trend" << fmt_rows(trend) << ", iterative" << fmt_rows(iter)
        << " vs" << fmt_rows(base) << " (" << elapsed_s(start) << " s)";
    report(8, ok, msg.str());
}

void criterion9() {
    auto start = Clock::now();
    std::vector<double> log_m, log_t;
    std::ostringstream detail;
    for (int n : {1000, 10000, 100000}) {
        BenchmarkConfig config;
        config.n = n;
        config.avg_degree = 20.0;
        config.max_degree = 50;
        config.mu = 0.3;
        config.c_min = n / 40;  // exactly 40 equal-size communities
        config.c_max = n / 40;
        config.rng_seed = 77;
        auto [g, truth] = generate(config);
        std::mt19937_64 rng(7);
        auto seeds = pick_seeds(g, truth, 0.10, rng);
        auto t0 = Clock::now();
        auto aff = compute_affinities(g, seeds);
        double secs = elapsed_s(t0);
        log_m.push_back(std::log(double(g.edge_count())));
        log_t.push_back(std::log(std::max(secs, 1e-4)));
        detail << " n=" << n << ":" << secs << "s";
        (void)aff;
    }
    double mx = std::accumulate(log_m.begin(), log_m.end(), 0.0) / 3.0;
    double my = std::accumulate(log_t.begin(), log_t.end(), 0.0) / 3.0;
    double num = 0.0, den = 0.0;
    for (int i = 0; i < 3; ++i) {
        num += (log_m[i] - mx) * (log_t[i] - my);
        den += (log_m[i] - mx) * (log_m[i] - mx);
    }
    double slope = num / den;
    std::ostringstream msg;
    msg << "scaling fit exponent " << slope << " over" << detail.str() << " (total "
        << elapsed_s(start) << " s)";
    report(9, slope < 1.5, msg.str());
}

void criterion10() {
    auto spec = paper_spec();
    spec.seed_fraction = 0.10;
    spec.repetitions = 5;
    spec.sweep_values = {0.1, 0.3};
    std::ostringstream a, b;
    write_csv(a, spec, run_experiment(spec));
    write_csv(b, spec, run_experiment(spec));
    report(10, a.str() == b.str() && !a.str().empty(), "repeated sweep gives byte-identical CSV");
}

}  // namespace

int main() {
    criterion1();
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7();
    criterion8();
    criterion9();
    criterion10();
    if (failures) {
        std::printf("%d criterion(s) failed\n", failures);
        return 1;
    }
    std::printf("all criteria passed\n");
    return 0;
}
