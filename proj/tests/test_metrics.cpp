#include <random>

#include "abwalk/error.hpp"
#include "abwalk/metrics.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace abwalk;

namespace {

Partition part(std::vector<int> labels) {
    Partition p;
    p.labels = std::move(labels);
    return p;
}

}  // namespace

TEST_CASE("entropy of a 3/1 split") {
    CHECK(entropy(part({0, 0, 0, 1})) == doctest::Approx(0.8112781244591328).epsilon(1e-12));
    CHECK(entropy(part({0, 0, 1, 1})) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(entropy(part({0, 0, 0})) == doctest::Approx(0.0));
}

TEST_CASE("nmi is 1 on identical partitions, 0 against a single block") {
    auto p = part({0, 0, 1, 1, 2});
    CHECK(nmi_partition(p, p) == doctest::Approx(1.0).epsilon(1e-12));
    auto relabeled = part({2, 2, 0, 0, 1});
    CHECK(nmi_partition(p, relabeled) == doctest::Approx(1.0).epsilon(1e-12));
    auto block = part({0, 0, 0, 0, 0});
    CHECK(nmi_partition(p, block) == doctest::Approx(0.0));
    CHECK(nmi_partition(block, block) == doctest::Approx(1.0));
}

TEST_CASE("pinned 4-node value") {
    // A = {0,0,1,1}, B = {0,1,1,1}
    CHECK(nmi_partition(part({0, 0, 1, 1}), part({0, 1, 1, 1})) ==
          doctest::Approx(0.34371101848545077).epsilon(1e-10));
}

TEST_CASE("symmetry and range on random partitions") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        int n = std::uniform_int_distribution<int>(2, 50)(rng);
        std::vector<int> a(n), b(n);
        int ka = std::uniform_int_distribution<int>(1, 5)(rng);
        int kb = std::uniform_int_distribution<int>(1, 5)(rng);
        for (auto& x : a) x = std::uniform_int_distribution<int>(0, ka - 1)(rng);
        for (auto& x : b) x = std::uniform_int_distribution<int>(0, kb - 1)(rng);
        double ab = nmi_partition(part(a), part(b));
        CHECK(ab == doctest::Approx(nmi_partition(part(b), part(a))).epsilon(1e-12));
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(ab == doctest::Approx(testsupport::brute_nmi(a, b)).epsilon(1e-10));
    }
}

TEST_CASE("exhaustive agreement with the brute-force oracle on small n") {
    for (int n = 2; n <= 5; ++n) {
        auto parts = testsupport::all_partitions(n);
        for (const auto& a : parts)
            for (const auto& b : parts)
                CHECK(nmi_partition(part(a), part(b)) ==
                      doctest::Approx(testsupport::brute_nmi(a, b)).epsilon(1e-10));
    }
}

TEST_CASE("size mismatch is an argument error") {
    CHECK_THROWS_AS(nmi_partition(part({0, 1}), part({0, 1, 2})), ArgumentError);
}

TEST_CASE("LFK cover NMI is 1 on identical covers") {
    std::vector<std::vector<int>> cover = {{0, 1, 2}, {3, 4, 5}};
    CHECK(nmi_cover_lfk(cover, cover, 6) == doctest::Approx(1.0).epsilon(1e-12));
    // order of communities does not matter
    std::vector<std::vector<int>> flipped = {{3, 4, 5}, {0, 1, 2}};
    CHECK(nmi_cover_lfk(cover, flipped, 6) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("pinned 6-node overlapping value") {
    std::vector<std::vector<int>> a = {{0, 1, 2, 3}, {2, 3, 4, 5}};
    std::vector<std::vector<int>> b = {{0, 1, 2}, {3, 4, 5}};
    CHECK(nmi_cover_lfk(a, b, 6) == doctest::Approx(0.4795739585136225).epsilon(1e-10));
    CHECK(nmi_cover_lfk(b, a, 6) == doctest::Approx(0.4795739585136225).epsilon(1e-10));
}

TEST_CASE("LFK matches partition NMI qualitatively on disjoint covers") {
    std::vector<std::vector<int>> a = {{0, 1, 2, 3}, {4, 5, 6, 7}};
    std::vector<std::vector<int>> close = {{0, 1, 2}, {3, 4, 5, 6, 7}};
    std::vector<std::vector<int>> far = {{0, 2, 4, 6}, {1, 3, 5, 7}};
    CHECK(nmi_cover_lfk(a, a, 8) > nmi_cover_lfk(a, close, 8));
    CHECK(nmi_cover_lfk(a, close, 8) > nmi_cover_lfk(a, far, 8));
}

TEST_CASE("LFK range and symmetry on random covers") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n = std::uniform_int_distribution<int>(4, 30)(rng);
        auto draw = [&] {
            int k = std::uniform_int_distribution<int>(2, 4)(rng);
            std::vector<std::vector<int>> cover(k);
            for (int v = 0; v < n; ++v) {
                cover[std::uniform_int_distribution<int>(0, k - 1)(rng)].push_back(v);
                // occasional second membership
                if (std::uniform_real_distribution<double>(0, 1)(rng) < 0.2)
                    cover[std::uniform_int_distribution<int>(0, k - 1)(rng)].push_back(v);
            }
            for (auto& c : cover) {
                std::sort(c.begin(), c.end());
                c.erase(std::unique(c.begin(), c.end()), c.end());
            }
            std::erase_if(cover, [](auto& c) { return c.empty(); });
            return cover;
        };
        auto a = draw(), b = draw();
        double ab = nmi_cover_lfk(a, b, n);
        CHECK(ab >= 0.0);
        CHECK(ab <= 1.0);
        CHECK(ab == doctest::Approx(nmi_cover_lfk(b, a, n)).epsilon(1e-12));
    }
}

TEST_CASE("degenerate cover is a config error") {
    std::vector<std::vector<int>> full = {{0, 1, 2}, {0, 1, 2}};
    std::vector<std::vector<int>> ok = {{0, 1}, {2}};
    CHECK_THROWS_AS(nmi_cover_lfk(full, ok, 3), ConfigError);
}

TEST_CASE("uncovered node is an argument error") {
    std::vector<std::vector<int>> a = {{0, 1}};
    std::vector<std::vector<int>> b = {{0, 1, 2}};
    CHECK_THROWS_AS(nmi_cover_lfk(a, b, 3), ArgumentError);
}
