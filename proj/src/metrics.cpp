#include "abwalk/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <string>

#include "abwalk/error.hpp"

namespace abwalk {

namespace {

// -p log2 p with the 0 log 0 := 0 convention
double plog(double p) { return p > 0.0 ? -p * std::log2(p) : 0.0; }

struct Confusion {
    std::map<std::pair<int, int>, long> counts;
    std::map<int, long> row_sums, col_sums;
    long n = 0;
};

Confusion confusion(const Partition& a, const Partition& b) {
    if (a.node_count() != b.node_count())
        throw ArgumentError("nmi_partition: partitions cover different node sets");
    Confusion c;
    c.n = a.node_count();
    for (int v = 0; v < a.node_count(); ++v) {
        ++c.counts[{a.labels[v], b.labels[v]}];
        ++c.row_sums[a.labels[v]];
        ++c.col_sums[b.labels[v]];
    }
    return c;
}

double entropy_of_sizes(const std::map<int, long>& sizes, long n) {
    double h = 0.0;
    for (auto [id, cnt] : sizes) h += plog(static_cast<double>(cnt) / n);
    return h;
}

}  // namespace

double entropy(const Partition& p) {
    if (p.node_count() < 1) throw ArgumentError("entropy: empty partition");
    std::map<int, long> sizes;
    for (int l : p.labels) ++sizes[l];
    return entropy_of_sizes(sizes, p.node_count());
}

double nmi_partition(const Partition& a, const Partition& b) {
    Confusion c = confusion(a, b);
    const double ha = entropy_of_sizes(c.row_sums, c.n);
    const double hb = entropy_of_sizes(c.col_sums, c.n);
    if (ha + hb == 0.0) return 1.0;  // both single-block, hence identical
    double mi = 0.0;
    for (auto& [ab, cnt] : c.counts) {
        const double pab = static_cast<double>(cnt) / c.n;
        const double pa = static_cast<double>(c.row_sums.at(ab.first)) / c.n;
        const double pb = static_cast<double>(c.col_sums.at(ab.second)) / c.n;
        if (pab > 0.0) mi += pab * std::log2(pab / (pa * pb));
    }
    double nmi = 2.0 * mi / (ha + hb);
    return std::clamp(nmi, 0.0, 1.0);
}

namespace {

// LFK building blocks over binary membership indicators. Counts (a,b,c,d)
// are the 2x2 joint cells: d = |X cap Y|, c = |X \ Y|, b = |Y \ X|, a = rest.
double h_count(long w, long n) { return plog(static_cast<double>(w) / n) * n; }

double h_star(long a, long b, long c, long d, long n) {
    const double ha = h_count(a, n), hb = h_count(b, n), hc = h_count(c, n),
                 hd = h_count(d, n);
    if (ha + hd >= hb + hc) {
        double h = ha + hb + hc + hd - h_count(b + d, n) - h_count(a + c, n);
        return std::max(h, 0.0);
    }
    // negatively correlated pair: fall back to the unconditional entropy
    return h_count(c + d, n) + h_count(a + b, n);
}

double marginal_entropy(long size, long n) { return h_count(size, n) + h_count(n - size, n); }

// mean over communities X of H(X|Y*)/H(X), Y* the best-matching community
double normalized_conditional(const std::vector<std::vector<int>>& xs,
                              const std::vector<std::vector<int>>& ys, long n) {
    double sum = 0.0;
    int counted = 0;
    for (const auto& x : xs) {
        const long hx_terms = static_cast<long>(x.size());
        const double hx = marginal_entropy(hx_terms, n);
        if (hx == 0.0) continue;  // community carries no information
        double best = hx;
        for (const auto& y : ys) {
            std::vector<int> inter;
            std::set_intersection(x.begin(), x.end(), y.begin(), y.end(),
                                  std::back_inserter(inter));
            const long d = static_cast<long>(inter.size());
            const long c = static_cast<long>(x.size()) - d;
            const long b = static_cast<long>(y.size()) - d;
            const long a = n - b - c - d;
            best = std::min(best, h_star(a, b, c, d, n));
        }
        sum += best / hx;
        ++counted;
    }
    if (counted == 0)
        throw ConfigError("nmi_cover_lfk: degenerate cover (every community is the full "
                          "node set)");
    return sum / counted;
}

}  // namespace

double nmi_cover_lfk(const std::vector<std::vector<int>>& a,
                     const std::vector<std::vector<int>>& b, int node_count) {
    if (a.empty() || b.empty()) throw ArgumentError("nmi_cover_lfk: empty cover");
    auto sorted_nonempty = [](const std::vector<std::vector<int>>& cover) {
        std::vector<std::vector<int>> out;
        for (const auto& c : cover) {
            if (c.empty()) continue;
            out.push_back(c);
            std::sort(out.back().begin(), out.back().end());
        }
        return out;
    };
    auto xs = sorted_nonempty(a);
    auto ys = sorted_nonempty(b);
    if (xs.empty() || ys.empty()) throw ArgumentError("nmi_cover_lfk: empty cover");

    auto check_cover = [node_count](const std::vector<std::vector<int>>& cover) {
        std::vector<char> seen(node_count, 0);
        for (const auto& c : cover)
            for (int v : c) {
                if (v < 0 || v >= node_count)
                    throw ArgumentError("nmi_cover_lfk: node " + std::to_string(v) +
                                        " out of range");
                seen[v] = 1;
            }
        for (int v = 0; v < node_count; ++v)
            if (!seen[v])
                throw ArgumentError("nmi_cover_lfk: node " + std::to_string(v) +
                                    " is not covered");
    };
    check_cover(xs);
    check_cover(ys);

    const long n = node_count;
    const double value =
        1.0 - 0.5 * (normalized_conditional(xs, ys, n) + normalized_conditional(ys, xs, n));
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace abwalk
