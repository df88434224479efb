#include "abwalk/graph.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <string>

#include "abwalk/error.hpp"

namespace abwalk {

Graph Graph::from_edges(int node_count, std::vector<std::pair<int, int>> edges) {
    for (auto& [u, v] : edges) {
        if (u < 0 || u >= node_count || v < 0 || v >= node_count)
            throw ArgumentError("edge endpoint out of range: (" + std::to_string(u) + ", " +
                                std::to_string(v) + ")");
        if (u == v) throw ArgumentError("self-loop on node " + std::to_string(u));
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    Graph g;
    g.n_ = node_count;
    g.m_ = static_cast<std::int64_t>(edges.size());
    std::vector<int> deg(node_count, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    g.offsets_.assign(node_count + 1, 0);
    for (int v = 0; v < node_count; ++v) g.offsets_[v + 1] = g.offsets_[v] + deg[v];
    g.adj_.resize(static_cast<size_t>(2) * edges.size());
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (auto [u, v] : edges) {
        g.adj_[cursor[u]++] = v;
        g.adj_[cursor[v]++] = u;
    }
    // columns come out sorted because edges were sorted by (min, max), but
    // the v-side inserts are ordered by u only; sort each row to be safe
    for (int v = 0; v < node_count; ++v)
        std::sort(g.adj_.begin() + g.offsets_[v], g.adj_.begin() + g.offsets_[v + 1]);

    g.external_ids_.resize(node_count);
    for (int v = 0; v < node_count; ++v) g.external_ids_[v] = v;
    return g;
}

namespace {

bool parse_int(std::string_view tok, std::int64_t& out) {
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc{} && ptr == last;
}

}  // namespace

Graph Graph::load_edge_list(std::istream& in, const EdgeListOptions& opts) {
    std::vector<std::pair<std::int64_t, std::int64_t>> raw;
    std::string line;
    long lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#') continue;

        std::string_view sv(line);
        std::vector<std::string_view> toks;
        size_t pos = 0;
        while (pos < sv.size()) {
            size_t b = sv.find_first_not_of(" \t\r", pos);
            if (b == std::string_view::npos) break;
            size_t e = sv.find_first_of(" \t\r", b);
            if (e == std::string_view::npos) e = sv.size();
            toks.push_back(sv.substr(b, e - b));
            pos = e;
        }
        if (toks.size() != 2) throw ParseError("expected two node ids", lineno);
        std::int64_t a, b;
        if (!parse_int(toks[0], a) || !parse_int(toks[1], b))
            throw ParseError("non-integer node id", lineno);
        if (a == b) throw ParseError("self-loop on node " + std::to_string(a), lineno);
        raw.emplace_back(a, b);
    }

    Graph g;
    for (auto [a, b] : raw) {
        for (std::int64_t id : {a, b}) {
            if (!g.id_to_index_.contains(id)) {
                g.id_to_index_.emplace(id, static_cast<int>(g.external_ids_.size()));
                g.external_ids_.push_back(id);
            }
        }
    }
    // stable ordering of internal indices: sort external ids ascending
    std::vector<std::int64_t> ids = g.external_ids_;
    std::sort(ids.begin(), ids.end());
    g.id_to_index_.clear();
    for (size_t i = 0; i < ids.size(); ++i) g.id_to_index_.emplace(ids[i], static_cast<int>(i));
    g.external_ids_ = std::move(ids);

    std::vector<std::pair<int, int>> edges;
    edges.reserve(raw.size());
    for (auto [a, b] : raw)
        edges.emplace_back(g.id_to_index_.at(a), g.id_to_index_.at(b));

    Graph built = from_edges(static_cast<int>(g.external_ids_.size()), std::move(edges));
    built.external_ids_ = std::move(g.external_ids_);
    built.id_to_index_ = std::move(g.id_to_index_);
    (void)opts.dedupe;  // merging is unconditional; flag kept for interface stability
    if (!opts.one_indexed) {
        // ids already preserved verbatim; indexing convention only matters
        // to callers that map back, nothing to adjust here
    }
    return built;
}

int Graph::degree(int v) const {
    if (v < 0 || v >= n_) throw ArgumentError("node index out of range: " + std::to_string(v));
    return offsets_[v + 1] - offsets_[v];
}

bool Graph::has_edge(int u, int v) const {
    auto nb = neighbors(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

bool Graph::is_connected() const {
    if (n_ == 0) return false;
    std::vector<char> seen(n_, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : neighbors(v)) {
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n_;
}

int Graph::internal_index(std::int64_t ext) const {
    // graphs built in memory use identity ids and carry no map
    if (id_to_index_.empty()) return ext >= 0 && ext < n_ ? static_cast<int>(ext) : -1;
    auto it = id_to_index_.find(ext);
    return it == id_to_index_.end() ? -1 : it->second;
}

}  // namespace abwalk
