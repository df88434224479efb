#ifndef ABWALK_GRAPH_HPP
#define ABWALK_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

namespace abwalk {

struct EdgeListOptions {
    bool one_indexed = true;  // LFR network.dat is 1-indexed
    bool dedupe = true;       // merge repeated / reversed edges
};

// Immutable undirected simple graph in CSR form. Nodes are dense internal
// indices 0..n-1; the external ids seen at load time are kept for output.
class Graph {
public:
    Graph() = default;

    // Edges given as unordered pairs of internal indices; duplicates and
    // reversed copies are merged. Throws ArgumentError on self-loops or
    // out-of-range endpoints.
    static Graph from_edges(int node_count, std::vector<std::pair<int, int>> edges);

    // One edge per line, two whitespace-separated integer ids, '#' comments.
    // Throws ParseError on malformed lines and on self-loops.
    static Graph load_edge_list(std::istream& in, const EdgeListOptions& opts = {});

    int node_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    int degree(int v) const;  // throws ArgumentError when v out of range

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }

    bool has_edge(int u, int v) const;

    bool is_connected() const;

    // internal index -> external id (identity when built via from_edges)
    std::int64_t external_id(int v) const { return external_ids_[v]; }
    // external id -> internal index, or -1 when unknown
    int internal_index(std::int64_t ext) const;

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<int> offsets_;
    std::vector<int> adj_;
    std::vector<std::int64_t> external_ids_;
    std::unordered_map<std::int64_t, int> id_to_index_;
};

}  // namespace abwalk

#endif
