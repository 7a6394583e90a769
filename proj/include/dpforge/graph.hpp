#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace dpforge {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
/// Adjacency is stored as bitset rows (64-bit words), which keeps the
/// distance / subset machinery fast at enumeration sizes. No self-loops,
/// no parallel edges; add_edge is idempotent.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const;

    bool has_edge(int u, int v) const;
    void add_edge(int u, int v);
    void remove_edge(int u, int v);  // throws if the edge is absent

    int degree(int v) const;
    std::vector<int> neighbors(int v) const;

    /// All edges as (u, v) with u < v, sorted.
    std::vector<Edge> edges() const;

    Graph complement() const;

    /// Raw adjacency word; word w covers vertices 64w..64w+63.
    uint64_t adjacency_word(int v, int w) const {
        return bits_[static_cast<size_t>(v) * words_ + w];
    }
    int word_count() const { return words_; }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && bits_ == other.bits_;
    }

private:
    void check_vertex(int v) const;

    int n_ = 0;
    int words_ = 0;
    std::vector<uint64_t> bits_;
};

/// All-pairs hop distances; kUnreachable marks pairs in different components.
struct DistanceMatrix {
    static constexpr int kUnreachable = -1;

    int n = 0;
    std::vector<int> d;  // row-major n*n

    int at(int u, int v) const { return d[static_cast<size_t>(u) * n + v]; }
    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }
};

/// Result of restricting a graph to a vertex subset. Vertices are relabeled
/// to 0..|s|-1 in increasing order of their old ids; old_to_new is -1 for
/// vertices outside the subset.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_to_new;
    std::vector<int> new_to_old;
};

std::vector<int> bfs_distances(const Graph& g, int source);
DistanceMatrix distance_matrix(const Graph& g);

/// The empty graph and the one-vertex graph count as connected.
bool is_connected(const Graph& g);

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s);

// A few stock graphs used all over the tests and builders.
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph empty_graph(int n);

}  // namespace dpforge
