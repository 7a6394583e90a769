#include "dpforge/graph.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace dpforge {

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    n_ = n;
    words_ = (n + 63) / 64;
    bits_.assign(static_cast<size_t>(n_) * words_, 0);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_) throw std::invalid_argument("vertex id out of range");
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return (bits_[static_cast<size_t>(u) * words_ + v / 64] >> (v % 64)) & 1u;
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loops are not allowed");
    bits_[static_cast<size_t>(u) * words_ + v / 64] |= uint64_t{1} << (v % 64);
    bits_[static_cast<size_t>(v) * words_ + u / 64] |= uint64_t{1} << (u % 64);
}

void Graph::remove_edge(int u, int v) {
    if (!has_edge(u, v)) throw std::invalid_argument("edge is not present");
    bits_[static_cast<size_t>(u) * words_ + v / 64] &= ~(uint64_t{1} << (v % 64));
    bits_[static_cast<size_t>(v) * words_ + u / 64] &= ~(uint64_t{1} << (u % 64));
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (int w = 0; w < words_; ++w)
        d += std::popcount(bits_[static_cast<size_t>(v) * words_ + w]);
    return d;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < n_; ++v) total += degree(v);
    return total / 2;
}

std::vector<int> Graph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int w = 0; w < words_; ++w) {
        uint64_t m = bits_[static_cast<size_t>(v) * words_ + w];
        while (m) {
            out.push_back(w * 64 + std::countr_zero(m));
            m &= m - 1;
        }
    }
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < n_; ++u)
        for (int v : neighbors(u))
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph Graph::complement() const {
    Graph g(n_);
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) g.add_edge(u, v);
    return g;
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("source out of range");
    std::vector<int> dist(n, DistanceMatrix::kUnreachable);
    std::vector<int> queue;
    queue.reserve(n);
    dist[source] = 0;
    queue.push_back(source);
    for (size_t qi = 0; qi < queue.size(); ++qi) {
        const int u = queue[qi];
        for (int w = 0; w < g.word_count(); ++w) {
            uint64_t m = g.adjacency_word(u, w);
            while (m) {
                const int v = w * 64 + std::countr_zero(m);
                m &= m - 1;
                if (dist[v] < 0) {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    return dist;
}

DistanceMatrix distance_matrix(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix m;
    m.n = n;
    m.d.resize(static_cast<size_t>(n) * n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> row = bfs_distances(g, v);
        std::copy(row.begin(), row.end(), m.d.begin() + static_cast<size_t>(v) * n);
    }
    return m;
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<int> dist = bfs_distances(g, 0);
    return std::all_of(dist.begin(), dist.end(),
                       [](int d) { return d != DistanceMatrix::kUnreachable; });
}

InducedSubgraph induced_subgraph(const Graph& g, const std::vector<int>& s) {
    std::vector<int> verts = s;
    std::sort(verts.begin(), verts.end());
    for (size_t i = 0; i < verts.size(); ++i) {
        if (verts[i] < 0 || verts[i] >= g.vertex_count())
            throw std::invalid_argument("subset vertex out of range");
        if (i > 0 && verts[i] == verts[i - 1])
            throw std::invalid_argument("subset contains a duplicate vertex");
    }
    InducedSubgraph out;
    out.graph = Graph(static_cast<int>(verts.size()));
    out.new_to_old = verts;
    out.old_to_new.assign(g.vertex_count(), -1);
    for (size_t i = 0; i < verts.size(); ++i) out.old_to_new[verts[i]] = static_cast<int>(i);
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if (g.has_edge(verts[i], verts[j]))
                out.graph.add_edge(static_cast<int>(i), static_cast<int>(j));
    return out;
}

Graph path_graph(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

Graph complete_graph(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph empty_graph(int n) { return Graph(n); }

}  // namespace dpforge
