// Test-only brute-force oracles, independent of the library's own
// algorithms: distances via Floyd-Warshall, isomorphism via permutation
// search, and exhaustive graph generation for tiny orders.
#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "dpforge/graph.hpp"

namespace oracles {

inline std::vector<std::vector<int>> floyd_warshall(const dpforge::Graph& g) {
    const int n = g.vertex_count();
    const int inf = 1 << 28;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int i = 0; i < n; ++i) d[i][i] = 0;
    for (const auto& [u, v] : g.edges()) d[u][v] = d[v][u] = 1;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (d[i][j] >= inf) d[i][j] = dpforge::DistanceMatrix::kUnreachable;
    return d;
}

// Permutation search; only sensible for small n.
inline bool brute_isomorphic(const dpforge::Graph& g, const dpforge::Graph& h) {
    const int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (g.has_edge(u, v) != h.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

// Every labeled graph on n vertices (2^(n(n-1)/2) of them).
template <typename Fn>
void for_each_labeled_graph(int n, Fn fn) {
    const int bits = n * (n - 1) / 2;
    for (long mask = 0; mask < (1L << bits); ++mask) {
        dpforge::Graph g(n);
        int b = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++b)
                if ((mask >> b) & 1) g.add_edge(i, j);
        fn(g);
    }
}

inline dpforge::Graph random_graph(std::mt19937_64& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    dpforge::Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline dpforge::Graph random_connected_graph(std::mt19937_64& rng, int n, double p) {
    while (true) {
        dpforge::Graph g = random_graph(rng, n, p);
        if (dpforge::is_connected(g)) return g;
    }
}

inline dpforge::Graph random_relabel(std::mt19937_64& rng, const dpforge::Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    dpforge::Graph h(n);
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[u], perm[v]);
    return h;
}

}  // namespace oracles
