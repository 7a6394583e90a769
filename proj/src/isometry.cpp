#include "dpforge/isometry.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace dpforge {

namespace {

void validate_subset(const Graph& g, const std::vector<int>& s) {
    if (s.empty()) throw std::invalid_argument("subset is empty");
    std::vector<int> sorted = s;
    std::sort(sorted.begin(), sorted.end());
    for (size_t i = 0; i < sorted.size(); ++i) {
        if (sorted[i] < 0 || sorted[i] >= g.vertex_count())
            throw std::invalid_argument("subset vertex out of range");
        if (i > 0 && sorted[i] == sorted[i - 1])
            throw std::invalid_argument("subset contains a duplicate vertex");
    }
}

// Single-word fast path (n <= 64): BFS inside the subset mask from src,
// comparing against the global distance row as levels are discovered.
bool subset_isometric_word(const std::vector<uint64_t>& adj, const DistanceMatrix& dg,
                           uint64_t subset, int src) {
    const uint64_t start = uint64_t{1} << src;
    uint64_t seen = start;
    uint64_t frontier = start;
    int depth = 0;
    while (frontier) {
        uint64_t next = 0;
        uint64_t f = frontier;
        while (f) {
            const int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[u];
        }
        next &= subset & ~seen;
        ++depth;
        uint64_t m = next;
        while (m) {
            const int v = std::countr_zero(m);
            m &= m - 1;
            if (dg.at(src, v) != depth) return false;
        }
        seen |= next;
        frontier = next;
    }
    // Subset vertices never reached would need infinite distance, but dg is
    // finite on a connected graph (and must match exactly otherwise).
    uint64_t missed = subset & ~seen;
    while (missed) {
        const int v = std::countr_zero(missed);
        missed &= missed - 1;
        if (dg.at(src, v) != DistanceMatrix::kUnreachable) return false;
    }
    return true;
}

bool subset_isometric(const Graph& g, const DistanceMatrix& dg, const std::vector<int>& s) {
    const int n = g.vertex_count();
    if (n <= 64) {
        std::vector<uint64_t> adj(n);
        for (int v = 0; v < n; ++v) adj[v] = g.adjacency_word(v, 0);
        uint64_t subset = 0;
        for (int v : s) subset |= uint64_t{1} << v;
        for (int v : s)
            if (!subset_isometric_word(adj, dg, subset, v)) return false;
        return true;
    }
    // Generic path: BFS restricted to the subset, plain arrays.
    std::vector<char> in_subset(n, 0);
    for (int v : s) in_subset[v] = 1;
    std::vector<int> dist(n);
    std::vector<int> queue;
    for (int src : s) {
        std::fill(dist.begin(), dist.end(), -1);
        queue.clear();
        dist[src] = 0;
        queue.push_back(src);
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            const int u = queue[qi];
            for (int v : g.neighbors(u)) {
                if (!in_subset[v] || dist[v] >= 0) continue;
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
        for (int v : s) {
            const int want = dg.at(src, v);
            const int got = dist[v];
            if (got != want) return false;
        }
    }
    return true;
}

// Lexicographically next k-combination of {0..n-1}; false when exhausted.
bool next_combination(std::vector<int>& c, int n) {
    const int k = static_cast<int>(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

// Word-parallel witness search for one order; adj holds the single-word
// adjacency rows so the inner loop stays allocation-free.
std::optional<std::vector<int>> find_witness(const std::vector<uint64_t>& adj,
                                             const DistanceMatrix& dg, int n, int k) {
    std::vector<int> c(k);
    for (int i = 0; i < k; ++i) c[i] = i;
    do {
        uint64_t subset = 0;
        for (int v : c) subset |= uint64_t{1} << v;
        bool ok = true;
        for (int v : c) {
            if (!subset_isometric_word(adj, dg, subset, v)) {
                ok = false;
                break;
            }
        }
        if (ok) return c;
    } while (next_combination(c, n));
    return std::nullopt;
}

std::vector<uint64_t> adjacency_words(const Graph& g) {
    std::vector<uint64_t> adj(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) adj[v] = g.adjacency_word(v, 0);
    return adj;
}

}  // namespace

bool is_isometric(const Graph& g, const std::vector<int>& s) {
    validate_subset(g, s);
    return subset_isometric(g, distance_matrix(g), s);
}

bool can_bypass_vertex(const Graph& g, int v) {
    if (v < 0 || v >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    const std::vector<int> nbrs = g.neighbors(v);
    const int words = g.word_count();
    for (size_t i = 0; i < nbrs.size(); ++i) {
        for (size_t j = i + 1; j < nbrs.size(); ++j) {
            const int x = nbrs[i], y = nbrs[j];
            if (g.has_edge(x, y)) continue;
            bool found = false;
            for (int w = 0; w < words && !found; ++w) {
                uint64_t common = g.adjacency_word(x, w) & g.adjacency_word(y, w);
                if (v / 64 == w) common &= ~(uint64_t{1} << (v % 64));
                found = common != 0;
            }
            if (!found) return false;
        }
    }
    return true;
}

DpReport dp_bruteforce(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("dp check requires a connected graph");
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("brute-force dp check supports n <= 64");
    const DistanceMatrix dg = distance_matrix(g);
    const std::vector<uint64_t> adj = adjacency_words(g);
    DpReport report;
    report.witness.assign(n, std::nullopt);
    report.is_dp = true;
    for (int k = n; k >= 1; --k) {
        auto w = find_witness(adj, dg, n, k);
        if (w) {
            report.witness[k - 1] = std::move(w);
        } else {
            report.is_dp = false;
            if (!report.first_failing_order) report.first_failing_order = k;
        }
    }
    return report;
}

bool is_dp(const Graph& g) {
    if (!is_connected(g)) throw std::invalid_argument("dp check requires a connected graph");
    const int n = g.vertex_count();
    if (n > 64) throw std::invalid_argument("brute-force dp check supports n <= 64");
    const DistanceMatrix dg = distance_matrix(g);
    const std::vector<uint64_t> adj = adjacency_words(g);
    for (int k = n; k >= 1; --k)
        if (!find_witness(adj, dg, n, k)) return false;
    return true;
}

void DpCertificate::validate(int n) const {
    if (order_count() != n)
        throw std::invalid_argument("certificate must cover orders 1..n");
    for (int k = 1; k <= n; ++k) {
        const auto& s = per_order[k - 1];
        if (s.empty())
            throw std::invalid_argument("certificate is missing order " + std::to_string(k));
        if (static_cast<int>(s.size()) != k)
            throw std::invalid_argument("certificate subset for order " + std::to_string(k) +
                                        " has the wrong size");
        std::vector<int> sorted = s;
        std::sort(sorted.begin(), sorted.end());
        for (size_t i = 0; i < sorted.size(); ++i) {
            if (sorted[i] < 0 || sorted[i] >= n)
                throw std::invalid_argument("certificate vertex out of range at order " +
                                            std::to_string(k));
            if (i > 0 && sorted[i] == sorted[i - 1])
                throw std::invalid_argument("certificate subset for order " + std::to_string(k) +
                                            " repeats a vertex");
        }
    }
}

CertificateCheck verify_certificate(const Graph& g, const DpCertificate& cert) {
    cert.validate(g.vertex_count());
    const DistanceMatrix dg = distance_matrix(g);
    for (int k = 1; k <= g.vertex_count(); ++k) {
        if (!subset_isometric(g, dg, cert.subset_for_order(k)))
            return {false, k};
    }
    return {true, std::nullopt};
}

std::string certificate_to_text(const DpCertificate& cert) {
    std::ostringstream out;
    for (int k = 1; k <= cert.order_count(); ++k) {
        out << k << ':';
        for (int v : cert.subset_for_order(k)) out << ' ' << v;
        out << '\n';
    }
    return out.str();
}

DpCertificate certificate_from_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::vector<int>> orders;
    std::vector<char> seen;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        const size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("certificate line lacks \"k:\" prefix: " + line);
        int k;
        try {
            k = std::stoi(line.substr(0, colon));
        } catch (const std::exception&) {
            throw std::invalid_argument("certificate line has a bad order: " + line);
        }
        if (k < 1) throw std::invalid_argument("certificate orders start at 1");
        std::istringstream rest(line.substr(colon + 1));
        std::vector<int> subset;
        int v;
        while (rest >> v) subset.push_back(v);
        if (!rest.eof()) throw std::invalid_argument("certificate line has bad vertex ids: " + line);
        if (k > static_cast<int>(orders.size())) {
            orders.resize(k);
            seen.resize(k, 0);
        }
        if (seen[k - 1]) throw std::invalid_argument("certificate repeats order " + std::to_string(k));
        seen[k - 1] = 1;
        orders[k - 1] = std::move(subset);
    }
    DpCertificate cert;
    cert.per_order = std::move(orders);
    return cert;
}

}  // namespace dpforge
