#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpforge/graph.hpp"

namespace dpforge {

/// Per-order witnesses for the distance-preserving property: for each
/// order k in 1..n a vertex subset of size exactly k whose induced
/// subgraph is claimed to be isometric. Subsets need not be nested.
struct DpCertificate {
    std::vector<std::vector<int>> per_order;  // index k-1 holds the order-k subset

    int order_count() const { return static_cast<int>(per_order.size()); }
    const std::vector<int>& subset_for_order(int k) const { return per_order.at(k - 1); }

    /// Throws unless orders 1..n are all present with matching sizes and
    /// in-range, duplicate-free vertices.
    void validate(int n) const;
};

std::string certificate_to_text(const DpCertificate& cert);
DpCertificate certificate_from_text(const std::string& text);

/// Outcome of the exhaustive dp check: a witness subset per order where one
/// exists, and the largest order without one (checked from n downward).
struct DpReport {
    bool is_dp = false;
    std::vector<std::optional<std::vector<int>>> witness;  // index k-1
    std::optional<int> first_failing_order;
};

struct CertificateCheck {
    bool valid = false;
    std::optional<int> first_failing_order;  // lowest failing order
};

/// True iff the subgraph induced by s preserves all distances of g between
/// vertices of s. Throws if s is empty, out of range, or has duplicates.
bool is_isometric(const Graph& g, const std::vector<int>& s);

/// True iff every pair of nonadjacent neighbors of v has a common neighbor
/// other than v, so every shortest path through v can be rerouted around
/// it; deleting such a vertex leaves an isometric subgraph.
bool can_bypass_vertex(const Graph& g, int v);

/// Exhaustive dp check. Orders are scanned from n down to 1; per order,
/// subsets are tried in lexicographic order and the first witness is kept,
/// so reports are reproducible. Throws on disconnected input.
DpReport dp_bruteforce(const Graph& g);

/// Same decision as dp_bruteforce().is_dp but stops at the first order
/// that has no witness.
bool is_dp(const Graph& g);

/// Checks every per-order subset with is_isometric. Structural problems
/// (missing order, wrong subset size) throw; a subset that merely fails
/// the isometry check yields valid = false with the failing order.
CertificateCheck verify_certificate(const Graph& g, const DpCertificate& cert);

}  // namespace dpforge
