#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dpforge/graph.hpp"
#include "dpforge/isometry.hpp"

namespace dpforge {

/// (n, r) pairs for which a connected r-regular dp graph exists:
/// r >= 3, n >= r+1, and n even whenever r is odd.
struct AdmissiblePair {
    int n = 0;
    int r = 0;
};

bool is_admissible(int n, int r);

/// A graph together with named vertex groups (the groups partition the
/// vertex set) and the edges that composite operations deleted.
struct TaggedGraph {
    Graph graph;
    std::vector<std::pair<std::string, std::vector<int>>> parts;
    std::vector<Edge> removed_edges;
};

/// Circulant graph on n vertices: i ~ j when their circular distance is
/// between 1 and floor(r/2); when r is odd (n must then be even) the
/// diameters i ~ i + n/2 are added. Always r-regular with n*r/2 edges.
Graph circulant(int n, int r);

/// Disjoint union plus every cross edge. Parts "left"/"right" record the
/// origin of each vertex; the cross edges form the underlying complete
/// bipartite graph between them.
TaggedGraph join(const Graph& g, const Graph& h);

/// Disjoint union of g and h minus edge e_g of g and e_h of h, plus the
/// two cross edges first-to-first and second-to-second. Preserves every
/// vertex degree. Throws if a named edge is absent.
TaggedGraph direct_sum(const Graph& g, Edge e_g, const Graph& h, Edge e_h);

/// One link of a left-to-right chain of direct sums. The left edge faces
/// the previous block, the right edge the next one; middle blocks need
/// both and they must not share a vertex.
struct ChainBlock {
    Graph graph;
    std::optional<Edge> left_edge;
    std::optional<Edge> right_edge;
};

TaggedGraph direct_sum_chain(const std::vector<ChainBlock>& blocks);

struct RegularDpResult {
    TaggedGraph tagged;
    DpCertificate certificate;
};

/// Builds a connected r-regular dp graph on n vertices together with a
/// certificate of per-order isometric subsets, which is verified before
/// returning. All arbitrary choices are made deterministically, so the
/// output is reproducible. Throws on inadmissible pairs.
RegularDpResult build_regular_dp(int n, int r);

}  // namespace dpforge
