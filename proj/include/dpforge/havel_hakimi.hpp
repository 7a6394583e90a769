#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "dpforge/graph.hpp"
#include "dpforge/isometry.hpp"

namespace dpforge {

/// Weakly decreasing sequence of nonnegative integers.
struct DegreeSequence {
    std::vector<int> d;

    DegreeSequence() = default;
    explicit DegreeSequence(std::vector<int> values);

    /// Parses "3,2,2,2,1" (whitespace tolerated).
    static DegreeSequence parse(const std::string& text);

    int size() const { return static_cast<int>(d.size()); }
};

/// Erdos-Gallai criterion: the sequence has a simple-graph realization iff
/// the sum is even and every prefix satisfies
///   sum_{i<=k} d_i <= k(k-1) + sum_{i>k} min(d_i, k).
bool erdos_gallai_graphical(const DegreeSequence& seq);

enum class HHStatus { success, failure };

/// Result of a Havel-Hakimi run. On success the graph realizes the input
/// degree sequence with vertex i playing position i of the original
/// sequence (labeling is that identity map, kept explicit for consumers
/// that track positions). On failure residual holds the sequence values
/// at the point where the front entry could no longer be satisfied.
struct HHOutcome {
    HHStatus status = HHStatus::failure;
    std::optional<Graph> graph;
    std::vector<int> labeling;
    std::vector<int> residual;
    int iterations = 0;
};

/// Classic loop: connect the front vertex to the next d1 entries, drop
/// zeros, re-sort weakly decreasing (ties keep original position order).
/// Succeeds exactly on graphical sequences.
HHOutcome havel_hakimi_classic(const DegreeSequence& seq);

/// Same loop with the order left completely untouched: no re-sort, and
/// exhausted entries keep their position (one leaves only when it reaches
/// the front; a run fails when the front's target window would hit an
/// exhausted entry). May fail on graphical input; on success with a
/// connected graph the vertex-prefix subgraphs are all isometric.
HHOutcome havel_hakimi_modified(const DegreeSequence& seq);

/// The prefix-chain certificate {v1}, {v1,v2}, ... for a successful
/// fixed-order run. Throws unless the outcome succeeded with a connected
/// graph.
DpCertificate prefix_certificate(const HHOutcome& outcome);

/// All weakly decreasing sequences of length n with entries in 1..n-1,
/// in lexicographically decreasing order (no graphicality filter).
void for_each_positive_sequence(int n, const std::function<void(const DegreeSequence&)>& fn);

/// The graphical ones among the above, same order, each exactly once.
void enumerate_graphical_sequences(int n, const std::function<void(const DegreeSequence&)>& fn);

std::vector<DegreeSequence> graphical_sequences(int n);

}  // namespace dpforge
