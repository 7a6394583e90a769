#pragma once

#include <string>
#include <vector>

#include "dpforge/graph.hpp"

namespace dpforge {

/// Opaque byte string identifying a graph's isomorphism class exactly:
/// equal for isomorphic graphs, distinct otherwise. Concretely it is the
/// graph6 encoding of the canonically relabeled graph, so it is printable
/// and can be decoded back into a representative.
using CanonicalForm = std::string;

/// Canonical labeling as position -> original vertex. Exact backtracking
/// search over an equitable-refinement tree with automorphism pruning;
/// intended for small graphs (n <= 64 enforced, enumeration uses n <= 13).
std::vector<int> canonical_labeling(const Graph& g);

CanonicalForm canonical_form(const Graph& g);

}  // namespace dpforge
