#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dpforge/graph.hpp"

namespace dpforge {

/// One row of a survey table: how many objects of order n there are and
/// how many pass the predicate, with the percentage at 3 decimals.
struct SurveyRow {
    int n = 0;
    long long total = 0;
    long long successes = 0;
    double percentage = 0.0;
};

std::string percentage_string(long long successes, long long total);

/// Exactly one representative per isomorphism class of connected regular
/// graphs (any degree) on n vertices, streamed in canonical-form order.
/// Exhaustive and deterministic: re-running yields the identical stream.
void enumerate_connected_regular(int n, const std::function<void(const Graph&)>& fn);

std::vector<Graph> connected_regular_graphs(int n);

/// Counts connected regular graphs that are distance preserving (brute
/// force per graph). jobs > 1 splits the dp checks across threads; the
/// counts do not depend on the worker count.
SurveyRow survey_regular_dp(int n, int jobs = 1);

/// Counts graphical degree sequences (positive entries) on which the
/// fixed-order Havel-Hakimi loop terminates successfully, connected or not.
SurveyRow survey_modified_hh(int n);

}  // namespace dpforge
