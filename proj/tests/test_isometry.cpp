#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "dpforge/constructions.hpp"
#include "dpforge/graph.hpp"
#include "dpforge/isometry.hpp"
#include "oracles.hpp"

using namespace dpforge;

TEST_CASE("is_isometric on worked subsets") {
    SUBCASE("any 4 vertices of C5 fail (a P4 stretches one distance)") {
        const Graph c5 = cycle_graph(5);
        for (int skip = 0; skip < 5; ++skip) {
            std::vector<int> s;
            for (int v = 0; v < 5; ++v)
                if (v != skip) s.push_back(v);
            CHECK_FALSE(is_isometric(c5, s));
        }
    }
    SUBCASE("any 3 vertices of C4 work") {
        const Graph c4 = cycle_graph(4);
        for (int skip = 0; skip < 4; ++skip) {
            std::vector<int> s;
            for (int v = 0; v < 4; ++v)
                if (v != skip) s.push_back(v);
            CHECK(is_isometric(c4, s));
        }
    }
    SUBCASE("single vertices and full sets are always isometric") {
        std::mt19937_64 rng(555);
        for (int trial = 0; trial < 20; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 8);
            const Graph g = oracles::random_connected_graph(rng, n, 0.5);
            CHECK(is_isometric(g, {static_cast<int>(rng() % n)}));
            std::vector<int> all;
            for (int v = 0; v < n; ++v) all.push_back(v);
            CHECK(is_isometric(g, all));
        }
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(is_isometric(cycle_graph(4), {}), std::invalid_argument);
        CHECK_THROWS_AS(is_isometric(cycle_graph(4), {7}), std::invalid_argument);
    }
}

TEST_CASE("isometric subsets restrict the distance matrix exactly") {
    std::mt19937_64 rng(808);
    int seen_isometric = 0;
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 6);
        const Graph g = oracles::random_connected_graph(rng, n, 0.5);
        std::vector<int> s;
        for (int v = 0; v < n; ++v)
            if (rng() % 2) s.push_back(v);
        if (s.empty()) continue;
        if (!is_isometric(g, s)) continue;
        ++seen_isometric;
        const InducedSubgraph sub = induced_subgraph(g, s);
        const DistanceMatrix dg = distance_matrix(g);
        const DistanceMatrix dh = distance_matrix(sub.graph);
        for (int a : s)
            for (int b : s)
                REQUIRE(dh.at(sub.old_to_new[a], sub.old_to_new[b]) == dg.at(a, b));
    }
    CHECK(seen_isometric > 30);  // the property must actually get exercised
}

TEST_CASE("vertex bypass condition") {
    SUBCASE("complete graph: vacuous, all neighbors adjacent") {
        for (int v = 0; v < 4; ++v) CHECK(can_bypass_vertex(complete_graph(4), v));
    }
    SUBCASE("cycle: the two neighbors share only v") {
        for (int v = 0; v < 5; ++v) CHECK_FALSE(can_bypass_vertex(cycle_graph(5), v));
    }
    SUBCASE("join construction: independent-part vertices are bypassable") {
        const Graph g7 = build_regular_dp(7, 4).tagged.graph;
        // independent part of the (7,4) join lives at ids 4..6
        for (int v = 4; v < 7; ++v) CHECK(can_bypass_vertex(g7, v));
    }
    CHECK_THROWS_AS(can_bypass_vertex(cycle_graph(4), 9), std::invalid_argument);
}

TEST_CASE("bypassable vertices leave isometric subgraphs (sampled soundness)") {
    std::mt19937_64 rng(160914);
    int tested_graphs = 0, implications = 0;
    while (tested_graphs < 500) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = oracles::random_connected_graph(rng, n, 0.45);
        ++tested_graphs;
        for (int v = 0; v < n; ++v) {
            if (n < 2) continue;
            std::vector<int> rest;
            for (int u = 0; u < n; ++u)
                if (u != v) rest.push_back(u);
            const InducedSubgraph sub = induced_subgraph(g, rest);
            if (can_bypass_vertex(g, v) && is_connected(sub.graph)) {
                ++implications;
                REQUIRE(is_isometric(g, rest));
            }
        }
    }
    CHECK(implications > 100);
}

TEST_CASE("brute-force dp reports") {
    SUBCASE("cycles fail at order n-1") {
        for (int n = 5; n <= 8; ++n) {
            const DpReport report = dp_bruteforce(cycle_graph(n));
            CHECK_FALSE(report.is_dp);
            REQUIRE(report.first_failing_order);
            CHECK(*report.first_failing_order == n - 1);
        }
    }
    SUBCASE("complete graphs are dp") {
        for (int n = 1; n <= 8; ++n) {
            const DpReport report = dp_bruteforce(complete_graph(n));
            CHECK(report.is_dp);
            CHECK_FALSE(report.first_failing_order);
            for (int k = 1; k <= n; ++k) REQUIRE(report.witness[k - 1].has_value());
        }
    }
    SUBCASE("the (9,4) construction is dp by brute force") {
        CHECK(dp_bruteforce(build_regular_dp(9, 4).tagged.graph).is_dp);
    }
    SUBCASE("witnesses are the lexicographically first subsets") {
        const DpReport report = dp_bruteforce(complete_graph(4));
        CHECK(*report.witness[1] == std::vector<int>{0, 1});
        CHECK(*report.witness[2] == std::vector<int>{0, 1, 2});
    }
    SUBCASE("small cases") {
        CHECK(dp_bruteforce(cycle_graph(3)).is_dp);
        CHECK(dp_bruteforce(cycle_graph(4)).is_dp);
        CHECK(dp_bruteforce(Graph(1)).is_dp);
    }
    SUBCASE("disconnected input is rejected") {
        CHECK_THROWS_AS(dp_bruteforce(Graph(3)), std::invalid_argument);
        CHECK_THROWS_AS(is_dp(Graph(3)), std::invalid_argument);
    }
    SUBCASE("fast path agrees with the full report") {
        std::mt19937_64 rng(31415);
        for (int trial = 0; trial < 60; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 6);
            const Graph g = oracles::random_connected_graph(rng, n, 0.4);
            REQUIRE(is_dp(g) == dp_bruteforce(g).is_dp);
        }
    }
}

namespace {

// Mask-order oracle: does any size-k subset induce an isometric subgraph?
// Uses Floyd-Warshall distances and raw adjacency, sharing nothing with
// the library's search path.
bool oracle_has_isometric_subset(const Graph& g, int k) {
    const int n = g.vertex_count();
    const auto host = oracles::floyd_warshall(g);
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) != k) continue;
        std::vector<int> verts;
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) verts.push_back(v);
        Graph sub(k);
        for (int a = 0; a < k; ++a)
            for (int b = a + 1; b < k; ++b)
                if (g.has_edge(verts[a], verts[b])) sub.add_edge(a, b);
        const auto inner = oracles::floyd_warshall(sub);
        bool ok = true;
        for (int a = 0; a < k && ok; ++a)
            for (int b = 0; b < k && ok; ++b)
                if (inner[a][b] != host[verts[a]][verts[b]]) ok = false;
        if (ok) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("dp reports agree with a mask-order oracle on random graphs") {
    std::mt19937_64 rng(112358);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 5);
        const Graph g = oracles::random_connected_graph(rng, n, 0.45);
        const DpReport report = dp_bruteforce(g);
        for (int k = 1; k <= n; ++k)
            REQUIRE(report.witness[k - 1].has_value() == oracle_has_isometric_subset(g, k));
    }
}

TEST_CASE("certificate verification") {
    SUBCASE("prefix chains validate on complete graphs") {
        DpCertificate cert;
        cert.per_order = {{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}};
        const CertificateCheck check = verify_certificate(complete_graph(4), cert);
        CHECK(check.valid);
        CHECK_FALSE(check.first_failing_order);
    }
    SUBCASE("no certificate can claim order 4 on C5") {
        DpCertificate cert;
        cert.per_order = {{0}, {0, 1}, {0, 1, 2}, {0, 1, 2, 3}, {0, 1, 2, 3, 4}};
        const CertificateCheck check = verify_certificate(cycle_graph(5), cert);
        CHECK_FALSE(check.valid);
        CHECK(*check.first_failing_order == 4);
    }
    SUBCASE("builder certificates verify") {
        const RegularDpResult result = build_regular_dp(9, 4);
        CHECK(verify_certificate(result.tagged.graph, result.certificate).valid);
    }
    SUBCASE("structural errors throw") {
        DpCertificate missing;
        missing.per_order = {{0}, {0, 1}};
        CHECK_THROWS_AS(verify_certificate(complete_graph(3), missing), std::invalid_argument);
        DpCertificate wrong_size;
        wrong_size.per_order = {{0}, {0, 1, 2}, {0, 1, 2}};
        CHECK_THROWS_AS(verify_certificate(complete_graph(3), wrong_size), std::invalid_argument);
        DpCertificate dup;
        dup.per_order = {{0}, {1, 1}, {0, 1, 2}};
        CHECK_THROWS_AS(verify_certificate(complete_graph(3), dup), std::invalid_argument);
    }
    SUBCASE("a valid certificate implies the brute-force verdict") {
        std::mt19937_64 rng(2025);
        for (int trial = 0; trial < 40; ++trial) {
            const int n = 3 + static_cast<int>(rng() % 5);
            const Graph g = oracles::random_connected_graph(rng, n, 0.5);
            const DpReport report = dp_bruteforce(g);
            if (!report.is_dp) continue;
            DpCertificate cert;
            for (int k = 1; k <= n; ++k) cert.per_order.push_back(*report.witness[k - 1]);
            REQUIRE(verify_certificate(g, cert).valid);
        }
    }
}

TEST_CASE("certificate text round trip") {
    DpCertificate cert;
    cert.per_order = {{2}, {0, 2}, {0, 1, 2}};
    const std::string text = certificate_to_text(cert);
    CHECK(text == "1: 2\n2: 0 2\n3: 0 1 2\n");
    const DpCertificate back = certificate_from_text(text);
    CHECK(back.per_order == cert.per_order);
    CHECK_THROWS_AS(certificate_from_text("nonsense\n"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_text("1: 0\n1: 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(certificate_from_text("0: \n"), std::invalid_argument);
}
