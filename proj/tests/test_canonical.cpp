#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "dpforge/canonical.hpp"
#include "dpforge/constructions.hpp"
#include "dpforge/graph.hpp"
#include "dpforge/graph6.hpp"
#include "oracles.hpp"

using namespace dpforge;

TEST_CASE("canonical form is a valid relabeling of the input") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = static_cast<int>(rng() % 10);
        const Graph g = oracles::random_graph(rng, n, 0.5);
        const Graph rep = decode_graph6(canonical_form(g));
        REQUIRE(rep.vertex_count() == n);
        REQUIRE(rep.edge_count() == g.edge_count());
        if (n <= 7) REQUIRE(oracles::brute_isomorphic(g, rep));
    }
}

TEST_CASE("canonical form is invariant under relabeling") {
    std::mt19937_64 rng(2718281);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 9);
        const Graph g = oracles::random_graph(rng, n, 0.45);
        const CanonicalForm form = canonical_form(g);
        for (int relabel = 0; relabel < 100; ++relabel)
            REQUIRE(canonical_form(oracles::random_relabel(rng, g)) == form);
    }
}

TEST_CASE("canonical form separates small non-isomorphic graphs exhaustively") {
    // Group all graphs on up to 5 vertices by brute-force isomorphism and
    // demand that canonical forms agree exactly with the grouping.
    for (int n = 0; n <= 5; ++n) {
        std::vector<Graph> reps;        // one per isomorphism class found
        std::vector<CanonicalForm> rep_forms;
        oracles::for_each_labeled_graph(n, [&](const Graph& g) {
            const CanonicalForm form = canonical_form(g);
            for (size_t c = 0; c < reps.size(); ++c) {
                const bool same_class = oracles::brute_isomorphic(g, reps[c]);
                const bool same_form = rep_forms[c] == form;
                REQUIRE(same_class == same_form);
                if (same_class) return;
            }
            reps.push_back(g);
            rep_forms.push_back(form);
        });
    }
}

TEST_CASE("worked separations") {
    CHECK(canonical_form(path_graph(3)) != canonical_form(complete_graph(3)));
    // prism vs K_{3,3}: both connected 3-regular on 6 vertices
    Graph prism(6);
    for (int i = 0; i < 3; ++i) {
        prism.add_edge(i, (i + 1) % 3);
        prism.add_edge(3 + i, 3 + (i + 1) % 3);
        prism.add_edge(i, 3 + i);
    }
    CHECK(canonical_form(prism) != canonical_form(complete_bipartite(3, 3)));
    std::mt19937_64 rng(5);
    CHECK(canonical_form(cycle_graph(5)) ==
          canonical_form(oracles::random_relabel(rng, cycle_graph(5))));
}

TEST_CASE("strongly regular look-alikes are separated") {
    // Two 6-regular graphs on 16 vertices with identical degree and
    // common-neighbor statistics; naive refinement cannot tell them apart.
    auto id = [](int x, int y) { return ((x & 3) << 2) | (y & 3); };
    Graph shrikhande(16), rook(16);
    for (int x = 0; x < 4; ++x) {
        for (int y = 0; y < 4; ++y) {
            shrikhande.add_edge(id(x, y), id(x + 1, y));
            shrikhande.add_edge(id(x, y), id(x, y + 1));
            shrikhande.add_edge(id(x, y), id(x + 1, y + 1));
            for (int k = 1; k < 4; ++k) {
                rook.add_edge(id(x, y), id(x + k, y));
                rook.add_edge(id(x, y), id(x, y + k));
            }
        }
    }
    REQUIRE(shrikhande.edge_count() == 48);
    REQUIRE(rook.edge_count() == 48);
    CHECK(canonical_form(shrikhande) != canonical_form(rook));
    std::mt19937_64 rng(1600);
    CHECK(canonical_form(oracles::random_relabel(rng, shrikhande)) ==
          canonical_form(shrikhande));
    CHECK(canonical_form(oracles::random_relabel(rng, rook)) == canonical_form(rook));
}

TEST_CASE("highly symmetric graphs stay cheap") {
    CHECK(canonical_form(complete_graph(13)) ==
          canonical_form(complete_graph(13)));
    std::mt19937_64 rng(11);
    CHECK(canonical_form(oracles::random_relabel(rng, complete_bipartite(6, 6))) ==
          canonical_form(complete_bipartite(6, 6)));
    CHECK(canonical_form(oracles::random_relabel(rng, cycle_graph(13))) ==
          canonical_form(cycle_graph(13)));
    CHECK(canonical_form(oracles::random_relabel(rng, circulant(12, 5))) ==
          canonical_form(circulant(12, 5)));
}
