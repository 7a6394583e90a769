#include "dpforge/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace dpforge {

namespace {

std::vector<int> iota_range(int lo, int hi) {  // [lo, hi)
    std::vector<int> v(hi - lo);
    std::iota(v.begin(), v.end(), lo);
    return v;
}

std::vector<int> sorted_union(std::vector<int> a, const std::vector<int>& b) {
    a.insert(a.end(), b.begin(), b.end());
    std::sort(a.begin(), a.end());
    return a;
}

}  // namespace

bool is_admissible(int n, int r) {
    if (r < 3) return false;
    if (n < r + 1) return false;
    if (r % 2 == 1 && n % 2 == 1) return false;
    return true;
}

Graph circulant(int n, int r) {
    if (r < 0 || r >= n) throw std::invalid_argument("circulant needs 0 <= r < n");
    if (r % 2 == 1 && n % 2 == 1)
        throw std::invalid_argument("circulant with odd degree needs an even vertex count");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int d = 1; d <= r / 2; ++d) g.add_edge(i, (i + d) % n);
    if (r % 2 == 1)
        for (int i = 0; i < n / 2; ++i) g.add_edge(i, i + n / 2);
    return g;
}

TaggedGraph join(const Graph& g, const Graph& h) {
    const int ng = g.vertex_count(), nh = h.vertex_count();
    Graph out(ng + nh);
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : h.edges()) out.add_edge(ng + u, ng + v);
    for (int u = 0; u < ng; ++u)
        for (int v = 0; v < nh; ++v) out.add_edge(u, ng + v);
    TaggedGraph t;
    t.graph = std::move(out);
    t.parts = {{"left", iota_range(0, ng)}, {"right", iota_range(ng, ng + nh)}};
    return t;
}

TaggedGraph direct_sum(const Graph& g, Edge e_g, const Graph& h, Edge e_h) {
    TaggedGraph t = direct_sum_chain({
        ChainBlock{g, std::nullopt, e_g},
        ChainBlock{h, e_h, std::nullopt},
    });
    t.parts = {{"left", iota_range(0, g.vertex_count())},
               {"right", iota_range(g.vertex_count(), g.vertex_count() + h.vertex_count())}};
    return t;
}

TaggedGraph direct_sum_chain(const std::vector<ChainBlock>& blocks) {
    if (blocks.empty()) throw std::invalid_argument("direct sum chain needs at least one block");
    const int count = static_cast<int>(blocks.size());
    for (int i = 0; i < count; ++i) {
        const ChainBlock& b = blocks[i];
        const bool needs_left = i > 0, needs_right = i + 1 < count;
        if (needs_left != b.left_edge.has_value())
            throw std::invalid_argument("chain block " + std::to_string(i) +
                                        (needs_left ? " must designate a left edge"
                                                    : " must not designate a left edge"));
        if (needs_right != b.right_edge.has_value())
            throw std::invalid_argument("chain block " + std::to_string(i) +
                                        (needs_right ? " must designate a right edge"
                                                     : " must not designate a right edge"));
        if (b.left_edge && !b.graph.has_edge(b.left_edge->first, b.left_edge->second))
            throw std::invalid_argument("designated left edge is absent in block " +
                                        std::to_string(i));
        if (b.right_edge && !b.graph.has_edge(b.right_edge->first, b.right_edge->second))
            throw std::invalid_argument("designated right edge is absent in block " +
                                        std::to_string(i));
        if (b.left_edge && b.right_edge) {
            std::set<int> ends{b.left_edge->first, b.left_edge->second, b.right_edge->first,
                               b.right_edge->second};
            if (ends.size() != 4)
                throw std::invalid_argument("designated edges of block " + std::to_string(i) +
                                            " must be vertex-disjoint");
        }
    }

    int total = 0;
    std::vector<int> offset(count);
    for (int i = 0; i < count; ++i) {
        offset[i] = total;
        total += blocks[i].graph.vertex_count();
    }

    TaggedGraph t;
    t.graph = Graph(total);
    for (int i = 0; i < count; ++i) {
        for (const auto& [u, v] : blocks[i].graph.edges())
            t.graph.add_edge(offset[i] + u, offset[i] + v);
        t.parts.emplace_back("block" + std::to_string(i),
                             iota_range(offset[i], offset[i] + blocks[i].graph.vertex_count()));
    }
    for (int i = 0; i + 1 < count; ++i) {
        const Edge a = *blocks[i].right_edge;
        const Edge b = *blocks[i + 1].left_edge;
        const Edge ga{offset[i] + a.first, offset[i] + a.second};
        const Edge gb{offset[i + 1] + b.first, offset[i + 1] + b.second};
        t.graph.remove_edge(ga.first, ga.second);
        t.graph.remove_edge(gb.first, gb.second);
        t.graph.add_edge(ga.first, gb.first);
        t.graph.add_edge(ga.second, gb.second);
        t.removed_edges.push_back(ga);
        t.removed_edges.push_back(gb);
    }
    return t;
}

namespace {

// Peels one vertex per step from a two-part vertex pool, recording the
// remaining set after each removal. Rule: remove from the currently larger
// part, ties broken toward part b, lowest non-protected id first; a part
// whose non-protected vertices are exhausted cedes to the other. Stops
// when stop_total vertices remain.
std::vector<std::vector<int>> peel_two_parts(std::vector<int> part_a, std::vector<int> part_b,
                                             const std::set<int>& protected_ids, int stop_total) {
    std::vector<std::vector<int>> states;
    auto removable = [&](const std::vector<int>& part) {
        for (int v : part)
            if (!protected_ids.count(v)) return true;
        return false;
    };
    auto remove_lowest = [&](std::vector<int>& part) {
        for (size_t i = 0; i < part.size(); ++i) {
            if (!protected_ids.count(part[i])) {
                part.erase(part.begin() + i);
                return;
            }
        }
        throw std::logic_error("peel: no removable vertex");
    };
    while (static_cast<int>(part_a.size() + part_b.size()) > stop_total) {
        bool from_a = part_a.size() > part_b.size();
        if (from_a && !removable(part_a)) from_a = false;
        if (!from_a && !removable(part_b)) from_a = true;
        if (from_a && !removable(part_a))
            throw std::logic_error("peel: both parts exhausted");
        remove_lowest(from_a ? part_a : part_b);
        states.push_back(sorted_union(part_a, part_b));
    }
    return states;
}

DpCertificate prefix_chain_certificate(int n) {
    DpCertificate cert;
    cert.per_order.resize(n);
    for (int k = 1; k <= n; ++k) cert.per_order[k - 1] = iota_range(0, k);
    return cert;
}

// ---- case r >= 4, r+1 <= n <= 2r: circulant joined with an independent set.

Graph case_a_graph(int n, int r) {
    return join(circulant(r, 2 * r - n), empty_graph(n - r)).graph;
}

DpCertificate case_a_certificate(int n, int r) {
    DpCertificate cert;
    cert.per_order.resize(n);
    cert.per_order[n - 1] = iota_range(0, n);
    const auto states = peel_two_parts(iota_range(0, r), iota_range(r, n), {}, 1);
    for (const auto& s : states) cert.per_order[s.size() - 1] = s;
    return cert;
}

// ---- case r >= 4 even, n = 2r+1: complete bipartite minus a matching,
// plus an external vertex adjacent to the matched endpoints.
// Layout: left 0..r-1, right r..2r-1, external x = 2r; the removed
// matching pairs i with r+i for i < r/2.

Graph case_b_graph(int r) {
    const int x = 2 * r;
    Graph g(2 * r + 1);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (j != i || i >= r / 2) g.add_edge(i, r + j);
    for (int i = 0; i < r / 2; ++i) {
        g.add_edge(x, i);
        g.add_edge(x, r + i);
    }
    return g;
}

DpCertificate case_b_certificate(int r) {
    const int n = 2 * r + 1;
    DpCertificate cert;
    cert.per_order.resize(n);

    std::set<int> current;
    for (int v = 0; v < n; ++v) current.insert(v);
    cert.per_order[n - 1] = std::vector<int>(current.begin(), current.end());

    auto record = [&](int k) {
        cert.per_order[k - 1] = std::vector<int>(current.begin(), current.end());
    };

    // Peel the external vertex's neighborhood down to one matched vertex
    // per side (0 on the left, r on the right).
    for (int i = 1; i < r / 2; ++i) {
        current.erase(i);
        record(static_cast<int>(current.size()));
    }
    for (int i = 1; i < r / 2; ++i) {
        current.erase(r + i);
        record(static_cast<int>(current.size()));
    }
    // One unmatched vertex per side.
    current.erase(r / 2);
    record(static_cast<int>(current.size()));
    current.erase(r + r / 2);
    record(static_cast<int>(current.size()));

    // Order r: drop x and its whole neighborhood, which restores the
    // unmatched vertices; what remains is complete bipartite.
    const std::vector<int> unmatched_left = iota_range(r / 2, r);
    const std::vector<int> unmatched_right = iota_range(r + r / 2, 2 * r);
    cert.per_order[r - 1] = sorted_union(unmatched_left, unmatched_right);

    // Below that, peel the complete bipartite remainder part by part.
    const auto states = peel_two_parts(unmatched_left, unmatched_right, {}, 1);
    for (const auto& s : states) cert.per_order[s.size() - 1] = s;
    return cert;
}

// ---- case r = 3: ladder with twisted ends (n >= 8), K4 and K_{3,3} for
// the two orders the ladder cannot produce.

// u_j -> j-1 and v_j -> k+j-1 with k = n/2.
Graph ladder_graph(int n) {
    const int k = n / 2;
    auto u = [&](int j) { return j - 1; };
    auto v = [&](int j) { return k + j - 1; };
    Graph g(n);
    for (int j = 1; j < k; ++j) {
        g.add_edge(u(j), u(j + 1));
        g.add_edge(v(j), v(j + 1));
    }
    for (int j = 1; j <= k; ++j)
        if (j != 2 && j != k - 1) g.add_edge(u(j), v(j));
    g.add_edge(u(1), v(2));
    g.add_edge(u(2), v(1));
    g.add_edge(u(k - 1), v(k));
    g.add_edge(u(k), v(k - 1));
    return g;
}

DpCertificate ladder_certificate(int n) {
    const int k = n / 2;
    auto u = [&](int j) { return j - 1; };
    auto v = [&](int j) { return k + j - 1; };

    DpCertificate cert;
    cert.per_order.resize(n);
    cert.per_order[n - 1] = iota_range(0, n);

    auto record_removal = [&](const std::vector<int>& removed) {
        std::vector<int> keep;
        std::set<int> gone(removed.begin(), removed.end());
        for (int w = 0; w < n; ++w)
            if (!gone.count(w)) keep.push_back(w);
        cert.per_order[keep.size() - 1] = std::move(keep);
    };

    // Six fixed deletion sets, then a sequential tail. The tail clears the
    // v-side first so the u-side survivors stay attached to each other.
    record_removal({u(1)});
    record_removal({u(1), u(k)});
    record_removal({u(1), v(1), u(2)});
    record_removal({u(1), v(1), u(2), u(k)});
    record_removal({u(1), v(1), u(2), v(2), u(k)});
    std::vector<int> removed{u(1), v(1), u(2), v(k - 1), u(k), v(k)};
    record_removal(removed);
    for (int j = 2; j <= k - 2; ++j) {
        removed.push_back(v(j));
        if (static_cast<int>(removed.size()) < n) record_removal(removed);
    }
    for (int j = 3; j <= k - 2; ++j) {
        removed.push_back(u(j));
        if (static_cast<int>(removed.size()) < n) record_removal(removed);
    }

    if (k == 4) {
        // The six-set scheme leaves a nonadjacent pair at order 2 on the
        // shortest ladder; any adjacent pair serves as that witness.
        cert.per_order[1] = {u(1), u(2)};
    }
    return cert;
}

// ---- case r >= 4, n >= 2r+2: a chain G_s (+) K_{r+1} (+) ... (+) K_{r+1}.

struct ChainPlan {
    int p = 0;  // number of K_{r+1} blocks
    int s = 0;  // order of the head block
};

ChainPlan chain_plan(int n, int r) {
    const int q = n / (r + 1);
    const int t = n % (r + 1);
    return {q - 1, t + r + 1};
}

// Head-block subsets of sizes s-1 down to 4 that keep the chain gateway
// vertices u and x, in peel order.
std::vector<std::vector<int>> head_peel_states(int s, int r, Edge ux) {
    if (s <= 2 * r) {
        // Join-shaped head: protect u, x and additionally u's lowest
        // circulant neighbor so the u-x distance keeps its short route.
        const Graph circ = circulant(r, 2 * r - s);
        std::set<int> protected_ids{ux.first, ux.second};
        const std::vector<int> nbrs = circ.neighbors(ux.first);
        if (!nbrs.empty()) protected_ids.insert(*std::min_element(nbrs.begin(), nbrs.end()));
        return peel_two_parts(iota_range(0, r), iota_range(r, s), protected_ids, 4);
    }

    // External-vertex head (s = 2r+1). u and x are the lowest unmatched
    // pair, so the matched representatives kept alongside the external
    // vertex carry its shortcuts until the jump to the unmatched core.
    std::vector<std::vector<int>> states;
    std::set<int> current;
    for (int v = 0; v < s; ++v) current.insert(v);
    auto record = [&]() { states.emplace_back(current.begin(), current.end()); };

    for (int i = 1; i < r / 2; ++i) {
        current.erase(i);
        record();
    }
    for (int i = 1; i < r / 2; ++i) {
        current.erase(r + i);
        record();
    }

    const std::vector<int> unmatched_left = iota_range(r / 2, r);
    const std::vector<int> unmatched_right = iota_range(r + r / 2, 2 * r);
    const int x_ext = 2 * r;

    // size r+2: external vertex plus one matched helper per side plus the
    // unmatched core minus its highest right vertex.
    std::vector<int> helpers{0, r + 1, x_ext};
    std::vector<int> core = sorted_union(unmatched_left, unmatched_right);
    std::vector<int> trimmed = core;
    trimmed.erase(std::find(trimmed.begin(), trimmed.end(), 2 * r - 1));
    states.push_back(sorted_union(helpers, trimmed));

    // size r+1: also drop the highest unmatched left vertex.
    trimmed.erase(std::find(trimmed.begin(), trimmed.end(), r - 1));
    states.push_back(sorted_union(helpers, trimmed));

    // size r: the unmatched complete bipartite core.
    states.push_back(core);

    // sizes r-1 .. 4: peel the core, protecting u and x.
    const auto tail =
        peel_two_parts(unmatched_left, unmatched_right, {ux.first, ux.second}, 4);
    for (const auto& st : tail) states.push_back(st);
    return states;
}

RegularDpResult build_chain_case(int n, int r) {
    const auto [p, s] = chain_plan(n, r);

    Graph head;
    Edge head_edge;
    if (s <= 2 * r) {
        head = case_a_graph(s, r);
        head_edge = {0, r};  // lowest cross edge of the join
    } else {
        head = case_b_graph(r);
        head_edge = {r / 2, r + r / 2};  // lowest unmatched pair
    }

    std::vector<ChainBlock> blocks;
    blocks.push_back({head, std::nullopt, head_edge});
    const Graph clique = complete_graph(r + 1);
    for (int i = 1; i <= p; ++i) {
        ChainBlock b{clique, Edge{0, 1}, std::nullopt};
        if (i < p) b.right_edge = Edge{2, 3};
        blocks.push_back(std::move(b));
    }
    TaggedGraph tagged = direct_sum_chain(blocks);
    tagged.parts.clear();
    tagged.parts.emplace_back("H0", iota_range(0, s));
    for (int i = 1; i <= p; ++i)
        tagged.parts.emplace_back("H" + std::to_string(i),
                                  iota_range(s + (i - 1) * (r + 1), s + i * (r + 1)));

    DpCertificate cert;
    cert.per_order.resize(n);
    cert.per_order[n - 1] = iota_range(0, n);

    const std::vector<int> chain_all = iota_range(s, n);
    auto block_vertex = [&](int i, int local) { return s + (i - 1) * (r + 1) + local; };

    const auto head_states = head_peel_states(s, r, head_edge);
    for (const auto& head_state : head_states)
        cert.per_order[head_state.size() + chain_all.size() - 1] =
            sorted_union(head_state, chain_all);

    // Two deletions inside the last clique, avoiding its gateway pair.
    const std::vector<int>& head4 = head_states.back();
    {
        std::vector<int> rest = chain_all;
        rest.erase(std::find(rest.begin(), rest.end(), block_vertex(p, 2)));
        cert.per_order[head4.size() + rest.size() - 1] = sorted_union(head4, rest);
        rest.erase(std::find(rest.begin(), rest.end(), block_vertex(p, 3)));
        cert.per_order[head4.size() + rest.size() - 1] = sorted_union(head4, rest);
    }

    // Everything but u, then the bare chain.
    cert.per_order[chain_all.size()] = sorted_union({head_edge.first}, chain_all);
    cert.per_order[chain_all.size() - 1] = chain_all;

    // Peel the cliques left to right, back gateways first. A middle block
    // must hold on to both forward gateways plus one interior vertex (the
    // gateways carry the only short routes into the next block, and they
    // need a common neighbor of their own), so its remnant stops at three
    // vertices; the two orders below that borrow a deletion from the last
    // clique and then keep a lone gateway ahead of the intact tail.
    std::set<int> current(chain_all.begin(), chain_all.end());
    auto record = [&](const std::set<int>& state) {
        cert.per_order[state.size() - 1] = std::vector<int>(state.begin(), state.end());
    };
    for (int i = 1; i <= p; ++i) {
        if (i < p) {
            std::vector<int> removals = {0, 1};
            for (int l = 4; l < r; ++l) removals.push_back(l);
            for (int local : removals) {
                current.erase(block_vertex(i, local));
                record(current);
            }
            std::set<int> interlude = current;
            interlude.erase(block_vertex(p, 2));
            record(interlude);
            std::set<int> gateway_only;
            gateway_only.insert(block_vertex(i, 2));
            for (int j = i + 1; j <= p; ++j)
                for (int l = 0; l <= r; ++l) gateway_only.insert(block_vertex(j, l));
            record(gateway_only);
            current.erase(block_vertex(i, 3));
            current.erase(block_vertex(i, r));
            current.erase(block_vertex(i, 2));
            record(current);
        } else {
            for (int local = 0; local <= r; ++local) {
                current.erase(block_vertex(i, local));
                if (!current.empty()) record(current);
            }
        }
    }

    return {std::move(tagged), std::move(cert)};
}

}  // namespace

RegularDpResult build_regular_dp(int n, int r) {
    if (!is_admissible(n, r))
        throw std::invalid_argument("(" + std::to_string(n) + "," + std::to_string(r) +
                                    ") is not an admissible order/degree pair");

    RegularDpResult result;
    if (r == 3) {
        if (n == 4) {
            result.tagged.graph = complete_graph(4);
            result.tagged.parts = {{"vertices", iota_range(0, 4)}};
            result.certificate = prefix_chain_certificate(4);
        } else if (n == 6) {
            result.tagged.graph = complete_bipartite(3, 3);
            result.tagged.parts = {{"left", iota_range(0, 3)}, {"right", iota_range(3, 6)}};
            DpCertificate cert;
            cert.per_order.resize(6);
            cert.per_order[5] = iota_range(0, 6);
            for (const auto& s : peel_two_parts(iota_range(0, 3), iota_range(3, 6), {}, 1))
                cert.per_order[s.size() - 1] = s;
            result.certificate = std::move(cert);
        } else {
            const int k = n / 2;
            result.tagged.graph = ladder_graph(n);
            result.tagged.parts = {{"u-path", iota_range(0, k)}, {"v-path", iota_range(k, n)}};
            result.certificate = ladder_certificate(n);
        }
    } else if (n <= 2 * r) {
        result.tagged.graph = case_a_graph(n, r);
        result.tagged.parts = {{"circulant", iota_range(0, r)}, {"independent", iota_range(r, n)}};
        result.certificate = case_a_certificate(n, r);
    } else if (n == 2 * r + 1) {
        result.tagged.graph = case_b_graph(r);
        result.tagged.parts = {{"left", iota_range(0, r)},
                               {"right", iota_range(r, 2 * r)},
                               {"external", {2 * r}}};
        result.certificate = case_b_certificate(r);
    } else {
        result = build_chain_case(n, r);
    }

    const CertificateCheck check = verify_certificate(result.tagged.graph, result.certificate);
    if (!check.valid)
        throw std::logic_error("construction produced an invalid certificate for (" +
                               std::to_string(n) + "," + std::to_string(r) + ") at order " +
                               std::to_string(*check.first_failing_order));
    return result;
}

}  // namespace dpforge
