#include "dpforge/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <numeric>
#include <stdexcept>

#include "dpforge/graph6.hpp"

namespace dpforge {

namespace {

// Union-find over vertex ids, used for automorphism orbits.
struct Orbits {
    std::vector<int> parent;
    explicit Orbits(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void merge(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

using Cells = std::vector<std::vector<int>>;

class CanonicalSearcher {
public:
    explicit CanonicalSearcher(const Graph& g) : n_(g.vertex_count()) {
        if (n_ > 64) throw std::invalid_argument("canonical labeling supports n <= 64");
        adj_.resize(n_);
        for (int v = 0; v < n_; ++v) adj_[v] = n_ > 0 ? g.adjacency_word(v, 0) : 0;
    }

    std::vector<int> run() {
        Cells start;
        if (n_ > 0) {
            std::vector<int> all(n_);
            std::iota(all.begin(), all.end(), 0);
            start.push_back(std::move(all));
        }
        std::vector<int> individualized;
        dfs(start, individualized);
        return best_lab_;
    }

private:
    uint64_t cell_mask(const std::vector<int>& cell) const {
        uint64_t m = 0;
        for (int v : cell) m |= uint64_t{1} << v;
        return m;
    }

    // Equitable refinement: repeatedly split cells by the number of
    // neighbors each vertex has inside a splitter cell. Deterministic:
    // cells are scanned in order, new sub-cells are ordered by count.
    void refine(Cells& cells) const {
        std::deque<uint64_t> work;
        for (const auto& c : cells) work.push_back(cell_mask(c));
        while (!work.empty()) {
            const uint64_t splitter = work.front();
            work.pop_front();
            Cells next;
            next.reserve(cells.size());
            for (auto& cell : cells) {
                if (cell.size() <= 1) {
                    next.push_back(std::move(cell));
                    continue;
                }
                // Group by count, keys ascending; stable within a group.
                std::vector<std::pair<int, int>> keyed;
                keyed.reserve(cell.size());
                for (int v : cell)
                    keyed.emplace_back(std::popcount(adj_[v] & splitter), v);
                std::stable_sort(keyed.begin(), keyed.end(),
                                 [](const auto& a, const auto& b) { return a.first < b.first; });
                const bool split = keyed.front().first != keyed.back().first;
                if (!split) {
                    next.push_back(std::move(cell));
                    continue;
                }
                size_t i = 0;
                while (i < keyed.size()) {
                    size_t j = i;
                    std::vector<int> sub;
                    while (j < keyed.size() && keyed[j].first == keyed[i].first)
                        sub.push_back(keyed[j++].second);
                    work.push_back(cell_mask(sub));
                    next.push_back(std::move(sub));
                    i = j;
                }
            }
            cells = std::move(next);
        }
    }

    // Adjacency rows of g relabeled by lab (position -> vertex), with the
    // bit for position j in row i. Any fixed total order works; we use
    // lexicographic comparison of the row words.
    std::vector<uint64_t> relabeled_rows(const std::vector<int>& lab) const {
        std::vector<int> pos(n_);
        for (int i = 0; i < n_; ++i) pos[lab[i]] = i;
        std::vector<uint64_t> rows(n_, 0);
        for (int i = 0; i < n_; ++i) {
            uint64_t m = adj_[lab[i]];
            while (m) {
                const int v = std::countr_zero(m);
                m &= m - 1;
                rows[i] |= uint64_t{1} << pos[v];
            }
        }
        return rows;
    }

    void handle_leaf(const Cells& cells) {
        std::vector<int> lab;
        lab.reserve(n_);
        for (const auto& c : cells) lab.push_back(c[0]);
        std::vector<uint64_t> rows = relabeled_rows(lab);
        if (best_lab_.empty() && n_ > 0) {
            best_rows_ = std::move(rows);
            best_lab_ = std::move(lab);
            return;
        }
        if (n_ == 0) {
            best_lab_.clear();
            return;
        }
        if (rows > best_rows_) {
            best_rows_ = std::move(rows);
            best_lab_ = std::move(lab);
        } else if (rows == best_rows_) {
            // Two labelings with identical relabeled adjacency: the map
            // best_lab[i] -> lab[i] is an automorphism.
            std::vector<int> perm(n_);
            for (int i = 0; i < n_; ++i) perm[best_lab_[i]] = lab[i];
            bool identity = true;
            for (int v = 0; v < n_; ++v)
                if (perm[v] != v) identity = false;
            if (!identity) generators_.push_back(std::move(perm));
        }
    }

    void dfs(Cells cells, std::vector<int>& individualized) {
        refine(cells);
        int target = -1;
        for (size_t i = 0; i < cells.size(); ++i) {
            if (cells[i].size() > 1) {
                target = static_cast<int>(i);
                break;
            }
        }
        if (target < 0) {
            handle_leaf(cells);
            return;
        }

        // Orbit pruning: candidates equivalent under an automorphism that
        // fixes every previously individualized vertex explore identical
        // subtrees, so only one representative per orbit is tried. Orbits
        // are recomputed per candidate because sibling subtrees discover
        // new generators as they complete.
        std::vector<int> tried;
        const std::vector<int> candidates = cells[target];
        for (int v : candidates) {
            Orbits orbits(n_);
            for (const auto& gen : generators_) {
                bool fixes = true;
                for (int u : individualized)
                    if (gen[u] != u) { fixes = false; break; }
                if (!fixes) continue;
                for (int u = 0; u < n_; ++u) orbits.merge(u, gen[u]);
            }
            const int root = orbits.find(v);
            bool seen = false;
            for (int u : tried)
                if (orbits.find(u) == root) { seen = true; break; }
            if (seen) continue;
            tried.push_back(v);

            Cells child;
            child.reserve(cells.size() + 1);
            for (size_t i = 0; i < cells.size(); ++i) {
                if (static_cast<int>(i) != target) {
                    child.push_back(cells[i]);
                    continue;
                }
                child.push_back({v});
                std::vector<int> rest;
                for (int u : cells[i])
                    if (u != v) rest.push_back(u);
                child.push_back(std::move(rest));
            }
            individualized.push_back(v);
            dfs(std::move(child), individualized);
            individualized.pop_back();
        }
    }

    int n_;
    std::vector<uint64_t> adj_;
    std::vector<uint64_t> best_rows_;
    std::vector<int> best_lab_;
    std::vector<std::vector<int>> generators_;
};

}  // namespace

std::vector<int> canonical_labeling(const Graph& g) {
    CanonicalSearcher searcher(g);
    std::vector<int> lab = searcher.run();
    if (static_cast<int>(lab.size()) != g.vertex_count())
        lab.resize(g.vertex_count());
    return lab;
}

CanonicalForm canonical_form(const Graph& g) {
    const std::vector<int> lab = canonical_labeling(g);
    const int n = g.vertex_count();
    Graph relabeled(n);
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[lab[i]] = i;
    for (const auto& [u, v] : g.edges()) relabeled.add_edge(pos[u], pos[v]);
    return encode_graph6(relabeled);
}

}  // namespace dpforge
