#include "dpforge/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <cstdio>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "dpforge/canonical.hpp"
#include "dpforge/havel_hakimi.hpp"
#include "dpforge/isometry.hpp"

namespace dpforge {

namespace {

// Generates every deg-regular graph on n vertices up to isomorphism
// (connected or not). Rows of the adjacency matrix are decided top-down;
// two prunes keep the labeled multiplicity low without losing any class:
//
//  * prefix rule: columns with identical decided history are
//    interchangeable, so within such a run only prefixes are selected
//    (the lexicographically maximal labeling of every graph survives);
//  * swap rule: transposing two adjacent already-decided vertices must
//    not make the decided part of the adjacency word lexicographically
//    larger, for the same reason;
//  * feasibility: the residual degree demands of the undecided vertices
//    must pass the Erdos-Gallai test, which is exact.
//
// Survivors are still deduplicated by canonical form, so correctness does
// not rest on the prunes being tight.
class RegularFamilyGenerator {
public:
    RegularFamilyGenerator(int n, int deg, std::function<void(const Graph&)> emit)
        : n_(n), deg_(deg), emit_(std::move(emit)) {
        if (n < 0 || n > 62) throw std::invalid_argument("regular generation supports n <= 62");
    }

    void run() {
        if (deg_ < 0 || deg_ > n_ - 1) return;
        if ((n_ * deg_) % 2 != 0) return;
        if (n_ == 0) return;
        rows_.assign(n_, 0);
        back_deg_.assign(n_, 0);
        cls_.assign(n_, 0);
        gen_row(0);
    }

private:
    struct Interval {
        int start;
        int length;
    };

    // True when swapping vertices u and u+1 (both decided, u+1 <= i)
    // makes the decided adjacency word strictly larger; any completion of
    // such a state is beaten by its own swap image, so the branch is dead.
    bool swap_improves(int i, int u) const {
        auto bit = [&](int a, int b) { return (rows_[a] >> b) & uint64_t{1}; };
        auto swapped = [&](int v) { return v == u ? u + 1 : v == u + 1 ? u : v; };
        for (int a = 0; a <= i; ++a) {
            for (int b = a + 1; b < n_; ++b) {
                const uint64_t orig = bit(a, b);
                const uint64_t image = bit(swapped(a), swapped(b));
                if (image != orig) return image > orig;
            }
        }
        return false;
    }

    void gen_row(int i) {
        if (i == n_) {
            Graph g(n_);
            for (int u = 0; u < n_; ++u) {
                uint64_t m = rows_[u];
                while (m) {
                    const int v = std::countr_zero(m);
                    m &= m - 1;
                    if (u < v) g.add_edge(u, v);
                }
            }
            CanonicalForm form = canonical_form(g);
            if (seen_.insert(form).second) emit_(g);
            return;
        }
        const int need = deg_ - back_deg_[i];
        if (need < 0 || need > n_ - 1 - i) return;

        std::vector<Interval> intervals;
        for (int j = i + 1; j < n_;) {
            int k = j;
            while (k < n_ && cls_[k] == cls_[j]) ++k;
            intervals.push_back({j, k - j});
            j = k;
        }
        std::vector<int> take(intervals.size(), 0);
        choose(i, 0, need, intervals, take);
    }

    void choose(int i, size_t t, int need, const std::vector<Interval>& intervals,
                std::vector<int>& take) {
        if (need == 0) {
            std::fill(take.begin() + t, take.end(), 0);
            commit(i, intervals, take);
            return;
        }
        if (t == intervals.size()) return;
        const Interval& iv = intervals[t];
        const int cap = back_deg_[iv.start] < deg_ ? iv.length : 0;
        for (int c = std::min(cap, need); c >= 0; --c) {
            take[t] = c;
            choose(i, t + 1, need - c, intervals, take);
        }
        take[t] = 0;
    }

    void commit(int i, const std::vector<Interval>& intervals, const std::vector<int>& take) {
        uint64_t chosen = 0;
        for (size_t t = 0; t < intervals.size(); ++t)
            for (int c = 0; c < take[t]; ++c)
                chosen |= uint64_t{1} << (intervals[t].start + c);

        std::vector<int> defs;
        defs.reserve(n_ - 1 - i);
        for (int j = i + 1; j < n_; ++j) {
            const int extra = (chosen >> j) & 1;
            defs.push_back(deg_ - back_deg_[j] - extra);
            if (defs.back() < 0) return;
        }
        std::sort(defs.begin(), defs.end(), std::greater<int>());
        if (!erdos_gallai_graphical(DegreeSequence(defs))) return;

        // Apply, renumber column classes by (old class, chosen bit), recurse.
        const std::vector<int> saved_cls = cls_;
        rows_[i] |= chosen;
        uint64_t m = chosen;
        while (m) {
            const int j = std::countr_zero(m);
            m &= m - 1;
            rows_[j] |= uint64_t{1} << i;
            ++back_deg_[j];
        }
        int next_id = 0;
        for (int j = i + 1; j < n_; ++j) {
            const bool boundary = j == i + 1 || cls_[j] != cls_[j - 1] ||
                                  ((chosen >> j) & 1) != ((chosen >> (j - 1)) & 1);
            if (boundary) ++next_id;
            cls_[j] = next_id;
        }

        bool dead = false;
        for (int u = 0; u + 1 <= i && !dead; ++u) dead = swap_improves(i, u);
        if (!dead) gen_row(i + 1);

        cls_ = saved_cls;
        m = chosen;
        while (m) {
            const int j = std::countr_zero(m);
            m &= m - 1;
            rows_[j] &= ~(uint64_t{1} << i);
            --back_deg_[j];
        }
        rows_[i] &= ~chosen;
    }

    int n_;
    int deg_;
    std::function<void(const Graph&)> emit_;
    std::vector<uint64_t> rows_;
    std::vector<int> back_deg_;
    std::vector<int> cls_;
    std::unordered_set<std::string> seen_;
};

}  // namespace

void enumerate_connected_regular(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 1) throw std::invalid_argument("enumeration needs n >= 1");
    std::vector<std::pair<CanonicalForm, Graph>> found;
    for (int deg = 0; deg <= (n - 1) / 2; ++deg) {
        const int co_deg = n - 1 - deg;
        RegularFamilyGenerator gen(n, deg, [&](const Graph& g) {
            if (is_connected(g)) found.emplace_back(canonical_form(g), g);
            if (co_deg != deg) {
                Graph h = g.complement();
                if (is_connected(h)) found.emplace_back(canonical_form(h), h);
            }
        });
        gen.run();
    }
    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 1; i < found.size(); ++i)
        if (found[i].first == found[i - 1].first)
            throw std::logic_error("enumeration produced duplicate isomorphism classes");
    for (const auto& [form, g] : found) fn(g);
}

std::vector<Graph> connected_regular_graphs(int n) {
    std::vector<Graph> out;
    enumerate_connected_regular(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

std::string percentage_string(long long successes, long long total) {
    const double pct = total == 0 ? 0.0 : 100.0 * static_cast<double>(successes) / total;
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.3f", pct);
    return buf;
}

SurveyRow survey_regular_dp(int n, int jobs) {
    if (jobs < 1) jobs = 1;
    const std::vector<Graph> graphs = connected_regular_graphs(n);
    SurveyRow row;
    row.n = n;
    row.total = static_cast<long long>(graphs.size());

    std::atomic<size_t> next{0};
    std::atomic<long long> hits{0};
    auto worker = [&]() {
        long long local = 0;
        while (true) {
            const size_t idx = next.fetch_add(1);
            if (idx >= graphs.size()) break;
            if (is_dp(graphs[idx])) ++local;
        }
        hits += local;
    };
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    row.successes = hits.load();
    row.percentage = row.total ? 100.0 * static_cast<double>(row.successes) / row.total : 0.0;
    return row;
}

SurveyRow survey_modified_hh(int n) {
    SurveyRow row;
    row.n = n;
    enumerate_graphical_sequences(n, [&](const DegreeSequence& seq) {
        ++row.total;
        if (havel_hakimi_modified(seq).status == HHStatus::success) ++row.successes;
    });
    row.percentage = row.total ? 100.0 * static_cast<double>(row.successes) / row.total : 0.0;
    return row;
}

}  // namespace dpforge
