#include "dpforge/havel_hakimi.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dpforge {

DegreeSequence::DegreeSequence(std::vector<int> values) : d(std::move(values)) {
    for (size_t i = 0; i < d.size(); ++i) {
        if (d[i] < 0) throw std::invalid_argument("degree sequence entries must be nonnegative");
        if (i > 0 && d[i] > d[i - 1])
            throw std::invalid_argument("degree sequence must be weakly decreasing");
    }
}

DegreeSequence DegreeSequence::parse(const std::string& text) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::istringstream t(token);
        int v;
        if (!(t >> v)) throw std::invalid_argument("bad degree sequence entry: \"" + token + "\"");
        std::string rest;
        if (t >> rest) throw std::invalid_argument("bad degree sequence entry: \"" + token + "\"");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("degree sequence is empty");
    return DegreeSequence(std::move(values));
}

bool erdos_gallai_graphical(const DegreeSequence& seq) {
    const auto& d = seq.d;
    const int n = seq.size();
    long long sum = std::accumulate(d.begin(), d.end(), 0LL);
    if (sum % 2 != 0) return false;
    long long lhs = 0;
    for (int k = 1; k <= n; ++k) {
        lhs += d[k - 1];
        long long rhs = static_cast<long long>(k) * (k - 1);
        for (int i = k; i < n; ++i) rhs += std::min(d[i], k);
        if (lhs > rhs) return false;
    }
    return true;
}

namespace {

// Shared loop. The classic variant deletes zeros and re-sorts (weakly
// decreasing, ties keeping their relative order) before every round. The
// fixed-order variant touches the order in no way at all: exhausted
// entries stay in place, drop out silently once they reach the front, and
// the round fails if the front's target window runs past the end or
// contains an exhausted entry.
HHOutcome run_havel_hakimi(const DegreeSequence& seq, bool resort) {
    const int n = seq.size();
    struct Item {
        int value;
        int vertex;
    };
    std::vector<Item> items;
    items.reserve(n);
    for (int i = 0; i < n; ++i) items.push_back({seq.d[i], i});

    HHOutcome out;
    out.labeling.resize(n);
    std::iota(out.labeling.begin(), out.labeling.end(), 0);
    Graph g(n);

    auto fail = [&]() {
        out.status = HHStatus::failure;
        for (const Item& it : items) out.residual.push_back(it.value);
        return out;
    };

    while (true) {
        if (resort) {
            std::erase_if(items, [](const Item& it) { return it.value == 0; });
            std::stable_sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
                return a.value > b.value;
            });
        } else {
            while (!items.empty() && items.front().value == 0) items.erase(items.begin());
        }
        if (items.empty()) {
            out.status = HHStatus::success;
            out.graph = std::move(g);
            return out;
        }
        const Item front = items.front();
        if (front.value > static_cast<int>(items.size()) - 1) return fail();
        if (!resort) {
            for (int j = 1; j <= front.value; ++j)
                if (items[j].value == 0) return fail();
        }
        items.erase(items.begin());
        for (int j = 0; j < front.value; ++j) {
            if (items[j].value <= 0)
                throw std::logic_error("havel-hakimi: entry would go negative");
            g.add_edge(front.vertex, items[j].vertex);
            --items[j].value;
        }
        ++out.iterations;
    }
}

}  // namespace

HHOutcome havel_hakimi_classic(const DegreeSequence& seq) { return run_havel_hakimi(seq, true); }

HHOutcome havel_hakimi_modified(const DegreeSequence& seq) { return run_havel_hakimi(seq, false); }

DpCertificate prefix_certificate(const HHOutcome& outcome) {
    if (outcome.status != HHStatus::success)
        throw std::invalid_argument("prefix certificate needs a successful outcome");
    if (!is_connected(*outcome.graph))
        throw std::invalid_argument("prefix certificate needs a connected graph");
    const int n = outcome.graph->vertex_count();
    DpCertificate cert;
    cert.per_order.resize(n);
    for (int k = 1; k <= n; ++k) {
        cert.per_order[k - 1].resize(k);
        std::iota(cert.per_order[k - 1].begin(), cert.per_order[k - 1].end(), 0);
    }
    return cert;
}

namespace {

void descend(std::vector<int>& prefix, int n, const std::function<void(const DegreeSequence&)>& fn) {
    if (static_cast<int>(prefix.size()) == n) {
        fn(DegreeSequence(prefix));
        return;
    }
    const int hi = prefix.empty() ? n - 1 : prefix.back();
    for (int v = hi; v >= 1; --v) {
        prefix.push_back(v);
        descend(prefix, n, fn);
        prefix.pop_back();
    }
}

}  // namespace

void for_each_positive_sequence(int n, const std::function<void(const DegreeSequence&)>& fn) {
    if (n < 1) throw std::invalid_argument("sequence length must be positive");
    if (n == 1) return;  // entries must lie in 1..n-1, which is empty for n = 1
    std::vector<int> prefix;
    prefix.reserve(n);
    descend(prefix, n, fn);
}

void enumerate_graphical_sequences(int n, const std::function<void(const DegreeSequence&)>& fn) {
    for_each_positive_sequence(n, [&](const DegreeSequence& seq) {
        if (erdos_gallai_graphical(seq)) fn(seq);
    });
}

std::vector<DegreeSequence> graphical_sequences(int n) {
    std::vector<DegreeSequence> out;
    enumerate_graphical_sequences(n, [&](const DegreeSequence& s) { out.push_back(s); });
    return out;
}

}  // namespace dpforge
