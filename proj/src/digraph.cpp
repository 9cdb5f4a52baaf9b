#include "disim/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace disim {

Digraph build_digraph(int n, std::span<const Arc> arcs,
                      std::vector<std::string> labels) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    if (!labels.empty()) {
        if (static_cast<int>(labels.size()) != n)
            throw std::invalid_argument("label count does not match vertex count");
        std::unordered_set<std::string> seen;
        for (const std::string& s : labels)
            if (!seen.insert(s).second)
                throw std::invalid_argument("duplicate label: " + s);
    }

    for (const Arc& a : arcs) {
        if (a.tail < 0 || a.tail >= n || a.head < 0 || a.head >= n)
            throw std::invalid_argument("arc endpoint out of range");
    }
    std::vector<Arc> sorted(arcs.begin(), arcs.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const int m = static_cast<int>(sorted.size());

    Digraph d;
    d.n_ = n;
    d.m_ = m;
    d.labels_ = std::move(labels);
    d.deg_.assign(n, 0);

    d.out_flat_.resize(m);
    d.out_off_.assign(n + 1, 0);
    for (const Arc& a : sorted) ++d.out_off_[a.tail + 1];
    for (int v = 0; v < n; ++v) d.out_off_[v + 1] += d.out_off_[v];
    for (int k = 0; k < m; ++k) d.out_flat_[k] = sorted[k].head;

    d.in_flat_.resize(m);
    d.in_off_.assign(n + 1, 0);
    for (const Arc& a : sorted) ++d.in_off_[a.head + 1];
    for (int v = 0; v < n; ++v) d.in_off_[v + 1] += d.in_off_[v];
    {
        std::vector<int> cursor(d.in_off_.begin(), d.in_off_.end() - 1);
        // tail-major order keeps each in-segment sorted
        for (const Arc& a : sorted) d.in_flat_[cursor[a.head]++] = a.tail;
    }

    for (int v = 0; v < n; ++v) {
        auto o = d.out(v);
        auto i = d.in(v);
        // union size of two sorted ranges
        std::size_t a = 0, b = 0, u = 0;
        while (a < o.size() && b < i.size()) {
            if (o[a] == i[b]) { ++a; ++b; }
            else if (o[a] < i[b]) ++a;
            else ++b;
            ++u;
        }
        d.deg_[v] = static_cast<int>(u + (o.size() - a) + (i.size() - b));
    }
    return d;
}

bool Digraph::has_arc(int u, int v) const {
    auto o = out(u);
    return std::binary_search(o.begin(), o.end(), v);
}

std::vector<Arc> Digraph::arcs() const {
    std::vector<Arc> r;
    r.reserve(m_);
    for (int v = 0; v < n_; ++v)
        for (int w : out(v)) r.push_back({v, w});
    return r;
}

std::string Digraph::label(int v) const {
    if (!labels_.empty()) return labels_[v];
    return std::to_string(v);
}

Digraph reflexive_closure(const Digraph& d) {
    std::vector<Arc> a = d.arcs();
    for (int v = 0; v < d.vertex_count(); ++v) a.push_back({v, v});
    return build_digraph(d.vertex_count(), a, d.labels());
}

bool is_st_graph(const Digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v)
        if (d.in_deg(v) != 0 && d.out_deg(v) != 0) return false;
    return true;
}

GraphStats stats(const Digraph& d) {
    GraphStats s;
    s.n = d.vertex_count();
    s.m = d.arc_count();
    std::vector<int> degs(s.n);
    for (int v = 0; v < s.n; ++v) {
        degs[v] = d.deg(v);
        s.max_degree = std::max(s.max_degree, degs[v]);
    }
    std::sort(degs.rbegin(), degs.rend());
    for (int k = 1; k <= s.n; ++k)
        if (degs[k - 1] >= k) s.h_index = k;
    return s;
}

bool is_matching(std::span<const Arc> arcs) {
    std::unordered_set<int> used;
    for (const Arc& a : arcs) {
        if (!used.insert(a.tail).second) return false;
        if (a.head != a.tail && !used.insert(a.head).second) return false;
    }
    return true;
}

TwinPartition twin_partition(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto key_less = [&](int a, int b) {
        auto oa = g.out(a), ob = g.out(b);
        if (auto c = std::lexicographical_compare_three_way(oa.begin(), oa.end(),
                                                            ob.begin(), ob.end());
            c != 0)
            return c < 0;
        auto ia = g.in(a), ib = g.in(b);
        return std::lexicographical_compare_three_way(ia.begin(), ia.end(),
                                                      ib.begin(), ib.end()) < 0;
    };
    auto key_eq = [&](int a, int b) {
        return std::ranges::equal(g.out(a), g.out(b)) &&
               std::ranges::equal(g.in(a), g.in(b));
    };
    std::sort(order.begin(), order.end(), key_less);

    TwinPartition p;
    p.block.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        if (i == 0 || !key_eq(order[i], order[i - 1]))
            p.representative.push_back(order[i]);
        int b = static_cast<int>(p.representative.size()) - 1;
        p.block[order[i]] = b;
        p.representative[b] = std::min(p.representative[b], order[i]);
    }
    return p;
}

namespace {

// Unique strictly-minimum-degree neighbor of v, or -1 on a tie / when v
// is isolated.
int thin_neighbor(const Digraph& g, int v) {
    int best = -1, best_deg = -1, count = 0;
    auto consider = [&](int w) {
        int dw = g.deg(w);
        if (best == -1 || dw < best_deg) {
            best = w;
            best_deg = dw;
            count = 1;
        } else if (dw == best_deg && w != best) {
            ++count;
        }
    };
    // merge walk over the sorted out/in lists so shared neighbors are
    // considered once
    auto o = g.out(v);
    auto i = g.in(v);
    size_t a = 0, b = 0;
    while (a < o.size() || b < i.size()) {
        if (b == i.size() || (a < o.size() && o[a] <= i[b])) {
            if (b < i.size() && o[a] == i[b]) ++b;
            consider(o[a++]);
        } else {
            consider(i[b++]);
        }
    }
    return count == 1 ? best : -1;
}

}  // namespace

Matching thin_arcs(const Digraph& g) {
    const int n = g.vertex_count();
    std::vector<int> theta(n);
    for (int v = 0; v < n; ++v) theta[v] = thin_neighbor(g, v);

    Matching m;
    for (int v = 0; v < n; ++v) {
        int w = theta[v];
        if (w == -1 || theta[w] != v) continue;
        if (!g.has_arc(v, w)) continue;
        // mutual pair with both orientations present: keep v < w only
        if (w < v && g.has_arc(w, v)) continue;
        m.arcs.push_back({v, w});
    }
    return m;
}

}  // namespace disim
