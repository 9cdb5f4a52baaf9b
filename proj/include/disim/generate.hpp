#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "disim/digraph.hpp"

namespace disim {

using Rng = std::mt19937_64;

// Plain sparse instance generators used by the test suites and the `gen`
// subcommand.  Everything is deterministic given the engine state.

inline Digraph random_digraph(Rng& rng, int n, int m, bool loops = true) {
    std::vector<Arc> arcs;
    if (n > 0) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < m; ++i) {
            int u = pick(rng), v = pick(rng);
            if (!loops && u == v) continue;
            arcs.push_back({u, v});
        }
    }
    return build_digraph(n, arcs);
}

/// Sources 0..a-1, sinks a..a+b-1, m arcs sampled with replacement.
inline Digraph random_st_graph(Rng& rng, int a, int b, int m) {
    std::vector<Arc> arcs;
    if (a > 0 && b > 0) {
        std::uniform_int_distribution<int> ps(0, a - 1), pt(0, b - 1);
        for (int i = 0; i < m; ++i) arcs.push_back({ps(rng), a + pt(rng)});
    }
    return build_digraph(a + b, arcs);
}

inline Digraph random_reflexive_digraph(Rng& rng, int n, int m) {
    Digraph d = random_digraph(rng, n, m);
    return reflexive_closure(d);
}

/// Random finite poset: arcs only from lower to higher rank, then the
/// reflexive-transitive closure.
inline Digraph random_order_graph(Rng& rng, int n, int m) {
    std::vector<std::vector<char>> reach(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v) reach[v][v] = 1;
    if (n > 1) {
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int i = 0; i < m; ++i) {
            int u = pick(rng), v = pick(rng);
            if (u == v) continue;
            if (u > v) std::swap(u, v);
            reach[u][v] = 1;
        }
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            if (reach[i][k])
                for (int j = 0; j < n; ++j)
                    if (reach[k][j]) reach[i][j] = 1;
    std::vector<Arc> arcs;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (reach[i][j]) arcs.push_back({i, j});
    return build_digraph(n, arcs);
}

/// Greedy matching over a shuffled copy of the arc set.
inline Matching random_matching(Rng& rng, const Digraph& g) {
    std::vector<Arc> arcs = g.arcs();
    std::shuffle(arcs.begin(), arcs.end(), rng);
    std::vector<char> used(g.vertex_count(), 0);
    Matching m;
    for (const Arc& a : arcs) {
        if (used[a.tail] || used[a.head]) continue;
        if (std::bernoulli_distribution(0.8)(rng)) {
            used[a.tail] = used[a.head] = 1;
            m.arcs.push_back(a);
        }
    }
    return m;
}

/// ST graph on k+k vertices with the perfect matching i -> k+i plus extra
/// random source->sink arcs.  Returns the graph and the matching.
inline std::pair<Digraph, Matching> random_st_with_perfect_matching(Rng& rng,
                                                                    int k,
                                                                    int extra) {
    std::vector<Arc> arcs;
    Matching m;
    for (int i = 0; i < k; ++i) {
        arcs.push_back({i, k + i});
        m.arcs.push_back({i, k + i});
    }
    if (k > 0) {
        std::uniform_int_distribution<int> pick(0, k - 1);
        for (int i = 0; i < extra; ++i) arcs.push_back({pick(rng), k + pick(rng)});
    }
    return {build_digraph(2 * k, arcs), std::move(m)};
}

/// Even cycle of length 2k (k >= 2) oriented alternately, so every vertex
/// is a source or a sink: 0->1, 2->1, 2->3, ..., 0->(2k-1).
inline Digraph cycle_st_graph(int k) {
    std::vector<Arc> arcs;
    const int n = 2 * k;
    for (int s = 0; s < n; s += 2) {
        arcs.push_back({s, (s + 1) % n});
        arcs.push_back({s, (s + n - 1) % n});
    }
    return build_digraph(n, arcs);
}

/// ST graphs that admit a perfect elimination scheme by construction:
/// either the split of a random order graph (its matching of disimplicial
/// arcs is perfect), a nested "staircase" of dicliques, or a disjoint
/// union of balanced complete dicliques.
Digraph random_perfect_elimination_st(Rng& rng, int size_hint);

}  // namespace disim
