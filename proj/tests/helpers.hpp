#pragma once

#include <cstdint>
#include <vector>

#include "disim/digraph.hpp"

namespace tst {

using disim::Arc;
using disim::Digraph;

// a=0 -> b=1, a -> d=3, c=2 -> b : the 4-vertex fork used throughout
inline Digraph fork() {
    return disim::build_digraph(4, std::vector<Arc>{{0, 1}, {0, 3}, {2, 1}});
}

// sources 0,1 -> sinks 2,3, all four arcs
inline Digraph k22() {
    return disim::build_digraph(
        4, std::vector<Arc>{{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

// alternately oriented 6-cycle: a->b, c->b, c->d, e->d, e->f, a->f
inline Digraph c6() {
    return disim::build_digraph(
        6, std::vector<Arc>{{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {0, 5}});
}

// reflexive diamond poset: bottom 0 <= {1,2} <= top 3
inline Digraph diamond() {
    std::vector<Arc> a;
    for (int v = 0; v < 4; ++v) a.push_back({v, v});
    a.insert(a.end(), {{0, 1}, {0, 2}, {0, 3}, {1, 3}, {2, 3}});
    return disim::build_digraph(4, a);
}

// x=0, y=1 both below the incomparable tops u1=2, u2=3
inline Digraph two_tops() {
    std::vector<Arc> a;
    for (int v = 0; v < 4; ++v) a.push_back({v, v});
    a.insert(a.end(), {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
    return disim::build_digraph(4, a);
}

inline Digraph chain(int n) {
    std::vector<Arc> a;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) a.push_back({i, j});
    return disim::build_digraph(n, a);
}

// Digraph on n vertices from a bitmask over the n*n ordered pairs
// (tail-major), loops included.
inline Digraph digraph_from_mask(int n, std::uint32_t mask) {
    std::vector<Arc> a;
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (mask >> (u * n + v) & 1) a.push_back({u, v});
    return disim::build_digraph(n, a);
}

// ST graph with `a` sources and `b` sinks from a bitmask over the a*b
// source->sink pairs.
inline Digraph st_from_mask(int a, int b, std::uint32_t mask) {
    std::vector<Arc> arcs;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j)
            if (mask >> (i * b + j) & 1) arcs.push_back({i, a + j});
    return disim::build_digraph(a + b, arcs);
}

inline bool is_diclique(const Digraph& d, const std::vector<int>& tails,
                        const std::vector<int>& heads) {
    for (int v : tails)
        for (int w : heads)
            if (!d.has_arc(v, w)) return false;
    return true;
}

// All labeled order graphs (reflexive transitive oriented digraphs) on n
// vertices, n <= 5.
std::vector<Digraph> all_order_graphs(int n);

}  // namespace tst
