#include "disim/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <stdexcept>

namespace disim {
namespace oracle {

bool naive_is_disimplicial(const Digraph& g, Arc arc) {
    if (!g.has_arc(arc.tail, arc.head))
        throw std::invalid_argument("naive_is_disimplicial: arc not present");
    for (int x : g.in(arc.head))
        for (int y : g.out(arc.tail))
            if (!g.has_arc(x, y)) return false;
    return true;
}

std::vector<char> naive_transitive_vertices(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<char> r(n, 1);
    for (int v = 0; v < n; ++v)
        for (int x : d.in(v)) {
            for (int y : d.out(v))
                if (!d.has_arc(x, y)) {
                    r[v] = 0;
                    break;
                }
            if (!r[v]) break;
        }
    return r;
}

std::vector<Arc> naive_disimplicial_arcs(const Digraph& g) {
    std::vector<Arc> r;
    for (const Arc& a : g.arcs())
        if (naive_is_disimplicial(g, a)) r.push_back(a);
    return r;
}

namespace {

struct NeighborMasks {
    std::vector<uint32_t> out, in;
    uint32_t all;

    explicit NeighborMasks(const Digraph& g)
        : out(g.vertex_count(), 0), in(g.vertex_count(), 0) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            for (int y : g.out(v)) out[v] |= uint32_t{1} << y;
            for (int x : g.in(v)) in[v] |= uint32_t{1} << x;
        }
        all = g.vertex_count() == 32 ? ~uint32_t{0}
                                     : (uint32_t{1} << g.vertex_count()) - 1;
    }

    uint32_t common_out(uint32_t set) const {
        uint32_t w = all;
        for (uint32_t s = set; s; s &= s - 1) w &= out[std::countr_zero(s)];
        return w;
    }
    uint32_t common_in(uint32_t set) const {
        uint32_t w = all;
        for (uint32_t s = set; s; s &= s - 1) w &= in[std::countr_zero(s)];
        return w;
    }
};

std::vector<int> mask_to_vec(uint32_t m) {
    std::vector<int> r;
    for (uint32_t s = m; s; s &= s - 1) r.push_back(std::countr_zero(s));
    return r;
}

}  // namespace

std::vector<Diclique> enumerate_maximal_dicliques(const Digraph& g) {
    const int n = g.vertex_count();
    if (n > 20)
        throw std::invalid_argument("enumerate_maximal_dicliques: n > 20");
    NeighborMasks nb(g);
    std::vector<Diclique> out;
    for (uint32_t tails = 1; tails < (uint32_t{1} << n); ++tails) {
        uint32_t heads = nb.common_out(tails);
        if (heads == 0) continue;
        if (nb.common_in(heads) != tails) continue;  // not a fixpoint
        out.push_back({mask_to_vec(tails), mask_to_vec(heads)});
    }
    return out;
}

bool naive_is_wdi(const Digraph& g) {
    std::vector<Arc> dis = naive_disimplicial_arcs(g);
    for (const Arc& e : g.arcs()) {
        bool covered = false;
        for (const Arc& d : dis)
            if (g.has_arc(e.tail, d.head) && g.has_arc(d.tail, e.head)) {
                // e lies inside the reduced diclique N-(d.head) -> N+(d.tail)
                covered = true;
                break;
            }
        if (!covered) return false;
    }
    return true;
}

bool naive_is_di(const Digraph& g) {
    std::vector<Arc> dis = naive_disimplicial_arcs(g);
    for (const Diclique& b : enumerate_maximal_dicliques(g)) {
        bool reduced = false;
        for (const Arc& d : dis)
            if (std::binary_search(b.tails.begin(), b.tails.end(), d.tail) &&
                std::binary_search(b.heads.begin(), b.heads.end(), d.head)) {
                reduced = true;
                break;
            }
        if (!reduced) return false;
    }
    return true;
}

bool naive_is_dedekind(const Digraph& d) {
    const int n = d.vertex_count();
    if (n > 16) throw std::invalid_argument("naive_is_dedekind: n > 16");
    NeighborMasks nb(d);
    for (uint32_t set = 1; set < (uint32_t{1} << n); ++set) {
        uint32_t upper = nb.common_out(set);
        if (upper == 0) continue;  // not bounded from above
        // a supremum is an upper bound below every upper bound
        bool has_sup = false;
        for (uint32_t s = upper; s && !has_sup; s &= s - 1)
            has_sup = (upper & ~nb.out[std::countr_zero(s)]) == 0;
        if (!has_sup) return false;
    }
    return true;
}

}  // namespace oracle
}  // namespace disim
