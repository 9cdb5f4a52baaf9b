#pragma once

#include <span>
#include <vector>

#include "disim/digraph.hpp"

namespace disim {

/// Static per-vertex H sets of a digraph, in flat CSR storage.
///   h_out(v) = { w in N+(v) | in_deg(w) >= out_deg(v) }
///   h_in(v)  = { w in N-(v) | out_deg(w) >= in_deg(v) }
/// Every arc v->w satisfies w in h_out(v) or v in h_in(w), so walking all
/// H sets touches each arc at least once and at most twice.  Entries carry
/// the arc id (position in Digraph::arcs() order) for visited-stamping.
struct HSets {
    struct Entry {
        int vertex;
        int arc_id;
    };

    std::span<const Entry> h_out(int v) const {
        return {out_ent_.data() + out_off_[v],
                static_cast<std::size_t>(out_off_[v + 1] - out_off_[v])};
    }
    std::span<const Entry> h_in(int v) const {
        return {in_ent_.data() + in_off_[v],
                static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
    }

    explicit HSets(const Digraph& d) {
        const int n = d.vertex_count();
        out_off_.assign(n + 1, 0);
        in_off_.assign(n + 1, 0);
        for (int v = 0; v < n; ++v)
            for (int w : d.out(v)) {
                if (d.in_deg(w) >= d.out_deg(v)) ++out_off_[v + 1];
                if (d.out_deg(v) >= d.in_deg(w)) ++in_off_[w + 1];
            }
        for (int v = 0; v < n; ++v) {
            out_off_[v + 1] += out_off_[v];
            in_off_[v + 1] += in_off_[v];
        }
        out_ent_.resize(out_off_[n]);
        in_ent_.resize(in_off_[n]);
        std::vector<int> oc(out_off_.begin(), out_off_.end() - 1);
        std::vector<int> ic(in_off_.begin(), in_off_.end() - 1);
        int arc_id = 0;
        for (int v = 0; v < n; ++v)
            for (int w : d.out(v)) {
                if (d.in_deg(w) >= d.out_deg(v)) out_ent_[oc[v]++] = {w, arc_id};
                if (d.out_deg(v) >= d.in_deg(w)) in_ent_[ic[w]++] = {v, arc_id};
                ++arc_id;
            }
    }

private:
    std::vector<Entry> out_ent_, in_ent_;
    std::vector<int> out_off_, in_off_;
};

}  // namespace disim
