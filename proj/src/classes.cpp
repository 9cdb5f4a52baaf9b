#include "disim/classes.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

#include "disim/disimplicial.hpp"
#include "disim/hsets.hpp"
#include "disim/transforms.hpp"

namespace disim {

BoundSets bounds(const Digraph& d, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("bounds of an empty set");
    for (int v : vertices)
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("bounds: vertex out of range");

    const int n = d.vertex_count();
    std::vector<int> uniq = vertices;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());

    auto common = [&](auto&& neighborhood) {
        std::vector<int> count(n, 0);
        for (int v : uniq)
            for (int u : neighborhood(v)) ++count[u];
        std::vector<int> r;
        for (int u = 0; u < n; ++u)
            if (count[u] == static_cast<int>(uniq.size())) r.push_back(u);
        return r;
    };

    BoundSets b;
    b.upper = common([&](int v) { return d.out(v); });
    b.lower = common([&](int v) { return d.in(v); });

    auto pick_extreme = [&](const std::vector<int>& set, bool sup) -> std::optional<int> {
        // supremum: member of mu(V) that is a lower bound of mu(V)
        for (int u : set) {
            bool ok = true;
            for (int z : set)
                if (sup ? !d.has_arc(u, z) : !d.has_arc(z, u)) {
                    ok = false;
                    break;
                }
            if (ok) return u;
        }
        return std::nullopt;
    };
    b.supremum = pick_extreme(b.upper, true);
    b.infimum = pick_extreme(b.lower, false);
    return b;
}

namespace {

// First vertex without a loop, or -1.
int irreflexive_vertex(const Digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v)
        if (!d.has_loop(v)) return v;
    return -1;
}

// Some 2-cycle v <-> w with v != w, or nullopt.
std::optional<Arc> two_cycle(const Digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v)
        for (int w : d.out(v))
            if (w > v && d.has_arc(w, v)) return Arc{v, w};
    return std::nullopt;
}

}  // namespace

bool is_order_graph(const Digraph& d) {
    return irreflexive_vertex(d) == -1 && !two_cycle(d) &&
           is_transitive_digraph(d);
}

namespace {

// Core of the dedekind test; when witness is non-null the offending pair
// is stored there instead of being reported via the return value alone.
bool dedekind_core(const Digraph& d, std::pair<int, int>* witness) {
    const int n = d.vertex_count();
    std::vector<uint32_t> mark(n, 0);
    uint32_t epoch = 0;
    std::vector<int> mu;
    for (int v = 0; v < n; ++v) {
        ++epoch;
        for (int u : d.out(v)) mark[u] = epoch;
        for (int w = v + 1; w < n; ++w) {
            mu.clear();
            for (int u : d.out(w))
                if (mark[u] == epoch) mu.push_back(u);
            if (mu.empty()) continue;
            bool ok = false;
            for (int u : mu)
                if (d.out_deg(u) == static_cast<int>(mu.size())) {
                    ok = true;
                    break;
                }
            if (!ok) {
                if (witness) *witness = {v, w};
                return false;
            }
        }
    }
    return true;
}

}  // namespace

bool is_dedekind(const Digraph& d) {
    if (!is_order_graph(d))
        throw std::invalid_argument("is_dedekind requires an order graph");
    return dedekind_core(d, nullptr);
}

namespace {

struct Normalized {
    Digraph reduced;       // twin-free ST graph
    TransformMap split_map;
    TransformMap repr_map;
};

Normalized normalize_to_twin_free_st(const Digraph& g) {
    auto [s, smap] = split(g);
    auto [r, rmap] = repr_reduction(s);
    return {std::move(r), std::move(smap), std::move(rmap)};
}

// Every arc a->b of d needs a midpoint c with a->c and c->b.  The witness
// arcs for a are exactly the arcs inside N+(a), found through the static
// H sets.  Returns an offending arc or nullopt.
std::optional<Arc> midpoint_violation(const Digraph& d) {
    const int n = d.vertex_count();
    HSets hs(d);
    std::vector<uint32_t> mark(n, 0), hit(n, 0);
    uint32_t epoch = 0;
    for (int a = 0; a < n; ++a) {
        ++epoch;
        for (int b : d.out(a)) mark[b] = epoch;
        for (int z : d.out(a)) {
            for (const auto& e : hs.h_in(z))
                if (mark[e.vertex] == epoch) {
                    hit[z] = epoch;
                    break;
                }
            for (const auto& e : hs.h_out(z))
                if (mark[e.vertex] == epoch) hit[e.vertex] = epoch;
        }
        for (int b : d.out(a))
            if (hit[b] != epoch) return Arc{a, b};
    }
    return std::nullopt;
}

}  // namespace

bool is_wdi(const Digraph& g) {
    Normalized nz = normalize_to_twin_free_st(g);
    auto [d, jmap] = join_thin(nz.reduced);
    if (!is_transitive_digraph(d)) return false;
    return !midpoint_violation(d).has_value();
}

bool is_di(const Digraph& g) {
    Normalized nz = normalize_to_twin_free_st(g);
    Matching thin = thin_arcs(nz.reduced);
    std::vector<char> covered(nz.reduced.vertex_count(), 0);
    for (const Arc& a : thin.arcs) covered[a.tail] = covered[a.head] = 1;
    for (char c : covered)
        if (!c) return false;  // thin arcs must form a perfect matching
    auto [d, jmap] = join(nz.reduced, thin);
    return is_order_graph(d) && dedekind_core(d, nullptr);
}

bool dedekind_via_split_check(const Digraph& d) {
    if (!is_order_graph(d))
        throw std::invalid_argument(
            "dedekind_via_split_check requires an order graph");
    return is_di(split(d).first);
}

namespace {

// Pulls a vertex of the twin-free ST reduction back to the original
// vertex it represents, rendered with its original label.
std::string pullback_vertex(const Digraph& g, const Normalized& nz, int rv) {
    int sv = nz.repr_map.repr_backward[rv];
    const auto& o = nz.split_map.split_origin[sv];
    return g.label(o.vertex);
}

// An arc of the reduction is an arc of the split, hence an original arc
// between the represented vertices.
std::string pullback_arc(const Digraph& g, const Normalized& nz, int rt, int rh) {
    return pullback_vertex(g, nz, rt) + "->" + pullback_vertex(g, nz, rh);
}

}  // namespace

ClassReport classify(const Digraph& g) {
    ClassReport rep;
    rep.is_st = is_st_graph(g);
    TwinPartition twins = twin_partition(g);
    rep.is_twin_free = twins.block_count() == g.vertex_count();
    int irr = irreflexive_vertex(g);
    rep.is_reflexive = irr == -1;
    auto cyc = two_cycle(g);
    rep.is_oriented = !cyc.has_value();
    TransitiveReport tr = transitive_vertices(g);
    rep.is_transitive = tr.all_transitive();
    rep.is_order = rep.is_reflexive && rep.is_oriented && rep.is_transitive;

    std::pair<int, int> bad_pair{-1, -1};
    rep.is_dedekind = rep.is_order && dedekind_core(g, &bad_pair);

    Normalized nz = normalize_to_twin_free_st(g);
    Matching thin = thin_arcs(nz.reduced);
    auto [d, jmap] = join(nz.reduced, thin);
    TransitiveReport dtr = transitive_vertices(d);
    std::optional<Arc> mid;
    if (dtr.all_transitive()) mid = midpoint_violation(d);
    rep.is_wdi = dtr.all_transitive() && !mid;

    std::vector<char> covered(nz.reduced.vertex_count(), 0);
    for (const Arc& a : thin.arcs) covered[a.tail] = covered[a.head] = 1;
    bool thin_perfect =
        std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
    std::pair<int, int> bad_join_pair{-1, -1};
    rep.is_di = thin_perfect && is_order_graph(d) &&
                dedekind_core(d, &bad_join_pair);

    // witness for the most informative failed recognition
    if (!rep.is_wdi) {
        if (!dtr.all_transitive()) {
            for (int v = 0; v < d.vertex_count(); ++v)
                if (!dtr.transitive[v]) {
                    const auto& o = jmap.join_origin[v];
                    rep.witness = Witness{
                        "arc_in_no_reduced_diclique",
                        {o.matched ? pullback_arc(g, nz, o.tail, o.head)
                                   : pullback_vertex(g, nz, o.tail)}};
                    break;
                }
        } else if (mid) {
            const auto& ot = jmap.join_origin[mid->tail];
            const auto& oh = jmap.join_origin[mid->head];
            rep.witness =
                Witness{"arc_in_no_reduced_diclique",
                        {pullback_arc(g, nz, ot.tail, oh.head)}};
        }
    } else if (rep.is_order && !rep.is_dedekind) {
        rep.witness = Witness{"pair_without_supremum",
                              {g.label(bad_pair.first), g.label(bad_pair.second)}};
    } else if (!rep.is_di) {
        if (!thin_perfect) {
            for (int v = 0; v < nz.reduced.vertex_count(); ++v)
                if (!covered[v]) {
                    rep.witness = Witness{"vertex_without_thin_arc",
                                          {pullback_vertex(g, nz, v)}};
                    break;
                }
        } else if (bad_join_pair.first != -1) {
            auto render = [&](int jv) {
                const auto& o = jmap.join_origin[jv];
                return o.matched ? pullback_arc(g, nz, o.tail, o.head)
                                 : pullback_vertex(g, nz, o.tail);
            };
            rep.witness = Witness{"pair_without_supremum",
                                  {render(bad_join_pair.first),
                                   render(bad_join_pair.second)}};
        }
    }
    return rep;
}

std::string class_report_json(const ClassReport& r, int indent) {
    nlohmann::ordered_json out;
    out["st"] = r.is_st;
    out["twin_free"] = r.is_twin_free;
    out["reflexive"] = r.is_reflexive;
    out["oriented"] = r.is_oriented;
    out["transitive"] = r.is_transitive;
    out["order"] = r.is_order;
    out["dedekind"] = r.is_dedekind;
    out["wdi"] = r.is_wdi;
    out["di"] = r.is_di;
    if (r.witness)
        out["witness"] = {{"kind", r.witness->kind}, {"items", r.witness->items}};
    return out.dump(indent);
}

}  // namespace disim
