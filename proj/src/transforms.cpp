#include "disim/transforms.hpp"

#include <algorithm>
#include <stdexcept>

namespace disim {

std::pair<Digraph, TransformMap> split(const Digraph& d) {
    const int n = d.vertex_count();
    TransformMap map;
    map.kind = TransformMap::Kind::split;
    map.split_out.assign(n, -1);
    map.split_in.assign(n, -1);

    int next = 0;
    for (int v = 0; v < n; ++v)
        if (d.out_deg(v) > 0) {
            map.split_out[v] = next++;
            map.split_origin.push_back({v, true});
        }
    for (int v = 0; v < n; ++v)
        if (d.in_deg(v) > 0) {
            map.split_in[v] = next++;
            map.split_origin.push_back({v, false});
        }

    std::vector<Arc> arcs;
    arcs.reserve(d.arc_count());
    for (int v = 0; v < n; ++v)
        for (int w : d.out(v)) arcs.push_back({map.split_out[v], map.split_in[w]});

    std::vector<std::string> labels;
    if (d.has_labels()) {
        labels.reserve(next);
        for (const auto& o : map.split_origin)
            labels.push_back((o.is_out ? "out(" : "in(") + d.label(o.vertex) + ")");
    }
    return {build_digraph(next, arcs, std::move(labels)), std::move(map)};
}

std::pair<Digraph, TransformMap> join(const Digraph& g, const Matching& m) {
    const int n = g.vertex_count();
    if (!is_matching(m.arcs)) throw std::invalid_argument("join: not a matching");
    for (const Arc& a : m.arcs)
        if (!g.has_arc(a.tail, a.head))
            throw std::invalid_argument("join: matching arc not in the graph");

    TransformMap map;
    map.kind = TransformMap::Kind::join;
    map.join_vertex_of.assign(n, -1);

    std::vector<Arc> sorted = m.arcs;
    std::sort(sorted.begin(), sorted.end());
    for (const Arc& a : sorted) {
        int id = static_cast<int>(map.join_origin.size());
        map.join_origin.push_back({a.tail, a.head, true});
        map.join_vertex_of[a.tail] = id;
        map.join_vertex_of[a.head] = id;
    }
    for (int v = 0; v < n; ++v)
        if (map.join_vertex_of[v] == -1) {
            int id = static_cast<int>(map.join_origin.size());
            map.join_origin.push_back({v, v, false});
            map.join_vertex_of[v] = id;
        }

    const int nn = static_cast<int>(map.join_origin.size());
    std::vector<Arc> arcs;
    // (v,w) -> (x,y) iff v -> y in g; scan tails' out-neighborhoods once
    for (int a = 0; a < nn; ++a) {
        int v = map.join_origin[a].tail;
        for (int y : g.out(v)) {
            int b = map.join_vertex_of[y];
            if (map.join_origin[b].head == y) arcs.push_back({a, b});
        }
    }

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(nn);
        for (const auto& o : map.join_origin)
            labels.push_back(o.matched
                                 ? "(" + g.label(o.tail) + "," + g.label(o.head) + ")"
                                 : "(" + g.label(o.tail) + ")");
    }
    return {build_digraph(nn, arcs, std::move(labels)), std::move(map)};
}

std::pair<Digraph, TransformMap> join_thin(const Digraph& g) {
    return join(g, thin_arcs(g));
}

std::pair<Digraph, TransformMap> repr_reduction(const Digraph& g) {
    const int n = g.vertex_count();
    TwinPartition part = twin_partition(g);

    TransformMap map;
    map.kind = TransformMap::Kind::repr;
    map.repr_forward.assign(n, -1);

    std::vector<int> reps = part.representative;
    std::sort(reps.begin(), reps.end());
    std::vector<int> new_id(n, -1);
    for (int i = 0; i < static_cast<int>(reps.size()); ++i) new_id[reps[i]] = i;
    map.repr_backward = reps;
    for (int v = 0; v < n; ++v) map.repr_forward[v] = new_id[part.repr(v)];

    std::vector<Arc> arcs;
    for (int r : reps)
        for (int w : g.out(r))
            if (new_id[w] != -1) arcs.push_back({new_id[r], new_id[w]});

    std::vector<std::string> labels;
    if (g.has_labels()) {
        labels.reserve(reps.size());
        for (int r : reps) labels.push_back(g.label(r));
    }
    return {build_digraph(static_cast<int>(reps.size()), arcs, std::move(labels)),
            std::move(map)};
}

namespace {

// Verifies that image is a bijection with v->w in a iff image[v]->image[w]
// in b, in both directions.
bool arc_preserving_bijection(const Digraph& a, const Digraph& b,
                              const std::vector<int>& image) {
    if (a.vertex_count() != b.vertex_count()) return false;
    std::vector<char> hit(b.vertex_count(), 0);
    for (int v = 0; v < a.vertex_count(); ++v) {
        int f = image[v];
        if (f < 0 || f >= b.vertex_count() || hit[f]) return false;
        hit[f] = 1;
    }
    if (a.arc_count() != b.arc_count()) return false;
    for (int v = 0; v < a.vertex_count(); ++v)
        for (int w : a.out(v))
            if (!b.has_arc(image[v], image[w])) return false;
    return true;
}

}  // namespace

IsomorphismWitness split_join_roundtrip_check(const Digraph& d) {
    for (int v = 0; v < d.vertex_count(); ++v)
        if (!d.has_loop(v))
            throw std::invalid_argument("roundtrip check requires a reflexive digraph");

    auto [g, smap] = split(d);
    Matching m;
    for (int v = 0; v < d.vertex_count(); ++v)
        m.arcs.push_back({smap.split_out[v], smap.split_in[v]});
    auto [h, jmap] = join(g, m);

    IsomorphismWitness f(d.vertex_count());
    for (int v = 0; v < d.vertex_count(); ++v) {
        int id = jmap.join_vertex_of_arc(smap.split_out[v], smap.split_in[v]);
        if (id == -1) throw std::logic_error("roundtrip: joined vertex missing");
        f[v] = id;
    }
    if (!arc_preserving_bijection(d, h, f))
        throw std::logic_error("split/join roundtrip is not an isomorphism");
    return f;
}

IsomorphismWitness join_split_roundtrip_check(const Digraph& g, const Matching& m) {
    if (!is_st_graph(g))
        throw std::invalid_argument("roundtrip check requires an ST graph");
    if (!is_matching(m.arcs))
        throw std::invalid_argument("roundtrip check requires a matching");
    std::vector<int> mate(g.vertex_count(), -1);
    for (const Arc& a : m.arcs) {
        if (!g.has_arc(a.tail, a.head))
            throw std::invalid_argument("matching arc not in the graph");
        mate[a.tail] = a.head;
        mate[a.head] = a.tail;
    }
    for (int v = 0; v < g.vertex_count(); ++v)
        if (mate[v] == -1)
            throw std::invalid_argument("matching is not perfect");

    auto [d, jmap] = join(g, m);
    auto [h, smap] = split(d);

    // source v maps to out((v, mate(v))), sink v to in((mate(v), v))
    IsomorphismWitness f(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        bool source = g.out_deg(v) > 0;
        int jv = source ? jmap.join_vertex_of_arc(v, mate[v])
                        : jmap.join_vertex_of_arc(mate[v], v);
        if (jv == -1) throw std::logic_error("roundtrip: joined vertex missing");
        int img = source ? smap.split_out[jv] : smap.split_in[jv];
        if (img == -1) throw std::logic_error("roundtrip: split vertex missing");
        f[v] = img;
    }
    if (!arc_preserving_bijection(g, h, f))
        throw std::logic_error("join/split roundtrip is not an isomorphism");
    return f;
}

}  // namespace disim
