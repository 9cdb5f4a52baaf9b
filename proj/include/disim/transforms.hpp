#pragma once

#include <utility>
#include <vector>

#include "disim/digraph.hpp"

namespace disim {

/// Provenance record for split / join / repr transforms.  Downstream
/// algorithms pull answers computed on the transformed graph back to the
/// original vertices and arcs, so every transform returns one of these.
struct TransformMap {
    enum class Kind { split, join, repr };
    Kind kind = Kind::split;

    // split -------------------------------------------------------------
    // forward: original vertex -> id of out(v) / in(v), or -1 when absent
    std::vector<int> split_out;
    std::vector<int> split_in;
    struct SplitOrigin {
        int vertex = -1;
        bool is_out = false;  // true: out(vertex), false: in(vertex)
    };
    std::vector<SplitOrigin> split_origin;  // new vertex -> origin

    // join --------------------------------------------------------------
    struct JoinOrigin {
        int tail = -1;
        int head = -1;
        bool matched = false;  // false: unmatched vertex (tail == head)
    };
    std::vector<JoinOrigin> join_origin;  // new vertex -> source pair
    std::vector<int> join_vertex_of;      // original vertex -> new vertex

    /// Join vertex of matched arc tail->head, or -1 if that arc is not in
    /// the matching the join was built from.
    int join_vertex_of_arc(int tail, int head) const {
        int id = join_vertex_of[tail];
        const JoinOrigin& o = join_origin[id];
        return (o.matched && o.tail == tail && o.head == head) ? id : -1;
    }

    // repr --------------------------------------------------------------
    std::vector<int> repr_forward;   // original vertex -> reduced vertex
    std::vector<int> repr_backward;  // reduced vertex -> representative
};

/// Splits each vertex into a pure source out(v) (if v is not a sink) and
/// a pure sink in(v) (if v is not a source); out(v)->in(w) iff v->w.
/// The result is an ST graph with the same number of arcs.
std::pair<Digraph, TransformMap> split(const Digraph& d);

/// Contracts each matched arc v->w into one vertex (v,w) and keeps each
/// unmatched vertex v as (v,v); (v,w)->(x,y) iff v->y in g.  Loops in m
/// are accepted: a loop occupies its single endpoint.
/// Throws std::invalid_argument when m is not a matching inside E(g).
std::pair<Digraph, TransformMap> join(const Digraph& g, const Matching& m);

/// join(g, thin_arcs(g)).
std::pair<Digraph, TransformMap> join_thin(const Digraph& g);

/// Induced subdigraph on twin-block representatives (minimum id per
/// block).  repr_forward maps every vertex to its block's image.
std::pair<Digraph, TransformMap> repr_reduction(const Digraph& g);

/// Vertex bijection witnessing an isomorphism, as image[v] per vertex.
using IsomorphismWitness = std::vector<int>;

/// For reflexive d, verifies that v -> joined vertex of (out(v), in(v))
/// is an isomorphism between d and join(split(d), {out(v)->in(v)}).
/// Throws std::invalid_argument if d is not reflexive and
/// std::logic_error if the verification fails.
IsomorphismWitness split_join_roundtrip_check(const Digraph& d);

/// For an ST graph g with perfect matching m, verifies the standard
/// isomorphism between g and split(join(g, m)).
/// Throws std::invalid_argument on precondition violation and
/// std::logic_error if the verification fails.
IsomorphismWitness join_split_roundtrip_check(const Digraph& g, const Matching& m);

}  // namespace disim
