#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "disim/digraph.hpp"
#include "disim/hdigraph.hpp"

namespace disim {

/// Per-vertex transitivity report.  t(v) counts the arcs that leave
/// N-(v) and enter N+(v); v is transitive iff t(v) = in_deg(v)*out_deg(v),
/// so vertices with an empty side are vacuously transitive.
struct TransitiveReport {
    std::vector<std::int64_t> t;
    std::vector<char> transitive;

    bool all_transitive() const {
        for (char c : transitive)
            if (!c) return false;
        return true;
    }
};

/// Marking/counting pass over the static H sets; O(sum_v sum_{z in N(v)} h(z)).
TransitiveReport transitive_vertices(const Digraph& d);

bool is_transitive_digraph(const Digraph& d);

/// Reusable arc tester over an HDigraph snapshot of a graph.  Queries are
/// answered by the mark + e-count procedure; the snapshot may be reduced
/// via hdigraph().remove() between queries, in which case answers refer
/// to the current residual graph.
class DisimplicialEngine {
public:
    explicit DisimplicialEngine(const Digraph& g);

    /// True iff N-(head) -> N+(tail) is a diclique of the current graph.
    /// Throws std::invalid_argument when the arc is absent.
    bool arc_disimplicial(int tail, int head);

    HDigraph& hdigraph() { return h_; }
    const HDigraph& hdigraph() const { return h_; }

private:
    HDigraph h_;
    std::vector<uint32_t> mark_a_, mark_b_, arc_mark_;
    uint32_t epoch_ = 0;
};

/// One-shot arc test; builds a snapshot internally.
bool is_disimplicial(const Digraph& g, Arc arc);

/// Every disimplicial arc of g, sorted, via the split -> twin reduction ->
/// thin join -> transitive vertices pipeline with per-arc pullback.
std::vector<Arc> all_disimplicial_arcs(const Digraph& g);

/// Transitivity of d decided through the disimpliciality of the matching
/// arcs of the split of the reflexive closure, plus the direct check for
/// the loops that mutual arcs force (the closure would hide their
/// absence).  Agrees with is_transitive_digraph on every input and serves
/// as a cross-check.
bool is_transitive_via_disimplicial(const Digraph& d);

}  // namespace disim
