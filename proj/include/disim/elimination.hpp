#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "disim/digraph.hpp"
#include "disim/hdigraph.hpp"

namespace disim {

/// An elimination scheme: steps[i] is disimplicial in the graph with the
/// endpoints of all earlier steps removed.  The steps form a matching.
/// `residual` keeps the original vertex count with removed vertices left
/// isolated; `perfect` means the residual has no arcs at all.
struct EliminationScheme {
    std::vector<Arc> steps;
    bool perfect = false;
    Digraph residual;

    std::vector<int> removed_vertices() const;
};

/// Maximal disimplicial elimination: a first round takes a greedy maximal
/// matching of all disimplicial arcs; later rounds only probe the frontier
/// of the previous round's removals through minimum-degree candidates.
/// The residual contains no disimplicial arc.
EliminationScheme maximal_elimination(const Digraph& g);

/// Maximal elimination restricted to arcs of m, computed as a maximal
/// transitive elimination on join(g, m) and pulled back.  No arc of
/// m outside the scheme is disimplicial in the residual.
/// Throws std::invalid_argument when m is not a matching inside E(g).
EliminationScheme matched_elimination(const Digraph& g, const Matching& m);

/// Incremental maximal transitive elimination restricted to an eligible
/// vertex set.  Maintains, for every live vertex, the count t(v) of arcs
/// leaving N-(v) and entering N+(v); v is transitive iff t(v) equals
/// in_deg(v)*out_deg(v).  Each step removes the smallest eligible
/// transitive vertex and updates the counters through the neighborhood
/// arc lists of the removed vertex.
class TransitiveEliminator {
public:
    TransitiveEliminator(const Digraph& d, const std::vector<int>& eligible);

    /// Removes the next vertex; returns -1 when no eligible vertex is
    /// transitive in the current graph.
    int step();

    /// Pops the smallest eligible transitive vertex without removing it,
    /// so a caller can veto the removal; -1 when none is left.
    int pop_candidate();

    /// Commits the removal of a live vertex and updates the counters.
    void remove(int v);

    /// Puts a previously popped, still live vertex back in the queue.
    void requeue(int v);

    const std::vector<std::int64_t>& counters() const { return t_; }
    const HDigraph& graph() const { return h_; }

private:
    HDigraph h_;
    std::vector<std::int64_t> t_;
    std::vector<char> eligible_;
    std::set<int> queue_;
};

/// Maximal sequence v1, v2, ... of members of `eligible` such that each
/// v_i is transitive once v1..v_{i-1} are removed.
std::vector<int> transitive_v_elimination(const Digraph& d,
                                          const std::vector<int>& eligible);

/// Decision for ST graphs: a maximal scheme of a perfect elimination ST
/// graph is perfect, so one maximal run decides.
/// Throws std::invalid_argument when g is not an ST graph.
std::pair<bool, EliminationScheme> is_perfect_elimination_st(const Digraph& g);

struct VerifyResult {
    bool ok = true;
    std::string diagnosis;

    explicit operator bool() const { return ok; }
};

/// Replays a scheme against the brute-force arc test: matching property,
/// stepwise disimpliciality, residual and perfect flag, and maximality of
/// the residual (restricted to m when given).
VerifyResult verify_scheme(const Digraph& g, const EliminationScheme& s,
                           const std::optional<Matching>& m = std::nullopt);

}  // namespace disim
