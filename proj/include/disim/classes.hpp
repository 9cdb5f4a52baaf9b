#pragma once

#include <optional>
#include <string>
#include <vector>

#include "disim/digraph.hpp"

namespace disim {

/// Upper/lower bound sets of a vertex set in a digraph, plus the supremum
/// and infimum when they exist.  On oriented graphs these are unique;
/// otherwise the smallest id is reported.
struct BoundSets {
    std::vector<int> upper;  // mu(V), sorted
    std::vector<int> lower;  // lambda(V), sorted
    std::optional<int> supremum;
    std::optional<int> infimum;
};

/// Throws std::invalid_argument when the set is empty or out of range.
BoundSets bounds(const Digraph& d, const std::vector<int>& vertices);

/// Reflexive, oriented and transitive; equivalently a finite poset.
bool is_order_graph(const Digraph& d);

/// Every nonempty pair bounded from above has a supremum, decided by the
/// degree-counting test: some upper bound u of {v,w} has out-degree equal
/// to |mu({v,w})|.  Requires an order graph (throws otherwise).
bool is_dedekind(const Digraph& d);

/// Weakly diclique irreducible: every arc lies in a maximal diclique that
/// contains a disimplicial arc.  Decided on the twin-free ST normalization
/// through the thin join: the joined digraph must be transitive and every
/// arc of it must have a midpoint.
bool is_wdi(const Digraph& g);

/// Diclique irreducible: every maximal diclique contains a disimplicial
/// arc.  Decided as: thin arcs of the normalization form a perfect
/// matching and the thin join is a dedekind order graph.
bool is_di(const Digraph& g);

/// Cross-validation entry point: an order graph is dedekind iff its split
/// is DI.  Throws std::invalid_argument when d is not an order graph.
bool dedekind_via_split_check(const Digraph& d);

struct Witness {
    std::string kind;
    std::vector<std::string> items;
};

struct ClassReport {
    bool is_st = false;
    bool is_twin_free = false;
    bool is_reflexive = false;
    bool is_oriented = false;
    bool is_transitive = false;
    bool is_order = false;
    bool is_dedekind = false;
    bool is_wdi = false;
    bool is_di = false;
    std::optional<Witness> witness;
};

/// All class flags for one graph, with a counterexample witness for the
/// first failed recognition where one is cheap to surface.
ClassReport classify(const Digraph& g);

/// JSON rendering with a stable field order.
std::string class_report_json(const ClassReport& report, int indent = 2);

}  // namespace disim
