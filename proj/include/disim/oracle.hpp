#pragma once

#include <vector>

#include "disim/digraph.hpp"

namespace disim {
namespace oracle {

// Brute-force reference implementations, deliberately written from the
// bare definitions with none of the library's fast machinery.  They cap
// input sizes and throw std::invalid_argument beyond the cap instead of
// silently grinding.

/// Double loop over N-(head) x N+(tail).
bool naive_is_disimplicial(const Digraph& g, Arc arc);

/// Triple loop over (x, v, y).
std::vector<char> naive_transitive_vertices(const Digraph& d);

std::vector<Arc> naive_disimplicial_arcs(const Digraph& g);

struct Diclique {
    std::vector<int> tails;  // V of the pair V -> W, sorted
    std::vector<int> heads;  // W, sorted

    friend bool operator==(const Diclique&, const Diclique&) = default;
};

/// All maximal dicliques with both sides nonempty, by fixpoint filtering
/// of every tail-side subset.  Requires n <= 20.
std::vector<Diclique> enumerate_maximal_dicliques(const Digraph& g);

/// Every arc must lie in the reduced diclique of some disimplicial arc.
bool naive_is_wdi(const Digraph& g);

/// Every maximal diclique must contain a disimplicial arc.  n <= 20.
bool naive_is_di(const Digraph& g);

/// Every nonempty subset bounded from above must have a supremum; the
/// input must be an order graph.  n <= 16.
bool naive_is_dedekind(const Digraph& d);

}  // namespace oracle
}  // namespace disim
