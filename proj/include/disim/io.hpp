#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "disim/digraph.hpp"
#include "disim/elimination.hpp"

namespace disim {

/// Thrown on malformed input files.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Edge-list text: one arc per line "u v", whitespace separated, `#`
/// starts a comment, blank lines ignored.  Tokens are external labels,
/// mapped to dense ids in first-appearance order.
Digraph read_edge_list(std::istream& is);

/// Bipartite edge list: same syntax, one edge "u v" per line orientated
/// left -> right.  Left and right labels form disjoint namespaces; a token
/// appearing on both sides is rejected so output labels stay unambiguous.
Digraph read_bipartite_edge_list(std::istream& is);

void write_edge_list(std::ostream& os, const Digraph& d);

/// Resolves "u v" lines against the labels of an existing graph.
Matching read_matching(std::istream& is, const Digraph& g);

/// Matrix Market `coordinate` reader producing the row/column digraph:
/// one vertex r_i per row, c_j per column, an arc r_i -> c_j per
/// structural nonzero.  pattern, real and integer fields are accepted;
/// stored explicit zeros are dropped; symmetric variants are expanded.
/// Labels are "r<i>" and "c<j>", 1-based.
Digraph read_matrix_market(std::istream& is, int* rows = nullptr,
                           int* cols = nullptr);

/// Scheme text form: `# perfect: true|false` header plus one step per
/// line, labels preserved.
void write_scheme(std::ostream& os, const Digraph& g, const EliminationScheme& s);

/// JSON alternative with labels: perfect flag, steps, residual arc count.
std::string scheme_json(const Digraph& g, const EliminationScheme& s,
                        int indent = 2);

}  // namespace disim
