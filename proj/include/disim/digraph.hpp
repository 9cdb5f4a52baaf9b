#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace disim {

/// An ordered pair of vertex ids.  tail == head denotes a loop.
struct Arc {
    int tail = 0;
    int head = 0;

    friend bool operator==(const Arc&, const Arc&) = default;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Immutable digraph over dense vertex ids 0..n-1.  Loops are allowed,
/// parallel arcs are not.  Adjacency lists are kept sorted so membership
/// tests are O(log d) and iteration order is deterministic.  Immutable
/// after construction, so any number of threads may read concurrently.
class Digraph {
public:
    Digraph() = default;

    int vertex_count() const { return n_; }
    int arc_count() const { return m_; }

    std::span<const int> out(int v) const {
        return {out_flat_.data() + out_off_[v],
                static_cast<std::size_t>(out_off_[v + 1] - out_off_[v])};
    }
    std::span<const int> in(int v) const {
        return {in_flat_.data() + in_off_[v],
                static_cast<std::size_t>(in_off_[v + 1] - in_off_[v])};
    }

    int out_deg(int v) const { return out_off_[v + 1] - out_off_[v]; }
    int in_deg(int v) const { return in_off_[v + 1] - in_off_[v]; }
    /// |N+(v) ∪ N-(v)|; a loop with no other neighbor gives degree 1.
    int deg(int v) const { return deg_[v]; }

    bool has_arc(int u, int v) const;
    bool has_loop(int v) const { return has_arc(v, v); }

    /// All arcs sorted by (tail, head).
    std::vector<Arc> arcs() const;

    bool has_labels() const { return !labels_.empty(); }
    /// External label of v; falls back to the decimal id when unlabeled.
    std::string label(int v) const;
    const std::vector<std::string>& labels() const { return labels_; }

    friend Digraph build_digraph(int n, std::span<const Arc> arcs,
                                 std::vector<std::string> labels);

private:
    int n_ = 0;
    int m_ = 0;
    // CSR adjacency, sorted within each vertex segment
    std::vector<int> out_flat_, in_flat_;
    std::vector<int> out_off_, in_off_;  // n+1 offsets
    std::vector<int> deg_;
    std::vector<std::string> labels_;
};

/// Builds a digraph from an arc list.  Arcs are deduplicated; ids must be
/// in range and labels, when given, must be n pairwise distinct strings.
/// Throws std::invalid_argument otherwise.
Digraph build_digraph(int n, std::span<const Arc> arcs,
                      std::vector<std::string> labels = {});

/// Adds every missing loop.
Digraph reflexive_closure(const Digraph& d);

/// True iff every vertex is a source or a sink.  A loop makes its vertex
/// neither, so any loop disqualifies the graph.
bool is_st_graph(const Digraph& d);

struct GraphStats {
    int n = 0;
    int m = 0;
    int max_degree = 0;
    int h_index = 0;  // largest k with >= k vertices of degree >= k
};

GraphStats stats(const Digraph& d);

/// A set of pairwise independent arcs.  A loop occupies its single
/// endpoint, so {v->v, v->w} is not a matching while {v->v, x->y} is.
struct Matching {
    std::vector<Arc> arcs;
};

bool is_matching(std::span<const Arc> arcs);

/// Partition of V into classes of vertices with identical out- and
/// in-neighborhoods.  repr(v) is the minimum id of v's block.
struct TwinPartition {
    std::vector<int> block;          // vertex -> block id (dense, 0-based)
    std::vector<int> representative; // block id -> min vertex of the block

    int repr(int v) const { return representative[block[v]]; }
    int block_count() const { return static_cast<int>(representative.size()); }
};

TwinPartition twin_partition(const Digraph& g);

/// Thin arcs: arcs v->w where each endpoint is the other's unique
/// strictly-minimum-degree neighbor.  Always a matching; in the 2-cycle
/// corner case where both orientations qualify only the arc from the
/// smaller id is kept.
Matching thin_arcs(const Digraph& g);

}  // namespace disim
