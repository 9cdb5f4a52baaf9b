#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "disim/digraph.hpp"

namespace disim {

enum class Dir : int { out = 0, in = 1 };

constexpr Dir opposite(Dir d) { return d == Dir::out ? Dir::in : Dir::out; }

/// Dynamic degree-bucketed digraph supporting vertex removal.
///
/// For every live vertex v and direction * the structure keeps the current
/// degree d*(v), an ordered list of nonempty buckets N*(v,i) holding the
/// *-neighbors whose opposite degree equals i (for i < d*(v)), and the
/// overflow set H*(v) of *-neighbors whose opposite degree is at least
/// d*(v).  Each arc is represented by two cross-linked entries, one per
/// endpoint, so an occurrence can be unlinked or moved between containers
/// in O(1) when a degree drops.  Total storage is O(n + m).
///
/// Single-writer: no concurrent access of any kind.
class HDigraph {
public:
    explicit HDigraph(const Digraph& d);

    int vertex_count() const { return static_cast<int>(alive_.size()); }
    bool alive(int v) const { return alive_[v]; }
    int live_count() const { return live_; }
    int live_arc_count() const { return live_arcs_; }

    /// Current d*(v).  Throws on a dead vertex.
    int degree(int v, Dir dir) const;

    /// Removes v and rebalances every affected neighbor structure.
    /// Throws std::invalid_argument on a dead vertex.
    void remove(int v);

    /// All *-neighbors of v with minimum opposite degree, ascending.
    /// Throws when v is dead or N*(v) is empty.
    std::vector<int> min_n(int v, Dir dir) const;

    /// Live arcs with both endpoints in N*(v), sorted.  O(d(v) * h) via
    /// the H sets of the marked neighborhood.
    std::vector<Arc> n_prime(int v, Dir dir);

    /// Live *-neighbors of v, ascending.
    std::vector<int> neighbors(int v, Dir dir) const;

    /// Live arcs of the current graph, sorted.
    std::vector<Arc> live_arcs() const;

    // Scratch-free traversal hooks for the marking algorithms.  f is
    // called once per entry; arc ids are stable per arc and < arc_id_bound.
    template <typename F>
    void for_each_neighbor(int v, Dir dir, F&& f) const {
        const Side& s = side(v, dir);
        for (int i = s.first_bucket; i != -1; i = bucket_next(s, i))
            for (int e = bucket_first(s, i); e != -1; e = ent_[e].next)
                f(ent_[e].nb);
        for (int e = s.h_first; e != -1; e = ent_[e].next) f(ent_[e].nb);
    }

    template <typename F>
    void for_each_h(int v, Dir dir, F&& f) const {
        const Side& s = side(v, dir);
        for (int e = s.h_first; e != -1; e = ent_[e].next)
            f(ent_[e].nb, arc_id(e));
    }

    int arc_id_bound() const { return static_cast<int>(ent_.size()); }

    /// Checks every structural invariant (bucket keys, thresholds, the
    /// bucket/H partition, twin links, degree counts).  Returns false and
    /// fills `why` on the first violation.
    bool validate(std::string* why = nullptr) const;

    /// Bucket-content equality against another structure restricted to
    /// this structure's live vertices (used to compare against a fresh
    /// build on the surviving subgraph).
    bool same_contents(const HDigraph& other, std::string* why = nullptr) const;

    /// Per-vertex bucket listing for debugging.
    std::string dump() const;

private:
    struct Ent {
        int nb;    // the neighbor this occurrence stands for
        int twin;  // entry of the same arc on the other side
        int prev = -1;
        int next = -1;
    };

    // Bucket headers live in flat arrays shared by all sides; a side owns
    // the index range [base, base + init_deg).
    struct Side {
        int deg = 0;       // current d*(v)
        int init_deg = 0;  // bucket indices are < init_deg
        int base = 0;
        int first_bucket = -1;  // ordered nonempty bucket list (by key)
        int last_bucket = -1;
        int h_first = -1;
        int h_last = -1;
    };

    Side& side(int v, Dir d) { return sides_[2 * v + static_cast<int>(d)]; }
    const Side& side(int v, Dir d) const {
        return sides_[2 * v + static_cast<int>(d)];
    }

    int bucket_first(const Side& s, int key) const { return bfirst_[s.base + key]; }
    int bucket_next(const Side& s, int key) const { return bnext_[s.base + key]; }

    int arc_id(int e) const { return std::min(e, ent_[e].twin); }

    void link_entry(Side& s, int key, int e);  // key == -1 means the H set
    void unlink_entry(Side& s, int key, int e);
    void attach_bucket_after(Side& s, int key, int after);
    void detach_bucket(Side& s, int key);
    void merge_tail_bucket_into_h(Side& s, int key);
    void relocate_after_key_drop(Side& s, int e, int new_key);
    bool has_loop_entry(int v) const;

    std::vector<Ent> ent_;
    std::vector<Side> sides_;
    std::vector<int> bfirst_, blast_;  // per bucket slot: entry list ends
    std::vector<int> bprev_, bnext_;   // per bucket slot: nonempty-list links
    std::vector<char> alive_;
    int live_ = 0;
    int live_arcs_ = 0;

    // marking scratch for n_prime
    std::vector<uint32_t> vmark_;
    std::vector<uint32_t> amark_;
    uint32_t epoch_ = 0;
};

}  // namespace disim
