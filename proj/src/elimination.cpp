#include "disim/elimination.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <tuple>

#include "disim/disimplicial.hpp"
#include "disim/hdigraph.hpp"
#include "disim/oracle.hpp"
#include "disim/transforms.hpp"

namespace disim {

std::vector<int> EliminationScheme::removed_vertices() const {
    std::vector<int> r;
    for (const Arc& a : steps) {
        r.push_back(a.tail);
        if (a.head != a.tail) r.push_back(a.head);
    }
    return r;
}

namespace {

Digraph residual_graph(const Digraph& g, const std::vector<char>& removed) {
    std::vector<Arc> arcs;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (removed[v]) continue;
        for (int w : g.out(v))
            if (!removed[w]) arcs.push_back({v, w});
    }
    return build_digraph(g.vertex_count(), arcs, g.labels());
}

// Greedy maximal matching among `arcs`, by (min endpoint, max endpoint,
// tail, head) so the scheme is deterministic.
std::vector<Arc> greedy_matching(std::vector<Arc> arcs, int n) {
    std::sort(arcs.begin(), arcs.end(), [](const Arc& a, const Arc& b) {
        auto ka = std::tuple(std::min(a.tail, a.head), std::max(a.tail, a.head),
                             a.tail, a.head);
        auto kb = std::tuple(std::min(b.tail, b.head), std::max(b.tail, b.head),
                             b.tail, b.head);
        return ka < kb;
    });
    std::vector<char> used(n, 0);
    std::vector<Arc> picked;
    for (const Arc& a : arcs) {
        if (used[a.tail] || used[a.head]) continue;
        used[a.tail] = used[a.head] = 1;
        picked.push_back(a);
    }
    return picked;
}

}  // namespace

EliminationScheme maximal_elimination(const Digraph& g) {
    const int n = g.vertex_count();
    EliminationScheme scheme;
    std::vector<char> removed(n, 0);

    // round 1: a maximal matching of all disimplicial arcs
    std::vector<Arc> round = greedy_matching(all_disimplicial_arcs(g), n);

    DisimplicialEngine engine(g);
    HDigraph& h = engine.hdigraph();

    std::vector<char> in_frontier_out(n, 0), in_frontier_in(n, 0);
    while (!round.empty()) {
        std::vector<int> frontier_out, frontier_in;
        for (const Arc& a : round) {
            scheme.steps.push_back(a);
            for (int y : {a.tail, a.head}) {
                if (removed[y]) continue;  // loop step removes one vertex
                removed[y] = 1;
                // vertices that lose an out-/in-neighbor form the next frontier
                for (int x : h.neighbors(y, Dir::in))
                    if (!in_frontier_out[x]) {
                        in_frontier_out[x] = 1;
                        frontier_out.push_back(x);
                    }
                for (int x : h.neighbors(y, Dir::out))
                    if (!in_frontier_in[x]) {
                        in_frontier_in[x] = 1;
                        frontier_in.push_back(x);
                    }
                h.remove(y);
            }
        }
        for (int x : frontier_out) in_frontier_out[x] = 0;
        for (int x : frontier_in) in_frontier_in[x] = 0;

        std::sort(frontier_out.begin(), frontier_out.end());
        std::sort(frontier_in.begin(), frontier_in.end());
        round.clear();
        std::vector<char> used(n, 0);

        auto probe = [&](int v, Dir dir) {
            if (removed[v] || used[v]) return;
            if (h.degree(v, dir) == 0) return;
            std::vector<int> cands = h.min_n(v, dir);
            int probe_to = cands.front();
            bool ok = dir == Dir::out ? engine.arc_disimplicial(v, probe_to)
                                      : engine.arc_disimplicial(probe_to, v);
            if (!ok) return;
            for (int w : cands) {
                if (used[w] || (w != v && removed[w])) continue;
                used[v] = used[w] = 1;
                round.push_back(dir == Dir::out ? Arc{v, w} : Arc{w, v});
                return;
            }
        };
        for (int v : frontier_out) probe(v, Dir::out);
        for (int v : frontier_in) probe(v, Dir::in);
    }

    scheme.residual = residual_graph(g, removed);
    scheme.perfect = scheme.residual.arc_count() == 0;
    return scheme;
}

TransitiveEliminator::TransitiveEliminator(const Digraph& d,
                                           const std::vector<int>& eligible)
    : h_(d), eligible_(d.vertex_count(), 0) {
    for (int v : eligible)
        if (v < 0 || v >= d.vertex_count())
            throw std::invalid_argument("transitive elimination: bad vertex");
    for (int v : eligible) eligible_[v] = 1;
    TransitiveReport rep = transitive_vertices(d);
    t_ = std::move(rep.t);
    for (int v = 0; v < d.vertex_count(); ++v)
        if (eligible_[v] && rep.transitive[v]) queue_.insert(v);
}

int TransitiveEliminator::pop_candidate() {
    if (queue_.empty()) return -1;
    const int v = *queue_.begin();
    queue_.erase(queue_.begin());
    return v;
}

void TransitiveEliminator::requeue(int v) {
    if (h_.alive(v)) queue_.insert(v);
}

void TransitiveEliminator::remove(int v) {
    // arcs inside N-(v) lose the pair (tail, v) from the head's count;
    // arcs inside N+(v) lose the pair (v, head) from the tail's count
    for (const Arc& a : h_.n_prime(v, Dir::in))
        if (a.head != v) --t_[a.head];
    for (const Arc& a : h_.n_prime(v, Dir::out))
        if (a.tail != v) --t_[a.tail];
    std::vector<int> outs = h_.neighbors(v, Dir::out);
    std::vector<int> ins = h_.neighbors(v, Dir::in);
    if (std::binary_search(outs.begin(), outs.end(), v)) {
        // the pair (v, v) was discounted by both passes for mutual
        // neighbors; give the double-counted unit back
        for (int w : outs)
            if (w != v && std::binary_search(ins.begin(), ins.end(), w)) ++t_[w];
    }
    h_.remove(v);
    queue_.erase(v);
    // transitivity can only be gained, and only by neighbors of v
    auto retest = [&](int w) {
        if (w == v || !eligible_[w]) return;
        if (t_[w] == static_cast<std::int64_t>(h_.degree(w, Dir::in)) *
                         h_.degree(w, Dir::out))
            queue_.insert(w);
    };
    for (int w : outs) retest(w);
    for (int w : ins) retest(w);
}

int TransitiveEliminator::step() {
    int v = pop_candidate();
    if (v != -1) remove(v);
    return v;
}

std::vector<int> transitive_v_elimination(const Digraph& d,
                                          const std::vector<int>& eligible) {
    TransitiveEliminator eliminator(d, eligible);
    std::vector<int> order;
    for (int v = eliminator.step(); v != -1; v = eliminator.step())
        order.push_back(v);
    return order;
}

EliminationScheme matched_elimination(const Digraph& g, const Matching& m) {
    auto [d, jmap] = join(g, m);  // validates m

    std::vector<int> eligible;
    for (int v = 0; v < d.vertex_count(); ++v)
        if (jmap.join_origin[v].matched) eligible.push_back(v);

    // The transitive elimination on the join drives the search: a
    // disimplicial matched arc always has a transitive join vertex.  The
    // converse can fail off the source-sink case (a matched head keeps its
    // out-arcs invisible to the join), so each candidate is confirmed
    // against the graph itself before its endpoints are removed; rejected
    // candidates are parked and retried when a nearby removal can change
    // their status.
    TransitiveEliminator elim(d, eligible);
    DisimplicialEngine engine(g);
    HDigraph& hg = engine.hdigraph();

    std::vector<std::vector<int>> deferred_at(g.vertex_count());
    std::vector<char> is_deferred(d.vertex_count(), 0);

    EliminationScheme scheme;
    std::vector<char> removed(g.vertex_count(), 0);
    for (int jv = elim.pop_candidate(); jv != -1; jv = elim.pop_candidate()) {
        const auto& o = jmap.join_origin[jv];
        if (!engine.arc_disimplicial(o.tail, o.head)) {
            if (!is_deferred[jv]) {
                is_deferred[jv] = 1;
                deferred_at[o.tail].push_back(jv);
                if (o.head != o.tail) deferred_at[o.head].push_back(jv);
            }
            continue;
        }
        scheme.steps.push_back({o.tail, o.head});
        is_deferred[jv] = 0;
        // disimpliciality of a parked arc p->q can only flip when a member
        // of N(p) or N(q) goes away, and any removed z sees p or q among
        // its own neighbors
        std::vector<int> wake;
        for (int z : {o.tail, o.head}) {
            if (removed[z]) continue;
            removed[z] = 1;
            for (Dir dir : {Dir::out, Dir::in})
                for (int u : hg.neighbors(z, dir))
                    for (int jd : deferred_at[u])
                        if (is_deferred[jd]) {
                            is_deferred[jd] = 0;
                            wake.push_back(jd);
                        }
        }
        elim.remove(jv);
        hg.remove(o.tail);
        if (o.head != o.tail) hg.remove(o.head);
        for (int jd : wake) elim.requeue(jd);
    }
    scheme.residual = residual_graph(g, removed);
    scheme.perfect = scheme.residual.arc_count() == 0;
    return scheme;
}

std::pair<bool, EliminationScheme> is_perfect_elimination_st(const Digraph& g) {
    if (!is_st_graph(g))
        throw std::invalid_argument(
            "perfect elimination decision requires an ST graph");
    EliminationScheme s = maximal_elimination(g);
    return {s.perfect, std::move(s)};
}

VerifyResult verify_scheme(const Digraph& g, const EliminationScheme& s,
                           const std::optional<Matching>& m) {
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };

    if (!is_matching(s.steps)) return fail("steps are not a matching");
    if (m) {
        std::vector<Arc> allowed = m->arcs;
        std::sort(allowed.begin(), allowed.end());
        for (const Arc& a : s.steps)
            if (!std::binary_search(allowed.begin(), allowed.end(), a))
                return fail("step outside the input matching");
    }

    std::vector<char> removed(g.vertex_count(), 0);
    Digraph cur = g;
    for (size_t i = 0; i < s.steps.size(); ++i) {
        const Arc& a = s.steps[i];
        if (removed[a.tail] || removed[a.head])
            return fail("step endpoint already removed");
        if (!cur.has_arc(a.tail, a.head))
            return fail("step arc missing at its turn");
        if (!oracle::naive_is_disimplicial(cur, a))
            return fail("step arc not disimplicial at its turn");
        removed[a.tail] = removed[a.head] = 1;
        cur = residual_graph(g, removed);
    }

    if (cur.arcs() != s.residual.arcs() ||
        cur.vertex_count() != s.residual.vertex_count())
        return fail("recorded residual does not match the replay");
    if (s.perfect != (cur.arc_count() == 0)) return fail("perfect flag wrong");

    if (!m) {
        for (const Arc& a : cur.arcs())
            if (oracle::naive_is_disimplicial(cur, a))
                return fail("residual still has a disimplicial arc");
    } else {
        std::vector<Arc> done = s.steps;
        std::sort(done.begin(), done.end());
        for (const Arc& a : m->arcs) {
            if (std::binary_search(done.begin(), done.end(), a)) continue;
            if (removed[a.tail] || removed[a.head]) continue;  // not in residual
            if (oracle::naive_is_disimplicial(cur, a))
                return fail("matching arc still disimplicial in the residual");
        }
    }
    return {};
}

}  // namespace disim
