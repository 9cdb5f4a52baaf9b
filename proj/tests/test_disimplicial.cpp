#include <doctest.h>

#include <algorithm>

#include "disim/disimplicial.hpp"
#include "disim/generate.hpp"
#include "disim/oracle.hpp"
#include "disim/transforms.hpp"
#include "helpers.hpp"

using namespace disim;

TEST_SUITE_BEGIN("disimplicial");

TEST_CASE("arc test on the named examples") {
    Digraph e = build_digraph(2, std::vector<Arc>{{0, 1}});
    CHECK(is_disimplicial(e, {0, 1}));
    for (const Arc& a : tst::k22().arcs()) CHECK(is_disimplicial(tst::k22(), a));

    Digraph f = tst::fork();
    CHECK_FALSE(is_disimplicial(f, {0, 1}));  // needs c->d
    CHECK(is_disimplicial(f, {0, 3}));
    CHECK(is_disimplicial(f, {2, 1}));
    CHECK_THROWS_AS(is_disimplicial(f, {1, 0}), std::invalid_argument);
}

TEST_CASE("arc test agrees with the oracle") {
    Rng rng(41);
    for (int i = 0; i < 400; ++i) {
        Digraph g = random_digraph(rng, 8, 20);
        DisimplicialEngine engine(g);
        for (const Arc& a : g.arcs())
            CHECK(engine.arc_disimplicial(a.tail, a.head) ==
                  oracle::naive_is_disimplicial(g, a));
    }
}

TEST_CASE("transitive vertices") {
    Digraph path = build_digraph(3, std::vector<Arc>{{0, 1}, {1, 2}});
    TransitiveReport r = transitive_vertices(path);
    CHECK(r.transitive == std::vector<char>{1, 0, 1});
    CHECK(r.t[1] == 0);  // needs a->c

    Digraph chord = build_digraph(3, std::vector<Arc>{{0, 1}, {1, 2}, {0, 2}});
    CHECK(is_transitive_digraph(chord));

    Digraph forkjoin = build_digraph(2, std::vector<Arc>{{0, 0}, {0, 1}, {1, 1}});
    CHECK(transitive_vertices(forkjoin).all_transitive());

    CHECK(is_transitive_digraph(tst::diamond()));
    CHECK_FALSE(is_transitive_digraph(path));
    CHECK(is_transitive_digraph(build_digraph(0, std::vector<Arc>{})));
}

TEST_CASE("transitive vertices agree with the oracle") {
    Rng rng(43);
    for (int i = 0; i < 500; ++i) {
        Digraph d = random_digraph(rng, 9, 24);
        TransitiveReport r = transitive_vertices(d);
        CHECK(r.transitive == oracle::naive_transitive_vertices(d));
    }
}

TEST_CASE("listing on the named examples") {
    CHECK(all_disimplicial_arcs(tst::k22()) == tst::k22().arcs());
    CHECK(all_disimplicial_arcs(tst::fork()) == std::vector<Arc>{{0, 3}, {2, 1}});
    CHECK(all_disimplicial_arcs(tst::c6()).empty());

    // split of the reflexive closure of an order graph: every matching arc
    // out(v) -> in(v) is disimplicial
    Digraph order = tst::diamond();
    auto [s, map] = split(order);
    std::vector<Arc> dis = all_disimplicial_arcs(s);
    for (int v = 0; v < order.vertex_count(); ++v) {
        Arc a{map.split_out[v], map.split_in[v]};
        CHECK(std::find(dis.begin(), dis.end(), a) != dis.end());
    }
}

TEST_CASE("listing equals the oracle exhaustively on 3 vertices") {
    for (std::uint32_t mask = 0; mask < (1u << 9); ++mask) {
        Digraph g = tst::digraph_from_mask(3, mask);
        CHECK(all_disimplicial_arcs(g) == oracle::naive_disimplicial_arcs(g));
    }
}

TEST_CASE("listing equals the oracle on random sparse graphs") {
    Rng rng(47);
    for (int i = 0; i < 500; ++i) {
        Digraph g = random_digraph(rng, 12, 30);
        CHECK(all_disimplicial_arcs(g) == oracle::naive_disimplicial_arcs(g));
    }
}

TEST_CASE("disimplicial arcs transfer through split") {
    Rng rng(53);
    for (int i = 0; i < 200; ++i) {
        Digraph d = random_digraph(rng, 7, 16);
        auto [g, map] = split(d);
        for (const Arc& a : d.arcs())
            CHECK(oracle::naive_is_disimplicial(d, a) ==
                  oracle::naive_is_disimplicial(
                      g, {map.split_out[a.tail], map.split_in[a.head]}));
    }
}

TEST_CASE("disimplicial arcs transfer through twin reduction") {
    Rng rng(59);
    for (int i = 0; i < 200; ++i) {
        Digraph g = random_st_graph(rng, 4, 4, 12);
        auto [r, map] = repr_reduction(g);
        for (const Arc& a : g.arcs())
            CHECK(oracle::naive_is_disimplicial(g, a) ==
                  oracle::naive_is_disimplicial(
                      r, {map.repr_forward[a.tail], map.repr_forward[a.head]}));
    }
}

TEST_CASE("matched ST arc is disimplicial iff its join vertex is transitive") {
    Rng rng(61);
    for (int i = 0; i < 500; ++i) {
        Digraph g = random_st_graph(rng, 5, 5, 24);
        Matching m = random_matching(rng, g);
        auto [d, map] = join(g, m);
        TransitiveReport rep = transitive_vertices(d);
        for (const Arc& a : m.arcs) {
            int jv = map.join_vertex_of_arc(a.tail, a.head);
            REQUIRE(jv != -1);
            CHECK(oracle::naive_is_disimplicial(g, a) ==
                  static_cast<bool>(rep.transitive[jv]));
        }
    }
}

TEST_CASE("a disimplicial matched arc always has a transitive join vertex") {
    // On arbitrary digraphs only this direction survives: a matched head
    // keeps out-arcs the join cannot see, so the converse can fail there.
    Rng rng(62);
    for (int i = 0; i < 500; ++i) {
        Digraph g = random_digraph(rng, 10, 24);
        Matching m = random_matching(rng, g);
        auto [d, map] = join(g, m);
        TransitiveReport rep = transitive_vertices(d);
        for (const Arc& a : m.arcs)
            if (oracle::naive_is_disimplicial(g, a))
                CHECK(rep.transitive[map.join_vertex_of_arc(a.tail, a.head)]);
    }
}

TEST_CASE("transitivity through the disimplicial route") {
    CHECK(is_transitive_via_disimplicial(tst::diamond()));
    CHECK_FALSE(is_transitive_via_disimplicial(
        build_digraph(3, std::vector<Arc>{{0, 1}, {1, 2}})));
    CHECK(is_transitive_via_disimplicial(build_digraph(1, std::vector<Arc>{})));

    // a loopless 2-cycle is not transitive even though its reflexive
    // closure is; the route must see through the closure's added loops
    Digraph two_cycle = build_digraph(2, std::vector<Arc>{{0, 1}, {1, 0}});
    CHECK_FALSE(is_transitive_digraph(two_cycle));
    CHECK_FALSE(is_transitive_via_disimplicial(two_cycle));

    Rng rng(67);
    for (int i = 0; i < 300; ++i) {
        Digraph d = random_digraph(rng, 10, 22);
        CHECK(is_transitive_via_disimplicial(d) == is_transitive_digraph(d));
    }
    for (int i = 0; i < 500; ++i) {
        int n = 2 + static_cast<int>(rng() % 5);
        Digraph d = random_digraph(rng, n, static_cast<int>(rng() % (4 * n)));
        CHECK(is_transitive_via_disimplicial(d) == is_transitive_digraph(d));
    }
}

TEST_SUITE_END();
