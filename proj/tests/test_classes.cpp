#include <doctest.h>

#include <algorithm>

#include "disim/classes.hpp"
#include "disim/generate.hpp"
#include "disim/oracle.hpp"
#include "disim/transforms.hpp"
#include "helpers.hpp"

using namespace disim;

TEST_SUITE_BEGIN("classes");

TEST_CASE("order graph recognition") {
    CHECK(is_order_graph(tst::diamond()));
    CHECK_FALSE(is_order_graph(build_digraph(2, std::vector<Arc>{{0, 1}, {1, 0}})));
    // reflexive a->b->c without the chord a->c
    Digraph nt = reflexive_closure(build_digraph(3, std::vector<Arc>{{0, 1}, {1, 2}}));
    CHECK_FALSE(is_order_graph(nt));
}

TEST_CASE("bounds") {
    BoundSets b = bounds(tst::diamond(), {1, 2});
    CHECK(b.upper == std::vector<int>{3});
    CHECK(b.supremum == 3);
    CHECK(b.lower == std::vector<int>{0});
    CHECK(b.infimum == 0);

    BoundSets s = bounds(tst::diamond(), {1});
    CHECK(s.supremum == 1);
    CHECK(s.infimum == 1);

    BoundSets t = bounds(tst::two_tops(), {0, 1});
    CHECK(t.upper == std::vector<int>{2, 3});
    CHECK_FALSE(t.supremum.has_value());

    CHECK_THROWS_AS(bounds(tst::diamond(), {}), std::invalid_argument);
}

TEST_CASE("dedekind recognition") {
    CHECK(is_dedekind(tst::diamond()));
    CHECK_FALSE(is_dedekind(tst::two_tops()));
    CHECK(is_dedekind(tst::chain(5)));
    CHECK(oracle::naive_is_dedekind(tst::chain(5)));
    CHECK_THROWS_AS(is_dedekind(tst::fork()), std::invalid_argument);
}

TEST_CASE("dedekind agrees with the subset oracle") {
    SUBCASE("exhaustive order graphs on up to 4 elements") {
        for (int n = 1; n <= 4; ++n)
            for (const Digraph& d : tst::all_order_graphs(n))
                CHECK(is_dedekind(d) == oracle::naive_is_dedekind(d));
    }
    SUBCASE("random posets") {
        Rng rng(101);
        for (int i = 0; i < 400; ++i) {
            Digraph d = random_order_graph(rng, 2 + static_cast<int>(rng() % 9), 14);
            CHECK(is_dedekind(d) == oracle::naive_is_dedekind(d));
            CHECK(dedekind_via_split_check(d) == is_dedekind(d));
        }
    }
}

TEST_CASE("wdi recognition on the named examples") {
    CHECK(is_wdi(tst::k22()));
    CHECK(is_wdi(tst::fork()));
    CHECK_FALSE(is_wdi(tst::c6()));
}

TEST_CASE("di recognition on the named examples") {
    CHECK(is_di(tst::k22()));
    CHECK_FALSE(is_di(tst::c6()));
    // the fork's two maximal dicliques {a}->{b,d} and {a,c}->{b} both
    // contain a disimplicial arc, so the oracle settles the value as true
    CHECK(oracle::naive_is_di(tst::fork()));
    CHECK(is_di(tst::fork()));
}

TEST_CASE("wdi/di agree with the oracles exhaustively on 2+2 ST graphs") {
    for (std::uint32_t mask = 0; mask < (1u << 4); ++mask) {
        Digraph g = tst::st_from_mask(2, 2, mask);
        CHECK(is_wdi(g) == oracle::naive_is_wdi(g));
        CHECK(is_di(g) == oracle::naive_is_di(g));
    }
}

TEST_CASE("wdi/di agree with the oracles on random graphs") {
    Rng rng(103);
    for (int i = 0; i < 400; ++i) {
        Digraph g = random_st_graph(rng, 1 + static_cast<int>(rng() % 4),
                                    1 + static_cast<int>(rng() % 4), 10);
        CHECK(is_wdi(g) == oracle::naive_is_wdi(g));
        CHECK(is_di(g) == oracle::naive_is_di(g));
    }
    for (int i = 0; i < 200; ++i) {
        Digraph g = random_digraph(rng, 6, 12);
        CHECK(is_wdi(g) == oracle::naive_is_wdi(g));
        CHECK(is_di(g) == oracle::naive_is_di(g));
    }
}

TEST_CASE("maximal dicliques of a twin-free ST graph appear as bounds in the join") {
    Rng rng(107);
    int checked = 0;
    for (int i = 0; i < 300; ++i) {
        Digraph g = random_st_graph(rng, 3, 3, 7);
        if (twin_partition(g).block_count() != g.vertex_count()) continue;
        ++checked;
        auto [d, map] = join_thin(g);
        for (const auto& mc : oracle::enumerate_maximal_dicliques(g)) {
            std::vector<int> lower, upper;
            for (int v : mc.tails) lower.push_back(map.join_vertex_of[v]);
            for (int w : mc.heads) upper.push_back(map.join_vertex_of[w]);
            std::sort(lower.begin(), lower.end());
            std::sort(upper.begin(), upper.end());
            BoundSets b = bounds(d, lower);
            CHECK(b.upper == upper);
            BoundSets b2 = bounds(d, upper);
            CHECK(b2.lower == lower);
        }
    }
    CHECK(checked > 30);
}

TEST_CASE("classify flags and implications") {
    ClassReport k = classify(tst::k22());
    CHECK(k.is_st);
    CHECK_FALSE(k.is_twin_free);
    CHECK(k.is_wdi);
    CHECK(k.is_di);

    ClassReport d = classify(tst::diamond());
    CHECK(d.is_order);
    CHECK(d.is_dedekind);

    ClassReport t = classify(tst::two_tops());
    CHECK(t.is_order);
    CHECK_FALSE(t.is_dedekind);
    REQUIRE(t.witness.has_value());
    CHECK(t.witness->kind == "pair_without_supremum");

    ClassReport c = classify(tst::c6());
    CHECK_FALSE(c.is_wdi);
    CHECK_FALSE(c.is_di);
    REQUIRE(c.witness.has_value());

    Rng rng(109);
    for (int i = 0; i < 150; ++i) {
        Digraph g = random_digraph(rng, 8, 18);
        ClassReport r = classify(g);
        if (r.is_di) CHECK(r.is_wdi);
        if (r.is_dedekind) CHECK(r.is_order);
        CHECK(r.is_wdi == is_wdi(g));
        CHECK(r.is_di == is_di(g));
        CHECK(r.is_order == is_order_graph(g));
    }
}

TEST_CASE("class report json keeps a stable field order") {
    CHECK(class_report_json(classify(tst::diamond()), -1) ==
          R"({"st":false,"twin_free":true,"reflexive":true,"oriented":true,)"
          R"("transitive":true,"order":true,"dedekind":true,"wdi":true,"di":true})");
}

TEST_SUITE_END();
