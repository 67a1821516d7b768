#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acr/bisim.hpp"
#include "acr/generate.hpp"
#include "acr/verify.hpp"

using namespace acr;

namespace {

FeaturedGraph self_loop() { return FeaturedGraph(Mode::Directed, 1, 0, {{0, 0}}); }
FeaturedGraph two_cycle() { return FeaturedGraph(Mode::Directed, 2, 0, {{0, 1}, {1, 0}}); }

}  // namespace

TEST_CASE("graded type refinement") {
    FeaturedGraph order3 = make_strict_linear_order(3);

    SUBCASE("isomorphic pointed graphs share classes at every round") {
        FeaturedGraph relabeled(Mode::Directed, 3, 0, {{2, 0}, {2, 1}, {0, 1}});
        TypeAssignment t = graded_types({&order3, &relabeled}, 3, 2);
        for (int k = 0; k <= 3; ++k) {
            CHECK(t.cls(k, 0, 0) == t.cls(k, 1, 2));
            CHECK(t.cls(k, 0, 1) == t.cls(k, 1, 0));
            CHECK(t.cls(k, 0, 2) == t.cls(k, 1, 1));
        }
    }

    SUBCASE("a loop and a 2-cycle are indistinguishable") {
        FeaturedGraph a = self_loop(), b = two_cycle();
        for (int L = 0; L <= 4; ++L) {
            TypeAssignment t = graded_types({&a, &b}, L, 1);
            CHECK(t.final_cls(0, 0) == t.final_cls(1, 0));
            CHECK(t.final_cls(0, 0) == t.final_cls(1, 1));
        }
    }

    SUBCASE("successor counts split classes at round 1") {
        TypeAssignment t = graded_types({&order3}, 1, 1);
        CHECK(t.cls(0, 0, 0) == t.cls(0, 0, 2));  // featureless round 0
        CHECK(t.cls(1, 0, 0) != t.cls(1, 0, 2));  // 0 has a successor, the sink does not
        CHECK(t.cls(1, 0, 0) == t.cls(1, 0, 1));  // both have one at c=1
    }

    SUBCASE("each round refines the previous one") {
        for (int i = 0; i < 30; ++i) {
            RandomGraphOptions go;
            go.n = 3 + i % 6;
            go.d = i % 2;
            go.edge_prob = 0.35;
            go.seed = 50 + i;
            FeaturedGraph g = random_graph(go);
            TypeAssignment t = graded_types({&g}, 3, 1 + i % 2);
            for (int k = 0; k < 3; ++k)
                for (int u = 0; u < g.n(); ++u)
                    for (int w = 0; w < g.n(); ++w)
                        if (t.cls(k + 1, 0, u) == t.cls(k + 1, 0, w))
                            CHECK(t.cls(k, 0, u) == t.cls(k, 0, w));
        }
    }

    CHECK_THROWS(graded_types({}, 1, 1));
    FeaturedGraph undirected(Mode::Undirected, 1, 0);
    FeaturedGraph directed(Mode::Directed, 1, 0);
    CHECK_THROWS(graded_types({&undirected, &directed}, 1, 1));
}

TEST_CASE("global modes") {
    FeaturedGraph a = self_loop(), b = two_cycle();
    CHECK(bisimilar(a, 0, b, 0, 2, 1));
    CHECK_FALSE(bisimilar(a, 0, b, 0, 2, 1, GlobalMode::exact()));  // class counts 1 vs 2
    CHECK(bisimilar(a, 0, b, 0, 2, 1, GlobalMode::capped(1)));
    CHECK_FALSE(bisimilar(a, 0, b, 0, 2, 1, GlobalMode::capped(2)));
    CHECK(bisimilar(a, 0, a, 0, 3, 2, GlobalMode::exact()));  // any graph vs itself
    CHECK_THROWS(GlobalMode::capped(0));
}

TEST_CASE("mode monotonicity on random pairs") {
    for (int i = 0; i < 200; ++i) {
        RandomGraphOptions go;
        go.n = 2 + i % 5;
        go.d = i % 2;
        go.edge_prob = 0.3;
        go.seed = 100 + i;
        FeaturedGraph g1 = random_graph(go);
        go.seed = 200 + i;
        FeaturedGraph g2 = random_graph(go);
        int v1 = i % g1.n(), v2 = (i / 2) % g2.n();
        int L = 1 + i % 2, c = 1 + i % 2;

        if (bisimilar(g1, v1, g2, v2, L + 1, c)) CHECK(bisimilar(g1, v1, g2, v2, L, c));
        if (bisimilar(g1, v1, g2, v2, L, c + 1)) CHECK(bisimilar(g1, v1, g2, v2, L, c));
        if (bisimilar(g1, v1, g2, v2, L, c, GlobalMode::exact()))
            for (int q : {1, 2, 5}) CHECK(bisimilar(g1, v1, g2, v2, L, c, GlobalMode::capped(q)));
    }
}

TEST_CASE("two-pebble counting equivalence") {
    FeaturedGraph g(Mode::Undirected, 3, 1, {{0, 1}}, {{1}, {1}, {0}});

    SUBCASE("isomorphic graphs are equivalent at all parameters") {
        FeaturedGraph h(Mode::Undirected, 3, 1, {{1, 2}}, {{0}, {1}, {1}});
        for (int L = 0; L <= 3; ++L)
            for (int c = 1; c <= 2; ++c) CHECK(c2_equivalent(g, 2, h, 0, L, c));
    }

    SUBCASE("an extra vertex of a fresh feature separates") {
        FeaturedGraph g2(Mode::Undirected, 3, 2, {{0, 1}}, {{1, 0}, {1, 0}, {0, 0}});
        FeaturedGraph h2(Mode::Undirected, 4, 2, {{0, 1}},
                         {{1, 0}, {1, 0}, {0, 0}, {0, 1}});  // (0,1) occurs nowhere in g2
        CHECK_FALSE(c2_equivalent(g2, 0, h2, 0, 1, 1));
        // a mere extra copy of an existing class is invisible at c=1
        FeaturedGraph h3(Mode::Undirected, 4, 2, {{0, 1}},
                         {{1, 0}, {1, 0}, {0, 0}, {0, 0}});
        CHECK(c2_equivalent(g2, 0, h3, 0, 1, 1));
    }

    CHECK_THROWS(c2_equivalent(g, 0, FeaturedGraph(Mode::Directed, 3, 1), 0, 1, 1));
}

TEST_CASE("EF games") {
    FeaturedGraph one(Mode::Directed, 1, 0);
    FeaturedGraph two(Mode::Directed, 2, 0);
    CHECK(ef_equivalent(one, {}, two, {}, 1));
    CHECK_FALSE(ef_equivalent(one, {}, two, {}, 2));  // spoiler pebbles two distinct vertices

    FeaturedGraph order3 = make_strict_linear_order(3);
    FeaturedGraph cycle3(Mode::Directed, 3, 0, {{0, 1}, {1, 2}, {2, 0}});
    CHECK_FALSE(ef_equivalent(order3, {}, cycle3, {}, 2));
    CHECK(ef_equivalent(order3, {}, cycle3, {}, 1));  // one pebble cannot tell

    FeaturedGraph relabeled(Mode::Directed, 3, 0, {{2, 0}, {2, 1}, {0, 1}});
    for (int q = 0; q <= 3; ++q) CHECK(ef_equivalent(order3, {}, relabeled, {}, q));

    CHECK(ef_equivalent(order3, {0, 1}, relabeled, {2, 0}, 1));
    CHECK_FALSE(ef_equivalent(order3, {0}, relabeled, {1}, 1));

    CHECK_THROWS(ef_equivalent(make_strict_linear_order(11), {}, make_strict_linear_order(11), {}, 1));
    CHECK_THROWS(ef_equivalent(one, {}, two, {}, 4));
    CHECK_THROWS(ef_equivalent(one, {0}, two, {}, 1));
}

TEST_CASE("canonical enumeration") {
    FeaturedGraph order3 = make_strict_linear_order(3);
    SUBCASE("all-distinct types get value 1") {
        auto num = canonical_enumeration(order3, 0, 2, 1);
        CHECK(num == std::vector<int>{1, 1, 1});
    }

    SUBCASE("the pointed vertex leads its class") {
        FeaturedGraph edgeless(Mode::Directed, 3, 0);
        auto num = canonical_enumeration(edgeless, 1, 1, 1);
        CHECK(num[1] == 1);
        std::vector<int> sorted = num;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<int>{1, 2, 3});
        CHECK(num == canonical_enumeration(edgeless, 1, 1, 1));  // deterministic
    }
}

TEST_CASE("refinement matches the games exhaustively for n <= 2") {
    std::vector<FeaturedGraph> all;
    for (int n = 1; n <= 2; ++n) {
        DigraphEnumerator en(n, 0);
        for (std::uint64_t i = 0; i < en.size(); ++i) all.push_back(en.at(i));
    }
    for (auto& g1 : all)
        for (auto& g2 : all)
            for (int L = 1; L <= 2; ++L)
                for (int c = 1; c <= 2; ++c) {
                    TypeAssignment t = graded_types({&g1, &g2}, L, c);
                    C2Refinement r = c2_refine({&g1, &g2}, L, c);
                    for (int u1 = 0; u1 < g1.n(); ++u1)
                        for (int u2 = 0; u2 < g2.n(); ++u2) {
                            REQUIRE((t.final_cls(0, u1) == t.final_cls(1, u2)) ==
                                    oracle_graded_game(g1, u1, g2, u2, L, c));
                            REQUIRE(r.same_class(0, u1, 1, u2) ==
                                    oracle_c2_game(g1, u1, g2, u2, L, c));
                        }
                }
}

TEST_CASE("refinement matches the recursive games on small pairs") {
    for (int i = 0; i < 40; ++i) {
        RandomGraphOptions go;
        go.n = 2 + i % 4;
        go.d = i % 2;
        go.edge_prob = 0.2 + 0.15 * (i % 4);
        go.mode = i % 3 == 2 ? Mode::Undirected : Mode::Directed;
        go.seed = 900 + 2 * i;
        FeaturedGraph g1 = random_graph(go);
        go.seed = 901 + 2 * i;
        FeaturedGraph g2 = random_graph(go);

        for (int L = 1; L <= 2; ++L)
            for (int c = 1; c <= 2; ++c) {
                TypeAssignment t = graded_types({&g1, &g2}, L, c);
                C2Refinement r = c2_refine({&g1, &g2}, L, c);
                for (int u1 = 0; u1 < g1.n(); ++u1)
                    for (int u2 = 0; u2 < g2.n(); ++u2) {
                        REQUIRE((t.final_cls(0, u1) == t.final_cls(1, u2)) ==
                                oracle_graded_game(g1, u1, g2, u2, L, c));
                        REQUIRE(r.same_class(0, u1, 1, u2) == oracle_c2_game(g1, u1, g2, u2, L, c));
                    }
            }
    }
}
