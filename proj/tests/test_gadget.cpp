#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acr/compiler.hpp"
#include "acr/gadget.hpp"
#include "acr/generate.hpp"
#include "acr/homcount.hpp"

using namespace acr;

namespace {

FeaturedGraph cycle3() { return FeaturedGraph(Mode::Directed, 3, 0, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("gadgetisation layout") {
    FeaturedGraph tilde = gadgetise(make_strict_linear_order(3));
    CHECK(tilde.n() == 9);
    CHECK(tilde.d() == 2);
    CHECK_FALSE(tilde.directed());
    CHECK(tilde.edge_count() == 9);  // 3 st-edges + 6 identity edges
    CHECK(tilde.feature(0) == FeatureVector{1, 0});  // s_0
    CHECK(tilde.feature(1) == FeatureVector{0, 1});  // t_0
    CHECK(tilde.feature(2) == FeatureVector{0, 0});  // iota_0
    CHECK(tilde.has_edge(0, 4));                     // s_0 - t_1 from edge (0,1)

    FeaturedGraph single = gadgetise(FeaturedGraph(Mode::Directed, 1, 0));
    CHECK(single.n() == 3);
    CHECK(single.edge_count() == 2);

    CHECK_THROWS(gadgetise(FeaturedGraph(Mode::Undirected, 2, 0)));
    CHECK_THROWS(gadgetise(FeaturedGraph(Mode::Directed, 2, 1)));

    SUBCASE("edge count identity on random digraphs") {
        for (int i = 0; i < 100; ++i) {
            RandomGraphOptions opt;
            opt.n = 1 + i % 7;
            opt.edge_prob = 0.12 * (1 + i % 7);
            opt.seed = i;
            FeaturedGraph g = random_graph(opt);
            FeaturedGraph t = gadgetise(g);
            CHECK(t.edge_count() == g.edge_count() + 2 * g.n());
            CHECK(is_gadgetisation(t));
        }
    }
}

TEST_CASE("degadgetisation") {
    CHECK(isomorphic(degadgetise(gadgetise(make_strict_linear_order(4))),
                     make_strict_linear_order(4)));

    SUBCASE("round-trip on random digraphs") {
        for (int i = 0; i < 100; ++i) {
            RandomGraphOptions opt;
            opt.n = 1 + i % 6;
            opt.edge_prob = 0.15 * (1 + i % 6);
            opt.seed = 10000 + i;
            FeaturedGraph g = random_graph(opt);
            REQUIRE(isomorphic(degadgetise(gadgetise(g)), g));
        }
    }

    SUBCASE("non-gadget input names the violated clause") {
        FeaturedGraph tilde = gadgetise(make_strict_linear_order(2));
        auto edges = tilde.edges();
        std::pair<int, int> identity{0, 2};  // s_0 - iota_0
        edges.erase(std::remove(edges.begin(), edges.end(), identity), edges.end());
        CHECK_THROWS_WITH_AS(degadgetise(with_edges(tilde, edges)), doctest::Contains("psi3"),
                             GraphError);
    }
}

TEST_CASE("gadget predicates") {
    FeaturedGraph tilde = gadgetise(make_strict_linear_order(2));
    CHECK(is_gadgetisation(tilde));

    SUBCASE("same-role edge breaks psi2") {
        auto edges = tilde.edges();
        edges.push_back({0, 3});  // s_0 - s_1
        FeaturedGraph bad = with_edges(tilde, edges);
        CHECK_FALSE(is_gadgetisation(bad));
        CHECK_THROWS_WITH_AS(gadget_view(bad), doctest::Contains("psi2"), GraphError);
    }

    SUBCASE("iota with two s-neighbours breaks psi4") {
        auto edges = tilde.edges();
        edges.push_back({2, 3});  // iota_0 - s_1 gives iota_0 two s's, s_1 two iotas
        FeaturedGraph bad = with_edges(tilde, edges);
        CHECK_FALSE(is_gadgetisation(bad));
    }

    SUBCASE("order gadgets of every size up to 50") {
        for (int n : {1, 2, 3, 10, 25, 50})
            CHECK(is_gadget_of_strict_linear_order(gadgetise(make_strict_linear_order(n))));
    }

    CHECK_FALSE(is_gadget_of_strict_linear_order(gadgetise(cycle3())));
    CHECK_FALSE(is_gadget_of_strict_linear_order(c2_counterexample_family(1, 1).h));
}

TEST_CASE("appendix C family") {
    SUBCASE("smallest configuration") {
        FamilyResult fam = c2_counterexample_family(1, 1);
        CHECK(fam.report.n == 2);
        CHECK(fam.g.n() == 15);  // order of size 5, 15 gadget vertices
        CHECK(fam.report.ok());
        CHECK(fam.report.equivalent_pairs == 15);
    }

    SUBCASE("H differs from G in exactly two unordered edges") {
        FamilyResult fam = c2_counterexample_family(1, 2);
        auto eg = fam.g.edges(), eh = fam.h.edges();
        std::vector<std::pair<int, int>> only_g, only_h;
        for (auto& e : eg)
            if (std::find(eh.begin(), eh.end(), e) == eh.end()) only_g.push_back(e);
        for (auto& e : eh)
            if (std::find(eg.begin(), eg.end(), e) == eg.end()) only_h.push_back(e);
        CHECK(only_g.size() == 1);
        CHECK(only_h.size() == 1);
    }

    SUBCASE("all four acceptance configurations are green") {
        for (auto [L, c] : {std::pair{1, 1}, {1, 2}, {2, 1}, {2, 2}}) {
            FamilyResult fam = c2_counterexample_family(L, c);
            CHECK(fam.report.ok());
        }
    }

    CHECK_THROWS(c2_counterexample_family(0, 1));
    CHECK_THROWS(c2_counterexample_family(4, 2));  // L*c cap
}

TEST_CASE("the structural clauses as a GML-exists sentence") {
    // psi1..psi4 written with global counting, evaluated against the direct
    // structural checker and through the formula compiler
    Formula S = prop(1), T = prop(2);
    Formula I = land(lnot(prop(1)), lnot(prop(2)));
    Formula psi1 = lnot(global_exists(1, land(prop(1), prop(2))));
    Formula psi2 = conj({lnot(global_exists(1, land(S, diamond(1, S)))),
                         lnot(global_exists(1, land(T, diamond(1, T)))),
                         lnot(global_exists(1, land(I, diamond(1, I))))});
    Formula one_iota = land(diamond(1, I), lnot(diamond(2, I)));
    Formula psi3 = lnot(global_exists(1, land(lor(S, T), lnot(one_iota))));
    Formula pairing = conj({diamond(1, S), lnot(diamond(2, S)), diamond(1, T),
                            lnot(diamond(2, T))});
    Formula psi4 = lnot(global_exists(1, land(I, lnot(pairing))));
    Formula structure = conj({psi1, psi2, psi3, psi4});
    AcrGnn compiled = compile(structure, 2);

    auto check = [&](const FeaturedGraph& g) {
        bool expect = is_gadgetisation(g);
        REQUIRE(evaluate(structure, g, 0) == expect);
        REQUIRE((run(compiled, g, 0) == 1) == expect);
    };

    SUBCASE("exhaustive over undirected 2-featured graphs on 3 vertices") {
        for (int emask = 0; emask < 64; ++emask)
            for (int fmask = 0; fmask < 64; ++fmask) {
                std::vector<std::pair<int, int>> edges;
                int bit = 0;
                for (int u = 0; u < 3; ++u)
                    for (int v = u; v < 3; ++v, ++bit)
                        if (emask >> bit & 1) edges.push_back({u, v});
                std::vector<FeatureVector> feats(3);
                for (int v = 0; v < 3; ++v)
                    feats[v] = {(std::uint8_t)(fmask >> (2 * v) & 1),
                                (std::uint8_t)(fmask >> (2 * v + 1) & 1)};
                check(FeaturedGraph(Mode::Undirected, 3, 2, edges, feats));
            }
    }

    SUBCASE("gadgets and near-gadgets") {
        for (int n : {1, 2, 4, 6}) check(gadgetise(make_strict_linear_order(n)));
        FeaturedGraph tilde = gadgetise(make_strict_linear_order(2));
        auto edges = tilde.edges();
        edges.push_back({0, 3});  // s-s edge
        check(with_edges(tilde, edges));
    }
}

TEST_CASE("gadget hom counts survive the pipeline") {
    for (int i = 0; i < 50; ++i) {
        RandomGraphOptions opt;
        opt.n = 1 + i % 6;
        opt.edge_prob = 0.2 + 0.1 * (i % 5);
        opt.seed = 777 + i;
        FeaturedGraph g = random_graph(opt);
        CHECK(count_gadget_p2(gadgetise(g)) == count_p2(g));
    }
}
