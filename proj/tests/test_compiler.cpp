#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acr/compiler.hpp"
#include "acr/generate.hpp"

using namespace acr;

TEST_CASE("subformula table") {
    Formula f = parse_formula("(<>=1 p1 & !<>=1 p1)");
    SubformulaTable t = enumerate_subformulas(f);
    CHECK(t.size() == 4);  // p1, <>=1 p1 (shared), !<>=1 p1, the conjunction
    for (int i = 0; i < t.size(); ++i) {
        const Formula& sub = t.formulas[i];
        if (sub->left) CHECK(t.dim(sub->left) < i);
        if (sub->right) CHECK(t.dim(sub->right) < i);
    }
    CHECK(t.dim(f) == t.size() - 1);
}

TEST_CASE("compiled leaves and simple modalities") {
    FeaturedGraph order3 = make_strict_linear_order(3);

    SUBCASE("identity case p1") {
        FeaturedGraph feat(Mode::Directed, 2, 1, {}, {{1}, {0}});
        AcrGnn net = compile(parse_formula("p1"), 1);
        CHECK(run(net, feat, 0) == 1);
        CHECK(run(net, feat, 1) == 0);
    }

    SUBCASE("diamond at a sink") {
        AcrGnn net = compile(parse_formula("<>=1 T"), 0);
        CHECK(run(net, order3, 2) == 0);
        CHECK(run(net, order3, 0) == 1);
    }

    SUBCASE("global count") {
        AcrGnn net = compile(parse_formula("E>=3 T"), 0);
        for (int v = 0; v < 3; ++v) CHECK(run(net, order3, v) == 1);
        CHECK(run(compile(parse_formula("E>=4 T"), 0), order3, 0) == 0);
    }
}

TEST_CASE("compiler output shape") {
    Formula f = parse_formula("E>=2 <>=3 (p1 & !p2)");
    AcrGnn net = compile(f, 2);
    CHECK_FALSE(is_simple(net));  // clamp activations, bounded aggregation
    for (const Layer& l : net.layers) {
        CHECK(l.agg.kind == AggregationSpec::Kind::BoundedSum);
        CHECK(l.agg.c == 3);  // the largest diamond grading
        CHECK(l.read.kind == AggregationSpec::Kind::SumAll);
        CHECK(l.comb.act == Activation::Clamp01);
    }

    SUBCASE("layer count is deterministic") {
        CHECK(write_network(compile(f, 2)) == write_network(net));
    }

    SUBCASE("depth-0 formulas still get one layer") {
        CHECK(compile(parse_formula("T"), 0).layers.size() == 1);
        CHECK(compile(parse_formula("p1"), 1).layers.size() == 1);
    }

    SUBCASE("gradings default the bound to 1") {
        CHECK(compile(parse_formula("(p1 & !p1)"), 1).layers[0].agg.c == 1);
    }
}

TEST_CASE("proposition beyond the dimension is rejected") {
    CHECK_THROWS(compile(parse_formula("p3"), 2));
    CHECK(compile(parse_formula("p3")).input_dim == 3);
}

TEST_CASE("every table dimension settles to its subformula's truth value") {
    for (int i = 0; i < 60; ++i) {
        RandomFormulaOptions fo;
        fo.depth = 1 + i % 3;
        fo.d = 1 + i % 2;
        fo.max_grading = 1 + i % 3;
        fo.seed = 8800 + i;
        Formula f = random_formula(fo);
        SubformulaTable table = enumerate_subformulas(f);
        AcrGnn net = compile(f, fo.d);

        RandomGraphOptions go;
        go.n = 1 + i % 6;
        go.d = fo.d;
        go.edge_prob = 0.4;
        go.seed = 8900 + i;
        FeaturedGraph g = random_graph(go);

        EmbeddingTrace trace = run_trace(net, g);
        for (int k = 0; k < table.size(); ++k)
            for (int v = 0; v < g.n(); ++v)
                REQUIRE(trace.layer.back()[v][k] ==
                        Rat(evaluate(table.formulas[k], g, v) ? 1 : 0));
    }
}

TEST_CASE("compiled networks agree with the evaluator") {
    for (int i = 0; i < 300; ++i) {
        RandomFormulaOptions fo;
        fo.depth = i % 4;
        fo.d = i % 3;
        fo.max_grading = 1 + i % 3;
        fo.allow_global = i % 2 == 0;
        fo.seed = 4000 + i;
        Formula f = random_formula(fo);

        RandomGraphOptions go;
        go.n = 1 + i % 8;
        go.d = fo.d;
        go.edge_prob = 0.15 * (1 + i % 6);
        go.mode = i % 5 < 3 ? Mode::Directed : Mode::Undirected;
        go.seed = 5000 + i;
        FeaturedGraph g = random_graph(go);

        AcrGnn net = compile(f, fo.d);
        std::vector<int> bits = run_all(net, g);
        for (int v = 0; v < g.n(); ++v) REQUIRE((bits[v] == 1) == evaluate(f, g, v));
    }
}
