#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "acr/generate.hpp"
#include "acr/gml.hpp"
#include "acr/order_check.hpp"

using namespace acr;

TEST_CASE("parsing") {
    Formula f = parse_formula("<>=2 T");
    CHECK(f->kind == GmlFormula::Kind::Diamond);
    CHECK(f->arg == 2);
    CHECK(f->left->kind == GmlFormula::Kind::Top);

    Formula g = parse_formula("(p1 & !p2)");
    CHECK(g->kind == GmlFormula::Kind::And);
    CHECK(g->left->kind == GmlFormula::Kind::Prop);
    CHECK(g->right->kind == GmlFormula::Kind::Not);

    Formula h = parse_formula("E>=3 <>=1 p1");
    CHECK(h->kind == GmlFormula::Kind::GlobalExists);
    CHECK(h->arg == 3);
    CHECK(h->left->kind == GmlFormula::Kind::Diamond);

    CHECK(print_formula(parse_formula("  ( p1 &!p2 ) ")) == "(p1 & !p2)");
}

TEST_CASE("parse errors carry a position") {
    CHECK_THROWS_AS(parse_formula("<>=0 T"), ParseError);
    CHECK_THROWS_AS(parse_formula("(p1 & "), ParseError);
    CHECK_THROWS_AS(parse_formula("p1 p2"), ParseError);
    CHECK_THROWS_AS(parse_formula("E>=0 T"), ParseError);
    CHECK_THROWS_AS(parse_formula("q1"), ParseError);
    try {
        parse_formula("(p1 % p2)");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("print-parse identity on random formulas") {
    for (int i = 0; i < 100; ++i) {
        RandomFormulaOptions opt;
        opt.depth = i % 5;
        opt.d = 1 + i % 3;
        opt.max_grading = 1 + i % 4;
        opt.seed = i;
        Formula f = random_formula(opt);
        CHECK(print_formula(parse_formula(print_formula(f))) == print_formula(f));
    }
}

TEST_CASE("evaluation") {
    FeaturedGraph order3 = make_strict_linear_order(3);
    CHECK(evaluate(parse_formula("<>=2 T"), order3, 0));
    CHECK_FALSE(evaluate(parse_formula("<>=1 T"), order3, 2));  // sink
    CHECK(evaluate(parse_formula("E>=3 T"), order3, 1));
    CHECK_FALSE(evaluate(parse_formula("E>=4 T"), order3, 1));

    FeaturedGraph feat(Mode::Directed, 2, 2, {{0, 1}}, {{1, 0}, {0, 1}});
    CHECK(evaluate(parse_formula("p1"), feat, 0));
    CHECK_FALSE(evaluate(parse_formula("p1"), feat, 1));
    CHECK(evaluate(parse_formula("<>=1 p2"), feat, 0));
    CHECK_THROWS(evaluate(parse_formula("p3"), feat, 0));

    SUBCASE("undirected diamonds range over the full neighbourhood") {
        FeaturedGraph path(Mode::Undirected, 3, 0, {{0, 1}, {1, 2}});
        CHECK(evaluate(parse_formula("<>=2 T"), path, 1));
        CHECK_FALSE(evaluate(parse_formula("<>=2 T"), path, 0));
    }
}

TEST_CASE("or-sugar tautology on random formulas") {
    for (int i = 0; i < 100; ++i) {
        RandomFormulaOptions fo;
        fo.depth = i % 4;
        fo.d = 2;
        fo.max_grading = 2;
        fo.seed = 9000 + i;
        Formula f = random_formula(fo);
        Formula taut = lor(f, lnot(f));

        RandomGraphOptions go;
        go.n = 1 + i % 6;
        go.d = 2;
        go.edge_prob = 0.4;
        go.seed = i;
        FeaturedGraph g = random_graph(go);
        for (int v = 0; v < g.n(); ++v) CHECK(evaluate(taut, g, v));
    }
}

TEST_CASE("evaluation is isomorphism-invariant") {
    for (int i = 0; i < 20; ++i) {
        RandomGraphOptions go;
        go.n = 2 + i % 5;
        go.d = 1;
        go.edge_prob = 0.4;
        go.seed = 100 + i;
        FeaturedGraph g = random_graph(go);

        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.directed_edges())
            edges.push_back({(u + 1) % g.n(), (v + 1) % g.n()});
        std::vector<FeatureVector> feats(g.n());
        for (int v = 0; v < g.n(); ++v) feats[(v + 1) % g.n()] = g.feature(v);
        FeaturedGraph rotated(g.mode(), g.n(), g.d(), edges, feats);

        RandomFormulaOptions fo;
        fo.depth = 2;
        fo.d = 1;
        fo.max_grading = 2;
        fo.seed = 200 + i;
        Formula f = random_formula(fo);
        for (int v = 0; v < g.n(); ++v)
            CHECK(evaluate(f, g, v) == evaluate(f, rotated, (v + 1) % g.n()));
    }
}

TEST_CASE("formula statistics") {
    FormulaStats s1 = stats(parse_formula("<>=2 <>=5 p1"));
    CHECK(s1.modal_depth == 2);
    CHECK(s1.max_grading == 5);
    CHECK_FALSE(s1.uses_global);

    FormulaStats s2 = stats(parse_formula("p1"));
    CHECK(s2.modal_depth == 0);
    CHECK(s2.max_grading == 0);

    FormulaStats s3 = stats(parse_formula("E>=4 p1"));
    CHECK(s3.modal_depth == 0);
    CHECK(s3.max_global_grading == 4);
    CHECK(s3.uses_global);
}

TEST_CASE("degree bound formula") {
    CHECK(print_formula(build_degree_bound_formula(2)) == "!E>=1 <>=3 T");
    FeaturedGraph order4 = make_strict_linear_order(4);
    CHECK_FALSE(evaluate(build_degree_bound_formula(2), order4, 0));  // max out-degree 3
    CHECK(evaluate(build_degree_bound_formula(3), order4, 0));
    CHECK(evaluate(build_degree_bound_formula(0), FeaturedGraph(Mode::Directed, 3, 0), 0));

    SUBCASE("matches the oracle on random graphs") {
        for (int i = 0; i < 200; ++i) {
            RandomGraphOptions go;
            go.n = 1 + i % 8;
            go.edge_prob = 0.1 * (1 + i % 9);
            go.seed = 300 + i;
            go.mode = i % 2 ? Mode::Undirected : Mode::Directed;
            FeaturedGraph g = random_graph(go);
            int c = i % 5;
            CHECK(evaluate(build_degree_bound_formula(c), g, 0) == (max_out_degree(g) <= c));
        }
    }
}

TEST_CASE("random formulas are reproducible and respect bounds") {
    RandomFormulaOptions opt;
    opt.depth = 3;
    opt.d = 2;
    opt.max_grading = 3;
    opt.seed = 77;
    CHECK(print_formula(random_formula(opt)) == print_formula(random_formula(opt)));

    opt.depth = 0;
    for (int s = 0; s < 20; ++s) {
        opt.seed = s;
        CHECK(stats(random_formula(opt)).max_grading == 0);
    }

    opt.depth = 4;
    opt.allow_global = false;
    for (int s = 0; s < 20; ++s) {
        opt.seed = s;
        CHECK_FALSE(stats(random_formula(opt)).uses_global);
    }
}
