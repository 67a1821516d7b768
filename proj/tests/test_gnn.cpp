#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acr/gadget.hpp"
#include "acr/generate.hpp"
#include "acr/gnn.hpp"
#include "acr/multiset.hpp"
#include "acr/networks.hpp"
#include "acr/order_check.hpp"

using namespace acr;

namespace {

FeaturedGraph cycle3() { return FeaturedGraph(Mode::Directed, 3, 0, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("linear-order network on the paper's examples") {
    AcrGnn net = build_linear_order_gnn();
    CHECK(is_simple(net));
    CHECK(net.layers.size() == 6);

    FeaturedGraph order3 = make_strict_linear_order(3);
    CHECK(run(net, order3, 0) == 1);
    CHECK(run(net, order3, 2) == 1);
    CHECK(run(net, cycle3(), 1) == 0);

    SUBCASE("trace values follow the proof") {
        EmbeddingTrace t = run_trace(net, order3);
        for (int v = 0; v < 3; ++v) {
            CHECK(t.layer[1][v] == Vec{1, 1, 1, 1});  // bias trick
            CHECK(t.layer[4][v] == Vec{3, 3, 1, 1});  // (|E|, C(3,2), hom, C(3,3))
        }
        EmbeddingTrace tc = run_trace(net, cycle3());
        CHECK(tc.layer[5][0] == Vec{0, 0, 2, 0});
        CHECK(tc.layer[6][0] == Vec{2});

        EmbeddingTrace t1 = run_trace(net, make_strict_linear_order(1));
        CHECK(t1.layer[4][0] == Vec{0, 0, 0, 0});
    }

    SUBCASE("accepts orders, spot checks") {
        for (int n : {1, 2, 5, 10, 40}) CHECK(run(net, make_strict_linear_order(n), 0) == 1);
    }

    SUBCASE("rejects every non-order digraph with n <= 3") {
        for (int n = 1; n <= 3; ++n) {
            DigraphEnumerator en(n, 0);
            for (std::uint64_t i = 0; i < en.size(); ++i) {
                FeaturedGraph g = en.at(i);
                REQUIRE((run(net, g, 0) == 1) == is_strict_linear_order(g));
            }
        }
    }
}

TEST_CASE("constant classifier accepts everything") {
    AcrGnn net;
    net.input_dim = 0;
    CombineSpec cs;
    cs.A = cs.C = cs.R = Mat{};
    cs.b = {Rat(0)};
    net.layers.push_back({cs, AggregationSpec::sum_all(), AggregationSpec::sum_all()});
    net.cls.w = {Rat(1)};
    net.cls.threshold = rat(-1);
    net.cls.dir = Classifier::Dir::GE;  // ReLU output >= 0 > -1 always
    for (int n = 1; n <= 4; ++n) CHECK(run(net, FeaturedGraph(Mode::Directed, n, 0), 0) == 1);
}

TEST_CASE("exactness: reruns are bit-identical") {
    AcrGnn net = build_linear_order_gnn();
    FeaturedGraph g = make_strict_linear_order(9);
    EmbeddingTrace a = run_trace(net, g), b = run_trace(net, g);
    for (size_t i = 0; i < a.layer.size(); ++i) REQUIRE(a.layer[i] == b.layer[i]);
}

TEST_CASE("bounded-sum aggregation is c-restriction-insensitive") {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 500; ++t) {
        int c = 1 + (int)(rng() % 3);
        int dim = 1 + (int)(rng() % 3);
        Multiset<Vec> m;
        for (int k = 0; k < (int)(rng() % 8); ++k) {
            Vec v(dim);
            for (auto& x : v) x = rat((long)(rng() % 3));
            m.add(v, 1 + (long long)(rng() % 5));
        }
        AggregationSpec spec = AggregationSpec::bounded_sum(c);
        CHECK(apply_aggregation(spec, m, dim) == apply_aggregation(spec, c_restrict(m, c), dim));
    }
}

TEST_CASE("permutation invariance of acceptance") {
    AcrGnn net = build_linear_order_gnn();
    std::mt19937_64 rng(17);
    for (int t = 0; t < 50; ++t) {
        RandomGraphOptions opt;
        opt.n = 2 + (int)(rng() % 6);
        opt.edge_prob = 0.4;
        opt.seed = rng();
        FeaturedGraph g = random_graph(opt);

        std::vector<int> perm(g.n());
        for (int i = 0; i < g.n(); ++i) perm[i] = i;
        for (int i = g.n() - 1; i > 0; --i) std::swap(perm[i], perm[rng() % (i + 1)]);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : g.directed_edges()) edges.push_back({perm[u], perm[v]});
        FeaturedGraph pg(g.mode(), g.n(), 0, edges);

        for (int v = 0; v < g.n(); ++v) CHECK(run(net, g, v) == run(net, pg, perm[v]));
    }
}

TEST_CASE("gadget network agrees with the oracle on arbitrary 2-featured graphs") {
    AcrGnn net = build_gadget_order_gnn();

    SUBCASE("exhaustive over undirected graphs on 3 vertices") {
        // 6 unordered pairs (loops included) x 4 feature values per vertex
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
                FeaturedGraph g(Mode::Undirected, 3, 2, edges, feats);
                REQUIRE((run(net, g, 0) == 1) == is_gadget_of_strict_linear_order(g));
            }
    }

    SUBCASE("random undirected graphs with role-like features") {
        for (int i = 0; i < 300; ++i) {
            int n = 3 * (1 + i % 4);
            RandomGraphOptions go;
            go.n = n;
            go.d = 0;
            go.edge_prob = 0.1 + 0.05 * (i % 8);
            go.mode = Mode::Undirected;
            go.seed = 4242 + i;
            go.loops = false;
            FeaturedGraph shape = random_graph(go);
            std::vector<FeatureVector> feats(n);
            for (int v = 0; v < n; ++v)
                feats[v] = v % 3 == 0   ? FeatureVector{1, 0}
                           : v % 3 == 1 ? FeatureVector{0, 1}
                                        : FeatureVector{0, 0};
            FeaturedGraph g(Mode::Undirected, n, 2, shape.edges(), feats);
            REQUIRE((run(net, g, 0) == 1) == is_gadget_of_strict_linear_order(g));
        }
    }
}

TEST_CASE("simplicity predicate") {
    CHECK(is_simple(build_linear_order_gnn()));
    CHECK(is_simple(build_gadget_order_gnn()));

    AcrGnn net = build_linear_order_gnn();
    net.layers[0].agg = AggregationSpec::bounded_sum(2);
    CHECK_FALSE(is_simple(net));

    AcrGnn net2 = build_linear_order_gnn();
    net2.layers[3].comb.act = Activation::Clamp01;
    CHECK_FALSE(is_simple(net2));
}

TEST_CASE("network serialization round-trip") {
    for (AcrGnn net : {build_linear_order_gnn(), build_gadget_order_gnn()}) {
        std::string text = write_network(net);
        AcrGnn back = read_network(text);
        CHECK(write_network(back) == text);
        FeaturedGraph g = net.input_dim == 0 ? make_strict_linear_order(4)
                                             : gadgetise(make_strict_linear_order(4));
        CHECK(run(net, g, 0) == run(back, g, 0));
    }
    CHECK_THROWS(read_network("acrnet 2\n"));
}

TEST_CASE("dimension mismatches are rejected") {
    AcrGnn net = build_linear_order_gnn();
    CHECK_THROWS(run(net, FeaturedGraph(Mode::Directed, 2, 1), 0));

    AcrGnn broken = build_linear_order_gnn();
    broken.cls.w.push_back(Rat(1));
    CHECK_THROWS(broken.validate());
}
