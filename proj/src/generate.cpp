#include "acr/generate.hpp"

#include <algorithm>
#include <numeric>

namespace acr {

FeaturedGraph make_strict_linear_order(int n) {
    if (n < 1) throw GraphError("strict linear order needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
    return FeaturedGraph(Mode::Directed, n, 0, std::move(edges));
}

DigraphEnumerator::DigraphEnumerator(int n, int d, int max_bits) : n_(n), d_(d) {
    if (n < 1 || d < 0) throw GraphError("bad enumeration parameters");
    long long bits = (long long)n * n + (long long)n * d;
    if (bits > max_bits)
        throw GraphError("enumeration cap exceeded: " + std::to_string(bits) + " bits");
    total_ = 1ull << bits;
}

FeaturedGraph DigraphEnumerator::at(std::uint64_t index) const {
    if (index >= total_) throw GraphError("enumeration index out of range");
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j)
            if (index >> (i * n_ + j) & 1) edges.push_back({i, j});
    std::vector<FeatureVector> feats(n_, FeatureVector(d_, 0));
    for (int v = 0; v < n_; ++v)
        for (int t = 0; t < d_; ++t)
            feats[v][t] = index >> (n_ * n_ + v * d_ + t) & 1;
    return FeaturedGraph(Mode::Directed, n_, d_, std::move(edges), std::move(feats));
}

namespace {

double unit_real(std::mt19937_64& rng) {
    return (rng() >> 11) * 0x1.0p-53;  // 53 uniform bits in [0,1)
}

}  // namespace

FeaturedGraph random_graph(const RandomGraphOptions& opt) {
    if (opt.n < 1) throw GraphError("random graph needs n >= 1");
    if (opt.edge_prob < 0.0 || opt.edge_prob > 1.0)
        throw GraphError("edge_prob must lie in [0,1]");
    std::mt19937_64 rng(opt.seed);

    std::vector<FeatureVector> feats(opt.n, FeatureVector(opt.d, 0));
    for (int v = 0; v < opt.n; ++v)
        for (int t = 0; t < opt.d; ++t) feats[v][t] = rng() & 1;

    std::vector<int> outdeg(opt.n, 0);
    auto room = [&](int u, int v) {
        if (!opt.max_outdeg) return true;
        int cap = *opt.max_outdeg;
        if (opt.mode == Mode::Directed) return outdeg[u] < cap;
        // symmetric storage: adding {u,v} raises both out-degrees
        if (u == v) return outdeg[u] < cap;
        return outdeg[u] < cap && outdeg[v] < cap;
    };

    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < opt.n; ++u) {
        int lo = opt.mode == Mode::Directed ? 0 : u;
        for (int v = lo; v < opt.n; ++v) {
            if (u == v && !opt.loops) continue;
            if (unit_real(rng) < opt.edge_prob && room(u, v)) {
                edges.push_back({u, v});
                ++outdeg[u];
                if (opt.mode == Mode::Undirected && u != v) ++outdeg[v];
            }
        }
    }
    return FeaturedGraph(opt.mode, opt.n, opt.d, std::move(edges), std::move(feats));
}

namespace {

struct IsoState {
    const FeaturedGraph& a;
    const FeaturedGraph& b;
    std::vector<int> map;     // a-vertex -> b-vertex or -1
    std::vector<bool> used;   // b-vertex taken
    std::vector<int> order;   // a-vertices, most constrained first

    bool extend(size_t k) {
        if (k == order.size()) return true;
        int u = order[k];
        for (int w = 0; w < b.n(); ++w) {
            if (used[w]) continue;
            if (a.feature(u) != b.feature(w)) continue;
            if (a.out_degree(u) != b.out_degree(w) || a.in_degree(u) != b.in_degree(w)) continue;
            bool ok = true;
            for (size_t j = 0; j < k && ok; ++j) {
                int x = order[j];
                if (a.has_edge(u, x) != b.has_edge(w, map[x])) ok = false;
                if (a.has_edge(x, u) != b.has_edge(map[x], w)) ok = false;
            }
            if (a.has_edge(u, u) != b.has_edge(w, w)) ok = false;
            if (!ok) continue;
            map[u] = w;
            used[w] = true;
            if (extend(k + 1)) return true;
            map[u] = -1;
            used[w] = false;
        }
        return false;
    }
};

}  // namespace

bool isomorphic(const FeaturedGraph& a, const FeaturedGraph& b, int iso_cap) {
    if (a.n() > iso_cap || b.n() > iso_cap)
        throw GraphError("isomorphism test capped at n <= " + std::to_string(iso_cap));
    if (a.mode() != b.mode() || a.n() != b.n() || a.d() != b.d()) return false;
    if (a.edge_count() != b.edge_count()) return false;

    auto profile = [](const FeaturedGraph& g) {
        std::vector<std::tuple<FeatureVector, int, int>> p;
        for (int v = 0; v < g.n(); ++v)
            p.push_back({g.feature(v), g.out_degree(v), g.in_degree(v)});
        std::sort(p.begin(), p.end());
        return p;
    };
    if (profile(a) != profile(b)) return false;

    IsoState st{a, b, std::vector<int>(a.n(), -1), std::vector<bool>(b.n(), false), {}};
    st.order.resize(a.n());
    std::iota(st.order.begin(), st.order.end(), 0);
    std::sort(st.order.begin(), st.order.end(), [&](int x, int y) {
        int dx = a.out_degree(x) + a.in_degree(x), dy = a.out_degree(y) + a.in_degree(y);
        if (dx != dy) return dx > dy;
        return x < y;
    });
    return st.extend(0);
}

}  // namespace acr
