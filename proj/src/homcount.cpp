#include "acr/homcount.hpp"

#include "acr/gadget.hpp"

namespace acr {

FeaturedGraph make_p2() {
    return FeaturedGraph(Mode::Directed, 3, 0, {{0, 1}, {1, 2}});
}

namespace {

void count_maps(const FeaturedGraph& p, const FeaturedGraph& g, std::vector<int>& img, int k,
                Int& total) {
    int np = p.n();
    if (k == np) {
        ++total;
        return;
    }
    for (int w = 0; w < g.n(); ++w) {
        if (g.d() > 0 && p.feature(k) != g.feature(w)) continue;
        bool ok = true;
        for (int j = 0; j <= k && ok; ++j) {
            int t = j == k ? w : img[j];
            if (p.has_edge(k, j) && !g.has_edge(w, t)) ok = false;
            if (p.has_edge(j, k) && !g.has_edge(t, w)) ok = false;
        }
        if (!ok) continue;
        img[k] = w;
        count_maps(p, g, img, k + 1, total);
    }
}

}  // namespace

Int count_homomorphisms(const FeaturedGraph& pattern, const FeaturedGraph& target,
                        int pattern_cap, int target_cap) {
    if (pattern.mode() != target.mode())
        throw GraphError("homomorphism count: mode mismatch");
    if (pattern.d() != target.d())
        throw GraphError("homomorphism count: feature dimension mismatch");
    if (pattern.n() > pattern_cap || target.n() > target_cap)
        throw GraphError("homomorphism count: brute-force cap exceeded");
    Int total = 0;
    std::vector<int> img(pattern.n(), -1);
    count_maps(pattern, target, img, 0, total);
    return total;
}

Int count_p2(const FeaturedGraph& g) {
    if (!g.directed()) throw GraphError("count_p2 expects a directed graph");
    Int total = 0;
    for (int v = 0; v < g.n(); ++v)
        total += (long)g.in_degree(v) * (long)g.out_degree(v);
    return total;
}

Int count_gadget_p2(const FeaturedGraph& gadget) {
    GadgetView view = gadget_view(gadget);  // throws naming the violated clause
    Int total = 0;
    for (int v = 0; v < view.underlying_n; ++v)
        total += (long)view.st_in_degree[v] * (long)view.st_out_degree[v];
    return total;
}

}  // namespace acr
