#include "acr/order_check.hpp"

#include "acr/homcount.hpp"

namespace acr {

bool is_strict_linear_order(const FeaturedGraph& g) {
    if (!g.directed()) throw GraphError("strict linear order is a directed predicate");
    int n = g.n();
    for (int x = 0; x < n; ++x)
        if (g.has_edge(x, x)) return false;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!g.has_edge(x, y) && !g.has_edge(y, x)) return false;
    for (int x = 0; x < n; ++x)
        for (int y : g.out_neighbours(x))
            for (int z : g.out_neighbours(y))
                if (!g.has_edge(x, z)) return false;
    return true;
}

bool characterization_holds(const FeaturedGraph& g) {
    if (!g.directed()) throw GraphError("hom-count characterization is a directed predicate");
    Int n = g.n();
    return Int((long)g.edge_count()) == binomial(n, 2) && count_p2(g) == binomial(n, 3);
}

int max_out_degree(const FeaturedGraph& g) {
    int m = 0;
    for (int v = 0; v < g.n(); ++v) m = std::max(m, g.out_degree(v));
    return m;
}

}  // namespace acr
