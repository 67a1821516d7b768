#include "acr/gadget.hpp"

#include <algorithm>
#include <sstream>

#include "acr/bisim.hpp"
#include "acr/generate.hpp"
#include "acr/order_check.hpp"

namespace acr {

namespace {

const FeatureVector kFeatS{1, 0};
const FeatureVector kFeatT{0, 1};
const FeatureVector kFeatI{0, 0};

}  // namespace

FeaturedGraph gadgetise(const FeaturedGraph& g) {
    if (!g.directed()) throw GraphError("gadgetisation expects a directed graph");
    if (g.d() != 0) throw GraphError("gadgetisation expects a 0-featured graph");
    int n = g.n();
    std::vector<FeatureVector> feats(3 * n);
    for (int v = 0; v < n; ++v) {
        feats[3 * v] = kFeatS;
        feats[3 * v + 1] = kFeatT;
        feats[3 * v + 2] = kFeatI;
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [v, u] : g.directed_edges()) edges.push_back({3 * v, 3 * u + 1});
    for (int v = 0; v < n; ++v) {
        edges.push_back({3 * v, 3 * v + 2});
        edges.push_back({3 * v + 2, 3 * v + 1});
    }
    return FeaturedGraph(Mode::Undirected, 3 * n, 2, std::move(edges), std::move(feats));
}

GadgetView gadget_view(const FeaturedGraph& g) {
    if (g.directed()) throw GraphError("gadget check expects an undirected graph");
    if (g.d() != 2) throw GraphError("gadget check expects d = 2");
    int n3 = g.n();

    GadgetView view;
    view.role.assign(n3, -1);
    for (int v = 0; v < n3; ++v) {
        const FeatureVector& f = g.feature(v);
        if (f == kFeatS) view.role[v] = 0;
        else if (f == kFeatT) view.role[v] = 1;
        else if (f == kFeatI) view.role[v] = 2;
        else throw GraphError("not a gadgetisation: psi1 violated (feature 11)");
    }

    // psi2: edges only between s-t, s-iota, t-iota
    for (int v = 0; v < n3; ++v)
        for (int u : g.out_neighbours(v))
            if (view.role[v] == view.role[u])
                throw GraphError("not a gadgetisation: psi2 violated (same-role edge)");

    auto iota_neighbours = [&](int v) {
        std::vector<int> r;
        for (int u : g.out_neighbours(v))
            if (view.role[u] == 2) r.push_back(u);
        return r;
    };

    // psi3: every s and t vertex has exactly one iota neighbour
    std::vector<int> partner(n3, -1);
    for (int v = 0; v < n3; ++v) {
        if (view.role[v] == 2) continue;
        auto is = iota_neighbours(v);
        if (is.size() != 1)
            throw GraphError("not a gadgetisation: psi3 violated (s/t vertex with " +
                             std::to_string(is.size()) + " iota neighbours)");
        partner[v] = is[0];
    }

    // psi4: every iota vertex pairs exactly one s and exactly one t
    view.index_of.assign(n3, -1);
    for (int v = 0; v < n3; ++v) {
        if (view.role[v] != 2) continue;
        int s = -1, t = -1, scnt = 0, tcnt = 0;
        for (int u : g.out_neighbours(v)) {
            if (view.role[u] == 0) { s = u; ++scnt; }
            if (view.role[u] == 1) { t = u; ++tcnt; }
        }
        if (scnt != 1 || tcnt != 1)
            throw GraphError("not a gadgetisation: psi4 violated (iota with " +
                             std::to_string(scnt) + " s- and " + std::to_string(tcnt) +
                             " t-neighbours)");
        int idx = view.underlying_n++;
        view.s_of.push_back(s);
        view.t_of.push_back(t);
        view.iota_of.push_back(v);
        view.index_of[v] = idx;
        view.index_of[s] = idx;
        view.index_of[t] = idx;
    }
    if (view.underlying_n == 0)
        throw GraphError("not a gadgetisation: psi4 violated (no iota vertex)");
    for (int v = 0; v < n3; ++v)
        if (view.index_of[v] < 0)
            throw GraphError("not a gadgetisation: psi3 violated (unmatched s/t vertex)");

    view.st_out_degree.assign(view.underlying_n, 0);
    view.st_in_degree.assign(view.underlying_n, 0);
    for (int idx = 0; idx < view.underlying_n; ++idx) {
        int s = view.s_of[idx];
        for (int u : g.out_neighbours(s)) {
            if (view.role[u] != 1) continue;
            view.underlying_edges.push_back({idx, view.index_of[u]});
            ++view.st_out_degree[idx];
            ++view.st_in_degree[view.index_of[u]];
        }
    }
    std::sort(view.underlying_edges.begin(), view.underlying_edges.end());
    return view;
}

bool is_gadgetisation(const FeaturedGraph& g) {
    if (g.directed() || g.d() != 2) return false;
    try {
        gadget_view(g);
        return true;
    } catch (const GraphError&) {
        return false;
    }
}

FeaturedGraph degadgetise(const FeaturedGraph& g) {
    GadgetView view = gadget_view(g);
    return FeaturedGraph(Mode::Directed, view.underlying_n, 0, view.underlying_edges);
}

bool is_gadget_of_strict_linear_order(const FeaturedGraph& g) {
    if (!is_gadgetisation(g)) return false;
    return is_strict_linear_order(degadgetise(g));
}

FamilyResult c2_counterexample_family(int L, int c) {
    if (L < 1 || c < 1) throw std::invalid_argument("family needs L >= 1 and c >= 1");
    if (L * c > 6) throw std::invalid_argument("family capped at L*c <= 6");
    int n = L * c + 1;
    int size = 2 * n + 1;  // order positions 0..2n, signed index i at position i+n

    FeaturedGraph g = gadgetise(make_strict_linear_order(size));
    auto spos = [&](int i) { return 3 * (i + n); };      // s_i
    auto tpos = [&](int i) { return 3 * (i + n) + 1; };  // t_i

    auto edges = g.edges();
    std::pair<int, int> removed{std::min(spos(-1), tpos(1)), std::max(spos(-1), tpos(1))};
    std::pair<int, int> added{std::min(spos(1), tpos(-1)), std::max(spos(1), tpos(-1))};
    edges.erase(std::remove(edges.begin(), edges.end(), removed), edges.end());
    edges.push_back(added);
    FeaturedGraph h = with_edges(g, edges);

    FamilyReport rep;
    rep.L = L;
    rep.c = c;
    rep.n = n;
    rep.g_is_order_gadget = is_gadget_of_strict_linear_order(g);
    rep.h_is_order_gadget = is_gadget_of_strict_linear_order(h);

    C2Refinement ref = c2_refine({&g, &h}, L, c);
    for (int v = 0; v < g.n(); ++v) {
        ++rep.vertex_pairs_checked;
        if (ref.same_class(0, v, 1, v)) ++rep.equivalent_pairs;
    }
    rep.all_equivalent = rep.equivalent_pairs == rep.vertex_pairs_checked;
    return {std::move(g), std::move(h), rep};
}

std::string FamilyReport::to_text() const {
    std::ostringstream out;
    out << "appendix-c family, L=" << L << " c=" << c << " (n=" << n
        << ", orders of size " << 2 * n + 1 << ", gadgets of " << 3 * (2 * n + 1)
        << " vertices)\n";
    out << "  G is gadget of strict linear order: " << (g_is_order_gadget ? "yes" : "NO") << "\n";
    out << "  H is gadget of strict linear order: " << (h_is_order_gadget ? "YES" : "no") << "\n";
    out << "  c2-equivalent same-name pairs: " << equivalent_pairs << "/" << vertex_pairs_checked
        << "\n";
    out << "  verdict: " << (ok() ? "all-green" : "FAILED") << "\n";
    return out.str();
}

}  // namespace acr
