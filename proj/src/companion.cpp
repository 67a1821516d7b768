#include "acr/companion.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace acr {

std::string SurgeryReport::to_text() const {
    std::ostringstream out;
    for (auto& op : operations) out << "op: " << op << "\n";
    out << "certificate (pointwise exact-mode bisimilarity): "
        << (certificate_ok ? "ok" : "FAILED") << "\n";
    for (auto& c : structural) out << "check " << c.name << ": " << (c.ok ? "ok" : "FAILED") << "\n";
    return out.str();
}

bool pointwise_exact_bisimilar(const FeaturedGraph& a, const FeaturedGraph& b, int L, int c) {
    if (a.n() != b.n() || a.mode() != b.mode() || a.d() != b.d()) return false;
    TypeAssignment t = graded_types({&a, &b}, L, c);
    for (int u = 0; u < a.n(); ++u)
        if (t.final_cls(0, u) != t.final_cls(1, u)) return false;
    return true;
}

namespace {

void require_directed(const FeaturedGraph& g, const char* op) {
    if (!g.directed())
        throw GraphError(std::string(op) + ": companion surgery works on directed graphs");
}

void certify(const FeaturedGraph& before, const FeaturedGraph& after, int L, int c,
             SurgeryReport* report) {
    if (report) report->certificate_ok = pointwise_exact_bisimilar(before, after, L, c);
}

// class members ordered by canonical enumeration, lowest first
struct ClassLayout {
    TypeAssignment types;
    std::vector<int> enumeration;             // canonical_enumeration numbers
    std::vector<std::vector<int>> members;    // final class -> vertices, enum order

    ClassLayout(const FeaturedGraph& g, int v, int L, int c)
        : types(graded_types({&g}, L, c)), enumeration(canonical_enumeration(g, v, L, c)) {
        members.resize(types.num_classes(L));
        for (int u = 0; u < g.n(); ++u) members[types.final_cls(0, u)].push_back(u);
        for (auto& cls : members)
            std::sort(cls.begin(), cls.end(),
                      [&](int x, int y) { return enumeration[x] < enumeration[y]; });
    }

    int cls_of(int u) const { return types.final_cls(0, u); }
};

}  // namespace

FeaturedGraph free_edge_transfer(const FeaturedGraph& g, int v, int w, int w_new, int L, int c,
                                 SurgeryReport* report) {
    require_directed(g, "free_edge_transfer");
    g.check_vertex(v);
    g.check_vertex(w);
    g.check_vertex(w_new);
    if (L < 1) throw GraphError("free_edge_transfer: needs L >= 1");
    if (!g.has_edge(v, w)) throw GraphError("free_edge_transfer: edge (v,w) not present");
    if (g.has_edge(v, w_new)) throw GraphError("free_edge_transfer: edge (v,w') already present");
    TypeAssignment t = graded_types({&g}, L - 1, c);
    if (t.final_cls(0, w) != t.final_cls(0, w_new))
        throw GraphError("free_edge_transfer: w and w' are not (L-1,c)-bisimilar");

    auto edges = g.directed_edges();
    edges.erase(std::remove(edges.begin(), edges.end(), std::pair{v, w}), edges.end());
    edges.push_back({v, w_new});
    FeaturedGraph out = with_edges(g, edges);
    if (report)
        report->operations.push_back("transfer (" + std::to_string(v) + "," + std::to_string(w) +
                                     ") -> (" + std::to_string(v) + "," + std::to_string(w_new) +
                                     ")");
    certify(g, out, L, c, report);
    return out;
}

FeaturedGraph free_witness(const FeaturedGraph& g, int v, const std::vector<int>& witnesses,
                           int w_new, int L, int c, SurgeryReport* report) {
    require_directed(g, "free_witness");
    g.check_vertex(v);
    g.check_vertex(w_new);
    if (L < 1) throw GraphError("free_witness: needs L >= 1");
    if ((int)witnesses.size() != c)
        throw GraphError("free_witness: need exactly c witnesses");
    std::set<int> distinct(witnesses.begin(), witnesses.end());
    if ((int)distinct.size() != c) throw GraphError("free_witness: witnesses not distinct");
    if (g.has_edge(v, w_new)) throw GraphError("free_witness: edge (v,w') already present");
    TypeAssignment t = graded_types({&g}, L - 1, c);
    for (int w : witnesses) {
        g.check_vertex(w);
        if (!g.has_edge(v, w)) throw GraphError("free_witness: witness is not an out-neighbour");
        if (t.final_cls(0, w) != t.final_cls(0, w_new))
            throw GraphError("free_witness: witness not (L-1,c)-bisimilar to w'");
    }

    auto edges = g.directed_edges();
    edges.push_back({v, w_new});
    FeaturedGraph out = with_edges(g, edges);
    if (report)
        report->operations.push_back("witness-add (" + std::to_string(v) + "," +
                                     std::to_string(w_new) + ")");
    certify(g, out, L, c, report);
    return out;
}

namespace {

FeaturedGraph rewire_canonical(const FeaturedGraph& g, const ClassLayout& layout, int c) {
    std::vector<std::pair<int, int>> edges;
    int num_classes = (int)layout.members.size();
    for (int u = 0; u < g.n(); ++u) {
        std::vector<int> per_class(num_classes, 0);
        for (int w : g.out_neighbours(u)) ++per_class[layout.cls_of(w)];
        for (int lam = 0; lam < num_classes; ++lam) {
            int m = per_class[lam];
            if (m == 0) continue;
            const auto& mem = layout.members[lam];
            size_t take = m >= c ? mem.size() : (size_t)m;
            for (size_t j = 0; j < take; ++j) edges.push_back({u, mem[j]});
        }
    }
    return with_edges(g, edges);
}

// conditions 2-3 of the initial-good-graph construction, checked for
// enumeration-1 vertices against the original types
void check_good_conditions(const FeaturedGraph& star, const ClassLayout& layout, int c,
                           SurgeryReport* report) {
    if (!report) return;
    bool cond2 = true, cond3 = true;
    for (int v = 0; v < star.n(); ++v) {
        if (layout.enumeration[v] != 1) continue;
        for (int w : star.out_neighbours(v)) {
            int lam = layout.cls_of(w);
            for (int w2 : layout.members[lam]) {
                if (layout.enumeration[w2] < layout.enumeration[w] && !star.has_edge(v, w2))
                    cond2 = false;
            }
            if (layout.enumeration[w] >= c) {
                for (int w2 : layout.members[lam])
                    if (!star.has_edge(v, w2)) cond3 = false;
            }
        }
    }
    report->structural.push_back({"lower-enumeration witnesses present", cond2});
    report->structural.push_back({"classes complete past multiplicity c", cond3});
}

}  // namespace

FeaturedGraph initial_good_graph(const FeaturedGraph& g, int v, int L, int c,
                                 SurgeryReport* report) {
    require_directed(g, "initial_good_graph");
    g.check_vertex(v);
    ClassLayout layout(g, v, L, c);
    FeaturedGraph star = rewire_canonical(g, layout, c);
    if (report) report->operations.push_back("canonical out-edge rewiring (all vertices)");
    check_good_conditions(star, layout, c, report);
    certify(g, star, L, c, report);
    return star;
}

FeaturedGraph saturate(const FeaturedGraph& g, int v, int L, int c, SurgeryReport* report) {
    require_directed(g, "saturate");
    g.check_vertex(v);
    ClassLayout layout(g, v, L, c);
    FeaturedGraph star = rewire_canonical(g, layout, c);
    if (report) report->operations.push_back("canonical out-edge rewiring (all vertices)");

    // every vertex copies the out-edges of its class representative
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < star.n(); ++u) {
        int rep = layout.members[layout.cls_of(u)].front();
        for (int w : star.out_neighbours(rep)) edges.push_back({u, w});
    }
    FeaturedGraph hat = with_edges(star, edges);
    if (report) report->operations.push_back("class-uniform out-edge copy from representatives");

    if (report) {
        bool cond2 = true, cond3 = true, cond4 = true;
        for (int u = 0; u < hat.n(); ++u) {
            int rep = layout.members[layout.cls_of(u)].front();
            if (hat.out_neighbours(u) != hat.out_neighbours(rep)) cond2 = false;
            for (int w : hat.out_neighbours(u)) {
                int lam = layout.cls_of(w);
                for (int w2 : layout.members[lam]) {
                    if (layout.enumeration[w2] < layout.enumeration[w] && !hat.has_edge(u, w2))
                        cond3 = false;
                }
                if (layout.enumeration[w] >= c) {
                    for (int w2 : layout.members[lam])
                        if (!hat.has_edge(u, w2)) cond4 = false;
                }
            }
        }
        report->structural.push_back({"class-uniform out-edges", cond2});
        report->structural.push_back({"lower-enumeration witnesses present", cond3});
        report->structural.push_back({"classes complete past multiplicity c", cond4});
    }
    certify(g, hat, L, c, report);
    return hat;
}

FeaturedGraph homogenise(const FeaturedGraph& g1, int v1, const FeaturedGraph& g_hat1,
                         const FeaturedGraph& g2, int v2, int L, int c, int q_prime,
                         SurgeryReport* report) {
    require_directed(g2, "homogenise");
    if (q_prime < c) throw GraphError("homogenise: q' must be at least c");
    if (!bisimilar(g1, v1, g2, v2, L, c, GlobalMode::capped(q_prime)))
        throw GraphError("homogenise: inputs are not capped-q' bisimilar");
    if (!(g_hat1 == saturate(g1, v1, L, c)))
        throw GraphError("homogenise: g_hat1 is not saturate(g1)");

    // joint classes over (g_hat1, g2); g_hat1 is pointwise equivalent to g1
    TypeAssignment joint = graded_types({&g_hat1, &g2}, L, c);
    int num_classes = joint.num_classes(L);
    std::vector<int> enum1 = canonical_enumeration(g_hat1, v1, L, c);
    std::vector<int> enum2 = canonical_enumeration(g2, v2, L, c);

    std::vector<std::vector<int>> members1(num_classes), members2(num_classes);
    for (int u = 0; u < g_hat1.n(); ++u) members1[joint.final_cls(0, u)].push_back(u);
    for (int u = 0; u < g2.n(); ++u) members2[joint.final_cls(1, u)].push_back(u);
    for (auto& mem : members1)
        std::sort(mem.begin(), mem.end(), [&](int x, int y) { return enum1[x] < enum1[y]; });
    for (auto& mem : members2)
        std::sort(mem.begin(), mem.end(), [&](int x, int y) { return enum2[x] < enum2[y]; });

    // representative rewiring in g2 guided by the matching g_hat1 example
    std::vector<std::pair<int, int>> edges;
    std::vector<std::vector<int>> rep_out(num_classes);
    for (int cls = 0; cls < num_classes; ++cls) {
        if (members2[cls].empty()) continue;
        if (members1[cls].empty())
            throw GraphError("homogenise: class realized in g2 has no g1 example");
        int u1 = members1[cls].front();

        std::vector<int> per_class(num_classes, 0);
        for (int w : g_hat1.out_neighbours(u1)) ++per_class[joint.final_cls(0, w)];
        for (int lam = 0; lam < num_classes; ++lam) {
            int m = per_class[lam];
            if (m == 0) continue;
            const auto& mem2 = members2[lam];
            if (m >= c) {
                for (int w2 : mem2) rep_out[cls].push_back(w2);
            } else {
                if ((int)mem2.size() < m)
                    throw GraphError("homogenise: not enough class members in g2");
                for (int j = 0; j < m; ++j) rep_out[cls].push_back(mem2[j]);
            }
        }
    }
    for (int u = 0; u < g2.n(); ++u) {
        int cls = joint.final_cls(1, u);
        for (int w : rep_out[cls]) edges.push_back({u, w});
    }
    FeaturedGraph hat2 = with_edges(g2, edges);
    if (report) report->operations.push_back("class-matched out-degree copy from g_hat1");

    if (report) {
        // saturation conditions for hat2 w.r.t. g2's classes
        bool uniform = true;
        for (int u = 0; u < hat2.n(); ++u) {
            int rep = members2[joint.final_cls(1, u)].front();
            if (hat2.out_neighbours(u) != hat2.out_neighbours(rep)) uniform = false;
        }
        report->structural.push_back({"class-uniform out-edges", uniform});

        // lemma conditions 3-4: small classes matched exactly, large made complete
        bool small_match = true, large_complete = true;
        for (int cls = 0; cls < num_classes; ++cls) {
            if (members2[cls].empty() || members1[cls].empty()) continue;
            int u1 = members1[cls].front();
            int u2 = members2[cls].front();
            for (int lam = 0; lam < num_classes; ++lam) {
                int m1 = 0, m2 = 0;
                for (int w : g_hat1.out_neighbours(u1))
                    if (joint.final_cls(0, w) == lam) ++m1;
                for (int w : hat2.out_neighbours(u2))
                    if (joint.final_cls(1, w) == lam) ++m2;
                if (m1 < c && m1 != m2) small_match = false;
                if (m1 >= c && m2 != (int)members2[lam].size()) large_complete = false;
            }
        }
        report->structural.push_back({"small classes matched exactly", small_match});
        report->structural.push_back({"large classes complete", large_complete});

        report->structural.push_back(
            {"capped-q' bisimilarity preserved",
             bisimilar(g_hat1, v1, hat2, v2, L, c, GlobalMode::capped(q_prime))});
    }
    certify(g2, hat2, L, c, report);
    return hat2;
}

namespace {

// chi tables: chi[k][class at round k], shared across rounds as a DAG
std::vector<std::vector<Formula>> chi_tables(const FeaturedGraph& g, const TypeAssignment& t,
                                             int L, int c) {
    std::vector<std::vector<Formula>> chi(L + 1);

    chi[0].resize(t.num_classes(0));
    std::vector<int> rep0(t.num_classes(0), -1);
    for (int u = 0; u < g.n(); ++u)
        if (rep0[t.cls(0, 0, u)] < 0) rep0[t.cls(0, 0, u)] = u;
    for (int cls = 0; cls < t.num_classes(0); ++cls) {
        std::vector<Formula> parts;
        const FeatureVector& f = g.feature(rep0[cls]);
        for (int i = 1; i <= g.d(); ++i)
            parts.push_back(f[i - 1] ? prop(i) : lnot(prop(i)));
        chi[0][cls] = conj(parts);
    }

    for (int k = 1; k <= L; ++k) {
        int prev_classes = t.num_classes(k - 1);
        // every out-neighbour satisfies some previous-round type formula
        Formula cover = lnot(diamond(1, lnot(disj(chi[k - 1]))));

        chi[k].resize(t.num_classes(k));
        std::vector<int> rep(t.num_classes(k), -1);
        for (int u = 0; u < g.n(); ++u)
            if (rep[t.cls(k, 0, u)] < 0) rep[t.cls(k, 0, u)] = u;

        for (int cls = 0; cls < t.num_classes(k); ++cls) {
            int u = rep[cls];
            std::vector<int> per_class(prev_classes, 0);
            for (int w : g.out_neighbours(u)) ++per_class[t.cls(k - 1, 0, w)];

            std::vector<Formula> parts;
            parts.push_back(chi[k - 1][t.cls(k - 1, 0, u)]);
            for (int lam = 0; lam < prev_classes; ++lam)
                for (int n = 1; n <= c; ++n)
                    parts.push_back(n <= per_class[lam] ? diamond(n, chi[k - 1][lam])
                                                        : lnot(diamond(n, chi[k - 1][lam])));
            parts.push_back(cover);
            chi[k][cls] = conj(parts);
        }
    }
    return chi;
}

}  // namespace

Formula chi_formula(const FeaturedGraph& g, int v, int L, int c) {
    g.check_vertex(v);
    TypeAssignment t = graded_types({&g}, L, c);
    auto chi = chi_tables(g, t, L, c);
    return chi[L][t.final_cls(0, v)];
}

Formula gamma_formula(const FeaturedGraph& g, int v, int L, int c, int q) {
    if (q < 1) throw std::invalid_argument("gamma formula needs q >= 1");
    g.check_vertex(v);
    TypeAssignment t = graded_types({&g}, L, c);
    auto chi = chi_tables(g, t, L, c);

    std::vector<int> class_size(t.num_classes(L), 0);
    for (int u = 0; u < g.n(); ++u) ++class_size[t.final_cls(0, u)];

    std::vector<Formula> globals;
    for (int n = 1; n <= q; ++n)
        for (int cls = 0; cls < t.num_classes(L); ++cls)
            globals.push_back(class_size[cls] >= n ? global_exists(n, chi[L][cls])
                                                   : lnot(global_exists(n, chi[L][cls])));
    // every vertex realizes some type of g
    globals.push_back(lnot(global_exists(1, lnot(disj(chi[L])))));

    return land(chi[L][t.final_cls(0, v)], conj(globals));
}

PropertyFormulaResult property_formula(const std::vector<LabeledExample>& examples, int L, int c,
                                       int q) {
    PropertyFormulaResult res;
    std::vector<int> reps;
    for (size_t i = 0; i < examples.size(); ++i) {
        if (!examples[i].positive) continue;
        bool dup = false;
        for (int r : reps)
            if (bisimilar(examples[r].graph, examples[r].vertex, examples[i].graph,
                          examples[i].vertex, L, c, GlobalMode::capped(q))) {
                dup = true;
                break;
            }
        if (!dup) reps.push_back((int)i);
    }

    std::vector<Formula> parts;
    for (int r : reps)
        parts.push_back(gamma_formula(examples[r].graph, examples[r].vertex, L, c, q));
    res.formula = disj(parts);

    for (size_t i = 0; i < examples.size(); ++i) {
        if (examples[i].positive) continue;
        if (evaluate(res.formula, examples[i].graph, examples[i].vertex)) {
            res.consistent = false;
            res.clash_negative = (int)i;
            for (int r : reps)
                if (bisimilar(examples[r].graph, examples[r].vertex, examples[i].graph,
                              examples[i].vertex, L, c, GlobalMode::capped(q))) {
                    res.clash_positive = r;
                    break;
                }
            break;
        }
    }
    return res;
}

}  // namespace acr
