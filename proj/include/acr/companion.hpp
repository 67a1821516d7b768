#pragma once

#include <string>
#include <vector>

#include "acr/bisim.hpp"
#include "acr/gml.hpp"
#include "acr/graph.hpp"

namespace acr {

struct SurgeryCheck {
    std::string name;
    bool ok = false;
};

// Audit trail: the ordered operation log, the pointwise Exact-mode
// bisimilarity certificate against the input graph, and the structural
// condition checklist. A construction is valid only when everything holds.
struct SurgeryReport {
    std::vector<std::string> operations;
    bool certificate_ok = false;
    std::vector<SurgeryCheck> structural;

    bool all_ok() const {
        if (!certificate_ok) return false;
        for (auto& c : structural)
            if (!c.ok) return false;
        return true;
    }
    std::string to_text() const;
};

// Pointwise Exact-mode equivalence of two graphs over the same vertex set:
// every vertex lands in the same joint round-L class in both.
bool pointwise_exact_bisimilar(const FeaturedGraph& a, const FeaturedGraph& b, int L, int c);

// Edge rewiring (E \ {(v,w)}) u {(v,w')} for w ~^{L-1,c} w'. Directed only;
// precondition failures throw naming the violated clause.
FeaturedGraph free_edge_transfer(const FeaturedGraph& g, int v, int w, int w_new, int L, int c,
                                 SurgeryReport* report = nullptr);

// Edge addition E u {(v,w')} given c distinct out-witnesses ~^{L-1,c} w'.
FeaturedGraph free_witness(const FeaturedGraph& g, int v, const std::vector<int>& witnesses,
                           int w_new, int L, int c, SurgeryReport* report = nullptr);

// Per-vertex out-edge rewiring toward canonical witnesses: for each vertex
// and each round-L class, keep the class out-degree if below c (connecting
// to the lowest-enumerated members) and complete the class otherwise.
FeaturedGraph initial_good_graph(const FeaturedGraph& g, int v, int L, int c,
                                 SurgeryReport* report = nullptr);

// The full companion: initial good graph plus class-uniform out-edges
// (every vertex copies its class representative). Idempotent on its output.
FeaturedGraph saturate(const FeaturedGraph& g, int v, int L, int c,
                       SurgeryReport* report = nullptr);

// Builds the companion of g2 with g_hat1 = saturate(g1, v1) as the example:
// class out-degrees below c are matched exactly, classes at >= c are made
// complete, then the result is saturated. Precondition:
// bisimilar(g1,v1,g2,v2,L,c,Capped(q')) with q' >= c.
FeaturedGraph homogenise(const FeaturedGraph& g1, int v1, const FeaturedGraph& g_hat1,
                         const FeaturedGraph& g2, int v2, int L, int c, int q_prime,
                         SurgeryReport* report = nullptr);

// GML-characteristic (L,c)-formula of (g, v): satisfied by exactly the
// pointed graphs c-graded L-turn bisimilar to (g, v). Subformulas are shared
// per (round, class), so the result is DAG-sized.
Formula chi_formula(const FeaturedGraph& g, int v, int L, int c);

// GML-exists characteristic (L,c,q)-formula: chi plus global class-count
// conjuncts capped at q. Satisfaction coincides with Capped(q) bisimilarity.
// The chi conjunct is the left child of the returned conjunction.
Formula gamma_formula(const FeaturedGraph& g, int v, int L, int c, int q);

struct LabeledExample {
    FeaturedGraph graph;
    int vertex = 0;
    bool positive = false;
};

struct PropertyFormulaResult {
    Formula formula;               // disjunction of positive-class gammas
    bool consistent = true;
    int clash_positive = -1;       // indices into the example list when inconsistent
    int clash_negative = -1;
};

// Disjunction of deduplicated gamma formulas over the positive examples; if
// a negative example satisfies it, the labeling is not bisimulation-invariant
// at these parameters and the clashing pair is reported instead.
PropertyFormulaResult property_formula(const std::vector<LabeledExample>& examples, int L, int c,
                                       int q);

}  // namespace acr
