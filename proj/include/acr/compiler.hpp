#pragma once

#include <unordered_map>
#include <vector>

#include "acr/gml.hpp"
#include "acr/gnn.hpp"

namespace acr {

// Distinct subformulas in dependency order (children first, root last), one
// network dimension per entry. Structurally equal subtrees share an entry.
struct SubformulaTable {
    std::vector<Formula> formulas;
    std::unordered_map<const GmlFormula*, int> index;  // node -> dimension
    std::vector<int> settle_layer;                     // dimension -> first layer with its value

    int dim(const Formula& f) const { return index.at(f.get()); }
    int size() const { return (int)formulas.size(); }
};

SubformulaTable enumerate_subformulas(const Formula& root);

// Translates a GML-exists formula into an ACR-GNN whose acceptance coincides
// with satisfaction on every d-featured pointed graph. Aggregation is
// BoundedSum(k) where k is the largest diamond grading (1 if none): summing
// a k-restricted multiset of 0/1 dimensions keeps every "count >= j" test
// with j <= k intact, because sum min(mult, k) >= j iff the true count is
// >= j. Readout stays SumAll, activations clamp to [0,1], and dimension i
// holds the truth value of subformula i from its settle layer on.
AcrGnn compile(const Formula& f, int d);

// input dimension defaulted to the largest proposition index used
AcrGnn compile(const Formula& f);

}  // namespace acr
