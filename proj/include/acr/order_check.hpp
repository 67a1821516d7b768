#pragma once

#include "acr/graph.hpp"
#include "acr/rational.hpp"

namespace acr {

// True iff the edge relation is irreflexive, total and transitive.
bool is_strict_linear_order(const FeaturedGraph& g);

// |E| = C(n,2) and hom(P2, G) = C(n,3); equivalent to the predicate above.
bool characterization_holds(const FeaturedGraph& g);

int max_out_degree(const FeaturedGraph& g);

}  // namespace acr
