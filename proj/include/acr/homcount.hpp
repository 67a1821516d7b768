#pragma once

#include "acr/graph.hpp"
#include "acr/rational.hpp"

namespace acr {

// P2 = path of length 2 over {0,1,2}: edges (0,1), (1,2); d = 0.
FeaturedGraph make_p2();

// Feature-preserving homomorphisms of pattern into target, counted by brute
// force over all maps (non-injective included). Pattern and target must share
// mode and feature dimension; capped at |pattern| <= 6 and |target| <= 30 by
// default. The caps can be raised explicitly, e.g. to brute-force the
// 9-vertex gadgetisation of P2 as an oracle.
Int count_homomorphisms(const FeaturedGraph& pattern, const FeaturedGraph& target,
                        int pattern_cap = 6, int target_cap = 30);

// hom(P2, G) as sum over middle vertices of indeg * outdeg. Directed only,
// no size cap.
Int count_p2(const FeaturedGraph& g);

// hom(gadgetise(P2), gadget) via the inferred underlying st-degrees.
// Input must pass is_gadgetisation.
Int count_gadget_p2(const FeaturedGraph& gadget);

}  // namespace acr
