#pragma once

#include "acr/gnn.hpp"

namespace acr {

// Simple 6-layer ACR-GNN over 0-featured digraphs accepting exactly strict
// linear orders. Layers 1-4 compute (|E|, C(n,2), hom(P2,G), C(n,3)) in
// parallel dimensions, layer 5 the four ReLU differences, layer 6 their sum;
// accepts iff the sum is <= 0.
AcrGnn build_linear_order_gnn();

// Simple ACR-GNN over 2-featured undirected graphs accepting exactly
// gadgetisations of strict linear orders. A ReLU-arithmetic checker for the
// four structural clauses runs in parallel with a counting pipeline; see
// networks.cpp for the layer-by-layer schedule.
AcrGnn build_gadget_order_gnn();

}  // namespace acr
