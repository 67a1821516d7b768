#pragma once

#include <string>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

// Encodes a directed 0-featured graph as a 2-featured undirected graph.
// Vertex v becomes s_v = 3v (feature 10), t_v = 3v+1 (feature 01) and
// iota_v = 3v+2 (feature 00); each underlying edge (v,u) becomes the
// undirected pair {s_v, t_u}, plus identity edges {s_v, iota_v}, {iota_v, t_v}.
FeaturedGraph gadgetise(const FeaturedGraph& g);

// Decomposition of a valid gadget graph back into underlying-vertex triples.
struct GadgetView {
    int underlying_n = 0;
    std::vector<int> s_of, t_of, iota_of;                // underlying -> gadget vertex
    std::vector<int> role;                               // gadget vertex -> 0:s 1:t 2:iota
    std::vector<int> index_of;                           // gadget vertex -> underlying index
    std::vector<int> st_out_degree, st_in_degree;        // underlying st-degrees
    std::vector<std::pair<int, int>> underlying_edges;   // recovered (v,u) pairs
};

// Validates the four structural clauses psi1..psi4 and extracts the triples;
// throws GraphError naming the first violated clause.
GadgetView gadget_view(const FeaturedGraph& g);

bool is_gadgetisation(const FeaturedGraph& g);

// Recovers the underlying directed graph; degadgetise(gadgetise(G)) is
// isomorphic to G (and equal under the canonical 3v/3v+1/3v+2 layout).
FeaturedGraph degadgetise(const FeaturedGraph& g);

// is_gadgetisation plus the underlying graph being a strict linear order.
bool is_gadget_of_strict_linear_order(const FeaturedGraph& g);

struct FamilyReport {
    int L = 0, c = 0, n = 0;       // n = L*c + 1, orders of size 2n+1
    bool g_is_order_gadget = false;
    bool h_is_order_gadget = false;  // expected false
    long long vertex_pairs_checked = 0;
    long long equivalent_pairs = 0;  // expected all
    bool all_equivalent = false;
    bool ok() const { return g_is_order_gadget && !h_is_order_gadget && all_equivalent; }
    std::string to_text() const;
};

struct FamilyResult {
    FeaturedGraph g, h;
    FamilyReport report;
};

// The two-pebble counterexample pair: G = gadgetise(order(2n+1)) with
// n = L*c+1, H = G with the gadget edge {s_{-1}, t_1} replaced by
// {s_1, t_{-1}} (signed positions i mapped to order position i+n). The
// report certifies that H is not an order gadget while G,v and H,v are
// c2-equivalent at (L, c) for every vertex v.
FamilyResult c2_counterexample_family(int L, int c);

}  // namespace acr
