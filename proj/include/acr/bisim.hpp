#pragma once

#include <string>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

// Per-round class ids over the disjoint union of the input graphs.
// Round 0 classes are the feature vectors; round k+1 refines round k.
// Ids are assigned in first-occurrence order over (graph, vertex), so they
// are stable across runs.
struct TypeAssignment {
    int L = 0;
    int c = 1;
    std::vector<int> offset;                 // graph index -> first global vertex
    int total = 0;                           // vertices in the union
    std::vector<std::vector<int>> round;     // round[k][global] = class id
    std::vector<int> classes_per_round;

    int cls(int k, int graph, int v) const { return round[k][offset[graph] + v]; }
    int final_cls(int graph, int v) const { return cls(L, graph, v); }
    int num_classes(int k) const { return classes_per_round[k]; }
};

// Colour refinement for the c-graded L-turn bisimulation: the round k+1
// colour of v is its round k colour together with the map from round-k
// classes to min(|N_out in class|, c). Equal round-L colours coincide with
// the back-and-forth relation on distinct <=c tuples.
TypeAssignment graded_types(const std::vector<const FeaturedGraph*>& graphs, int L, int c);

struct GlobalMode {
    enum class Kind { None, Exact, Capped };
    Kind kind = Kind::None;
    int q = 0;

    static GlobalMode none() { return {Kind::None, 0}; }
    static GlobalMode exact() { return {Kind::Exact, 0}; }
    static GlobalMode capped(int q);
};

// mode None: plain graded bisimilarity. Exact: additionally every round-L
// class has equally many members in both graphs. Capped(q'): the class
// counts agree after min(., q').
bool bisimilar(const FeaturedGraph& g1, int v1, const FeaturedGraph& g2, int v2, int L, int c,
               GlobalMode mode = GlobalMode::none());

// L-turn 2-pebble c-counting back-and-forth equivalence. The refinement
// buckets candidates over the full vertex set by (round-k class, adjacency
// pattern to the pebbled vertex, equal-to-pebble flag) with counts capped
// at c.
struct C2Refinement {
    int L = 0;
    int c = 1;
    std::vector<int> offset;
    int total = 0;
    std::vector<std::vector<int>> round;
    std::vector<int> classes_per_round;

    bool same_class(int graph1, int v1, int graph2, int v2) const {
        return round[L][offset[graph1] + v1] == round[L][offset[graph2] + v2];
    }
};

C2Refinement c2_refine(const std::vector<const FeaturedGraph*>& graphs, int L, int c);

bool c2_equivalent(const FeaturedGraph& g1, int v1, const FeaturedGraph& g2, int v2, int L,
                   int c);

// Brute-force q-round Ehrenfeucht-Fraisse game from the given position;
// pebbled tuples must already match on features, equality and edges.
// Capped at n <= 10 and q <= 3.
bool ef_equivalent(const FeaturedGraph& g1, const std::vector<int>& tuple1,
                   const FeaturedGraph& g2, const std::vector<int>& tuple2, int q);

// Within each round-L class, members are numbered 1..size ascending by
// vertex index with v promoted to the front of its own class.
std::vector<int> canonical_enumeration(const FeaturedGraph& g, int v, int L, int c);

// Round-by-round class table, for CLI reports.
std::string types_to_text(const TypeAssignment& t, const std::vector<std::string>& graph_names);

}  // namespace acr
