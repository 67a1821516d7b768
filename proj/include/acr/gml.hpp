#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "acr/graph.hpp"

namespace acr {

// GML / GML-exists formulas: T | p_i | !f | (f & f) | <>=k f | E>=k f.
// Or is parser sugar for !(!a & !b). Nodes are immutable and shared, so
// generated formulas (characteristic chi/gamma) stay DAG-sized.
struct GmlFormula;
using Formula = std::shared_ptr<const GmlFormula>;

struct GmlFormula {
    enum class Kind { Top, Prop, Not, And, Diamond, GlobalExists };
    Kind kind;
    int arg = 0;  // Prop: index >= 1; Diamond/GlobalExists: grading k >= 1
    Formula left, right;
};

Formula top();
Formula prop(int i);
Formula lnot(Formula f);
Formula land(Formula a, Formula b);
Formula lor(Formula a, Formula b);  // sugar
Formula diamond(int k, Formula f);
Formula global_exists(int k, Formula f);

// Conjunction of a list; empty list is T.
Formula conj(const std::vector<Formula>& fs);
Formula disj(const std::vector<Formula>& fs);

struct ParseError : std::runtime_error {
    int position;
    ParseError(const std::string& msg, int pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos) {}
};

Formula parse_formula(const std::string& text);
std::string print_formula(const Formula& f);

// Satisfaction at a pointed graph; diamonds count over out-neighbours
// (the full neighbourhood in undirected mode), E>=k over all vertices.
// Shared subformulas are evaluated once per vertex.
bool evaluate(const Formula& f, const FeaturedGraph& g, int v);

// Truth value of f at every vertex in one sweep.
std::vector<bool> evaluate_all(const Formula& f, const FeaturedGraph& g);

struct FormulaStats {
    int modal_depth = 0;
    int max_grading = 0;         // largest k on any <>= node, 0 if none
    int max_global_grading = 0;  // largest k on any E>= node
    bool uses_global = false;
};

FormulaStats stats(const Formula& f);

// !E>=1 <>=c+1 T : holds anywhere in G iff max out-degree <= c.
Formula build_degree_bound_formula(int c);

struct RandomFormulaOptions {
    int depth = 2;
    int d = 1;
    int max_grading = 2;
    bool allow_global = true;
    std::uint64_t seed = 0;
};

Formula random_formula(const RandomFormulaOptions& opt);

}  // namespace acr
