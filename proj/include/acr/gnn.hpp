#pragma once

#include <string>
#include <vector>

#include "acr/graph.hpp"
#include "acr/multiset.hpp"
#include "acr/rational.hpp"

namespace acr {

// Aggregation / readout of a multiset of rational vectors.
// SumAll: dimension-wise sum. BoundedSum(c): sum of the c-restricted
// multiset, so the function is c-bounded by construction. ConstantZero
// ignores its input (the AC-GNN case).
struct AggregationSpec {
    enum class Kind { SumAll, BoundedSum, ConstantZero };
    Kind kind = Kind::SumAll;
    int c = 0;

    static AggregationSpec sum_all() { return {Kind::SumAll, 0}; }
    static AggregationSpec bounded_sum(int c);
    static AggregationSpec constant_zero() { return {Kind::ConstantZero, 0}; }
    bool operator==(const AggregationSpec&) const = default;
};

enum class Activation { ReLU, Clamp01, Identity };

// y = act(x1 A + x2 C + x3 R + b); matrices are d_in x d_out, row vectors.
struct CombineSpec {
    Mat A, C, R;
    Vec b;
    Activation act = Activation::ReLU;
};

struct Layer {
    CombineSpec comb;
    AggregationSpec agg = AggregationSpec::sum_all();
    AggregationSpec read = AggregationSpec::sum_all();
};

// accept iff <w, f> >= t (GE) or <= t (LE)
struct Classifier {
    Vec w;
    Rat threshold = 0;
    enum class Dir { GE, LE } dir = Dir::GE;
};

struct AcrGnn {
    int input_dim = 0;
    std::vector<Layer> layers;
    Classifier cls;

    int output_dim() const;
    void validate() const;  // throws on dimension inconsistencies
};

// trace.layer[i][v] is f^(i)(v); layer 0 is the input features as rationals.
struct EmbeddingTrace {
    std::vector<std::vector<Vec>> layer;
};

EmbeddingTrace run_trace(const AcrGnn& net, const FeaturedGraph& g);
int run(const AcrGnn& net, const FeaturedGraph& g, int v);
std::vector<int> run_all(const AcrGnn& net, const FeaturedGraph& g);  // one trace, all vertices
bool classify(const Classifier& cls, const Vec& embedding);

// sum / bounded-sum of a multiset of vectors, also usable standalone
Vec apply_aggregation(const AggregationSpec& spec, const std::vector<const Vec*>& items, int dim);
Vec apply_aggregation(const AggregationSpec& spec, const Multiset<Vec>& m, int dim);

// every aggregation and readout SumAll, every activation ReLU
bool is_simple(const AcrGnn& net);

std::string trace_to_text(const EmbeddingTrace& trace);

// versioned text serialization, exact round-trip
std::string write_network(const AcrGnn& net);
AcrGnn read_network(const std::string& text);
AcrGnn load_network_file(const std::string& path);
void save_network_file(const AcrGnn& net, const std::string& path);

}  // namespace acr
