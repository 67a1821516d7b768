#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace acr {

enum class Mode { Directed, Undirected };

using FeatureVector = std::vector<std::uint8_t>;  // 0/1 entries, length d

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Finite featured graph over vertices 0..n-1. Undirected graphs are stored
// as symmetric directed edge sets; immutable once constructed.
class FeaturedGraph {
  public:
    FeaturedGraph(Mode mode, int n, int d,
                  std::vector<std::pair<int, int>> edges = {},
                  std::vector<FeatureVector> features = {});

    Mode mode() const { return mode_; }
    bool directed() const { return mode_ == Mode::Directed; }
    int n() const { return n_; }
    int d() const { return d_; }

    const FeatureVector& feature(int v) const { check_vertex(v); return feat_[v]; }
    const std::vector<FeatureVector>& features() const { return feat_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& out_neighbours(int v) const { check_vertex(v); return out_[v]; }
    const std::vector<int>& in_neighbours(int v) const { check_vertex(v); return in_[v]; }
    int out_degree(int v) const { check_vertex(v); return (int)out_[v].size(); }
    int in_degree(int v) const { check_vertex(v); return (int)in_[v].size(); }

    // Directed: number of ordered pairs. Undirected: unordered pairs, loops once.
    long long edge_count() const;

    // Canonical edge list: lexicographic; undirected pairs listed once with u <= v.
    std::vector<std::pair<int, int>> edges() const;

    // All ordered pairs present in the adjacency (both directions when undirected).
    std::vector<std::pair<int, int>> directed_edges() const;

    bool operator==(const FeaturedGraph& o) const;

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw GraphError("vertex out of range: " + std::to_string(v));
    }

  private:
    Mode mode_;
    int n_;
    int d_;
    std::vector<FeatureVector> feat_;
    std::vector<std::vector<int>> out_, in_;
};

// Same vertices and features, different edge set.
FeaturedGraph with_edges(const FeaturedGraph& g, std::vector<std::pair<int, int>> edges);

// Out- and in-neighbour sets of v; equal in undirected mode.
std::pair<std::vector<int>, std::vector<int>> neighbourhoods(const FeaturedGraph& g, int v);

// FGR text format.
FeaturedGraph read_graph(const std::string& text);
std::string write_graph(const FeaturedGraph& g);
FeaturedGraph load_graph_file(const std::string& path);
void save_graph_file(const FeaturedGraph& g, const std::string& path);

}  // namespace acr
