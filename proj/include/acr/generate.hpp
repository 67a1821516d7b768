#pragma once

#include <cstdint>
#include <optional>
#include <random>

#include "acr/graph.hpp"

namespace acr {

// Directed graph on 0..n-1 with edges {(i,j) : i < j}; d = 0.
FeaturedGraph make_strict_linear_order(int n);

// Exhaustive enumeration of featured digraphs on n vertices with d feature
// bits. Index layout (little-endian): bits 0..n*n-1 are the edge mask with
// edge (i,j) at bit i*n+j, followed by n*d feature bits with bit t of
// vertex v at position n*n + v*d + t.
class DigraphEnumerator {
  public:
    // Caps n*n + n*d at max_bits (default 24) so size() stays enumerable.
    DigraphEnumerator(int n, int d, int max_bits = 24);

    std::uint64_t size() const { return total_; }
    FeaturedGraph at(std::uint64_t index) const;

  private:
    int n_, d_;
    std::uint64_t total_;
};

struct RandomGraphOptions {
    int n = 1;
    int d = 0;
    double edge_prob = 0.5;
    Mode mode = Mode::Directed;
    std::uint64_t seed = 0;
    std::optional<int> max_outdeg;  // per-vertex out-degree cap
    bool loops = true;
};

// Reproducible for a fixed seed; feature bits are fair coin flips.
FeaturedGraph random_graph(const RandomGraphOptions& opt);

// Feature- and edge-preserving bijection test, brute force with degree and
// feature pruning. Intended for n <= 10 (throws beyond iso_cap).
bool isomorphic(const FeaturedGraph& a, const FeaturedGraph& b, int iso_cap = 10);

}  // namespace acr
