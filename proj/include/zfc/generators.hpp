#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "zfc/graph.hpp"

namespace zfc {

using Rng = std::mt19937_64;

/// Uniform integer in [0, n) from raw engine output (portable across stdlibs).
inline std::size_t uniform_index(Rng& rng, std::size_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t x;
  do x = rng(); while (x >= limit);
  return static_cast<std::size_t>(x % n);
}

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(Rng& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

inline double uniform_real(Rng& rng, double lo, double hi) { return lo + (hi - lo) * uniform01(rng); }

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
/// 2 x L ladder: rails i--i+1 and L+i--L+i+1, rungs i--L+i.
Graph ladder_graph(std::size_t length);
/// Complete binary tree with `depth` levels below the root.
Graph binary_tree(std::size_t depth);
/// Square grid rows x cols.
Graph grid_graph(std::size_t rows, std::size_t cols);

/// Random graph on n vertices with max degree <= max_deg, built by adding
/// shuffled candidate pairs; retried until connected when requested.
Graph random_bounded_degree_graph(std::size_t n, std::size_t max_deg, Rng& rng, bool connected = true,
                                  double keep_probability = 1.0);

/// Random simple graph, each pair present independently with probability p.
Graph random_graph(std::size_t n, double p, Rng& rng);

/// One representative per isomorphism class of graphs on n vertices.
std::vector<Graph> all_graphs(std::size_t n);
/// Same, restricted to connected graphs.
std::vector<Graph> all_connected_graphs(std::size_t n);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace zfc
