#pragma once

#include <cstdint>
#include <vector>

#include "twcanon/graph.hpp"

namespace twcanon {

/// Random k-tree on n vertices with each edge kept independently with
/// probability keep. Treewidth is at most k by construction. The same
/// seed yields the same graph on every platform.
ColoredGraph random_partial_ktree(int n, int k, double keep, uint64_t seed);

/// Uniformly seeded permutation of the vertex identifiers, returned as
/// (old, new) pairs together with the relabeled graph.
struct PermutedGraph {
  ColoredGraph graph;
  std::vector<std::pair<int, int>> mapping;
};
PermutedGraph random_relabeling(const ColoredGraph& g, uint64_t seed);

}  // namespace twcanon
