#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "twcanon/graph.hpp"

namespace twcanon {

/// Exhaustive backtracking search for a color-preserving bijection,
/// independent of the canonization pipeline. Returns the mapping as
/// (vertex of g, vertex of h) pairs, or nothing. Degree and color
/// pruning keeps graphs up to max_vertices (default 16) feasible.
std::optional<std::vector<std::pair<int, int>>> brute_force_isomorphic(
    const ColoredGraph& g, const ColoredGraph& h, int max_vertices = 16);

}  // namespace twcanon
