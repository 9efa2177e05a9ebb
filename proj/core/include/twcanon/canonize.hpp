#pragma once

#include <utility>
#include <vector>

#include "twcanon/graph.hpp"
#include "twcanon/nested.hpp"
#include "twcanon/ordering.hpp"

namespace twcanon {

struct PipelineConfig {
  NestedConfig nested;
  OrderingConfig ordering;
};

/// Total order on the vertices of a connected graph with tw(g) <= k,
/// computed by recursing through the invariant nested decomposition:
/// minimal refinements (marking each chosen distinguished non-edge)
/// and ordered children with minimal candidate orderings. Contains
/// every vertex exactly once.
std::vector<int> canonical_sequence(const ColoredGraph& g, int k,
                                    const PipelineConfig& config = {});

struct CanonResult {
  /// Vertices in canonical order, components sorted by (size, encoding).
  std::vector<int> order;
  /// (vertex, position) pairs, ascending by vertex: the canonical labeling.
  std::vector<std::pair<int, int>> labeling;
  /// Color matrix of the input graph in canonical order. Improvement
  /// and marker colors never appear here; the canon is over the input
  /// colors only.
  std::vector<std::vector<int>> matrix;
};

/// Canon and canonical labeling; disconnected inputs are canonized per
/// component. canon(g) == canon(h) exactly if g and h are isomorphic.
CanonResult canon(const ColoredGraph& g, int k, const PipelineConfig& config = {});

struct IsoResult {
  bool isomorphic = false;
  /// (vertex of g, vertex of h) pairs; present and color-checked when
  /// isomorphic.
  std::vector<std::pair<int, int>> witness;
};

/// Decides isomorphism by comparing canons; the witness composes the
/// two canonical labelings and is verified color by color.
IsoResult isomorphic(const ColoredGraph& g, const ColoredGraph& h, int k,
                     const PipelineConfig& config = {});

}  // namespace twcanon
