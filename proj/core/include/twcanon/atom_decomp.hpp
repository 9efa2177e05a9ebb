#pragma once

#include <utility>
#include <vector>

#include "twcanon/graph.hpp"
#include "twcanon/treedec.hpp"

namespace twcanon {

/// Subgraph H paired with a boundary set I. For nodes with a nonempty
/// interior, H - I is connected and I is exactly the neighborhood of
/// the interior. Separator leaves have V(H) = I and no interior.
struct GraphWithInterface {
  ColoredGraph graph;
  std::vector<int> interface;

  std::vector<int> interior() const;
};

/// Validates the type invariants and returns the pair.
GraphWithInterface make_graph_with_interface(ColoredGraph h,
                                             std::vector<int> interface);

/// Size thresholds for the separator-based decomposition of atoms.
/// The cited size functions come without constants; they are enforced
/// as runtime contracts instead, and the factors double on retry.
struct AtomDecompConfig {
  int small_factor = 2;    // small(k) = small_factor * (k+1)
  int medium_factor = 8;   // medium(k) = medium_factor * (k+1)^3
  int retries = 3;
  bool check_preconditions = true;

  int small(int k) const { return small_factor * (k + 1); }
  int medium(int k) const {
    return medium_factor * (k + 1) * (k + 1) * (k + 1);
  }
  AtomDecompConfig doubled() const {
    AtomDecompConfig c = *this;
    c.small_factor *= 2;
    c.medium_factor *= 2;
    return c;
  }
};

/// Interface separator: the interface itself plus the leftmost minimum
/// separators of all qualifying ordered interface pairs (small
/// interfaces) or all qualifying disjoint (tw+1)-subsets (large
/// interfaces). tw is the promised width bound of the ambient graph;
/// all connectivity is evaluated inside the node's own graph. The raw
/// overload applies the formula to any boundary set.
std::vector<int> sep_s(const ColoredGraph& h, const std::vector<int>& boundary,
                       int s, int tw);
std::vector<int> sep_s(const GraphWithInterface& gi, int s, int tw);

/// One graph-with-interface per component C of H - S, taken as
/// (H[C u N(C)], N(C)). Requires S to cover the interface.
std::vector<GraphWithInterface> split_at(const GraphWithInterface& gi,
                                         const std::vector<int>& s);

/// Directed tree of graphs with interfaces realizing the recursive
/// separator decomposition of an improved atom anchored at a
/// distinguished non-edge.
struct DescriptorDecomposition {
  std::vector<GraphWithInterface> labels;
  std::vector<int> parent;  // -1 at the root
  int root = 0;
  std::pair<int, int> origin_pair{-1, -1};
  int max_separator_size = 0;  // observed; no hard bound is enforced

  int node_count() const { return static_cast<int>(labels.size()); }
  std::vector<std::vector<int>> children_lists() const;
};

ValidationResult validate(const DescriptorDecomposition& dd);

/// Builds the descriptor decomposition for an improved atom g with
/// tw(g) <= k and non-edge uv. Progress and interface bounds are
/// runtime contracts; on violation the thresholds double, up to
/// config.retries times.
DescriptorDecomposition descriptor_decomposition(const ColoredGraph& g,
                                                 std::pair<int, int> uv, int k,
                                                 const AtomDecompConfig& config = {});

/// Tree decomposition of the descriptor's root graph: per node, the
/// interface plus every vertex lying in at least two of the node's and
/// its children's interfaces.
RootedTreeDecomposition descriptor_to_treedec(const DescriptorDecomposition& dd);

/// descriptor_decomposition followed by descriptor_to_treedec. The
/// result keeps uv as its origin pair.
RootedTreeDecomposition atom_bounded_decomposition(const ColoredGraph& g,
                                                   std::pair<int, int> uv, int k,
                                                   const AtomDecompConfig& config = {});

}  // namespace twcanon
