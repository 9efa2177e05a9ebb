#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "twcanon/graph.hpp"

namespace twcanon {

/// Rooted tree decomposition: parent map over node indices plus one bag
/// (sorted ambient vertex ids) per node.
struct RootedTreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<int> parent;  // -1 at the root
  int root = -1;
  /// Distinguished non-edge the decomposition was anchored at, when it
  /// came out of the bounded-width atom pipeline.
  std::optional<std::pair<int, int>> origin_pair;

  int node_count() const { return static_cast<int>(bags.size()); }
  std::vector<std::vector<int>> children_lists() const;
  std::vector<int> depths() const;
  /// Union of all bags, sorted.
  std::vector<int> covered_vertices() const;
};

/// Single-node decomposition holding one bag.
RootedTreeDecomposition single_bag_decomposition(std::vector<int> bag);

struct ValidationResult {
  bool ok = true;
  std::string report;
  explicit operator bool() const { return ok; }
};

/// Checks the connectedness and covering properties of d against g.
/// The report names the first violated property and a witness.
ValidationResult validate(const ColoredGraph& g, const RootedTreeDecomposition& d);

int width(const RootedTreeDecomposition& d);

/// Bag intersection of adjacent nodes n and m; domain error otherwise.
std::vector<int> adhesion(const RootedTreeDecomposition& d, int n, int m);

/// g[bag(n)] plus a clique on every adhesion set with a neighbor node;
/// added edges get the plain edge color.
ColoredGraph torso(const ColoredGraph& g, const RootedTreeDecomposition& d, int n);

/// Structural identity string: AHU-style encoding from the root with
/// children ordered by their encodings. Equal strings iff the labeled
/// rooted decompositions are equal.
std::string encode(const RootedTreeDecomposition& d);

/// Applies a vertex relabeling to every bag (tree shape unchanged).
RootedTreeDecomposition relabel(const RootedTreeDecomposition& d,
                                const std::vector<std::pair<int, int>>& mapping);

struct UnrootedTreeDecomposition {
  std::vector<std::vector<int>> bags;
  std::vector<std::pair<int, int>> edges;
};

UnrootedTreeDecomposition unrooted(const RootedTreeDecomposition& d);

/// Roots at the tree center. An edge center is subdivided by a new node
/// whose bag is the intersection of the incident bags, so adhesion sets
/// never change.
RootedTreeDecomposition root_at_center(const UnrootedTreeDecomposition& t);

/// Exact treewidth by dynamic programming over elimination prefixes.
/// Refuses graphs larger than max_vertices with a capacity error; pass
/// the width promise explicitly to the pipeline for larger inputs.
int treewidth_exact(const ColoredGraph& g, int max_vertices = 20);

/// Adds an edge (improvement color) between every non-adjacent pair
/// whose connectivity exceeds k. With k = tw(G) this is the saturation
/// operator: improved graphs have the same tree decompositions and a
/// second application is the identity.
ColoredGraph improve(const ColoredGraph& g, int k, int oracle_limit = 20);

}  // namespace twcanon
