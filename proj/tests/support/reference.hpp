#pragma once

// Independent brute-force oracles for the unit and acceptance suites.
// Everything here enumerates exhaustively and never calls the code
// paths it is used to check.

#include <optional>
#include <utility>
#include <vector>

#include "twcanon/graph.hpp"
#include "twcanon/treedec.hpp"

namespace twcanon::reference {

// all subsets of the given sorted pool
std::vector<std::vector<int>> all_subsets(const std::vector<int>& pool);

// minimum |S| over S with x, y outside S and in different components
int vertex_connectivity(const ColoredGraph& g, int x, int y);

// S is an (X, Y)-separator when no component of g - S meets both X\S
// and Y\S
bool is_set_separator(const ColoredGraph& g, const std::vector<int>& s,
                      const std::vector<int>& x, const std::vector<int>& y);
int set_connectivity(const ColoredGraph& g, const std::vector<int>& x,
                     const std::vector<int>& y);

// all minimum-size (X, Y)-separators with their minimal A-sides; the
// leftmost one is the unique separator whose A-side is contained in all
// other minimum separators' A-sides
std::optional<std::vector<int>> leftmost_min_separator(const ColoredGraph& g,
                                                       const std::vector<int>& x,
                                                       const std::vector<int>& y);

// maximal c-inseparable sets by full subset enumeration
std::vector<std::vector<int>> maximal_c_inseparable_sets(const ColoredGraph& g,
                                                         int c);

// clique separators of size at most c (not necessarily minimal)
std::vector<std::vector<int>> clique_separators(const ColoredGraph& g, int c);

// cliques of size at most c that are inclusion-minimal separators of
// some vertex pair
std::vector<std::vector<int>> minimum_clique_separators(const ColoredGraph& g,
                                                        int c);

// branch-and-bound over elimination orderings; independent of the
// subset-DP treewidth oracle
int treewidth_branch_and_bound(const ColoredGraph& g);

// tree decomposition induced by an elimination ordering of minimum
// width, built from the branch-and-bound search
RootedTreeDecomposition decomposition_from_elimination(const ColoredGraph& g);

// true when the bag's induced subgraph has a clique separator of any size
bool has_clique_separator(const ColoredGraph& g);

}  // namespace twcanon::reference
