#pragma once

#include <vector>

#include "twcanon/graph.hpp"
#include "twcanon/treedec.hpp"

namespace twcanon {

/// Vertex sets of the maximal c-atoms of a graph: maximal induced
/// subgraphs without clique separators of size at most c. Pairwise
/// intersections are cliques of at most c vertices.
struct AtomFamily {
  std::vector<std::vector<int>> atoms;  // sorted sets, sorted list
  int c = 0;
};

/// True iff no clique of size at most c separates u from v. Adjacent
/// pairs are never separable.
bool is_c_inseparable(const ColoredGraph& g, int u, int v, int c);

bool is_c_inseparable_set(const ColoredGraph& g, const std::vector<int>& s, int c);

/// True iff g (as a whole) has no clique separator of size at most c.
bool is_c_atom(const ColoredGraph& g, int c);

/// All maximal c-inseparable vertex sets: sets of size at most c that
/// are maximal, plus the unique closures of c-inseparable sets of size
/// c+1.
AtomFamily maximal_c_atoms(const ColoredGraph& g, int c);

/// Replaces every maximal c-atom by a clique on its vertices. Maximal
/// c-atoms and clique separators of size at most c are unchanged by
/// this operation.
ColoredGraph chordal_completion_c(const ColoredGraph& g, int c);

/// Inclusion-minimal cliques of size at most c that separate some
/// vertex pair.
std::vector<std::vector<int>> minimum_clique_separators(const ColoredGraph& g, int c);

/// Tree over the maximal c-atoms and the minimum clique separators of
/// size at most c, an atom adjacent to every separator it contains,
/// rooted at the unique center. Requires g to be a (c-1)-atom.
RootedTreeDecomposition atom_tree(const ColoredGraph& g, int c);

/// Iterated atom-tree refinement down to c = k+1: a rooted tree
/// decomposition whose bags induce subgraphs without clique separators
/// of any size and whose adhesion sets are cliques. Requires g
/// connected with tw(g) <= k.
RootedTreeDecomposition clique_free_decomposition(const ColoredGraph& g, int k);

}  // namespace twcanon
