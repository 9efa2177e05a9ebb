#pragma once

#include <memory>
#include <string>
#include <vector>

#include "twcanon/atom_decomp.hpp"
#include "twcanon/graph.hpp"
#include "twcanon/treedec.hpp"

namespace twcanon {

/// Tree decomposition whose nodes each carry a family of candidate
/// decompositions of their torso. Nodes with empty families are the
/// "marked" bags introduced by refinement; they always form a connected
/// top part of the tree. Instances are immutable once built.
struct NestedDecomposition {
  std::shared_ptr<const ColoredGraph> graph;
  RootedTreeDecomposition base;
  std::vector<std::vector<RootedTreeDecomposition>> families;

  // filled by make_nested
  std::vector<long long> subtree_size;
  long long total_size = 0;
  std::string enc;

  long long size() const { return total_size; }
  const std::vector<RootedTreeDecomposition>& root_family() const {
    return families[base.root];
  }
};

/// Validates the structure (families decompose torsos, marked bags form
/// a root-connected subtree), fills sizes and the identity encoding.
NestedDecomposition make_nested(std::shared_ptr<const ColoredGraph> graph,
                                RootedTreeDecomposition base,
                                std::vector<std::vector<RootedTreeDecomposition>> families);

int nested_width(const NestedDecomposition& nd);

/// Subset of the root bag usable as a comparison anchor: the whole root
/// bag when the root family is empty, otherwise a set contained in some
/// bag of every family member.
struct RootSet {
  std::vector<int> vertices;                 // sorted
  std::vector<int> ordering;                 // empty when unordered
};

bool is_root_set(const NestedDecomposition& nd, const std::vector<int>& m);

/// Replaces the root bag by family member D: former children reattach
/// to the highest bag of D holding their adhesion set, a fresh root bag
/// holding sigma's vertices attaches to the highest bag of D holding
/// all of sigma, and the result is rerooted there. D's bags and the new
/// root get empty families. Strictly decreases the size.
NestedDecomposition refine(const NestedDecomposition& nd, int member,
                           const std::vector<int>& sigma);

/// Nested decomposition rooted at a child of the current root: the
/// subtree, its families, and the subgraph induced by its bags.
NestedDecomposition subdecomposition(const NestedDecomposition& nd, int child);

struct SpecialChildren {
  std::vector<int> children;          // the special prefix, largest first
  std::vector<int> attachment_clique;
};

/// Maximal prefix of the children of n (sorted by decreasing
/// subdecomposition size, ties by bag) whose adhesion-set union is a
/// clique, cut only where the size strictly drops.
SpecialChildren special_children(const NestedDecomposition& nd, int n);

/// Integer polynomial, coefficients by ascending degree.
using Polynomial = std::vector<long long>;

/// p(m) = ((k+1)(m+1))^2, the family bound met by the pipeline.
Polynomial default_family_bound(int k);

/// Checks |family(n)| <= p(|D|/|D_c|) for every node n and non-special
/// child c, with the ratio compared exactly.
bool is_p_bounded(const NestedDecomposition& nd, const Polynomial& p);

struct NestedConfig {
  AtomDecompConfig atom;
  int oracle_limit = 20;
};

/// The isomorphism-invariant nested decomposition of a connected graph
/// with tw(g) <= k: improve, decompose into clique-separator-free bags,
/// then per bag either the trivial family (small bags) or bounded-width
/// decompositions anchored at the non-edges selected through the
/// special-children analysis.
NestedDecomposition invariant_nested_decomposition(const ColoredGraph& g, int k,
                                                   const NestedConfig& config = {});

}  // namespace twcanon
