#pragma once

#include <utility>

#include "twcanon/graph.hpp"
#include "twcanon/nested.hpp"

namespace twcanon {

/// Edgeless graph on V(g) whose root family encodes E(g): one star per
/// edge, its center bag the edge's endpoints and one leaf bag per other
/// vertex. Used to demonstrate that the nested ordering is only
/// quasi-complete; a complete one would decide general graph
/// isomorphism on these pairs.
struct Remark1Gadget {
  ColoredGraph graph;
  NestedDecomposition decomposition;
};

Remark1Gadget remark1_gadget(const ColoredGraph& g);

}  // namespace twcanon
