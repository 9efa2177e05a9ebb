#include "twcanon/gadget.hpp"

namespace twcanon {

Remark1Gadget remark1_gadget(const ColoredGraph& g) {
  auto empty = std::make_shared<ColoredGraph>(
      g.vertices(), std::vector<std::pair<int, int>>{});
  RootedTreeDecomposition base = single_bag_decomposition(g.vertices());
  std::vector<RootedTreeDecomposition> family;
  for (auto [u, v] : g.edges()) {
    RootedTreeDecomposition star;
    star.bags.push_back({std::min(u, v), std::max(u, v)});
    star.parent.push_back(-1);
    star.root = 0;
    for (int w : g.vertices()) {
      if (w == u || w == v) continue;
      star.bags.push_back({w});
      star.parent.push_back(0);
    }
    family.push_back(std::move(star));
  }
  auto nd = make_nested(empty, std::move(base), {std::move(family)});
  return Remark1Gadget{*empty, std::move(nd)};
}

}  // namespace twcanon
