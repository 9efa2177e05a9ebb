#include "twcanon/oracle.hpp"

#include <algorithm>
#include <map>

#include "twcanon/errors.hpp"

namespace twcanon {

std::optional<std::vector<std::pair<int, int>>> brute_force_isomorphic(
    const ColoredGraph& g, const ColoredGraph& h, int max_vertices) {
  const int n = g.vertex_count();
  if (n != h.vertex_count()) return std::nullopt;
  if (n > max_vertices)
    throw capacity_error("brute_force_isomorphic: graph too large");
  if (g.edge_count() != h.edge_count()) return std::nullopt;

  auto signature = [](const ColoredGraph& x, int v) {
    std::vector<int> sig;
    for (int w : x.neighbors(v)) sig.push_back(x.color(v, w));
    std::sort(sig.begin(), sig.end());
    return sig;
  };
  const auto& gv = g.vertices();
  const auto& hv = h.vertices();
  {
    std::vector<std::vector<int>> sg, sh;
    for (int v : gv) sg.push_back(signature(g, v));
    for (int v : hv) sh.push_back(signature(h, v));
    auto a = sg, b = sh;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }

  // match vertices in a connectivity-friendly order for early pruning
  std::vector<int> order;
  {
    std::vector<char> used(n, 0);
    for (int start = 0; start < n; ++start) {
      if (used[start]) continue;
      std::vector<int> stack{start};
      used[start] = 1;
      while (!stack.empty()) {
        int i = stack.back();
        stack.pop_back();
        order.push_back(i);
        for (int w : g.neighbors(gv[i])) {
          int j = g.index_of(w);
          if (!used[j]) {
            used[j] = 1;
            stack.push_back(j);
          }
        }
      }
    }
  }

  std::vector<int> image(n, -1);   // g index -> h index
  std::vector<char> taken(n, 0);
  auto degree = [](const ColoredGraph& x, int v) {
    return static_cast<int>(x.neighbors(v).size());
  };

  std::vector<std::pair<int, int>> result;
  auto search = [&](auto&& self, size_t pos) -> bool {
    if (pos == order.size()) return true;
    const int gi = order[pos];
    for (int hi = 0; hi < n; ++hi) {
      if (taken[hi]) continue;
      if (degree(g, gv[gi]) != degree(h, hv[hi])) continue;
      bool ok = true;
      for (size_t prev = 0; prev < pos && ok; ++prev) {
        const int gj = order[prev];
        if (g.color(gv[gi], gv[gj]) != h.color(hv[hi], hv[image[gj]])) ok = false;
      }
      if (!ok) continue;
      image[gi] = hi;
      taken[hi] = 1;
      if (self(self, pos + 1)) return true;
      taken[hi] = 0;
      image[gi] = -1;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  for (int i = 0; i < n; ++i) result.emplace_back(gv[i], hv[image[i]]);
  return result;
}

}  // namespace twcanon
