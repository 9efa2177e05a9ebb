#include "twcanon/generator.hpp"

#include <algorithm>
#include <random>

#include "twcanon/errors.hpp"

namespace twcanon {

namespace {

// std::uniform_* distributions are implementation-defined; draw bits
// directly so seeds reproduce across standard libraries.
uint64_t bounded(std::mt19937_64& rng, uint64_t n) { return rng() % n; }

double unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

ColoredGraph random_partial_ktree(int n, int k, double keep, uint64_t seed) {
  if (n < k + 1) throw domain_error("random_partial_ktree: n must be >= k+1");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) edges.emplace_back(i, j);
  // attachment cliques of size k
  std::vector<std::vector<int>> cliques;
  for (int skip = 0; skip <= k; ++skip) {
    std::vector<int> c;
    for (int i = 0; i <= k; ++i)
      if (i != skip) c.push_back(i);
    if (static_cast<int>(c.size()) == k) cliques.push_back(c);
  }
  if (k == 0) cliques.push_back({});
  for (int v = k + 1; v < n; ++v) {
    const auto base = cliques[bounded(rng, cliques.size())];
    for (int u : base) edges.emplace_back(u, v);
    for (size_t skip = 0; skip < base.size(); ++skip) {
      std::vector<int> c;
      for (size_t i = 0; i < base.size(); ++i)
        if (i != skip) c.push_back(base[i]);
      c.push_back(v);
      std::sort(c.begin(), c.end());
      cliques.push_back(std::move(c));
    }
    if (k == 0) cliques.push_back({});
  }
  std::sort(edges.begin(), edges.end());
  std::vector<std::pair<int, int>> kept;
  for (auto e : edges)
    if (unit(rng) < keep) kept.push_back(e);
  std::vector<int> verts(n);
  for (int i = 0; i < n; ++i) verts[i] = i;
  return ColoredGraph(verts, kept);
}

PermutedGraph random_relabeling(const ColoredGraph& g, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<int> target = g.vertices();
  for (size_t i = target.size(); i > 1; --i)
    std::swap(target[i - 1], target[bounded(rng, i)]);
  PermutedGraph out;
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i) out.mapping.emplace_back(vs[i], target[i]);
  std::vector<std::tuple<int, int, int>> edges;
  std::unordered_map<int, int> to;
  for (auto [a, b] : out.mapping) to[a] = b;
  for (auto [u, v, c] : g.colored_edges()) edges.emplace_back(to[u], to[v], c);
  out.graph = ColoredGraph(target, edges);
  return out;
}

}  // namespace twcanon
