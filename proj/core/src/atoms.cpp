#include "twcanon/atoms.hpp"

#include <algorithm>

#include "twcanon/errors.hpp"

namespace twcanon {

namespace {

// All cliques of size at most c, as sorted vertex sets (includes the
// empty clique).
std::vector<std::vector<int>> cliques_up_to(const ColoredGraph& g, int c) {
  std::vector<std::vector<int>> out = {{}};
  std::vector<std::vector<int>> layer = {{}};
  for (int size = 1; size <= c; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& q : layer) {
      const int lo = q.empty() ? -1 : q.back();
      for (int v : g.vertices()) {
        if (v <= lo) continue;
        bool ok = true;
        for (int u : q)
          if (!g.adjacent(u, v)) {
            ok = false;
            break;
          }
        if (!ok) continue;
        auto ext = q;
        ext.push_back(v);
        next.push_back(ext);
      }
    }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

int component_of(const std::vector<std::vector<int>>& comps, int v) {
  for (size_t i = 0; i < comps.size(); ++i)
    if (set_contains(comps[i], v)) return static_cast<int>(i);
  return -1;
}

}  // namespace

bool is_c_inseparable(const ColoredGraph& g, int u, int v, int c) {
  if (u == v) throw domain_error("is_c_inseparable: u == v");
  if (g.adjacent(u, v)) return true;
  for (const auto& q : cliques_up_to(g, c)) {
    if (set_contains(q, u) || set_contains(q, v)) continue;
    auto comps = components(g, q);
    if (component_of(comps, u) != component_of(comps, v)) return false;
  }
  return true;
}

bool is_c_inseparable_set(const ColoredGraph& g, const std::vector<int>& s, int c) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!is_c_inseparable(g, s[i], s[j], c)) return false;
  return true;
}

bool is_c_atom(const ColoredGraph& g, int c) {
  if (g.vertex_count() == 0) return false;
  for (const auto& q : cliques_up_to(g, c))
    if (components(g, q).size() > 1) return false;
  return true;
}

AtomFamily maximal_c_atoms(const ColoredGraph& g, int c) {
  AtomFamily fam;
  fam.c = c;
  const auto& vs = g.vertices();
  const int n = g.vertex_count();
  if (n == 0) return fam;

  auto inseparable_with_all = [&](const std::vector<int>& s, int a) {
    for (int x : s)
      if (x != a && !is_c_inseparable(g, x, a, c)) return false;
    return true;
  };

  std::vector<std::vector<int>> found;
  // sets of size <= c that are maximal c-inseparable
  std::vector<std::vector<int>> layer = {{}};
  for (int size = 1; size <= c; ++size) {
    std::vector<std::vector<int>> next;
    for (const auto& s : layer) {
      const int lo = s.empty() ? -1 : s.back();
      for (int v : vs) {
        if (v <= lo) continue;
        if (!inseparable_with_all(s, v)) continue;
        auto ext = s;
        ext.push_back(v);
        next.push_back(ext);
      }
    }
    for (const auto& s : next) {
      bool maximal = true;
      for (int a : vs)
        if (!set_contains(s, a) && inseparable_with_all(s, a)) {
          maximal = false;
          break;
        }
      if (maximal) found.push_back(s);
    }
    layer = std::move(next);
  }
  // closures of c-inseparable sets of size c+1
  for (const auto& s : layer) {
    for (int v : vs) {
      if (!s.empty() && v <= s.back()) continue;
      if (!inseparable_with_all(s, v)) continue;
      auto seed = s;
      seed.push_back(v);
      std::vector<int> closure;
      for (int a : vs)
        if (set_contains(seed, a) || inseparable_with_all(seed, a))
          closure.push_back(a);
      found.push_back(closure);
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  fam.atoms = std::move(found);
  return fam;
}

ColoredGraph chordal_completion_c(const ColoredGraph& g, int c) {
  auto fam = maximal_c_atoms(g, c);
  std::vector<std::tuple<int, int, int>> extra;
  auto es = g.colored_edges();
  std::vector<std::pair<int, int>> added;
  for (const auto& a : fam.atoms)
    for (size_t i = 0; i < a.size(); ++i)
      for (size_t j = i + 1; j < a.size(); ++j)
        if (!g.adjacent(a[i], a[j])) {
          std::pair<int, int> key{a[i], a[j]};
          if (std::find(added.begin(), added.end(), key) == added.end()) {
            added.push_back(key);
            extra.emplace_back(a[i], a[j], kColorEdge);
          }
        }
  return extra.empty() ? g : g.with_edges(extra);
}

std::vector<std::vector<int>> minimum_clique_separators(const ColoredGraph& g, int c) {
  std::vector<std::vector<int>> out;
  for (const auto& q : cliques_up_to(g, c)) {
    auto comps = components(g, q);
    if (comps.size() < 2) continue;
    // inclusion-minimal for at least one separated pair; membership in a
    // component of g - (q \ {v}) only depends on the component in g - q
    bool minimal = false;
    const size_t t = comps.size();
    std::vector<std::vector<int>> merged(q.size());
    for (size_t vi = 0; vi < q.size(); ++vi) {
      auto sub = q;
      sub.erase(sub.begin() + static_cast<long>(vi));
      auto sub_comps = components(g, sub);
      merged[vi].resize(t);
      for (size_t ci = 0; ci < t; ++ci)
        merged[vi][ci] = component_of(sub_comps, comps[ci].front());
    }
    for (size_t a = 0; a < t && !minimal; ++a)
      for (size_t b = a + 1; b < t && !minimal; ++b) {
        bool all_needed = true;
        for (size_t vi = 0; vi < q.size(); ++vi)
          if (merged[vi][a] != merged[vi][b]) {
            all_needed = false;
            break;
          }
        if (all_needed) minimal = true;
      }
    if (minimal) out.push_back(q);
  }
  std::sort(out.begin(), out.end());
  return out;
}

RootedTreeDecomposition atom_tree(const ColoredGraph& g, int c) {
  if (c < 1) throw domain_error("atom_tree: c must be positive");
  if (!is_c_atom(g, c - 1))
    throw contract_error("atom_tree: input is not a (c-1)-atom");
  auto fam = maximal_c_atoms(g, c);
  auto seps = minimum_clique_separators(g, c);

  UnrootedTreeDecomposition t;
  for (const auto& a : fam.atoms) t.bags.push_back(a);
  const int atom_count = static_cast<int>(fam.atoms.size());
  for (const auto& s : seps) t.bags.push_back(s);
  for (int si = 0; si < static_cast<int>(seps.size()); ++si)
    for (int ai = 0; ai < atom_count; ++ai)
      if (is_subset(seps[si], fam.atoms[ai]))
        t.edges.emplace_back(ai, atom_count + si);
  if (t.edges.size() + 1 != t.bags.size())
    throw contract_error("atom_tree: atom/separator incidence is not a tree");
  auto rooted = root_at_center(t);
  if (rooted.node_count() != static_cast<int>(t.bags.size()))
    throw contract_error("atom_tree: center is not a unique node");
  return rooted;
}

namespace {

// Node of minimal depth whose bag contains s; the holders of a clique
// form a connected subtree, so the minimum is unique.
int highest_bag_with(const RootedTreeDecomposition& d, const std::vector<int>& s) {
  auto depth = d.depths();
  int best = -1;
  for (int n = 0; n < d.node_count(); ++n) {
    if (!is_subset(s, d.bags[n])) continue;
    if (best == -1 || depth[n] < depth[best]) best = n;
  }
  if (best == -1)
    throw contract_error("no bag contains the requested set");
  return best;
}

RootedTreeDecomposition decompose_into_atoms(const ColoredGraph& h, int d, int c) {
  if (d >= c || is_clique(h, h.vertices()))
    return single_bag_decomposition(h.vertices());
  RootedTreeDecomposition outer = atom_tree(h, d + 1);
  const int m = outer.node_count();
  std::vector<RootedTreeDecomposition> inner(m);
  for (int x = 0; x < m; ++x)
    inner[x] = decompose_into_atoms(h.induced(outer.bags[x]), d + 1, c);

  UnrootedTreeDecomposition combined;
  std::vector<int> offset(m);
  for (int x = 0; x < m; ++x) {
    offset[x] = static_cast<int>(combined.bags.size());
    for (const auto& b : inner[x].bags) combined.bags.push_back(b);
    for (int i = 0; i < inner[x].node_count(); ++i)
      if (inner[x].parent[i] >= 0)
        combined.edges.emplace_back(offset[x] + inner[x].parent[i], offset[x] + i);
  }
  for (int x = 0; x < m; ++x) {
    const int px = outer.parent[x];
    if (px < 0) continue;
    auto glue = set_intersection(outer.bags[x], outer.bags[px]);
    combined.edges.emplace_back(offset[x] + highest_bag_with(inner[x], glue),
                                offset[px] + highest_bag_with(inner[px], glue));
  }
  return root_at_center(combined);
}

}  // namespace

RootedTreeDecomposition clique_free_decomposition(const ColoredGraph& g, int k) {
  if (k < 0) throw domain_error("clique_free_decomposition: negative k");
  if (!is_connected(g) || g.vertex_count() == 0)
    throw contract_error("clique_free_decomposition: input must be connected");
  return decompose_into_atoms(g, 0, k + 1);
}

}  // namespace twcanon
