#include "twcanon/treedec.hpp"

#include <algorithm>
#include <bit>
#include <queue>
#include <sstream>

#include "twcanon/errors.hpp"

namespace twcanon {

std::vector<std::vector<int>> RootedTreeDecomposition::children_lists() const {
  std::vector<std::vector<int>> ch(bags.size());
  for (int i = 0; i < node_count(); ++i)
    if (parent[i] >= 0) ch[parent[i]].push_back(i);
  return ch;
}

std::vector<int> RootedTreeDecomposition::depths() const {
  std::vector<int> depth(bags.size(), -1);
  if (root < 0) return depth;
  depth[root] = 0;
  auto ch = children_lists();
  std::queue<int> q;
  q.push(root);
  while (!q.empty()) {
    int n = q.front();
    q.pop();
    for (int c : ch[n]) {
      depth[c] = depth[n] + 1;
      q.push(c);
    }
  }
  return depth;
}

std::vector<int> RootedTreeDecomposition::covered_vertices() const {
  std::vector<int> all;
  for (const auto& b : bags) all.insert(all.end(), b.begin(), b.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  return all;
}

RootedTreeDecomposition single_bag_decomposition(std::vector<int> bag) {
  std::sort(bag.begin(), bag.end());
  RootedTreeDecomposition d;
  d.bags.push_back(std::move(bag));
  d.parent.push_back(-1);
  d.root = 0;
  return d;
}

namespace {

std::string join(const std::vector<int>& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  return os.str();
}

bool tree_shape_ok(const RootedTreeDecomposition& d) {
  const int m = d.node_count();
  if (m == 0) return false;
  if (d.root < 0 || d.root >= m || d.parent[d.root] != -1) return false;
  int roots = 0;
  for (int i = 0; i < m; ++i) {
    if (d.parent[i] == -1) ++roots;
    else if (d.parent[i] < 0 || d.parent[i] >= m) return false;
  }
  if (roots != 1) return false;
  auto depth = d.depths();
  return std::all_of(depth.begin(), depth.end(), [](int x) { return x >= 0; });
}

}  // namespace

ValidationResult validate(const ColoredGraph& g, const RootedTreeDecomposition& d) {
  if (!tree_shape_ok(d)) return {false, "parent map is not a tree"};
  for (const auto& bag : d.bags)
    for (int v : bag)
      if (!g.has_vertex(v))
        return {false, "bag references unknown vertex " + std::to_string(v)};
  auto ch = d.children_lists();
  // connectedness: the nodes holding v must be nonempty and form one subtree
  for (int v : g.vertices()) {
    std::vector<int> holders;
    for (int n = 0; n < d.node_count(); ++n)
      if (set_contains(d.bags[n], v)) holders.push_back(n);
    if (holders.empty())
      return {false, "connectedness violated: vertex " + std::to_string(v) +
                         " is in no bag"};
    // count holder nodes whose parent also holds v; a connected subtree of a
    // tree has exactly |holders|-1 such nodes
    int linked = 0;
    for (int n : holders)
      if (d.parent[n] >= 0 && set_contains(d.bags[d.parent[n]], v)) ++linked;
    if (linked != static_cast<int>(holders.size()) - 1)
      return {false, "connectedness violated: vertex " + std::to_string(v) +
                         " induces a disconnected node set"};
  }
  for (auto [u, v] : g.edges()) {
    bool covered = false;
    for (const auto& bag : d.bags)
      if (set_contains(bag, u) && set_contains(bag, v)) {
        covered = true;
        break;
      }
    if (!covered)
      return {false, "covering violated: edge {" + std::to_string(u) + "," +
                         std::to_string(v) + "} is in no bag"};
  }
  return {};
}

int width(const RootedTreeDecomposition& d) {
  int w = -1;
  for (const auto& b : d.bags) w = std::max(w, static_cast<int>(b.size()) - 1);
  return w;
}

std::vector<int> adhesion(const RootedTreeDecomposition& d, int n, int m) {
  if (n < 0 || n >= d.node_count() || m < 0 || m >= d.node_count())
    throw domain_error("adhesion: unknown node");
  if (d.parent[n] != m && d.parent[m] != n)
    throw domain_error("adhesion: nodes are not adjacent");
  return set_intersection(d.bags[n], d.bags[m]);
}

ColoredGraph torso(const ColoredGraph& g, const RootedTreeDecomposition& d, int n) {
  if (n < 0 || n >= d.node_count()) throw domain_error("torso: unknown node");
  ColoredGraph t = g.induced(d.bags[n]);
  std::vector<std::tuple<int, int, int>> extra;
  auto add_clique = [&](const std::vector<int>& s) {
    for (size_t i = 0; i < s.size(); ++i)
      for (size_t j = i + 1; j < s.size(); ++j)
        if (!t.adjacent(s[i], s[j])) {
          bool dup = false;
          for (auto [a, b, c] : extra)
            if ((a == s[i] && b == s[j]) || (a == s[j] && b == s[i])) dup = true;
          if (!dup) extra.emplace_back(s[i], s[j], kColorEdge);
        }
  };
  if (d.parent[n] >= 0) add_clique(adhesion(d, n, d.parent[n]));
  const auto ch = d.children_lists();
  for (int c : ch[n]) add_clique(adhesion(d, n, c));
  return extra.empty() ? t : t.with_edges(extra);
}

std::string encode(const RootedTreeDecomposition& d) {
  std::vector<std::vector<int>> ch = d.children_lists();
  std::vector<std::string> memo(d.node_count());
  // post-order without recursion: process nodes by decreasing depth
  auto depth = d.depths();
  std::vector<int> order(d.node_count());
  for (int i = 0; i < d.node_count(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  for (int n : order) {
    std::vector<std::string> parts;
    for (int c : ch[n]) parts.push_back(memo[c]);
    std::sort(parts.begin(), parts.end());
    std::string s = "(" + join(d.bags[n]);
    for (auto& p : parts) s += "|" + p;
    s += ")";
    memo[n] = std::move(s);
  }
  return memo[d.root];
}

RootedTreeDecomposition relabel(const RootedTreeDecomposition& d,
                                const std::vector<std::pair<int, int>>& mapping) {
  std::unordered_map<int, int> m;
  for (auto [from, to] : mapping) m[from] = to;
  RootedTreeDecomposition out = d;
  for (auto& bag : out.bags) {
    for (int& v : bag) {
      auto it = m.find(v);
      if (it != m.end()) v = it->second;
    }
    std::sort(bag.begin(), bag.end());
  }
  if (out.origin_pair) {
    auto [u, v] = *out.origin_pair;
    auto iu = m.find(u), iv = m.find(v);
    int nu = iu == m.end() ? u : iu->second;
    int nv = iv == m.end() ? v : iv->second;
    out.origin_pair = std::minmax(nu, nv);
  }
  return out;
}

UnrootedTreeDecomposition unrooted(const RootedTreeDecomposition& d) {
  UnrootedTreeDecomposition t;
  t.bags = d.bags;
  for (int i = 0; i < d.node_count(); ++i)
    if (d.parent[i] >= 0) t.edges.emplace_back(d.parent[i], i);
  return t;
}

RootedTreeDecomposition root_at_center(const UnrootedTreeDecomposition& t) {
  const int m = static_cast<int>(t.bags.size());
  if (m == 0) throw domain_error("root_at_center: empty tree");
  std::vector<std::vector<int>> nb(m);
  for (auto [a, b] : t.edges) {
    nb[a].push_back(b);
    nb[b].push_back(a);
  }
  // peel leaves until one node or one edge remains
  std::vector<int> degree(m);
  std::vector<char> alive(m, 1);
  for (int i = 0; i < m; ++i) degree[i] = static_cast<int>(nb[i].size());
  int remaining = m;
  std::vector<int> frontier;
  for (int i = 0; i < m; ++i)
    if (degree[i] <= 1) frontier.push_back(i);
  while (remaining > 2) {
    std::vector<int> next;
    for (int v : frontier) {
      if (!alive[v]) continue;
      alive[v] = 0;
      --remaining;
      for (int u : nb[v])
        if (alive[u] && --degree[u] == 1) next.push_back(u);
    }
    frontier = std::move(next);
    if (frontier.empty() && remaining > 2)
      throw domain_error("root_at_center: input is not a tree");
  }
  std::vector<int> center;
  for (int i = 0; i < m; ++i)
    if (alive[i]) center.push_back(i);

  RootedTreeDecomposition out;
  out.bags = t.bags;
  int root;
  std::vector<std::vector<int>> adj = nb;
  if (center.size() == 1) {
    root = center[0];
  } else {
    // edge center: subdivide with the intersection bag
    int a = center[0], b = center[1];
    out.bags.push_back(set_intersection(t.bags[a], t.bags[b]));
    root = static_cast<int>(out.bags.size()) - 1;
    adj.push_back({a, b});
    auto cut = [&](std::vector<int>& list, int was, int now) {
      for (int& x : list)
        if (x == was) x = now;
    };
    cut(adj[a], b, root);
    cut(adj[b], a, root);
  }
  out.parent.assign(out.bags.size(), -1);
  out.root = root;
  std::vector<char> seen(out.bags.size(), 0);
  std::queue<int> q;
  q.push(root);
  seen[root] = 1;
  while (!q.empty()) {
    int n = q.front();
    q.pop();
    for (int c : adj[n])
      if (!seen[c]) {
        seen[c] = 1;
        out.parent[c] = n;
        q.push(c);
      }
  }
  if (!std::all_of(seen.begin(), seen.end(), [](char c) { return c; }))
    throw domain_error("root_at_center: input is not connected");
  return out;
}

int treewidth_exact(const ColoredGraph& g, int max_vertices) {
  const int n = g.vertex_count();
  if (n > max_vertices || n > 25)
    throw capacity_error(
        "treewidth_exact: graph too large; pass the width bound k explicitly");
  if (n == 0) return -1;
  std::vector<uint32_t> adj(n, 0);
  for (auto [u, v] : g.edges()) {
    adj[g.index_of(u)] |= 1u << g.index_of(v);
    adj[g.index_of(v)] |= 1u << g.index_of(u);
  }
  // q(S, v): vertices outside S u {v} reachable from v through S
  auto q_value = [&](uint32_t s, int v) {
    uint32_t seen = (1u << v);
    uint32_t frontier = adj[v] & ~seen;
    uint32_t outside = 0;
    while (frontier) {
      seen |= frontier;
      outside |= frontier & ~s;
      uint32_t inside = frontier & s;
      uint32_t nxt = 0;
      while (inside) {
        int w = std::countr_zero(inside);
        inside &= inside - 1;
        nxt |= adj[w];
      }
      frontier = nxt & ~seen;
    }
    return std::popcount(outside & ~(1u << v));
  };
  const uint32_t full = n == 32 ? ~0u : (1u << n) - 1;
  std::vector<int8_t> f(full + 1, 0);
  for (uint32_t s = 1; s <= full; ++s) {
    int best = n;
    for (uint32_t rest = s; rest;) {
      int v = std::countr_zero(rest);
      rest &= rest - 1;
      const uint32_t prev = s & ~(1u << v);
      best = std::min(best, std::max(static_cast<int>(f[prev]), q_value(prev, v)));
    }
    f[s] = static_cast<int8_t>(best);
  }
  return f[full];
}

ColoredGraph improve(const ColoredGraph& g, int k, int oracle_limit) {
  if (k < 0) throw domain_error("improve: negative width bound");
  if (g.vertex_count() <= oracle_limit && treewidth_exact(g, oracle_limit) > k)
    throw contract_error("improve: k is below the actual treewidth");
  std::vector<std::tuple<int, int, int>> extra;
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      const int kappa = connectivity(g, vs[i], vs[j]);
      if (kappa != kInfinity && kappa > k)
        extra.emplace_back(vs[i], vs[j], kColorImprovement);
    }
  return extra.empty() ? g : g.with_edges(extra);
}

}  // namespace twcanon
