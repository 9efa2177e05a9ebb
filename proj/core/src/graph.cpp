#include "twcanon/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

#include "twcanon/errors.hpp"

namespace twcanon {

namespace {

std::vector<std::tuple<int, int, int>> plain_to_colored(
    const std::vector<std::pair<int, int>>& edges) {
  std::vector<std::tuple<int, int, int>> out;
  out.reserve(edges.size());
  for (auto [u, v] : edges) out.emplace_back(u, v, kColorEdge);
  return out;
}

}  // namespace

ColoredGraph::ColoredGraph(std::vector<int> vertices,
                           const std::vector<std::pair<int, int>>& edges)
    : ColoredGraph(std::move(vertices), plain_to_colored(edges)) {}

ColoredGraph::ColoredGraph(
    std::vector<int> vertices,
    const std::vector<std::tuple<int, int, int>>& colored_edges)
    : verts_(std::move(vertices)) {
  std::sort(verts_.begin(), verts_.end());
  if (std::adjacent_find(verts_.begin(), verts_.end()) != verts_.end())
    throw domain_error("duplicate vertex identifier");
  if (!verts_.empty() && verts_.front() < 0)
    throw domain_error("negative vertex identifier");
  const int n = vertex_count();
  index_.reserve(verts_.size());
  for (int i = 0; i < n; ++i) index_[verts_[i]] = i;
  colors_.assign(static_cast<size_t>(n) * n, kColorNonEdge);
  for (int i = 0; i < n; ++i) colors_[static_cast<size_t>(i) * n + i] = kColorDiagonal;
  adj_.assign(n, {});
  for (auto [u, v, c] : colored_edges) {
    if (u == v) throw domain_error("loop edge");
    const int iu = index_of(u), iv = index_of(v);
    auto& slot = colors_[static_cast<size_t>(iu) * n + iv];
    if (slot != kColorNonEdge) throw domain_error("parallel edge");
    if (c < 1 && c != kColorImprovement && c != kColorDistinguished)
      throw domain_error("edge color must be >= 1");
    slot = c;
    colors_[static_cast<size_t>(iv) * n + iu] = c;
    adj_[iu].push_back(v);
    adj_[iv].push_back(u);
    ++edge_count_;
  }
  finish();
}

void ColoredGraph::finish() {
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
  std::ostringstream os;
  os << "G[";
  for (int v : verts_) os << v << ',';
  os << ';';
  const int n = vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int c = colors_[static_cast<size_t>(i) * n + j];
      if (c != kColorNonEdge) os << verts_[i] << '-' << verts_[j] << ':' << c << ',';
    }
  os << ']';
  enc_ = os.str();
}

int ColoredGraph::index_of(int v) const {
  auto it = index_.find(v);
  if (it == index_.end()) throw domain_error("unknown vertex " + std::to_string(v));
  return it->second;
}

bool ColoredGraph::adjacent(int u, int v) const {
  if (u == v) return false;
  return colors_[static_cast<size_t>(index_of(u)) * vertex_count() + index_of(v)] !=
         kColorNonEdge;
}

int ColoredGraph::color(int u, int v) const {
  return colors_[static_cast<size_t>(index_of(u)) * vertex_count() + index_of(v)];
}

const std::vector<int>& ColoredGraph::neighbors(int v) const {
  return adj_[index_of(v)];
}

std::vector<std::pair<int, int>> ColoredGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  const int n = vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (colors_[static_cast<size_t>(i) * n + j] != kColorNonEdge)
        out.emplace_back(verts_[i], verts_[j]);
  return out;
}

std::vector<std::tuple<int, int, int>> ColoredGraph::colored_edges() const {
  std::vector<std::tuple<int, int, int>> out;
  const int n = vertex_count();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const int c = colors_[static_cast<size_t>(i) * n + j];
      if (c != kColorNonEdge) out.emplace_back(verts_[i], verts_[j], c);
    }
  return out;
}

ColoredGraph ColoredGraph::induced(const std::vector<int>& subset) const {
  std::vector<int> vs = subset;
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  std::vector<std::tuple<int, int, int>> es;
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      const int c = color(vs[i], vs[j]);
      if (c != kColorNonEdge) es.emplace_back(vs[i], vs[j], c);
    }
  return ColoredGraph(std::move(vs), es);
}

ColoredGraph ColoredGraph::with_edge(int u, int v, int color) const {
  return with_edges({{u, v, color}});
}

ColoredGraph ColoredGraph::with_edges(
    const std::vector<std::tuple<int, int, int>>& extra) const {
  auto es = colored_edges();
  for (auto [u, v, c] : extra) {
    if (adjacent(u, v)) throw domain_error("with_edges: pair already adjacent");
    es.emplace_back(u, v, c);
  }
  return ColoredGraph(verts_, es);
}

bool is_separation(const ColoredGraph& g, const std::vector<int>& a,
                   const std::vector<int>& b) {
  std::vector<int> all = set_union(a, b);
  std::vector<int> vs = g.vertices();
  if (all != vs) return false;
  std::vector<int> only_a = set_difference(a, b);
  std::vector<int> only_b = set_difference(b, a);
  for (int u : only_a)
    for (int v : only_b)
      if (g.adjacent(u, v)) return false;
  return true;
}

std::vector<std::vector<int>> components(const ColoredGraph& g,
                                         const std::vector<int>& removed) {
  std::vector<int> rem = removed;
  std::sort(rem.begin(), rem.end());
  std::vector<std::vector<int>> out;
  std::unordered_map<int, bool> seen;
  for (int v : g.vertices())
    if (!set_contains(rem, v)) seen[v] = false;
  for (int v : g.vertices()) {
    auto it = seen.find(v);
    if (it == seen.end() || it->second) continue;
    std::vector<int> comp;
    std::queue<int> q;
    q.push(v);
    it->second = true;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      comp.push_back(u);
      for (int w : g.neighbors(u)) {
        auto jt = seen.find(w);
        if (jt != seen.end() && !jt->second) {
          jt->second = true;
          q.push(w);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

bool is_connected(const ColoredGraph& g) {
  return components(g).size() <= 1;
}

namespace {

// Split-vertex unit-capacity flow network. Vertex v becomes the arc
// in(v) -> out(v) of capacity 1; edges become infinite arcs between
// out and in nodes. Terminals are attached per query kind.
class VertexCutNetwork {
 public:
  explicit VertexCutNetwork(int node_count) : head_(node_count, -1) {}

  int add_node() {
    head_.push_back(-1);
    return static_cast<int>(head_.size()) - 1;
  }

  void add_arc(int from, int to, int cap) {
    arcs_.push_back({to, head_[from], cap});
    head_[from] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = static_cast<int>(arcs_.size()) - 1;
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (true) {
      std::vector<int> pred_arc(head_.size(), -1);
      std::queue<int> q;
      q.push(s);
      pred_arc[s] = -2;
      while (!q.empty() && pred_arc[t] == -1) {
        int u = q.front();
        q.pop();
        for (int a = head_[u]; a != -1; a = arcs_[a].next) {
          if (arcs_[a].cap > 0 && pred_arc[arcs_[a].to] == -1) {
            pred_arc[arcs_[a].to] = a;
            q.push(arcs_[a].to);
          }
        }
      }
      if (pred_arc[t] == -1) return total;
      for (int v = t; v != s;) {
        int a = pred_arc[v];
        arcs_[a].cap -= 1;
        arcs_[a ^ 1].cap += 1;
        v = arcs_[a ^ 1].to;
      }
      ++total;
    }
  }

  std::vector<char> residual_reachable(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::queue<int> q;
    q.push(s);
    seen[s] = 1;
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int a = head_[u]; a != -1; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          q.push(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    int cap;
  };
  std::vector<int> head_;
  std::vector<Arc> arcs_;
};

constexpr int kArcInf = 1 << 28;

}  // namespace

int connectivity(const ColoredGraph& g, int x, int y) {
  if (x == y) throw domain_error("connectivity: x == y");
  g.index_of(x);
  g.index_of(y);
  if (g.adjacent(x, y)) return kInfinity;
  return static_cast<int>(leftmost_min_vertex_separator(g, x, y).size());
}

std::vector<int> leftmost_min_vertex_separator(const ColoredGraph& g, int x, int y) {
  if (x == y) throw domain_error("vertex separator: x == y");
  const int n = g.vertex_count();
  const int ix = g.index_of(x), iy = g.index_of(y);
  // nodes: in(v) = 2v, out(v) = 2v+1
  VertexCutNetwork net(2 * n);
  for (int i = 0; i < n; ++i) net.add_arc(2 * i, 2 * i + 1, 1);
  for (auto [u, v] : g.edges()) {
    const int iu = g.index_of(u), iv = g.index_of(v);
    if ((iu == ix && iv == iy) || (iu == iy && iv == ix)) continue;  // uncuttable
    net.add_arc(2 * iu + 1, 2 * iv, kArcInf);
    net.add_arc(2 * iv + 1, 2 * iu, kArcInf);
  }
  net.max_flow(2 * ix + 1, 2 * iy);
  auto reach = net.residual_reachable(2 * ix + 1);
  std::vector<int> cut;
  for (int i = 0; i < n; ++i)
    if (i != ix && i != iy && reach[2 * i] && !reach[2 * i + 1])
      cut.push_back(g.vertices()[i]);
  return cut;
}

SetSeparation leftmost_min_separation(const ColoredGraph& g,
                                      const std::vector<int>& x,
                                      const std::vector<int>& y) {
  const int n = g.vertex_count();
  VertexCutNetwork net(2 * n);
  for (int i = 0; i < n; ++i) net.add_arc(2 * i, 2 * i + 1, 1);
  for (auto [u, v] : g.edges()) {
    const int iu = g.index_of(u), iv = g.index_of(v);
    net.add_arc(2 * iu + 1, 2 * iv, kArcInf);
    net.add_arc(2 * iv + 1, 2 * iu, kArcInf);
  }
  const int s = net.add_node();
  const int t = net.add_node();
  for (int v : x) net.add_arc(s, 2 * g.index_of(v), kArcInf);
  for (int v : y) net.add_arc(2 * g.index_of(v) + 1, t, kArcInf);
  net.max_flow(s, t);
  auto reach = net.residual_reachable(s);
  SetSeparation out;
  for (int i = 0; i < n; ++i) {
    if (reach[2 * i] && !reach[2 * i + 1]) out.separator.push_back(g.vertices()[i]);
    if (reach[2 * i + 1]) out.a_side.push_back(g.vertices()[i]);
  }
  out.a_side = set_union(out.a_side, out.separator);
  return out;
}

std::vector<int> leftmost_min_separator(const ColoredGraph& g,
                                        const std::vector<int>& x,
                                        const std::vector<int>& y) {
  return leftmost_min_separation(g, x, y).separator;
}

int set_connectivity(const ColoredGraph& g, const std::vector<int>& x,
                     const std::vector<int>& y) {
  if (x.empty() || y.empty()) throw domain_error("set_connectivity: empty side");
  return static_cast<int>(leftmost_min_separation(g, x, y).separator.size());
}

bool is_clique(const ColoredGraph& g, const std::vector<int>& s) {
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = i + 1; j < s.size(); ++j)
      if (!g.adjacent(s[i], s[j])) return false;
  return true;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> set_intersection(const std::vector<int>& a,
                                  const std::vector<int>& b) {
  std::vector<int> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::back_inserter(out));
  return out;
}

std::vector<int> set_difference(const std::vector<int>& a,
                                const std::vector<int>& b) {
  std::vector<int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::back_inserter(out));
  return out;
}

bool set_contains(const std::vector<int>& sorted, int v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

bool is_subset(const std::vector<int>& a, const std::vector<int>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace twcanon
