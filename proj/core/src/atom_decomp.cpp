#include "twcanon/atom_decomp.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <sstream>

#include "twcanon/atoms.hpp"
#include "twcanon/errors.hpp"

namespace twcanon {

std::vector<int> GraphWithInterface::interior() const {
  return set_difference(graph.vertices(), interface);
}

GraphWithInterface make_graph_with_interface(ColoredGraph h,
                                             std::vector<int> interface) {
  std::sort(interface.begin(), interface.end());
  for (int v : interface)
    if (!h.has_vertex(v))
      throw contract_error("graph with interface: boundary vertex missing");
  GraphWithInterface gi{std::move(h), std::move(interface)};
  auto inside = gi.interior();
  if (!inside.empty()) {
    if (components(gi.graph, gi.interface).size() != 1)
      throw contract_error("graph with interface: interior is disconnected");
    std::vector<int> touched;
    for (int v : inside)
      for (int w : gi.graph.neighbors(v))
        if (set_contains(gi.interface, w)) touched.push_back(w);
    std::sort(touched.begin(), touched.end());
    touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
    if (touched != gi.interface)
      throw contract_error("graph with interface: boundary is not tight");
  }
  return gi;
}

namespace {

std::vector<std::vector<int>> subsets_of_size(const std::vector<int>& pool, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > static_cast<int>(pool.size())) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<int> s(k);
    for (int i = 0; i < k; ++i) s[i] = pool[idx[i]];
    out.push_back(std::move(s));
    int i = k - 1;
    while (i >= 0 && idx[i] == static_cast<int>(pool.size()) - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

}  // namespace

std::vector<int> sep_s(const GraphWithInterface& gi, int s, int tw) {
  return sep_s(gi.graph, gi.interface, s, tw);
}

std::vector<int> sep_s(const ColoredGraph& h, const std::vector<int>& boundary,
                       int s, int tw) {
  std::vector<int> out = boundary;
  if (static_cast<int>(boundary.size()) <= s) {
    // the union ranges over ordered pairs: sep(x, y) and sep(y, x)
    // differ in general, and only the symmetric union is invariant
    for (size_t i = 0; i < boundary.size(); ++i)
      for (size_t j = 0; j < boundary.size(); ++j) {
        if (i == j) continue;
        const int kappa = connectivity(h, boundary[i], boundary[j]);
        if (kappa == kInfinity || kappa > tw) continue;
        out = set_union(out,
                        leftmost_min_vertex_separator(h, boundary[i], boundary[j]));
      }
    return out;
  }
  const auto sides = subsets_of_size(boundary, tw + 1);
  for (size_t i = 0; i < sides.size(); ++i)
    for (size_t j = 0; j < sides.size(); ++j) {
      if (i == j) continue;
      if (!set_intersection(sides[i], sides[j]).empty()) continue;
      auto sep = leftmost_min_separation(h, sides[i], sides[j]);
      if (static_cast<int>(sep.separator.size()) <= tw)
        out = set_union(out, sep.separator);
    }
  return out;
}

std::vector<GraphWithInterface> split_at(const GraphWithInterface& gi,
                                         const std::vector<int>& s) {
  if (!is_subset(gi.interface, s))
    throw contract_error("split_at: separator must cover the interface");
  std::vector<GraphWithInterface> out;
  for (const auto& comp : components(gi.graph, s)) {
    std::vector<int> boundary;
    for (int v : comp)
      for (int w : gi.graph.neighbors(v))
        if (set_contains(s, w)) boundary.push_back(w);
    std::sort(boundary.begin(), boundary.end());
    boundary.erase(std::unique(boundary.begin(), boundary.end()), boundary.end());
    out.push_back(make_graph_with_interface(
        gi.graph.induced(set_union(comp, boundary)), boundary));
  }
  return out;
}

std::vector<std::vector<int>> DescriptorDecomposition::children_lists() const {
  std::vector<std::vector<int>> ch(labels.size());
  for (int i = 0; i < node_count(); ++i)
    if (parent[i] >= 0) ch[parent[i]].push_back(i);
  return ch;
}

ValidationResult validate(const DescriptorDecomposition& dd) {
  if (dd.node_count() == 0) return {false, "empty descriptor decomposition"};
  auto ch = dd.children_lists();
  for (int n = 0; n < dd.node_count(); ++n) {
    const auto& parent_label = dd.labels[n];
    const auto pv = parent_label.graph.vertices();
    const auto pint = parent_label.interior();
    std::vector<std::vector<int>> interiors;
    for (int c : ch[n]) {
      const auto& child = dd.labels[c];
      const auto cv = child.graph.vertices();
      const auto cint = child.interior();
      if (!is_subset(cv, pv) || !is_subset(cint, pint))
        return {false, "child does not shrink (property 1)"};
      if (cv == pv && cint == pint)
        return {false, "no inclusion is proper (property 1)"};
      if (set_intersection(cv, pint).empty())
        return {false, "child misses the interior (property 2)"};
      interiors.push_back(cint);
    }
    for (size_t i = 0; i < interiors.size(); ++i)
      for (size_t j = i + 1; j < interiors.size(); ++j)
        if (!set_intersection(interiors[i], interiors[j]).empty())
          return {false, "child interiors overlap (property 3)"};
    for (auto [u, v] : parent_label.graph.edges()) {
      if (set_contains(parent_label.interface, u) &&
          set_contains(parent_label.interface, v))
        continue;
      bool covered = false;
      for (int c : ch[n]) {
        if (dd.labels[c].graph.has_vertex(u) && dd.labels[c].graph.has_vertex(v)) {
          covered = true;
          break;
        }
      }
      if (!covered && !ch[n].empty())
        return {false, "edge not covered by interface or children (property 4)"};
      if (!covered && ch[n].empty() &&
          !(set_contains(parent_label.interface, u) &&
            set_contains(parent_label.interface, v)))
        return {false, "leaf carries an edge outside its interface (property 4)"};
    }
  }
  return {};
}

namespace {

bool is_improved_for(const ColoredGraph& g, int k) {
  const auto& vs = g.vertices();
  for (size_t i = 0; i < vs.size(); ++i)
    for (size_t j = i + 1; j < vs.size(); ++j) {
      if (g.adjacent(vs[i], vs[j])) continue;
      const int kappa = connectivity(g, vs[i], vs[j]);
      if (kappa != kInfinity && kappa > k) return false;
    }
  return true;
}

std::string describe(const GraphWithInterface& gi) {
  std::ostringstream os;
  os << "(|V|=" << gi.graph.vertex_count() << ", I={";
  for (int v : gi.interface) os << v << ',';
  os << "})";
  return os.str();
}

DescriptorDecomposition build_once(const ColoredGraph& g, std::pair<int, int> uv,
                                   int k, const AtomDecompConfig& cfg) {
  DescriptorDecomposition dd;
  dd.origin_pair = uv;
  dd.root = 0;
  dd.labels.push_back(make_graph_with_interface(g, {}));
  dd.parent.push_back(-1);

  std::map<std::pair<std::vector<int>, std::vector<int>>, int> seen;
  std::queue<int> work;

  auto add_child = [&](int parent, GraphWithInterface gi) {
    auto key = std::make_pair(gi.interior(), gi.interface);
    auto it = seen.find(key);
    if (it != seen.end())
      throw contract_error("descriptor node reached from two parents");
    const int id = dd.node_count();
    seen.emplace(std::move(key), id);
    dd.labels.push_back(std::move(gi));
    dd.parent.push_back(parent);
    const auto& label = dd.labels[id];
    if (!label.interior().empty()) {
      if (static_cast<int>(label.interface.size()) > cfg.medium(k))
        throw contract_error("interface exceeds the medium bound at " +
                             describe(label));
      if (is_clique(label.graph, label.interface))
        throw contract_error("interface degenerated to a clique at " +
                             describe(label));
      work.push(id);
    }
    return id;
  };

  std::vector<int> pair_set{std::min(uv.first, uv.second),
                            std::max(uv.first, uv.second)};
  for (const auto& comp : components(g, pair_set))
    add_child(dd.root, make_graph_with_interface(
                           g.induced(set_union(comp, pair_set)), pair_set));

  while (!work.empty()) {
    const int n = work.front();
    work.pop();
    const GraphWithInterface node = dd.labels[n];
    auto s = sep_s(node, cfg.small(k), k);
    if (set_difference(s, node.interface).empty())
      throw contract_error("separator made no progress at " + describe(node));
    dd.max_separator_size =
        std::max(dd.max_separator_size, static_cast<int>(s.size()));
    for (auto& piece : split_at(node, s)) add_child(n, std::move(piece));
    add_child(n, make_graph_with_interface(node.graph.induced(s), s));
  }
  return dd;
}

}  // namespace

DescriptorDecomposition descriptor_decomposition(const ColoredGraph& g,
                                                 std::pair<int, int> uv, int k,
                                                 const AtomDecompConfig& config) {
  auto [u, v] = uv;
  if (!g.has_vertex(u) || !g.has_vertex(v) || u == v || g.adjacent(u, v))
    throw contract_error("descriptor_decomposition: uv must be a non-edge");
  if (config.check_preconditions) {
    if (!is_connected(g))
      throw contract_error("descriptor_decomposition: input is disconnected");
    if (!is_c_atom(g, k + 1))
      throw contract_error("descriptor_decomposition: input is not an atom");
    if (!is_improved_for(g, k))
      throw contract_error("descriptor_decomposition: input is not improved");
  }
  AtomDecompConfig cfg = config;
  for (int attempt = 0;; ++attempt) {
    try {
      auto dd = build_once(g, uv, k, cfg);
      auto check = validate(dd);
      if (!check) throw contract_error("descriptor invalid: " + check.report);
      return dd;
    } catch (const contract_error&) {
      if (attempt >= config.retries) throw;
      cfg = cfg.doubled();
    }
  }
}

RootedTreeDecomposition descriptor_to_treedec(const DescriptorDecomposition& dd) {
  auto check = validate(dd);
  if (!check)
    throw contract_error("descriptor_to_treedec: " + check.report);
  auto ch = dd.children_lists();
  RootedTreeDecomposition out;
  out.bags.resize(dd.node_count());
  out.parent = dd.parent;
  out.root = dd.root;
  for (int n = 0; n < dd.node_count(); ++n) {
    std::map<int, int> hits;
    for (int v : dd.labels[n].interface) ++hits[v];
    for (int c : ch[n])
      for (int v : dd.labels[c].interface) ++hits[v];
    std::vector<int> bag = dd.labels[n].interface;
    for (auto [v, count] : hits)
      if (count >= 2) bag.push_back(v);
    std::sort(bag.begin(), bag.end());
    bag.erase(std::unique(bag.begin(), bag.end()), bag.end());
    out.bags[n] = std::move(bag);
  }
  auto ok = validate(dd.labels[dd.root].graph, out);
  if (!ok)
    throw contract_error("descriptor-derived decomposition invalid: " + ok.report);
  return out;
}

RootedTreeDecomposition atom_bounded_decomposition(const ColoredGraph& g,
                                                   std::pair<int, int> uv, int k,
                                                   const AtomDecompConfig& config) {
  auto dd = descriptor_decomposition(g, uv, k, config);
  auto td = descriptor_to_treedec(dd);
  td.origin_pair = std::minmax(uv.first, uv.second);
  return td;
}

}  // namespace twcanon
