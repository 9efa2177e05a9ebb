#include "twcanon/nested.hpp"

#include <algorithm>
#include <sstream>

#include "twcanon/atoms.hpp"
#include "twcanon/errors.hpp"

namespace twcanon {

namespace {

long long family_contribution(const std::vector<RootedTreeDecomposition>& fam) {
  long long mx = 0;
  for (const auto& d : fam) mx = std::max(mx, static_cast<long long>(d.node_count()) + 1);
  return 1 + mx;
}

}  // namespace

NestedDecomposition make_nested(
    std::shared_ptr<const ColoredGraph> graph, RootedTreeDecomposition base,
    std::vector<std::vector<RootedTreeDecomposition>> families) {
  if (!graph) throw domain_error("make_nested: null graph");
  if (families.size() != base.bags.size())
    throw domain_error("make_nested: one family per node required");
  auto base_ok = validate(*graph, base);
  if (!base_ok)
    throw contract_error("make_nested: base decomposition invalid: " + base_ok.report);
  for (int n = 0; n < base.node_count(); ++n) {
    if (families[n].empty()) continue;
    const ColoredGraph t = torso(*graph, base, n);
    for (const auto& d : families[n]) {
      auto ok = validate(t, d);
      if (!ok)
        throw contract_error("make_nested: family member at node " +
                             std::to_string(n) + " invalid: " + ok.report);
      if (d.covered_vertices() != base.bags[n])
        throw contract_error("make_nested: family member does not cover its bag");
    }
  }
  bool any_marked = false;
  for (int n = 0; n < base.node_count(); ++n)
    if (families[n].empty()) any_marked = true;
  if (any_marked) {
    if (!families[base.root].empty())
      throw contract_error("make_nested: marked bags must include the root");
    for (int n = 0; n < base.node_count(); ++n)
      if (families[n].empty() && n != base.root &&
          !families[base.parent[n]].empty())
        throw contract_error("make_nested: marked bags must form a connected top");
  }

  // canonical layout: families sorted by encoding, nodes renumbered in
  // BFS order with children visited by identity string, root at 0. Two
  // structurally equal instances then agree node index by node index,
  // which downstream caches keyed on the encoding rely on.
  for (auto& fam : families)
    std::sort(fam.begin(), fam.end(),
              [](const RootedTreeDecomposition& a, const RootedTreeDecomposition& b) {
                return encode(a) < encode(b);
              });
  const int m = base.node_count();
  auto ch = base.children_lists();
  auto depth = base.depths();
  std::vector<int> bottom_up(m);
  for (int i = 0; i < m; ++i) bottom_up[i] = i;
  std::sort(bottom_up.begin(), bottom_up.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  std::vector<std::string> ident(m);
  for (int n : bottom_up) {
    std::vector<std::string> fams;
    for (const auto& d : families[n]) fams.push_back(encode(d));
    std::vector<std::string> kids;
    for (int c : ch[n]) kids.push_back(ident[c]);
    std::sort(kids.begin(), kids.end());
    std::ostringstream os;
    os << "(";
    for (int v : base.bags[n]) os << v << ',';
    os << "~";
    for (auto& f : fams) os << f << ';';
    for (auto& k : kids) os << '|' << k;
    os << ")";
    ident[n] = os.str();
  }
  std::vector<int> bfs{base.root};
  for (size_t head = 0; head < bfs.size(); ++head) {
    auto kids = ch[bfs[head]];
    std::sort(kids.begin(), kids.end(),
              [&](int a, int b) { return ident[a] < ident[b]; });
    bfs.insert(bfs.end(), kids.begin(), kids.end());
  }
  std::vector<int> new_index(m);
  for (int i = 0; i < m; ++i) new_index[bfs[i]] = i;

  NestedDecomposition nd;
  nd.graph = std::move(graph);
  nd.base.bags.resize(m);
  nd.base.parent.assign(m, -1);
  nd.base.root = 0;
  nd.families.resize(m);
  for (int old = 0; old < m; ++old) {
    nd.base.bags[new_index[old]] = base.bags[old];
    nd.families[new_index[old]] = std::move(families[old]);
    if (base.parent[old] >= 0)
      nd.base.parent[new_index[old]] = new_index[base.parent[old]];
  }

  nd.subtree_size.assign(m, 0);
  for (int i = 0; i < m; ++i)
    nd.subtree_size[i] = family_contribution(nd.families[i]);
  // BFS order lists parents first, so a reverse sweep accumulates subtrees
  for (int i = m - 1; i >= 1; --i)
    nd.subtree_size[nd.base.parent[i]] += nd.subtree_size[i];
  nd.total_size = nd.subtree_size[0];
  nd.enc = nd.graph->encoding() + "#" + ident[base.root];
  return nd;
}

int nested_width(const NestedDecomposition& nd) {
  int w = -1;
  for (int n = 0; n < nd.base.node_count(); ++n) {
    if (nd.families[n].empty())
      w = std::max(w, static_cast<int>(nd.base.bags[n].size()) - 1);
    else
      for (const auto& d : nd.families[n]) w = std::max(w, width(d));
  }
  return w;
}

bool is_root_set(const NestedDecomposition& nd, const std::vector<int>& m) {
  const int r = nd.base.root;
  if (!is_subset(m, nd.base.bags[r])) return false;
  if (nd.families[r].empty()) return m == nd.base.bags[r];
  for (const auto& d : nd.families[r]) {
    bool inside = false;
    for (const auto& bag : d.bags)
      if (is_subset(m, bag)) {
        inside = true;
        break;
      }
    if (!inside) return false;
  }
  return true;
}

namespace {

int highest_bag_containing(const RootedTreeDecomposition& d,
                           const std::vector<int>& s) {
  auto depth = d.depths();
  int best = -1;
  for (int n = 0; n < d.node_count(); ++n) {
    if (!is_subset(s, d.bags[n])) continue;
    if (best == -1 || depth[n] < depth[best]) best = n;
  }
  return best;
}

}  // namespace

NestedDecomposition refine(const NestedDecomposition& nd, int member,
                           const std::vector<int>& sigma) {
  const int r = nd.base.root;
  if (member < 0 || member >= static_cast<int>(nd.families[r].size()))
    throw domain_error("refine: no such family member");
  const RootedTreeDecomposition& d = nd.families[r][member];
  std::vector<int> sigma_set = sigma;
  std::sort(sigma_set.begin(), sigma_set.end());
  if (std::adjacent_find(sigma_set.begin(), sigma_set.end()) != sigma_set.end())
    throw domain_error("refine: ordered root set has repeated vertices");
  if (!is_subset(sigma_set, nd.base.bags[r]))
    throw contract_error("refine: sigma is not inside the root bag");
  const int attach_sigma = highest_bag_containing(d, sigma_set);
  if (attach_sigma < 0)
    throw contract_error("refine: sigma is not contained in any bag of D");

  const int dn = d.node_count();
  const int base_n = nd.base.node_count();
  // new ids: D nodes at 0..dn-1, old non-root nodes follow, new root last
  std::vector<int> remap(base_n, -1);
  int next = dn;
  for (int n = 0; n < base_n; ++n)
    if (n != r) remap[n] = next++;
  const int new_root = next;

  RootedTreeDecomposition nb;
  nb.bags.resize(new_root + 1);
  nb.parent.assign(new_root + 1, -1);
  std::vector<std::vector<RootedTreeDecomposition>> nf(new_root + 1);
  for (int i = 0; i < dn; ++i) {
    nb.bags[i] = d.bags[i];
    nb.parent[i] = d.parent[i];
  }
  for (int n = 0; n < base_n; ++n) {
    if (n == r) continue;
    nb.bags[remap[n]] = nd.base.bags[n];
    nf[remap[n]] = nd.families[n];
    if (nd.base.parent[n] == r) {
      auto glue = set_intersection(nd.base.bags[n], nd.base.bags[r]);
      const int spot = highest_bag_containing(d, glue);
      if (spot < 0)
        throw contract_error("refine: adhesion set missing from every bag of D");
      nb.parent[remap[n]] = spot;
    } else {
      nb.parent[remap[n]] = remap[nd.base.parent[n]];
    }
  }
  nb.bags[new_root] = sigma_set;
  // hang the sigma bag above its attachment point and reroot there
  nb.parent[new_root] = -1;
  for (int walk = attach_sigma, above = new_root; walk != -1;) {
    const int old_parent = nb.parent[walk];
    nb.parent[walk] = above;
    above = walk;
    walk = old_parent;
  }
  nb.root = new_root;

  auto out = make_nested(nd.graph, std::move(nb), std::move(nf));
  if (out.size() >= nd.size())
    throw contract_error("refine: size did not decrease");
  return out;
}

NestedDecomposition subdecomposition(const NestedDecomposition& nd, int child) {
  if (child < 0 || child >= nd.base.node_count() ||
      nd.base.parent[child] != nd.base.root)
    throw domain_error("subdecomposition: not a child of the root");
  std::vector<int> keep;
  std::vector<int> stack{child};
  auto ch = nd.base.children_lists();
  while (!stack.empty()) {
    int n = stack.back();
    stack.pop_back();
    keep.push_back(n);
    for (int c : ch[n]) stack.push_back(c);
  }
  std::sort(keep.begin(), keep.end());
  std::vector<int> remap(nd.base.node_count(), -1);
  for (size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);

  RootedTreeDecomposition nb;
  std::vector<std::vector<RootedTreeDecomposition>> nf(keep.size());
  nb.bags.resize(keep.size());
  nb.parent.assign(keep.size(), -1);
  std::vector<int> verts;
  for (size_t i = 0; i < keep.size(); ++i) {
    nb.bags[i] = nd.base.bags[keep[i]];
    verts = set_union(verts, nb.bags[i]);
    nf[i] = nd.families[keep[i]];
    if (keep[i] != child) nb.parent[i] = remap[nd.base.parent[keep[i]]];
  }
  nb.root = remap[child];
  auto sub = std::make_shared<ColoredGraph>(nd.graph->induced(verts));
  return make_nested(std::move(sub), std::move(nb), std::move(nf));
}

SpecialChildren special_children(const NestedDecomposition& nd, int n) {
  auto ch = nd.base.children_lists()[n];
  std::sort(ch.begin(), ch.end(), [&](int a, int b) {
    if (nd.subtree_size[a] != nd.subtree_size[b])
      return nd.subtree_size[a] > nd.subtree_size[b];
    return nd.base.bags[a] < nd.base.bags[b];
  });
  const int t = static_cast<int>(ch.size());
  std::vector<std::vector<int>> prefix_union(t + 1);
  for (int i = 0; i < t; ++i)
    prefix_union[i + 1] = set_union(
        prefix_union[i], set_intersection(nd.base.bags[n], nd.base.bags[ch[i]]));
  for (int j = t; j >= 1; --j) {
    if (j < t && nd.subtree_size[ch[j - 1]] <= nd.subtree_size[ch[j]]) continue;
    if (!is_clique(*nd.graph, prefix_union[j])) continue;
    return {std::vector<int>(ch.begin(), ch.begin() + j), prefix_union[j]};
  }
  return {{}, {}};
}

Polynomial default_family_bound(int k) {
  const long long a = static_cast<long long>(k + 1) * (k + 1);
  return {a, 2 * a, a};
}

bool is_p_bounded(const NestedDecomposition& nd, const Polynomial& p) {
  const long long total = nd.size();
  auto ch_lists = nd.base.children_lists();
  for (int n = 0; n < nd.base.node_count(); ++n) {
    const long long fam = static_cast<long long>(nd.families[n].size());
    if (fam == 0) continue;
    auto special = special_children(nd, n).children;
    std::sort(special.begin(), special.end());
    for (int c : ch_lists[n]) {
      if (set_contains(special, c)) continue;
      // fam <= p(total/sub) with an exact rational comparison:
      // fam * sub^deg <= sum_i p_i * total^i * sub^(deg-i)
      const long long sub = nd.subtree_size[c];
      const int deg = static_cast<int>(p.size()) - 1;
      __int128 rhs = 0, lhs = fam;
      for (int i = 0; i <= deg; ++i) {
        __int128 term = p[i];
        for (int x = 0; x < i; ++x) term *= total;
        for (int x = i; x < deg; ++x) term *= sub;
        rhs += term;
      }
      for (int x = 0; x < deg; ++x) lhs *= sub;
      if (lhs > rhs) return false;
    }
  }
  return true;
}

NestedDecomposition invariant_nested_decomposition(const ColoredGraph& g, int k,
                                                   const NestedConfig& config) {
  if (!is_connected(g) || g.vertex_count() == 0)
    throw contract_error("invariant_nested_decomposition: input must be connected");
  auto improved =
      std::make_shared<ColoredGraph>(improve(g, k, config.oracle_limit));
  RootedTreeDecomposition base = clique_free_decomposition(*improved, k);
  const int m = base.node_count();
  std::vector<std::vector<RootedTreeDecomposition>> families(m);

  // child subtree sizes are needed before the node's own family exists,
  // so work bottom-up over the base tree
  auto ch = base.children_lists();
  auto depth = base.depths();
  std::vector<int> order(m);
  for (int i = 0; i < m; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return depth[a] > depth[b]; });
  std::vector<long long> subsize(m, 0);

  for (int n : order) {
    const auto& bag = base.bags[n];
    if (static_cast<int>(bag.size()) <= k + 1) {
      families[n] = {single_bag_decomposition(bag)};
    } else {
      // sort children by completed subtree size, largest first
      std::vector<int> kids = ch[n];
      std::sort(kids.begin(), kids.end(), [&](int a, int b) {
        if (subsize[a] != subsize[b]) return subsize[a] > subsize[b];
        return base.bags[a] < base.bags[b];
      });
      const int t = static_cast<int>(kids.size());
      std::vector<std::vector<int>> prefix_union(t + 1);
      for (int i = 0; i < t; ++i)
        prefix_union[i + 1] = set_union(
            prefix_union[i], set_intersection(bag, base.bags[kids[i]]));
      int j = 0;
      for (int cand = t; cand >= 1; --cand) {
        if (cand < t && subsize[kids[cand - 1]] <= subsize[kids[cand]]) continue;
        if (!is_clique(*improved, prefix_union[cand])) continue;
        j = cand;
        break;
      }
      std::vector<std::pair<int, int>> pairs;
      auto nonadjacent_pairs = [&](const std::vector<int>& inside) {
        std::vector<std::pair<int, int>> out;
        for (size_t a = 0; a < inside.size(); ++a)
          for (size_t b = a + 1; b < inside.size(); ++b)
            if (!improved->adjacent(inside[a], inside[b]))
              out.emplace_back(inside[a], inside[b]);
        return out;
      };
      long long tie_count = 1;
      if (j < t) {
        int mcount = 1;
        while (j + mcount < t &&
               subsize[kids[j + mcount]] == subsize[kids[j]])
          ++mcount;
        tie_count = mcount;
        std::vector<int> anchor = prefix_union[j];
        for (int i = j; i < j + mcount; ++i)
          anchor = set_union(anchor, set_intersection(bag, base.bags[kids[i]]));
        pairs = nonadjacent_pairs(anchor);
      }
      if (pairs.empty()) {
        // clique anchor or j = t: fall back to every non-edge of the bag
        pairs = nonadjacent_pairs(bag);
        tie_count = -1;
      }
      if (pairs.empty())
        throw contract_error("nested construction: oversized bag with no non-edge");
      const ColoredGraph bag_graph = improved->induced(bag);
      std::vector<RootedTreeDecomposition> fam;
      std::vector<std::string> seen;
      for (auto uv : pairs) {
        auto dec = atom_bounded_decomposition(bag_graph, uv, k, config.atom);
        auto key = encode(dec);
        if (std::find(seen.begin(), seen.end(), key) == seen.end()) {
          seen.push_back(key);
          fam.push_back(std::move(dec));
        }
      }
      if (tie_count > 0) {
        const long long bound =
            static_cast<long long>(k + 1) * (tie_count + 1) *
            static_cast<long long>(k + 1) * (tie_count + 1);
        if (static_cast<long long>(fam.size()) > bound)
          throw contract_error("nested construction: family exceeds its bound");
      }
      families[n] = std::move(fam);
    }
    long long s = family_contribution(families[n]);
    for (int c : ch[n]) s += subsize[c];
    subsize[n] = s;
  }
  return make_nested(std::move(improved), std::move(base), std::move(families));
}

}  // namespace twcanon
