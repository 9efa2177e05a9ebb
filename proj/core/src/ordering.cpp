#include "twcanon/ordering.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace twcanon {

std::vector<int> seq_key(const ColoredGraph& g, const std::vector<int>& s) {
  std::vector<int> key;
  key.reserve(1 + s.size() * s.size());
  key.push_back(static_cast<int>(s.size()));
  std::vector<int> at(s.size());
  for (size_t i = 0; i < s.size(); ++i) at[i] = g.index_of(s[i]);
  for (int i : at)
    for (int j : at) key.push_back(g.color_at(i, j));
  return key;
}

Cmp cmp_seq(const ColoredGraph& g, const std::vector<int>& s,
            const ColoredGraph& h, const std::vector<int>& t) {
  if (s.size() != t.size()) return s.size() < t.size() ? Cmp::Less : Cmp::Greater;
  for (size_t i = 0; i < s.size(); ++i)
    for (size_t j = 0; j < s.size(); ++j) {
      const int cg = g.color(s[i], s[j]);
      const int ch = h.color(t[i], t[j]);
      if (cg != ch) return cg < ch ? Cmp::Less : Cmp::Greater;
    }
  return Cmp::Incomparable;
}

std::vector<std::vector<int>> root_set_orderings(const NestedDecomposition& nd,
                                                 int child, long long cap) {
  if (child < 0 || child >= nd.base.node_count() ||
      nd.base.parent[child] != nd.base.root)
    throw domain_error("root_set_orderings: not a child of the root");
  std::vector<int> pool =
      nd.families[child].empty()
          ? nd.base.bags[child]
          : set_intersection(nd.base.bags[nd.base.root], nd.base.bags[child]);
  long long count = 1;
  for (size_t i = 2; i <= pool.size(); ++i) {
    count *= static_cast<long long>(i);
    if (count > cap)
      throw capacity_error(
          "root_set_orderings: too many orderings of a bag of size " +
          std::to_string(pool.size()));
  }
  std::vector<std::vector<int>> out;
  std::sort(pool.begin(), pool.end());
  do {
    out.push_back(pool);
  } while (std::next_permutation(pool.begin(), pool.end()));
  return out;
}

namespace {

std::string sigma_suffix(const std::vector<int>& sigma) {
  std::ostringstream os;
  os << "|s=";
  for (int v : sigma) os << v << ',';
  return os.str();
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

template <class T>
Cmp lex_cmp(const T& a, const T& b) {
  if (a == b) return Cmp::Incomparable;
  return a < b ? Cmp::Less : Cmp::Greater;
}

long long pack(int a, int b) {
  return static_cast<long long>(a) << 32 | static_cast<unsigned>(b);
}

}  // namespace

// One (child, tau) candidate of one comparison side, with the interned
// state id and the sequence key precomputed so that comparison loops
// never rebuild strings.
struct NestedOrderer::TupleRef {
  std::shared_ptr<const NestedDecomposition> sub;
  std::vector<int> tau;
  int state = -1;
  std::vector<int> seq;
};

int NestedOrderer::intern(const std::string& key) {
  std::lock_guard<std::mutex> lock(mu_);
  auto [it, inserted] = pool_.emplace(key, static_cast<int>(pool_.size()));
  return it->second;
}

int NestedOrderer::state_id(const NestedDecomposition& nd,
                            const std::vector<int>& sigma) {
  return intern(nd.enc + sigma_suffix(sigma));
}

std::shared_ptr<const NestedDecomposition> NestedOrderer::child_of(
    const NestedDecomposition& nd, int child) {
  const std::string key = nd.enc + "@c" + std::to_string(child);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = parts_.find(key);
    if (it != parts_.end()) return it->second;
  }
  auto made =
      std::make_shared<const NestedDecomposition>(subdecomposition(nd, child));
  std::lock_guard<std::mutex> lock(mu_);
  return parts_.emplace(key, std::move(made)).first->second;
}

std::shared_ptr<const NestedDecomposition> NestedOrderer::refined(
    const NestedDecomposition& nd, int member, const std::vector<int>& sigma) {
  const std::string key =
      nd.enc + "@r" + std::to_string(member) + sigma_suffix(sigma);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = parts_.find(key);
    if (it != parts_.end()) return it->second;
  }
  auto made = std::make_shared<const NestedDecomposition>(refine(nd, member, sigma));
  std::lock_guard<std::mutex> lock(mu_);
  return parts_.emplace(key, std::move(made)).first->second;
}

Cmp NestedOrderer::cmp_tuple(const TupleRef& x, const TupleRef& y) {
  Cmp d;
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(pack(x.state, y.state));
    if (it != memo_.end()) {
      d = it->second;
      if (d != Cmp::Incomparable) return d;
      return lex_cmp(x.seq, y.seq);
    }
  }
  d = cmp_dec_ids(x.state, *x.sub, x.tau, y.state, *y.sub, y.tau);
  if (d != Cmp::Incomparable) return d;
  return lex_cmp(x.seq, y.seq);
}

// Candidate tuples of one (decomposition, sigma, child) context, sorted
// by the tuple ordering. The sorted order does not depend on what the
// set is later compared against, so it is cached per context.
std::shared_ptr<const std::vector<NestedOrderer::TupleRef>> NestedOrderer::tuples_for(
    const NestedDecomposition& whole, const std::vector<int>& sigma, int child) {
  const std::string cache_key =
      whole.enc + sigma_suffix(sigma) + "@tp" + std::to_string(child);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = tuples_.find(cache_key);
    if (it != tuples_.end()) return it->second;
  }
  auto sub = child_of(whole, child);
  auto pi = root_set_orderings(whole, child, config_.pi_cap);
  auto out = std::make_shared<std::vector<TupleRef>>();
  out->reserve(pi.size());
  for (auto& tau : pi) {
    TupleRef t;
    t.sub = sub;
    t.state = state_id(*sub, tau);
    t.seq = seq_key(*whole.graph, concat(sigma, tau));
    t.tau = std::move(tau);
    out->push_back(std::move(t));
  }
  std::stable_sort(out->begin(), out->end(), [&](const TupleRef& x, const TupleRef& y) {
    return cmp_tuple(x, y) == Cmp::Less;
  });
  std::lock_guard<std::mutex> lock(mu_);
  return tuples_.emplace(cache_key, std::move(out)).first->second;
}

namespace {

// order-preserving byte encoding: biased big-endian, so memcmp on the
// encoded strings equals numeric comparison of the int sequences
void encode_int(std::string& out, int x) {
  const uint32_t u = static_cast<uint32_t>(x) ^ 0x80000000u;
  out.push_back(static_cast<char>(u >> 24));
  out.push_back(static_cast<char>(u >> 16));
  out.push_back(static_cast<char>(u >> 8));
  out.push_back(static_cast<char>(u));
}

}  // namespace

// Enumerates the orderings of a single-bag decomposition once, grouped
// by the internal color matrix. Everything here is independent of what
// the leaf is later compared against.
std::shared_ptr<const NestedOrderer::LeafProfile> NestedOrderer::leaf_profile(
    const NestedDecomposition& sub) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = leaf_profiles_.find(sub.enc);
    if (it != leaf_profiles_.end()) return it->second;
  }
  const std::vector<int>& pool = sub.base.bags[sub.base.root];
  long long count = 1;
  for (size_t i = 2; i <= pool.size(); ++i) {
    count *= static_cast<long long>(i);
    if (count > config_.pi_cap)
      throw capacity_error(
          "root_set_orderings: too many orderings of a bag of size " +
          std::to_string(pool.size()));
  }
  const int b = static_cast<int>(pool.size());
  std::vector<int> base(b);
  for (int i = 0; i < b; ++i) base[i] = sub.graph->index_of(pool[i]);
  std::vector<int> perm(b);
  for (int i = 0; i < b; ++i) perm[i] = i;
  std::map<std::string, std::vector<std::vector<int>>> classes;
  std::string key;
  do {
    key.clear();
    for (int i : perm)
      for (int j : perm) encode_int(key, sub.graph->color_at(base[i], base[j]));
    classes[key].push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  auto profile = std::make_shared<LeafProfile>();
  profile->bag_size = b;
  for (auto& [k, perms] : classes) {
    profile->class_keys.push_back(k);
    profile->class_perms.push_back(std::move(perms));
  }
  std::lock_guard<std::mutex> lock(mu_);
  return leaf_profiles_.emplace(sub.enc, std::move(profile)).first->second;
}

std::shared_ptr<NestedOrderer::LeafCtx> NestedOrderer::leaf_ctx(
    const NestedDecomposition& whole, const std::vector<int>& sigma, int child,
    const NestedDecomposition& sub) {
  const std::string key =
      whole.enc + sigma_suffix(sigma) + "@lc" + std::to_string(child);
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = leaf_ctxs_.find(key);
    if (it != leaf_ctxs_.end()) return it->second;
  }
  auto ctx = std::make_shared<LeafCtx>();
  ctx->graph = whole.graph;
  ctx->profile = leaf_profile(sub);
  ctx->sigma_len = static_cast<int>(sigma.size());
  const auto& pool = sub.base.bags[sub.base.root];
  ctx->prefix_at.resize(sigma.size() + pool.size());
  for (size_t i = 0; i < sigma.size(); ++i)
    ctx->prefix_at[i] = whole.graph->index_of(sigma[i]);
  ctx->pool_at.resize(pool.size());
  for (size_t i = 0; i < pool.size(); ++i)
    ctx->pool_at[i] = whole.graph->index_of(pool[i]);
  ctx->rows.resize(ctx->profile->class_keys.size());
  std::lock_guard<std::mutex> lock(mu_);
  return leaf_ctxs_.emplace(key, std::move(ctx)).first->second;
}

const std::vector<std::vector<int>>& NestedOrderer::leaf_rows(LeafCtx& ctx,
                                                              size_t cls) {
  {
    std::lock_guard<std::mutex> lock(mu_);
    if (ctx.rows[cls]) return *ctx.rows[cls];
  }
  auto rows = std::make_shared<std::vector<std::vector<int>>>();
  const auto& perms = ctx.profile->class_perms[cls];
  rows->reserve(perms.size());
  std::vector<int> at = ctx.prefix_at;
  const int st = static_cast<int>(at.size());
  for (const auto& perm : perms) {
    for (size_t i = 0; i < perm.size(); ++i)
      at[ctx.sigma_len + i] = ctx.pool_at[perm[i]];
    std::vector<int> row;
    row.reserve(1 + st * st);
    row.push_back(st);
    for (int i : at)
      for (int j : at) row.push_back(ctx.graph->color_at(i, j));
    rows->push_back(std::move(row));
  }
  std::sort(rows->begin(), rows->end());
  std::lock_guard<std::mutex> lock(mu_);
  if (!ctx.rows[cls]) ctx.rows[cls] = std::move(rows);
  return *ctx.rows[cls];
}

// Sorted-multiset comparison of the two tuple sets of single-bag
// children: class keys align the walk, and the context-dependent
// suffixes are produced lazily so the walk usually stops early.
Cmp NestedOrderer::cmp_leaf_sets(LeafCtx& a, LeafCtx& b) {
  const auto& pa = *a.profile;
  const auto& pb = *b.profile;
  if (pa.bag_size != pb.bag_size)
    return pa.bag_size < pb.bag_size ? Cmp::Less : Cmp::Greater;
  size_t ia = 0, ib = 0, oa = 0, ob = 0;
  while (ia < pa.class_keys.size() && ib < pb.class_keys.size()) {
    const int kc = pa.class_keys[ia].compare(pb.class_keys[ib]);
    if (kc != 0) return kc < 0 ? Cmp::Less : Cmp::Greater;
    const auto& rows_a = leaf_rows(a, ia);
    const auto& rows_b = leaf_rows(b, ib);
    while (oa < rows_a.size() && ob < rows_b.size()) {
      Cmp c = lex_cmp(rows_a[oa], rows_b[ob]);
      if (c != Cmp::Incomparable) return c;
      ++oa;
      ++ob;
    }
    if (oa == rows_a.size()) {
      ++ia;
      oa = 0;
    }
    if (ob == rows_b.size()) {
      ++ib;
      ob = 0;
    }
  }
  return Cmp::Incomparable;
}

Cmp NestedOrderer::cmp_child_sets(const NestedDecomposition& a,
                                  const std::vector<int>& sigma_a, int child_a,
                                  const NestedDecomposition& b,
                                  const std::vector<int>& sigma_b, int child_b) {
  const int key_a =
      intern(a.enc + sigma_suffix(sigma_a) + "@cs" + std::to_string(child_a));
  const int key_b =
      intern(b.enc + sigma_suffix(sigma_b) + "@cs" + std::to_string(child_b));
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(pack(key_a, key_b));
    if (it != memo_.end()) return it->second;
  }
  Cmp result = cmp_child_sets_impl(a, sigma_a, child_a, b, sigma_b, child_b);
  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(pack(key_a, key_b), result);
  memo_.emplace(pack(key_b, key_a), flip(result));
  return result;
}

Cmp NestedOrderer::cmp_child_sets_impl(const NestedDecomposition& a,
                                       const std::vector<int>& sigma_a,
                                       int child_a,
                                       const NestedDecomposition& b,
                                       const std::vector<int>& sigma_b,
                                       int child_b) {
  auto sub_a = child_of(a, child_a);
  auto sub_b = child_of(b, child_b);
  const auto& pool_a = a.families[child_a].empty()
                           ? a.base.bags[child_a]
                           : set_intersection(a.base.bags[a.base.root],
                                              a.base.bags[child_a]);
  const auto& pool_b = b.families[child_b].empty()
                           ? b.base.bags[child_b]
                           : set_intersection(b.base.bags[b.base.root],
                                              b.base.bags[child_b]);
  if (pool_a.size() != pool_b.size())
    return pool_a.size() < pool_b.size() ? Cmp::Less : Cmp::Greater;
  // the element ordering starts with the size comparison of the child
  // decompositions, which is uniform across the whole tuple sets
  if (sub_a->size() != sub_b->size())
    return sub_a->size() < sub_b->size() ? Cmp::Less : Cmp::Greater;
  if (sub_a->root_family().size() != sub_b->root_family().size())
    return sub_a->root_family().size() < sub_b->root_family().size()
               ? Cmp::Less
               : Cmp::Greater;
  if (sub_a->size() == 1) {
    auto ctx_a = leaf_ctx(a, sigma_a, child_a, *sub_a);
    auto ctx_b = leaf_ctx(b, sigma_b, child_b, *sub_b);
    return cmp_leaf_sets(*ctx_a, *ctx_b);
  }
  // the candidate sets grow factorially with the bag size; the sorted
  // per-side vectors realize the sorted-multiset ordering by a single
  // positional walk instead of the quadratic comparison matrix
  auto ta = tuples_for(a, sigma_a, child_a);
  auto tb = tuples_for(b, sigma_b, child_b);
  for (size_t i = 0; i < ta->size(); ++i) {
    Cmp c = cmp_tuple((*ta)[i], (*tb)[i]);
    if (c != Cmp::Incomparable) return c;
  }
  return Cmp::Incomparable;
}

std::vector<int> NestedOrderer::minimal_tau(const NestedDecomposition& nd,
                                            const std::vector<int>& sigma,
                                            int child) {
  auto candidates = tuples_for(nd, sigma, child);
  // candidates are sorted; the first equivalence class is a prefix, and
  // the tie goes to the lexicographically smallest ordering in it
  const TupleRef& head = candidates->front();
  std::vector<int> best = head.tau;
  for (size_t i = 1; i < candidates->size(); ++i) {
    const TupleRef& t = (*candidates)[i];
    if (cmp_tuple(t, head) != Cmp::Incomparable) break;
    if (t.tau < best) best = t.tau;
  }
  return best;
}

Cmp NestedOrderer::cmp_dec(const NestedDecomposition& a,
                           const std::vector<int>& sigma_a,
                           const NestedDecomposition& b,
                           const std::vector<int>& sigma_b) {
  if (a.size() != b.size()) return a.size() < b.size() ? Cmp::Less : Cmp::Greater;
  if (a.root_family().size() != b.root_family().size())
    return a.root_family().size() < b.root_family().size() ? Cmp::Less
                                                           : Cmp::Greater;
  return cmp_dec_ids(state_id(a, sigma_a), a, sigma_a, state_id(b, sigma_b), b,
                     sigma_b);
}

Cmp NestedOrderer::cmp_dec_ids(int key_a, const NestedDecomposition& a,
                               const std::vector<int>& sigma_a, int key_b,
                               const NestedDecomposition& b,
                               const std::vector<int>& sigma_b) {
  // size comparison
  if (a.size() != b.size()) return a.size() < b.size() ? Cmp::Less : Cmp::Greater;
  const auto& fam_a = a.root_family();
  const auto& fam_b = b.root_family();
  if (fam_a.size() != fam_b.size())
    return fam_a.size() < fam_b.size() ? Cmp::Less : Cmp::Greater;

  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = memo_.find(pack(key_a, key_b));
    if (it != memo_.end()) return it->second;
  }

  Cmp result;
  if (a.size() == 1) {
    // bag comparison
    result = cmp_seq(*a.graph, sigma_a, *b.graph, sigma_b);
  } else if (fam_a.empty()) {
    // recursive comparison across the child sets
    struct ChildRef {
      const NestedDecomposition* whole;
      const std::vector<int>* sigma;
      int child;
    };
    std::vector<ChildRef> ca, cb;
    auto ch_a = a.base.children_lists()[a.base.root];
    auto ch_b = b.base.children_lists()[b.base.root];
    for (int c : ch_a) ca.push_back({&a, &sigma_a, c});
    for (int c : ch_b) cb.push_back({&b, &sigma_b, c});
    result = cmp_sets(ca, cb, [&](const ChildRef& x, const ChildRef& y) {
      return cmp_child_sets(*x.whole, *x.sigma, x.child, *y.whole, *y.sigma,
                            y.child);
    });
  } else {
    // refinement comparison
    struct RefinedRef {
      std::shared_ptr<const NestedDecomposition> dec;
      const std::vector<int>* sigma;
      int state;
    };
    std::vector<RefinedRef> ra, rb;
    for (size_t d = 0; d < fam_a.size(); ++d) {
      auto dec = refined(a, static_cast<int>(d), sigma_a);
      const int state = state_id(*dec, sigma_a);
      ra.push_back({std::move(dec), &sigma_a, state});
    }
    for (size_t d = 0; d < fam_b.size(); ++d) {
      auto dec = refined(b, static_cast<int>(d), sigma_b);
      const int state = state_id(*dec, sigma_b);
      rb.push_back({std::move(dec), &sigma_b, state});
    }
    result = cmp_sets(ra, rb, [&](const RefinedRef& x, const RefinedRef& y) {
      return cmp_dec_ids(x.state, *x.dec, *x.sigma, y.state, *y.dec, *y.sigma);
    });
  }

  std::lock_guard<std::mutex> lock(mu_);
  memo_.emplace(pack(key_a, key_b), result);
  memo_.emplace(pack(key_b, key_a), flip(result));
  return result;
}

}  // namespace twcanon
