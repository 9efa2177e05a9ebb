#pragma once

#include <functional>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

#include "twcanon/errors.hpp"
#include "twcanon/graph.hpp"
#include "twcanon/nested.hpp"

namespace twcanon {

/// Three-valued outcome of a weak ordering; incomparability is an
/// equivalence.
enum class Cmp { Less, Greater, Incomparable };

inline Cmp flip(Cmp c) {
  if (c == Cmp::Less) return Cmp::Greater;
  if (c == Cmp::Greater) return Cmp::Less;
  return Cmp::Incomparable;
}

/// Tuple composition: the first discriminating component decides.
template <class F>
Cmp then_compare(Cmp first, F&& second) {
  return first == Cmp::Incomparable ? second() : first;
}

/// Row-major color-matrix comparison of two vertex sequences: shorter
/// sequences first, then the first differing color entry. Sequences may
/// repeat vertices; the diagonal color off the diagonal marks repeats,
/// so incomparability still certifies a positional isomorphism.
Cmp cmp_seq(const ColoredGraph& g, const std::vector<int>& s,
            const ColoredGraph& h, const std::vector<int>& t);

/// Flattened color matrix used by cmp_seq, with the length in front so
/// that lexicographic comparison of keys matches the sequence ordering.
std::vector<int> seq_key(const ColoredGraph& g, const std::vector<int>& s);

/// Sequence ordering: length first, then the first position whose
/// elements compare strictly while all earlier ones are incomparable.
template <class T, class F>
Cmp cmp_sequences(const std::vector<T>& a, const std::vector<T>& b, F&& cmp) {
  if (a.size() != b.size())
    return a.size() < b.size() ? Cmp::Less : Cmp::Greater;
  for (size_t i = 0; i < a.size(); ++i) {
    Cmp c = cmp(a[i], b[i]);
    if (c != Cmp::Incomparable) return c;
  }
  return Cmp::Incomparable;
}

/// Set ordering: compares the multisets as if sorted monotonically by
/// the element ordering. Decided from the pairwise comparison matrix
/// over the combined element list: the smallest equivalence class whose
/// multiplicities differ decides, the side with more of it is smaller.
/// Comparator misbehavior (counts inconsistent with a weak ordering)
/// raises a contract error.
template <class T, class F>
Cmp cmp_sets(const std::vector<T>& a, const std::vector<T>& b, F&& cmp) {
  if (a.size() != b.size())
    return a.size() < b.size() ? Cmp::Less : Cmp::Greater;
  const int s = static_cast<int>(a.size());
  if (s == 0) return Cmp::Incomparable;
  const int u = 2 * s;
  auto at = [&](int i) -> const T& {
    return i < s ? a[i] : b[i - s];
  };
  std::vector<Cmp> mat(static_cast<size_t>(u) * u, Cmp::Incomparable);
  for (int i = 0; i < u; ++i)
    for (int j = i + 1; j < u; ++j) {
      Cmp c = cmp(at(i), at(j));
      mat[static_cast<size_t>(i) * u + j] = c;
      mat[static_cast<size_t>(j) * u + i] = flip(c);
    }
  std::vector<int> below(u, 0);
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j)
      if (j != i && mat[static_cast<size_t>(j) * u + i] == Cmp::Less) ++below[i];
  for (int i = 0; i < u; ++i)
    for (int j = 0; j < u; ++j) {
      if (i == j) continue;
      const Cmp c = mat[static_cast<size_t>(i) * u + j];
      if (c == Cmp::Less && below[i] >= below[j])
        throw contract_error("cmp_sets: comparator is not a weak ordering");
      if (c == Cmp::Incomparable && below[i] != below[j])
        throw contract_error("cmp_sets: incomparability is not an equivalence");
    }
  std::vector<int> classes;
  for (int i = 0; i < u; ++i) classes.push_back(below[i]);
  std::sort(classes.begin(), classes.end());
  classes.erase(std::unique(classes.begin(), classes.end()), classes.end());
  for (int cls : classes) {
    int in_a = 0, in_b = 0;
    for (int i = 0; i < s; ++i)
      if (below[i] == cls) ++in_a;
    for (int i = s; i < u; ++i)
      if (below[i] == cls) ++in_b;
    if (in_a != in_b) return in_a > in_b ? Cmp::Less : Cmp::Greater;
  }
  return Cmp::Incomparable;
}

/// Candidate ordered root sets for a child of the root: all orderings
/// of the child's bag when its family is empty, of the adhesion set
/// otherwise, in lexicographic order. Refuses to enumerate more than
/// cap sequences.
std::vector<std::vector<int>> root_set_orderings(const NestedDecomposition& nd,
                                                 int child, long long cap = 40320);

struct OrderingConfig {
  long long pi_cap = 40320;
};

/// Memoized evaluator of the recursive ordering of graphs with nested
/// decompositions and ordered root sets. The memo table is the only
/// mutable state and is guarded, so concurrent comparisons are safe.
class NestedOrderer {
 public:
  explicit NestedOrderer(OrderingConfig config = {}) : config_(config) {}

  /// The four-case comparison: decomposition sizes and root family
  /// sizes, single-bag color matrices, recursive child-set comparison,
  /// or comparison across the root refinements.
  Cmp cmp_dec(const NestedDecomposition& a, const std::vector<int>& sigma_a,
              const NestedDecomposition& b, const std::vector<int>& sigma_b);

  /// The child-set ordering used both inside cmp_dec and by the
  /// canonizer to order children: compares the tuple sets over the
  /// candidate orderings of two children.
  Cmp cmp_child_sets(const NestedDecomposition& a, const std::vector<int>& sigma_a,
                     int child_a,
                     const NestedDecomposition& b, const std::vector<int>& sigma_b,
                     int child_b);

  /// Ordering of Pi(child) minimizing the (decomposition, sequence)
  /// tuple; ties resolve to the enumeration-first (lexicographically
  /// smallest) sequence.
  std::vector<int> minimal_tau(const NestedDecomposition& nd,
                               const std::vector<int>& sigma, int child);

  std::shared_ptr<const NestedDecomposition> child_of(const NestedDecomposition& nd,
                                                      int child);
  std::shared_ptr<const NestedDecomposition> refined(const NestedDecomposition& nd,
                                                     int member,
                                                     const std::vector<int>& sigma);

  const OrderingConfig& config() const { return config_; }

 private:
  struct TupleRef;

  /// All orderings of a single-bag child, grouped into classes with
  /// equal internal color matrices and sorted by that matrix. The
  /// grouping does not depend on the comparison context, so the
  /// factorial enumeration happens once per leaf; context-dependent row
  /// suffixes are evaluated lazily during comparisons.
  struct LeafProfile {
    int bag_size = 0;
    std::vector<std::string> class_keys;                    // sorted
    std::vector<std::vector<std::vector<int>>> class_perms;  // position perms
  };

  int intern(const std::string& key);
  int state_id(const NestedDecomposition& nd, const std::vector<int>& sigma);
  Cmp cmp_tuple(const TupleRef& x, const TupleRef& y);
  Cmp cmp_dec_ids(int key_a, const NestedDecomposition& a,
                  const std::vector<int>& sigma_a, int key_b,
                  const NestedDecomposition& b, const std::vector<int>& sigma_b);
  Cmp cmp_child_sets_impl(const NestedDecomposition& a,
                          const std::vector<int>& sigma_a, int child_a,
                          const NestedDecomposition& b,
                          const std::vector<int>& sigma_b, int child_b);
  /// Lazily evaluated context-dependent rows of a leaf child: one entry
  /// per profile class, built and sorted on first use.
  struct LeafCtx {
    std::shared_ptr<const ColoredGraph> graph;
    std::shared_ptr<const LeafProfile> profile;
    std::vector<int> prefix_at;  // sigma positions, then pool slots
    std::vector<int> pool_at;
    int sigma_len = 0;
    std::vector<std::shared_ptr<const std::vector<std::vector<int>>>> rows;
  };

  std::shared_ptr<const std::vector<TupleRef>> tuples_for(
      const NestedDecomposition& whole, const std::vector<int>& sigma, int child);
  std::shared_ptr<const LeafProfile> leaf_profile(const NestedDecomposition& sub);
  std::shared_ptr<LeafCtx> leaf_ctx(const NestedDecomposition& whole,
                                    const std::vector<int>& sigma, int child,
                                    const NestedDecomposition& sub);
  const std::vector<std::vector<int>>& leaf_rows(LeafCtx& ctx, size_t cls);
  Cmp cmp_leaf_sets(LeafCtx& a, LeafCtx& b);

  OrderingConfig config_;
  std::mutex mu_;
  std::unordered_map<std::string, int> pool_;
  std::unordered_map<long long, Cmp> memo_;
  std::unordered_map<std::string, std::shared_ptr<const NestedDecomposition>> parts_;
  std::unordered_map<std::string, std::shared_ptr<const LeafProfile>> leaf_profiles_;
  std::unordered_map<std::string, std::shared_ptr<LeafCtx>> leaf_ctxs_;
  std::unordered_map<std::string, std::shared_ptr<const std::vector<TupleRef>>>
      tuples_;
};

}  // namespace twcanon
