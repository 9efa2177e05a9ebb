#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

namespace twcanon {

/// Sentinel for infinite vertex connectivity (adjacent endpoints).
inline constexpr int kInfinity = std::numeric_limits<int>::max();

// Edge colors used along the pipeline. Input graphs must only carry
// colors >= 1; plain edges are kColorEdge.
inline constexpr int kColorDiagonal = -1;
inline constexpr int kColorNonEdge = 0;
inline constexpr int kColorEdge = 1;
inline constexpr int kColorImprovement = 2;
inline constexpr int kColorDistinguished = -2;

/// Finite simple undirected graph with integer edge colors.
///
/// Vertex identifiers are arbitrary non-negative integers; induced
/// subgraphs keep the identifiers of the ambient graph. The vertex
/// order (ascending identifier) doubles as the input order used for
/// tie-breaking. Instances are immutable after construction and safe
/// to share across threads.
class ColoredGraph {
 public:
  ColoredGraph() = default;

  ColoredGraph(std::vector<int> vertices,
               const std::vector<std::pair<int, int>>& edges);

  ColoredGraph(std::vector<int> vertices,
               const std::vector<std::tuple<int, int, int>>& colored_edges);

  int vertex_count() const { return static_cast<int>(verts_.size()); }
  int edge_count() const { return edge_count_; }
  const std::vector<int>& vertices() const { return verts_; }

  bool has_vertex(int v) const { return index_.count(v) != 0; }

  /// Position of v in the ascending vertex list; domain error if absent.
  int index_of(int v) const;

  bool adjacent(int u, int v) const;

  /// -1 on the diagonal, the stored color on edges, 0 otherwise.
  int color(int u, int v) const;

  /// Same by positions in the vertex list; no identifier lookup.
  int color_at(int i, int j) const {
    return colors_[static_cast<size_t>(i) * verts_.size() + j];
  }

  /// Neighbor identifiers of v, ascending.
  const std::vector<int>& neighbors(int v) const;

  /// Edges as (u, v) with u < v, ascending.
  std::vector<std::pair<int, int>> edges() const;
  std::vector<std::tuple<int, int, int>> colored_edges() const;

  ColoredGraph induced(const std::vector<int>& subset) const;

  /// Copy of the graph with one extra edge. The pair must be a non-edge.
  ColoredGraph with_edge(int u, int v, int color) const;
  ColoredGraph with_edges(const std::vector<std::tuple<int, int, int>>& extra) const;

  /// Label-level serialization; equal strings iff equal labeled graphs.
  const std::string& encoding() const { return enc_; }

  bool operator==(const ColoredGraph& other) const {
    return enc_ == other.enc_;
  }

 private:
  void finish();

  std::vector<int> verts_;  // ascending identifiers
  std::unordered_map<int, int> index_;
  std::vector<int> colors_;  // n*n matrix over positions
  std::vector<std::vector<int>> adj_;
  int edge_count_ = 0;
  std::string enc_;
};

/// A separation (A, B): A u B = V and no edge between A\B and B\A.
struct Separation {
  std::vector<int> a;
  std::vector<int> b;
};

bool is_separation(const ColoredGraph& g, const std::vector<int>& a,
                   const std::vector<int>& b);

/// Connected components of g - removed, each sorted, list ordered by
/// smallest vertex.
std::vector<std::vector<int>> components(const ColoredGraph& g,
                                         const std::vector<int>& removed = {});

bool is_connected(const ColoredGraph& g);

/// Vertex connectivity of distinct x, y: size of a smallest vertex set
/// whose removal separates them, kInfinity when adjacent.
int connectivity(const ColoredGraph& g, int x, int y);

/// Connectivity of vertex sets per separations (A, B) with X in A and
/// Y in B; the separator A n B may intersect X and Y.
int set_connectivity(const ColoredGraph& g, const std::vector<int>& x,
                     const std::vector<int>& y);

/// Unique minimum x-y separator whose source side is inclusion-minimal.
/// Excludes the endpoints. For adjacent endpoints the direct edge is
/// uncuttable; the cut over all other routes is returned (test-only
/// situation, pipeline call sites are guarded by connectivity checks).
std::vector<int> leftmost_min_vertex_separator(const ColoredGraph& g, int x, int y);

struct SetSeparation {
  std::vector<int> separator;
  std::vector<int> a_side;
};

/// Unique minimum (X, Y)-separator with inclusion-minimal A-side.
/// Vertices of X n Y are separator members in every separation.
std::vector<int> leftmost_min_separator(const ColoredGraph& g,
                                        const std::vector<int>& x,
                                        const std::vector<int>& y);
SetSeparation leftmost_min_separation(const ColoredGraph& g,
                                      const std::vector<int>& x,
                                      const std::vector<int>& y);

/// True iff g[s] is complete; true for |s| <= 1 and the empty set.
bool is_clique(const ColoredGraph& g, const std::vector<int>& s);

// Sorted-set helpers shared across the pipeline.
std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> set_difference(const std::vector<int>& a, const std::vector<int>& b);
bool set_contains(const std::vector<int>& sorted, int v);
bool is_subset(const std::vector<int>& a, const std::vector<int>& b);

}  // namespace twcanon
