#include <doctest.h>

#include <algorithm>

#include "support/builders.hpp"
#include "twcanon/canonize.hpp"
#include "twcanon/errors.hpp"
#include "twcanon/generator.hpp"
#include "twcanon/oracle.hpp"

using namespace twcanon;
using twcanon::test::complete_graph;
using twcanon::test::cycle_graph;
using twcanon::test::edgeless_graph;
using twcanon::test::path_graph;

TEST_CASE("canonical sequence basics") {
  ColoredGraph one({0}, std::vector<std::pair<int, int>>{});
  CHECK(canonical_sequence(one, 0) == std::vector<int>{0});

  auto k4 = complete_graph(4);
  auto seq = canonical_sequence(k4, 3);
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<int>{0, 1, 2, 3});

  auto c5 = cycle_graph(5);
  auto s5 = canonical_sequence(c5, 2);
  CHECK(s5.size() == 5);
}

TEST_CASE("canon of trivial graphs") {
  ColoredGraph one({0}, std::vector<std::pair<int, int>>{});
  auto c = canon(one, 0);
  CHECK(c.matrix == std::vector<std::vector<int>>{{-1}});
  CHECK(c.order == std::vector<int>{0});

  ColoredGraph zero({}, std::vector<std::pair<int, int>>{});
  CHECK(canon(zero, 0).matrix.empty());
}

TEST_CASE("canon is invariant under relabeling of cycles") {
  auto c5 = cycle_graph(5);
  for (uint64_t seed = 0; seed < 6; ++seed) {
    auto relab = random_relabeling(c5, seed);
    CHECK(canon(c5, 2).matrix == canon(relab.graph, 2).matrix);
  }
}

TEST_CASE("labeling reproduces the canon matrix") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(6 + seed % 3, k, 0.6, seed);
    auto c = canon(g, k);
    std::vector<int> pos(c.labeling.size());
    for (auto [v, p] : c.labeling) pos[g.index_of(v)] = p;
    const auto& vs = g.vertices();
    for (size_t i = 0; i < vs.size(); ++i)
      for (size_t j = 0; j < vs.size(); ++j)
        CHECK(c.matrix[pos[i]][pos[j]] == g.color(vs[i], vs[j]));
  }
}

TEST_CASE("canon strips improvement colors") {
  // K_{2,3} gains an improvement edge during canonization; the canon
  // matrix must only carry the input colors
  ColoredGraph g({0, 1, 2, 3, 4},
                 std::vector<std::pair<int, int>>{
                     {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
  auto c = canon(g, 2);
  int edge_entries = 0;
  for (const auto& row : c.matrix)
    for (int x : row) {
      CHECK((x == -1 || x == 0 || x == 1));
      if (x == 1) ++edge_entries;
    }
  CHECK(edge_entries == 12);
}

TEST_CASE("canon is a fixed point") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(6, k, 0.6, seed);
    auto c = canon(g, k);
    // rebuild the graph from the canon matrix and canonize again
    std::vector<int> verts(c.order.size());
    for (size_t i = 0; i < verts.size(); ++i) verts[i] = static_cast<int>(i);
    std::vector<std::tuple<int, int, int>> edges;
    for (size_t i = 0; i < verts.size(); ++i)
      for (size_t j = i + 1; j < verts.size(); ++j)
        if (c.matrix[i][j] != 0) edges.emplace_back(i, j, c.matrix[i][j]);
    ColoredGraph canon_graph(verts, edges);
    CHECK(canon(canon_graph, k).matrix == c.matrix);
  }
}

TEST_CASE("isomorphic on fixed pairs") {
  auto c5 = cycle_graph(5);
  auto relab = random_relabeling(c5, 3);
  auto yes = isomorphic(c5, relab.graph, 2);
  CHECK(yes.isomorphic);
  CHECK(yes.witness.size() == 5);

  auto c6 = cycle_graph(6);
  ColoredGraph two_triangles(
      {0, 1, 2, 3, 4, 5},
      std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
  CHECK(!isomorphic(c6, two_triangles, 2).isomorphic);
}

TEST_CASE("disconnected graphs canonize per component") {
  ColoredGraph g({0, 1, 2, 3, 4, 5},
                 std::vector<std::pair<int, int>>{{0, 1}, {2, 3}, {3, 4}});
  auto c = canon(g, 1);
  CHECK(c.order.size() == 6);
  // component sizes ascending: isolated vertex, edge, path
  CHECK(c.matrix[0] == std::vector<int>{-1, 0, 0, 0, 0, 0});
  auto relab = random_relabeling(g, 11);
  CHECK(canon(relab.graph, 1).matrix == c.matrix);
}

TEST_CASE("tie-break safety: permuted input gives the same canon") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(7, k, 0.65, seed);
    auto relab = random_relabeling(g, seed * 13 + 1);
    CHECK(canon(g, k).matrix == canon(relab.graph, k).matrix);
  }
}

TEST_CASE("canon agrees with the oracle") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(6, k, 0.55, seed);
    auto h = random_partial_ktree(6, k, 0.55, seed + 500);
    const bool claimed = isomorphic(g, h, k).isomorphic;
    const bool truth = brute_force_isomorphic(g, h).has_value();
    CHECK(claimed == truth);
  }
}

TEST_CASE("canon rejects widths below the treewidth") {
  CHECK_THROWS_AS(canon(complete_graph(5), 2), contract_error);
}
