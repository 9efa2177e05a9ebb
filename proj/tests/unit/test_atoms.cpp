#include <doctest.h>

#include "support/builders.hpp"
#include "support/reference.hpp"
#include "twcanon/atoms.hpp"
#include "twcanon/errors.hpp"
#include "twcanon/generator.hpp"

using namespace twcanon;
using twcanon::test::complete_graph;
using twcanon::test::cycle_graph;
using twcanon::test::path_graph;

TEST_CASE("c-inseparability") {
  auto p3 = path_graph(3);
  CHECK(!is_c_inseparable(p3, 0, 2, 1));
  auto c5 = cycle_graph(5);
  for (int c = 0; c <= 3; ++c) {
    CHECK(is_c_inseparable(c5, 0, 2, c));
    CHECK(is_c_inseparable(c5, 0, 1, c));  // adjacent pairs always
  }
}

TEST_CASE("maximal c-atoms on fixed graphs") {
  auto p3 = path_graph(3);
  CHECK(maximal_c_atoms(p3, 1).atoms ==
        std::vector<std::vector<int>>{{0, 1}, {1, 2}});
  auto k4 = complete_graph(4);
  for (int c = 0; c <= 4; ++c)
    CHECK(maximal_c_atoms(k4, c).atoms ==
          std::vector<std::vector<int>>{{0, 1, 2, 3}});
  auto c5 = cycle_graph(5);
  CHECK(maximal_c_atoms(c5, 2).atoms ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
  CHECK(maximal_c_atoms(c5, 3).atoms ==
        std::vector<std::vector<int>>{{0, 1, 2, 3, 4}});
}

TEST_CASE("maximal c-atoms match subset enumeration") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    const int n = 5 + static_cast<int>(seed % 4);
    auto g = random_partial_ktree(n, 1 + seed % 3, 0.6, seed);
    for (int c = 0; c <= 3; ++c)
      CHECK(maximal_c_atoms(g, c).atoms ==
            reference::maximal_c_inseparable_sets(g, c));
  }
}

TEST_CASE("atom intersections are small cliques") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    auto g = random_partial_ktree(7, 2, 0.55, seed);
    for (int c = 0; c <= 3; ++c) {
      auto fam = maximal_c_atoms(g, c);
      for (size_t i = 0; i < fam.atoms.size(); ++i)
        for (size_t j = i + 1; j < fam.atoms.size(); ++j) {
          auto meet = set_intersection(fam.atoms[i], fam.atoms[j]);
          CHECK(static_cast<int>(meet.size()) <= c);
          CHECK(is_clique(g, meet));
        }
      for (const auto& a : fam.atoms)
        CHECK(components(g.induced(a)).size() == 1);
    }
  }
}

TEST_CASE("chordal completion") {
  auto c5 = cycle_graph(5);
  auto done = chordal_completion_c(c5, 2);
  CHECK(done.edge_count() == 10);  // K5
  auto k3 = complete_graph(3);
  CHECK(chordal_completion_c(k3, 2).encoding() == k3.encoding());
  auto p3 = path_graph(3);
  CHECK(chordal_completion_c(p3, 1).encoding() == p3.encoding());
}

TEST_CASE("atoms and separators agree between g and its completion") {
  // completion can turn a non-clique separator of g into a clique, so
  // only the inclusion-minimal clique separators coincide; those are
  // what the atom tree is built from
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_partial_ktree(6, 2, 0.6, seed);
    for (int c = 0; c <= 3; ++c) {
      auto gc = chordal_completion_c(g, c);
      CHECK(maximal_c_atoms(g, c).atoms == maximal_c_atoms(gc, c).atoms);
      CHECK(reference::minimum_clique_separators(g, c) ==
            reference::minimum_clique_separators(gc, c));
      CHECK(minimum_clique_separators(g, c) ==
            reference::minimum_clique_separators(g, c));
    }
  }
}

TEST_CASE("atom tree on fixed graphs") {
  auto p3 = path_graph(3);
  auto t = atom_tree(p3, 1);
  REQUIRE(t.node_count() == 3);
  CHECK(t.bags[t.root] == std::vector<int>{1});  // the separator is the center
  CHECK(validate(p3, t).ok);

  auto c5 = cycle_graph(5);
  auto t5 = atom_tree(c5, 2);
  CHECK(t5.node_count() == 1);
  CHECK(t5.bags[0] == std::vector<int>{0, 1, 2, 3, 4});

  auto k3 = complete_graph(3);
  CHECK(atom_tree(k3, 1).node_count() == 1);

  CHECK_THROWS_AS(atom_tree(twcanon::test::edgeless_graph(2), 1), contract_error);
}

TEST_CASE("atom tree is a valid decomposition with interior separators") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    auto g = random_partial_ktree(7, 2, 0.7, seed);
    if (components(g).size() != 1) continue;
    auto t = atom_tree(g, 1);
    CHECK(validate(g, t).ok);
    // separator bags never sit at the leaves
    auto fam = maximal_c_atoms(g, 1);
    auto kids = t.children_lists();
    for (int n = 0; n < t.node_count(); ++n) {
      const bool is_atom_bag =
          std::find(fam.atoms.begin(), fam.atoms.end(), t.bags[n]) !=
          fam.atoms.end();
      const int degree =
          static_cast<int>(kids[n].size()) + (t.parent[n] >= 0 ? 1 : 0);
      if (!is_atom_bag) CHECK(degree >= 2);
    }
  }
}

TEST_CASE("clique-free decomposition on fixed graphs") {
  auto c5 = cycle_graph(5);
  auto d5 = clique_free_decomposition(c5, 2);
  CHECK(d5.node_count() == 1);
  CHECK(d5.bags[0] == std::vector<int>{0, 1, 2, 3, 4});

  auto p3 = path_graph(3);
  auto d3 = clique_free_decomposition(p3, 1);
  CHECK(validate(p3, d3).ok);
  bool has01 = false, has12 = false;
  for (const auto& bag : d3.bags) {
    if (bag == std::vector<int>{0, 1}) has01 = true;
    if (bag == std::vector<int>{1, 2}) has12 = true;
  }
  CHECK(has01);
  CHECK(has12);

  auto k4 = complete_graph(4);
  CHECK(clique_free_decomposition(k4, 3).node_count() == 1);

  CHECK_THROWS_AS(clique_free_decomposition(twcanon::test::edgeless_graph(2), 1),
                  contract_error);
}

TEST_CASE("clique-free decomposition properties") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(7, k, 0.75, seed);
    if (components(g).size() != 1) continue;
    auto d = clique_free_decomposition(g, k);
    CHECK(validate(g, d).ok);
    for (int n = 0; n < d.node_count(); ++n) {
      if (d.parent[n] >= 0) CHECK(is_clique(g, adhesion(d, n, d.parent[n])));
      CHECK(!reference::has_clique_separator(g.induced(d.bags[n])));
    }
  }
}

TEST_CASE("clique-free decomposition is permutation equivariant") {
  for (uint64_t seed = 0; seed < 12; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(7, k, 0.75, seed);
    if (components(g).size() != 1) continue;
    auto relab = random_relabeling(g, seed + 77);
    auto direct = relabel(clique_free_decomposition(g, k), relab.mapping);
    auto mapped = clique_free_decomposition(relab.graph, k);
    CHECK(encode(direct) == encode(mapped));
  }
}
