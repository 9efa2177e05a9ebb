#include <doctest.h>

#include "support/builders.hpp"
#include "twcanon/atom_decomp.hpp"
#include "twcanon/errors.hpp"
#include "twcanon/generator.hpp"
#include "twcanon/treedec.hpp"

using namespace twcanon;
using twcanon::test::complete_graph;
using twcanon::test::cycle_graph;
using twcanon::test::path_graph;

TEST_CASE("graph with interface invariants") {
  auto p3 = path_graph(3);
  CHECK_NOTHROW(make_graph_with_interface(p3, {0, 2}));
  // 1 is the only neighbor of the interior {0}, so {1, 2} is not tight
  CHECK_THROWS_AS(make_graph_with_interface(p3.induced({0, 1, 2}), {1, 2}),
                  contract_error);
  // separator leaves: no interior, no tightness requirement
  CHECK_NOTHROW(make_graph_with_interface(p3, {0, 1, 2}));
  auto c6 = cycle_graph(6);
  CHECK_THROWS_AS(make_graph_with_interface(c6, {0, 3}), contract_error);
}

TEST_CASE("sep_s") {
  auto c4 = cycle_graph(4);
  auto empty_iface = make_graph_with_interface(c4, {});
  CHECK(sep_s(empty_iface, 4, 2).empty());

  // opposite cycle vertices: kappa = 2 <= 2, so their separator joins in
  CHECK(sep_s(c4, {0, 2}, 2, 2) == std::vector<int>{0, 1, 2, 3});

  auto k4 = complete_graph(4);
  auto clique_iface = make_graph_with_interface(k4, {0, 1, 2});
  CHECK(sep_s(clique_iface, 3, 3) == std::vector<int>{0, 1, 2});
}

TEST_CASE("split_at") {
  auto c4 = cycle_graph(4);
  auto whole = make_graph_with_interface(c4, {});
  CHECK(split_at(whole, {0, 1, 2, 3}).empty());

  auto c6 = cycle_graph(6);
  auto pieces = split_at(make_graph_with_interface(c6, {}), {0, 3});
  REQUIRE(pieces.size() == 2);
  CHECK(pieces[0].interior() == std::vector<int>{1, 2});
  CHECK(pieces[0].interface == std::vector<int>{0, 3});
  CHECK(pieces[1].interior() == std::vector<int>{4, 5});
  CHECK(pieces[1].interface == std::vector<int>{0, 3});

  auto p3 = path_graph(3);
  auto halves = split_at(make_graph_with_interface(p3, {}), {1});
  REQUIRE(halves.size() == 2);
  CHECK(halves[0].graph.vertices() == std::vector<int>{0, 1});
  CHECK(halves[0].interface == std::vector<int>{1});
  CHECK(halves[1].graph.vertices() == std::vector<int>{1, 2});

  CHECK_THROWS_AS(split_at(make_graph_with_interface(c4, {0, 2}), {1}),
                  contract_error);
}

TEST_CASE("descriptor decomposition of C4") {
  auto c4 = cycle_graph(4);
  auto dd = descriptor_decomposition(c4, {0, 2}, 2);
  REQUIRE(dd.node_count() == 5);
  CHECK(dd.labels[dd.root].interface.empty());
  CHECK(dd.labels[dd.root].graph.vertices() == std::vector<int>{0, 1, 2, 3});
  auto kids = dd.children_lists()[dd.root];
  REQUIRE(kids.size() == 2);
  for (int c : kids) {
    CHECK(dd.labels[c].interface == std::vector<int>{0, 2});
    CHECK(dd.labels[c].graph.vertex_count() == 3);
    // each side expands exactly once: one separator leaf below
    auto below = dd.children_lists()[c];
    REQUIRE(below.size() == 1);
    CHECK(dd.labels[below[0]].interior().empty());
  }
  CHECK(validate(dd).ok);
}

TEST_CASE("descriptor decomposition rejects bad inputs") {
  auto k4 = complete_graph(4);
  CHECK_THROWS_AS(descriptor_decomposition(k4, {0, 1}, 3), contract_error);
  auto two = twcanon::test::edgeless_graph(2);
  CHECK_THROWS_AS(descriptor_decomposition(two, {0, 1}, 1), contract_error);
}

TEST_CASE("descriptor to tree decomposition") {
  // single-node descriptor: bag equals the interface
  DescriptorDecomposition dd;
  auto k3 = complete_graph(3);
  dd.labels.push_back(make_graph_with_interface(k3, {0, 1, 2}));
  dd.parent.push_back(-1);
  dd.root = 0;
  auto td = descriptor_to_treedec(dd);
  CHECK(td.node_count() == 1);
  CHECK(td.bags[0] == std::vector<int>{0, 1, 2});

  auto c4 = cycle_graph(4);
  auto full = descriptor_to_treedec(descriptor_decomposition(c4, {0, 2}, 2));
  CHECK(validate(c4, full).ok);
  CHECK(width(full) <= 3);
}

TEST_CASE("atom bounded decomposition") {
  auto c4 = cycle_graph(4);
  auto d4 = atom_bounded_decomposition(c4, {0, 2}, 2);
  CHECK(validate(c4, d4).ok);
  CHECK(width(d4) <= 3);
  CHECK(d4.origin_pair == std::pair<int, int>{0, 2});

  auto c6 = cycle_graph(6);
  auto d6 = atom_bounded_decomposition(c6, {0, 3}, 2);
  CHECK(validate(c6, d6).ok);

  auto k4 = complete_graph(4);
  CHECK_THROWS_AS(atom_bounded_decomposition(k4, {0, 1}, 3), contract_error);
}

TEST_CASE("atom bounded decomposition is permutation equivariant") {
  for (uint64_t seed = 0; seed < 8; ++seed) {
    auto c6 = cycle_graph(6);
    auto relab = random_relabeling(c6, seed);
    std::unordered_map<int, int> pi;
    for (auto [a, b] : relab.mapping) pi[a] = b;
    auto direct =
        relabel(atom_bounded_decomposition(c6, {0, 3}, 2), relab.mapping);
    auto mapped = atom_bounded_decomposition(
        relab.graph, std::minmax(pi[0], pi[3]), 2);
    CHECK(encode(direct) == encode(mapped));
  }
}

TEST_CASE("descriptor interiors shrink strictly") {
  auto c6 = cycle_graph(6);
  auto dd = descriptor_decomposition(c6, {0, 3}, 2);
  auto kids = dd.children_lists();
  for (int n = 0; n < dd.node_count(); ++n)
    for (int c : kids[n]) {
      auto pi = dd.labels[n].interior();
      auto ci = dd.labels[c].interior();
      CHECK(is_subset(ci, pi));
      CHECK(ci.size() < pi.size());
    }
}
