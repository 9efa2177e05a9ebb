#include <doctest.h>

#include "support/builders.hpp"
#include "twcanon/errors.hpp"
#include "twcanon/generator.hpp"
#include "twcanon/nested.hpp"
#include "twcanon/treedec.hpp"

using namespace twcanon;
using twcanon::test::complete_graph;
using twcanon::test::cycle_graph;
using twcanon::test::path_graph;

namespace {

std::shared_ptr<const ColoredGraph> shared(const ColoredGraph& g) {
  return std::make_shared<const ColoredGraph>(g);
}

}  // namespace

TEST_CASE("nested size and width") {
  auto k3 = complete_graph(3);
  auto base = single_bag_decomposition({0, 1, 2});
  auto nd = make_nested(shared(k3), base, {{single_bag_decomposition({0, 1, 2})}});
  // one node contributing 1 + (|D|+1)
  CHECK(nd.size() == 3);
  CHECK(nested_width(nd) == 2);

  auto plain = make_nested(shared(k3), base, {{}});
  CHECK(plain.size() == 1);
  CHECK(nested_width(plain) == 2);
}

TEST_CASE("make_nested rejects disconnected marked regions") {
  auto p3 = path_graph(3);
  RootedTreeDecomposition base;
  base.bags = {{0, 1}, {1, 2}};
  base.parent = {-1, 0};
  base.root = 0;
  // leaf marked but root not: the marked set misses the root
  std::vector<std::vector<RootedTreeDecomposition>> fams(2);
  fams[0] = {single_bag_decomposition({0, 1})};
  CHECK_THROWS_AS(make_nested(shared(p3), base, fams), contract_error);
}

TEST_CASE("root sets") {
  auto k3 = complete_graph(3);
  auto nd = make_nested(shared(k3), single_bag_decomposition({0, 1, 2}),
                        {{single_bag_decomposition({0, 1, 2})}});
  CHECK(is_root_set(nd, {}));
  CHECK(is_root_set(nd, {0, 2}));
  auto plain = make_nested(shared(k3), single_bag_decomposition({0, 1, 2}), {{}});
  CHECK(is_root_set(plain, {0, 1, 2}));
  CHECK(!is_root_set(plain, {0}));
}

TEST_CASE("refine") {
  auto k3 = complete_graph(3);
  auto nd = make_nested(shared(k3), single_bag_decomposition({0, 1, 2}),
                        {{single_bag_decomposition({0, 1, 2})}});
  auto refined = refine(nd, 0, {});
  CHECK(refined.size() < nd.size());
  CHECK(refined.size() == 2);
  CHECK(refined.base.bags[refined.base.root].empty());
  CHECK(refined.families[refined.base.root].empty());

  auto with_sigma = refine(nd, 0, {1, 0});
  CHECK(with_sigma.base.bags[with_sigma.base.root] == std::vector<int>{0, 1});

  CHECK_THROWS_AS(refine(nd, 3, {}), domain_error);
}

TEST_CASE("refine reattaches children at the highest covering bag") {
  auto p3 = path_graph(3);
  RootedTreeDecomposition base;
  base.bags = {{0, 1}, {1, 2}};
  base.parent = {-1, 0};
  base.root = 0;
  // two-bag family member for the root torso
  RootedTreeDecomposition member;
  member.bags = {{0, 1}, {1}};
  member.parent = {-1, 0};
  member.root = 0;
  std::vector<std::vector<RootedTreeDecomposition>> fams(2);
  fams[0] = {member};
  fams[1] = {single_bag_decomposition({1, 2})};
  auto nd = make_nested(shared(p3), base, fams);
  auto refined = refine(nd, 0, {0});
  CHECK(validate(p3, refined.base).ok);
  CHECK(refined.size() < nd.size());
  // the old child bag {1,2} now hangs off a bag containing adhesion {1}
  bool found = false;
  for (int n = 0; n < refined.base.node_count(); ++n)
    if (refined.base.bags[n] == std::vector<int>{1, 2}) {
      const int p = refined.base.parent[n];
      REQUIRE(p >= 0);
      CHECK(set_contains(refined.base.bags[p], 1));
      found = true;
    }
  CHECK(found);
}

TEST_CASE("refine strictly decreases size on fuzzed inputs") {
  int rounds = 0;
  for (uint64_t seed = 0; seed < 40 && rounds < 25; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(5 + seed % 5, k, 0.7, seed);
    if (components(g).size() != 1) continue;
    auto nd = invariant_nested_decomposition(g, k);
    if (nd.root_family().empty()) continue;
    for (size_t d = 0; d < nd.root_family().size(); ++d) {
      auto refined = refine(nd, static_cast<int>(d), {});
      CHECK(refined.size() < nd.size());
      ++rounds;
    }
  }
  CHECK(rounds > 0);
}

TEST_CASE("special children") {
  auto k3 = complete_graph(3);
  auto lone = make_nested(shared(k3), single_bag_decomposition({0, 1, 2}),
                          {{single_bag_decomposition({0, 1, 2})}});
  auto none = special_children(lone, lone.base.root);
  CHECK(none.children.empty());
  CHECK(none.attachment_clique.empty());

  // two children with adjacent singleton adhesions {0} and {1}; the
  // first subtree is strictly larger, so both are special
  auto p4 = path_graph(4);
  RootedTreeDecomposition base;
  base.bags = {{0, 1}, {0}, {1, 2, 3}};
  base.parent = {-1, 0, 0};
  base.root = 0;
  std::vector<std::vector<RootedTreeDecomposition>> fams(3);
  fams[0] = {single_bag_decomposition({0, 1})};
  fams[1] = {single_bag_decomposition({0})};
  RootedTreeDecomposition big;
  big.bags = {{1, 2}, {2, 3}};
  big.parent = {-1, 0};
  big.root = 0;
  fams[2] = {big};
  auto nd = make_nested(shared(p4), base, fams);
  auto sc = special_children(nd, nd.base.root);
  CHECK(sc.children.size() == 2);
  CHECK(sc.attachment_clique == std::vector<int>{0, 1});
}

TEST_CASE("special children cut only at strict size drops") {
  // two equal-size children whose adhesions do not form a clique: no
  // prefix qualifies
  auto p5 = path_graph(5);
  RootedTreeDecomposition base;
  base.bags = {{0, 2, 4}, {0, 1, 2}, {2, 3, 4}};
  base.parent = {-1, 0, 0};
  base.root = 0;
  std::vector<std::vector<RootedTreeDecomposition>> fams(3);
  for (int i = 0; i < 3; ++i) fams[i] = {single_bag_decomposition(base.bags[i])};
  // 0-2 and 2-4 are non-edges of the path, so prefix unions of the two
  // equal children are never cliques
  ColoredGraph host({0, 1, 2, 3, 4},
                    std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3},
                                                     {3, 4}, {0, 2}, {2, 4}});
  auto nd = make_nested(shared(host), base, fams);
  auto sc = special_children(nd, nd.base.root);
  // the union {0,2} u {2,4} is a clique only with 0-4 present
  CHECK(sc.children.empty());
}

TEST_CASE("p-boundedness arithmetic") {
  // family of 100 with a non-special child of half the size fails the
  // k = 2 polynomial: p(2) = 81
  Polynomial p = default_family_bound(2);
  CHECK(p == Polynomial{9, 18, 9});
  auto k3 = complete_graph(3);
  auto nd = make_nested(shared(k3), single_bag_decomposition({0, 1, 2}),
                        {{single_bag_decomposition({0, 1, 2})}});
  CHECK(is_p_bounded(nd, p));  // no children at all
}

TEST_CASE("invariant nested decomposition fixed cases") {
  auto c5 = cycle_graph(5);
  auto nd = invariant_nested_decomposition(c5, 2);
  REQUIRE(nd.base.node_count() == 1);
  CHECK(nd.base.bags[0] == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(nd.root_family().size() == 5);  // one candidate per non-edge
  CHECK(is_p_bounded(nd, default_family_bound(2)));

  auto k4 = complete_graph(4);
  auto nk = invariant_nested_decomposition(k4, 3);
  REQUIRE(nk.base.node_count() == 1);
  REQUIRE(nk.root_family().size() == 1);
  CHECK(nk.root_family()[0].node_count() == 1);

  auto tree = path_graph(5);
  auto nt = invariant_nested_decomposition(tree, 1);
  for (int n = 0; n < nt.base.node_count(); ++n) {
    CHECK(nt.base.bags[n].size() <= 2);
    CHECK(nt.families[n].size() == 1);
  }
}

TEST_CASE("invariant nested decomposition validates and bounds families") {
  for (uint64_t seed = 0; seed < 15; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(6 + seed % 4, k, 0.7, seed);
    if (components(g).size() != 1) continue;
    auto nd = invariant_nested_decomposition(g, k);
    CHECK(is_p_bounded(nd, default_family_bound(k)));
    CHECK(validate(*nd.graph, nd.base).ok);
    for (int n = 0; n < nd.base.node_count(); ++n) {
      REQUIRE(!nd.families[n].empty());
      auto t = torso(*nd.graph, nd.base, n);
      for (const auto& d : nd.families[n]) CHECK(validate(t, d).ok);
    }
  }
}

TEST_CASE("invariant nested decomposition is permutation equivariant") {
  for (uint64_t seed = 0; seed < 10; ++seed) {
    const int k = 1 + static_cast<int>(seed % 3);
    auto g = random_partial_ktree(6, k, 0.7, seed);
    if (components(g).size() != 1) continue;
    auto relab = random_relabeling(g, seed + 31);
    auto direct = invariant_nested_decomposition(g, k);
    auto mapped = invariant_nested_decomposition(relab.graph, k);
    // compare identity encodings after relabeling the direct result
    auto relabeled_base = relabel(direct.base, relab.mapping);
    std::vector<std::vector<RootedTreeDecomposition>> fams;
    for (const auto& fam : direct.families) {
      std::vector<RootedTreeDecomposition> out;
      for (const auto& d : fam) out.push_back(relabel(d, relab.mapping));
      fams.push_back(std::move(out));
    }
    auto rebuilt = make_nested(
        std::make_shared<const ColoredGraph>(relab.graph.induced(
            relab.graph.vertices())),
        relabeled_base, fams);
    CHECK(rebuilt.enc.substr(rebuilt.enc.find('#')) ==
          mapped.enc.substr(mapped.enc.find('#')));
  }
}
