#include "twcanon/canonize.hpp"

#include <algorithm>
#include <set>

#include "twcanon/errors.hpp"

namespace twcanon {

namespace {

class Canonizer {
 public:
  explicit Canonizer(const PipelineConfig& cfg)
      : cfg_(cfg), orderer_(cfg.ordering) {}

  std::vector<int> run(const ColoredGraph& g, int k) {
    auto nd = std::make_shared<const NestedDecomposition>(
        invariant_nested_decomposition(g, k, cfg_.nested));
    out_.clear();
    emitted_.clear();
    emit(nd, {});
    if (out_.size() != g.vertices().size())
      throw contract_error("canonical_sequence: sequence misses vertices");
    return out_;
  }

 private:
  void append(const std::vector<int>& seq) {
    for (int v : seq)
      if (emitted_.insert(v).second) out_.push_back(v);
  }

  void emit(std::shared_ptr<const NestedDecomposition> nd, std::vector<int> sigma) {
    append(sigma);
    const int r = nd->base.root;
    const auto& fam = nd->families[r];
    if (!fam.empty()) {
      std::vector<std::shared_ptr<const NestedDecomposition>> cand(fam.size());
      for (size_t d = 0; d < fam.size(); ++d)
        cand[d] = orderer_.refined(*nd, static_cast<int>(d), sigma);
      // candidates visited in input order of their distinguished pairs,
      // so strictly-smaller wins and ties keep the earliest pair
      std::vector<int> order(fam.size());
      for (size_t i = 0; i < fam.size(); ++i) order[i] = static_cast<int>(i);
      std::sort(order.begin(), order.end(), [&](int x, int y) {
        auto px = fam[x].origin_pair.value_or(std::pair<int, int>{-1, -1});
        auto py = fam[y].origin_pair.value_or(std::pair<int, int>{-1, -1});
        return px < py;
      });
      int best = order[0];
      for (size_t i = 1; i < order.size(); ++i) {
        const int d = order[i];
        if (orderer_.cmp_dec(*cand[d], sigma, *cand[best], sigma) == Cmp::Less)
          best = d;
      }
      std::shared_ptr<const NestedDecomposition> next = cand[best];
      if (fam[best].origin_pair) {
        auto [u, v] = *fam[best].origin_pair;
        auto marked = std::make_shared<const ColoredGraph>(
            nd->graph->with_edge(u, v, kColorDistinguished));
        next = std::make_shared<const NestedDecomposition>(
            make_nested(marked, next->base, next->families));
      }
      emit(next, sigma);
      return;
    }
    std::vector<int> sigma_set = sigma;
    std::sort(sigma_set.begin(), sigma_set.end());
    auto children = nd->base.children_lists()[r];
    std::vector<int> active;
    for (int c : children)
      if (!is_subset(orderer_.child_of(*nd, c)->graph->vertices(), sigma_set))
        active.push_back(c);
    std::sort(active.begin(), active.end(), [&](int x, int y) {
      Cmp c = orderer_.cmp_child_sets(*nd, sigma, x, *nd, sigma, y);
      if (c != Cmp::Incomparable) return c == Cmp::Less;
      return orderer_.child_of(*nd, x)->graph->vertices().front() <
             orderer_.child_of(*nd, y)->graph->vertices().front();
    });
    for (int c : active) {
      auto tau = orderer_.minimal_tau(*nd, sigma, c);
      emit(orderer_.child_of(*nd, c), tau);
    }
  }

  PipelineConfig cfg_;
  NestedOrderer orderer_;
  std::vector<int> out_;
  std::set<int> emitted_;
};

std::vector<std::vector<int>> matrix_for(const ColoredGraph& g,
                                         const std::vector<int>& order) {
  std::vector<std::vector<int>> m(order.size(), std::vector<int>(order.size()));
  for (size_t i = 0; i < order.size(); ++i)
    for (size_t j = 0; j < order.size(); ++j)
      m[i][j] = (i == j) ? kColorDiagonal
                         : (g.has_vertex(order[i]) && g.has_vertex(order[j]) &&
                                    g.adjacent(order[i], order[j])
                                ? g.color(order[i], order[j])
                                : kColorNonEdge);
  return m;
}

}  // namespace

std::vector<int> canonical_sequence(const ColoredGraph& g, int k,
                                    const PipelineConfig& config) {
  Canonizer c(config);
  return c.run(g, k);
}

CanonResult canon(const ColoredGraph& g, int k, const PipelineConfig& config) {
  struct Piece {
    std::vector<int> order;
    std::vector<std::vector<int>> matrix;
  };
  std::vector<Piece> pieces;
  for (const auto& comp : components(g)) {
    Piece p;
    p.order = canonical_sequence(g.induced(comp), k, config);
    p.matrix = matrix_for(g, p.order);
    pieces.push_back(std::move(p));
  }
  std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& a, const Piece& b) {
    if (a.order.size() != b.order.size()) return a.order.size() < b.order.size();
    return a.matrix < b.matrix;
  });
  CanonResult out;
  for (const auto& p : pieces)
    out.order.insert(out.order.end(), p.order.begin(), p.order.end());
  out.matrix = matrix_for(g, out.order);
  for (size_t pos = 0; pos < out.order.size(); ++pos)
    out.labeling.emplace_back(out.order[pos], static_cast<int>(pos));
  std::sort(out.labeling.begin(), out.labeling.end());
  return out;
}

IsoResult isomorphic(const ColoredGraph& g, const ColoredGraph& h, int k,
                     const PipelineConfig& config) {
  IsoResult out;
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return out;
  auto cg = canon(g, k, config);
  auto ch = canon(h, k, config);
  if (cg.matrix != ch.matrix) return out;
  out.isomorphic = true;
  for (size_t i = 0; i < cg.order.size(); ++i)
    out.witness.emplace_back(cg.order[i], ch.order[i]);
  std::sort(out.witness.begin(), out.witness.end());
  for (auto [u, fu] : out.witness)
    for (auto [v, fv] : out.witness)
      if (g.color(u, v) != h.color(fu, fv))
        throw contract_error("isomorphic: witness failed color verification");
  return out;
}

}  // namespace twcanon
