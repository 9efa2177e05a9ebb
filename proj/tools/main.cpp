#include <cstdint>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "twcanon/atoms.hpp"
#include "twcanon/canonize.hpp"
#include "twcanon/errors.hpp"
#include "twcanon/generator.hpp"
#include "twcanon/io.hpp"
#include "twcanon/oracle.hpp"
#include "twcanon/treedec.hpp"

namespace {

using namespace twcanon;

int resolve_k(const ColoredGraph& g, int k_flag, int oracle_limit) {
  if (k_flag >= 0) return k_flag;
  int k = -1;
  for (const auto& comp : components(g)) {
    if (static_cast<int>(comp.size()) > oracle_limit)
      throw capacity_error(
          "graph too large for the exact treewidth oracle; pass -k");
    k = std::max(k, treewidth_exact(g.induced(comp), oracle_limit));
  }
  return std::max(k, 0);
}

PipelineConfig make_config(int small_factor, int medium_factor) {
  PipelineConfig cfg;
  if (small_factor > 0) cfg.nested.atom.small_factor = small_factor;
  if (medium_factor > 0) cfg.nested.atom.medium_factor = medium_factor;
  return cfg;
}

int cmd_canon(const std::string& file, const std::string& format, int k_flag,
              bool labeling, int small_factor, int medium_factor) {
  ColoredGraph g = read_graph_file(file, format);
  const PipelineConfig cfg = make_config(small_factor, medium_factor);
  const int k = resolve_k(g, k_flag, cfg.nested.oracle_limit);
  auto result = canon(g, k, cfg);
  std::cout << canon_matrix_text(result.matrix);
  if (labeling) {
    for (auto [v, pos] : result.labeling)
      std::cerr << v << " -> " << pos << '\n';
  }
  return 0;
}

int cmd_iso(const std::string& file1, const std::string& file2,
            const std::string& format, int k_flag, int small_factor,
            int medium_factor) {
  ColoredGraph g = read_graph_file(file1, format);
  ColoredGraph h = read_graph_file(file2, format);
  const PipelineConfig cfg = make_config(small_factor, medium_factor);
  int k = k_flag;
  if (k < 0) {
    const int kg = resolve_k(g, -1, cfg.nested.oracle_limit);
    const int kh = resolve_k(h, -1, cfg.nested.oracle_limit);
    if (kg != kh) {
      std::cout << "non-isomorphic (treewidth " << kg << " vs " << kh << ")\n";
      return 1;
    }
    k = kg;
  }
  auto result = isomorphic(g, h, k, cfg);
  if (!result.isomorphic) {
    std::cout << "non-isomorphic\n";
    return 1;
  }
  std::cout << "isomorphic\n";
  for (auto [u, v] : result.witness) std::cout << u << " -> " << v << '\n';
  return 0;
}

int cmd_decompose(const std::string& file, const std::string& format,
                  const std::string& stage, int k_flag, int small_factor,
                  int medium_factor) {
  ColoredGraph g = read_graph_file(file, format);
  const PipelineConfig cfg = make_config(small_factor, medium_factor);
  const int k = resolve_k(g, k_flag, cfg.nested.oracle_limit);
  if (stage == "atoms") {
    auto d = clique_free_decomposition(g, k);
    std::cout << decomposition_json(g, d, k) << '\n';
    return 0;
  }
  if (stage == "bounded") {
    ColoredGraph improved = improve(g, k, cfg.nested.oracle_limit);
    const auto& vs = improved.vertices();
    std::pair<int, int> uv{-1, -1};
    for (size_t i = 0; i < vs.size() && uv.first < 0; ++i)
      for (size_t j = i + 1; j < vs.size(); ++j)
        if (!improved.adjacent(vs[i], vs[j])) {
          uv = {vs[i], vs[j]};
          break;
        }
    if (uv.first < 0)
      throw contract_error("decompose bounded: the improved graph is complete");
    auto d = atom_bounded_decomposition(improved, uv, k, cfg.nested.atom);
    std::cout << decomposition_json(improved, d, k) << '\n';
    return 0;
  }
  if (stage == "nested") {
    auto nd = invariant_nested_decomposition(g, k, cfg.nested);
    std::cout << nested_json(nd, k) << '\n';
    return 0;
  }
  throw domain_error("unknown stage " + stage);
}

int cmd_selftest(int size, uint64_t seed, int rounds) {
  int failures = 0;
  for (int i = 0; i < rounds; ++i) {
    const uint64_t s = seed + static_cast<uint64_t>(i) * 9176;
    const int k = 1 + static_cast<int>(s % 3);
    const int n = std::max(k + 2, size);
    ColoredGraph g = random_partial_ktree(n, k, 0.3 + 0.6 * ((i % 7) / 7.0), s);
    auto relab = random_relabeling(g, s ^ 0x9e3779b97f4a7c15ULL);
    auto cg = canon(g, k);
    auto ch = canon(relab.graph, k);
    const bool invariant = cg.matrix == ch.matrix;
    bool oracle_ok = true;
    if (n <= 10) {
      auto iso = isomorphic(g, relab.graph, k);
      oracle_ok = iso.isomorphic &&
                  brute_force_isomorphic(g, relab.graph).has_value();
    }
    if (!invariant || !oracle_ok) {
      ++failures;
      std::cout << "FAIL seed=" << s << " n=" << n << " k=" << k << '\n';
    }
  }
  std::cout << (failures ? "selftest: FAILED " : "selftest: passed ")
            << rounds - failures << "/" << rounds << '\n';
  return failures ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"canonize and test isomorphism of bounded-treewidth graphs"};
  app.require_subcommand(1);

  std::string file, file2, format = "auto", stage = "nested";
  int k = -1, small_factor = -1, medium_factor = -1;
  bool labeling = false;
  int st_size = 8, st_rounds = 25;
  uint64_t st_seed = 1;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("-k,--width", k, "treewidth bound (computed exactly when omitted)");
    cmd->add_option("--format", format, "input format: auto|g6|el");
    cmd->add_option("--small-factor", small_factor, "separator threshold factor");
    cmd->add_option("--medium-factor", medium_factor, "interface bound factor");
  };

  auto* c_canon = app.add_subcommand("canon", "print the canonical color matrix");
  c_canon->add_option("file", file)->required();
  c_canon->add_flag("--labeling", labeling, "print the canonical labeling to stderr");
  add_common(c_canon);

  auto* c_iso = app.add_subcommand("iso", "decide isomorphism of two graphs");
  c_iso->add_option("file1", file)->required();
  c_iso->add_option("file2", file2)->required();
  add_common(c_iso);

  auto* c_dec = app.add_subcommand("decompose", "emit a decomposition as JSON");
  c_dec->add_option("file", file)->required();
  c_dec->add_option("--stage", stage, "atoms|bounded|nested");
  add_common(c_dec);

  auto* c_test = app.add_subcommand("selftest", "run seeded property checks");
  c_test->add_option("--size", st_size, "vertex count per instance");
  c_test->add_option("--seed", st_seed, "base seed");
  c_test->add_option("--rounds", st_rounds, "number of instances");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_canon->parsed())
      return cmd_canon(file, format, k, labeling, small_factor, medium_factor);
    if (c_iso->parsed())
      return cmd_iso(file, file2, format, k, small_factor, medium_factor);
    if (c_dec->parsed())
      return cmd_decompose(file, format, stage, k, small_factor, medium_factor);
    if (c_test->parsed()) return cmd_selftest(st_size, st_seed, st_rounds);
  } catch (const twcanon::parse_error& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
