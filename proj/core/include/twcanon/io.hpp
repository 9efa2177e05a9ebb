#pragma once

#include <string>
#include <vector>

#include "twcanon/graph.hpp"
#include "twcanon/nested.hpp"
#include "twcanon/treedec.hpp"

namespace twcanon {

/// Parses one graph in graph6 format (bit-packed upper triangle, bytes
/// offset by 63). An optional ">>graph6<<" header is accepted.
ColoredGraph parse_graph6(const std::string& text);
std::string emit_graph6(const ColoredGraph& g);

/// Plain edge list: "n m" header, then m lines "u v" with 0-based ids.
ColoredGraph parse_edgelist(const std::string& text);
std::string emit_edgelist(const ColoredGraph& g);

/// Sniffs the format: a leading "n m" integer header means edge list,
/// anything else is treated as graph6.
ColoredGraph parse_graph_auto(const std::string& text);
ColoredGraph read_graph_file(const std::string& path, const std::string& format = "auto");

std::string decomposition_json(const ColoredGraph& g, const RootedTreeDecomposition& d,
                               int k);
std::string nested_json(const NestedDecomposition& nd, int k);

/// Row-major signed-integer matrix, one row per line.
std::string canon_matrix_text(const std::vector<std::vector<int>>& matrix);

}  // namespace twcanon
