#include "twcanon/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "twcanon/errors.hpp"
#include "twcanon/nested.hpp"

namespace twcanon {

namespace {

std::string strip(const std::string& s) {
  size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

ColoredGraph parse_graph6(const std::string& text) {
  std::string s = strip(text);
  const std::string header = ">>graph6<<";
  if (s.rfind(header, 0) == 0) s = s.substr(header.size());
  if (s.empty()) throw parse_error("graph6: empty input");
  size_t pos = 0;
  auto byte = [&](size_t i) -> long long {
    if (i >= s.size()) throw parse_error("graph6: truncated at offset " +
                                         std::to_string(i));
    const long long b = static_cast<unsigned char>(s[i]) - 63;
    if (b < 0 || b > 63)
      throw parse_error("graph6: invalid byte at offset " + std::to_string(i));
    return b;
  };
  long long n;
  if (s[0] != '~') {
    n = byte(0);
    pos = 1;
  } else if (s.size() > 1 && s[1] != '~') {
    n = (byte(1) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    n = 0;
    for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
    pos = 8;
  }
  if (n > 5000) throw capacity_error("graph6: graph too large");
  const long long bits = n * (n - 1) / 2;
  const long long bytes = (bits + 5) / 6;
  if (static_cast<long long>(s.size()) - static_cast<long long>(pos) < bytes)
    throw parse_error("graph6: truncated body");
  std::vector<int> verts(n);
  for (long long i = 0; i < n; ++i) verts[i] = static_cast<int>(i);
  std::vector<std::pair<int, int>> edges;
  long long bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const long long b = byte(pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
    }
  return ColoredGraph(verts, edges);
}

std::string emit_graph6(const ColoredGraph& g) {
  const int n = g.vertex_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  } else {
    throw capacity_error("graph6: graph too large to emit");
  }
  const auto& vs = g.vertices();
  int acc = 0, filled = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(vs[i], vs[j]) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  if (filled) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

ColoredGraph parse_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  long long n = -1, m = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    const std::string t = strip(line);
    if (t.empty() || t[0] == '#') continue;
    std::istringstream ls(t);
    if (n < 0) {
      if (!(ls >> n >> m) || n < 0 || m < 0)
        throw parse_error("edge list: bad header at line " + std::to_string(lineno));
      continue;
    }
    long long u, v;
    if (!(ls >> u >> v))
      throw parse_error("edge list: bad edge at line " + std::to_string(lineno));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw parse_error("edge list: vertex out of range at line " +
                        std::to_string(lineno));
    edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
  }
  if (n < 0) throw parse_error("edge list: missing header");
  if (static_cast<long long>(edges.size()) != m)
    throw parse_error("edge list: expected " + std::to_string(m) + " edges, got " +
                      std::to_string(edges.size()));
  std::vector<int> verts(n);
  for (long long i = 0; i < n; ++i) verts[i] = static_cast<int>(i);
  return ColoredGraph(verts, edges);
}

std::string emit_edgelist(const ColoredGraph& g) {
  std::ostringstream os;
  os << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [u, v] : g.edges())
    os << g.index_of(u) << ' ' << g.index_of(v) << '\n';
  return os.str();
}

ColoredGraph parse_graph_auto(const std::string& text) {
  std::istringstream in(text);
  std::string first;
  while (std::getline(in, first)) {
    first = strip(first);
    if (!first.empty() && first[0] != '#') break;
  }
  std::istringstream probe(first);
  long long a, b;
  if (probe >> a >> b) return parse_edgelist(text);
  return parse_graph6(text);
}

ColoredGraph read_graph_file(const std::string& path, const std::string& format) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  if (format == "g6") return parse_graph6(buf.str());
  if (format == "el") return parse_edgelist(buf.str());
  if (format == "auto") return parse_graph_auto(buf.str());
  throw domain_error("unknown format " + format);
}

namespace {

nlohmann::json graph_to_json(const ColoredGraph& g) {
  nlohmann::json j;
  j["n"] = g.vertex_count();
  j["vertices"] = g.vertices();
  auto edges = nlohmann::json::array();
  for (auto [u, v, c] : g.colored_edges()) edges.push_back({u, v, c});
  j["edges"] = edges;
  return j;
}

nlohmann::json decomposition_to_json(const RootedTreeDecomposition& d) {
  nlohmann::json j;
  j["root"] = d.root;
  auto nodes = nlohmann::json::array();
  for (int n = 0; n < d.node_count(); ++n) {
    nlohmann::json node;
    node["id"] = n;
    node["parent"] = d.parent[n];
    node["bag"] = d.bags[n];
    nodes.push_back(node);
  }
  j["nodes"] = nodes;
  j["width"] = width(d);
  if (d.origin_pair)
    j["distinguished_non_edge"] = {d.origin_pair->first, d.origin_pair->second};
  return j;
}

}  // namespace

std::string decomposition_json(const ColoredGraph& g,
                               const RootedTreeDecomposition& d, int k) {
  nlohmann::json j;
  j["format"] = "twcanon-decomposition";
  j["k"] = k;
  j["graph"] = graph_to_json(g);
  j["decomposition"] = decomposition_to_json(d);
  return j.dump(2);
}

std::string nested_json(const NestedDecomposition& nd, int k) {
  nlohmann::json j;
  j["format"] = "twcanon-nested-decomposition";
  j["k"] = k;
  j["graph"] = graph_to_json(*nd.graph);
  nlohmann::json base = decomposition_to_json(nd.base);
  for (int n = 0; n < nd.base.node_count(); ++n) {
    auto fams = nlohmann::json::array();
    for (const auto& d : nd.families[n]) fams.push_back(decomposition_to_json(d));
    base["nodes"][n]["family"] = fams;
  }
  j["decomposition"] = base;
  j["size"] = nd.size();
  j["width"] = nested_width(nd);
  j["p_bounded"] = is_p_bounded(nd, default_family_bound(k));
  return j.dump(2);
}

std::string canon_matrix_text(const std::vector<std::vector<int>>& matrix) {
  std::ostringstream os;
  for (const auto& row : matrix) {
    for (size_t i = 0; i < row.size(); ++i) {
      if (i) os << ' ';
      os << row[i];
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace twcanon
