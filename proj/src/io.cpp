#include "pctree/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "pctree/errors.hpp"

namespace pctree {

namespace {

// Strips comments and yields nonempty lines.
bool next_line(std::istream& in, std::string& line) {
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream probe(line);
    std::string tok;
    if (probe >> tok) return true;
  }
  return false;
}

}  // namespace

EdgeColoredGraph read_graph(std::istream& in) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("empty graph file");
  std::istringstream header(line);
  std::string p, fmt;
  int n = 0, m = 0;
  if (!(header >> p >> fmt >> n >> m) || p != "p" || fmt != "ecg")
    throw ParseError("expected header 'p ecg <n> <m>'");
  if (n < 1 || m < 0) throw ParseError("invalid vertex or edge count");

  std::vector<Edge> edges;
  edges.reserve(static_cast<size_t>(m));
  for (int i = 0; i < m; ++i) {
    if (!next_line(in, line)) throw ParseError("missing edge line");
    std::istringstream es(line);
    std::string tag;
    int u = 0, v = 0, c = 0;
    if (!(es >> tag >> u >> v >> c) || tag != "e") throw ParseError("expected 'e <u> <v> <c>'");
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError("edge endpoint out of range");
    if (u == v) throw ParseError("loops are not allowed");
    if (c < 1) throw ParseError("colors must be positive");
    edges.push_back({u - 1, v - 1, c});
  }
  if (next_line(in, line)) throw ParseError("trailing content after edge list");
  try {
    return EdgeColoredGraph(n, std::move(edges));
  } catch (const InvalidParametersError& e) {
    throw ParseError(e.what());
  }
}

EdgeColoredGraph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file: " + path);
  return read_graph(in);
}

namespace {

std::vector<int> sorted_by_endpoints(const EdgeColoredGraph& g, const std::vector<int>& ids) {
  std::vector<int> out(ids);
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    const Edge& ea = g.edge(a);
    const Edge& eb = g.edge(b);
    auto ka = std::minmax(ea.u, ea.v);
    auto kb = std::minmax(eb.u, eb.v);
    return ka < kb;
  });
  return out;
}

void write_edge_line(std::ostream& out, const Edge& e) {
  int u = std::min(e.u, e.v) + 1;
  int v = std::max(e.u, e.v) + 1;
  out << "e " << u << " " << v << " " << e.color << "\n";
}

}  // namespace

void write_graph(std::ostream& out, const EdgeColoredGraph& g) {
  out << "p ecg " << g.vertex_count() << " " << g.edge_count() << "\n";
  std::vector<int> ids(static_cast<size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) ids[static_cast<size_t>(i)] = i;
  for (int id : sorted_by_endpoints(g, ids)) write_edge_line(out, g.edge(id));
}

void write_graph_file(const std::string& path, const EdgeColoredGraph& g) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open output file: " + path);
  write_graph(out, g);
}

void write_tree(std::ostream& out, const EdgeColoredGraph& g, const ColoredTree& t) {
  out << "t " << t.vertices.size() << "\n";
  for (int id : sorted_by_endpoints(g, t.edges)) write_edge_line(out, g.edge(id));
}

ColoredTree read_tree(std::istream& in, const EdgeColoredGraph& g, TreeMode mode) {
  std::string line;
  if (!next_line(in, line)) throw ParseError("empty tree file");
  std::istringstream header(line);
  std::string tag;
  int order = 0;
  if (!(header >> tag >> order) || tag != "t") throw ParseError("expected header 't <order>'");
  if (order < 1) throw ParseError("invalid tree order");

  if (order == 1) {
    // no edges to name the vertex, so only the one-vertex graph is unambiguous
    if (g.vertex_count() != 1) throw ParseError("order-1 tree is ambiguous in a larger graph");
    return single_vertex_tree(0, mode);
  }
  std::vector<int> ids;
  for (int i = 0; i + 1 < order; ++i) {
    if (!next_line(in, line)) throw ParseError("missing tree edge line");
    std::istringstream es(line);
    int u = 0, v = 0, c = 0;
    if (!(es >> tag >> u >> v >> c) || tag != "e") throw ParseError("expected 'e <u> <v> <c>'");
    auto id = g.find_edge(u - 1, v - 1);
    if (!id) throw ParseError("tree edge not present in graph");
    if (g.edge(*id).color != c) throw ParseError("tree edge color disagrees with graph");
    ids.push_back(*id);
  }
  ColoredTree t = make_tree(g, std::move(ids), mode);
  if (tree_order(t) != order) throw ParseError("tree order disagrees with edge list");
  return t;
}

ColoredTree read_tree_file(const std::string& path, const EdgeColoredGraph& g, TreeMode mode) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open tree file: " + path);
  return read_tree(in, g, mode);
}

}  // namespace pctree
