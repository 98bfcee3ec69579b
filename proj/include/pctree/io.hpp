#pragma once

#include <iosfwd>
#include <string>

#include "pctree/graph.hpp"
#include "pctree/tree.hpp"

namespace pctree {

// Graph file format, one item per line, '#' starts a comment:
//   p ecg <n> <m>
//   e <u> <v> <c>        (1-indexed vertices, positive color)
EdgeColoredGraph read_graph(std::istream& in);
EdgeColoredGraph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const EdgeColoredGraph& g);
void write_graph_file(const std::string& path, const EdgeColoredGraph& g);

// Tree output format:
//   t <order>
//   e <u> <v> <c>        (1-indexed, sorted by (u, v))
void write_tree(std::ostream& out, const EdgeColoredGraph& g, const ColoredTree& t);
ColoredTree read_tree(std::istream& in, const EdgeColoredGraph& g, TreeMode mode);
ColoredTree read_tree_file(const std::string& path, const EdgeColoredGraph& g, TreeMode mode);

}  // namespace pctree
