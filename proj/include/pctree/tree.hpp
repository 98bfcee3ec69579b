#pragma once

#include <string>
#include <vector>

#include "pctree/graph.hpp"

namespace pctree {

enum class TreeMode { Rainbow, ProperlyColored };

// A tree certificate inside a host graph: |edges| = |vertices| - 1, the edges
// span the vertex set, and the coloring obeys the mode.
struct ColoredTree {
  std::vector<int> vertices;  // sorted vertex ids
  std::vector<int> edges;     // sorted edge ids into the host graph
  TreeMode mode = TreeMode::Rainbow;
};

ColoredTree make_tree(const EdgeColoredGraph& g, std::vector<int> edge_ids, TreeMode mode);
ColoredTree single_vertex_tree(int v, TreeMode mode);

int tree_order(const ColoredTree& t);

// True iff t satisfies every ColoredTree invariant against g. On failure the
// optional reason receives a short description.
bool verify_tree(const EdgeColoredGraph& g, const ColoredTree& t, std::string* reason = nullptr);

}  // namespace pctree
