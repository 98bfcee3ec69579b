#pragma once

#include "pctree/graph.hpp"
#include "pctree/tree.hpp"

namespace pctree {

struct RainbowOptions {
  int root = 0;
};

// Grows a rainbow tree in a connected star-colored graph by greedy extension,
// one-edge exchange, and two-edge exchange, the exchanges backed by matroid
// intersection on the restricted graphic and color partition matroids. The
// result has order at least min{n, 2*delta_c} and meets min{n, 2*delta_c + 1}
// whenever a rainbow tree of that order exists.
// Throws NotConnectedError / NotStarColoredError on precondition violations.
ColoredTree build_rainbow_tree(const EdgeColoredGraph& g, const RainbowOptions& opt = {});

}  // namespace pctree
