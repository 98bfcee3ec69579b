#pragma once

#include <vector>

#include "pctree/graph.hpp"
#include "pctree/matroid.hpp"
#include "pctree/sat.hpp"
#include "pctree/tree.hpp"

namespace pctree {

// Brute-force reference implementations for property tests and derived
// expected values. Never on the production path.
namespace oracle {

struct Limits {
  int max_vertices = 12;
};

struct MaxTreeResult {
  int order = 0;
  ColoredTree tree;
};

// Exact maximum order of a subtree satisfying the mode. Rainbow mode runs a
// reachability sweep over (vertex set, color set) states; properly colored
// mode runs a rooted subset DP with child colors taken in increasing order.
MaxTreeResult max_colored_tree(const EdgeColoredGraph& g, TreeMode mode, const Limits& lim = {});

// Subset enumeration; ground size at most 16.
int brute_matroid_intersection(const MatroidView& m1, const MatroidView& m2);

// All 2^s assignments; at most 20 variables.
int max_sat_brute(const CnfFormula& f);

// Per-edge remove-and-recount.
std::vector<int> naive_cut_edges(const EdgeColoredGraph& g);

}  // namespace oracle
}  // namespace pctree
