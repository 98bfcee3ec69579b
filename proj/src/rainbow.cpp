#include "pctree/rainbow.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_set>

#include "pctree/errors.hpp"
#include "pctree/matroid.hpp"

namespace pctree {

namespace {

std::vector<int> edges_within(const EdgeColoredGraph& g, const std::vector<bool>& in) {
  std::vector<int> out;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (in[static_cast<size_t>(e.u)] && in[static_cast<size_t>(e.v)]) out.push_back(id);
  }
  return out;
}

}  // namespace

ColoredTree build_rainbow_tree(const EdgeColoredGraph& g, const RainbowOptions& opt) {
  if (!is_connected(g)) throw NotConnectedError("input graph is not connected");
  if (!is_star_colored(g)) throw NotStarColoredError("input graph is not star-colored");
  const int n = g.vertex_count();
  if (opt.root < 0 || opt.root >= n) throw InvalidParametersError("root out of range");

  const int target = std::min(n, 2 * min_color_degree(g) + 1);

  std::vector<bool> in_tree(static_cast<size_t>(n), false);
  in_tree[static_cast<size_t>(opt.root)] = true;
  int order = 1;
  std::vector<int> tree_edges;
  std::unordered_set<int> used_colors;

  auto set_tree = [&](const std::vector<bool>& verts, std::vector<int> edges, int count) {
    in_tree = verts;
    order = count;
    tree_edges = std::move(edges);
    used_colors.clear();
    for (int id : tree_edges) used_colors.insert(g.edge(id).color);
    assert(verify_tree(g, make_tree(g, tree_edges, TreeMode::Rainbow)) || tree_edges.empty());
  };

  while (order < target) {
    bool progressed = false;

    // Greedy: any boundary edge with a fresh color.
    for (int id = 0; id < g.edge_count() && !progressed; ++id) {
      const Edge& e = g.edge(id);
      if (in_tree[static_cast<size_t>(e.u)] == in_tree[static_cast<size_t>(e.v)]) continue;
      if (used_colors.count(e.color)) continue;
      int x = in_tree[static_cast<size_t>(e.u)] ? e.v : e.u;
      in_tree[static_cast<size_t>(x)] = true;
      ++order;
      tree_edges.push_back(id);
      used_colors.insert(e.color);
      progressed = true;
    }
    if (progressed) continue;

    const std::vector<int> ground = edges_within(g, in_tree);
    const MatroidView graphic = MatroidView::graphic(g, ground);

    // One-edge exchange: rebuild a rainbow spanning tree of G[N] avoiding the
    // boundary edge's color, then attach the boundary edge.
    for (int id = 0; id < g.edge_count() && !progressed; ++id) {
      const Edge& e = g.edge(id);
      if (in_tree[static_cast<size_t>(e.u)] == in_tree[static_cast<size_t>(e.v)]) continue;
      MatroidView partition = MatroidView::partition(g, ground, {e.color});
      std::vector<int> f = max_common_independent(graphic, partition);
      if (static_cast<int>(f.size()) != order - 1) continue;
      int x = in_tree[static_cast<size_t>(e.u)] ? e.v : e.u;
      std::vector<bool> verts(in_tree);
      verts[static_cast<size_t>(x)] = true;
      f.push_back(id);
      set_tree(verts, std::move(f), order + 1);
      progressed = true;
    }
    if (progressed) continue;

    // Two-edge exchange: drop one tree vertex, attach a pendant path of two
    // differently colored outside edges.
    for (int e0 = 0; e0 < g.edge_count() && !progressed; ++e0) {
      const Edge& b = g.edge(e0);
      if (in_tree[static_cast<size_t>(b.u)] == in_tree[static_cast<size_t>(b.v)]) continue;
      int u = in_tree[static_cast<size_t>(b.u)] ? b.u : b.v;
      int x = b.u == u ? b.v : b.u;
      for (const Incidence& inc : g.incident(x)) {
        if (progressed) break;
        int y = inc.to;
        if (in_tree[static_cast<size_t>(y)] || y == x) continue;
        if (inc.color == b.color) continue;
        for (int v = 0; v < n && !progressed; ++v) {
          if (!in_tree[static_cast<size_t>(v)] || v == u) continue;
          std::vector<bool> verts(in_tree);
          verts[static_cast<size_t>(v)] = false;
          std::vector<int> inner = edges_within(g, verts);
          MatroidView m1 = MatroidView::graphic(g, inner);
          MatroidView m2 = MatroidView::partition(g, inner, {b.color, inc.color});
          std::vector<int> f = max_common_independent(m1, m2);
          if (static_cast<int>(f.size()) != order - 2) continue;
          verts[static_cast<size_t>(x)] = true;
          verts[static_cast<size_t>(y)] = true;
          f.push_back(e0);
          f.push_back(inc.edge);
          set_tree(verts, std::move(f), order + 1);
          progressed = true;
        }
      }
    }
    if (!progressed) break;
  }

  if (tree_edges.empty()) return single_vertex_tree(opt.root, TreeMode::Rainbow);
  ColoredTree t = make_tree(g, tree_edges, TreeMode::Rainbow);
  std::string why;
  if (!verify_tree(g, t, &why)) throw InternalGuaranteeViolation("rainbow tree invalid: " + why);
  return t;
}

}  // namespace pctree
