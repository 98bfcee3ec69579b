#pragma once

#include <numeric>
#include <vector>

#include "pctree/extremal.hpp"
#include "pctree/graph.hpp"

namespace testutil {

using pctree::Edge;
using pctree::EdgeColoredGraph;

// P_{k+1}: vertices 0..k, edge i-(i+1) with colors[i].
inline EdgeColoredGraph path_graph(const std::vector<int>& colors) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < colors.size(); ++i)
    edges.push_back({static_cast<int>(i), static_cast<int>(i + 1), colors[i]});
  return EdgeColoredGraph(static_cast<int>(colors.size()) + 1, std::move(edges));
}

// C_k with edge i-(i+1 mod k) colored colors[i].
inline EdgeColoredGraph cycle_graph(const std::vector<int>& colors) {
  const int k = static_cast<int>(colors.size());
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) edges.push_back({i, (i + 1) % k, colors[static_cast<size_t>(i)]});
  return EdgeColoredGraph(k, std::move(edges));
}

// K_{1,k} centered at 0 with the given leaf-edge colors.
inline EdgeColoredGraph star_graph(const std::vector<int>& colors) {
  std::vector<Edge> edges;
  for (size_t i = 0; i < colors.size(); ++i)
    edges.push_back({0, static_cast<int>(i + 1), colors[i]});
  return EdgeColoredGraph(static_cast<int>(colors.size()) + 1, std::move(edges));
}

inline EdgeColoredGraph rainbow_complete(int n, int first_color = 1) {
  std::vector<Edge> edges;
  int c = first_color;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.push_back({u, v, c++});
  return EdgeColoredGraph(n, std::move(edges));
}

// New graph with extra prepended, so it gets edge id 0.
inline EdgeColoredGraph prepend_edge(const EdgeColoredGraph& g, Edge extra) {
  std::vector<Edge> edges{extra};
  edges.insert(edges.end(), g.edges().begin(), g.edges().end());
  return EdgeColoredGraph(g.vertex_count(), std::move(edges));
}

// Pipeline inputs for the repair branch: an extremal template plus one
// removable edge e0 (edge id 0) whose color both endpoints already see.
struct PipelineFixture {
  EdgeColoredGraph graph;
  pctree::FamilyTag expected_tag;
};

// G6_{3,1} plus u1 u4 colored c1.
inline PipelineFixture g6_indep_repair_fixture() {
  auto fam = pctree::generate_family(pctree::FamilyTag::G6, 3, 1);
  int u1 = fam.inst.indep[0], u4 = fam.inst.indep[3];
  int c1 = fam.inst.class_colors[0];
  return {prepend_edge(fam.graph, {u1, u4, c1}), pctree::FamilyTag::G6};
}

// G4_{2,1} with clique edge v0 v1 recolored to v2's spoke color, plus v0 u1 in
// that same color.
inline PipelineFixture g4_v0_repair_fixture() {
  auto fam = pctree::generate_family(pctree::FamilyTag::G4, 2, 1);
  int v0 = fam.inst.clique[0], v1 = fam.inst.clique[1];
  int u1 = fam.inst.indep[0];
  int c2 = fam.inst.class_colors[2];
  std::vector<Edge> edges{{v0, u1, c2}};
  for (const Edge& e : fam.graph.edges()) {
    Edge copy = e;
    if ((e.u == v0 && e.v == v1) || (e.u == v1 && e.v == v0)) copy.color = c2;
    edges.push_back(copy);
  }
  return {EdgeColoredGraph(fam.graph.vertex_count(), std::move(edges)), pctree::FamilyTag::G4};
}

// G4_{2,1} plus u1 u3 colored c1.
inline PipelineFixture g4_indep_repair_fixture() {
  auto fam = pctree::generate_family(pctree::FamilyTag::G4, 2, 1);
  int u1 = fam.inst.indep[0], u3 = fam.inst.indep[2];
  int c1 = fam.inst.class_colors[1];
  return {prepend_edge(fam.graph, {u1, u3, c1}), pctree::FamilyTag::G4};
}

// G1_{5,2} plus u1 u2 colored c1.
inline PipelineFixture g1_indep_repair_fixture() {
  auto fam = pctree::generate_family(pctree::FamilyTag::G1, 5, 2);
  int u1 = fam.inst.indep[0], u2 = fam.inst.indep[1];
  int c1 = fam.inst.class_colors[0];
  return {prepend_edge(fam.graph, {u1, u2, c1}), pctree::FamilyTag::G1};
}

// G1_{5,2} with v3 dropped from U_1, plus u1 v3 colored c2 (the circulant has
// the arc v2 -> v3, so both endpoints already see c2).
inline PipelineFixture g1_clique_repair_fixture() {
  auto fam = pctree::generate_family(pctree::FamilyTag::G1, 5, 2);
  int u1 = fam.inst.indep[0], v3 = fam.inst.clique[2];
  int c2 = fam.inst.class_colors[1];
  std::vector<Edge> edges{{u1, v3, c2}};
  for (const Edge& e : fam.graph.edges()) {
    bool dropped_spoke = (e.u == u1 && e.v == v3) || (e.u == v3 && e.v == u1);
    if (!dropped_spoke) edges.push_back(e);
  }
  return {EdgeColoredGraph(fam.graph.vertex_count(), std::move(edges)), pctree::FamilyTag::G1};
}

inline std::vector<PipelineFixture> all_repair_fixtures() {
  return {g6_indep_repair_fixture(), g4_v0_repair_fixture(), g4_indep_repair_fixture(),
          g1_indep_repair_fixture(), g1_clique_repair_fixture()};
}

// Vertex relabeling; perm[old] = new.
inline EdgeColoredGraph relabel(const EdgeColoredGraph& g, const std::vector<int>& perm) {
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    edges.push_back({perm[static_cast<size_t>(e.u)], perm[static_cast<size_t>(e.v)], e.color});
  return EdgeColoredGraph(g.vertex_count(), std::move(edges));
}

// Double star joined by a same-colored bridge: two rainbow cliques, one gamma
// edge inside each, bridge in gamma. delta_c is the minimum color degree.
// left_size >= delta_c + 1 vertices on the left clique.
inline EdgeColoredGraph bridge_instance(int delta_c, int left_size) {
  std::vector<Edge> edges;
  int color = 2;  // 1 is gamma
  const int right_size = delta_c + 1;
  // left clique on 0..left_size-1, v = 0, u = 1, edge (0,1) gamma
  for (int a = 0; a < left_size; ++a)
    for (int b = a + 1; b < left_size; ++b)
      edges.push_back({a, b, (a == 0 && b == 1) ? 1 : color++});
  // right clique on left_size..left_size+right_size-1, w first, x second
  const int w = left_size;
  for (int a = 0; a < right_size; ++a)
    for (int b = a + 1; b < right_size; ++b)
      edges.push_back({w + a, w + b, (a == 0 && b == 1) ? 1 : color++});
  edges.push_back({0, w, 1});  // the bridge
  return EdgeColoredGraph(left_size + right_size, std::move(edges));
}

// Direct independent properly-colored scan, used where tests need a check
// that does not share code with verify_tree.
inline bool independent_pc_check(const EdgeColoredGraph& g, const std::vector<int>& edge_ids) {
  std::vector<std::vector<int>> colors_at(static_cast<size_t>(g.vertex_count()));
  for (int id : edge_ids) {
    const Edge& e = g.edge(id);
    colors_at[static_cast<size_t>(e.u)].push_back(e.color);
    colors_at[static_cast<size_t>(e.v)].push_back(e.color);
  }
  for (auto& list : colors_at)
    for (size_t i = 0; i < list.size(); ++i)
      for (size_t j = i + 1; j < list.size(); ++j)
        if (list[i] == list[j]) return false;
  return true;
}

}  // namespace testutil
