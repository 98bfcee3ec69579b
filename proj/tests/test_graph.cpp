#include <random>
#include <set>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "pctree/errors.hpp"
#include "pctree/extremal.hpp"
#include "pctree/graph.hpp"
#include "pctree/io.hpp"
#include "pctree/oracle.hpp"
#include "pctree/random_graph.hpp"
#include "pctree/rng.hpp"
#include "pctree/sat.hpp"

using namespace pctree;
using testutil::path_graph;

namespace {

CnfFormula three_var_formula() {
  // (x | y)(x | !y)(!x | z)(!x | !z) with x,y,z = 1,2,3
  return {3, {{1, 2}, {1, -2}, {-1, 3}, {-1, -3}}};
}

}  // namespace

TEST_CASE("construction rejects invalid input") {
  CHECK_THROWS_AS(EdgeColoredGraph(2, {{0, 0, 1}}), InvalidParametersError);
  CHECK_THROWS_AS(EdgeColoredGraph(2, {{0, 1, 0}}), InvalidParametersError);
  CHECK_THROWS_AS(EdgeColoredGraph(2, {{0, 1, 1}, {1, 0, 2}}), InvalidParametersError);
  CHECK_THROWS_AS(EdgeColoredGraph(2, {{0, 2, 1}}), InvalidParametersError);
}

TEST_CASE("color degree basics") {
  EdgeColoredGraph single(2, {{0, 1, 5}});
  CHECK(color_degree(single, 0) == 1);
  CHECK(color_degree(single, 1) == 1);
  CHECK_THROWS_AS(color_degree(single, 2), InvalidParametersError);

  auto g2 = generate_family(FamilyTag::G2, 0, 3);
  int u2 = g2.inst.clique[1];
  CHECK(color_degree(g2.graph, u2) == 2);
  CHECK(min_color_degree(g2.graph) == 2);
}

TEST_CASE("color degree matches an independent recount on random graphs") {
  std::mt19937_64 rng(7);
  for (int round = 0; round < 50; ++round) {
    EdgeColoredGraph g = random_connected_graph(rng, 6, 0.5, 3);
    for (int v = 0; v < g.vertex_count(); ++v) {
      std::set<int> colors;
      int deg = 0;
      for (const Edge& e : g.edges())
        if (e.u == v || e.v == v) {
          colors.insert(e.color);
          ++deg;
        }
      CHECK(color_degree(g, v) == static_cast<int>(colors.size()));
      CHECK(color_degree(g, v) <= g.degree(v));
      // equality exactly when the incident colors are pairwise distinct
      CHECK((color_degree(g, v) == g.degree(v)) == (static_cast<int>(colors.size()) == deg));
    }
  }
}

TEST_CASE("color degree equals degree iff incident colors distinct") {
  EdgeColoredGraph g(4, {{0, 1, 1}, {0, 2, 1}, {0, 3, 2}});
  CHECK(g.degree(0) == 3);
  CHECK(color_degree(g, 0) == 2);
  EdgeColoredGraph h(4, {{0, 1, 1}, {0, 2, 3}, {0, 3, 2}});
  CHECK(color_degree(h, 0) == 3);
}

TEST_CASE("minimum color degree of known graphs") {
  CHECK(min_color_degree(testutil::cycle_graph({1, 2, 3})) == 2);  // rainbow triangle
  CHECK(min_color_degree(generate_family(FamilyTag::G1, 7, 2).graph) == 4);
  CHECK(min_color_degree(generate_family(FamilyTag::G5, 4, 1).graph) == 4);
}

TEST_CASE("monochromatic components partition the edge set") {
  SUBCASE("monochromatic path") {
    auto comps = monochromatic_components(path_graph({1, 1, 1}));
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].edges.size() == 3);
  }
  SUBCASE("alternating path") {
    auto comps = monochromatic_components(path_graph({1, 2, 1}));
    REQUIRE(comps.size() == 3);
  }
  SUBCASE("reduction graph of the sample formula") {
    Reduction r = reduce_to_rainbow_tree(three_var_formula());
    auto comps = monochromatic_components(r.graph);
    std::set<int> edge_union;
    for (const auto& comp : comps) {
      for (int id : comp.edges) edge_union.insert(id);
      std::set<int> comp_colors;
      for (int id : comp.edges) comp_colors.insert(r.graph.edge(id).color);
      CHECK(comp_colors.size() == 1);
    }
    CHECK(static_cast<int>(edge_union.size()) == r.graph.edge_count());
    // b_i classes are the two y_i a_i edges; C_j classes are the c'_j stars
    for (int i = 0; i < r.map.s; ++i) {
      for (const auto& comp : comps) {
        if (r.graph.edge(comp.edges[0]).color != r.map.b_color[static_cast<size_t>(i)]) continue;
        CHECK(comp.edges.size() == 2);
        auto sc = is_star(r.graph, comp.edges);
        CHECK(sc.star);
        CHECK(sc.center == r.map.y[static_cast<size_t>(i)]);
      }
    }
    for (int j = 0; j < r.map.t; ++j) {
      for (const auto& comp : comps) {
        if (r.graph.edge(comp.edges[0]).color != r.map.clause_color[static_cast<size_t>(j)])
          continue;
        auto sc = is_star(r.graph, comp.edges);
        CHECK(sc.star);
        if (comp.edges.size() > 1) CHECK(sc.center == r.map.clause_vertex[static_cast<size_t>(j)]);
      }
    }
  }
}

TEST_CASE("star checks") {
  EdgeColoredGraph claw = testutil::star_graph({1, 1, 1});
  std::vector<int> all{0, 1, 2};
  auto sc = is_star(claw, all);
  CHECK(sc.star);
  CHECK(sc.center == 0);

  EdgeColoredGraph p4 = path_graph({1, 1, 1});
  std::vector<int> path_edges{0, 1, 2};
  CHECK_FALSE(is_star(p4, path_edges).star);

  EdgeColoredGraph single(3, {{1, 2, 4}});
  auto sc2 = is_star(single, {0});
  CHECK(sc2.star);
  CHECK(sc2.center == 1);
  CHECK(sc2.alt_center == 2);

  CHECK_THROWS_AS(is_star(single, {}), InvalidParametersError);
}

TEST_CASE("star colored graphs") {
  CHECK(is_star_colored(reduce_to_rainbow_tree(three_var_formula()).graph));
  CHECK_FALSE(is_star_colored(path_graph({1, 1, 1})));
  CHECK(is_star_colored(testutil::rainbow_complete(5)));
  // every monochromatic component passes is_star iff star colored
  std::mt19937_64 rng(11);
  for (int round = 0; round < 30; ++round) {
    EdgeColoredGraph g = random_connected_graph(rng, 7, 0.4, 3);
    bool all_stars = true;
    for (const auto& comp : monochromatic_components(g))
      all_stars = all_stars && is_star(g, comp.edges).star;
    CHECK(is_star_colored(g) == all_stars);
  }
}

TEST_CASE("boundary edges") {
  EdgeColoredGraph tri = testutil::cycle_graph({1, 2, 3});
  CHECK(boundary(tri, {0}).size() == 2);
  CHECK(boundary(tri, {0, 1, 2}).empty());
  CHECK_THROWS_AS(boundary(tri, {}), InvalidParametersError);

  std::mt19937_64 rng(3);
  for (int round = 0; round < 30; ++round) {
    EdgeColoredGraph g = random_connected_graph(rng, 8, 0.5, 4);
    std::vector<int> x;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (uniform_int(rng, 0, 1)) x.push_back(v);
    if (x.empty()) x.push_back(0);
    std::set<int> expect;
    std::set<int> in(x.begin(), x.end());
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      if (in.count(e.u) != in.count(e.v)) expect.insert(id);
    }
    auto got = boundary(g, x);
    CHECK(std::set<int>(got.begin(), got.end()) == expect);

    // boundary(x), E(g[x]), E(g[V-x]) partition E
    std::vector<int> complement;
    for (int v = 0; v < g.vertex_count(); ++v)
      if (!in.count(v)) complement.push_back(v);
    size_t inside = induced_subgraph(g, x).orig_edge.size();
    size_t outside = complement.empty() ? 0 : induced_subgraph(g, complement).orig_edge.size();
    CHECK(inside + outside + got.size() == static_cast<size_t>(g.edge_count()));
  }
}

TEST_CASE("induced subgraphs") {
  EdgeColoredGraph g = testutil::rainbow_complete(5);
  auto full = induced_subgraph(g, {0, 1, 2, 3, 4});
  CHECK(full.graph.edge_count() == g.edge_count());
  auto single = induced_subgraph(g, {2});
  CHECK(single.graph.edge_count() == 0);
  CHECK(single.graph.vertex_count() == 1);

  std::mt19937_64 rng(5);
  for (int round = 0; round < 20; ++round) {
    EdgeColoredGraph h = random_connected_graph(rng, 8, 0.5, 4);
    std::vector<int> x;
    for (int v = 0; v < h.vertex_count(); ++v)
      if (uniform_int(rng, 0, 1)) x.push_back(v);
    if (x.empty()) x.push_back(0);
    auto sub = induced_subgraph(h, x);
    std::set<int> in(x.begin(), x.end());
    size_t expect = 0;
    for (const Edge& e : h.edges())
      if (in.count(e.u) && in.count(e.v)) ++expect;
    CHECK(sub.orig_edge.size() == expect);
    for (int id = 0; id < sub.graph.edge_count(); ++id) {
      const Edge& e = sub.graph.edge(id);
      const Edge& orig = h.edge(sub.orig_edge[static_cast<size_t>(id)]);
      CHECK(e.color == orig.color);
      CHECK(sub.orig_vertex[static_cast<size_t>(e.u)] == std::min(orig.u, orig.v));
    }
  }
}

TEST_CASE("connectivity and bridges") {
  CHECK(cut_edges(path_graph({1, 2})) == std::vector<int>{0, 1});
  CHECK(cut_edges(testutil::cycle_graph({1, 2, 3, 4})).empty());

  std::mt19937_64 rng(13);
  for (int round = 0; round < 60; ++round) {
    EdgeColoredGraph g = random_connected_graph(rng, uniform_int(rng, 3, 8), 0.35, 3);
    if (g.edge_count() > 20) continue;
    CHECK(cut_edges(g) == oracle::naive_cut_edges(g));
    CHECK(is_connected(g));
  }

  EdgeColoredGraph split(4, {{0, 1, 1}, {2, 3, 2}});
  CHECK_FALSE(is_connected(split));
  auto labels = component_labels(split);
  CHECK(labels[0] == labels[1]);
  CHECK(labels[2] == labels[3]);
  CHECK(labels[0] != labels[2]);
}

TEST_CASE("graph file round trip") {
  std::istringstream in(
      "# sample\n"
      "p ecg 4 3\n"
      "e 1 2 5\n"
      "e 2 3 1\n"
      "e 3 4 5\n");
  EdgeColoredGraph g = read_graph(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.edge(0).color == 5);

  std::ostringstream out;
  write_graph(out, g);
  std::istringstream again(out.str());
  EdgeColoredGraph h = read_graph(again);
  CHECK(h.edge_count() == g.edge_count());
  std::ostringstream out2;
  write_graph(out2, h);
  CHECK(out.str() == out2.str());
}

TEST_CASE("graph parser rejects bad input") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
  };
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("p foo 2 1\ne 1 2 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p ecg 2 1\ne 1 1 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p ecg 2 2\ne 1 2 1\ne 2 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse("p ecg 2 1\ne 1 3 1\n"), ParseError);
  CHECK_THROWS_AS(parse("p ecg 2 1\ne 1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse("p ecg 2 1\n"), ParseError);
}
