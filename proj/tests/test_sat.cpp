#include <random>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "pctree/errors.hpp"
#include "pctree/oracle.hpp"
#include "pctree/rng.hpp"
#include "pctree/sat.hpp"

using namespace pctree;

namespace {

CnfFormula three_var_formula() { return {3, {{1, 2}, {1, -2}, {-1, 3}, {-1, -3}}}; }

CnfFormula random_formula(std::mt19937_64& rng, int max_vars, int max_clauses) {
  CnfFormula f;
  f.num_vars = uniform_int(rng, 1, max_vars);
  int t = uniform_int(rng, 0, max_clauses);
  for (int j = 0; j < t; ++j) {
    std::vector<int> vars(static_cast<size_t>(f.num_vars));
    std::iota(vars.begin(), vars.end(), 1);
    shuffle_vec(rng, vars);
    int len = uniform_int(rng, 1, std::min(3, f.num_vars));
    std::vector<int> clause;
    for (int i = 0; i < len; ++i)
      clause.push_back(uniform_int(rng, 0, 1) ? vars[static_cast<size_t>(i)]
                                              : -vars[static_cast<size_t>(i)]);
    f.clauses.push_back(clause);
  }
  return f;
}

}  // namespace

TEST_CASE("reduction shape on the sample formula") {
  Reduction r = reduce_to_rainbow_tree(three_var_formula());
  CHECK(r.graph.vertex_count() == 13);
  CHECK(is_star_colored(r.graph));
  CHECK(is_connected(r.graph));
  // clause 4 = (!x | !z) attaches to a_{12} and a_{32}
  int c4 = r.map.clause_vertex[3];
  CHECK(r.graph.find_edge(c4, r.map.a2[0]).has_value());
  CHECK(r.graph.find_edge(c4, r.map.a2[2]).has_value());
  CHECK(r.graph.degree(c4) == 2);
}

TEST_CASE("degenerate reductions") {
  Reduction r = reduce_to_rainbow_tree({1, {}});
  CHECK(r.graph.vertex_count() == 3);
  CHECK(r.graph.edge_count() == 2);
  CHECK(oracle::max_colored_tree(r.graph, TreeMode::Rainbow).order == 2);

  Reduction single = reduce_to_rainbow_tree({2, {{1, -2}}});
  CHECK(single.graph.find_edge(single.map.clause_vertex[0], single.map.a1[0]).has_value());
  CHECK(single.graph.find_edge(single.map.clause_vertex[0], single.map.a2[1]).has_value());

  CHECK_THROWS_AS(reduce_to_rainbow_tree({0, {}}), InvalidParametersError);
  CHECK_THROWS_AS(reduce_to_rainbow_tree({1, {{}}}), InvalidParametersError);
  CHECK_THROWS_AS(reduce_to_rainbow_tree({1, {{2}}}), InvalidParametersError);
}

TEST_CASE("tree from assignment realizes 2s + q") {
  CnfFormula f = three_var_formula();
  Reduction r = reduce_to_rainbow_tree(f);
  ColoredTree best = tree_from_assignment(f, r, {true, false, true});
  CHECK(verify_tree(r.graph, best));
  CHECK(tree_order(best) == 9);

  CnfFormula positive{2, {{1}, {2}, {1, 2}}};
  Reduction rp = reduce_to_rainbow_tree(positive);
  ColoredTree none = tree_from_assignment(positive, rp, {false, false});
  CHECK(tree_order(none) == 4);  // 2s with q = 0

  std::mt19937_64 rng(83);
  for (int round = 0; round < 40; ++round) {
    CnfFormula rf = random_formula(rng, 3, 4);
    Reduction rr = reduce_to_rainbow_tree(rf);
    std::vector<bool> alpha;
    for (int i = 0; i < rf.num_vars; ++i) alpha.push_back(uniform_int(rng, 0, 1));
    ColoredTree t = tree_from_assignment(rf, rr, alpha);
    CHECK(verify_tree(rr.graph, t));
    CHECK(tree_order(t) == 2 * rf.num_vars + count_satisfied(rf, alpha));
  }
}

TEST_CASE("assignment extraction") {
  CnfFormula f = three_var_formula();
  Reduction r = reduce_to_rainbow_tree(f);
  ColoredTree t = tree_from_assignment(f, r, {true, false, true});
  ExtractedAssignment back = extract_assignment(f, r, t);
  CHECK(back.values == std::vector<bool>{true, false, true});
  CHECK(back.satisfied == 3);

  // single edge y1 a11 forces x1 = true
  ColoredTree mini = make_tree(r.graph, {*r.graph.find_edge(r.map.y[0], r.map.a1[0])},
                               TreeMode::Rainbow);
  ExtractedAssignment one = extract_assignment(f, r, mini);
  CHECK(one.values[0] == true);

  // the optimal tree always satisfies at least order - 2s clauses
  std::mt19937_64 rng(89);
  for (int round = 0; round < 25; ++round) {
    CnfFormula rf = random_formula(rng, 3, 4);
    Reduction rr = reduce_to_rainbow_tree(rf);
    auto best = oracle::max_colored_tree(rr.graph, TreeMode::Rainbow, {16});
    ExtractedAssignment got = extract_assignment(rf, rr, best.tree);
    CHECK(got.satisfied >= best.order - 2 * rf.num_vars);
  }
}

TEST_CASE("reduction identity at unit scale") {
  std::mt19937_64 rng(97);
  for (int round = 0; round < 25; ++round) {
    CnfFormula f = random_formula(rng, 3, 4);
    Reduction r = reduce_to_rainbow_tree(f);
    auto best = oracle::max_colored_tree(r.graph, TreeMode::Rainbow, {16});
    CHECK(best.order == oracle::max_sat_brute(f) + 2 * f.num_vars);
  }
}

TEST_CASE("dimacs parsing") {
  std::istringstream in(
      "c comment\n"
      "p cnf 3 4\n"
      "1 2 0\n"
      "1 -2 0\n"
      "-1 3 0\n"
      "-1 -3 0\n");
  CnfFormula f = parse_dimacs(in);
  CHECK(f.num_vars == 3);
  CHECK(f.clauses.size() == 4);
  CHECK(f.clauses[3] == std::vector<int>{-1, -3});

  auto parse = [](const std::string& text) {
    std::istringstream s(text);
    return parse_dimacs(s);
  };
  CHECK_THROWS_AS(parse("1 2 0\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 1 1\n1\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 1 2\n1 0\n"), ParseError);
  CHECK_THROWS_AS(parse("p cnf 1 1\n2 0\n"), ParseError);

  std::string json = reduction_map_to_json(reduce_to_rainbow_tree({2, {{1, 2}}}).map);
  CHECK(json.find("\"s\": 2") != std::string::npos);
}
