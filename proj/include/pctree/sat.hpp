#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "pctree/graph.hpp"
#include "pctree/tree.hpp"

namespace pctree {

// CNF formula with variables 1..num_vars; literals are signed indices.
// Clauses must be nonempty and may not repeat a literal.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
};

void validate_formula(const CnfFormula& f);

// DIMACS-style input: 'p cnf <s> <t>' header, clause lines terminated by 0.
CnfFormula parse_dimacs(std::istream& in);
CnfFormula parse_dimacs_file(const std::string& path);

// Vertex and color roles of the constructed graph.
struct ReductionMap {
  int s = 0;
  int t = 0;
  std::vector<int> y;              // y_i, i in [s]
  std::vector<int> a1;             // a_{i1}
  std::vector<int> a2;             // a_{i2}
  std::vector<int> clause_vertex;  // c'_j, j in [t]
  std::vector<int> b_color;        // color b_i on y_i a_{i1}, y_i a_{i2}
  std::vector<int> clause_color;   // color C_j on all edges at c'_j
  std::vector<int> d_color;        // color d_i on y_i y_{i+1}
};

struct Reduction {
  EdgeColoredGraph graph;
  ReductionMap map;
};

// Builds the star-colored graph whose maximum rainbow tree order equals the
// optimum of MAX-SAT plus 2s.
Reduction reduce_to_rainbow_tree(const CnfFormula& f);

struct ExtractedAssignment {
  std::vector<bool> values;  // values[i] for variable i+1
  int satisfied = 0;
};

// Reads a truth assignment off a rainbow tree of the reduced graph: variable i
// is true iff a_{i1} is in the tree, false iff a_{i2} is, defaults to false.
ExtractedAssignment extract_assignment(const CnfFormula& f, const Reduction& r, const ColoredTree& t);

// The forward construction: rainbow tree of order exactly 2s + q where q is
// the number of clauses alpha satisfies.
ColoredTree tree_from_assignment(const CnfFormula& f, const Reduction& r,
                                 const std::vector<bool>& alpha);

int count_satisfied(const CnfFormula& f, const std::vector<bool>& alpha);

std::string reduction_map_to_json(const ReductionMap& map);

}  // namespace pctree
