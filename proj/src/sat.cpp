#include "pctree/sat.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <unordered_set>

#include "json.hpp"
#include "pctree/errors.hpp"

namespace pctree {

void validate_formula(const CnfFormula& f) {
  if (f.num_vars < 0) throw InvalidParametersError("negative variable count");
  for (const auto& clause : f.clauses) {
    if (clause.empty()) throw InvalidParametersError("empty clause");
    std::set<int> seen;
    for (int lit : clause) {
      int var = std::abs(lit);
      if (var < 1 || var > f.num_vars) throw InvalidParametersError("literal index out of range");
      if (!seen.insert(lit).second) throw InvalidParametersError("duplicate literal in clause");
    }
  }
}

CnfFormula parse_dimacs(std::istream& in) {
  CnfFormula f;
  std::string line;
  bool have_header = false;
  int expected_clauses = 0;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string tok;
    if (!(ls >> tok)) continue;
    if (tok == "c" || tok[0] == 'c') continue;
    if (tok == "p") {
      std::string fmt;
      if (!(ls >> fmt >> f.num_vars >> expected_clauses) || fmt != "cnf")
        throw ParseError("expected header 'p cnf <vars> <clauses>'");
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("clause before DIMACS header");
    std::istringstream rest(line);
    int lit = 0;
    while (rest >> lit) {
      if (lit == 0) {
        f.clauses.push_back(pending);
        pending.clear();
      } else {
        pending.push_back(lit);
      }
    }
  }
  if (!have_header) throw ParseError("missing DIMACS header");
  if (!pending.empty()) throw ParseError("unterminated clause");
  if (static_cast<int>(f.clauses.size()) != expected_clauses)
    throw ParseError("clause count disagrees with header");
  try {
    validate_formula(f);
  } catch (const InvalidParametersError& e) {
    throw ParseError(e.what());
  }
  return f;
}

CnfFormula parse_dimacs_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open CNF file: " + path);
  return parse_dimacs(in);
}

Reduction reduce_to_rainbow_tree(const CnfFormula& f) {
  validate_formula(f);
  if (f.num_vars < 1) throw InvalidParametersError("reduction needs at least one variable");
  const int s = f.num_vars;
  const int t = static_cast<int>(f.clauses.size());

  ReductionMap map;
  map.s = s;
  map.t = t;
  for (int i = 0; i < s; ++i) {
    map.y.push_back(i);
    map.a1.push_back(s + 2 * i);
    map.a2.push_back(s + 2 * i + 1);
    map.b_color.push_back(i + 1);
  }
  for (int j = 0; j < t; ++j) {
    map.clause_vertex.push_back(3 * s + j);
    map.clause_color.push_back(s + j + 1);
  }
  for (int i = 0; i + 1 < s; ++i) map.d_color.push_back(s + t + i + 1);

  std::vector<Edge> edges;
  for (int i = 0; i < s; ++i) {
    edges.push_back({map.y[static_cast<size_t>(i)], map.a1[static_cast<size_t>(i)],
                     map.b_color[static_cast<size_t>(i)]});
    edges.push_back({map.y[static_cast<size_t>(i)], map.a2[static_cast<size_t>(i)],
                     map.b_color[static_cast<size_t>(i)]});
  }
  for (int j = 0; j < t; ++j) {
    for (int lit : f.clauses[static_cast<size_t>(j)]) {
      int i = std::abs(lit) - 1;
      int a = lit > 0 ? map.a1[static_cast<size_t>(i)] : map.a2[static_cast<size_t>(i)];
      edges.push_back({map.clause_vertex[static_cast<size_t>(j)], a,
                       map.clause_color[static_cast<size_t>(j)]});
    }
  }
  for (int i = 0; i + 1 < s; ++i)
    edges.push_back({map.y[static_cast<size_t>(i)], map.y[static_cast<size_t>(i + 1)],
                     map.d_color[static_cast<size_t>(i)]});

  return {EdgeColoredGraph(3 * s + t, std::move(edges)), map};
}

ExtractedAssignment extract_assignment(const CnfFormula& f, const Reduction& r, const ColoredTree& t) {
  std::unordered_set<int> in_tree(t.vertices.begin(), t.vertices.end());
  for (int v : t.vertices)
    if (v < 0 || v >= r.graph.vertex_count())
      throw InvalidParametersError("tree is not over the reduced graph");

  ExtractedAssignment out;
  out.values.assign(static_cast<size_t>(r.map.s), false);
  for (int i = 0; i < r.map.s; ++i) {
    if (in_tree.count(r.map.a1[static_cast<size_t>(i)]))
      out.values[static_cast<size_t>(i)] = true;
    else if (in_tree.count(r.map.a2[static_cast<size_t>(i)]))
      out.values[static_cast<size_t>(i)] = false;
  }
  out.satisfied = count_satisfied(f, out.values);
  return out;
}

int count_satisfied(const CnfFormula& f, const std::vector<bool>& alpha) {
  int q = 0;
  for (const auto& clause : f.clauses) {
    for (int lit : clause) {
      bool val = alpha[static_cast<size_t>(std::abs(lit) - 1)];
      if ((lit > 0) == val) {
        ++q;
        break;
      }
    }
  }
  return q;
}

ColoredTree tree_from_assignment(const CnfFormula& f, const Reduction& r,
                                 const std::vector<bool>& alpha) {
  if (static_cast<int>(alpha.size()) != r.map.s)
    throw InvalidParametersError("assignment must cover all variables");
  std::vector<int> ids;
  auto edge_id = [&](int u, int v) {
    auto id = r.graph.find_edge(u, v);
    if (!id) throw InternalGuaranteeViolation("reduction edge missing");
    return *id;
  };
  for (int i = 0; i + 1 < r.map.s; ++i)
    ids.push_back(edge_id(r.map.y[static_cast<size_t>(i)], r.map.y[static_cast<size_t>(i + 1)]));
  for (int i = 0; i < r.map.s; ++i) {
    int a = alpha[static_cast<size_t>(i)] ? r.map.a1[static_cast<size_t>(i)]
                                          : r.map.a2[static_cast<size_t>(i)];
    ids.push_back(edge_id(r.map.y[static_cast<size_t>(i)], a));
  }
  for (int j = 0; j < static_cast<int>(f.clauses.size()); ++j) {
    // attach each satisfied clause through its lowest-index true literal
    for (int lit : f.clauses[static_cast<size_t>(j)]) {
      int i = std::abs(lit) - 1;
      bool val = alpha[static_cast<size_t>(i)];
      if ((lit > 0) != val) continue;
      int a = lit > 0 ? r.map.a1[static_cast<size_t>(i)] : r.map.a2[static_cast<size_t>(i)];
      ids.push_back(edge_id(r.map.clause_vertex[static_cast<size_t>(j)], a));
      break;
    }
  }
  return make_tree(r.graph, std::move(ids), TreeMode::Rainbow);
}

std::string reduction_map_to_json(const ReductionMap& map) {
  nlohmann::ordered_json j;
  j["s"] = map.s;
  j["t"] = map.t;
  j["y"] = map.y;
  j["a1"] = map.a1;
  j["a2"] = map.a2;
  j["clause_vertex"] = map.clause_vertex;
  j["b_color"] = map.b_color;
  j["clause_color"] = map.clause_color;
  j["d_color"] = map.d_color;
  return j.dump(2) + "\n";
}

}  // namespace pctree
