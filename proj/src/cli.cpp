#include "pctree/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "pctree/errors.hpp"
#include "pctree/extremal.hpp"
#include "pctree/io.hpp"
#include "pctree/oracle.hpp"
#include "pctree/pc.hpp"
#include "pctree/rainbow.hpp"
#include "pctree/random_graph.hpp"
#include "pctree/sat.hpp"

namespace pctree {

namespace {

constexpr int kExitTree = 0;
constexpr int kExitNo = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

TreeMode parse_mode(const std::string& mode) {
  if (mode == "rainbow") return TreeMode::Rainbow;
  if (mode == "proper") return TreeMode::ProperlyColored;
  throw InvalidParametersError("mode must be 'rainbow' or 'proper'");
}

int oracle_bound() {
  if (const char* env = std::getenv("PCTREE_ORACLE_BOUND")) {
    int bound = std::atoi(env);
    if (bound >= 1) return bound;
  }
  return oracle::Limits{}.max_vertices;
}

void emit_report(const std::string& path, const SolveResult& result) {
  nlohmann::ordered_json j;
  j["branch"] = branch_name(result.report);
  j["outcome"] = result.outcome.found ? "tree" : "no";
  j["delta_c"] = result.report.delta_c;
  j["threshold"] = result.report.threshold;
  j["deleted_edges"] = result.report.deleted_edges;
  j["order"] = result.report.order;
  if (!result.outcome.found)
    j["witness"] = result.outcome.witness_kind == NoWitnessKind::ExtremalFamily
                       ? "extremal-family"
                       : "small-delta-exhausted";
  std::ofstream out(path);
  if (!out) throw ParseError("cannot open report file: " + path);
  out << j.dump(2) << "\n";
}

int cmd_solve(const std::string& path, int delta0, const std::string& report_path,
              std::ostream& out) {
  EdgeColoredGraph g = read_graph_file(path);
  SolveResult result = build_pc_tree(g, delta0);
  if (!report_path.empty()) emit_report(report_path, result);
  if (result.outcome.found) {
    write_tree(out, g, result.outcome.tree);
    return kExitTree;
  }
  if (result.outcome.witness_kind == NoWitnessKind::ExtremalFamily) {
    const FamilyInstance& inst = *result.outcome.family;
    out << "NO extremal " << family_tag_name(inst.tag) << " m=" << inst.m << " k=" << inst.k
        << "\n";
  } else {
    out << "NO small-delta-exhausted\n";
  }
  return kExitNo;
}

int cmd_rainbow(const std::string& path, int root, std::ostream& out) {
  EdgeColoredGraph g = read_graph_file(path);
  ColoredTree t = build_rainbow_tree(g, {root});
  write_tree(out, g, t);
  return kExitTree;
}

int cmd_oracle(const std::string& path, const std::string& mode, std::ostream& out) {
  EdgeColoredGraph g = read_graph_file(path);
  oracle::Limits lim{oracle_bound()};
  auto result = oracle::max_colored_tree(g, parse_mode(mode), lim);
  write_tree(out, g, result.tree);
  return kExitTree;
}

int cmd_gen(const std::string& kind, int m, int k, uint64_t seed, int n, double p, int colors,
            const std::string& out_path, std::ostream& out) {
  EdgeColoredGraph g;
  std::string sidecar;
  if (kind == "random") {
    std::mt19937_64 rng(seed);
    g = random_connected_graph(rng, n, p, colors);
  } else {
    auto tag = family_tag_from_name(kind);
    if (!tag) throw InvalidParametersError("unknown family tag: " + kind);
    GeneratedFamily fam = generate_family(*tag, m, k, seed);
    g = std::move(fam.graph);
    sidecar = family_to_json(fam.inst);
  }
  if (out_path.empty()) {
    write_graph(out, g);
  } else {
    write_graph_file(out_path, g);
    if (!sidecar.empty()) {
      std::ofstream side(out_path + ".family.json");
      if (!side) throw ParseError("cannot open sidecar file");
      side << sidecar;
    }
  }
  return kExitTree;
}

int cmd_reduce(const std::string& cnf_path, const std::string& out_path, std::ostream& out) {
  CnfFormula f = parse_dimacs_file(cnf_path);
  Reduction r = reduce_to_rainbow_tree(f);
  if (out_path.empty()) {
    write_graph(out, r.graph);
  } else {
    write_graph_file(out_path, r.graph);
    std::ofstream side(out_path + ".map.json");
    if (!side) throw ParseError("cannot open sidecar file");
    side << reduction_map_to_json(r.map);
  }
  return kExitTree;
}

int cmd_verify(const std::string& graph_path, const std::string& tree_path,
               const std::string& mode, std::ostream& out) {
  EdgeColoredGraph g = read_graph_file(graph_path);
  ColoredTree t = read_tree_file(tree_path, g, parse_mode(mode));
  std::string why;
  if (verify_tree(g, t, &why)) {
    out << "VALID order=" << tree_order(t) << "\n";
    return kExitTree;
  }
  out << "INVALID " << why << "\n";
  return kExitNo;
}

int cmd_recognize(const std::string& path, const std::string& tags_csv, std::ostream& out) {
  EdgeColoredGraph g = read_graph_file(path);
  std::vector<FamilyTag> tags;
  std::stringstream ss(tags_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    auto tag = family_tag_from_name(item);
    if (!tag) throw InvalidParametersError("unknown family tag: " + item);
    tags.push_back(*tag);
  }
  auto inst = recognize_family(g, tags);
  if (!inst) {
    out << "NONE\n";
    return kExitNo;
  }
  out << "FAMILY " << family_tag_name(inst->tag) << " m=" << inst->m << " k=" << inst->k << "\n";
  return kExitTree;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"properly colored tree toolkit"};
  app.require_subcommand(1);

  std::string graph_path, tree_path, report_path, out_path, cnf_path;
  std::string mode = "proper";
  std::string tags = "G1,G2,G3,G4,G5,G6";
  std::string gen_kind;
  int delta0 = 3;
  int root = 0;
  int m = 1, k = 1, n = 8, colors = 3;
  double p = 0.5;
  uint64_t seed = 0;

  auto* solve = app.add_subcommand("solve", "find a properly colored tree above the guarantee");
  solve->add_option("graph", graph_path)->required();
  solve->add_option("--delta0", delta0)->check(CLI::Range(2, 1000));
  solve->add_option("--report", report_path);

  auto* rainbow = app.add_subcommand("rainbow", "rainbow tree in a star-colored graph");
  rainbow->add_option("graph", graph_path)->required();
  rainbow->add_option("--root", root);

  auto* orc = app.add_subcommand("oracle", "exact maximum colored tree at desk scale");
  orc->add_option("graph", graph_path)->required();
  orc->add_option("--mode", mode)->check(CLI::IsMember({"rainbow", "proper"}));

  auto* gen = app.add_subcommand("gen", "generate family or random instances");
  gen->add_option("kind", gen_kind, "G1..G6 or 'random'")->required();
  gen->add_option("--m", m);
  gen->add_option("--k", k);
  gen->add_option("--seed", seed);
  gen->add_option("--n", n);
  gen->add_option("--p", p);
  gen->add_option("--colors", colors);
  gen->add_option("-o,--output", out_path);

  auto* reduce = app.add_subcommand("reduce", "MAX-SAT to rainbow tree reduction");
  reduce->add_option("cnf", cnf_path)->required();
  reduce->add_option("-o,--output", out_path);

  auto* verify = app.add_subcommand("verify", "check a tree certificate");
  verify->add_option("graph", graph_path)->required();
  verify->add_option("tree", tree_path)->required();
  verify->add_option("--mode", mode)->check(CLI::IsMember({"rainbow", "proper"}));

  auto* recognize = app.add_subcommand("recognize", "extremal family recognition");
  recognize->add_option("graph", graph_path)->required();
  recognize->add_option("--tags", tags);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(graph_path, delta0, report_path, out);
    if (rainbow->parsed()) return cmd_rainbow(graph_path, root, out);
    if (orc->parsed()) return cmd_oracle(graph_path, mode, out);
    if (gen->parsed()) return cmd_gen(gen_kind, m, k, seed, n, p, colors, out_path, out);
    if (reduce->parsed()) return cmd_reduce(cnf_path, out_path, out);
    if (verify->parsed()) return cmd_verify(graph_path, tree_path, mode, out);
    if (recognize->parsed()) return cmd_recognize(graph_path, tags, out);
  } catch (const InternalGuaranteeViolation& e) {
    err << "internal guarantee violation: " << e.what() << "\n";
    return kExitInternal;
  } catch (const NoValidRepairError& e) {
    err << "no valid repair: " << e.what() << "\n";
    return kExitInternal;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace pctree
