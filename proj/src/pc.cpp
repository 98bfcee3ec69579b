#include "pctree/pc.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>

#include "pctree/errors.hpp"
#include "pctree/rainbow.hpp"

namespace pctree {

std::string branch_name(const SolveReport& report) {
  switch (report.branch) {
    case SolveBranch::Exhaustive: return "exhaustive";
    case SolveBranch::ExtremalNo: return "extremal-no";
    case SolveBranch::Bridge: return "bridge";
    case SolveBranch::Plain: return "plain";
    case SolveBranch::Repair:
      return "repair(" + (report.repair_tag ? family_tag_name(*report.repair_tag) : "?") + ")";
  }
  return "?";
}

std::optional<ColoredTree> exhaustive_threshold_search(const EdgeColoredGraph& g, int target_order) {
  if (target_order < 1) throw InvalidParametersError("target order must be positive");
  if (!is_connected(g)) throw NotConnectedError("exhaustive search requires a connected graph");
  const int n = g.vertex_count();
  if (target_order > n) return std::nullopt;
  if (target_order == 1) return single_vertex_tree(0, TreeMode::ProperlyColored);

  std::vector<bool> in_tree(static_cast<size_t>(n), false);
  std::vector<std::vector<int>> used(static_cast<size_t>(n));
  std::vector<int> edges;

  std::function<bool(int, int)> grow = [&](int root, int size) {
    if (size == target_order) return true;
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      bool iu = in_tree[static_cast<size_t>(e.u)];
      bool iv = in_tree[static_cast<size_t>(e.v)];
      if (iu == iv) continue;
      int attach = iu ? e.u : e.v;
      int fresh = iu ? e.v : e.u;
      auto& at = used[static_cast<size_t>(attach)];
      if (std::find(at.begin(), at.end(), e.color) != at.end()) continue;
      at.push_back(e.color);
      used[static_cast<size_t>(fresh)].push_back(e.color);
      in_tree[static_cast<size_t>(fresh)] = true;
      edges.push_back(id);
      if (grow(root, size + 1)) return true;
      edges.pop_back();
      in_tree[static_cast<size_t>(fresh)] = false;
      used[static_cast<size_t>(fresh)].pop_back();
      at.pop_back();
    }
    return false;
  };

  for (int root = 0; root < n; ++root) {
    in_tree.assign(static_cast<size_t>(n), false);
    for (auto& u : used) u.clear();
    edges.clear();
    in_tree[static_cast<size_t>(root)] = true;
    if (grow(root, 1)) return make_tree(g, edges, TreeMode::ProperlyColored);
  }
  return std::nullopt;
}

namespace {

// Per-vertex counts of alive edges by color; an edge is removable iff both
// endpoints see its color at least twice.
class ColorCounts {
 public:
  ColorCounts(const EdgeColoredGraph& g, const std::vector<bool>& alive)
      : g_(g), count_(static_cast<size_t>(g.vertex_count())) {
    for (int id = 0; id < g.edge_count(); ++id)
      if (alive[static_cast<size_t>(id)]) add(id, 1);
  }
  void remove_edge(int id) { add(id, -1); }
  bool removable(int id) const {
    const Edge& e = g_.edge(id);
    return at(e.u, e.color) >= 2 && at(e.v, e.color) >= 2;
  }
  int at(int v, int color) const {
    auto& m = count_[static_cast<size_t>(v)];
    auto it = m.find(color);
    return it == m.end() ? 0 : it->second;
  }

 private:
  void add(int id, int delta) {
    const Edge& e = g_.edge(id);
    count_[static_cast<size_t>(e.u)][e.color] += delta;
    count_[static_cast<size_t>(e.v)][e.color] += delta;
  }
  const EdgeColoredGraph& g_;
  std::vector<std::unordered_map<int, int>> count_;
};

bool masked_edge_is_bridge(const EdgeColoredGraph& g, const std::vector<bool>& alive, int edge_id) {
  EdgeMaskedGraph sub = subgraph_by_edges(g, alive);
  for (int id = 0; id < static_cast<int>(sub.orig_edge.size()); ++id)
    if (sub.orig_edge[static_cast<size_t>(id)] == edge_id) {
      auto bridges = cut_edges(sub.graph);
      return std::binary_search(bridges.begin(), bridges.end(), id);
    }
  throw InvalidParametersError("edge is not alive");
}

int masked_min_color_degree(const EdgeColoredGraph& g, const std::vector<bool>& alive) {
  return min_color_degree(subgraph_by_edges(g, alive).graph);
}

bool masked_connected(const EdgeColoredGraph& g, const std::vector<bool>& alive) {
  return is_connected(subgraph_by_edges(g, alive).graph);
}

bool masked_all_stars(const EdgeColoredGraph& g, const std::vector<bool>& alive) {
  return is_star_colored(subgraph_by_edges(g, alive).graph);
}

}  // namespace

PreprocessResult preprocess_removable_edges(const EdgeColoredGraph& g) {
  PreprocessResult res;
  res.alive.assign(static_cast<size_t>(g.edge_count()), true);
  ColorCounts counts(g, res.alive);

  while (true) {
    int pick = -1;
    for (int id = 0; id < g.edge_count(); ++id) {
      if (!res.alive[static_cast<size_t>(id)]) continue;
      if (counts.removable(id)) {
        pick = id;
        break;
      }
    }
    if (pick == -1) break;
    if (masked_edge_is_bridge(g, res.alive, pick)) {
      res.cut_edge = pick;
      break;
    }
    res.alive[static_cast<size_t>(pick)] = false;
    counts.remove_edge(pick);
    res.deleted.push_back(pick);
  }
  return res;
}

ColoredTree bridge_certificate(const EdgeColoredGraph& g, const std::vector<bool>& alive,
                               int bridge_edge) {
  if (bridge_edge < 0 || bridge_edge >= g.edge_count() || !alive[static_cast<size_t>(bridge_edge)])
    throw PreconditionViolatedError("bridge edge is not alive");
  const Edge& bridge = g.edge(bridge_edge);
  const int gamma = bridge.color;

  // Sides of the cut.
  std::vector<bool> cut_alive(alive);
  cut_alive[static_cast<size_t>(bridge_edge)] = false;
  EdgeMaskedGraph without = subgraph_by_edges(g, cut_alive);
  std::vector<int> label = component_labels(without.graph);
  if (label[static_cast<size_t>(bridge.u)] == label[static_cast<size_t>(bridge.v)])
    throw PreconditionViolatedError("edge is not a cut edge of the masked graph");

  const int delta_c = masked_min_color_degree(g, alive);

  struct Side {
    int anchor;                          // v or w
    int witness_edge = -1;               // same-colored edge inside the side
    std::vector<std::pair<int, int>> reps;  // (neighbor, edge id), distinct colors
  };
  auto build_side = [&](int anchor) {
    Side side{anchor};
    std::map<int, std::pair<int, int>> by_color;  // color -> first (neighbor, edge)
    for (const Incidence& inc : g.incident(anchor)) {
      if (!alive[static_cast<size_t>(inc.edge)] || inc.edge == bridge_edge) continue;
      if (label[static_cast<size_t>(inc.to)] != label[static_cast<size_t>(anchor)]) continue;
      by_color.emplace(inc.color, std::make_pair(inc.to, inc.edge));
    }
    auto it = by_color.find(gamma);
    if (it == by_color.end())
      throw PreconditionViolatedError("color degree is not preserved on one side of the cut");
    side.witness_edge = it->second.second;
    for (auto& [color, rep] : by_color) side.reps.push_back(rep);
    return side;
  };
  Side sv = build_side(bridge.u);
  Side sw = build_side(bridge.v);

  auto reps_without_witness = [&](const Side& side) {
    std::vector<std::pair<int, int>> out;
    for (auto& rep : side.reps)
      if (rep.second != side.witness_edge) out.push_back(rep);
    return out;
  };

  std::vector<int> tree_edges{bridge_edge};
  const int av = static_cast<int>(sv.reps.size());
  const int aw = static_cast<int>(sw.reps.size());
  if (av < delta_c || aw < delta_c)
    throw PreconditionViolatedError("side color degree below the minimum color degree");

  if (av >= delta_c + 1 || aw >= delta_c + 1) {
    const Side& big = av >= delta_c + 1 ? sv : sw;
    const Side& small = av >= delta_c + 1 ? sw : sv;
    auto big_leaves = reps_without_witness(big);      // delta_c + ... distinct non-gamma colors
    auto small_leaves = reps_without_witness(small);  // delta_c - 1 needed
    big_leaves.resize(static_cast<size_t>(delta_c));
    small_leaves.resize(static_cast<size_t>(delta_c - 1));
    for (auto& [to, edge] : big_leaves) tree_edges.push_back(edge);
    for (auto& [to, edge] : small_leaves) tree_edges.push_back(edge);
  } else {
    if (delta_c < 2)
      throw PreconditionViolatedError("two-star case needs minimum color degree at least 2");
    auto v_leaves = reps_without_witness(sv);  // delta_c - 1 of them
    auto w_leaves = reps_without_witness(sw);
    // extra leaf z off y, avoiding the blocked set B = (A_v - u - y) + v
    const auto [y, y_edge] = v_leaves.front();
    std::set<int> blocked{sv.anchor};
    for (size_t i = 1; i < v_leaves.size(); ++i) blocked.insert(v_leaves[i].first);
    const int y_color = g.edge(y_edge).color;
    int z_edge = -1;
    for (const Incidence& inc : g.incident(y)) {
      if (!alive[static_cast<size_t>(inc.edge)] || inc.edge == bridge_edge) continue;
      if (blocked.count(inc.to) || inc.color == y_color) continue;
      z_edge = inc.edge;
      break;
    }
    if (z_edge == -1) throw PreconditionViolatedError("no extra leaf available off the two stars");
    for (auto& [to, edge] : v_leaves) tree_edges.push_back(edge);
    for (auto& [to, edge] : w_leaves) tree_edges.push_back(edge);
    tree_edges.push_back(z_edge);
  }

  ColoredTree t = make_tree(g, std::move(tree_edges), TreeMode::ProperlyColored);
  std::string why;
  if (!verify_tree(g, t, &why) || tree_order(t) != 2 * delta_c + 1)
    throw InternalGuaranteeViolation("bridge certificate invalid: " + why);
  return t;
}

ColoredTree bridge_certificate(const EdgeColoredGraph& g, int bridge_edge) {
  return bridge_certificate(g, std::vector<bool>(static_cast<size_t>(g.edge_count()), true),
                            bridge_edge);
}

RecoloredGraph recolor_stars(const EdgeColoredGraph& g, const std::vector<bool>& alive) {
  EdgeMaskedGraph sub = subgraph_by_edges(g, alive);
  auto comps = monochromatic_components(sub.graph);
  for (const auto& comp : comps)
    if (!is_star(sub.graph, comp.edges).star)
      throw NotStarColoredError("monochromatic component is not a star");
  std::sort(comps.begin(), comps.end(), [&](const MonoComponent& a, const MonoComponent& b) {
    return sub.orig_edge[static_cast<size_t>(a.edges.front())] <
           sub.orig_edge[static_cast<size_t>(b.edges.front())];
  });

  std::vector<int> fresh_of_edge(sub.orig_edge.size(), 0);
  RecolorMap map;
  int next = g.max_color();
  for (const auto& comp : comps) {
    ++next;
    std::vector<int> source;
    for (int id : comp.edges) {
      fresh_of_edge[static_cast<size_t>(id)] = next;
      source.push_back(sub.orig_edge[static_cast<size_t>(id)]);
    }
    std::sort(source.begin(), source.end());
    map.classes.emplace_back(next, std::move(source));
  }

  std::vector<Edge> edges;
  for (int id = 0; id < sub.graph.edge_count(); ++id) {
    Edge e = sub.graph.edge(id);
    e.color = fresh_of_edge[static_cast<size_t>(id)];
    edges.push_back(e);
    map.source_edge.push_back(sub.orig_edge[static_cast<size_t>(id)]);
  }
  return {EdgeColoredGraph(g.vertex_count(), std::move(edges)), std::move(map)};
}

namespace {

// Edges of the monochromatic component of color alpha containing vertex seed
// in the masked graph; empty if seed has no alpha edge.
std::set<int> alpha_component_at(const EdgeColoredGraph& g, const std::vector<bool>& alive,
                                 int alpha, int seed) {
  std::set<int> comp;
  std::vector<int> vertex_stack{seed};
  std::set<int> seen_vertices{seed};
  while (!vertex_stack.empty()) {
    int v = vertex_stack.back();
    vertex_stack.pop_back();
    for (const Incidence& inc : g.incident(v)) {
      if (!alive[static_cast<size_t>(inc.edge)] || inc.color != alpha) continue;
      comp.insert(inc.edge);
      if (seen_vertices.insert(inc.to).second) vertex_stack.push_back(inc.to);
    }
  }
  return comp;
}

}  // namespace

RepairResult repair_extremal(const EdgeColoredGraph& g, const std::vector<bool>& alive_gprime,
                             const std::vector<int>& deleted) {
  if (deleted.empty()) throw NoValidRepairError("no deleted edges to repair with");
  const int delta_c = masked_min_color_degree(g, alive_gprime);

  auto valid = [&](const std::vector<bool>& mask) {
    return masked_all_stars(g, mask) && masked_connected(g, mask) &&
           masked_min_color_degree(g, mask) == delta_c;
  };

  std::vector<int> order(deleted);
  std::sort(order.begin(), order.end());
  for (int e0 : order) {
    const Edge& e = g.edge(e0);
    const int alpha = e.color;
    std::vector<bool> with_e0(alive_gprime);
    with_e0[static_cast<size_t>(e0)] = true;

    // E-bullet candidates: the repaired component of e0 must become a star
    // centered at one endpoint. All of G's component edges at the far
    // endpoint go; on the near side either the incident edges stay (and the
    // rest of that star goes) or they go themselves.
    std::vector<std::vector<int>> candidates;
    for (int center : {std::min(e.u, e.v), std::max(e.u, e.v)}) {
      int other = center == e.u ? e.v : e.u;
      std::set<int> star_center = alpha_component_at(g, alive_gprime, alpha, center);
      std::set<int> star_other = alpha_component_at(g, alive_gprime, alpha, other);
      std::vector<int> at_other, at_center, center_star_rest;
      for (int id : star_other) {
        const Edge& f = g.edge(id);
        if (f.u == other || f.v == other) at_other.push_back(id);
      }
      for (int id : star_center) {
        const Edge& f = g.edge(id);
        if (f.u == center || f.v == center)
          at_center.push_back(id);
        else if (f.u != other && f.v != other)
          center_star_rest.push_back(id);
      }
      std::vector<int> keep_near(at_other);
      keep_near.insert(keep_near.end(), center_star_rest.begin(), center_star_rest.end());
      std::sort(keep_near.begin(), keep_near.end());
      keep_near.erase(std::unique(keep_near.begin(), keep_near.end()), keep_near.end());
      candidates.push_back(keep_near);  // keep the center-incident edges
      std::vector<int> drop_near(at_other);
      drop_near.insert(drop_near.end(), at_center.begin(), at_center.end());
      std::sort(drop_near.begin(), drop_near.end());
      drop_near.erase(std::unique(drop_near.begin(), drop_near.end()), drop_near.end());
      candidates.push_back(drop_near);  // detach e0 from the near star instead
    }
    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    for (auto& cand : candidates) {
      std::vector<bool> mask(with_e0);
      for (int id : cand) mask[static_cast<size_t>(id)] = false;
      if (!valid(mask)) continue;
      // shrink to inclusion-minimality
      std::vector<int> conflict(cand);
      for (size_t i = 0; i < conflict.size();) {
        std::vector<bool> trial(mask);
        trial[static_cast<size_t>(conflict[i])] = true;
        if (valid(trial)) {
          mask = trial;
          conflict.erase(conflict.begin() + static_cast<long>(i));
        } else {
          ++i;
        }
      }
      return {mask, e0, conflict};
    }
  }
  throw NoValidRepairError("no deleted edge admits a repair set");
}

ColoredTree restore_colors(const ColoredTree& t, const RecolorMap& map) {
  ColoredTree out;
  out.vertices = t.vertices;
  out.mode = TreeMode::ProperlyColored;
  for (int id : t.edges) {
    if (id < 0 || id >= static_cast<int>(map.source_edge.size()))
      throw InvalidParametersError("tree edge outside the recolored graph");
    out.edges.push_back(map.source_edge[static_cast<size_t>(id)]);
  }
  std::sort(out.edges.begin(), out.edges.end());
  return out;
}

SolveResult build_pc_tree(const EdgeColoredGraph& g, int delta0) {
  if (delta0 < 2) throw InvalidParametersError("delta0 must be at least 2");
  if (!is_connected(g)) throw NotConnectedError("input graph is not connected");

  const int n = g.vertex_count();
  const int delta_c = min_color_degree(g);
  const int threshold = std::min(n, 2 * delta_c + 1);

  SolveResult res;
  res.outcome.delta_c = delta_c;
  res.outcome.threshold = threshold;
  res.report.delta_c = delta_c;
  res.report.threshold = threshold;

  auto finish_tree = [&](ColoredTree t, SolveBranch branch) {
    std::string why;
    if (!verify_tree(g, t, &why))
      throw InternalGuaranteeViolation("pipeline produced an invalid tree: " + why);
    if (tree_order(t) < threshold)
      throw InternalGuaranteeViolation("pipeline tree below the guaranteed threshold");
    res.outcome.found = true;
    res.outcome.tree = std::move(t);
    res.report.branch = branch;
    res.report.order = tree_order(res.outcome.tree);
    return res;
  };

  if (delta_c <= delta0) {
    res.report.branch = SolveBranch::Exhaustive;
    if (auto t = exhaustive_threshold_search(g, threshold)) return finish_tree(std::move(*t), SolveBranch::Exhaustive);
    res.outcome.found = false;
    res.outcome.witness_kind = NoWitnessKind::SmallDeltaExhausted;
    return res;
  }

  if (auto inst = recognize_family(g, {FamilyTag::G1, FamilyTag::G2, FamilyTag::G3, FamilyTag::G5})) {
    res.outcome.found = false;
    res.outcome.witness_kind = NoWitnessKind::ExtremalFamily;
    res.outcome.family = std::move(inst);
    res.report.branch = SolveBranch::ExtremalNo;
    return res;
  }

  PreprocessResult pre = preprocess_removable_edges(g);
  res.report.deleted_edges = static_cast<int>(pre.deleted.size());
  if (pre.cut_edge) return finish_tree(bridge_certificate(g, pre.alive, *pre.cut_edge), SolveBranch::Bridge);

  assert(masked_all_stars(g, pre.alive));
  assert(masked_connected(g, pre.alive));
  assert(masked_min_color_degree(g, pre.alive) == delta_c);

  RecoloredGraph bar = recolor_stars(g, pre.alive);
  if (auto inst = recognize_family(bar.graph,
                                   {FamilyTag::G1, FamilyTag::G2, FamilyTag::G4, FamilyTag::G6})) {
    RepairResult rep = repair_extremal(g, pre.alive, pre.deleted);
    RecoloredGraph bar2 = recolor_stars(g, rep.alive);
    ColoredTree rainbow = build_rainbow_tree(bar2.graph);
    res.report.repair_tag = inst->tag;
    return finish_tree(restore_colors(rainbow, bar2.map), SolveBranch::Repair);
  }

  ColoredTree rainbow = build_rainbow_tree(bar.graph);
  return finish_tree(restore_colors(rainbow, bar.map), SolveBranch::Plain);
}

}  // namespace pctree
