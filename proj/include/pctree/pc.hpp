#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pctree/extremal.hpp"
#include "pctree/graph.hpp"
#include "pctree/tree.hpp"

namespace pctree {

// Recoloring of a source graph's monochromatic star components with fresh
// colors. source_edge maps recolored edge ids back to source edge ids.
struct RecolorMap {
  std::vector<int> source_edge;
  std::vector<std::pair<int, std::vector<int>>> classes;  // fresh color -> source edges
};

struct RecoloredGraph {
  EdgeColoredGraph graph;
  RecolorMap map;
};

enum class NoWitnessKind { SmallDeltaExhausted, ExtremalFamily };

struct SolveOutcome {
  bool found = false;
  ColoredTree tree;  // properly colored against the original graph when found
  NoWitnessKind witness_kind = NoWitnessKind::SmallDeltaExhausted;
  std::optional<FamilyInstance> family;  // witness for ExtremalFamily
  int delta_c = 0;
  int threshold = 0;
};

enum class SolveBranch { Exhaustive, ExtremalNo, Bridge, Plain, Repair };

struct SolveReport {
  SolveBranch branch = SolveBranch::Exhaustive;
  std::optional<FamilyTag> repair_tag;
  int deleted_edges = 0;
  int delta_c = 0;
  int threshold = 0;
  int order = -1;  // -1 on NO
};

std::string branch_name(const SolveReport& report);

struct SolveResult {
  SolveOutcome outcome;
  SolveReport report;
};

// Full pipeline: constant-delta exhaustive search, extremal rejection,
// removable-edge preprocessing with the cut-edge certificate, star recoloring,
// repair of extremal recolored graphs, and delegation to the rainbow builder.
// delta0 >= 2; any value at least 2 is sound because the only family outside
// the repair case analysis has minimum color degree exactly 2.
SolveResult build_pc_tree(const EdgeColoredGraph& g, int delta0 = 3);

// DFS over partial properly colored trees; Some iff a properly colored tree
// of order exactly target_order exists (equivalently >= target_order).
std::optional<ColoredTree> exhaustive_threshold_search(const EdgeColoredGraph& g, int target_order);

struct PreprocessResult {
  std::vector<bool> alive;          // edges of G-star (cut event) or G'
  std::vector<int> deleted;         // in deletion order
  std::optional<int> cut_edge;      // removable cut edge that stopped the loop
};

// Deletes removable non-cut edges (both endpoints keep their color degree),
// smallest edge id first, restarting after each deletion.
PreprocessResult preprocess_removable_edges(const EdgeColoredGraph& g);

// The two-star certificate for a removable cut edge: a properly colored tree
// of order exactly 2*delta_c + 1.
ColoredTree bridge_certificate(const EdgeColoredGraph& g, const std::vector<bool>& alive,
                               int bridge_edge);
ColoredTree bridge_certificate(const EdgeColoredGraph& g, int bridge_edge);

// Requires every monochromatic component of the masked graph to be a star.
RecoloredGraph recolor_stars(const EdgeColoredGraph& g, const std::vector<bool>& alive);

struct RepairResult {
  std::vector<bool> alive;    // mask of G'' over the original graph plus e0
  int e0 = -1;
  std::vector<int> conflict;  // the inclusion-minimal E-bullet
};

// Re-adds one deleted edge e0 and removes an inclusion-minimal conflict set
// from the monochromatic component of e0's color so that all components stay
// stars and the minimum color degree is preserved. Throws NoValidRepairError
// when no deleted edge admits a valid pair.
RepairResult repair_extremal(const EdgeColoredGraph& g, const std::vector<bool>& alive_gprime,
                             const std::vector<int>& deleted);

// Maps a rainbow tree of the recolored graph back to source edge ids with
// original colors.
ColoredTree restore_colors(const ColoredTree& t, const RecolorMap& map);

}  // namespace pctree
