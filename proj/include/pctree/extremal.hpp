#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pctree/graph.hpp"

namespace pctree {

// The six parameterized families that attain the 2*delta_c bound without
// admitting a properly colored (resp. rainbow) tree of order 2*delta_c + 1.
enum class FamilyTag { G1, G2, G3, G4, G5, G6 };

std::string family_tag_name(FamilyTag tag);
std::optional<FamilyTag> family_tag_from_name(const std::string& name);

// A witness describing how a graph realizes a family template. Colors are the
// concrete values of the witnessed graph; recognition works up to color
// bijection and stores the bijection here.
//
// Role layout per tag:
//   G1:    clique = v_1..v_m, indep = u_1..u_k, class_colors = c_1..c_m,
//          tournament = arcs over clique positions, attach_sets = U_j per u_j
//   G2:    clique = {u_1, u_2}, indep = v_1..v_k,
//          class_colors = {c_1, c_1', c_2}, v1_part = vertex ids of V_1
//   G3/G4: clique = v_0..v_m, w set, indep = u_1..u_{m+k},
//          class_colors = {c, c_1..c_m}
//   G5/G6: clique = v_1..v_m, indep = u_1..u_{m+k}, class_colors = c_1..c_m
struct FamilyInstance {
  FamilyTag tag = FamilyTag::G5;
  int m = 0;
  int k = 0;
  std::vector<int> clique;
  std::vector<int> indep;
  int w = -1;
  std::vector<int> class_colors;
  std::vector<std::pair<int, int>> tournament;
  std::vector<std::vector<int>> attach_sets;
  std::vector<int> v1_part;
};

struct GeneratedFamily {
  EdgeColoredGraph graph;
  FamilyInstance inst;
};

// Realizes the family template. seed 0 gives the canonical instance (identity
// labels, full attachment sets, V_1' a single vertex); other seeds permute
// vertex labels and sample the free structure. For G2 the m parameter is
// ignored. Throws InvalidParametersError outside the legal ranges.
GeneratedFamily generate_family(FamilyTag tag, int m, int k, uint64_t seed = 0);

// Returns a verified witness if g is color-isomorphic to a member of any
// requested family, trying tags in canonical order G1..G6.
std::optional<FamilyInstance> recognize_family(const EdgeColoredGraph& g,
                                               const std::vector<FamilyTag>& tags);

// Regenerates the template from the instance roles and compares against g,
// edge for edge and color for color.
bool verify_membership(const EdgeColoredGraph& g, const FamilyInstance& inst);

std::string family_to_json(const FamilyInstance& inst);

}  // namespace pctree
