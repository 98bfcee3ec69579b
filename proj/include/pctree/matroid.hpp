#pragma once

#include <vector>

#include "pctree/graph.hpp"

namespace pctree {

// A matroid over a subset of a host graph's edge ids. Two kinds:
//   Graphic   - independent sets are forests of the host graph
//   Partition - at most one edge per color class, none of a forbidden color
// Contraction by an edge set is represented on partition views as forbidding
// the contracted colors; contracted elements never re-enter here.
class MatroidView {
 public:
  enum class Kind { Graphic, Partition };

  static MatroidView graphic(const EdgeColoredGraph& g, std::vector<int> ground);
  static MatroidView partition(const EdgeColoredGraph& g, std::vector<int> ground,
                               std::vector<int> forbidden_colors = {});

  MatroidView restrict(const std::vector<int>& subset) const;
  // Partition only: removes the edges from the ground set and forbids their colors.
  MatroidView contract_edges(const std::vector<int>& edge_ids) const;

  bool is_independent(const std::vector<int>& set) const;

  Kind kind() const { return kind_; }
  const std::vector<int>& ground() const { return ground_; }
  const std::vector<int>& forbidden_colors() const { return forbidden_; }
  const EdgeColoredGraph& host() const { return *host_; }
  bool in_ground(int edge_id) const;

 private:
  MatroidView(Kind kind, const EdgeColoredGraph& g, std::vector<int> ground,
              std::vector<int> forbidden);

  Kind kind_;
  const EdgeColoredGraph* host_;
  std::vector<int> ground_;     // sorted edge ids
  std::vector<int> forbidden_;  // sorted colors, partition only
};

// Edmonds-style matroid intersection via shortest augmenting paths in the
// exchange digraph. Deterministic: BFS layers and candidates are visited in
// ascending edge id order. Requires identical ground sets.
std::vector<int> max_common_independent(const MatroidView& m1, const MatroidView& m2);

// Intersection rank of (graphic, rank-1 partition) equals n-1.
bool has_rainbow_spanning_tree(const EdgeColoredGraph& g);

}  // namespace pctree
