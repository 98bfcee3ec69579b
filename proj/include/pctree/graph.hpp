#pragma once

#include <optional>
#include <span>
#include <vector>

namespace pctree {

// An undirected edge with a positive integer color.
struct Edge {
  int u = -1;
  int v = -1;
  int color = 0;
};

struct Incidence {
  int to = -1;
  int edge = -1;
  int color = 0;
};

// Simple undirected graph with a color per edge. Vertices are dense ids
// 0..n-1; colors are arbitrary positive integers stored as-is. Immutable
// after construction and safe to share read-only across threads.
class EdgeColoredGraph {
 public:
  EdgeColoredGraph() = default;
  // Validates: no loops, no parallel edges, colors >= 1, endpoints in range.
  EdgeColoredGraph(int n, std::vector<Edge> edges);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const Edge& edge(int id) const { return edges_[static_cast<size_t>(id)]; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Incidence> incident(int v) const;
  int degree(int v) const;
  int max_color() const { return max_color_; }
  std::optional<int> find_edge(int u, int v) const;

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adj_;
  int max_color_ = 0;
};

int color_degree(const EdgeColoredGraph& g, int v);
int min_color_degree(const EdgeColoredGraph& g);

// One connected component of a single color class.
struct MonoComponent {
  int color = 0;
  std::vector<int> edges;  // edge ids, ascending
};

// Partition of E into monochromatic components, ordered by smallest edge id.
std::vector<MonoComponent> monochromatic_components(const EdgeColoredGraph& g);

struct StarCheck {
  bool star = false;
  int center = -1;      // canonical center (lower id for a single edge)
  int alt_center = -1;  // second admissible center, single-edge case only
};

// comp must be a nonempty, connected edge set.
StarCheck is_star(const EdgeColoredGraph& g, const std::vector<int>& comp);
bool is_star_colored(const EdgeColoredGraph& g);

// Edges with exactly one endpoint in x.
std::vector<int> boundary(const EdgeColoredGraph& g, const std::vector<int>& x);

struct InducedSubgraph {
  EdgeColoredGraph graph;
  std::vector<int> orig_vertex;  // new vertex id -> original id
  std::vector<int> orig_edge;    // new edge id -> original id
};
InducedSubgraph induced_subgraph(const EdgeColoredGraph& g, const std::vector<int>& x);

// Same vertex set, alive edges only; orig_edge maps new ids back.
struct EdgeMaskedGraph {
  EdgeColoredGraph graph;
  std::vector<int> orig_edge;
};
EdgeMaskedGraph subgraph_by_edges(const EdgeColoredGraph& g, const std::vector<bool>& alive);

// Component label per vertex, labels are 0,1,... in order of first vertex.
std::vector<int> component_labels(const EdgeColoredGraph& g);
bool is_connected(const EdgeColoredGraph& g);

// Bridges via lowpoint DFS, ascending edge ids.
std::vector<int> cut_edges(const EdgeColoredGraph& g);

}  // namespace pctree
