#include "pctree/graph.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

#include "pctree/errors.hpp"

namespace pctree {

EdgeColoredGraph::EdgeColoredGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0) throw InvalidParametersError("vertex count must be nonnegative");
  adj_.assign(static_cast<size_t>(n), {});
  std::set<std::pair<int, int>> seen;
  for (size_t id = 0; id < edges_.size(); ++id) {
    Edge& e = edges_[id];
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n)
      throw InvalidParametersError("edge endpoint out of range");
    if (e.u == e.v) throw InvalidParametersError("loops are not allowed");
    if (e.color < 1) throw InvalidParametersError("edge colors must be positive");
    auto key = std::minmax(e.u, e.v);
    if (!seen.insert(key).second) throw InvalidParametersError("parallel edges are not allowed");
    adj_[static_cast<size_t>(e.u)].push_back({e.v, static_cast<int>(id), e.color});
    adj_[static_cast<size_t>(e.v)].push_back({e.u, static_cast<int>(id), e.color});
    max_color_ = std::max(max_color_, e.color);
  }
}

std::span<const Incidence> EdgeColoredGraph::incident(int v) const {
  if (v < 0 || v >= n_) throw InvalidParametersError("vertex id out of range");
  return adj_[static_cast<size_t>(v)];
}

int EdgeColoredGraph::degree(int v) const { return static_cast<int>(incident(v).size()); }

std::optional<int> EdgeColoredGraph::find_edge(int u, int v) const {
  for (const Incidence& inc : incident(u))
    if (inc.to == v) return inc.edge;
  return std::nullopt;
}

int color_degree(const EdgeColoredGraph& g, int v) {
  std::unordered_set<int> colors;
  for (const Incidence& inc : g.incident(v)) colors.insert(inc.color);
  return static_cast<int>(colors.size());
}

int min_color_degree(const EdgeColoredGraph& g) {
  if (g.vertex_count() < 1) throw InvalidParametersError("graph has no vertices");
  int best = color_degree(g, 0);
  for (int v = 1; v < g.vertex_count(); ++v) best = std::min(best, color_degree(g, v));
  return best;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
    for (int i = 0; i < n; ++i) parent[static_cast<size_t>(i)] = i;
  }
  int find(int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  }
  // Returns false if already joined.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<size_t>(b)] = a;
    return true;
  }
};

}  // namespace

std::vector<MonoComponent> monochromatic_components(const EdgeColoredGraph& g) {
  std::map<int, std::vector<int>> by_color;
  for (int id = 0; id < g.edge_count(); ++id) by_color[g.edge(id).color].push_back(id);

  std::vector<MonoComponent> out;
  for (auto& [color, ids] : by_color) {
    UnionFind uf(g.vertex_count());
    for (int id : ids) uf.unite(g.edge(id).u, g.edge(id).v);
    std::map<int, std::vector<int>> comps;  // root -> edge ids
    for (int id : ids) comps[uf.find(g.edge(id).u)].push_back(id);
    for (auto& [root, comp_edges] : comps) out.push_back({color, comp_edges});
  }
  std::sort(out.begin(), out.end(),
            [](const MonoComponent& a, const MonoComponent& b) { return a.edges.front() < b.edges.front(); });
  return out;
}

StarCheck is_star(const EdgeColoredGraph& g, const std::vector<int>& comp) {
  if (comp.empty()) throw InvalidParametersError("is_star: empty component");
  const Edge& first = g.edge(comp.front());
  if (comp.size() == 1) {
    StarCheck res;
    res.star = true;
    res.center = std::min(first.u, first.v);
    res.alt_center = std::max(first.u, first.v);
    return res;
  }
  for (int cand : {std::min(first.u, first.v), std::max(first.u, first.v)}) {
    bool all = true;
    for (int id : comp) {
      const Edge& e = g.edge(id);
      if (e.u != cand && e.v != cand) {
        all = false;
        break;
      }
    }
    if (all) return {true, cand, -1};
  }
  return {};
}

bool is_star_colored(const EdgeColoredGraph& g) {
  for (const MonoComponent& comp : monochromatic_components(g))
    if (!is_star(g, comp.edges).star) return false;
  return true;
}

std::vector<int> boundary(const EdgeColoredGraph& g, const std::vector<int>& x) {
  if (x.empty()) throw InvalidParametersError("boundary: empty vertex set");
  std::vector<bool> in(static_cast<size_t>(g.vertex_count()), false);
  for (int v : x) {
    if (v < 0 || v >= g.vertex_count()) throw InvalidParametersError("vertex id out of range");
    in[static_cast<size_t>(v)] = true;
  }
  std::vector<int> out;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    if (in[static_cast<size_t>(e.u)] != in[static_cast<size_t>(e.v)]) out.push_back(id);
  }
  return out;
}

InducedSubgraph induced_subgraph(const EdgeColoredGraph& g, const std::vector<int>& x) {
  std::vector<int> keep(x);
  std::sort(keep.begin(), keep.end());
  keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
  std::vector<int> remap(static_cast<size_t>(g.vertex_count()), -1);
  for (size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= g.vertex_count())
      throw InvalidParametersError("vertex id out of range");
    remap[static_cast<size_t>(keep[i])] = static_cast<int>(i);
  }
  std::vector<Edge> edges;
  std::vector<int> orig_edge;
  for (int id = 0; id < g.edge_count(); ++id) {
    const Edge& e = g.edge(id);
    int nu = remap[static_cast<size_t>(e.u)];
    int nv = remap[static_cast<size_t>(e.v)];
    if (nu >= 0 && nv >= 0) {
      edges.push_back({nu, nv, e.color});
      orig_edge.push_back(id);
    }
  }
  return {EdgeColoredGraph(static_cast<int>(keep.size()), std::move(edges)), keep, orig_edge};
}

EdgeMaskedGraph subgraph_by_edges(const EdgeColoredGraph& g, const std::vector<bool>& alive) {
  if (static_cast<int>(alive.size()) != g.edge_count())
    throw InvalidParametersError("edge mask size mismatch");
  std::vector<Edge> edges;
  std::vector<int> orig_edge;
  for (int id = 0; id < g.edge_count(); ++id) {
    if (alive[static_cast<size_t>(id)]) {
      edges.push_back(g.edge(id));
      orig_edge.push_back(id);
    }
  }
  return {EdgeColoredGraph(g.vertex_count(), std::move(edges)), orig_edge};
}

std::vector<int> component_labels(const EdgeColoredGraph& g) {
  std::vector<int> label(static_cast<size_t>(g.vertex_count()), -1);
  int next = 0;
  std::vector<int> stack;
  for (int start = 0; start < g.vertex_count(); ++start) {
    if (label[static_cast<size_t>(start)] != -1) continue;
    label[static_cast<size_t>(start)] = next;
    stack.push_back(start);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (const Incidence& inc : g.incident(v)) {
        if (label[static_cast<size_t>(inc.to)] == -1) {
          label[static_cast<size_t>(inc.to)] = next;
          stack.push_back(inc.to);
        }
      }
    }
    ++next;
  }
  return label;
}

bool is_connected(const EdgeColoredGraph& g) {
  if (g.vertex_count() <= 1) return true;
  std::vector<int> label = component_labels(g);
  for (int v : label)
    if (v != 0) return false;
  return true;
}

std::vector<int> cut_edges(const EdgeColoredGraph& g) {
  const int n = g.vertex_count();
  std::vector<int> disc(static_cast<size_t>(n), -1), low(static_cast<size_t>(n), 0);
  std::vector<int> bridges;
  int timer = 0;

  // Iterative lowpoint DFS; parent edge ids break ties for parallel-free input.
  struct Frame {
    int v;
    int parent_edge;
    size_t next;
  };
  std::vector<Frame> stack;
  for (int start = 0; start < n; ++start) {
    if (disc[static_cast<size_t>(start)] != -1) continue;
    stack.push_back({start, -1, 0});
    disc[static_cast<size_t>(start)] = low[static_cast<size_t>(start)] = timer++;
    while (!stack.empty()) {
      Frame& f = stack.back();
      auto inc = g.incident(f.v);
      if (f.next < inc.size()) {
        const Incidence& edge = inc[f.next++];
        if (edge.edge == f.parent_edge) continue;
        if (disc[static_cast<size_t>(edge.to)] == -1) {
          disc[static_cast<size_t>(edge.to)] = low[static_cast<size_t>(edge.to)] = timer++;
          stack.push_back({edge.to, edge.edge, 0});
        } else {
          low[static_cast<size_t>(f.v)] =
              std::min(low[static_cast<size_t>(f.v)], disc[static_cast<size_t>(edge.to)]);
        }
      } else {
        int v = f.v;
        int pe = f.parent_edge;
        stack.pop_back();
        if (!stack.empty()) {
          int p = stack.back().v;
          low[static_cast<size_t>(p)] = std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
          if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)]) bridges.push_back(pe);
        }
      }
    }
  }
  std::sort(bridges.begin(), bridges.end());
  return bridges;
}

}  // namespace pctree
