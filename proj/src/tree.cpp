#include "pctree/tree.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "pctree/errors.hpp"

namespace pctree {

namespace {

bool fail(std::string* reason, const std::string& why) {
  if (reason) *reason = why;
  return false;
}

}  // namespace

ColoredTree make_tree(const EdgeColoredGraph& g, std::vector<int> edge_ids, TreeMode mode) {
  std::sort(edge_ids.begin(), edge_ids.end());
  std::set<int> verts;
  for (int id : edge_ids) {
    verts.insert(g.edge(id).u);
    verts.insert(g.edge(id).v);
  }
  return {std::vector<int>(verts.begin(), verts.end()), std::move(edge_ids), mode};
}

ColoredTree single_vertex_tree(int v, TreeMode mode) { return {{v}, {}, mode}; }

int tree_order(const ColoredTree& t) { return static_cast<int>(t.vertices.size()); }

bool verify_tree(const EdgeColoredGraph& g, const ColoredTree& t, std::string* reason) {
  if (t.vertices.empty()) return fail(reason, "empty vertex set");
  std::unordered_set<int> vset;
  for (int v : t.vertices) {
    if (v < 0 || v >= g.vertex_count()) return fail(reason, "vertex id out of range");
    if (!vset.insert(v).second) return fail(reason, "duplicate vertex");
  }
  std::unordered_set<int> eset;
  for (int id : t.edges) {
    if (id < 0 || id >= g.edge_count()) return fail(reason, "edge id out of range");
    if (!eset.insert(id).second) return fail(reason, "duplicate edge");
  }
  if (t.edges.size() + 1 != t.vertices.size()) return fail(reason, "edge count is not order-1");

  // Connectivity and acyclicity over the claimed vertex set.
  std::unordered_map<int, int> index;
  for (size_t i = 0; i < t.vertices.size(); ++i) index[t.vertices[i]] = static_cast<int>(i);
  std::vector<int> parent(t.vertices.size());
  for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto find = [&](int x) {
    while (parent[static_cast<size_t>(x)] != x) {
      parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
      x = parent[static_cast<size_t>(x)];
    }
    return x;
  };
  for (int id : t.edges) {
    const Edge& e = g.edge(id);
    auto iu = index.find(e.u);
    auto iv = index.find(e.v);
    if (iu == index.end() || iv == index.end()) return fail(reason, "edge endpoint outside vertex set");
    int ru = find(iu->second), rv = find(iv->second);
    if (ru == rv) return fail(reason, "cycle in tree edges");
    parent[static_cast<size_t>(rv)] = ru;
  }
  // acyclic with |V|-1 edges over the vertex set implies spanning/connected

  if (t.mode == TreeMode::Rainbow) {
    std::unordered_set<int> colors;
    for (int id : t.edges)
      if (!colors.insert(g.edge(id).color).second) return fail(reason, "repeated color in rainbow tree");
  } else {
    std::unordered_map<int, std::unordered_set<int>> at_vertex;
    for (int id : t.edges) {
      const Edge& e = g.edge(id);
      if (!at_vertex[e.u].insert(e.color).second)
        return fail(reason, "equal colors at a shared endpoint");
      if (!at_vertex[e.v].insert(e.color).second)
        return fail(reason, "equal colors at a shared endpoint");
    }
  }
  return true;
}

}  // namespace pctree
