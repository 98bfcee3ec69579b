#include "pctree/matroid.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_map>
#include <unordered_set>

#include "pctree/errors.hpp"

namespace pctree {

MatroidView::MatroidView(Kind kind, const EdgeColoredGraph& g, std::vector<int> ground,
                         std::vector<int> forbidden)
    : kind_(kind), host_(&g), ground_(std::move(ground)), forbidden_(std::move(forbidden)) {
  std::sort(ground_.begin(), ground_.end());
  ground_.erase(std::unique(ground_.begin(), ground_.end()), ground_.end());
  for (int id : ground_)
    if (id < 0 || id >= g.edge_count()) throw InvalidParametersError("ground element out of range");
  std::sort(forbidden_.begin(), forbidden_.end());
  forbidden_.erase(std::unique(forbidden_.begin(), forbidden_.end()), forbidden_.end());
}

MatroidView MatroidView::graphic(const EdgeColoredGraph& g, std::vector<int> ground) {
  return MatroidView(Kind::Graphic, g, std::move(ground), {});
}

MatroidView MatroidView::partition(const EdgeColoredGraph& g, std::vector<int> ground,
                                   std::vector<int> forbidden_colors) {
  return MatroidView(Kind::Partition, g, std::move(ground), std::move(forbidden_colors));
}

bool MatroidView::in_ground(int edge_id) const {
  return std::binary_search(ground_.begin(), ground_.end(), edge_id);
}

MatroidView MatroidView::restrict(const std::vector<int>& subset) const {
  for (int id : subset)
    if (!in_ground(id)) throw InvalidParametersError("restriction outside ground set");
  return MatroidView(kind_, *host_, subset, forbidden_);
}

MatroidView MatroidView::contract_edges(const std::vector<int>& edge_ids) const {
  if (kind_ != Kind::Partition)
    throw InvalidParametersError("contraction is only represented on partition views");
  std::vector<int> forbidden(forbidden_);
  std::unordered_set<int> removed;
  for (int id : edge_ids) {
    if (id < 0 || id >= host_->edge_count())
      throw InvalidParametersError("contracted edge out of range");
    forbidden.push_back(host_->edge(id).color);
    removed.insert(id);
  }
  std::vector<int> ground;
  for (int id : ground_)
    if (!removed.count(id)) ground.push_back(id);
  return MatroidView(kind_, *host_, std::move(ground), std::move(forbidden));
}

bool MatroidView::is_independent(const std::vector<int>& set) const {
  for (int id : set)
    if (!in_ground(id)) throw InvalidParametersError("element outside ground set");

  if (kind_ == Kind::Graphic) {
    std::unordered_map<int, int> parent;  // vertex -> representative
    std::function<int(int)> find = [&](int x) {
      auto it = parent.find(x);
      if (it == parent.end() || it->second == x) return x;
      return it->second = find(it->second);
    };
    for (int id : set) {
      const Edge& e = host_->edge(id);
      int ru = find(e.u), rv = find(e.v);
      if (ru == rv) return false;
      parent[ru] = ru;
      parent[rv] = ru;
    }
    return true;
  }

  std::unordered_set<int> used;
  for (int id : set) {
    int c = host_->edge(id).color;
    if (std::binary_search(forbidden_.begin(), forbidden_.end(), c)) return false;
    if (!used.insert(c).second) return false;
  }
  return true;
}

std::vector<int> max_common_independent(const MatroidView& m1, const MatroidView& m2) {
  if (m1.ground() != m2.ground()) throw InvalidParametersError("mismatched ground sets");
  const std::vector<int>& ground = m1.ground();
  const int n = static_cast<int>(ground.size());

  std::vector<bool> in_set(static_cast<size_t>(n), false);
  std::vector<int> current;  // sorted edge ids

  auto with_added = [&](int pos) {
    std::vector<int> s(current);
    s.push_back(ground[static_cast<size_t>(pos)]);
    return s;
  };
  auto with_swapped = [&](int out_pos, int in_pos) {
    std::vector<int> s;
    s.reserve(current.size());
    int out_id = ground[static_cast<size_t>(out_pos)];
    for (int id : current)
      if (id != out_id) s.push_back(id);
    s.push_back(ground[static_cast<size_t>(in_pos)]);
    return s;
  };

  while (true) {
    std::vector<bool> z1(static_cast<size_t>(n), false), z2(static_cast<size_t>(n), false);
    for (int pos = 0; pos < n; ++pos) {
      if (in_set[static_cast<size_t>(pos)]) continue;
      auto cand = with_added(pos);
      z1[static_cast<size_t>(pos)] = m1.is_independent(cand);
      z2[static_cast<size_t>(pos)] = m2.is_independent(cand);
    }

    // BFS over the exchange digraph from Z1, stopping at the first Z2 node.
    std::vector<int> parent(static_cast<size_t>(n), -2);  // -2 unvisited, -1 source
    std::vector<int> queue;
    int goal = -1;
    for (int pos = 0; pos < n && goal == -1; ++pos) {
      if (z1[static_cast<size_t>(pos)]) {
        parent[static_cast<size_t>(pos)] = -1;
        if (z2[static_cast<size_t>(pos)]) goal = pos;
        queue.push_back(pos);
      }
    }
    size_t head = 0;
    while (goal == -1 && head < queue.size()) {
      int a = queue[head++];
      bool a_in = in_set[static_cast<size_t>(a)];
      for (int b = 0; b < n && goal == -1; ++b) {
        if (parent[static_cast<size_t>(b)] != -2) continue;
        if (in_set[static_cast<size_t>(b)] == a_in) continue;
        bool arc = false;
        if (a_in) {
          // (e, f): current - e + f independent in M1
          arc = m1.is_independent(with_swapped(a, b));
        } else {
          // (f, e): current - e + f independent in M2
          arc = m2.is_independent(with_swapped(b, a));
        }
        if (!arc) continue;
        parent[static_cast<size_t>(b)] = a;
        if (!in_set[static_cast<size_t>(b)] && z2[static_cast<size_t>(b)]) {
          goal = b;
          break;
        }
        queue.push_back(b);
      }
    }
    if (goal == -1) break;

    for (int x = goal; x != -1; x = parent[static_cast<size_t>(x)])
      in_set[static_cast<size_t>(x)] = !in_set[static_cast<size_t>(x)];
    current.clear();
    for (int pos = 0; pos < n; ++pos)
      if (in_set[static_cast<size_t>(pos)]) current.push_back(ground[static_cast<size_t>(pos)]);
  }

  assert(m1.is_independent(current) && m2.is_independent(current));
  return current;
}

bool has_rainbow_spanning_tree(const EdgeColoredGraph& g) {
  if (!is_connected(g)) throw NotConnectedError("rainbow spanning tree requires a connected graph");
  std::vector<int> all(static_cast<size_t>(g.edge_count()));
  for (int i = 0; i < g.edge_count(); ++i) all[static_cast<size_t>(i)] = i;
  auto best = max_common_independent(MatroidView::graphic(g, all), MatroidView::partition(g, all));
  return static_cast<int>(best.size()) == g.vertex_count() - 1;
}

}  // namespace pctree
