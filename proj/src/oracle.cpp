#include "pctree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <unordered_map>

#include "pctree/errors.hpp"

namespace pctree::oracle {

namespace {

constexpr size_t kMaxRainbowStates = size_t{1} << 25;

void check_connected(const EdgeColoredGraph& g) {
  if (!is_connected(g)) throw NotConnectedError("oracle requires a connected graph");
}

std::unordered_map<int, int> dense_colors(const EdgeColoredGraph& g, int base) {
  std::map<int, int> sorted;
  for (const Edge& e : g.edges()) sorted.emplace(e.color, 0);
  std::unordered_map<int, int> out;
  int next = base;
  for (auto& [color, unused] : sorted) out[color] = next++;
  return out;
}

MaxTreeResult max_rainbow_tree(const EdgeColoredGraph& g) {
  const int n = g.vertex_count();
  auto color_id = dense_colors(g, 0);
  const int k = static_cast<int>(color_id.size());
  if (n + k > 62) throw BoundExceededError("too many vertices plus colors for rainbow search");

  struct Prev {
    uint64_t state;
    int edge;
  };
  std::unordered_map<uint64_t, Prev> parent;
  std::vector<uint64_t> queue;
  for (int v = 0; v < n; ++v) {
    uint64_t key = uint64_t{1} << v;
    parent.emplace(key, Prev{0, -1});
    queue.push_back(key);
  }
  uint64_t best = queue.front();
  int best_order = 1;

  for (size_t head = 0; head < queue.size(); ++head) {
    uint64_t key = queue[head];
    uint64_t w = key & ((uint64_t{1} << n) - 1);
    uint64_t used = key >> n;
    for (int id = 0; id < g.edge_count(); ++id) {
      const Edge& e = g.edge(id);
      bool inu = (w >> e.u) & 1;
      bool inv = (w >> e.v) & 1;
      if (inu == inv) continue;
      int c = color_id.at(e.color);
      if ((used >> c) & 1) continue;
      uint64_t next = (w | (uint64_t{1} << e.u) | (uint64_t{1} << e.v)) | ((used | (uint64_t{1} << c)) << n);
      if (parent.emplace(next, Prev{key, id}).second) {
        if (parent.size() > kMaxRainbowStates)
          throw BoundExceededError("rainbow search state limit exceeded");
        queue.push_back(next);
        int order = std::popcount(next & ((uint64_t{1} << n) - 1));
        if (order > best_order) {
          best_order = order;
          best = next;
        }
      }
    }
  }

  if (best_order == 1) return {1, single_vertex_tree(0, TreeMode::Rainbow)};
  std::vector<int> ids;
  for (uint64_t key = best;;) {
    const Prev& p = parent.at(key);
    if (p.edge < 0) break;
    ids.push_back(p.edge);
    key = p.state;
  }
  return {best_order, make_tree(g, std::move(ids), TreeMode::Rainbow)};
}

// Rooted subset DP for properly colored trees. exists(v, S, banned, cmin) is
// true iff some properly colored tree rooted at v spans exactly S, the colors
// of v's child edges are pairwise distinct with dense ids >= cmin, and none of
// them equals banned (the parent edge color; 0 means unconstrained).
class ProperSearch {
 public:
  explicit ProperSearch(const EdgeColoredGraph& g) : g_(g), n_(g.vertex_count()) {
    color_id_ = dense_colors(g, 1);
    if (n_ > 14) throw BoundExceededError("too many vertices for properly colored search");
    if (color_id_.size() > 126) throw BoundExceededError("too many colors for properly colored search");
    adj_mask_.assign(static_cast<size_t>(n_), 0u);
    for (const Edge& e : g.edges()) {
      adj_mask_[static_cast<size_t>(e.u)] |= 1u << e.v;
      adj_mask_[static_cast<size_t>(e.v)] |= 1u << e.u;
    }
    connected_.assign(size_t{1} << n_, false);
    for (uint32_t s = 1; s < (uint32_t{1} << n_); ++s) {
      uint32_t start = s & (~s + 1);
      uint32_t reach = start;
      while (true) {
        uint32_t grow = reach;
        for (int v = 0; v < n_; ++v)
          if ((reach >> v) & 1) grow |= adj_mask_[static_cast<size_t>(v)] & s;
        if (grow == reach) break;
        reach = grow;
      }
      connected_[s] = reach == s;
    }
  }

  MaxTreeResult run() {
    std::vector<std::vector<uint32_t>> by_size(static_cast<size_t>(n_) + 1);
    for (uint32_t s = 1; s < (uint32_t{1} << n_); ++s)
      if (connected_[s]) by_size[static_cast<size_t>(std::popcount(s))].push_back(s);
    for (int size = n_; size >= 2; --size) {
      for (uint32_t s : by_size[static_cast<size_t>(size)]) {
        for (int v = 0; v < n_; ++v) {
          if (!((s >> v) & 1)) continue;
          if (exists(v, s, 0, 1)) {
            std::vector<int> ids;
            rebuild(v, s, 0, 1, ids);
            return {size, make_tree(g_, std::move(ids), TreeMode::ProperlyColored)};
          }
        }
      }
    }
    return {1, single_vertex_tree(0, TreeMode::ProperlyColored)};
  }

 private:
  uint32_t key(int v, uint32_t s, int banned, int cmin) const {
    return s | (static_cast<uint32_t>(v) << 14) | (static_cast<uint32_t>(banned) << 18) |
           (static_cast<uint32_t>(cmin) << 25);
  }

  bool exists(int v, uint32_t s, int banned, int cmin) {
    if (s == (uint32_t{1} << v)) return true;
    if (!connected_[s]) return false;
    uint32_t k = key(v, s, banned, cmin);
    auto it = memo_.find(k);
    if (it != memo_.end()) return it->second;
    bool ok = step(v, s, banned, cmin, nullptr);
    memo_.emplace(k, ok);
    return ok;
  }

  // Shared by the decision and the witness replay: finds a (first child edge,
  // child subtree) split that works, optionally collecting the tree edges.
  bool step(int v, uint32_t s, int banned, int cmin, std::vector<int>* out) {
    for (const Incidence& inc : g_.incident(v)) {
      if (!((s >> inc.to) & 1)) continue;
      int c = color_id_.at(inc.color);
      if (c < cmin || c == banned) continue;
      uint32_t rest = s & ~(uint32_t{1} << v);
      uint32_t free = rest & ~(uint32_t{1} << inc.to);
      // all submasks of free, each joined with the child vertex
      uint32_t sub = free;
      while (true) {
        uint32_t child = sub | (uint32_t{1} << inc.to);
        uint32_t remain = (s & ~child);
        if (exists(inc.to, child, c, 1) &&
            (remain == (uint32_t{1} << v) || exists(v, remain, banned, c + 1))) {
          if (out) {
            out->push_back(inc.edge);
            rebuild(inc.to, child, c, 1, *out);
            if (remain != (uint32_t{1} << v)) rebuild(v, remain, banned, c + 1, *out);
          }
          return true;
        }
        if (sub == 0) break;
        sub = (sub - 1) & free;
      }
    }
    return false;
  }

  void rebuild(int v, uint32_t s, int banned, int cmin, std::vector<int>& out) {
    if (s == (uint32_t{1} << v)) return;
    if (!step(v, s, banned, cmin, &out))
      throw InternalGuaranteeViolation("properly colored search replay failed");
  }

  const EdgeColoredGraph& g_;
  int n_;
  std::unordered_map<int, int> color_id_;
  std::vector<uint32_t> adj_mask_;
  std::vector<bool> connected_;
  std::unordered_map<uint32_t, bool> memo_;
};

}  // namespace

MaxTreeResult max_colored_tree(const EdgeColoredGraph& g, TreeMode mode, const Limits& lim) {
  check_connected(g);
  if (g.vertex_count() > lim.max_vertices)
    throw BoundExceededError("instance exceeds the oracle vertex bound");
  if (mode == TreeMode::Rainbow) return max_rainbow_tree(g);
  return ProperSearch(g).run();
}

int brute_matroid_intersection(const MatroidView& m1, const MatroidView& m2) {
  if (m1.ground() != m2.ground()) throw InvalidParametersError("mismatched ground sets");
  const auto& ground = m1.ground();
  if (ground.size() > 16) throw BoundExceededError("ground set too large for enumeration");
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << ground.size()); ++mask) {
    if (std::popcount(mask) <= best) continue;
    std::vector<int> subset;
    for (size_t i = 0; i < ground.size(); ++i)
      if ((mask >> i) & 1) subset.push_back(ground[i]);
    if (m1.is_independent(subset) && m2.is_independent(subset))
      best = static_cast<int>(subset.size());
  }
  return best;
}

int max_sat_brute(const CnfFormula& f) {
  validate_formula(f);
  if (f.num_vars > 20) throw BoundExceededError("too many variables for enumeration");
  int best = 0;
  for (uint32_t mask = 0; mask < (uint32_t{1} << f.num_vars); ++mask) {
    std::vector<bool> alpha(static_cast<size_t>(f.num_vars));
    for (int i = 0; i < f.num_vars; ++i) alpha[static_cast<size_t>(i)] = (mask >> i) & 1;
    best = std::max(best, count_satisfied(f, alpha));
    if (best == static_cast<int>(f.clauses.size())) break;
  }
  return best;
}

std::vector<int> naive_cut_edges(const EdgeColoredGraph& g) {
  auto count_components = [&](int skip) {
    std::vector<int> parent(static_cast<size_t>(g.vertex_count()));
    for (size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
    std::function<int(int)> find = [&](int x) {
      while (parent[static_cast<size_t>(x)] != x) {
        parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
        x = parent[static_cast<size_t>(x)];
      }
      return x;
    };
    int comps = g.vertex_count();
    for (int id = 0; id < g.edge_count(); ++id) {
      if (id == skip) continue;
      int ru = find(g.edge(id).u), rv = find(g.edge(id).v);
      if (ru != rv) {
        parent[static_cast<size_t>(rv)] = ru;
        --comps;
      }
    }
    return comps;
  };
  int base = count_components(-1);
  std::vector<int> bridges;
  for (int id = 0; id < g.edge_count(); ++id)
    if (count_components(id) > base) bridges.push_back(id);
  return bridges;
}

}  // namespace pctree::oracle
