#include "pctree/random_graph.hpp"

#include <algorithm>

#include "pctree/errors.hpp"
#include "pctree/rng.hpp"

namespace pctree {

namespace {

std::vector<std::pair<int, int>> random_connected_skeleton(std::mt19937_64& rng, int n,
                                                           double edge_prob) {
  if (n < 1) throw InvalidParametersError("need at least one vertex");
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v < n; ++v) pairs.emplace_back(uniform_int(rng, 0, v - 1), v);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      if (std::find(pairs.begin(), pairs.end(), std::make_pair(u, v)) != pairs.end()) continue;
      if (uniform_real(rng) < edge_prob) pairs.emplace_back(u, v);
    }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

}  // namespace

EdgeColoredGraph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob,
                                        int num_colors) {
  if (num_colors < 1) throw InvalidParametersError("need at least one color");
  auto pairs = random_connected_skeleton(rng, n, edge_prob);
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) edges.push_back({u, v, uniform_int(rng, 1, num_colors)});
  return EdgeColoredGraph(n, std::move(edges));
}

EdgeColoredGraph random_star_colored_graph(std::mt19937_64& rng, int n, double edge_prob) {
  auto pairs = random_connected_skeleton(rng, n, edge_prob);
  const int m = static_cast<int>(pairs.size());
  std::vector<std::vector<std::pair<int, int>>> at(static_cast<size_t>(n));  // (mate, edge id)
  for (int id = 0; id < m; ++id) {
    at[static_cast<size_t>(pairs[static_cast<size_t>(id)].first)].emplace_back(
        pairs[static_cast<size_t>(id)].second, id);
    at[static_cast<size_t>(pairs[static_cast<size_t>(id)].second)].emplace_back(
        pairs[static_cast<size_t>(id)].first, id);
  }

  std::vector<int> color(static_cast<size_t>(m), 0);
  int next_color = 0;
  for (int id = 0; id < m; ++id) {
    if (color[static_cast<size_t>(id)] != 0) continue;
    // new star at a random endpoint of the first unassigned edge
    auto [u, v] = pairs[static_cast<size_t>(id)];
    int center = uniform_int(rng, 0, 1) == 0 ? u : v;
    ++next_color;
    color[static_cast<size_t>(id)] = next_color;
    for (auto [mate, eid] : at[static_cast<size_t>(center)]) {
      if (color[static_cast<size_t>(eid)] != 0) continue;
      if (uniform_int(rng, 0, 1) == 0) color[static_cast<size_t>(eid)] = next_color;
    }
  }

  std::vector<Edge> edges;
  for (int id = 0; id < m; ++id)
    edges.push_back({pairs[static_cast<size_t>(id)].first, pairs[static_cast<size_t>(id)].second,
                     color[static_cast<size_t>(id)]});
  return EdgeColoredGraph(n, std::move(edges));
}

}  // namespace pctree
