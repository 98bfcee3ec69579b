#pragma once

#include <random>

#include "pctree/graph.hpp"

namespace pctree {

// Connected by construction: a random attachment tree plus independent extra
// edges with probability edge_prob; colors uniform in [1, num_colors].
EdgeColoredGraph random_connected_graph(std::mt19937_64& rng, int n, double edge_prob,
                                        int num_colors);

// Same structure, then the edges are partitioned into stars and each star
// gets its own color.
EdgeColoredGraph random_star_colored_graph(std::mt19937_64& rng, int n, double edge_prob);

}  // namespace pctree
