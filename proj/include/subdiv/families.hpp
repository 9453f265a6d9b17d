//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_FAMILIES_HPP
#define SUBDIV_FAMILIES_HPP

#include <random>

#include "subdiv/graph.hpp"

namespace subdiv {

Graph complete_graph(Vertex n);
Graph cycle_graph(Vertex n);
Graph path_graph(Vertex n);
Graph star_graph(Vertex leaves);  // centre is vertex 0
// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(Vertex a, Vertex b);
Graph hypercube_graph(int dim);
Graph petersen_graph();
Graph wheel_graph(Vertex rim);  // hub is vertex 0
Graph random_gnp(Vertex n, double p, std::mt19937_64& rng);
// Random bipartite graph in a hidden order: x_i ~ x_j only if |i-j| <= b and
// the colours differ. Colours are returned through `side` when non-null.
Graph random_banded_bipartite(Vertex n, int b, double p, std::mt19937_64& rng,
                              std::vector<int>* side = nullptr);
Graph relabel(const Graph& g, const std::vector<Vertex>& new_id);

}  // namespace subdiv

#endif  // SUBDIV_FAMILIES_HPP
