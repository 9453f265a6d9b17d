//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_EXTREMAL_HPP
#define SUBDIV_EXTREMAL_HPP

#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/planar.hpp"

namespace subdiv {

// K_{s,n-s} on n vertices in total; vertices 0..s-1 form the small side.
Graph gen_complete_bipartite(Vertex s, Vertex n);
// Cartesian product of paths with the given side lengths; coordinates are
// mixed-radix with the first dimension varying fastest.
Graph gen_grid(const std::vector<Vertex>& dims);
Graph gen_disjoint_cliques(Vertex clique_order, Vertex copies);

// floor(t/4) disjoint K4s chained into one connected planar graph. Copy i
// uses vertices 4i..4i+3; consecutive copies are joined by an edge from
// 4i+2 to 4(i+1)+1. The t mod 4 leftover vertices are threaded onto the
// first join, or hang as a path off vertex 2 when there is a single copy.
Graph gen_planar_with_k4s(Vertex t);
// The same graph with faces from a straight-line drawing.
PlanarEmbedding planar_with_k4s_embedding(Vertex t);

struct GraphStats {
  int alpha = 0;   // independence number
  int alpha2 = 0;  // largest union of two independent sets
  int chi = 0;     // chromatic number
  // False above exact_cap: alpha and alpha2 are then achieved values
  // (lower bounds) and chi is a greedy colouring (upper bound).
  bool exact = false;
};

// Throws std::logic_error if the result breaks alpha <= alpha2 <= 2 alpha,
// alpha2 <= |g| or chi * alpha >= |g|.
GraphStats graph_stats(const Graph& g, int exact_cap = 18);

struct IndependentSet {
  VertexSet set;
  bool exact = false;  // false above exact_cap: a greedy maximal set
};

IndependentSet maximum_independent_set(const Graph& g, int exact_cap = 18);

struct MinorDegreeBounds {
  int t = 0;
  int lower = 0;           // 2t - 2 alpha - 2
  int upper = 0;           // 2t - alpha2, lower-order slack not included
  Vertex witness_s = 0;    // small side of the K_{s,n} witness, t - alpha - 1
  double witness_limit = 0;  // average degree of K_{s,n} as n grows, 2s
  GraphStats stats;
};

// t defaults to |f|. Throws std::invalid_argument when the statistics of f
// cannot be computed exactly.
MinorDegreeBounds minor_degree_bounds(const Graph& f, int t = -1);

}  // namespace subdiv

#endif  // SUBDIV_EXTREMAL_HPP
