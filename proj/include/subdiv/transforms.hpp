//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_TRANSFORMS_HPP
#define SUBDIV_TRANSFORMS_HPP

#include <utility>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

struct SplitStep {
  Vertex from = 0;   // the vertex that was too heavy
  Vertex added = 0;  // new neighbour of `from`
  std::vector<Vertex> moved;  // neighbours handed to `added`
};

// Contracting every merge edge of `result` (equivalently, identifying
// vertices with equal `origin`) gives back a graph containing `original`.
struct ReductionTrace {
  Graph original;
  Graph result;
  std::vector<Edge> merge_edges;
  std::vector<Vertex> origin;  // result vertex -> original vertex

  std::vector<SplitStep> splits;  // split_high_degree only

  // bipartite_double only: the v_B copy of each outside vertex (-1 for
  // vertices of A or B; v itself plays v_A) and, for every edge between
  // two outside vertices, the endpoint that took the A role first.
  std::vector<Vertex> b_copy;
  std::vector<std::pair<Vertex, Vertex>> outside_edges;
};

// While some vertex has degree k > max_degree, its max_degree - 1
// lowest-id neighbours move to a new vertex joined to it. Requires
// max_degree >= 3.
ReductionTrace split_high_degree(const Graph& h, int max_degree);

// Vertices of a and b stay; every other vertex v becomes an edge v - v_B,
// with A-neighbours moving to v_B. Throws std::invalid_argument unless a
// and b are disjoint independent sets.
ReductionTrace bipartite_double(const Graph& h, const VertexSet& a, const VertexSet& b);

struct ColourClasses {
  VertexSet a;
  VertexSet b;
  bool exact = false;
  int covered() const { return static_cast<int>(a.size() + b.size()); }
};

// Two disjoint independent sets of maximum total size: branch and bound up
// to exact_cap vertices, greedy with single-vertex improvements above.
// |a| >= |b|.
ColourClasses two_color_classes(const Graph& h, int exact_cap = 18);

}  // namespace subdiv

#endif  // SUBDIV_TRANSFORMS_HPP
