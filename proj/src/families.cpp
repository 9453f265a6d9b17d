//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/families.hpp"

namespace subdiv {

Graph complete_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

Graph cycle_graph(Vertex n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a) e.emplace_back(a, (a + 1) % n);
  return Graph::from_edges(n, e);
}

Graph path_graph(Vertex n) {
  std::vector<Edge> e;
  for (Vertex a = 0; a + 1 < n; ++a) e.emplace_back(a, a + 1);
  return Graph::from_edges(n, e);
}

Graph star_graph(Vertex leaves) {
  std::vector<Edge> e;
  for (Vertex a = 1; a <= leaves; ++a) e.emplace_back(0, a);
  return Graph::from_edges(leaves + 1, e);
}

Graph complete_bipartite_graph(Vertex a, Vertex b) {
  std::vector<Edge> e;
  for (Vertex x = 0; x < a; ++x)
    for (Vertex y = 0; y < b; ++y) e.emplace_back(x, a + y);
  return Graph::from_edges(a + b, e);
}

Graph hypercube_graph(int dim) {
  Vertex n = 1 << dim;
  std::vector<Edge> e;
  for (Vertex v = 0; v < n; ++v)
    for (int bit = 0; bit < dim; ++bit)
      if (!(v >> bit & 1)) e.emplace_back(v, v | (1 << bit));
  return Graph::from_edges(n, e);
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, e);
}

Graph wheel_graph(Vertex rim) {
  std::vector<Edge> e;
  for (Vertex i = 1; i <= rim; ++i) {
    e.emplace_back(0, i);
    e.emplace_back(i, i % rim + 1);
  }
  return Graph::from_edges(rim + 1, e);
}

Graph random_gnp(Vertex n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex b = a + 1; b < n; ++b)
      if (coin(rng)) e.emplace_back(a, b);
  return Graph::from_edges(n, e);
}

Graph random_banded_bipartite(Vertex n, int b, double p, std::mt19937_64& rng,
                              std::vector<int>* side) {
  std::bernoulli_distribution coin(p);
  std::bernoulli_distribution half(0.5);
  std::vector<int> colour(n);
  for (Vertex v = 0; v < n; ++v) colour[v] = half(rng) ? 1 : 0;
  std::vector<Edge> e;
  for (Vertex a = 0; a < n; ++a)
    for (Vertex c = a + 1; c < n && c <= a + b; ++c)
      if (colour[a] != colour[c] && coin(rng)) e.emplace_back(a, c);
  if (side) *side = colour;
  return Graph::from_edges(n, e);
}

Graph relabel(const Graph& g, const std::vector<Vertex>& new_id) {
  if (static_cast<Vertex>(new_id.size()) != g.order())
    throw GraphError("relabel: permutation has the wrong length");
  std::vector<Edge> e;
  for (const Edge& f : g.edges()) e.emplace_back(new_id[f.u], new_id[f.v]);
  return Graph::from_edges(g.order(), e);
}

}  // namespace subdiv
