//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/extremal.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "subdiv/families.hpp"
#include "subdiv/transforms.hpp"

namespace subdiv {

Graph gen_complete_bipartite(Vertex s, Vertex n) {
  if (s < 1 || n <= s) throw std::invalid_argument("gen_complete_bipartite: need 1 <= s < n");
  return complete_bipartite_graph(s, n - s);
}

Graph gen_grid(const std::vector<Vertex>& dims) {
  if (dims.empty()) throw std::invalid_argument("gen_grid: no dimensions");
  long long total = 1;
  for (Vertex d : dims) {
    if (d < 1) throw std::invalid_argument("gen_grid: side lengths must be positive");
    total *= d;
    if (total > (1LL << 26)) throw std::invalid_argument("gen_grid: too many vertices");
  }
  std::vector<Edge> edges;
  long long stride = 1;
  for (Vertex d : dims) {
    for (long long v = 0; v < total; ++v)
      if ((v / stride) % d + 1 < d) edges.push_back(Edge(static_cast<Vertex>(v), static_cast<Vertex>(v + stride)));
    stride *= d;
  }
  return Graph::from_edges(static_cast<Vertex>(total), edges);
}

Graph gen_disjoint_cliques(Vertex clique_order, Vertex copies) {
  if (clique_order < 1 || copies < 1) throw std::invalid_argument("gen_disjoint_cliques: sizes must be positive");
  std::vector<Edge> edges;
  for (Vertex c = 0; c < copies; ++c)
    for (Vertex i = 0; i < clique_order; ++i)
      for (Vertex j = i + 1; j < clique_order; ++j) edges.push_back(Edge(c * clique_order + i, c * clique_order + j));
  return Graph::from_edges(clique_order * copies, edges);
}

namespace {

struct Drawing {
  std::vector<Edge> edges;
  std::vector<std::pair<double, double>> at;
};

// Copy i of K4: apex 4i above, 4i+1 and 4i+2 at the lower corners, 4i+3 in
// the middle. Copies sit side by side three units apart.
Drawing draw_planar_with_k4s(Vertex t) {
  if (t < 4) throw std::invalid_argument("gen_planar_with_k4s: t must be at least 4");
  const Vertex copies = t / 4, extra = t % 4;
  Drawing d;
  d.at.resize(t);
  for (Vertex i = 0; i < copies; ++i) {
    double x = 3.0 * i;
    Vertex base = 4 * i;
    d.at[base] = {x, 1};
    d.at[base + 1] = {x - 1, -1};
    d.at[base + 2] = {x + 1, -1};
    d.at[base + 3] = {x, 0};
    for (Vertex u = 0; u < 4; ++u)
      for (Vertex v = u + 1; v < 4; ++v) d.edges.push_back(Edge(base + u, base + v));
  }
  std::vector<Vertex> chain{2};
  for (Vertex k = 0; k < extra; ++k) {
    Vertex v = 4 * copies + k;
    d.at[v] = copies > 1 ? std::pair{1.0 + (k + 1.0) / (extra + 1.0), -1.0} : std::pair{2.0 + k, -1.0};
    chain.push_back(v);
  }
  if (copies > 1) chain.push_back(5);
  for (std::size_t k = 0; k + 1 < chain.size(); ++k) d.edges.push_back(Edge(chain[k], chain[k + 1]));
  for (Vertex i = 1; i + 1 < copies; ++i) d.edges.push_back(Edge(4 * i + 2, 4 * (i + 1) + 1));
  return d;
}

}  // namespace

Graph gen_planar_with_k4s(Vertex t) {
  Drawing d = draw_planar_with_k4s(t);
  return Graph::from_edges(t, d.edges);
}

PlanarEmbedding planar_with_k4s_embedding(Vertex t) {
  Drawing d = draw_planar_with_k4s(t);
  Graph g = Graph::from_edges(t, d.edges);
  std::vector<std::vector<Vertex>> rotation(t);
  for (Vertex v = 0; v < t; ++v) {
    rotation[v] = g.neighbors(v);
    auto angle = [&](Vertex w) {
      return std::atan2(d.at[w].second - d.at[v].second, d.at[w].first - d.at[v].first);
    };
    std::sort(rotation[v].begin(), rotation[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  PlanarEmbedding emb{g, trace_faces(g, rotation)};
  std::string problem = embedding_problem(emb);
  if (!problem.empty()) throw std::logic_error("planar_with_k4s_embedding: " + problem);
  return emb;
}

namespace {

using Mask = std::uint64_t;

// Largest independent subset of `free`, as a mask.
Mask max_independent(const std::vector<Mask>& adj, Mask free) {
  if (free == 0) return 0;
  // Branch on a vertex of least remaining degree; degree <= 1 is always taken.
  int best_v = -1, best_deg = 1 << 30;
  for (Mask m = free; m; m &= m - 1) {
    int v = std::countr_zero(m);
    int deg = std::popcount(adj[v] & free);
    if (deg < best_deg) {
      best_deg = deg;
      best_v = v;
    }
  }
  Mask closed = (adj[best_v] & free) | (Mask{1} << best_v);
  Mask best = (Mask{1} << best_v) | max_independent(adj, free & ~closed);
  if (best_deg <= 1) return best;
  for (Mask m = adj[best_v] & free; m; m &= m - 1) {
    // Some maximum set avoiding best_v contains one of its neighbours.
    int w = std::countr_zero(m);
    Mask closed_w = (adj[w] & free) | (Mask{1} << w) | (Mask{1} << best_v);
    Mask other = (Mask{1} << w) | max_independent(adj, free & ~closed_w);
    if (std::popcount(other) > std::popcount(best)) best = other;
  }
  return best;
}

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.order(), 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= Mask{1} << e.v;
    adj[e.v] |= Mask{1} << e.u;
  }
  return adj;
}

Mask all_vertices(Vertex n) { return n == 64 ? ~Mask{0} : (Mask{1} << n) - 1; }

bool colourable(const Graph& g, const std::vector<Vertex>& order, std::vector<int>& colour, std::size_t at, int k) {
  if (at == order.size()) return true;
  Vertex v = order[at];
  int used = 0;
  for (std::size_t i = 0; i < at; ++i) used = std::max(used, colour[order[i]] + 1);
  // Symmetry: a fresh colour is only ever the next unused one.
  for (int c = 0; c < std::min(k, used + 1); ++c) {
    bool clash = false;
    for (Vertex w : g.neighbors(v))
      if (colour[w] == c) clash = true;
    if (clash) continue;
    colour[v] = c;
    if (colourable(g, order, colour, at + 1, k)) return true;
    colour[v] = -1;
  }
  return false;
}

// DSATUR: returns colour per vertex.
std::vector<int> greedy_colouring(const Graph& g) {
  const Vertex n = g.order();
  std::vector<int> colour(n, -1);
  std::vector<std::vector<char>> seen(n);
  for (Vertex step = 0; step < n; ++step) {
    Vertex pick = -1;
    int pick_sat = -1;
    for (Vertex v = 0; v < n; ++v) {
      if (colour[v] >= 0) continue;
      int sat = static_cast<int>(std::count(seen[v].begin(), seen[v].end(), 1));
      if (sat > pick_sat || (sat == pick_sat && g.degree(v) > g.degree(pick))) {
        pick = v;
        pick_sat = sat;
      }
    }
    int c = 0;
    while (c < static_cast<int>(seen[pick].size()) && seen[pick][c]) ++c;
    colour[pick] = c;
    for (Vertex w : g.neighbors(pick)) {
      if (static_cast<int>(seen[w].size()) <= c) seen[w].resize(c + 1, 0);
      seen[w][c] = 1;
    }
  }
  return colour;
}

}  // namespace

GraphStats graph_stats(const Graph& g, int exact_cap) {
  const Vertex n = g.order();
  GraphStats s;
  if (n == 0) {
    s.exact = true;
    return s;
  }
  std::vector<int> greedy = greedy_colouring(g);
  int greedy_colours = *std::max_element(greedy.begin(), greedy.end()) + 1;
  ColourClasses classes = two_color_classes(g, std::min(exact_cap, 18));

  if (n <= exact_cap && n <= 64) {
    s.alpha = std::popcount(max_independent(adjacency_masks(g), all_vertices(n)));
    s.alpha2 = classes.covered();
    // Vertices in decreasing degree order for the colouring search.
    std::vector<Vertex> order(n);
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    int k = g.size() == 0 ? 1 : 2;
    k = std::max(k, (n + s.alpha - 1) / s.alpha);
    for (; k < greedy_colours; ++k) {
      std::vector<int> colour(n, -1);
      if (colourable(g, order, colour, 0, k)) break;
    }
    s.chi = k;
    s.exact = classes.exact;
  } else {
    std::vector<int> class_size(greedy_colours, 0);
    for (int c : greedy) ++class_size[c];
    std::sort(class_size.rbegin(), class_size.rend());
    s.chi = greedy_colours;
    s.alpha = std::max(class_size[0], static_cast<int>(classes.a.size()));
    int two_classes = class_size[0] + (greedy_colours > 1 ? class_size[1] : 0);
    s.alpha2 = std::max({classes.covered(), two_classes, s.alpha});
    s.exact = false;
  }

  if (!(s.alpha <= s.alpha2 && s.alpha2 <= 2 * s.alpha && s.alpha2 <= n &&
        static_cast<long long>(s.chi) * s.alpha >= n))
    throw std::logic_error("graph_stats: invariant violated (alpha=" + std::to_string(s.alpha) +
                           ", alpha2=" + std::to_string(s.alpha2) + ", chi=" + std::to_string(s.chi) + ")");
  return s;
}

IndependentSet maximum_independent_set(const Graph& g, int exact_cap) {
  const Vertex n = g.order();
  IndependentSet out;
  if (n <= exact_cap && n <= 64) {
    Mask best = max_independent(adjacency_masks(g), all_vertices(n));
    for (Vertex v = 0; v < n; ++v)
      if (best >> v & 1) out.set.insert(v);
    out.exact = true;
    return out;
  }
  // Minimum-degree greedy: take a vertex of least remaining degree, drop
  // its neighbours, repeat.
  std::vector<char> gone(n, 0);
  std::vector<int> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  while (true) {
    Vertex pick = -1;
    for (Vertex v = 0; v < n; ++v)
      if (!gone[v] && (pick < 0 || degree[v] < degree[pick])) pick = v;
    if (pick < 0) break;
    out.set.insert(pick);
    std::vector<Vertex> removed{pick};
    for (Vertex w : g.neighbors(pick))
      if (!gone[w]) removed.push_back(w);
    for (Vertex r : removed) {
      gone[r] = 1;
      for (Vertex w : g.neighbors(r)) --degree[w];
    }
  }
  return out;
}

MinorDegreeBounds minor_degree_bounds(const Graph& f, int t) {
  MinorDegreeBounds b;
  b.stats = graph_stats(f);
  if (!b.stats.exact)
    throw std::invalid_argument("minor_degree_bounds: statistics of a " + std::to_string(f.order()) +
                                "-vertex graph are not exact");
  b.t = t < 0 ? f.order() : t;
  b.lower = 2 * b.t - 2 * b.stats.alpha - 2;
  b.upper = 2 * b.t - b.stats.alpha2;
  b.witness_s = std::max(0, b.t - b.stats.alpha - 1);
  b.witness_limit = 2.0 * b.witness_s;
  return b;
}

}  // namespace subdiv
