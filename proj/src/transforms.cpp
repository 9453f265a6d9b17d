//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/transforms.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>

namespace subdiv {

ReductionTrace split_high_degree(const Graph& h, int max_degree) {
  if (max_degree < 3) throw std::invalid_argument("split_high_degree: max degree must be at least 3");
  ReductionTrace out;
  out.original = h;
  std::vector<std::set<Vertex>> adj(h.order());
  for (Vertex v = 0; v < h.order(); ++v) adj[v].insert(h.neighbors(v).begin(), h.neighbors(v).end());
  out.origin.resize(h.order());
  for (Vertex v = 0; v < h.order(); ++v) out.origin[v] = v;
  for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v) {
    while (static_cast<int>(adj[v].size()) > max_degree) {
      Vertex x = static_cast<Vertex>(adj.size());
      adj.emplace_back();
      out.origin.push_back(out.origin[v]);
      SplitStep step{v, x, {}};
      auto it = adj[v].begin();
      for (int i = 0; i < max_degree - 1; ++i) step.moved.push_back(*it++);
      for (Vertex u : step.moved) {
        adj[v].erase(u);
        adj[u].erase(v);
        adj[u].insert(x);
        adj[x].insert(u);
      }
      adj[v].insert(x);
      adj[x].insert(v);
      out.splits.push_back(std::move(step));
    }
  }
  // A later split may hand an earlier piece of the same vertex to the new
  // piece, so the joining edges are read off the final graph: they are
  // exactly the edges inside one origin class.
  std::vector<Edge> edges;
  for (Vertex v = 0; v < static_cast<Vertex>(adj.size()); ++v)
    for (Vertex u : adj[v])
      if (v < u) {
        edges.emplace_back(v, u);
        if (out.origin[u] == out.origin[v]) out.merge_edges.emplace_back(v, u);
      }
  out.result = Graph::from_edges(static_cast<Vertex>(adj.size()), edges);
  return out;
}

ReductionTrace bipartite_double(const Graph& h, const VertexSet& a, const VertexSet& b) {
  check_vertices(h, a);
  check_vertices(h, b);
  if (!a.disjoint_from(b)) throw std::invalid_argument("bipartite_double: A and B overlap");
  if (!is_independent(h, a)) throw std::invalid_argument("bipartite_double: A is not independent");
  if (!is_independent(h, b)) throw std::invalid_argument("bipartite_double: B is not independent");
  ReductionTrace out;
  out.original = h;
  const Vertex n = h.order();
  std::vector<char> in_a = a.mask(n), in_b = b.mask(n);
  out.origin.resize(n);
  out.b_copy.assign(n, -1);
  for (Vertex v = 0; v < n; ++v) out.origin[v] = v;
  Vertex next = n;
  for (Vertex v = 0; v < n; ++v)
    if (!in_a[v] && !in_b[v]) {
      out.b_copy[v] = next++;
      out.origin.push_back(v);
    }
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v)
    if (out.b_copy[v] >= 0) {
      edges.emplace_back(v, out.b_copy[v]);
      out.merge_edges.emplace_back(v, out.b_copy[v]);
    }
  for (const Edge& e : h.edges()) {
    Vertex u = e.u, v = e.v;
    bool u_out = out.b_copy[u] >= 0, v_out = out.b_copy[v] >= 0;
    if (!u_out && !v_out) {
      edges.push_back(e);
    } else if (u_out && v_out) {
      // e.u < e.v, so the smaller id keeps the A role.
      edges.emplace_back(u, out.b_copy[v]);
      out.outside_edges.emplace_back(u, v);
    } else {
      Vertex inside = u_out ? v : u, outside = u_out ? u : v;
      edges.emplace_back(inside, in_a[inside] ? out.b_copy[outside] : outside);
    }
  }
  out.result = Graph::from_edges(next, edges);
  return out;
}

namespace {

void check_classes(const Graph& h, const ColourClasses& c) {
  if (!is_independent(h, c.a) || !is_independent(h, c.b) || !c.a.disjoint_from(c.b))
    throw std::logic_error("two_color_classes: produced sets are not disjoint independent sets");
}

ColourClasses ordered(VertexSet a, VertexSet b, bool exact) {
  if (a.size() < b.size()) std::swap(a, b);
  return {std::move(a), std::move(b), exact};
}

ColourClasses greedy_classes(const Graph& h) {
  const Vertex n = h.order();
  std::vector<int> side(n, -1);  // 0 = A, 1 = B
  auto fill = [&](int s) {
    std::vector<Vertex> order;
    for (Vertex v = 0; v < n; ++v)
      if (side[v] < 0) order.push_back(v);
    auto free_degree = [&](Vertex v) {
      int d = 0;
      for (Vertex u : h.neighbors(v)) d += side[u] < 0;
      return d;
    };
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex x, Vertex y) { return free_degree(x) < free_degree(y); });
    for (Vertex v : order) {
      bool ok = side[v] < 0;
      for (Vertex u : h.neighbors(v)) ok = ok && side[u] != s;
      if (ok) side[v] = s;
    }
  };
  fill(0);
  fill(1);
  auto blockers = [&](Vertex v, int s) {
    std::vector<Vertex> out;
    for (Vertex u : h.neighbors(v))
      if (side[u] == s) out.push_back(u);
    return out;
  };
  // Trade one class member for two outside vertices it alone was blocking.
  bool improved = true;
  while (improved) {
    improved = false;
    for (Vertex u = 0; u < n && !improved; ++u) {
      if (side[u] < 0) continue;
      int s = side[u];
      std::vector<Vertex> freed;
      for (Vertex w : h.neighbors(u))
        if (side[w] < 0 && blockers(w, s).size() == 1) freed.push_back(w);
      for (std::size_t i = 0; i < freed.size() && !improved; ++i)
        for (std::size_t j = i + 1; j < freed.size() && !improved; ++j) {
          if (h.adjacent(freed[i], freed[j])) continue;
          side[u] = -1;
          side[freed[i]] = s;
          side[freed[j]] = s;
          if (blockers(u, 1 - s).empty()) side[u] = 1 - s;
          fill(0);
          fill(1);
          improved = true;
        }
    }
  }
  std::vector<Vertex> a, b;
  for (Vertex v = 0; v < n; ++v) {
    if (side[v] == 0) a.push_back(v);
    if (side[v] == 1) b.push_back(v);
  }
  return ordered(VertexSet(a), VertexSet(b), false);
}

}  // namespace

ColourClasses two_color_classes(const Graph& h, int exact_cap) {
  const Vertex n = h.order();
  std::vector<int> colour = two_coloring(h);
  if (!colour.empty() || n == 0) {
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) (colour[v] == 0 ? a : b).push_back(v);
    ColourClasses c = ordered(VertexSet(a), VertexSet(b), true);
    check_classes(h, c);
    return c;
  }
  ColourClasses best = greedy_classes(h);
  check_classes(h, best);
  if (n > exact_cap || n > 30) return best;

  std::vector<Vertex> order(n);
  for (Vertex v = 0; v < n; ++v) order[v] = v;
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex x, Vertex y) { return h.degree(x) > h.degree(y); });
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : h.edges()) {
    adj[e.u] |= 1u << e.v;
    adj[e.v] |= 1u << e.u;
  }
  int best_size = best.covered();
  std::uint32_t best_a = 0, best_b = 0;
  bool found = false;
  std::function<void(int, std::uint32_t, std::uint32_t)> search = [&](int i, std::uint32_t ma,
                                                                      std::uint32_t mb) {
    int placed = std::popcount(ma) + std::popcount(mb);
    int reachable = 0;
    for (int j = i; j < n; ++j) {
      Vertex v = order[j];
      reachable += !(adj[v] & ma) || !(adj[v] & mb);
    }
    if (placed + reachable <= best_size) return;
    if (i == n) {
      best_size = placed;
      best_a = ma;
      best_b = mb;
      found = true;
      return;
    }
    Vertex v = order[i];
    if (!(adj[v] & ma)) search(i + 1, ma | 1u << v, mb);
    // The empty B class and the empty A class are interchangeable.
    if (!(adj[v] & mb) && ma != 0) search(i + 1, ma, mb | 1u << v);
    search(i + 1, ma, mb);
  };
  search(0, 0, 0);
  if (found) {
    std::vector<Vertex> a, b;
    for (Vertex v = 0; v < n; ++v) {
      if (best_a >> v & 1u) a.push_back(v);
      if (best_b >> v & 1u) b.push_back(v);
    }
    best = ordered(VertexSet(a), VertexSet(b), true);
  }
  best.exact = true;
  check_classes(h, best);
  return best;
}

}  // namespace subdiv
