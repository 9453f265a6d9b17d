//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace subdiv {

VertexSet::VertexSet(std::initializer_list<Vertex> ids)
    : VertexSet(std::vector<Vertex>(ids)) {}

VertexSet::VertexSet(std::vector<Vertex> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

VertexSet VertexSet::range(Vertex n) {
  std::vector<Vertex> ids(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(ids.begin(), ids.end(), 0);
  VertexSet s;
  s.members_ = std::move(ids);
  return s;
}

VertexSet VertexSet::from_mask(const std::vector<char>& mask) {
  VertexSet s;
  for (std::size_t v = 0; v < mask.size(); ++v)
    if (mask[v]) s.members_.push_back(static_cast<Vertex>(v));
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

void VertexSet::insert(Vertex v) {
  auto it = std::lower_bound(members_.begin(), members_.end(), v);
  if (it == members_.end() || *it != v) members_.insert(it, v);
}

VertexSet VertexSet::unite(const VertexSet& other) const {
  VertexSet out;
  std::set_union(begin(), end(), other.begin(), other.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::minus(const VertexSet& other) const {
  VertexSet out;
  std::set_difference(begin(), end(), other.begin(), other.end(),
                      std::back_inserter(out.members_));
  return out;
}

VertexSet VertexSet::intersect(const VertexSet& other) const {
  VertexSet out;
  std::set_intersection(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out.members_));
  return out;
}

bool VertexSet::disjoint_from(const VertexSet& other) const {
  auto a = begin();
  auto b = other.begin();
  while (a != end() && b != other.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

std::vector<char> VertexSet::mask(Vertex n) const {
  std::vector<char> m(static_cast<std::size_t>(n), 0);
  for (Vertex v : members_) {
    if (v < 0 || v >= n)
      throw GraphError("vertex " + std::to_string(v) + " outside [0, " +
                       std::to_string(n) + ")");
    m[v] = 1;
  }
  return m;
}

long long Distance::value() const {
  if (is_infinite()) throw std::logic_error("value() of infinite distance");
  return value_;
}

Graph::Graph(Vertex n) {
  if (n < 0) throw GraphError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(n));
}

Graph Graph::build(Vertex n, std::vector<Edge> edges, bool lenient) {
  Graph g(n);
  std::vector<Edge> kept;
  kept.reserve(edges.size());
  for (const Edge& e : edges) {
    if (e.u < 0 || e.v >= n)
      throw GraphError("edge (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") has an unknown endpoint");
    if (e.u == e.v) {
      if (lenient) continue;
      throw GraphError("self-loop at vertex " + std::to_string(e.u));
    }
    kept.push_back(e);
  }
  std::sort(kept.begin(), kept.end());
  auto dup = std::adjacent_find(kept.begin(), kept.end());
  if (dup != kept.end()) {
    if (!lenient)
      throw GraphError("duplicate edge (" + std::to_string(dup->u) + "," +
                       std::to_string(dup->v) + ")");
    kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  }
  for (const Edge& e : kept) {
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : g.adjacency_) std::sort(nb.begin(), nb.end());
  g.edges_ = std::move(kept);
  return g;
}

Graph Graph::from_edges(Vertex n, const std::vector<Edge>& edges) {
  return build(n, edges, false);
}

Graph Graph::from_edges_lenient(Vertex n, const std::vector<Edge>& edges) {
  return build(n, edges, true);
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (!has_vertex(v))
    throw GraphError("unknown vertex " + std::to_string(v));
  return adjacency_[v];
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& nb = neighbors(a);
  check_vertex(*this, b);
  return std::binary_search(nb.begin(), nb.end(), b);
}

int Graph::max_degree() const {
  int best = 0;
  for (const auto& nb : adjacency_) best = std::max(best, static_cast<int>(nb.size()));
  return best;
}

int Graph::min_degree() const {
  if (adjacency_.empty()) return 0;
  int best = std::numeric_limits<int>::max();
  for (const auto& nb : adjacency_) best = std::min(best, static_cast<int>(nb.size()));
  return best;
}

std::vector<Vertex> Path::interior() const {
  if (vertices.size() <= 2) return {};
  return {vertices.begin() + 1, vertices.end() - 1};
}

std::string path_problem(const Graph& g, const Path& p) {
  if (p.vertices.empty()) return "empty path";
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    Vertex v = p.vertices[i];
    if (!g.has_vertex(v)) return "unknown vertex " + std::to_string(v);
    if (seen[v]) return "repeated vertex " + std::to_string(v);
    seen[v] = 1;
    if (i > 0 && !g.adjacent(p.vertices[i - 1], v))
      return "vertices " + std::to_string(p.vertices[i - 1]) + " and " +
             std::to_string(v) + " are not adjacent";
  }
  return {};
}

void check_vertex(const Graph& g, Vertex v) {
  if (!g.has_vertex(v)) throw GraphError("unknown vertex " + std::to_string(v));
}

void check_vertices(const Graph& g, const VertexSet& s) {
  for (Vertex v : s) check_vertex(g, v);
}

Rational average_degree(const Graph& g) {
  if (g.order() == 0) throw GraphError("average degree of the empty graph");
  return Rational(2 * static_cast<long long>(g.size()), g.order());
}

double average_degree_value(const Graph& g) {
  return boost::rational_cast<double>(average_degree(g));
}

std::vector<int> bfs_layers(const Graph& g, const VertexSet& x,
                            const VertexSet& avoid) {
  check_vertices(g, x);
  check_vertices(g, avoid);
  std::vector<int> layer(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> blocked = avoid.mask(g.order());
  std::deque<Vertex> queue;
  for (Vertex v : x) {
    if (blocked[v]) continue;
    layer[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (blocked[w] || layer[w] >= 0) continue;
      layer[w] = layer[v] + 1;
      queue.push_back(w);
    }
  }
  return layer;
}

VertexSet ball(const Graph& g, const VertexSet& x, int radius,
               const VertexSet& avoid) {
  if (!x.disjoint_from(avoid))
    throw GraphError("ball: centre set meets the avoided set");
  if (radius <= 0) return x;
  std::vector<int> layer = bfs_layers(g, x, avoid);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (layer[v] >= 0 && layer[v] <= radius) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet sphere(const Graph& g, const VertexSet& x, int i,
                 const VertexSet& avoid) {
  if (i <= 0) return x;
  if (!x.disjoint_from(avoid))
    throw GraphError("sphere: centre set meets the avoided set");
  std::vector<int> layer = bfs_layers(g, x, avoid);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (layer[v] == i) out.push_back(v);
  return VertexSet(std::move(out));
}

VertexSet neighborhood(const Graph& g, const VertexSet& x,
                       const VertexSet& avoid) {
  std::vector<char> in = x.mask(g.order());
  std::vector<char> blocked = avoid.mask(g.order());
  std::vector<Vertex> out;
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (!in[w] && !blocked[w]) out.push_back(w);
  return VertexSet(std::move(out));
}

std::vector<Edge> edge_boundary(const Graph& g, const VertexSet& x) {
  std::vector<char> in = x.mask(g.order());
  std::vector<Edge> out;
  for (const Edge& e : g.edges())
    if (in[e.u] != in[e.v]) out.push_back(e);
  return out;
}

Distance distance(const Graph& g, const VertexSet& a, const VertexSet& b,
                  const VertexSet& avoid) {
  if (a.empty() || b.empty()) throw GraphError("distance: empty endpoint set");
  std::vector<int> layer = bfs_layers(g, a, avoid);
  int best = -1;
  for (Vertex v : b) {
    check_vertex(g, v);
    if (layer[v] >= 0 && (best < 0 || layer[v] < best)) best = layer[v];
  }
  return best < 0 ? Distance::infinity() : Distance::finite(best);
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
  check_vertices(g, keep);
  std::vector<Vertex> local(static_cast<std::size_t>(g.order()), -1);
  InducedSubgraph out;
  out.original = keep.members();
  for (std::size_t i = 0; i < out.original.size(); ++i)
    local[out.original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges())
    if (local[e.u] >= 0 && local[e.v] >= 0) edges.emplace_back(local[e.u], local[e.v]);
  out.graph = Graph::from_edges(static_cast<Vertex>(keep.size()), edges);
  return out;
}

Graph remove_edges(const Graph& g, const std::vector<Edge>& f) {
  std::vector<Edge> drop;
  for (const Edge& e : f) {
    Edge n(e.u, e.v);
    if (!g.has_vertex(n.u) || !g.has_vertex(n.v) || !g.adjacent(n.u, n.v))
      throw GraphError("remove_edges: (" + std::to_string(e.u) + "," +
                       std::to_string(e.v) + ") is not an edge");
    drop.push_back(n);
  }
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> rest;
  for (const Edge& e : g.edges())
    if (!std::binary_search(drop.begin(), drop.end(), e)) rest.push_back(e);
  return Graph::from_edges(g.order(), rest);
}

Graph contract_edge(const Graph& g, Edge e, std::vector<Vertex>* old_to_new) {
  Edge n(e.u, e.v);
  if (!g.has_vertex(n.u) || !g.has_vertex(n.v) || !g.adjacent(n.u, n.v))
    throw GraphError("contract_edge: (" + std::to_string(e.u) + "," +
                     std::to_string(e.v) + ") is not an edge");
  std::vector<Vertex> map(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v)
    map[v] = v == n.v ? n.u : (v > n.v ? v - 1 : v);
  std::vector<Edge> edges;
  for (const Edge& f : g.edges()) edges.emplace_back(map[f.u], map[f.v]);
  if (old_to_new) *old_to_new = map;
  return Graph::from_edges_lenient(g.order() - 1, edges);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) edges.emplace_back(e.u + a.order(), e.v + a.order());
  return Graph::from_edges(a.order() + b.order(), edges);
}

Graph add_edges(const Graph& g, const std::vector<Edge>& extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph::from_edges_lenient(g.order(), edges);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& avoid) {
  std::vector<char> blocked = avoid.mask(g.order());
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::vector<VertexSet> out;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (blocked[s] || seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (Vertex w : g.neighbors(comp[i]))
        if (!blocked[w] && !seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    out.emplace_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  return g.order() <= 1 || connected_components(g).size() == 1;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
  if (s.size() <= 1) return true;
  VertexSet outside = VertexSet::range(g.order()).minus(s);
  std::vector<int> layer = bfs_layers(g, VertexSet{s[0]}, outside);
  for (Vertex v : s)
    if (layer[v] < 0) return false;
  return true;
}

std::vector<int> two_coloring(const Graph& g) {
  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    color[s] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbors(v)) {
        if (color[w] < 0) {
          color[w] = 1 - color[v];
          queue.push_back(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  check_vertices(g, s);
  for (Vertex v : s)
    for (Vertex w : g.neighbors(v))
      if (s.contains(w)) return false;
  return true;
}

Distance set_diameter(const Graph& g, const VertexSet& s) {
  long long best = 0;
  for (Vertex v : s) {
    std::vector<int> layer = bfs_layers(g, VertexSet{v});
    for (Vertex w : s) {
      if (layer[w] < 0) return Distance::infinity();
      best = std::max<long long>(best, layer[w]);
    }
  }
  return Distance::finite(best);
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths (s, t non-adjacent),
// via augmenting paths in the split graph with unit vertex capacities.
int disjoint_paths(const Graph& g, Vertex s, Vertex t, int stop_at) {
  const int n = g.order();
  // Node 2v is v_in, 2v+1 is v_out. Residual capacities stored sparsely.
  std::vector<std::vector<std::pair<int, int>>> arcs(2 * n);  // (to, arc index)
  std::vector<int> cap;
  std::vector<int> head;
  auto add_arc = [&](int a, int b, int c) {
    arcs[a].push_back({b, static_cast<int>(cap.size())});
    head.push_back(b);
    cap.push_back(c);
    arcs[b].push_back({a, static_cast<int>(cap.size())});
    head.push_back(a);
    cap.push_back(0);
  };
  const int big = n + 1;
  for (Vertex v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? big : 1);
  for (const Edge& e : g.edges()) {
    add_arc(2 * e.u + 1, 2 * e.v, big);
    add_arc(2 * e.v + 1, 2 * e.u, big);
  }
  int flow = 0;
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  while (flow < stop_at) {
    std::vector<int> via(2 * n, -1);
    std::deque<int> queue{source};
    via[source] = -2;
    while (!queue.empty() && via[sink] == -1) {
      int a = queue.front();
      queue.pop_front();
      for (auto [b, idx] : arcs[a])
        if (cap[idx] > 0 && via[b] == -1) {
          via[b] = idx;
          queue.push_back(b);
        }
    }
    if (via[sink] == -1) break;
    for (int b = sink; b != source;) {
      int idx = via[b];
      cap[idx] -= 1;
      cap[idx ^ 1] += 1;
      b = head[idx ^ 1];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.order();
  if (n <= 1) return 0;
  if (!is_connected(g)) return 0;
  int best = n - 1;
  for (Vertex s = 0; s < n; ++s)
    for (Vertex t = s + 1; t < n; ++t)
      if (!g.adjacent(s, t)) best = std::min(best, disjoint_paths(g, s, t, best));
  return best;
}

std::uint64_t graph_fingerprint(const Graph& g) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](std::uint64_t x) {
    for (int i = 0; i < 8; ++i) {
      h ^= (x >> (8 * i)) & 0xffU;
      h *= 1099511628211ULL;
    }
  };
  mix(static_cast<std::uint64_t>(g.order()));
  for (const Edge& e : g.edges()) {
    mix(static_cast<std::uint64_t>(e.u));
    mix(static_cast<std::uint64_t>(e.v));
  }
  return h;
}

}  // namespace subdiv
