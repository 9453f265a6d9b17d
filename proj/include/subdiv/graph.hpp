//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_GRAPH_HPP
#define SUBDIV_GRAPH_HPP

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace subdiv {

using Vertex = int;
using Rational = boost::rational<long long>;

// Thrown for malformed arguments: unknown vertices, loops, duplicate edges.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  Edge() = default;
  Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted, duplicate-free list of vertex ids.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids);
  explicit VertexSet(std::vector<Vertex> ids);

  static VertexSet range(Vertex n);
  static VertexSet from_mask(const std::vector<char>& mask);

  bool contains(Vertex v) const;
  bool empty() const { return members_.empty(); }
  std::size_t size() const { return members_.size(); }
  Vertex operator[](std::size_t i) const { return members_[i]; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  const std::vector<Vertex>& members() const { return members_; }

  void insert(Vertex v);
  VertexSet unite(const VertexSet& other) const;
  VertexSet minus(const VertexSet& other) const;
  VertexSet intersect(const VertexSet& other) const;
  bool disjoint_from(const VertexSet& other) const;
  std::vector<char> mask(Vertex n) const;

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

 private:
  std::vector<Vertex> members_;
};

// Shortest-path length, possibly infinite. Never encoded as a big integer.
class Distance {
 public:
  static Distance finite(long long d) { return Distance(d); }
  static Distance infinity() { return Distance(-1); }

  bool is_infinite() const { return value_ < 0; }
  long long value() const;

  friend bool operator==(const Distance&, const Distance&) = default;
  friend bool operator<(const Distance& a, const Distance& b) {
    if (a.is_infinite()) return false;
    if (b.is_infinite()) return true;
    return a.value_ < b.value_;
  }
  bool at_least(long long d) const { return is_infinite() || value_ >= d; }

 private:
  explicit Distance(long long v) : value_(v) {}
  long long value_;
};

// Immutable simple undirected graph on vertices 0..n-1.
class Graph {
 public:
  Graph() = default;
  explicit Graph(Vertex n);

  // Throws GraphError on loops, duplicates or out-of-range endpoints.
  static Graph from_edges(Vertex n, const std::vector<Edge>& edges);
  // Drops loops and merges parallel edges instead of throwing.
  static Graph from_edges_lenient(Vertex n, const std::vector<Edge>& edges);

  Vertex order() const { return static_cast<Vertex>(adjacency_.size()); }
  std::size_t size() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;
  int degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }

  int max_degree() const;
  int min_degree() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.adjacency_.size() == b.adjacency_.size() && a.edges_ == b.edges_;
  }

 private:
  static Graph build(Vertex n, std::vector<Edge> edges, bool lenient);

  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<Edge> edges_;
};

struct Path {
  std::vector<Vertex> vertices;

  int length() const {
    return vertices.empty() ? -1 : static_cast<int>(vertices.size()) - 1;
  }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }
  // Int(P): every vertex except the two ends.
  std::vector<Vertex> interior() const;

  friend bool operator==(const Path&, const Path&) = default;
};

// Returns an empty string if p is a path in g, otherwise the reason it is not.
std::string path_problem(const Graph& g, const Path& p);

struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> original;  // new id -> id in the parent graph
};

Rational average_degree(const Graph& g);
double average_degree_value(const Graph& g);

VertexSet ball(const Graph& g, const VertexSet& x, int radius,
               const VertexSet& avoid = {});
VertexSet sphere(const Graph& g, const VertexSet& x, int i,
                 const VertexSet& avoid = {});
// N(X): vertices outside x with a neighbour in x.
VertexSet neighborhood(const Graph& g, const VertexSet& x,
                       const VertexSet& avoid = {});
std::vector<Edge> edge_boundary(const Graph& g, const VertexSet& x);
Distance distance(const Graph& g, const VertexSet& a, const VertexSet& b,
                  const VertexSet& avoid = {});
// BFS layer of every vertex from x in g - avoid; -1 for unreachable.
std::vector<int> bfs_layers(const Graph& g, const VertexSet& x,
                            const VertexSet& avoid = {});

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);
Graph remove_edges(const Graph& g, const std::vector<Edge>& f);
// Merges e.v into e.u (the smaller id survives); ids above e.v shift down.
Graph contract_edge(const Graph& g, Edge e,
                    std::vector<Vertex>* old_to_new = nullptr);
// Disjoint union, second graph's ids shifted by a.order().
Graph disjoint_union(const Graph& a, const Graph& b);
Graph add_edges(const Graph& g, const std::vector<Edge>& extra);

std::vector<VertexSet> connected_components(const Graph& g,
                                            const VertexSet& avoid = {});
bool is_connected(const Graph& g);
bool induces_connected(const Graph& g, const VertexSet& s);
// Proper 2-colouring (0/1 per vertex) or empty if g has an odd cycle.
std::vector<int> two_coloring(const Graph& g);
bool is_independent(const Graph& g, const VertexSet& s);
// Largest pairwise distance inside s measured in g; infinity if split.
Distance set_diameter(const Graph& g, const VertexSet& s);
// Exact vertex connectivity via unit-capacity flows; intended for small g.
int vertex_connectivity(const Graph& g);

// Stable 64-bit digest of (n, edge list), used to tie certificates to hosts.
std::uint64_t graph_fingerprint(const Graph& g);

void check_vertex(const Graph& g, Vertex v);
void check_vertices(const Graph& g, const VertexSet& s);

}  // namespace subdiv

#endif  // SUBDIV_GRAPH_HPP
