//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_PLANAR_HPP
#define SUBDIV_PLANAR_HPP

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

using Face = std::vector<Vertex>;  // closed walk, last vertex joins the first

struct PlanarEmbedding {
  Graph graph;
  std::vector<Face> faces;
};

// Empty when the graph is connected, every face is a closed walk in it,
// every edge is walked exactly twice over all faces and V - E + F = 2.
std::string embedding_problem(const PlanarEmbedding& emb);
bool is_triangulation(const PlanarEmbedding& emb);

// Faces of a rotation system: rotation[v] lists v's neighbours in cyclic
// order. Planar iff the result passes embedding_problem.
std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation);

// Planar embedding of a 2-connected graph by repeated path addition: embed a
// cycle, then keep routing a path of some fragment through a face holding
// all its attachments, preferring fragments with a single such face.
// nullopt when the graph is not planar. Throws std::invalid_argument if g is
// not 2-connected.
std::optional<PlanarEmbedding> find_embedding(const Graph& g);

// Splits every face of length > 3 by a fan of chords from one of its
// vertices, the first one whose chords are all new edges; throws
// std::invalid_argument if no vertex of some face qualifies.
PlanarEmbedding fan_triangulate(const PlanarEmbedding& emb);

// Random triangulation on t >= 4 vertices: a stacked start from K4 followed
// by random edge flips. Faces are consistently oriented.
PlanarEmbedding random_triangulation(Vertex t, std::mt19937_64& rng, int flips = -1);

struct DualGraph {
  Graph dual;                 // vertex i is faces[i]
  std::vector<Edge> primal;   // primal[i] is the primal edge crossed by dual.edges()[i]
};

// Throws std::invalid_argument on an invalid embedding, on a
// non-triangulation when `require_triangulation`, or when two faces share
// more than one edge (the dual would need parallel edges).
DualGraph dual_graph(const PlanarEmbedding& emb, bool require_triangulation = true);

// Maximum matching by Edmonds' blossom algorithm; mate[v] is -1 if free.
std::vector<Vertex> maximum_matching(const Graph& g);
std::optional<std::vector<Edge>> perfect_matching(const Graph& g);

struct SubdivisionResult {
  Graph result;
  std::vector<std::pair<Edge, Vertex>> subdivided;  // original edge -> midpoint
  std::vector<int> coloring;                        // proper 2-colouring of result
  int one_side = 0;  // one_sided_subdivision: |V \ X|
};

// Subdivides once each primal edge of a perfect matching of the dual; the
// result has 2t - 2 vertices and is bipartite. Requires a triangulation
// with t >= 4.
SubdivisionResult bipartite_subdivision(const PlanarEmbedding& emb);

// Subdivides every edge with no end in the independent set x.
SubdivisionResult one_sided_subdivision(const Graph& h, const VertexSet& x);

}  // namespace subdiv

#endif  // SUBDIV_PLANAR_HPP
