//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_STRUCTURES_HPP
#define SUBDIV_STRUCTURES_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

// A failed clause of a structure definition. `clause` is a short stable
// name ("star-disjointness", "distance at least tau", ...).
struct Violation {
  std::string clause;
  std::string detail;
};
using StructureCheck = std::optional<Violation>;  // empty means valid

// Even cycle x_1..x_2a plus pendant leaves. Attachment indices are 0-based
// positions into `cycle`; only odd ones (x_2, x_4, ... in 1-based terms)
// may carry a leaf.
struct Sun {
  std::vector<Vertex> cycle;
  std::vector<std::pair<Vertex, int>> leaves;  // (leaf, attachment index)

  int a() const { return static_cast<int>(cycle.size()) / 2; }
  int b() const { return static_cast<int>(leaves.size()); }
  VertexSet vertices() const;
};

StructureCheck validate_sun(const Graph& host, const Sun& sun);

struct Star {
  Vertex centre = 0;
  std::vector<Vertex> leaves;
};

struct UnitShape {
  int h1 = 1;  // spokes
  int h2 = 1;  // leaves per star
  int h3 = 1;  // maximum spoke length
};

// Core u, spokes P_i from u to x_i, and an h2-star at each x_i.
struct Unit {
  Vertex core = 0;
  std::vector<Path> spokes;
  std::vector<Star> stars;  // stars[i].centre is spokes[i].back()

  VertexSet vertices() const;
  VertexSet exterior() const;  // all star leaves
  VertexSet interior() const;
  // The unique core-to-w path inside the unit; w must be exterior.
  Path path_to(Vertex w) const;
};

StructureCheck validate_unit(const Graph& host, const Unit& unit, const UnitShape& shape);

struct WebShape {
  int h0 = 1;  // arms
  UnitShape unit;
};

struct Web {
  Vertex core = 0;
  std::vector<Path> arms;   // core -> units[i].core
  std::vector<Unit> units;

  VertexSet vertices() const;
  VertexSet exterior() const;
  VertexSet interior() const;
  VertexSet centre() const;  // arm vertices
  Path path_to(Vertex w) const;
};

StructureCheck validate_web(const Graph& host, const Web& web, const WebShape& shape);

struct NakjiParams {
  int t = 1;    // legs
  int s = 1;    // maximum head and leg size
  int r = 1;    // leg diameter; arms are at most 10r long
  int tau = 1;  // separation of legs from each other and from the head
};

struct Nakji {
  VertexSet head;
  std::vector<VertexSet> legs;
  std::vector<Path> arms;  // arms[i] runs from the head to legs[i]
  NakjiParams params;

  VertexSet vertices() const;
};

StructureCheck validate_nakji(const Graph& host, const Nakji& nakji);

struct StarHarvest {
  std::vector<Star> stars;
  int deficiency = 0;  // requested minus found
};

// Greedy vertex-disjoint stars with `leaf_count` leaves in g - avoid. The
// centre with most available neighbours goes first; leaves prefer vertices
// with few available neighbours. Ties go to the smaller id.
StarHarvest find_disjoint_stars(const Graph& g, const VertexSet& avoid, int count,
                                int leaf_count);

struct BuildBudget {
  long long max_nodes = 2000000;
  long long used = 0;
  bool spend(long long n = 1) {
    used += n;
    return used <= max_nodes;
  }
  bool exhausted() const { return used > max_nodes; }
};

struct UnitBuild {
  std::optional<Unit> unit;
  std::string stage;  // "pool" or "search" on success
  std::vector<std::string> trace;
  bool budget_exhausted = false;
};

// Star pool plus smallest reachable hub first; when that fails, a budgeted
// backtracking search over hubs and spokes with a matching for the leaves.
// `core` pins the hub.
UnitBuild build_unit(const Graph& g, const VertexSet& avoid, const UnitShape& shape,
                     BuildBudget& budget, std::optional<Vertex> core = std::nullopt);

struct WebBuild {
  std::optional<Web> web;
  std::string stage;
  std::vector<std::string> trace;
  bool budget_exhausted = false;
};

// Harvests disjoint units, then looks for a hub reaching h0 of their cores
// by internally disjoint short paths; falls back to a hub-first search.
WebBuild build_web(const Graph& g, const VertexSet& avoid, const WebShape& shape,
                   BuildBudget& budget);

struct CycleSearch {
  std::vector<Vertex> cycle;  // empty if none of the requested parity
  bool exact = false;
};

enum class CycleParity { kAny, kOdd, kEven };

// Longest cycle of the given parity: exhaustive for n <= 16 (within the
// node budget), otherwise greedy long paths closed by a back edge.
CycleSearch longest_cycle(const Graph& g, CycleParity parity, std::uint64_t seed = 0,
                          long long node_budget = 20000000);

struct SunSearch {
  std::optional<Sun> sun;
  std::optional<std::vector<Vertex>> odd_cycle;  // non-bipartite hosts
  bool exact = false;
  bool found() const { return sun.has_value() || odd_cycle.has_value(); }
};

// Non-bipartite g: an odd cycle of length >= r0. Bipartite g with sides
// A <= B: a long cycle with A on the leaf-bearing positions, plus a
// matching from B outside the cycle onto it, until a + b >= r0.
SunSearch find_sun(const Graph& g, int r0, std::uint64_t seed = 0);

struct NakjiBuild {
  std::vector<Nakji> nakjis;
  std::vector<std::string> trace;
};

// Heads and legs come from the given subexpanders, in order. Each arm is a
// shortest avoidance path from the head to a candidate subexpander, cut at
// its first contact; the leg grows from that contact inside the
// subexpander while its host diameter stays within r.
NakjiBuild build_nakjis(const Graph& g, const VertexSet& avoid, const NakjiParams& params,
                        int count, const std::vector<VertexSet>& subexpanders);

}  // namespace subdiv

#endif  // SUBDIV_STRUCTURES_HPP
