//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_ORACLE_HPP
#define SUBDIV_ORACLE_HPP

#include <optional>
#include <string>
#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/structures.hpp"

namespace subdiv {

// kBoundedAbsent: nothing found, but only paths up to max_path_length were
// tried, so absence is not proven. Timeouts are never reported as absence.
enum class SearchOutcome { kFound, kAbsent, kBoundedAbsent, kTimeout };

const char* outcome_name(SearchOutcome o);

struct SearchLimits {
  long long node_budget = 50000000;
  int max_path_length = 0;  // 0 or >= |G| - 1 means unrestricted
};

// branch_paths[i] realizes h.edges()[i] and runs anchors[e.u] -> anchors[e.v].
struct SubdivisionMap {
  std::vector<Vertex> anchors;
  std::vector<Path> branch_paths;
};

struct SubdivisionSearch {
  SearchOutcome outcome = SearchOutcome::kTimeout;
  std::optional<SubdivisionMap> map;
  long long nodes = 0;
};

// Complete backtracking: anchors placed one at a time (most constrained H
// vertex first, host candidates by decreasing degree), the branch paths to
// already placed neighbours routed right after each anchor. Only induced
// paths are tried; a chord could always shortcut a path.
SubdivisionSearch find_subdivision(const Graph& g, const Graph& h, const SearchLimits& limits = {});

struct MinorMap {
  std::vector<VertexSet> branch_sets;  // indexed by H vertex
};

struct MinorSearch {
  SearchOutcome outcome = SearchOutcome::kTimeout;
  std::optional<MinorMap> map;
  long long nodes = 0;
};

// Labels every host vertex with an H vertex or "unused", pruning on branch
// set connectivity and edge feasibility. Twins of G get nondecreasing
// labels and twins of H are used in order. |G| <= 64.
MinorSearch find_minor(const Graph& g, const Graph& h, const SearchLimits& limits = {});

StructureCheck validate_subdivision(const Graph& g, const Graph& h, const SubdivisionMap& map);
StructureCheck validate_minor(const Graph& g, const Graph& h, const MinorMap& map);

// Series-parallel reduction: strip vertices of degree <= 1 and suppress
// degree-2 vertices until nothing changes; g is K4-minor-free iff nothing
// is left.
bool is_k4_minor_free(const Graph& g);

// Classes of vertices with equal open or equal closed neighbourhoods.
std::vector<std::vector<Vertex>> twin_classes(const Graph& g);

}  // namespace subdiv

#endif  // SUBDIV_ORACLE_HPP
