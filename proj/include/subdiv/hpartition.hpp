//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_HPARTITION_HPP
#define SUBDIV_HPARTITION_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdiv/graph.hpp"
#include "subdiv/structures.hpp"

namespace subdiv {

struct BandwidthOrder {
  std::vector<Vertex> order;  // order[i] is the vertex at position i
  int b = 0;
  bool exact = false;
};

// max |pos(u) - pos(v)| over edges; throws if `order` is not a permutation.
int order_bandwidth(const Graph& h, const std::vector<Vertex>& order);

// Branch and bound for |h| <= exact_cap. Above it, the best of the input
// labelling and BFS level orders (Cuthill-McKee style) from each start.
BandwidthOrder bandwidth_order(const Graph& h, int exact_cap = 12);

enum class TargetKind { kOddCycle, kSun };

// Classes are numbered 0..k-1. For an odd cycle C_r, class i is adjacent to
// i +- 1 mod r. For a (2s,q)-sun, classes 0..2s-1 follow the cycle and class
// 2s+j is the j-th leaf.
struct PartitionPlan {
  TargetKind kind = TargetKind::kOddCycle;
  Graph target;
  std::vector<Vertex> target_labels;  // class -> sun vertex (sun targets)
  int r = 0;
  double d = 0.0;
  int cap = 0;  // floor(d / r)
  std::vector<int> classes;  // H vertex -> class
  std::vector<int> loads;
  std::uint64_t seed = 0;
  int attempt = 0;
  std::string strategy;  // "segment-walk" or "paced-walk"

  // Block layout and diagnostics.
  int block_width = 0;
  int segment_blocks = 0;  // t = ceil(beta^{-1/2})
  int segments = 0;
  long long w_mass = 0;  // vertices in the first r blocks of each segment
  double w_mass_ceiling = 0.0;  // segments * r * block_width
  bool w_mass_within_sqrt_beta = false;  // w_mass <= r * sqrt(beta) * d
  std::vector<int> segment_slots;
  std::vector<int> walk_lengths;  // blocks spent walking, per segment
  std::vector<int> ell_star;      // odd cycles: the odd offset per segment
};

// Empty when every class is within cap and every H edge maps onto a target
// edge; otherwise the first problem.
std::string plan_problem(const Graph& h, const PartitionPlan& plan);

struct PartitionOptions {
  double beta = 0.0;  // 0 picks the smallest admissible value, b / d
  int retries = 64;
};

struct PartitionResult {
  std::optional<PartitionPlan> plan;
  std::optional<PartitionPlan> best_near_miss;  // when plan is empty
  std::vector<int> overflow;  // per class, for the near miss
  int attempts = 0;
};

// Balanced homomorphism of a bipartite h onto C_r (r odd). Throws
// std::invalid_argument on an even r, a non-bipartite h, |h| > d or a
// bandwidth above beta*d.
PartitionResult partition_onto_odd_cycle(const Graph& h, int r, double d,
                                         const BandwidthOrder& bw, std::uint64_t seed,
                                         const PartitionOptions& options = {});

// Same onto a (2s,q)-sun with s + q >= r and s >= q.
PartitionResult partition_onto_sun(const Graph& h, const Sun& sun, int r, double d,
                                   const BandwidthOrder& bw, std::uint64_t seed,
                                   const PartitionOptions& options = {});

struct SeparatorResult {
  std::optional<VertexSet> separator;
  bool exact = false;
};

// True when |s| <= floor(alpha n) and every component of h - s has at
// most floor(alpha n) vertices.
bool is_alpha_separator(const Graph& h, const VertexSet& s, double alpha);

// Smallest-first subset enumeration for |h| <= exact_cap; above it, a
// BFS-level splitting heuristic that may miss separators.
SeparatorResult check_separable(const Graph& h, double alpha, int exact_cap = 14);

}  // namespace subdiv

#endif  // SUBDIV_HPARTITION_HPP
