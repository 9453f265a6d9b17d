//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_PIPELINE_HPP
#define SUBDIV_PIPELINE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdiv/expander.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/structures.hpp"

namespace subdiv {

// Every dial the embedding strategies read. The asymptotic couplings of the
// existence proofs (dm^10, m^12/2, d/m^3, ...) are meaningless on graphs
// with a few dozen vertices, so each one is an explicit number here with a
// small default. Non-positive "auto" values are resolved per run and the
// resolved numbers are what the certificate records.
struct PipelineConfig {
  double eps1 = 1.0 / (10.0 * kDefaultExpansionConstant);
  double eps2 = 0.1;
  int max_degree_cap = 8;  // largest Delta(h) accepted

  // High-degree anchoring: L = {v : deg(v) >= cutoff}. Auto is
  // max(Delta(h), ceil(high_degree_factor * d(expander))).
  int high_degree_cutoff = 0;
  double high_degree_factor = 1.0;

  // Web anchoring. Auto arms = Delta(h) + 1; webs wanted = 2|h|.
  int web_arms = 0;
  int web_spokes = 1;
  int web_star_leaves = 2;
  int web_spoke_length = 2;
  int web_count = 0;
  // A web is bad once more than this many of its interior vertices lie on
  // connection paths. Auto is half its interior.
  int web_bad_threshold = -1;

  // Nakji wiring. Auto legs = Delta(h).
  int nakji_legs = 0;
  int nakji_size = 6;        // head and leg size cap
  int nakji_radius = 2;      // leg diameter; arms at most 10 times this
  int nakji_separation = 2;  // distance between legs and from the head
  double subexpander_min_degree = 3.0;
  int subexpander_separation = 1;
  int subexpander_max_size = 12;  // members are small by design

  long long structure_budget = 200000;
  SearchLimits oracle_limits{2000000, 0};
  bool use_oracle = true;
  std::uint64_t seed = 0;
};

enum class Strategy { kHighDegree, kWeb, kNakji, kOracle };
const char* strategy_name(Strategy s);

struct StrategyAttempt {
  Strategy strategy = Strategy::kHighDegree;
  bool success = false;
  std::string reason;  // why it was skipped or failed; empty on success
};

// Bookkeeping for high-degree anchoring: the avoidance set
// before step l is exactly Z plus the interiors of paths 0..l-1.
struct HighDegreeTrace {
  int cutoff = 0;
  std::vector<Vertex> high;              // L, host ids
  std::vector<std::size_t> avoid_sizes;  // |W_l u Z| before each connection
};

struct WebStep {
  Vertex h_vertex = 0;
  int web = 0;
  std::vector<int> evicted;  // webs that turned bad after this step
  std::vector<Vertex> dropped;  // h vertices that lost their web
};

struct WebTrace {
  std::vector<Web> webs;  // host ids
  int bad_threshold = 0;
  std::vector<WebStep> steps;
  std::vector<int> final_web;  // h vertex -> web index
};

struct NakjiTrace {
  std::vector<VertexSet> subexpanders;  // host ids
  std::vector<Nakji> nakjis;            // host ids
  std::vector<Path> connections;        // R_e per h edge, leg to leg
  std::vector<std::string> build_log;
};

struct EmbedCertificate {
  Strategy strategy = Strategy::kOracle;
  PipelineConfig config;  // with auto dials resolved
  std::uint64_t host_fingerprint = 0;
  std::vector<Vertex> expander_vertices;  // host ids of the extracted expander
  std::optional<ExpanderCertificate> expander;
  double connection_scale = 0;  // m for the expander
  std::optional<HighDegreeTrace> high_degree;
  std::optional<WebTrace> web;
  std::optional<NakjiTrace> nakji;
  SubdivisionMap map;
  std::string validation;  // "pass" once validate_subdivision accepts map
};

struct EmbedOutcome {
  std::optional<EmbedCertificate> certificate;
  std::vector<StrategyAttempt> attempts;
  std::vector<std::string> warnings;
  // Set when the oracle ran: kAbsent is a proof that g has no subdivision
  // of h, kTimeout means nothing was decided.
  std::optional<SearchOutcome> oracle;
  bool success() const { return certificate.has_value(); }
};

// Extract an expander, then try high-degree anchoring, web anchoring and
// nakji wiring on it in that order, then the oracle on g itself. Any
// success is re-validated against g. Throws std::invalid_argument when
// Delta(h) exceeds config.max_degree_cap.
EmbedOutcome embed_subdivision(const Graph& g, const Graph& h, const PipelineConfig& config = {});

struct AnchorPacking {
  VertexSet anchors;
  int deficiency = 0;  // requested minus found
};

// Greedy packing: take the smallest id outside the union of radius
// (min_dist - 1) balls around anchors chosen so far.
AnchorPacking far_apart_anchors(const Graph& g, int count, int min_dist);

struct Subexpander {
  VertexSet vertices;
  ExpanderCertificate certificate;
  double avg_degree = 0;
};

// Greedy family of small, separated expanders. Each round looks at every
// unblocked seed, takes the first max_size vertices of a BFS from it in g
// minus the blocked vertices, and extracts an expander from that region;
// the best phi score with average degree at least min_avg_degree joins the
// family and the radius `separation` ball around it is blocked. `avoid`
// starts blocked. Stops when no region qualifies.
std::vector<Subexpander> subexpander_family(const Graph& g, const VertexSet& avoid,
                                            double min_avg_degree, int separation,
                                            int max_size = 16,
                                            double eps1 = 1.0 / (10.0 * kDefaultExpansionConstant),
                                            double eps2 = 0.1);

// Paths from centre to each target that meet only at centre, using only
// vertices of `within`. Targets must be distinct and differ from centre.
std::optional<std::vector<Path>> find_fan(const Graph& g, Vertex centre,
                                          const std::vector<Vertex>& targets,
                                          const VertexSet& within);

}  // namespace subdiv

#endif  // SUBDIV_PIPELINE_HPP
