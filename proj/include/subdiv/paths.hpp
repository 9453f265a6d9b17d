//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_PATHS_HPP
#define SUBDIV_PATHS_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "subdiv/expander.hpp"
#include "subdiv/graph.hpp"

namespace subdiv {

// Length guarantee for short connections in a robust expander:
// m = (2 / eps1) ln^3(15 n / t).
struct ConnectionBudget {
  Vertex n = 0;
  ExpanderParams params;
  double m = 0.0;

  static ConnectionBudget for_host(Vertex n, const ExpanderParams& params);
};

// Raised when a certified expander yields a connection longer than m.
class LengthBoundViolation : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest x1 -> x2 path in g - w, ties broken towards smaller ids.
std::optional<Path> connect_avoiding(const Graph& g, const VertexSet& x1,
                                     const VertexSet& x2, const VertexSet& w);

// Same search, plus the length assertion when the certificate is an
// exhaustive pass for g and the set sizes and |w| are small enough for the
// connection bound to apply.
std::optional<Path> connect_avoiding(const Graph& g, const VertexSet& x1,
                                     const VertexSet& x2, const VertexSet& w,
                                     const ExpanderCertificate& certificate);

enum class EndpointPolicy { kFarthest, kNearest };

struct PathSystem {
  VertexSet source;
  std::vector<Path> paths;
  VertexSet within;   // the ball B^r_{g-y}(source)
  VertexSet avoided;  // y
  int radius = 0;
  int requested = 0;
  bool stopped_early = false;

  // Union of path vertices outside the source set.
  VertexSet used_outside_source() const;
};

PathSystem consecutive_shortest_paths(
    const Graph& g, const VertexSet& x, int radius, const VertexSet& y, int count,
    EndpointPolicy policy = EndpointPolicy::kFarthest);

// Empty string when every path is a shortest path from x inside its
// restricted ball, as consecutive shortest paths must be; otherwise the
// first failure.
std::string consecutive_problem(const Graph& g, const PathSystem& ps);

struct GrowthProfile {
  std::vector<long long> sizes;  // |B^i_{g-P-y}(x)| for i = 0..r
  bool preconditions_hold = false;
  std::vector<std::string> precondition_failures;
  std::vector<int> anomalies;  // indices i with size < exp(i^{1/4})
};

// Pass the certificate (and its eps2) to evaluate the growth preconditions;
// without it the profile is just the ball sizes.
GrowthProfile growth_profile(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const PathSystem& ps, int radius,
                             const ExpanderCertificate* certificate = nullptr);

struct IntersectionCount {
  int layer = 0;  // i
  int path = 0;   // j
  int count = 0;  // |V(P_j) n N_{g-y}(Z_i)|
};

struct IntersectionReport {
  std::vector<IntersectionCount> counts;
  std::vector<IntersectionCount> violations;  // count > i + 2
  bool ok() const { return violations.empty(); }
};

IntersectionReport check_path_intersection_bound(const Graph& g, const VertexSet& x,
                                                 const VertexSet& y,
                                                 const PathSystem& ps, int radius);

}  // namespace subdiv

#endif  // SUBDIV_PATHS_HPP
