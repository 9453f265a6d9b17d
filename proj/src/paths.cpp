//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/paths.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

namespace subdiv {

ConnectionBudget ConnectionBudget::for_host(Vertex n, const ExpanderParams& params) {
  params.check_basic();
  ConnectionBudget b;
  b.n = n;
  b.params = params;
  double l = std::log(15.0 * n / params.t);
  b.m = 2.0 / params.eps1 * l * l * l;
  return b;
}

namespace {

// BFS from `from` inside the allowed mask; returns the layer and parent arrays.
struct Search {
  std::vector<int> layer;
  std::vector<Vertex> parent;
};

Search bfs_within(const Graph& g, const VertexSet& from, const std::vector<char>& allowed) {
  Search s;
  s.layer.assign(g.order(), -1);
  s.parent.assign(g.order(), -1);
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if (!allowed[v]) continue;
    s.layer[v] = 0;
    queue.push_back(v);
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbors(v)) {
      if (!allowed[w] || s.layer[w] >= 0) continue;
      s.layer[w] = s.layer[v] + 1;
      s.parent[w] = v;
      queue.push_back(w);
    }
  }
  return s;
}

Path trace(const Search& s, Vertex end) {
  Path p;
  for (Vertex v = end; v >= 0; v = s.parent[v]) p.vertices.push_back(v);
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

}  // namespace

std::optional<Path> connect_avoiding(const Graph& g, const VertexSet& x1,
                                     const VertexSet& x2, const VertexSet& w) {
  check_vertices(g, x1);
  check_vertices(g, x2);
  if (!x1.disjoint_from(w) || !x2.disjoint_from(w))
    throw GraphError("connect_avoiding: endpoint sets must avoid w");
  VertexSet common = x1.intersect(x2);
  if (!common.empty()) return Path{{common[0]}};
  std::vector<char> allowed(g.order(), 1);
  for (Vertex v : w) allowed[v] = 0;
  Search s = bfs_within(g, x1, allowed);
  Vertex best = -1;
  for (Vertex v : x2)
    if (s.layer[v] >= 0 && (best < 0 || s.layer[v] < s.layer[best])) best = v;
  if (best < 0) return std::nullopt;
  return trace(s, best);
}

std::optional<Path> connect_avoiding(const Graph& g, const VertexSet& x1,
                                     const VertexSet& x2, const VertexSet& w,
                                     const ExpanderCertificate& certificate) {
  std::optional<Path> p = connect_avoiding(g, x1, x2, w);
  bool applies = certificate.mode == VerifyMode::kExhaustive && certificate.passed &&
                 certificate.host_fingerprint == graph_fingerprint(g);
  if (!applies) return p;
  const ExpanderParams& params = certificate.params;
  double x = static_cast<double>(std::min(x1.size(), x2.size()));
  if (x < params.t / 2.0) return p;
  if (static_cast<double>(w.size()) > rho(x, params) * x / 4.0) return p;
  double m = ConnectionBudget::for_host(g.order(), params).m;
  if (!p)
    throw LengthBoundViolation("certified expander: no path between sets of size >= " +
                               std::to_string(x));
  if (p->length() > m)
    throw LengthBoundViolation("certified expander: path of length " +
                               std::to_string(p->length()) + " exceeds m = " +
                               std::to_string(m));
  return p;
}

VertexSet PathSystem::used_outside_source() const {
  std::vector<Vertex> ids;
  for (const Path& p : paths)
    for (Vertex v : p.vertices)
      if (!source.contains(v)) ids.push_back(v);
  return VertexSet(std::move(ids));
}

PathSystem consecutive_shortest_paths(const Graph& g, const VertexSet& x, int radius,
                                      const VertexSet& y, int count,
                                      EndpointPolicy policy) {
  if (!x.disjoint_from(y)) throw GraphError("consecutive paths: x must avoid y");
  PathSystem ps;
  ps.source = x;
  ps.avoided = y;
  ps.radius = radius;
  ps.requested = count;
  ps.within = ball(g, x, radius, y);
  std::vector<char> allowed = ps.within.mask(g.order());
  std::vector<char> is_source = x.mask(g.order());
  for (int i = 0; i < count; ++i) {
    Search s = bfs_within(g, x, allowed);
    Vertex end = -1;
    for (Vertex v : ps.within) {
      if (is_source[v] || s.layer[v] < 0) continue;
      bool better = end < 0 || (policy == EndpointPolicy::kFarthest
                                    ? s.layer[v] > s.layer[end]
                                    : s.layer[v] < s.layer[end]);
      if (better) end = v;
    }
    if (end < 0) {
      ps.stopped_early = true;
      break;
    }
    Path p = trace(s, end);
    for (Vertex v : p.vertices)
      if (!is_source[v]) allowed[v] = 0;
    ps.paths.push_back(std::move(p));
  }
  return ps;
}

std::string consecutive_problem(const Graph& g, const PathSystem& ps) {
  VertexSet within = ball(g, ps.source, ps.radius, ps.avoided);
  if (!(within == ps.within)) return "recorded ball differs from B^r_{g-y}(x)";
  std::vector<char> allowed = within.mask(g.order());
  std::vector<char> is_source = ps.source.mask(g.order());
  for (std::size_t j = 0; j < ps.paths.size(); ++j) {
    const Path& p = ps.paths[j];
    std::string tag = "path " + std::to_string(j) + ": ";
    if (std::string why = path_problem(g, p); !why.empty()) return tag + why;
    if (!is_source[p.front()]) return tag + "does not start in x";
    if (is_source[p.back()]) return tag + "ends inside x";
    for (std::size_t k = 0; k < p.vertices.size(); ++k) {
      Vertex v = p.vertices[k];
      if (k > 0 && is_source[v]) return tag + "revisits x";
      if (!allowed[v]) return tag + "leaves the allowed region";
    }
    Search s = bfs_within(g, ps.source, allowed);
    if (s.layer[p.back()] != p.length()) return tag + "is not a shortest path";
    for (Vertex v : p.vertices)
      if (!is_source[v]) allowed[v] = 0;
  }
  return {};
}

GrowthProfile growth_profile(const Graph& g, const VertexSet& x, const VertexSet& y,
                             const PathSystem& ps, int radius,
                             const ExpanderCertificate* certificate) {
  GrowthProfile out;
  VertexSet blocked = y.unite(ps.used_outside_source());
  std::vector<int> layer = bfs_layers(g, x, blocked);
  for (int i = 0; i <= radius; ++i) {
    long long c = 0;
    for (Vertex v = 0; v < g.order(); ++v)
      if (layer[v] >= 0 && layer[v] <= i) ++c;
    out.sizes.push_back(c);
  }
  auto fail = [&out](std::string why) { out.precondition_failures.push_back(std::move(why)); };
  if (!certificate) {
    fail("no expander certificate supplied");
  } else {
    const ExpanderParams& p = certificate->params;
    double xs = static_cast<double>(x.size());
    if (certificate->mode != VerifyMode::kExhaustive || !certificate->passed)
      fail("certificate is not an exhaustive pass");
    if (certificate->host_fingerprint != graph_fingerprint(g))
      fail("certificate belongs to a different graph");
    if (xs < p.t) fail("|x| below eps2 d");
    if (static_cast<double>(y.size()) > rho(xs, p) * xs / 4.0) fail("|y| above rho(x) x / 4");
    double lx = std::log(xs);
    double qcap = xs > 1.0 ? xs / std::pow(lx, 8.0) : 0.0;
    if (!(static_cast<double>(ps.paths.size()) < qcap)) fail("q not below x log^-8 x");
    if (radius < 1 || radius > std::log(static_cast<double>(g.order())))
      fail("r outside [1, log n]");
  }
  out.preconditions_hold = out.precondition_failures.empty();
  if (out.preconditions_hold) {
    for (int i = 1; i <= radius; ++i)
      if (static_cast<double>(out.sizes[i]) < std::exp(std::pow(i, 0.25))) out.anomalies.push_back(i);
  }
  return out;
}

IntersectionReport check_path_intersection_bound(const Graph& g, const VertexSet& x,
                                                 const VertexSet& y,
                                                 const PathSystem& ps, int radius) {
  IntersectionReport report;
  VertexSet blocked = y.unite(ps.used_outside_source());
  std::vector<int> layer = bfs_layers(g, x, blocked);
  std::vector<char> is_y = y.mask(g.order());
  for (int i = 0; i <= radius; ++i) {
    // Z_i = B^i_{g-P-y}(x); boundary taken in g - y.
    std::vector<char> in_z(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) in_z[v] = layer[v] >= 0 && layer[v] <= i;
    std::vector<char> in_n(g.order(), 0);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (!in_z[v]) continue;
      for (Vertex w : g.neighbors(v))
        if (!in_z[w] && !is_y[w]) in_n[w] = 1;
    }
    for (std::size_t j = 0; j < ps.paths.size(); ++j) {
      int c = 0;
      for (Vertex v : ps.paths[j].vertices) c += in_n[v];
      IntersectionCount item{i, static_cast<int>(j), c};
      report.counts.push_back(item);
      if (c > i + 2) report.violations.push_back(item);
    }
  }
  return report;
}

}  // namespace subdiv
