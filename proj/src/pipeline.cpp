//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <set>
#include <stdexcept>

#include "subdiv/paths.hpp"

namespace subdiv {

const char* strategy_name(Strategy s) {
  switch (s) {
    case Strategy::kHighDegree: return "high-degree";
    case Strategy::kWeb: return "web";
    case Strategy::kNakji: return "nakji";
    case Strategy::kOracle: return "oracle";
  }
  return "?";
}

// ---------------------------------------------------------------- helpers

std::optional<std::vector<Path>> find_fan(const Graph& g, Vertex centre,
                                          const std::vector<Vertex>& targets,
                                          const VertexSet& within) {
  check_vertex(g, centre);
  if (!within.contains(centre)) return std::nullopt;
  if (VertexSet(targets).size() != targets.size())
    throw std::invalid_argument("find_fan: targets must be distinct");
  for (Vertex t : targets) {
    check_vertex(g, t);
    if (t == centre) throw std::invalid_argument("find_fan: a target equals the centre");
    if (!within.contains(t)) return std::nullopt;
  }
  if (targets.empty()) return std::vector<Path>{};

  // Vertex i of `within` becomes in-node 2i and out-node 2i+1; the sink is
  // the last node. Targets get no outgoing arcs, so they end paths.
  const std::vector<Vertex>& vs = within.members();
  std::map<Vertex, int> index;
  for (std::size_t i = 0; i < vs.size(); ++i) index[vs[i]] = static_cast<int>(i);
  const int sink = 2 * static_cast<int>(vs.size());
  struct Arc {
    int to;
    int cap;
  };
  std::vector<Arc> arcs;
  std::vector<std::vector<int>> out(sink + 1);
  auto add = [&](int a, int b) {
    out[a].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({b, 1});
    out[b].push_back(static_cast<int>(arcs.size()));
    arcs.push_back({a, 0});
  };
  VertexSet target_set(targets);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    Vertex v = vs[i];
    if (v != centre) add(2 * static_cast<int>(i), 2 * static_cast<int>(i) + 1);
    if (target_set.contains(v)) {
      add(2 * static_cast<int>(i) + 1, sink);
      continue;
    }
    for (Vertex w : g.neighbors(v))
      if (w != centre && index.count(w)) add(2 * static_cast<int>(i) + 1, 2 * index[w]);
  }
  const int source = 2 * index[centre] + 1;
  for (std::size_t round = 0; round < targets.size(); ++round) {
    std::vector<int> via(sink + 1, -1);
    std::vector<int> queue{source};
    via[source] = -2;
    for (std::size_t q = 0; q < queue.size() && via[sink] == -1; ++q)
      for (int id : out[queue[q]])
        if (arcs[id].cap > 0 && via[arcs[id].to] == -1) {
          via[arcs[id].to] = id;
          queue.push_back(arcs[id].to);
        }
    if (via[sink] == -1) return std::nullopt;
    for (int x = sink; x != source; x = arcs[via[x] ^ 1].to) {
      --arcs[via[x]].cap;
      ++arcs[via[x] ^ 1].cap;
    }
  }
  // Read off each unit of flow leaving the centre.
  std::vector<Path> paths;
  std::map<Vertex, Path> by_target;
  for (int id : out[source]) {
    if (id % 2 != 0 || arcs[id].cap != 0) continue;
    Path p{{centre}};
    int node = arcs[id].to;
    while (node != sink) {
      Vertex v = vs[node / 2];
      if (node % 2 == 0) p.vertices.push_back(v);
      int next = -1;
      for (int a : out[node])
        if (a % 2 == 0 && arcs[a].cap == 0) {
          next = arcs[a].to;
          break;
        }
      node = next;
    }
    by_target[p.back()] = p;
  }
  for (Vertex t : targets) paths.push_back(by_target.at(t));
  return paths;
}

AnchorPacking far_apart_anchors(const Graph& g, int count, int min_dist) {
  AnchorPacking out;
  std::vector<char> blocked(g.order(), 0);
  for (Vertex v = 0; v < g.order() && static_cast<int>(out.anchors.size()) < count; ++v) {
    if (blocked[v]) continue;
    out.anchors.insert(v);
    VertexSet near = min_dist >= 1 ? ball(g, VertexSet{v}, min_dist - 1) : VertexSet{v};
    for (Vertex w : near) blocked[w] = 1;
  }
  out.deficiency = std::max(0, count - static_cast<int>(out.anchors.size()));
  return out;
}

std::vector<Subexpander> subexpander_family(const Graph& g, const VertexSet& avoid,
                                            double min_avg_degree, int separation, int max_size,
                                            double eps1, double eps2) {
  check_vertices(g, avoid);
  if (max_size < 2) throw std::invalid_argument("subexpander_family: max_size must be at least 2");
  ExpanderParams scoring;
  scoring.eps1 = eps1;
  scoring.eps2 = eps2;
  std::vector<Subexpander> family;
  std::vector<char> blocked = avoid.mask(g.order());
  while (true) {
    // The first max_size vertices of a BFS in the unblocked graph from
    // every seed; each candidate region is searched for an expander and
    // the best scoring one joins the family.
    std::optional<Subexpander> best;
    double best_score = -1;
    std::set<std::vector<Vertex>> seen;
    for (Vertex seed = 0; seed < g.order(); ++seed) {
      if (blocked[seed] || g.degree(seed) == 0) continue;
      std::vector<Vertex> region{seed};
      std::vector<char> in(g.order(), 0);
      in[seed] = 1;
      for (std::size_t q = 0; q < region.size() && static_cast<int>(region.size()) < max_size; ++q)
        for (Vertex w : g.neighbors(region[q]))
          if (!blocked[w] && !in[w] && static_cast<int>(region.size()) < max_size) {
            in[w] = 1;
            region.push_back(w);
          }
      std::sort(region.begin(), region.end());
      if (!seen.insert(region).second) continue;
      InducedSubgraph sub = induced_subgraph(g, VertexSet(region));
      if (sub.graph.size() == 0) continue;
      ExtractionResult r = extract_expander(sub.graph, eps1, eps2);
      if (r.avg_degree < min_avg_degree) continue;
      scoring.t = eps2 * r.avg_degree;
      double score = phi_score(r.expander, scoring);
      if (score <= best_score) continue;
      std::vector<Vertex> ids;
      for (Vertex v : r.host_ids) ids.push_back(sub.original[v]);
      best_score = score;
      best = Subexpander{VertexSet(ids), r.certificate, r.avg_degree};
    }
    if (!best) break;
    for (Vertex v : ball(g, best->vertices, std::max(0, separation))) blocked[v] = 1;
    family.push_back(std::move(*best));
  }
  return family;
}

namespace {

// Concatenates paths that share their junction vertices.
Path join(std::initializer_list<Path> parts) {
  Path out;
  for (const Path& p : parts) {
    if (p.vertices.empty()) continue;
    std::size_t skip = !out.vertices.empty() && out.back() == p.front() ? 1 : 0;
    out.vertices.insert(out.vertices.end(), p.vertices.begin() + skip, p.vertices.end());
  }
  return out;
}

Path reversed(Path p) {
  std::reverse(p.vertices.begin(), p.vertices.end());
  return p;
}

VertexSet union_of(const std::vector<VertexSet>& sets) {
  std::vector<Vertex> all;
  for (const VertexSet& s : sets) all.insert(all.end(), s.begin(), s.end());
  return VertexSet(all);
}

struct Context {
  const Graph& g;
  const Graph& h;
  PipelineConfig& config;
  VertexSet outside;                 // host vertices not in the expander
  std::vector<int> expander_degree;  // degree inside the expander, -1 outside
  std::vector<Vertex> high;          // L, by decreasing degree
};

std::optional<SubdivisionMap> high_degree_strategy(Context& ctx, HighDegreeTrace& trace,
                                                   std::string& reason) {
  const Graph& g = ctx.g;
  const Graph& h = ctx.h;
  trace.cutoff = ctx.config.high_degree_cutoff;
  trace.high = ctx.high;
  if (ctx.high.size() < static_cast<std::size_t>(h.order())) {
    reason = std::to_string(ctx.high.size()) + " vertices reach degree " +
             std::to_string(trace.cutoff) + ", need " + std::to_string(h.order());
    return std::nullopt;
  }
  SubdivisionMap map;
  map.anchors.assign(ctx.high.begin(), ctx.high.begin() + h.order());
  VertexSet anchors(map.anchors);
  VertexSet used;  // W: interiors of the paths built so far
  for (const Edge& e : h.edges()) {
    // Re-derive W from the paths and compare with the running set.
    std::vector<Vertex> inner;
    for (const Path& p : map.branch_paths) {
      std::vector<Vertex> in = p.interior();
      inner.insert(inner.end(), in.begin(), in.end());
    }
    if (!(VertexSet(inner) == used)) throw std::logic_error("high-degree strategy: avoidance set drifted");
    VertexSet block = ctx.outside.unite(anchors).unite(used);
    trace.avoid_sizes.push_back(anchors.size() + used.size());
    Vertex a = map.anchors[e.u], b = map.anchors[e.v];
    Path p;
    if (g.adjacent(a, b)) {
      p.vertices = {a, b};
    } else {
      VertexSet xa = neighborhood(g, VertexSet{a}).minus(block);
      VertexSet xb = neighborhood(g, VertexSet{b}).minus(block);
      std::optional<Path> link = xa.empty() || xb.empty() ? std::nullopt : connect_avoiding(g, xa, xb, block);
      if (!link) {
        reason = "no connection for edge " + std::to_string(e.u) + "-" + std::to_string(e.v) +
                 " avoiding " + std::to_string(anchors.size() + used.size()) + " vertices";
        return std::nullopt;
      }
      p = join({Path{{a}}, *link, Path{{b}}});
    }
    used = used.unite(VertexSet(p.interior()));
    map.branch_paths.push_back(std::move(p));
  }
  return map;
}

std::optional<SubdivisionMap> web_strategy(Context& ctx, WebTrace& trace, std::string& reason) {
  const Graph& g = ctx.g;
  const Graph& h = ctx.h;
  const PipelineConfig& cfg = ctx.config;
  WebShape shape;
  shape.h0 = cfg.web_arms;
  shape.unit = {cfg.web_spokes, cfg.web_star_leaves, cfg.web_spoke_length};
  VertexSet base = ctx.outside.unite(VertexSet(ctx.high));

  // Webs built clear of every earlier web, so no exterior leaf can sit on
  // another web's centre.
  BuildBudget budget{cfg.structure_budget};
  VertexSet taken;
  while (static_cast<int>(trace.webs.size()) < cfg.web_count) {
    WebBuild wb = build_web(g, base.unite(taken), shape, budget);
    if (!wb.web) break;
    taken = taken.unite(wb.web->vertices());
    trace.webs.push_back(*wb.web);
  }
  const int webs = static_cast<int>(trace.webs.size());
  if (webs < h.order()) {
    reason = "built " + std::to_string(webs) + " webs, need at least " + std::to_string(h.order());
    return std::nullopt;
  }
  std::vector<VertexSet> interior(webs);
  std::vector<VertexSet> centres;
  for (int i = 0; i < webs; ++i) {
    interior[i] = trace.webs[i].interior();
    centres.push_back(trace.webs[i].centre());
  }
  const VertexSet blocked_centre = union_of(centres).unite(base);  // C
  std::vector<int> threshold(webs);
  for (int i = 0; i < webs; ++i)
    threshold[i] = cfg.web_bad_threshold >= 0 ? cfg.web_bad_threshold : static_cast<int>(interior[i].size()) / 2;
  trace.bad_threshold = cfg.web_bad_threshold;

  std::vector<int> assigned(h.order(), -1);  // f
  std::vector<char> bad(webs, 0), in_use(webs, 0);
  std::vector<std::vector<char>> unit_used(webs);
  for (int i = 0; i < webs; ++i) unit_used[i].assign(trace.webs[i].units.size(), 0);
  // Connections between web pairs: exterior-to-exterior path and its
  // extension through both webs.
  struct Link {
    int web_a, web_b;
    Path q;
    Path full;  // core_a ... core_b
  };
  std::vector<Link> links;
  VertexSet q_vertices, qstar_vertices;

  auto unit_of = [&](int web, Vertex leaf) {
    for (std::size_t k = 0; k < trace.webs[web].units.size(); ++k)
      if (trace.webs[web].units[k].exterior().contains(leaf)) return static_cast<int>(k);
    return -1;
  };
  // Available leaves of a web: unused unit, leaf outside C, and the path
  // from the core clear of every earlier extended connection.
  auto available = [&](int web, const std::vector<std::vector<char>>& used_units, const VertexSet& extra) {
    std::vector<Vertex> out;
    const Web& w = trace.webs[web];
    for (std::size_t k = 0; k < w.units.size(); ++k) {
      if (used_units[web][k]) continue;
      for (Vertex leaf : w.units[k].exterior()) {
        if (blocked_centre.contains(leaf)) continue;
        Path p = w.path_to(leaf);
        bool clear = true;
        for (std::size_t i = 1; i < p.vertices.size(); ++i)
          if (qstar_vertices.contains(p.vertices[i]) || extra.contains(p.vertices[i])) clear = false;
        if (clear) out.push_back(leaf);
      }
    }
    return VertexSet(out);
  };

  std::size_t guard = 0;
  while (true) {
    std::vector<Vertex> missing;
    for (Vertex x = 0; x < h.order(); ++x)
      if (assigned[x] < 0) missing.push_back(x);
    if (missing.empty()) break;
    if (++guard > static_cast<std::size_t>(webs) + 1) {
      reason = "step limit reached";
      return std::nullopt;
    }
    Vertex x = missing.front();
    bool placed = false;
    int no_leaf = 0, no_path = 0;
    for (int cand = 0; cand < webs && !placed; ++cand) {
      if (in_use[cand] || bad[cand]) continue;
      // Tentatively connect x's web to every placed neighbour.
      std::vector<Link> fresh;
      VertexSet fresh_q, fresh_star;
      std::vector<std::vector<char>> units = unit_used;
      bool ok = true;
      for (Vertex y : h.neighbors(x)) {
        if (assigned[y] < 0) continue;
        int wy = assigned[y];
        VertexSet ax = available(cand, units, fresh_star), ay = available(wy, units, fresh_star);
        if (ax.empty() || ay.empty()) {
          ++no_leaf;
          ok = false;
          break;
        }
        VertexSet block = blocked_centre.unite(interior[cand]).unite(interior[wy])
                              .unite(qstar_vertices).unite(fresh_star).minus(ax).minus(ay);
        std::optional<Path> q = connect_avoiding(g, ax, ay, block);
        if (!q) {
          ++no_path;
          ok = false;
          break;
        }
        Path full = join({trace.webs[cand].path_to(q->front()), *q, reversed(trace.webs[wy].path_to(q->back()))});
        units[cand][unit_of(cand, q->front())] = 1;
        units[wy][unit_of(wy, q->back())] = 1;
        fresh_q = fresh_q.unite(VertexSet(q->vertices));
        fresh_star = fresh_star.unite(VertexSet(full.vertices).minus(blocked_centre));
        fresh.push_back({cand, wy, *q, full});
      }
      if (!ok) continue;
      placed = true;
      assigned[x] = cand;
      in_use[cand] = 1;
      unit_used = std::move(units);
      q_vertices = q_vertices.unite(fresh_q);
      qstar_vertices = qstar_vertices.unite(fresh_star);
      links.insert(links.end(), fresh.begin(), fresh.end());
      WebStep step{x, cand, {}, {}};
      // Evict webs whose interiors carry too much connection traffic.
      for (int i = 0; i < webs; ++i) {
        if (bad[i]) continue;
        if (static_cast<int>(interior[i].intersect(q_vertices).size()) > threshold[i]) {
          bad[i] = 1;
          step.evicted.push_back(i);
          for (Vertex y = 0; y < h.order(); ++y)
            if (assigned[y] == i) {
              assigned[y] = -1;
              step.dropped.push_back(y);
            }
        }
      }
      trace.steps.push_back(std::move(step));
    }
    if (!placed) {
      reason = "no good web connects h vertex " + std::to_string(x) + " (" + std::to_string(no_leaf) +
               " candidates short of free leaves, " + std::to_string(no_path) + " without a path)";
      return std::nullopt;
    }
  }

  trace.final_web = assigned;
  SubdivisionMap map;
  for (Vertex x = 0; x < h.order(); ++x) map.anchors.push_back(trace.webs[assigned[x]].core);
  for (const Edge& e : h.edges()) {
    int a = assigned[e.u], b = assigned[e.v];
    const Link* found = nullptr;
    for (const Link& l : links)
      if ((l.web_a == a && l.web_b == b) || (l.web_a == b && l.web_b == a)) found = &l;
    if (!found) throw std::logic_error("web strategy: missing connection");
    map.branch_paths.push_back(found->web_a == a ? found->full : reversed(found->full));
  }
  return map;
}

std::optional<SubdivisionMap> nakji_strategy(Context& ctx, NakjiTrace& trace, std::string& reason) {
  const Graph& g = ctx.g;
  const Graph& h = ctx.h;
  const PipelineConfig& cfg = ctx.config;
  // On desk-scale hosts extraction settles on one dense clump, which cannot
  // hold a family of separated subexpanders, so this strategy searches the
  // whole host minus the high-degree set.
  VertexSet base(ctx.high);
  std::vector<Subexpander> family =
      subexpander_family(g, base, cfg.subexpander_min_degree, cfg.subexpander_separation,
                         cfg.subexpander_max_size, cfg.eps1, cfg.eps2);
  for (const Subexpander& s : family) trace.subexpanders.push_back(s.vertices);
  if (trace.subexpanders.size() < static_cast<std::size_t>(h.order())) {
    reason = std::to_string(trace.subexpanders.size()) + " subexpanders, need at least " +
             std::to_string(h.order());
    return std::nullopt;
  }
  NakjiParams params{cfg.nakji_legs, cfg.nakji_size, cfg.nakji_radius, cfg.nakji_separation};
  NakjiBuild built = build_nakjis(g, base, params, h.order(), trace.subexpanders);
  trace.build_log = built.trace;
  trace.nakjis = built.nakjis;
  if (built.nakjis.size() < static_cast<std::size_t>(h.order())) {
    reason = "built " + std::to_string(built.nakjis.size()) + " nakjis, need " + std::to_string(h.order());
    return std::nullopt;
  }
  const std::vector<Nakji>& nk = built.nakjis;

  // Each h edge takes the pair of still free legs, one at each end, with
  // the shortest connection.
  std::vector<std::pair<int, int>> leg_of(2 * h.size());  // (edge, end) -> (h vertex, leg)
  std::vector<std::vector<char>> leg_free(h.order());
  for (Vertex x = 0; x < h.order(); ++x) leg_free[x].assign(nk[x].legs.size(), 1);
  std::vector<VertexSet> heads, arms;
  for (Vertex x = 0; x < h.order(); ++x) {
    heads.push_back(nk[x].head);
    for (const Path& arm : nk[x].arms) arms.push_back(VertexSet(arm.vertices));
  }
  VertexSet fixed_block = base.unite(union_of(heads)).unite(union_of(arms));
  VertexSet connected;  // vertices of R paths so far
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    const Vertex s = h.edges()[i].u, t = h.edges()[i].v;
    std::optional<Path> best;
    std::pair<int, int> best_legs{-1, -1};
    for (int js = 0; js < static_cast<int>(nk[s].legs.size()); ++js) {
      if (!leg_free[s][js]) continue;
      for (int jt = 0; jt < static_cast<int>(nk[t].legs.size()); ++jt) {
        if (!leg_free[t][jt]) continue;
        Vertex vs = nk[s].arms[js].back(), vt = nk[t].arms[jt].back();
        std::vector<VertexSet> other_legs;
        for (Vertex x = 0; x < h.order(); ++x)
          for (int j = 0; j < static_cast<int>(nk[x].legs.size()); ++j)
            if (!((x == s && j == js) || (x == t && j == jt))) other_legs.push_back(nk[x].legs[j]);
        VertexSet block = fixed_block.unite(union_of(other_legs)).unite(connected).minus(VertexSet{vs, vt});
        std::optional<Path> r = connect_avoiding(g, VertexSet{vs}, VertexSet{vt}, block);
        if (r && (!best || r->length() < best->length())) {
          best = std::move(r);
          best_legs = {js, jt};
        }
      }
    }
    if (!best) {
      reason = "no leg-to-leg connection for edge " + std::to_string(s) + "-" + std::to_string(t);
      return std::nullopt;
    }
    leg_free[s][best_legs.first] = 0;
    leg_free[t][best_legs.second] = 0;
    leg_of[2 * i] = {static_cast<int>(s), best_legs.first};
    leg_of[2 * i + 1] = {static_cast<int>(t), best_legs.second};
    connected = connected.unite(VertexSet(best->vertices));
    trace.connections.push_back(std::move(*best));
  }

  // Realize the star at each head with a fan from a chosen centre.
  SubdivisionMap map;
  map.anchors.assign(h.order(), -1);
  std::vector<std::map<Vertex, Path>> head_path(h.order());
  for (Vertex x = 0; x < h.order(); ++x) {
    std::vector<Vertex> starts;
    for (std::size_t j = 0; j < nk[x].legs.size(); ++j)
      if (!leg_free[x][j]) starts.push_back(nk[x].arms[j].front());
    bool done = false;
    for (Vertex c : nk[x].head) {
      std::vector<Vertex> targets;
      for (Vertex u : starts)
        if (u != c) targets.push_back(u);
      if (VertexSet(targets).size() != targets.size()) continue;
      auto fan = find_fan(g, c, targets, nk[x].head);
      if (!fan) continue;
      map.anchors[x] = c;
      head_path[x][c] = Path{{c}};
      for (const Path& p : *fan) head_path[x][p.back()] = p;
      done = true;
      break;
    }
    if (!done) {
      reason = "no star inside the head of h vertex " + std::to_string(x);
      return std::nullopt;
    }
  }
  for (std::size_t i = 0; i < h.edges().size(); ++i) {
    auto [s, js] = leg_of[2 * i];
    auto [t, jt] = leg_of[2 * i + 1];
    const Path& as = nk[s].arms[js];
    const Path& at = nk[t].arms[jt];
    map.branch_paths.push_back(join({head_path[s].at(as.front()), as, trace.connections[i], reversed(at),
                                     reversed(head_path[t].at(at.front()))}));
  }
  return map;
}

}  // namespace

EmbedOutcome embed_subdivision(const Graph& g, const Graph& h, const PipelineConfig& config) {
  if (h.max_degree() > config.max_degree_cap)
    throw std::invalid_argument("embed_subdivision: pattern maximum degree " + std::to_string(h.max_degree()) +
                                " exceeds the cap " + std::to_string(config.max_degree_cap));
  EmbedOutcome out;
  if (h.order() > 0 && two_coloring(h).empty())
    out.warnings.push_back("pattern is not bipartite; only the oracle fallback is backed by a guarantee");

  EmbedCertificate cert;
  cert.config = config;
  cert.host_fingerprint = graph_fingerprint(g);
  PipelineConfig& cfg = cert.config;
  const int delta_h = h.max_degree();
  if (cfg.web_arms <= 0) cfg.web_arms = delta_h + 1;
  if (cfg.web_count <= 0) cfg.web_count = std::max(1, 2 * static_cast<int>(h.order()));
  if (cfg.nakji_legs <= 0) cfg.nakji_legs = std::max(1, delta_h);

  auto finish = [&](SubdivisionMap map, Strategy s) -> bool {
    if (auto bad = validate_subdivision(g, h, map)) {
      out.attempts.push_back({s, false, "witness rejected (" + bad->clause + ": " + bad->detail + ")"});
      return false;
    }
    cert.strategy = s;
    cert.map = std::move(map);
    cert.validation = "pass";
    out.attempts.push_back({s, true, ""});
    return true;
  };

  std::optional<ExtractionResult> extraction;
  std::string extraction_problem;
  if (h.order() == 0) {
    extraction_problem = "empty pattern";
  } else if (g.size() == 0) {
    extraction_problem = "host has no edges";
  } else {
    try {
      extraction = extract_expander(g, cfg.eps1, cfg.eps2);
    } catch (const std::exception& e) {
      extraction_problem = std::string("expander extraction failed: ") + e.what();
    }
  }

  if (extraction) {
    cert.expander_vertices = extraction->host_ids;
    std::sort(cert.expander_vertices.begin(), cert.expander_vertices.end());
    cert.expander = extraction->certificate;
    cert.connection_scale = ConnectionBudget::for_host(extraction->expander.order(), extraction->certificate.params).m;
    if (cfg.high_degree_cutoff <= 0)
      cfg.high_degree_cutoff =
          std::max(delta_h, static_cast<int>(std::ceil(cfg.high_degree_factor * extraction->avg_degree - 1e-9)));
    Context ctx{g, h, cfg, VertexSet::range(g.order()).minus(VertexSet(cert.expander_vertices)),
                std::vector<int>(g.order(), -1), {}};
    for (Vertex v = 0; v < extraction->expander.order(); ++v)
      ctx.expander_degree[extraction->host_ids[v]] = extraction->expander.degree(v);
    for (Vertex v = 0; v < g.order(); ++v)
      if (ctx.expander_degree[v] >= cfg.high_degree_cutoff) ctx.high.push_back(v);
    std::stable_sort(ctx.high.begin(), ctx.high.end(),
                     [&](Vertex a, Vertex b) { return ctx.expander_degree[a] > ctx.expander_degree[b]; });

    std::string reason;
    HighDegreeTrace hd;
    if (auto map = high_degree_strategy(ctx, hd, reason)) {
      cert.high_degree = hd;
      if (finish(std::move(*map), Strategy::kHighDegree)) {
        out.certificate = std::move(cert);
        return out;
      }
    } else {
      out.attempts.push_back({Strategy::kHighDegree, false, reason});
    }

    reason.clear();
    WebTrace wt;
    if (auto map = web_strategy(ctx, wt, reason)) {
      cert.web = wt;
      if (finish(std::move(*map), Strategy::kWeb)) {
        out.certificate = std::move(cert);
        return out;
      }
    } else {
      out.attempts.push_back({Strategy::kWeb, false, reason});
    }

    reason.clear();
    NakjiTrace nt;
    std::optional<SubdivisionMap> nmap;
    try {
      nmap = nakji_strategy(ctx, nt, reason);
    } catch (const std::exception& e) {
      reason = e.what();
    }
    if (nmap) {
      cert.nakji = nt;
      if (finish(std::move(*nmap), Strategy::kNakji)) {
        out.certificate = std::move(cert);
        return out;
      }
    } else {
      out.attempts.push_back({Strategy::kNakji, false, reason});
    }
  } else {
    for (Strategy s : {Strategy::kHighDegree, Strategy::kWeb, Strategy::kNakji})
      out.attempts.push_back({s, false, extraction_problem});
  }

  if (!cfg.use_oracle) {
    out.attempts.push_back({Strategy::kOracle, false, "disabled"});
    return out;
  }
  SubdivisionSearch search = find_subdivision(g, h, cfg.oracle_limits);
  out.oracle = search.outcome;
  if (search.outcome == SearchOutcome::kFound && search.map) {
    if (finish(std::move(*search.map), Strategy::kOracle)) out.certificate = std::move(cert);
  } else {
    out.attempts.push_back({Strategy::kOracle, false, std::string("oracle: ") + outcome_name(search.outcome)});
  }
  return out;
}

}  // namespace subdiv
