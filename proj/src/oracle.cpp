//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace subdiv {

const char* outcome_name(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kFound: return "found";
    case SearchOutcome::kAbsent: return "absent";
    case SearchOutcome::kBoundedAbsent: return "bounded-absent";
    case SearchOutcome::kTimeout: return "timeout";
  }
  return "?";
}

std::vector<std::vector<Vertex>> twin_classes(const Graph& g) {
  const Vertex n = g.order();
  std::vector<char> placed(n, 0);
  std::vector<std::vector<Vertex>> out;
  for (int closed = 0; closed < 2; ++closed) {
    std::map<std::vector<Vertex>, std::vector<Vertex>> by_key;
    for (Vertex v = 0; v < n; ++v) {
      if (placed[v]) continue;
      std::vector<Vertex> key = g.neighbors(v);
      if (closed) key.insert(std::upper_bound(key.begin(), key.end(), v), v);
      by_key[key].push_back(v);
    }
    for (auto& [key, members] : by_key) {
      if (members.size() < 2 && !closed) continue;
      for (Vertex v : members) placed[v] = 1;
      out.push_back(members);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

Violation fail(std::string clause, std::string detail) {
  return Violation{std::move(clause), std::move(detail)};
}

// ------------------------------------------------------------ subdivisions

class SubdivisionSearcher {
 public:
  SubdivisionSearcher(const Graph& g, const Graph& h, const SearchLimits& limits)
      : g_(g), h_(h), budget_(limits.node_budget) {
    const Vertex n = g.order();
    max_len_ = limits.max_path_length <= 0 ? n : limits.max_path_length;
    bounded_ = limits.max_path_length > 0 && limits.max_path_length < n - 1;
    anchor_.assign(h.order(), -1);
    used_.assign(n, 0);
    on_path_.assign(n, 0);
    paths_.resize(h.size());
    routed_.assign(h.size(), 0);
    remaining_.resize(h.order());
    for (Vertex v = 0; v < h.order(); ++v) remaining_[v] = h.degree(v);
    edge_id_.assign(h.order(), std::vector<int>(h.order(), -1));
    for (std::size_t i = 0; i < h.size(); ++i) {
      edge_id_[h.edges()[i].u][h.edges()[i].v] = static_cast<int>(i);
      edge_id_[h.edges()[i].v][h.edges()[i].u] = static_cast<int>(i);
    }
    build_order();
    candidates_.resize(n);
    for (Vertex x = 0; x < n; ++x) candidates_[x] = x;
    std::stable_sort(candidates_.begin(), candidates_.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
  }

  SubdivisionSearch run() {
    SubdivisionSearch out;
    if (quick_absent()) {
      out.outcome = SearchOutcome::kAbsent;
      return out;
    }
    bool found = place(0);
    out.nodes = nodes_;
    if (found) {
      out.outcome = SearchOutcome::kFound;
      out.map = SubdivisionMap{anchor_, paths_};
    } else if (timed_out_) {
      out.outcome = SearchOutcome::kTimeout;
    } else {
      out.outcome = bounded_ ? SearchOutcome::kBoundedAbsent : SearchOutcome::kAbsent;
    }
    return out;
  }

 private:
  bool quick_absent() const {
    if (g_.order() < h_.order()) return true;
    std::vector<int> hd, gd;
    for (Vertex v = 0; v < h_.order(); ++v) hd.push_back(h_.degree(v));
    for (Vertex v = 0; v < g_.order(); ++v) gd.push_back(g_.degree(v));
    std::sort(hd.rbegin(), hd.rend());
    std::sort(gd.rbegin(), gd.rend());
    for (std::size_t i = 0; i < hd.size(); ++i)
      if (gd[i] < hd[i]) return true;
    return false;
  }

  void build_order() {
    const Vertex k = h_.order();
    std::vector<char> done(k, 0);
    std::vector<int> placed_nbrs(k, 0);
    for (Vertex step = 0; step < k; ++step) {
      Vertex best = -1;
      for (Vertex v = 0; v < k; ++v) {
        if (done[v]) continue;
        if (best < 0 || placed_nbrs[v] > placed_nbrs[best] ||
            (placed_nbrs[v] == placed_nbrs[best] && h_.degree(v) > h_.degree(best)))
          best = v;
      }
      done[best] = 1;
      order_.push_back(best);
      std::vector<int> edges;
      for (Vertex w : h_.neighbors(best))
        if (done[w] && w != best) edges.push_back(edge_id_[best][w]);
      edges_at_.push_back(edges);
      for (Vertex w : h_.neighbors(best)) ++placed_nbrs[w];
    }
    // Twins of H are interchangeable: their anchors increase in placement order.
    twin_prev_.assign(k, -1);
    for (const auto& cls : twin_classes(h_)) {
      std::vector<Vertex> members = cls;
      std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) {
        return std::find(order_.begin(), order_.end(), a) < std::find(order_.begin(), order_.end(), b);
      });
      for (std::size_t i = 1; i < members.size(); ++i) twin_prev_[members[i]] = members[i - 1];
    }
  }

  bool spend() {
    if (++nodes_ > budget_) timed_out_ = true;
    return !timed_out_;
  }

  // Every placed anchor still needs one free edge end per unrouted edge.
  bool feasible() const {
    int free_count = 0;
    for (char u : used_) free_count += !u;
    int unplaced = 0;
    for (Vertex v = 0; v < h_.order(); ++v) unplaced += anchor_[v] < 0;
    if (free_count < unplaced) return false;
    for (Vertex u = 0; u < h_.order(); ++u) {
      if (anchor_[u] < 0 || remaining_[u] == 0) continue;
      int avail = 0;
      for (Vertex y : g_.neighbors(anchor_[u])) {
        if (!used_[y]) {
          ++avail;
        } else if (owner_of(y) >= 0) {
          int e = edge_id_[u][owner_of(y)];
          if (e >= 0 && !routed_[e]) ++avail;
        }
      }
      if (avail < remaining_[u]) return false;
    }
    return true;
  }

  Vertex owner_of(Vertex x) const {
    for (Vertex v = 0; v < h_.order(); ++v)
      if (anchor_[v] == x) return v;
    return -1;
  }

  bool place(std::size_t i) {
    if (i == order_.size()) return true;
    Vertex v = order_[i];
    for (Vertex x : candidates_) {
      if (used_[x] || g_.degree(x) < h_.degree(v)) continue;
      if (twin_prev_[v] >= 0 && anchor_[twin_prev_[v]] >= x) continue;
      if (!spend()) return false;
      anchor_[v] = x;
      used_[x] = 1;
      if (feasible() && route(i, 0)) return true;
      used_[x] = 0;
      anchor_[v] = -1;
      if (timed_out_) return false;
    }
    return false;
  }

  bool route(std::size_t i, std::size_t j) {
    if (j == edges_at_[i].size()) return place(i + 1);
    int e = edges_at_[i][j];
    Vertex src = anchor_[h_.edges()[e].u], dst = anchor_[h_.edges()[e].v];
    // Free-graph distances to dst bound how far a partial path may stray.
    std::vector<int> dist(g_.order(), -1);
    std::deque<Vertex> queue{dst};
    dist[dst] = 0;
    while (!queue.empty()) {
      Vertex x = queue.front();
      queue.pop_front();
      for (Vertex y : g_.neighbors(x))
        if (dist[y] < 0 && (!used_[y] || y == src)) {
          dist[y] = dist[x] + 1;
          if (y != src) queue.push_back(y);
        }
    }
    if (dist[src] < 0 || dist[src] > max_len_) return false;
    std::vector<Vertex> path{src};
    on_path_[src] = 1;
    bool ok = walk(path, dst, dist, i, j, e);
    on_path_[src] = 0;
    return ok;
  }

  bool walk(std::vector<Vertex>& path, Vertex dst, const std::vector<int>& dist, std::size_t i,
            std::size_t j, int e) {
    if (!spend()) return false;
    Vertex cur = path.back();
    if (g_.adjacent(cur, dst)) {
      // Any other step would leave the chord cur-dst.
      path.push_back(dst);
      bool ok = commit(path, i, j, e);
      path.pop_back();
      return ok;
    }
    int steps = static_cast<int>(path.size());  // edges after one more step
    std::vector<Vertex> next;
    for (Vertex y : g_.neighbors(cur)) {
      if (used_[y] || on_path_[y] || dist[y] < 0 || steps + dist[y] > max_len_) continue;
      bool chord = false;
      for (std::size_t p = 0; p + 1 < path.size() && !chord; ++p) chord = g_.adjacent(y, path[p]);
      if (!chord) next.push_back(y);
    }
    std::stable_sort(next.begin(), next.end(), [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    for (Vertex y : next) {
      path.push_back(y);
      on_path_[y] = 1;
      bool ok = walk(path, dst, dist, i, j, e);
      on_path_[y] = 0;
      path.pop_back();
      if (ok) return true;
      if (timed_out_) return false;
    }
    return false;
  }

  bool commit(const std::vector<Vertex>& path, std::size_t i, std::size_t j, int e) {
    for (std::size_t p = 1; p + 1 < path.size(); ++p) used_[path[p]] = 1;
    paths_[e] = Path{path};
    routed_[e] = 1;
    --remaining_[h_.edges()[e].u];
    --remaining_[h_.edges()[e].v];
    if (feasible() && route(i, j + 1)) return true;
    ++remaining_[h_.edges()[e].u];
    ++remaining_[h_.edges()[e].v];
    routed_[e] = 0;
    for (std::size_t p = 1; p + 1 < path.size(); ++p) used_[path[p]] = 0;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  long long budget_;
  long long nodes_ = 0;
  bool timed_out_ = false;
  int max_len_ = 0;
  bool bounded_ = false;
  std::vector<Vertex> anchor_;
  std::vector<char> used_;
  std::vector<char> on_path_;
  std::vector<Path> paths_;
  std::vector<char> routed_;
  std::vector<int> remaining_;
  std::vector<std::vector<int>> edge_id_;
  std::vector<Vertex> order_;
  std::vector<std::vector<int>> edges_at_;
  std::vector<Vertex> twin_prev_;
  std::vector<Vertex> candidates_;
};

// ------------------------------------------------------------ minors

using Mask = std::uint64_t;

class MinorSearcher {
 public:
  MinorSearcher(const Graph& g, const Graph& h, const SearchLimits& limits)
      : g_(g), h_(h), budget_(limits.node_budget) {
    const Vertex n = g.order();
    adj_.assign(n, 0);
    for (const Edge& e : g.edges()) {
      adj_[e.u] |= Mask{1} << e.v;
      adj_[e.v] |= Mask{1} << e.u;
    }
    // Breadth-first processing order so branch sets grow connected early.
    std::vector<char> seen(n, 0);
    std::vector<Vertex> by_degree(n);
    for (Vertex v = 0; v < n; ++v) by_degree[v] = v;
    std::stable_sort(by_degree.begin(), by_degree.end(),
                     [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    for (Vertex s : by_degree) {
      if (seen[s]) continue;
      std::deque<Vertex> queue{s};
      seen[s] = 1;
      while (!queue.empty()) {
        Vertex v = queue.front();
        queue.pop_front();
        order_.push_back(v);
        for (Vertex w : g.neighbors(v))
          if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
      }
    }
    g_prev_.assign(n, -1);
    for (const auto& cls : twin_classes(g)) {
      std::vector<Vertex> members = cls;
      std::sort(members.begin(), members.end(), [&](Vertex a, Vertex b) {
        return std::find(order_.begin(), order_.end(), a) < std::find(order_.begin(), order_.end(), b);
      });
      for (std::size_t i = 1; i < members.size(); ++i) g_prev_[members[i]] = members[i - 1];
    }
    h_prev_.assign(h.order(), -1);
    for (const auto& cls : twin_classes(h))
      for (std::size_t i = 1; i < cls.size(); ++i) h_prev_[cls[i]] = cls[i - 1];
    label_.assign(n, -2);  // -2 unassigned, -1 unused, else H vertex
    sets_.assign(h.order(), 0);
  }

  MinorSearch run() {
    MinorSearch out;
    if (g_.order() < h_.order() || g_.size() < h_.size()) {
      out.outcome = SearchOutcome::kAbsent;
      return out;
    }
    unassigned_ = g_.order() >= 64 ? ~Mask{0} : (Mask{1} << g_.order()) - 1;
    bool found = assign(0);
    out.nodes = nodes_;
    if (found) {
      out.outcome = SearchOutcome::kFound;
      MinorMap map;
      for (Vertex c = 0; c < h_.order(); ++c) {
        std::vector<Vertex> members;
        for (Vertex v = 0; v < g_.order(); ++v)
          if (sets_[c] >> v & 1) members.push_back(v);
        map.branch_sets.emplace_back(members);
      }
      out.map = map;
    } else {
      out.outcome = timed_out_ ? SearchOutcome::kTimeout : SearchOutcome::kAbsent;
    }
    return out;
  }

 private:
  Mask reach(Mask from, Mask allowed) const {
    Mask seen = from, frontier = from;
    while (frontier) {
      Mask next = 0;
      for (Mask f = frontier; f; f &= f - 1) next |= adj_[std::countr_zero(f)];
      next &= allowed & ~seen;
      seen |= next;
      frontier = next;
    }
    return seen;
  }

  bool feasible() const {
    int empty_labels = 0;
    for (Vertex c = 0; c < h_.order(); ++c) empty_labels += sets_[c] == 0;
    if (empty_labels > std::popcount(unassigned_)) return false;
    for (Vertex c = 0; c < h_.order(); ++c) {
      Mask s = sets_[c];
      if (!s) continue;
      Mask start = s & (~s + 1);
      if ((reach(start, s | unassigned_) & s) != s) return false;
    }
    for (const Edge& e : h_.edges()) {
      Mask a = sets_[e.u] | unassigned_, b = sets_[e.v] | unassigned_;
      bool touch = false;
      for (Mask f = a; f && !touch; f &= f - 1) touch = (adj_[std::countr_zero(f)] & b) != 0;
      if (!touch) return false;
    }
    return true;
  }

  bool assign(std::size_t i) {
    if (++nodes_ > budget_) {
      timed_out_ = true;
      return false;
    }
    if (i == order_.size()) return true;  // feasible() with nothing unassigned is exact
    Vertex v = order_[i];
    unassigned_ &= ~(Mask{1} << v);
    int floor = g_prev_[v] >= 0 ? label_[g_prev_[v]] : -1;
    for (int c = floor; c < h_.order(); ++c) {
      if (c >= 0 && h_prev_[c] >= 0 && sets_[h_prev_[c]] == 0) continue;
      label_[v] = c;
      if (c >= 0) sets_[c] |= Mask{1} << v;
      if (feasible() && assign(i + 1)) return true;
      if (c >= 0) sets_[c] &= ~(Mask{1} << v);
      if (timed_out_) break;
    }
    label_[v] = -2;
    unassigned_ |= Mask{1} << v;
    return false;
  }

  const Graph& g_;
  const Graph& h_;
  long long budget_;
  long long nodes_ = 0;
  bool timed_out_ = false;
  std::vector<Mask> adj_;
  std::vector<Vertex> order_;
  std::vector<Vertex> g_prev_;
  std::vector<Vertex> h_prev_;
  std::vector<int> label_;
  std::vector<Mask> sets_;
  Mask unassigned_ = 0;
};

}  // namespace

SubdivisionSearch find_subdivision(const Graph& g, const Graph& h, const SearchLimits& limits) {
  SubdivisionSearcher s(g, h, limits);
  return s.run();
}

MinorSearch find_minor(const Graph& g, const Graph& h, const SearchLimits& limits) {
  if (g.order() > 64) throw std::invalid_argument("find_minor: host has more than 64 vertices");
  MinorSearcher s(g, h, limits);
  return s.run();
}

StructureCheck validate_subdivision(const Graph& g, const Graph& h, const SubdivisionMap& map) {
  if (static_cast<Vertex>(map.anchors.size()) != h.order())
    return fail("anchor count", std::to_string(map.anchors.size()) + " anchors for " +
                                    std::to_string(h.order()) + " pattern vertices");
  std::vector<int> anchor_of(g.order(), -1);
  for (Vertex v = 0; v < h.order(); ++v) {
    Vertex x = map.anchors[v];
    if (!g.has_vertex(x)) return fail("host vertices", "anchor " + std::to_string(x) + " is not a host vertex");
    if (anchor_of[x] >= 0)
      return fail("distinct anchors", "host vertex " + std::to_string(x) + " anchors two pattern vertices");
    anchor_of[x] = v;
  }
  if (map.branch_paths.size() != h.size())
    return fail("path count", std::to_string(map.branch_paths.size()) + " paths for " +
                                  std::to_string(h.size()) + " pattern edges");
  std::vector<int> interior_of(g.order(), -1);
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Edge& e = h.edges()[i];
    const Path& p = map.branch_paths[i];
    std::string problem = path_problem(g, p);
    if (!problem.empty()) return fail("path", "edge " + std::to_string(i) + ": " + problem);
    bool forward = p.front() == map.anchors[e.u] && p.back() == map.anchors[e.v];
    if (!forward)
      return fail("path endpoints", "path " + std::to_string(i) + " does not run from anchor(" +
                                        std::to_string(e.u) + ") to anchor(" + std::to_string(e.v) + ")");
    for (Vertex x : p.interior()) {
      if (anchor_of[x] >= 0)
        return fail("anchor interior", "anchor " + std::to_string(x) + " is inside path " + std::to_string(i));
      if (interior_of[x] >= 0)
        return fail("internally disjoint", "paths " + std::to_string(interior_of[x]) + " and " +
                                               std::to_string(i) + " share vertex " + std::to_string(x));
      interior_of[x] = static_cast<int>(i);
    }
  }
  return std::nullopt;
}

StructureCheck validate_minor(const Graph& g, const Graph& h, const MinorMap& map) {
  if (static_cast<Vertex>(map.branch_sets.size()) != h.order())
    return fail("branch set count", std::to_string(map.branch_sets.size()) + " sets for " +
                                        std::to_string(h.order()) + " pattern vertices");
  std::vector<int> owner(g.order(), -1);
  for (Vertex v = 0; v < h.order(); ++v) {
    const VertexSet& s = map.branch_sets[v];
    if (s.empty()) return fail("nonempty", "branch set " + std::to_string(v) + " is empty");
    for (Vertex x : s) {
      if (!g.has_vertex(x)) return fail("host vertices", std::to_string(x) + " is not a host vertex");
      if (owner[x] >= 0)
        return fail("disjoint", "branch sets " + std::to_string(owner[x]) + " and " + std::to_string(v) +
                                    " share " + std::to_string(x));
      owner[x] = v;
    }
    if (!induces_connected(g, s)) return fail("connected", "branch set " + std::to_string(v) + " is not connected");
  }
  for (const Edge& e : h.edges()) {
    bool joined = false;
    for (Vertex x : map.branch_sets[e.u])
      for (Vertex y : g.neighbors(x)) joined = joined || owner[y] == e.v;
    if (!joined)
      return fail("edge", "no host edge between branch sets " + std::to_string(e.u) + " and " + std::to_string(e.v));
  }
  return std::nullopt;
}

bool is_k4_minor_free(const Graph& g) {
  std::vector<std::set<Vertex>> adj(g.order());
  for (const Edge& e : g.edges()) {
    adj[e.u].insert(e.v);
    adj[e.v].insert(e.u);
  }
  std::vector<char> gone(g.order(), 0);
  std::deque<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) queue.push_back(v);
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    if (gone[v] || adj[v].size() > 2) continue;
    std::vector<Vertex> nbrs(adj[v].begin(), adj[v].end());
    for (Vertex w : nbrs) {
      adj[w].erase(v);
      queue.push_back(w);
    }
    // Suppressing a degree-2 vertex joins its neighbours; parallel edges merge.
    if (nbrs.size() == 2) {
      adj[nbrs[0]].insert(nbrs[1]);
      adj[nbrs[1]].insert(nbrs[0]);
    }
    adj[v].clear();
    gone[v] = 1;
  }
  return std::all_of(gone.begin(), gone.end(), [](char c) { return c != 0; });
}

}  // namespace subdiv
