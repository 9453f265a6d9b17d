//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/planar.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <stdexcept>

namespace subdiv {

namespace {

std::vector<Edge> face_edges(const Face& f) {
  std::vector<Edge> out;
  if (f.size() < 2) return out;
  for (std::size_t i = 0; i < f.size(); ++i) out.emplace_back(f[i], f[(i + 1) % f.size()]);
  return out;
}

}  // namespace

std::string embedding_problem(const PlanarEmbedding& emb) {
  const Graph& g = emb.graph;
  if (g.order() == 0) return "empty graph";
  if (!is_connected(g)) return "graph is not connected";
  std::map<Edge, int> seen;
  for (std::size_t i = 0; i < emb.faces.size(); ++i) {
    const Face& f = emb.faces[i];
    if (f.empty()) return "face " + std::to_string(i) + " is empty";
    for (Vertex v : f)
      if (!g.has_vertex(v)) return "face " + std::to_string(i) + " names vertex " + std::to_string(v);
    if (f.size() == 1 && g.size() > 0) return "face " + std::to_string(i) + " is a single vertex";
    for (const Edge& e : face_edges(f)) {
      if (e.u == e.v || !g.adjacent(e.u, e.v))
        return "face " + std::to_string(i) + " steps along non-edge " + std::to_string(e.u) + "-" +
               std::to_string(e.v);
      ++seen[e];
    }
  }
  for (const Edge& e : g.edges()) {
    int c = seen.count(e) ? seen[e] : 0;
    if (c != 2)
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " lies on " + std::to_string(c) +
             " face sides, not 2";
  }
  long long euler = static_cast<long long>(g.order()) - static_cast<long long>(g.size()) +
                    static_cast<long long>(emb.faces.size());
  if (euler != 2) return "V - E + F = " + std::to_string(euler) + ", not 2";
  return {};
}

bool is_triangulation(const PlanarEmbedding& emb) {
  if (!embedding_problem(emb).empty() || emb.graph.order() < 3) return false;
  for (const Face& f : emb.faces) {
    if (f.size() != 3) return false;
    if (f[0] == f[1] || f[1] == f[2] || f[0] == f[2]) return false;
  }
  return true;
}

std::vector<Face> trace_faces(const Graph& g, const std::vector<std::vector<Vertex>>& rotation) {
  const Vertex n = g.order();
  if (static_cast<Vertex>(rotation.size()) != n) throw std::invalid_argument("trace_faces: one rotation per vertex");
  std::vector<std::map<Vertex, int>> index(n);
  for (Vertex v = 0; v < n; ++v) {
    std::vector<Vertex> sorted = rotation[v];
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.neighbors(v)) throw std::invalid_argument("trace_faces: rotation of " + std::to_string(v) + " is not its neighbourhood");
    for (std::size_t i = 0; i < rotation[v].size(); ++i) index[v][rotation[v][i]] = static_cast<int>(i);
  }
  std::vector<Face> faces;
  if (g.size() == 0) {
    for (Vertex v = 0; v < n; ++v) faces.push_back({v});
    return faces;
  }
  std::vector<std::vector<char>> used(n);
  for (Vertex v = 0; v < n; ++v) used[v].assign(rotation[v].size(), 0);
  for (Vertex u = 0; u < n; ++u)
    for (std::size_t i = 0; i < rotation[u].size(); ++i) {
      if (used[u][i]) continue;
      Face f;
      Vertex a = u, b = rotation[u][i];
      while (!used[a][index[a][b]]) {
        used[a][index[a][b]] = 1;
        f.push_back(a);
        const auto& rot = rotation[b];
        Vertex c = rot[(index[b][a] + 1) % rot.size()];
        a = b;
        b = c;
      }
      faces.push_back(f);
    }
  return faces;
}

std::optional<PlanarEmbedding> find_embedding(const Graph& g) {
  const Vertex n = g.order();
  if (n < 3 || vertex_connectivity(g) < 2) throw std::invalid_argument("find_embedding: graph must be 2-connected");
  if (static_cast<long long>(g.size()) > 3LL * n - 6) return std::nullopt;

  // Start from any cycle: walk a DFS tree until a back edge closes one.
  Face cycle;
  {
    std::vector<Vertex> parent(n, -1), depth(n, -1);
    std::vector<Vertex> stack{0};
    depth[0] = 0;
    std::vector<std::size_t> next(n, 0);
    while (cycle.empty() && !stack.empty()) {
      Vertex v = stack.back();
      if (next[v] == g.neighbors(v).size()) {
        stack.pop_back();
        continue;
      }
      Vertex w = g.neighbors(v)[next[v]++];
      if (w == parent[v]) continue;
      if (depth[w] >= 0) {
        if (depth[w] > depth[v]) continue;  // seen from the other end already
        for (Vertex x = v; x != w; x = parent[x]) cycle.push_back(x);
        cycle.push_back(w);
      } else {
        parent[w] = v;
        depth[w] = depth[v] + 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<Face> faces{cycle, Face(cycle.rbegin(), cycle.rend())};
  std::vector<char> placed(n, 0);
  std::set<Edge> embedded;
  for (Vertex v : cycle) placed[v] = 1;
  for (const Edge& e : face_edges(cycle)) embedded.insert(e);

  // A fragment is an unembedded chord between placed vertices, or a
  // component of unplaced vertices with its edges to placed ones.
  struct Fragment {
    std::vector<Vertex> inner;
    std::vector<Vertex> attachments;
  };
  while (embedded.size() < g.size()) {
    std::vector<Fragment> fragments;
    for (const Edge& e : g.edges())
      if (placed[e.u] && placed[e.v] && !embedded.count(e)) fragments.push_back({{}, {e.u, e.v}});
    std::vector<char> seen(n, 0);
    for (Vertex s = 0; s < n; ++s) {
      if (placed[s] || seen[s]) continue;
      Fragment f;
      std::set<Vertex> att;
      std::vector<Vertex> queue{s};
      seen[s] = 1;
      for (std::size_t q = 0; q < queue.size(); ++q) {
        Vertex v = queue[q];
        f.inner.push_back(v);
        for (Vertex w : g.neighbors(v)) {
          if (placed[w]) att.insert(w);
          else if (!seen[w]) {
            seen[w] = 1;
            queue.push_back(w);
          }
        }
      }
      f.attachments.assign(att.begin(), att.end());
      fragments.push_back(std::move(f));
    }

    int best = -1;
    std::vector<int> best_faces;
    for (std::size_t i = 0; i < fragments.size(); ++i) {
      std::vector<int> ok;
      for (std::size_t k = 0; k < faces.size(); ++k) {
        const Face& face = faces[k];
        bool all = std::all_of(fragments[i].attachments.begin(), fragments[i].attachments.end(),
                               [&](Vertex a) { return std::find(face.begin(), face.end(), a) != face.end(); });
        if (all) ok.push_back(static_cast<int>(k));
      }
      if (ok.empty()) return std::nullopt;
      if (best < 0 || ok.size() < best_faces.size()) {
        best = static_cast<int>(i);
        best_faces = std::move(ok);
      }
      if (best_faces.size() == 1) break;
    }

    // Path through the fragment between two distinct attachments.
    const Fragment& frag = fragments[best];
    std::vector<Vertex> path;
    if (frag.inner.empty()) {
      path = frag.attachments;
    } else {
      std::set<Vertex> inside(frag.inner.begin(), frag.inner.end());
      Vertex start_att = frag.attachments.front(), start = -1;
      for (Vertex w : g.neighbors(start_att))
        if (inside.count(w)) {
          start = w;
          break;
        }
      std::map<Vertex, Vertex> from{{start, -1}};
      std::vector<Vertex> queue{start};
      Vertex end = -1, end_att = -1;
      for (std::size_t q = 0; q < queue.size() && end < 0; ++q) {
        Vertex v = queue[q];
        for (Vertex w : g.neighbors(v)) {
          if (placed[w] && w != start_att) {
            end = v;
            end_att = w;
            break;
          }
          if (inside.count(w) && !from.count(w)) {
            from[w] = v;
            queue.push_back(w);
          }
        }
      }
      if (end < 0) throw std::logic_error("find_embedding: fragment with a single attachment");
      path.push_back(end_att);
      for (Vertex v = end; v >= 0; v = from[v]) path.push_back(v);
      path.push_back(start_att);
      std::reverse(path.begin(), path.end());
    }

    // Split the face along the path x = path.front() ... y = path.back().
    Face face = faces[best_faces.front()];
    auto xi = std::find(face.begin(), face.end(), path.front());
    std::rotate(face.begin(), xi, face.end());
    std::size_t k = std::find(face.begin(), face.end(), path.back()) - face.begin();
    Face one(face.begin(), face.begin() + k + 1);
    for (std::size_t i = path.size() - 1; i-- > 1;) one.push_back(path[i]);
    Face two(face.begin() + k, face.end());
    two.push_back(face.front());
    for (std::size_t i = 1; i + 1 < path.size(); ++i) two.push_back(path[i]);
    faces[best_faces.front()] = std::move(one);
    faces.push_back(std::move(two));
    for (Vertex v : path) placed[v] = 1;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) embedded.insert(Edge(path[i], path[i + 1]));
  }

  PlanarEmbedding emb{g, std::move(faces)};
  if (!embedding_problem(emb).empty()) throw std::logic_error("find_embedding: produced an invalid embedding");
  return emb;
}

PlanarEmbedding fan_triangulate(const PlanarEmbedding& emb) {
  std::string problem = embedding_problem(emb);
  if (!problem.empty()) throw std::invalid_argument("fan_triangulate: " + problem);
  std::set<Edge> edges(emb.graph.edges().begin(), emb.graph.edges().end());
  PlanarEmbedding out;
  for (const Face& f : emb.faces) {
    if (f.size() <= 3) {
      out.faces.push_back(f);
      continue;
    }
    // The first apex whose chords are all new; a face touching itself at
    // the apex, or an existing chord, rules that apex out.
    std::size_t k = f.size();
    for (std::size_t apex = 0; apex < f.size() && k == f.size(); ++apex) {
      bool clean = true;
      for (std::size_t i = 2; i + 1 < f.size() && clean; ++i) {
        Edge chord(f[apex], f[(apex + i) % f.size()]);
        clean = chord.u != chord.v && !edges.count(chord);
      }
      if (clean) k = apex;
    }
    if (k == f.size())
      throw std::invalid_argument("fan_triangulate: every fan of a face repeats an edge");
    Face g(f.begin() + static_cast<std::ptrdiff_t>(k), f.end());
    g.insert(g.end(), f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
    for (std::size_t i = 2; i + 1 < g.size(); ++i) edges.insert(Edge(g[0], g[i]));
    for (std::size_t i = 1; i + 1 < g.size(); ++i) out.faces.push_back({g[0], g[i], g[i + 1]});
  }
  out.graph = Graph::from_edges(emb.graph.order(), std::vector<Edge>(edges.begin(), edges.end()));
  return out;
}

PlanarEmbedding random_triangulation(Vertex t, std::mt19937_64& rng, int flips) {
  if (t < 4) throw std::invalid_argument("random_triangulation: t must be at least 4");
  std::vector<Face> faces = {{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};
  std::set<Edge> edges;
  for (const Face& f : faces)
    for (const Edge& e : face_edges(f)) edges.insert(e);
  for (Vertex x = 4; x < t; ++x) {
    std::size_t i = rng() % faces.size();
    Face f = faces[i];
    faces[i] = {f[0], f[1], x};
    faces.push_back({f[1], f[2], x});
    faces.push_back({f[2], f[0], x});
    for (Vertex v : f) edges.insert(Edge(v, x));
  }
  if (flips < 0) flips = 2 * t;
  for (int k = 0; k < flips; ++k) {
    std::size_t i = rng() % faces.size();
    int s = static_cast<int>(rng() % 3);
    Vertex u = faces[i][s], v = faces[i][(s + 1) % 3], a = faces[i][(s + 2) % 3];
    std::size_t j = faces.size();
    Vertex b = -1;
    for (std::size_t q = 0; q < faces.size() && j == faces.size(); ++q)
      for (int r = 0; r < 3; ++r)
        if (faces[q][r] == v && faces[q][(r + 1) % 3] == u) {
          j = q;
          b = faces[q][(r + 2) % 3];
        }
    if (j == faces.size() || a == b || edges.count(Edge(a, b))) continue;
    edges.erase(Edge(u, v));
    edges.insert(Edge(a, b));
    faces[i] = {a, u, b};
    faces[j] = {b, v, a};
  }
  PlanarEmbedding emb{Graph::from_edges(t, std::vector<Edge>(edges.begin(), edges.end())), faces};
  if (!is_triangulation(emb)) throw std::logic_error("random_triangulation: produced a non-triangulation");
  return emb;
}

DualGraph dual_graph(const PlanarEmbedding& emb, bool require_triangulation) {
  std::string problem = embedding_problem(emb);
  if (!problem.empty()) throw std::invalid_argument("dual_graph: " + problem);
  if (require_triangulation && !is_triangulation(emb)) throw std::invalid_argument("dual_graph: not a triangulation");
  std::map<Edge, std::vector<int>> sides;
  for (std::size_t i = 0; i < emb.faces.size(); ++i)
    for (const Edge& e : face_edges(emb.faces[i])) sides[e].push_back(static_cast<int>(i));
  std::map<Edge, Edge> crossing;  // dual edge -> primal edge
  for (const auto& [primal, fs] : sides) {
    if (fs[0] == fs[1]) throw std::invalid_argument("dual_graph: edge on a single face (the dual has a loop)");
    Edge d(fs[0], fs[1]);
    if (!crossing.emplace(d, primal).second)
      throw std::invalid_argument("dual_graph: two faces share more than one edge");
  }
  DualGraph out;
  std::vector<Edge> dual_edges;
  for (const auto& [d, p] : crossing) dual_edges.push_back(d);
  out.dual = Graph::from_edges(static_cast<Vertex>(emb.faces.size()), dual_edges);
  for (const Edge& d : out.dual.edges()) out.primal.push_back(crossing.at(d));
  return out;
}

std::vector<Vertex> maximum_matching(const Graph& g) {
  const Vertex n = g.order();
  std::vector<Vertex> match(n, -1), parent(n), base(n);
  std::vector<char> used(n), blossom(n);
  auto lca = [&](Vertex a, Vertex b) {
    std::vector<char> seen(n, 0);
    while (true) {
      a = base[a];
      seen[a] = 1;
      if (match[a] < 0) break;
      a = parent[match[a]];
    }
    while (true) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](Vertex v, Vertex b, Vertex child) {
    while (base[v] != b) {
      blossom[base[v]] = blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](Vertex root) -> Vertex {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (Vertex i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    std::deque<Vertex> queue{root};
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex to : g.neighbors(v)) {
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] >= 0 && parent[match[to]] >= 0)) {
          Vertex cur = lca(v, to);
          std::fill(blossom.begin(), blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (Vertex i = 0; i < n; ++i)
            if (blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue.push_back(i);
              }
            }
        } else if (parent[to] < 0) {
          parent[to] = v;
          if (match[to] < 0) return to;
          used[match[to]] = 1;
          queue.push_back(match[to]);
        }
      }
    }
    return -1;
  };
  for (Vertex v = 0; v < n; ++v) {
    if (match[v] >= 0) continue;
    for (Vertex u = find_path(v); u >= 0;) {
      Vertex pv = parent[u], next = match[pv];
      match[u] = pv;
      match[pv] = u;
      u = next;
    }
  }
  return match;
}

std::optional<std::vector<Edge>> perfect_matching(const Graph& g) {
  std::vector<Vertex> mate = maximum_matching(g);
  std::vector<Edge> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (mate[v] < 0) return std::nullopt;
    if (v < mate[v]) out.emplace_back(v, mate[v]);
  }
  return out;
}

namespace {

SubdivisionResult subdivide(const Graph& h, const std::vector<Edge>& chosen) {
  SubdivisionResult out;
  std::set<Edge> split(chosen.begin(), chosen.end());
  std::vector<Edge> edges;
  Vertex next = h.order();
  for (const Edge& e : h.edges()) {
    if (!split.count(e)) {
      edges.push_back(e);
      continue;
    }
    edges.emplace_back(e.u, next);
    edges.emplace_back(next, e.v);
    out.subdivided.emplace_back(e, next);
    ++next;
  }
  out.result = Graph::from_edges(next, edges);
  return out;
}

}  // namespace

SubdivisionResult bipartite_subdivision(const PlanarEmbedding& emb) {
  if (emb.graph.order() < 4) throw std::invalid_argument("bipartite_subdivision: needs at least 4 vertices");
  if (!is_triangulation(emb)) throw std::invalid_argument("bipartite_subdivision: not a triangulation");
  DualGraph d = dual_graph(emb, true);
  std::optional<std::vector<Edge>> m = perfect_matching(d.dual);
  if (!m) throw std::logic_error("bipartite_subdivision: cubic bridgeless dual without a perfect matching");
  std::vector<Edge> chosen;
  std::map<Edge, Edge> primal_of;
  for (std::size_t i = 0; i < d.dual.edges().size(); ++i) primal_of[d.dual.edges()[i]] = d.primal[i];
  for (const Edge& e : *m) chosen.push_back(primal_of.at(e));
  SubdivisionResult out = subdivide(emb.graph, chosen);
  out.coloring = two_coloring(out.result);
  if (out.coloring.empty()) throw std::logic_error("bipartite_subdivision: result is not bipartite");
  return out;
}

SubdivisionResult one_sided_subdivision(const Graph& h, const VertexSet& x) {
  check_vertices(h, x);
  if (!is_independent(h, x)) throw std::invalid_argument("one_sided_subdivision: X is not independent");
  std::vector<char> in_x = x.mask(h.order());
  std::vector<Edge> chosen;
  for (const Edge& e : h.edges())
    if (!in_x[e.u] && !in_x[e.v]) chosen.push_back(e);
  SubdivisionResult out = subdivide(h, chosen);
  out.coloring.assign(out.result.order(), 1);
  for (Vertex v = 0; v < h.order(); ++v)
    if (!in_x[v]) out.coloring[v] = 0;
  for (const Edge& e : out.result.edges())
    if (out.coloring[e.u] == out.coloring[e.v]) throw std::logic_error("one_sided_subdivision: colouring broke");
  out.one_side = h.order() - static_cast<int>(x.size());
  return out;
}

}  // namespace subdiv
