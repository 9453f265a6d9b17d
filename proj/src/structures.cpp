//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/structures.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <limits>
#include <random>

#include "subdiv/paths.hpp"

namespace subdiv {

namespace {

Violation fail(std::string clause, std::string detail) {
  return Violation{std::move(clause), std::move(detail)};
}

std::string show(const std::vector<Vertex>& vs) {
  std::string out = "[";
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? "," : "") + std::to_string(vs[i]);
  return out + "]";
}

bool in_range(const Graph& g, const std::vector<Vertex>& vs) {
  return std::all_of(vs.begin(), vs.end(), [&](Vertex v) { return g.has_vertex(v); });
}

// Paths sharing a common first vertex must otherwise be vertex disjoint.
StructureCheck check_fan(const std::vector<Path>& paths, const char* clause) {
  std::vector<Vertex> seen;
  for (const Path& p : paths)
    for (std::size_t k = 1; k < p.vertices.size(); ++k) seen.push_back(p.vertices[k]);
  std::vector<Vertex> sorted = seen;
  std::sort(sorted.begin(), sorted.end());
  auto dup = std::adjacent_find(sorted.begin(), sorted.end());
  if (dup != sorted.end()) return fail(clause, "vertex " + std::to_string(*dup) + " is shared");
  return std::nullopt;
}

}  // namespace

// ---------------------------------------------------------------- suns

VertexSet Sun::vertices() const {
  std::vector<Vertex> vs = cycle;
  for (const auto& [leaf, at] : leaves) vs.push_back(leaf);
  return VertexSet(vs);
}

StructureCheck validate_sun(const Graph& host, const Sun& sun) {
  const auto& c = sun.cycle;
  std::vector<Vertex> all = c;
  for (const auto& [leaf, at] : sun.leaves) all.push_back(leaf);
  if (!in_range(host, all)) return fail("host vertices", "sun names a vertex outside the host");
  if (c.size() < 4 || c.size() % 2) return fail("even cycle", "cycle length " + std::to_string(c.size()));
  if (VertexSet(c).size() != c.size()) return fail("even cycle", "cycle repeats a vertex");
  for (std::size_t i = 0; i < c.size(); ++i) {
    Vertex a = c[i], b = c[(i + 1) % c.size()];
    if (!host.adjacent(a, b))
      return fail("even cycle", std::to_string(a) + "-" + std::to_string(b) + " is not a host edge");
  }
  if (VertexSet(all).size() != all.size()) return fail("distinct leaves", "a leaf repeats or lies on the cycle");
  std::vector<char> taken(c.size(), 0);
  for (const auto& [leaf, at] : sun.leaves) {
    if (at < 0 || at >= static_cast<int>(c.size()))
      return fail("attachment", "index " + std::to_string(at) + " out of range");
    if (at % 2 == 0)
      return fail("attachment", "leaf " + std::to_string(leaf) + " hangs off x_" +
                                    std::to_string(at + 1) + ", an odd position");
    if (taken[at]) return fail("one leaf per vertex", "x_" + std::to_string(at + 1) + " has two leaves");
    taken[at] = 1;
    if (!host.adjacent(leaf, c[at]))
      return fail("attachment", "leaf " + std::to_string(leaf) + " is not adjacent to " +
                                    std::to_string(c[at]));
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- units

VertexSet Unit::vertices() const { return interior().unite(exterior()); }

VertexSet Unit::exterior() const {
  std::vector<Vertex> vs;
  for (const Star& s : stars) vs.insert(vs.end(), s.leaves.begin(), s.leaves.end());
  return VertexSet(vs);
}

VertexSet Unit::interior() const {
  std::vector<Vertex> vs{core};
  for (const Path& p : spokes) vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
  for (const Star& s : stars) vs.push_back(s.centre);
  return VertexSet(vs);
}

Path Unit::path_to(Vertex w) const {
  for (std::size_t i = 0; i < stars.size(); ++i)
    if (std::find(stars[i].leaves.begin(), stars[i].leaves.end(), w) != stars[i].leaves.end()) {
      Path p = spokes[i];
      p.vertices.push_back(w);
      return p;
    }
  throw GraphError("Unit::path_to: vertex " + std::to_string(w) + " is not exterior");
}

StructureCheck validate_unit(const Graph& host, const Unit& unit, const UnitShape& shape) {
  if (static_cast<int>(unit.spokes.size()) != shape.h1 ||
      static_cast<int>(unit.stars.size()) != shape.h1)
    return fail("spoke count", "expected " + std::to_string(shape.h1) + " spokes and stars");
  if (!host.has_vertex(unit.core)) return fail("host vertices", "core outside host");
  std::vector<Vertex> ends;
  for (std::size_t i = 0; i < unit.spokes.size(); ++i) {
    const Path& p = unit.spokes[i];
    std::string tag = "spoke " + std::to_string(i) + ": ";
    if (p.vertices.empty() || p.front() != unit.core)
      return fail("spoke path", tag + "does not start at the core");
    if (!in_range(host, p.vertices)) return fail("host vertices", tag + "leaves the host");
    if (std::string why = path_problem(host, p); !why.empty()) return fail("spoke path", tag + why);
    if (p.length() == 0) return fail("length-0 spoke", tag + "ends at the core");
    if (p.length() > shape.h3)
      return fail("spoke length", tag + "length " + std::to_string(p.length()) + " > " +
                                      std::to_string(shape.h3));
    ends.push_back(p.back());
  }
  if (VertexSet(ends).size() != ends.size()) return fail("distinct endpoints", show(ends));
  if (auto v = check_fan(unit.spokes, "internally disjoint spokes")) return v;
  std::vector<Vertex> spoke_vs{unit.core};
  for (const Path& p : unit.spokes) spoke_vs.insert(spoke_vs.end(), p.vertices.begin(), p.vertices.end());
  VertexSet on_spokes(spoke_vs);
  std::vector<Vertex> star_vs;
  for (std::size_t i = 0; i < unit.stars.size(); ++i) {
    const Star& s = unit.stars[i];
    std::string tag = "star " + std::to_string(i) + ": ";
    if (s.centre != ends[i]) return fail("star centre", tag + "centre is not the spoke end");
    if (static_cast<int>(s.leaves.size()) != shape.h2)
      return fail("star size", tag + std::to_string(s.leaves.size()) + " leaves");
    if (!in_range(host, s.leaves)) return fail("host vertices", tag + "leaf outside host");
    star_vs.push_back(s.centre);
    star_vs.insert(star_vs.end(), s.leaves.begin(), s.leaves.end());
  }
  if (VertexSet(star_vs).size() != star_vs.size()) return fail("disjoint stars", "stars overlap");
  for (const Star& s : unit.stars)
    for (Vertex w : s.leaves)
      if (on_spokes.contains(w))
        return fail("star-disjointness", "leaf " + std::to_string(w) + " lies on a spoke");
  for (const Star& s : unit.stars)
    for (Vertex w : s.leaves)
      if (!host.adjacent(s.centre, w))
        return fail("star edge", std::to_string(s.centre) + "-" + std::to_string(w));
  return std::nullopt;
}

// ---------------------------------------------------------------- webs

VertexSet Web::vertices() const { return interior().unite(exterior()); }

VertexSet Web::exterior() const {
  VertexSet out;
  for (const Unit& u : units) out = out.unite(u.exterior());
  return out;
}

VertexSet Web::centre() const {
  std::vector<Vertex> vs{core};
  for (const Path& p : arms) vs.insert(vs.end(), p.vertices.begin(), p.vertices.end());
  return VertexSet(vs);
}

VertexSet Web::interior() const {
  VertexSet out = centre();
  for (const Unit& u : units) out = out.unite(u.interior());
  return out;
}

Path Web::path_to(Vertex w) const {
  for (std::size_t i = 0; i < units.size(); ++i) {
    if (!units[i].exterior().contains(w)) continue;
    Path p = arms[i];
    Path rest = units[i].path_to(w);
    p.vertices.insert(p.vertices.end(), rest.vertices.begin() + 1, rest.vertices.end());
    return p;
  }
  throw GraphError("Web::path_to: vertex " + std::to_string(w) + " is not exterior");
}

StructureCheck validate_web(const Graph& host, const Web& web, const WebShape& shape) {
  if (static_cast<int>(web.arms.size()) != shape.h0 ||
      static_cast<int>(web.units.size()) != shape.h0)
    return fail("arm count", "expected " + std::to_string(shape.h0) + " arms and units");
  if (!host.has_vertex(web.core)) return fail("host vertices", "core outside host");
  std::vector<Vertex> ends;
  for (std::size_t i = 0; i < web.arms.size(); ++i) {
    const Path& p = web.arms[i];
    std::string tag = "arm " + std::to_string(i) + ": ";
    if (p.vertices.empty() || p.front() != web.core)
      return fail("arm path", tag + "does not start at the core");
    if (!in_range(host, p.vertices)) return fail("host vertices", tag + "leaves the host");
    if (std::string why = path_problem(host, p); !why.empty()) return fail("arm path", tag + why);
    if (p.length() == 0) return fail("length-0 arm", tag + "ends at the core");
    if (p.length() > shape.unit.h3)
      return fail("arm length", tag + "length " + std::to_string(p.length()));
    ends.push_back(p.back());
  }
  if (VertexSet(ends).size() != ends.size()) return fail("distinct endpoints", show(ends));
  if (auto v = check_fan(web.arms, "internally disjoint arms")) return v;
  VertexSet ctr = web.centre();
  std::vector<Vertex> bodies;
  for (std::size_t i = 0; i < web.units.size(); ++i) {
    const Unit& u = web.units[i];
    if (u.core != ends[i]) return fail("unit core", "unit " + std::to_string(i) + " is not at its arm end");
    if (auto v = validate_unit(host, u, shape.unit))
      return fail("unit " + std::to_string(i) + ": " + v->clause, v->detail);
    VertexSet vs = u.vertices();
    bodies.insert(bodies.end(), vs.begin(), vs.end());
    for (Vertex w : vs)
      if (w != u.core && ctr.contains(w))
        return fail("unit-arm disjointness", "vertex " + std::to_string(w) + " of unit " +
                                                 std::to_string(i) + " lies on an arm");
  }
  if (VertexSet(bodies).size() != bodies.size()) return fail("disjoint units", "units overlap");
  VertexSet ext = web.exterior();
  VertexSet in = web.interior();
  if (!ext.disjoint_from(in) || !ctr.minus(in).empty() ||
      !(ext.unite(in) == web.vertices()))
    return fail("partition", "exterior, interior and centre do not partition the web");
  return std::nullopt;
}

// ---------------------------------------------------------------- nakjis

VertexSet Nakji::vertices() const {
  VertexSet out = head;
  for (const VertexSet& l : legs) out = out.unite(l);
  for (const Path& p : arms) out = out.unite(VertexSet(p.vertices));
  return out;
}

StructureCheck validate_nakji(const Graph& host, const Nakji& nk) {
  const NakjiParams& p = nk.params;
  if (static_cast<int>(nk.legs.size()) != p.t || static_cast<int>(nk.arms.size()) != p.t)
    return fail("leg count", "expected " + std::to_string(p.t) + " legs and arms");
  if (!in_range(host, nk.head.members())) return fail("host vertices", "head outside host");
  if (nk.head.empty() || static_cast<int>(nk.head.size()) > p.s)
    return fail("head size", std::to_string(nk.head.size()) + " vertices");
  std::vector<Vertex> parts = nk.head.members();
  for (std::size_t i = 0; i < nk.legs.size(); ++i) {
    const VertexSet& l = nk.legs[i];
    if (!in_range(host, l.members())) return fail("host vertices", "leg outside host");
    if (l.empty() || static_cast<int>(l.size()) > p.s)
      return fail("leg size", "leg " + std::to_string(i) + " has " + std::to_string(l.size()));
    parts.insert(parts.end(), l.begin(), l.end());
  }
  if (VertexSet(parts).size() != parts.size())
    return fail("vertex disjoint sets", "head and legs overlap");
  VertexSet all_parts(parts);
  std::vector<Vertex> interiors;
  for (std::size_t i = 0; i < nk.arms.size(); ++i) {
    const Path& a = nk.arms[i];
    std::string tag = "arm " + std::to_string(i) + ": ";
    if (!in_range(host, a.vertices)) return fail("host vertices", tag + "leaves the host");
    if (std::string why = path_problem(host, a); !why.empty()) return fail("arm path", tag + why);
    if (!nk.head.contains(a.front()) || !nk.legs[i].contains(a.back()))
      return fail("arm path", tag + "does not join the head to its leg");
    if (a.length() > 10 * p.r)
      return fail("arm length", tag + "length " + std::to_string(a.length()) + " > 10r");
    for (Vertex v : a.interior()) {
      if (all_parts.contains(v))
        return fail("legs disjoint from arm interiors",
                    tag + "passes through " + std::to_string(v));
      interiors.push_back(v);
    }
  }
  if (VertexSet(interiors).size() != interiors.size())
    return fail("internally disjoint arms", "two arms share an inner vertex");
  for (std::size_t i = 0; i < nk.legs.size(); ++i) {
    Distance diam = set_diameter(host, nk.legs[i]);
    if (!(diam == Distance::finite(0)) && diam.at_least(p.r + 1))
      return fail("leg diameter", "leg " + std::to_string(i) + " is wider than r");
  }
  for (std::size_t i = 0; i < nk.legs.size(); ++i) {
    if (!distance(host, nk.legs[i], nk.head).at_least(p.tau))
      return fail("distance at least tau", "leg " + std::to_string(i) + " is close to the head");
    for (std::size_t j = i + 1; j < nk.legs.size(); ++j)
      if (!distance(host, nk.legs[i], nk.legs[j]).at_least(p.tau))
        return fail("distance at least tau",
                    "legs " + std::to_string(i) + " and " + std::to_string(j) + " are close");
  }
  return std::nullopt;
}

// ---------------------------------------------------------------- stars

StarHarvest find_disjoint_stars(const Graph& g, const VertexSet& avoid, int count,
                                int leaf_count) {
  if (leaf_count < 1) throw std::invalid_argument("find_disjoint_stars: leaf_count must be >= 1");
  StarHarvest out;
  std::vector<char> free = VertexSet::range(g.order()).minus(avoid).mask(g.order());
  std::vector<int> residual(g.order(), 0);
  for (Vertex v = 0; v < g.order(); ++v)
    if (free[v])
      for (Vertex w : g.neighbors(v)) residual[v] += free[w];
  auto take = [&](Vertex v) {
    free[v] = 0;
    for (Vertex w : g.neighbors(v)) --residual[w];
  };
  while (static_cast<int>(out.stars.size()) < count) {
    Vertex centre = -1;
    for (Vertex v = 0; v < g.order(); ++v)
      if (free[v] && residual[v] >= leaf_count && (centre < 0 || residual[v] > residual[centre]))
        centre = v;
    if (centre < 0) break;
    std::vector<Vertex> options;
    for (Vertex w : g.neighbors(centre))
      if (free[w]) options.push_back(w);
    std::stable_sort(options.begin(), options.end(),
                     [&](Vertex a, Vertex b) { return residual[a] < residual[b]; });
    options.resize(leaf_count);
    std::sort(options.begin(), options.end());
    take(centre);
    for (Vertex w : options) take(w);
    out.stars.push_back(Star{centre, options});
  }
  out.deficiency = std::max(0, count - static_cast<int>(out.stars.size()));
  return out;
}

// ---------------------------------------------------------------- unit building

namespace {

// Assigns `need` private leaves to every centre from its allowed
// neighbours (augmenting paths over centre copies). Empty on failure.
std::vector<std::vector<Vertex>> assign_leaves(const Graph& g, const std::vector<Vertex>& centres,
                                               int need, const std::vector<char>& allowed) {
  int slots = static_cast<int>(centres.size()) * need;
  std::vector<Vertex> owner(g.order(), -1);  // leaf -> slot
  std::vector<Vertex> slot_leaf(slots, -1);
  std::vector<int> seen(g.order(), -1);
  std::function<bool(int, int)> augment = [&](int slot, int stamp) -> bool {
    Vertex c = centres[slot / need];
    for (Vertex w : g.neighbors(c)) {
      if (!allowed[w] || seen[w] == stamp) continue;
      seen[w] = stamp;
      if (owner[w] < 0 || augment(owner[w], stamp)) {
        owner[w] = slot;
        slot_leaf[slot] = w;
        return true;
      }
    }
    return false;
  };
  for (int s = 0; s < slots; ++s)
    if (!augment(s, s)) return {};
  std::vector<std::vector<Vertex>> out(centres.size());
  for (int s = 0; s < slots; ++s) out[s / need].push_back(slot_leaf[s]);
  for (auto& l : out) std::sort(l.begin(), l.end());
  return out;
}

// A pool of stars with one spare leaf, then the smallest
// hub that reaches h1 of their centres by disjoint short paths.
std::optional<Unit> unit_from_pool(const Graph& g, const VertexSet& avoid, const UnitShape& shape,
                                   BuildBudget& budget, std::optional<Vertex> pinned,
                                   std::vector<std::string>& trace) {
  for (int slack : {1, 0}) {
    StarHarvest pool = find_disjoint_stars(g, avoid, std::numeric_limits<int>::max(), shape.h2 + slack);
    trace.push_back("pool: " + std::to_string(pool.stars.size()) + " stars of " +
                    std::to_string(shape.h2 + slack) + " leaves");
    if (static_cast<int>(pool.stars.size()) < shape.h1) continue;
    std::vector<int> star_of(g.order(), -1);
    for (std::size_t i = 0; i < pool.stars.size(); ++i) star_of[pool.stars[i].centre] = static_cast<int>(i);
    std::vector<char> base = VertexSet::range(g.order()).minus(avoid).mask(g.order());
    for (Vertex hub = 0; hub < g.order(); ++hub) {
      if (!base[hub] || (pinned && hub != *pinned)) continue;
      if (static_cast<int>(g.neighbors(hub).size()) < shape.h1) continue;
      if (!budget.spend(g.degree(hub) + 1)) return std::nullopt;
      std::vector<std::vector<Vertex>> leaves;
      for (const Star& s : pool.stars) leaves.push_back(s.leaves);
      std::vector<char> alive(pool.stars.size(), 1);
      if (star_of[hub] >= 0) alive[star_of[hub]] = 0;
      auto drop_leaf = [&](Vertex v) {
        for (auto& l : leaves) l.erase(std::remove(l.begin(), l.end(), v), l.end());
      };
      drop_leaf(hub);
      std::vector<char> used(g.order(), 0);
      used[hub] = 1;
      std::vector<char> chosen_leaf(g.order(), 0);
      Unit unit;
      unit.core = hub;
      std::vector<int> chosen;
      while (static_cast<int>(chosen.size()) < shape.h1) {
        // BFS from the hub through free vertices that are neither pool
        // centres nor leaves of stars already chosen.
        std::vector<int> layer(g.order(), -1);
        std::vector<Vertex> parent(g.order(), -1);
        std::deque<Vertex> queue{hub};
        layer[hub] = 0;
        std::vector<Vertex> reached;
        while (!queue.empty()) {
          Vertex v = queue.front();
          queue.pop_front();
          budget.spend(g.degree(v));
          if (layer[v] == shape.h3) continue;
          for (Vertex w : g.neighbors(v)) {
            if (!base[w] || used[w] || chosen_leaf[w] || layer[w] >= 0) continue;
            layer[w] = layer[v] + 1;
            parent[w] = v;
            if (star_of[w] >= 0) {
              if (alive[star_of[w]]) reached.push_back(w);
              continue;
            }
            queue.push_back(w);
          }
        }
        std::stable_sort(reached.begin(), reached.end(),
                         [&](Vertex a, Vertex b) { return layer[a] < layer[b]; });
        bool extended = false;
        for (Vertex x : reached) {
          Path p;
          for (Vertex v = x; v >= 0; v = parent[v]) p.vertices.push_back(v);
          std::reverse(p.vertices.begin(), p.vertices.end());
          int idx = star_of[x];
          std::vector<Vertex> rest;
          for (Vertex w : leaves[idx])
            if (std::find(p.vertices.begin(), p.vertices.end(), w) == p.vertices.end()) rest.push_back(w);
          if (static_cast<int>(rest.size()) < shape.h2) continue;
          rest.resize(shape.h2);
          for (Vertex v : p.vertices) used[v] = 1;
          for (Vertex v : p.vertices) drop_leaf(v);
          for (Vertex w : rest) chosen_leaf[w] = 1;
          alive[idx] = 0;
          chosen.push_back(idx);
          unit.spokes.push_back(p);
          unit.stars.push_back(Star{x, rest});
          extended = true;
          break;
        }
        if (!extended) break;
      }
      if (static_cast<int>(chosen.size()) == shape.h1 && !validate_unit(g, unit, shape)) {
        trace.push_back("pool: hub " + std::to_string(hub) + " reaches " + std::to_string(shape.h1) +
                        " star centres");
        return unit;
      }
      if (budget.exhausted()) return std::nullopt;
    }
  }
  return std::nullopt;
}

// Hub-first backtracking: spokes are simple paths of length <= h3 ending
// at a vertex with enough free neighbours; leaves are matched at the end.
std::optional<Unit> unit_by_search(const Graph& g, const VertexSet& avoid, const UnitShape& shape,
                                   BuildBudget& budget, std::optional<Vertex> pinned) {
  std::vector<char> base = VertexSet::range(g.order()).minus(avoid).mask(g.order());
  std::vector<char> used(g.order(), 0);
  Unit unit;
  auto free_neighbours = [&](Vertex v) {
    int c = 0;
    for (Vertex w : g.neighbors(v)) c += base[w] && !used[w];
    return c;
  };
  std::function<bool(Vertex)> place = [&](Vertex min_end) -> bool {
    if (!budget.spend()) return false;
    int placed = static_cast<int>(unit.spokes.size());
    if (placed == shape.h1) {
      std::vector<char> allowed(g.order(), 0);
      for (Vertex v = 0; v < g.order(); ++v) allowed[v] = base[v] && !used[v];
      std::vector<Vertex> centres;
      for (const Path& p : unit.spokes) centres.push_back(p.back());
      auto leaves = assign_leaves(g, centres, shape.h2, allowed);
      if (leaves.empty()) return false;
      unit.stars.clear();
      for (std::size_t i = 0; i < centres.size(); ++i) unit.stars.push_back(Star{centres[i], leaves[i]});
      return true;
    }
    if (free_neighbours(unit.core) < shape.h1 - placed) return false;
    for (int len = 1; len <= shape.h3; ++len) {
      std::vector<Vertex> walk{unit.core};
      std::function<bool()> extend = [&]() -> bool {
        if (!budget.spend()) return false;
        Vertex v = walk.back();
        if (static_cast<int>(walk.size()) - 1 == len) {
          if (v < min_end || free_neighbours(v) < shape.h2) return false;
          for (Vertex w : walk) used[w] = 1;
          unit.spokes.push_back(Path{walk});
          if (place(v + 1)) return true;
          unit.spokes.pop_back();
          for (std::size_t k = 1; k < walk.size(); ++k) used[walk[k]] = 0;
          return false;
        }
        for (Vertex w : g.neighbors(v)) {
          if (!base[w] || used[w] || std::find(walk.begin(), walk.end(), w) != walk.end()) continue;
          walk.push_back(w);
          bool ok = extend();
          walk.pop_back();
          if (ok) return true;
          if (budget.exhausted()) return false;
        }
        return false;
      };
      if (extend()) return true;
      if (budget.exhausted()) return false;
    }
    return false;
  };
  for (Vertex hub = 0; hub < g.order(); ++hub) {
    if (!base[hub] || (pinned && hub != *pinned)) continue;
    unit = Unit{};
    unit.core = hub;
    std::fill(used.begin(), used.end(), 0);
    used[hub] = 1;
    if (place(0)) return unit;
    if (budget.exhausted()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

UnitBuild build_unit(const Graph& g, const VertexSet& avoid, const UnitShape& shape,
                     BuildBudget& budget, std::optional<Vertex> core) {
  if (shape.h1 < 1 || shape.h2 < 1 || shape.h3 < 1)
    throw std::invalid_argument("build_unit: h1, h2, h3 must be positive");
  check_vertices(g, avoid);
  if (core) {
    check_vertex(g, *core);
    if (avoid.contains(*core)) throw GraphError("build_unit: pinned core is avoided");
  }
  UnitBuild out;
  if (auto u = unit_from_pool(g, avoid, shape, budget, core, out.trace)) {
    out.unit = u;
    out.stage = "pool";
    return out;
  }
  if (!budget.exhausted()) {
    if (auto u = unit_by_search(g, avoid, shape, budget, core)) {
      if (auto bad = validate_unit(g, *u, shape))
        throw std::logic_error("build_unit: search produced an invalid unit: " + bad->clause);
      out.unit = u;
      out.stage = "search";
      out.trace.push_back("search: hub " + std::to_string(u->core));
      return out;
    }
    out.trace.push_back("search: no hub admits the unit");
  }
  out.budget_exhausted = budget.exhausted();
  if (out.budget_exhausted) out.trace.push_back("budget exhausted after " + std::to_string(budget.used) + " nodes");
  return out;
}

// ---------------------------------------------------------------- web building

namespace {

std::optional<Web> web_from_units(const Graph& g, const VertexSet& avoid, const WebShape& shape,
                                  BuildBudget& budget, std::vector<std::string>& trace) {
  std::vector<Unit> units;
  VertexSet taken = avoid;
  int cap = 4 * shape.h0 + 4;
  while (static_cast<int>(units.size()) < cap && !budget.exhausted()) {
    UnitBuild b = build_unit(g, taken, shape.unit, budget);
    if (!b.unit) break;
    taken = taken.unite(b.unit->vertices());
    units.push_back(*b.unit);
  }
  trace.push_back("harvested " + std::to_string(units.size()) + " units");
  if (static_cast<int>(units.size()) < shape.h0) return std::nullopt;
  std::vector<int> unit_of(g.order(), -1);
  for (std::size_t i = 0; i < units.size(); ++i)
    for (Vertex v : units[i].vertices()) unit_of[v] = static_cast<int>(i);
  std::vector<char> base = VertexSet::range(g.order()).minus(avoid).mask(g.order());
  for (Vertex hub = 0; hub < g.order(); ++hub) {
    if (!base[hub] || unit_of[hub] >= 0) continue;
    std::vector<char> used(g.order(), 0);
    used[hub] = 1;
    Web web;
    web.core = hub;
    std::vector<char> unit_taken(units.size(), 0);
    while (static_cast<int>(web.arms.size()) < shape.h0) {
      std::vector<int> layer(g.order(), -1);
      std::vector<Vertex> parent(g.order(), -1);
      std::deque<Vertex> queue{hub};
      layer[hub] = 0;
      Vertex target = -1;
      while (!queue.empty() && target < 0) {
        Vertex v = queue.front();
        queue.pop_front();
        budget.spend(g.degree(v));
        if (layer[v] == shape.unit.h3) continue;
        for (Vertex w : g.neighbors(v)) {
          if (!base[w] || used[w] || layer[w] >= 0) continue;
          int owner = unit_of[w];
          if (owner >= 0) {
            if (!unit_taken[owner] && units[owner].core == w) {
              layer[w] = layer[v] + 1;
              parent[w] = v;
              target = w;
              break;
            }
            continue;
          }
          layer[w] = layer[v] + 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
      if (target < 0) break;
      Path p;
      for (Vertex v = target; v >= 0; v = parent[v]) p.vertices.push_back(v);
      std::reverse(p.vertices.begin(), p.vertices.end());
      for (Vertex v : p.vertices) used[v] = 1;
      unit_taken[unit_of[target]] = 1;
      web.arms.push_back(p);
      web.units.push_back(units[unit_of[target]]);
    }
    if (static_cast<int>(web.arms.size()) == shape.h0 && !validate_web(g, web, shape)) {
      trace.push_back("hub " + std::to_string(hub) + " reaches " + std::to_string(shape.h0) + " unit cores");
      return web;
    }
    if (budget.exhausted()) return std::nullopt;
  }
  return std::nullopt;
}

std::optional<Web> web_by_search(const Graph& g, const VertexSet& avoid, const WebShape& shape,
                                 BuildBudget& budget) {
  std::vector<char> base = VertexSet::range(g.order()).minus(avoid).mask(g.order());
  std::vector<char> used(g.order(), 0);
  Web web;
  std::function<bool(Vertex)> place = [&](Vertex min_end) -> bool {
    if (!budget.spend()) return false;
    if (static_cast<int>(web.arms.size()) == shape.h0) return true;
    for (int len = 1; len <= shape.unit.h3; ++len) {
      std::vector<Vertex> walk{web.core};
      std::function<bool()> extend = [&]() -> bool {
        if (!budget.spend()) return false;
        Vertex u = walk.back();
        if (static_cast<int>(walk.size()) - 1 == len) {
          if (u < min_end || g.degree(u) < shape.unit.h1) return false;
          std::vector<Vertex> blocked;
          for (Vertex v = 0; v < g.order(); ++v)
            if (!base[v] || used[v]) blocked.push_back(v);
          blocked.insert(blocked.end(), walk.begin(), walk.end() - 1);
          BuildBudget local{std::max<long long>(0, budget.max_nodes - budget.used) / 4 + 1};
          UnitBuild b = build_unit(g, VertexSet(blocked), shape.unit, local, u);
          budget.spend(local.used);
          if (!b.unit) return false;
          for (Vertex v : walk) used[v] = 1;
          for (Vertex v : b.unit->vertices()) used[v] = 1;
          web.arms.push_back(Path{walk});
          web.units.push_back(*b.unit);
          if (place(u + 1)) return true;
          web.arms.pop_back();
          for (Vertex v : web.units.back().vertices()) used[v] = 0;
          web.units.pop_back();
          for (std::size_t k = 1; k < walk.size(); ++k) used[walk[k]] = 0;
          return false;
        }
        for (Vertex w : g.neighbors(u)) {
          if (!base[w] || used[w] || std::find(walk.begin(), walk.end(), w) != walk.end()) continue;
          walk.push_back(w);
          bool ok = extend();
          walk.pop_back();
          if (ok) return true;
          if (budget.exhausted()) return false;
        }
        return false;
      };
      if (extend()) return true;
      if (budget.exhausted()) return false;
    }
    return false;
  };
  for (Vertex hub = 0; hub < g.order(); ++hub) {
    if (!base[hub] || g.degree(hub) < shape.h0) continue;
    web = Web{};
    web.core = hub;
    std::fill(used.begin(), used.end(), 0);
    used[hub] = 1;
    if (place(0)) return web;
    if (budget.exhausted()) return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace

WebBuild build_web(const Graph& g, const VertexSet& avoid, const WebShape& shape,
                   BuildBudget& budget) {
  if (shape.h0 < 1) throw std::invalid_argument("build_web: h0 must be positive");
  check_vertices(g, avoid);
  WebBuild out;
  if (auto w = web_from_units(g, avoid, shape, budget, out.trace)) {
    out.web = w;
    out.stage = "pool";
    return out;
  }
  if (!budget.exhausted()) {
    if (auto w = web_by_search(g, avoid, shape, budget)) {
      if (auto bad = validate_web(g, *w, shape))
        throw std::logic_error("build_web: search produced an invalid web: " + bad->clause);
      out.web = w;
      out.stage = "search";
      out.trace.push_back("search: hub " + std::to_string(w->core));
      return out;
    }
    out.trace.push_back("search: no hub admits the web");
  }
  out.budget_exhausted = budget.exhausted();
  if (out.budget_exhausted) out.trace.push_back("budget exhausted after " + std::to_string(budget.used) + " nodes");
  return out;
}

// ---------------------------------------------------------------- cycles and suns

namespace {

bool parity_ok(std::size_t len, CycleParity parity) {
  if (len < 3) return false;
  if (parity == CycleParity::kOdd) return len % 2 == 1;
  if (parity == CycleParity::kEven) return len % 2 == 0;
  return true;
}

}  // namespace

CycleSearch longest_cycle(const Graph& g, CycleParity parity, std::uint64_t seed,
                          long long node_budget) {
  CycleSearch out;
  const Vertex n = g.order();
  std::size_t bound = static_cast<std::size_t>(n);
  std::vector<int> colour = two_coloring(g);
  if (!colour.empty()) {
    // Cycles in a bipartite graph alternate sides and are never odd.
    if (parity == CycleParity::kOdd) {
      out.exact = true;
      return out;
    }
    std::size_t zeros = std::count(colour.begin(), colour.end(), 0);
    bound = 2 * std::min(zeros, static_cast<std::size_t>(n) - zeros);
  }
  if (parity == CycleParity::kOdd && bound % 2 == 0) --bound;
  if (parity == CycleParity::kEven && bound % 2 == 1) --bound;
  if (n <= 16) {
    std::vector<Vertex> path;
    std::vector<char> on(n, 0);
    long long nodes = 0;
    bool out_of_budget = false;
    std::function<void(Vertex)> dfs = [&](Vertex start) {
      if (out.cycle.size() == bound || out_of_budget) return;
      if (++nodes > node_budget) {
        out_of_budget = true;
        return;
      }
      Vertex v = path.back();
      for (Vertex w : g.neighbors(v)) {
        if (w == start && parity_ok(path.size(), parity) && path.size() > out.cycle.size())
          out.cycle = path;
        if (w <= start || on[w]) continue;
        on[w] = 1;
        path.push_back(w);
        dfs(start);
        path.pop_back();
        on[w] = 0;
      }
    };
    for (Vertex s = 0; s < n && out.cycle.size() < bound && !out_of_budget; ++s) {
      path.assign(1, s);
      on[s] = 1;
      dfs(s);
      on[s] = 0;
    }
    out.exact = !out_of_budget;
    return out;
  }
  // Greedy long paths (fewest unvisited neighbours first), each closed by
  // the earliest back edge from the final vertex that gives the parity.
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  int restarts = 64;
  for (int round = 0; round < restarts && out.cycle.size() < bound; ++round) {
    std::vector<Vertex> path{pick(rng)};
    std::vector<int> pos(n, -1);
    pos[path[0]] = 0;
    while (true) {
      Vertex v = path.back();
      Vertex next = -1;
      int next_score = std::numeric_limits<int>::max();
      for (Vertex w : g.neighbors(v)) {
        if (pos[w] >= 0) continue;
        int score = 0;
        for (Vertex x : g.neighbors(w)) score += pos[x] < 0;
        if (score < next_score || (score == next_score && rng() % 2)) {
          next = w;
          next_score = score;
        }
      }
      if (next < 0) break;
      pos[next] = static_cast<int>(path.size());
      path.push_back(next);
    }
    for (std::size_t end = path.size(); end-- > 0;) {
      if (end + 1 <= out.cycle.size()) break;
      Vertex v = path[end];
      int earliest = -1;
      for (Vertex w : g.neighbors(v)) {
        int p = pos[w];
        if (p < 0 || p >= static_cast<int>(end)) continue;
        std::size_t len = end - p + 1;
        if (parity_ok(len, parity) && (earliest < 0 || p < earliest)) earliest = p;
      }
      if (earliest >= 0 && end - earliest + 1 > out.cycle.size())
        out.cycle.assign(path.begin() + earliest, path.begin() + end + 1);
    }
  }
  out.exact = false;
  return out;
}

SunSearch find_sun(const Graph& g, int r0, std::uint64_t seed) {
  if (g.order() == 0 || !is_connected(g)) throw GraphError("find_sun: host must be connected");
  SunSearch out;
  std::vector<int> colour = two_coloring(g);
  if (colour.empty()) {
    CycleSearch c = longest_cycle(g, CycleParity::kOdd, seed);
    out.exact = c.exact;
    if (!c.cycle.empty() && static_cast<int>(c.cycle.size()) >= r0) out.odd_cycle = c.cycle;
    return out;
  }
  long long zeros = std::count(colour.begin(), colour.end(), 0);
  int small_side = zeros <= g.order() - zeros ? 0 : 1;
  CycleSearch c = longest_cycle(g, CycleParity::kEven, seed);
  out.exact = c.exact;
  if (c.cycle.empty()) return out;
  // Rotate so the smaller side sits on the odd (leaf-bearing) positions.
  std::vector<Vertex> cyc = c.cycle;
  if (colour[cyc[1]] != small_side) std::rotate(cyc.begin(), cyc.begin() + 1, cyc.end());
  Sun sun;
  sun.cycle = cyc;
  int a = sun.a();
  if (a < r0) {
    std::vector<int> pos(g.order(), -1);
    for (std::size_t i = 0; i < cyc.size(); ++i) pos[cyc[i]] = static_cast<int>(i);
    // Maximum matching from the big side outside the cycle onto the
    // small-side cycle vertices, by augmenting paths.
    std::vector<Vertex> match_of(g.order(), -1);  // cycle vertex -> leaf
    std::vector<int> seen(g.order(), -1);
    std::function<bool(Vertex, int)> augment = [&](Vertex leaf, int stamp) -> bool {
      for (Vertex x : g.neighbors(leaf)) {
        if (pos[x] < 0 || seen[x] == stamp) continue;
        seen[x] = stamp;
        if (match_of[x] < 0 || augment(match_of[x], stamp)) {
          match_of[x] = leaf;
          return true;
        }
      }
      return false;
    };
    int matched = 0;
    for (Vertex v = 0; v < g.order() && a + matched < r0; ++v)
      if (pos[v] < 0 && colour[v] != small_side && augment(v, v)) ++matched;
    for (std::size_t i = 1; i < cyc.size(); i += 2)
      if (match_of[cyc[i]] >= 0) sun.leaves.emplace_back(match_of[cyc[i]], static_cast<int>(i));
  }
  if (sun.a() + sun.b() < r0) return out;
  if (auto bad = validate_sun(g, sun)) throw std::logic_error("find_sun: invalid sun: " + bad->clause);
  out.sun = sun;
  return out;
}

// ---------------------------------------------------------------- nakjis

namespace {

// Connected prefix of `s` in BFS order from its smallest vertex, capped at `size`.
VertexSet connected_prefix(const Graph& g, const VertexSet& s, int size) {
  std::vector<char> allowed = s.mask(g.order());
  std::vector<Vertex> order{s[0]};
  std::vector<char> seen(g.order(), 0);
  seen[s[0]] = 1;
  for (std::size_t i = 0; i < order.size() && static_cast<int>(order.size()) < size; ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (allowed[w] && !seen[w] && static_cast<int>(order.size()) < size) {
        seen[w] = 1;
        order.push_back(w);
      }
  return VertexSet(order);
}

// Grows a leg from `root` inside `s` in BFS order, keeping host diameter <= r.
VertexSet grow_leg(const Graph& g, const VertexSet& s, Vertex root, int r, int size,
                   const std::vector<char>& forbidden) {
  std::vector<char> allowed = s.mask(g.order());
  std::vector<Vertex> leg{root};
  std::vector<std::vector<int>> dist_from{bfs_layers(g, VertexSet{root})};
  std::vector<Vertex> order{root};
  std::vector<char> seen(g.order(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (allowed[w] && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  for (std::size_t i = 1; i < order.size() && static_cast<int>(leg.size()) < size; ++i) {
    Vertex w = order[i];
    if (forbidden[w]) continue;
    bool fits = true;
    for (const auto& d : dist_from)
      if (d[w] < 0 || d[w] > r) fits = false;
    if (!fits) continue;
    leg.push_back(w);
    dist_from.push_back(bfs_layers(g, VertexSet{w}));
  }
  return VertexSet(leg);
}

}  // namespace

NakjiBuild build_nakjis(const Graph& g, const VertexSet& avoid, const NakjiParams& params,
                        int count, const std::vector<VertexSet>& subexpanders) {
  if (params.t < 1 || params.s < 1 || params.r < 1 || params.tau < 1)
    throw std::invalid_argument("build_nakjis: t, s, r, tau must be positive");
  check_vertices(g, avoid);
  for (const VertexSet& f : subexpanders) check_vertices(g, f);
  NakjiBuild out;
  VertexSet used = avoid;
  std::vector<char> consumed(subexpanders.size(), 0);
  for (std::size_t h = 0; h < subexpanders.size() && static_cast<int>(out.nakjis.size()) < count; ++h) {
    if (consumed[h]) continue;
    VertexSet hf = subexpanders[h].minus(used);
    if (hf.empty() || !induces_connected(g, hf)) continue;
    Nakji nk;
    nk.params = params;
    nk.head = connected_prefix(g, hf, params.s);
    std::vector<char> inner(g.order(), 0);  // arm interiors so far
    std::vector<std::size_t> leg_source;
    // Nearest subexpanders first, ties by index.
    std::vector<int> head_dist = bfs_layers(g, nk.head);
    auto reach = [&](std::size_t f) {
      int best = std::numeric_limits<int>::max();
      for (Vertex v : subexpanders[f])
        if (head_dist[v] >= 0) best = std::min(best, head_dist[v]);
      return best;
    };
    std::vector<std::size_t> order;
    for (std::size_t f = 0; f < subexpanders.size(); ++f)
      if (f != h && !consumed[f]) order.push_back(f);
    std::vector<int> order_dist(subexpanders.size(), 0);
    for (std::size_t f : order) order_dist[f] = reach(f);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return order_dist[a] < order_dist[b]; });
    for (std::size_t f : order) {
      if (static_cast<int>(nk.legs.size()) >= params.t) break;
      VertexSet cand = subexpanders[f].minus(used).minus(nk.head);
      std::vector<Vertex> clean;
      for (Vertex v : cand)
        if (!inner[v]) clean.push_back(v);
      cand = VertexSet(clean);
      if (cand.empty()) continue;
      if (!distance(g, cand, nk.head).at_least(params.tau)) {
        out.trace.push_back("head " + std::to_string(h) + ": subexpander " + std::to_string(f) +
                            " is within tau of the head");
        continue;
      }
      std::vector<Vertex> block = used.members();
      for (Vertex v = 0; v < g.order(); ++v)
        if (inner[v]) block.push_back(v);
      for (const VertexSet& l : nk.legs) block.insert(block.end(), l.begin(), l.end());
      VertexSet w = VertexSet(block).minus(nk.head).minus(cand);
      // Prefer an arm that leaves the other subexpanders intact for later
      // heads and legs.
      VertexSet others;
      for (std::size_t o : order)
        if (o != f) others = others.unite(subexpanders[o]);
      std::optional<Path> arm = connect_avoiding(g, nk.head, cand, w.unite(others.minus(nk.head).minus(cand)));
      if (!arm || arm->length() > 10 * params.r) arm = connect_avoiding(g, nk.head, cand, w);
      if (!arm || arm->length() > 10 * params.r) {
        out.trace.push_back("head " + std::to_string(h) + ": no short arm to subexpander " +
                            std::to_string(f));
        continue;
      }
      std::vector<char> forbidden = inner;
      for (Vertex v : arm->interior()) forbidden[v] = 1;
      VertexSet leg = grow_leg(g, cand, arm->back(), params.r, params.s, forbidden);
      bool far = true;
      for (const VertexSet& l : nk.legs)
        if (!distance(g, leg, l).at_least(params.tau)) far = false;
      if (!far) {
        out.trace.push_back("head " + std::to_string(h) + ": leg from subexpander " +
                            std::to_string(f) + " is within tau of another leg");
        continue;
      }
      bool arm_clear = true;
      for (const VertexSet& l : nk.legs)
        for (Vertex v : arm->interior())
          if (l.contains(v)) arm_clear = false;
      if (!arm_clear) continue;
      for (Vertex v : arm->interior()) inner[v] = 1;
      nk.legs.push_back(leg);
      nk.arms.push_back(*arm);
      leg_source.push_back(f);
    }
    if (static_cast<int>(nk.legs.size()) < params.t) {
      out.trace.push_back("head " + std::to_string(h) + ": only " + std::to_string(nk.legs.size()) +
                          " legs");
      continue;
    }
    if (auto bad = validate_nakji(g, nk)) {
      out.trace.push_back("head " + std::to_string(h) + ": rejected (" + bad->clause + ")");
      continue;
    }
    out.trace.push_back("head " + std::to_string(h) + ": nakji with " + std::to_string(params.t) + " legs");
    used = used.unite(nk.vertices());
    consumed[h] = 1;
    for (std::size_t f : leg_source) consumed[f] = 1;
    out.nakjis.push_back(std::move(nk));
  }
  if (static_cast<int>(out.nakjis.size()) < count)
    out.trace.push_back("built " + std::to_string(out.nakjis.size()) + " of " + std::to_string(count));
  return out;
}

}  // namespace subdiv
