//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <functional>
#include <random>

#include <gtest/gtest.h>

#include "subdiv/families.hpp"
#include "subdiv/structures.hpp"

namespace subdiv {
namespace {

std::string clause_of(const StructureCheck& c) { return c ? c->clause : ""; }

// ------------------------------------------------------------ validators

TEST(ValidateSun, EvenCycleIsALeaflessSun) {
  Sun s{{0, 1, 2, 3, 4, 5}, {}};
  EXPECT_FALSE(validate_sun(cycle_graph(6), s));
  EXPECT_EQ(s.a(), 3);
  EXPECT_EQ(s.b(), 0);
}

TEST(ValidateSun, ClausesAreNamed) {
  Graph c6_leaves = add_edges(disjoint_union(cycle_graph(6), Graph(2)), {Edge(1, 6), Edge(0, 7)});
  EXPECT_FALSE(validate_sun(c6_leaves, Sun{{0, 1, 2, 3, 4, 5}, {{6, 1}}}));
  EXPECT_EQ(clause_of(validate_sun(c6_leaves, Sun{{0, 1, 2, 3, 4, 5}, {{7, 0}}})), "attachment");
  Graph two_on_one = add_edges(c6_leaves, {Edge(1, 7)});
  EXPECT_EQ(clause_of(validate_sun(two_on_one, Sun{{0, 1, 2, 3, 4, 5}, {{6, 1}, {7, 1}}})),
            "one leaf per vertex");
  EXPECT_EQ(clause_of(validate_sun(cycle_graph(5), Sun{{0, 1, 2, 3, 4}, {}})), "even cycle");
  EXPECT_EQ(clause_of(validate_sun(cycle_graph(6), Sun{{0, 1, 2, 4, 3, 5}, {}})), "even cycle");
  EXPECT_EQ(clause_of(validate_sun(c6_leaves, Sun{{0, 1, 2, 3, 4, 5}, {{6, 3}}})), "attachment");
}

TEST(ValidateUnit, StarOnTheSpokeFailsDisjointness) {
  Unit u{0, {Path{{0, 1}}}, {Star{1, {0, 2, 3}}}};
  EXPECT_EQ(clause_of(validate_unit(star_graph(3), u, UnitShape{1, 3, 1})), "star-disjointness");
}

// Core 0, spokes 0-1-2 and 0-3-4, stars 2:{5,6} and 4:{7,8}.
Unit prebuilt_unit() {
  return Unit{0, {Path{{0, 1, 2}}, Path{{0, 3, 4}}}, {Star{2, {5, 6}}, Star{4, {7, 8}}}};
}

Graph unit_host(const Unit& u, Vertex n) {
  std::vector<Edge> es;
  for (const Path& p : u.spokes)
    for (std::size_t k = 1; k < p.vertices.size(); ++k) es.emplace_back(p.vertices[k - 1], p.vertices[k]);
  for (const Star& s : u.stars)
    for (Vertex w : s.leaves) es.emplace_back(s.centre, w);
  return Graph::from_edges(n, es);
}

TEST(ValidateUnit, PartsAndPaths) {
  Unit u = prebuilt_unit();
  Graph host = unit_host(u, 9);
  EXPECT_FALSE(validate_unit(host, u, UnitShape{2, 2, 2}));
  EXPECT_EQ(u.exterior(), (VertexSet{5, 6, 7, 8}));
  EXPECT_EQ(u.interior(), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(u.path_to(7).vertices, (std::vector<Vertex>{0, 3, 4, 7}));
  EXPECT_THROW(u.path_to(1), GraphError);
  EXPECT_EQ(clause_of(validate_unit(host, u, UnitShape{2, 2, 1})), "spoke length");
  EXPECT_EQ(clause_of(validate_unit(host, u, UnitShape{2, 3, 2})), "star size");
  EXPECT_EQ(clause_of(validate_unit(host, u, UnitShape{3, 2, 2})), "spoke count");
  Unit zero = u;
  zero.spokes[0] = Path{{0}};
  zero.stars[0].centre = 0;
  EXPECT_EQ(clause_of(validate_unit(host, zero, UnitShape{2, 2, 2})), "length-0 spoke");
  Unit crossing = u;
  crossing.spokes[1] = Path{{0, 1, 2}};
  EXPECT_NE(clause_of(validate_unit(host, crossing, UnitShape{2, 2, 2})), "");
}

// Core 0 with arms 0-1-2 and 0-3-4; a (2,2,2)-unit hangs off 2 and off 4.
Web prebuilt_web() {
  Unit a{2, {Path{{2, 5, 6}}, Path{{2, 7, 8}}}, {Star{6, {9, 10}}, Star{8, {11, 12}}}};
  Unit b{4, {Path{{4, 13, 14}}, Path{{4, 15, 16}}}, {Star{14, {17, 18}}, Star{16, {19, 20}}}};
  return Web{0, {Path{{0, 1, 2}}, Path{{0, 3, 4}}}, {a, b}};
}

Graph web_host(const Web& w, Vertex n) {
  std::vector<Edge> es;
  auto add_path = [&](const Path& p) {
    for (std::size_t k = 1; k < p.vertices.size(); ++k) es.emplace_back(p.vertices[k - 1], p.vertices[k]);
  };
  for (const Path& p : w.arms) add_path(p);
  for (const Unit& u : w.units) {
    for (const Path& p : u.spokes) add_path(p);
    for (const Star& s : u.stars)
      for (Vertex x : s.leaves) es.emplace_back(s.centre, x);
  }
  return Graph::from_edges(n, es);
}

TEST(ValidateWeb, PrebuiltWebAndItsPartition) {
  Web w = prebuilt_web();
  Graph host = web_host(w, 21);
  WebShape shape{2, {2, 2, 2}};
  EXPECT_FALSE(validate_web(host, w, shape));
  EXPECT_EQ(w.exterior(), (VertexSet{9, 10, 11, 12, 17, 18, 19, 20}));
  EXPECT_EQ(w.centre(), (VertexSet{0, 1, 2, 3, 4}));
  EXPECT_EQ(w.interior().size() + w.exterior().size(), 21u);
  EXPECT_EQ(w.path_to(19).vertices, (std::vector<Vertex>{0, 3, 4, 15, 16, 19}));
  Web short_arms = w;
  EXPECT_EQ(clause_of(validate_web(host, short_arms, WebShape{2, {2, 2, 1}})), "arm length");
  Web overlap = w;
  overlap.units[1] = overlap.units[0];
  EXPECT_NE(clause_of(validate_web(host, overlap, shape)), "");
}

TEST(ValidateNakji, AdjacentLegsAreTooClose) {
  // Head {0}; legs {2} and {3}; arms 0-1-2 and 0-4-3; legs 2 and 3 adjacent.
  Graph g = Graph::from_edges(5, {Edge(0, 1), Edge(1, 2), Edge(0, 4), Edge(4, 3), Edge(2, 3)});
  Nakji nk{{0}, {{2}, {3}}, {Path{{0, 1, 2}}, Path{{0, 4, 3}}}, NakjiParams{2, 1, 1, 2}};
  EXPECT_EQ(clause_of(validate_nakji(g, nk)), "distance at least tau");
  Graph apart = Graph::from_edges(5, {Edge(0, 1), Edge(1, 2), Edge(0, 4), Edge(4, 3)});
  EXPECT_FALSE(validate_nakji(apart, nk));
}

TEST(ValidateNakji, OtherClauses) {
  Graph g = path_graph(9);
  Nakji nk{{4}, {{0, 1}, {8}}, {Path{{4, 3, 2, 1}}, Path{{4, 5, 6, 7, 8}}}, NakjiParams{2, 2, 1, 3}};
  EXPECT_FALSE(validate_nakji(g, nk));
  Nakji wide = nk;
  wide.legs[0] = {0, 2};
  wide.arms[0] = Path{{4, 3, 2}};
  EXPECT_EQ(clause_of(validate_nakji(g, wide)), "leg diameter");
  Nakji through = nk;
  through.legs[0] = {1, 2};
  through.arms[0] = Path{{4, 3, 2, 1}};
  EXPECT_EQ(clause_of(validate_nakji(g, through)), "legs disjoint from arm interiors");
  Nakji long_arm = nk;
  long_arm.params.r = 0;
  EXPECT_EQ(clause_of(validate_nakji(g, long_arm)), "arm length");
  Nakji big = nk;
  big.params.s = 1;
  EXPECT_EQ(clause_of(validate_nakji(g, big)), "leg size");
}

// ------------------------------------------------------------ stars

TEST(DisjointStars, Examples) {
  Graph stars = disjoint_union(disjoint_union(star_graph(3), star_graph(3)), star_graph(3));
  StarHarvest h = find_disjoint_stars(stars, {}, 3, 3);
  ASSERT_EQ(h.stars.size(), 3u);
  EXPECT_EQ(h.deficiency, 0);
  EXPECT_EQ(h.stars[0].centre, 0);
  EXPECT_EQ(h.stars[1].centre, 4);
  EXPECT_EQ(h.stars[2].centre, 8);
  EXPECT_EQ(find_disjoint_stars(complete_graph(5), {}, 1, 4).stars.size(), 1u);
  StarHarvest partial = find_disjoint_stars(complete_graph(5), {}, 2, 2);
  EXPECT_EQ(partial.stars.size(), 1u);
  EXPECT_EQ(partial.deficiency, 1);
}

TEST(DisjointStars, RespectAvoidAndDisjointness) {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_gnp(25, 0.2, rng);
    VertexSet avoid{1, 5, 9};
    StarHarvest h = find_disjoint_stars(g, avoid, 100, 2);
    std::vector<Vertex> all;
    for (const Star& s : h.stars) {
      all.push_back(s.centre);
      for (Vertex w : s.leaves) {
        EXPECT_TRUE(g.adjacent(s.centre, w));
        all.push_back(w);
      }
    }
    EXPECT_EQ(VertexSet(all).size(), all.size());
    EXPECT_TRUE(VertexSet(all).disjoint_from(avoid));
  }
}

// ------------------------------------------------------------ units

TEST(BuildUnit, RecognisesPrebuiltUnit) {
  Unit u = prebuilt_unit();
  Graph host = disjoint_union(unit_host(u, 9), Graph(4));
  BuildBudget budget;
  UnitBuild b = build_unit(host, {}, UnitShape{2, 2, 2}, budget);
  ASSERT_TRUE(b.unit);
  EXPECT_FALSE(validate_unit(host, *b.unit, UnitShape{2, 2, 2}));
  EXPECT_EQ(b.unit->vertices(), u.vertices());
}

TEST(BuildUnit, DenseHostAdmitsOne) {
  Graph k9 = complete_graph(9);
  BuildBudget budget;
  UnitBuild b = build_unit(k9, {}, UnitShape{2, 2, 2}, budget);
  ASSERT_TRUE(b.unit);
  EXPECT_FALSE(validate_unit(k9, *b.unit, UnitShape{2, 2, 2}));
}

TEST(BuildUnit, EmptyGraphFails) {
  BuildBudget budget;
  UnitBuild b = build_unit(Graph(6), {}, UnitShape{2, 2, 2}, budget);
  EXPECT_FALSE(b.unit);
  EXPECT_FALSE(b.trace.empty());
}

TEST(BuildUnit, PinnedCoreAndAvoid) {
  Graph k9 = complete_graph(9);
  BuildBudget budget;
  UnitBuild b = build_unit(k9, {0, 1}, UnitShape{2, 2, 2}, budget, 5);
  ASSERT_TRUE(b.unit);
  EXPECT_EQ(b.unit->core, 5);
  EXPECT_TRUE(b.unit->vertices().disjoint_from({0, 1}));
  EXPECT_THROW(build_unit(k9, {0}, UnitShape{2, 2, 2}, budget, 0), GraphError);
}

// Independent existence check: every core, every h1-combination of simple
// paths of length <= h3, leaves chosen by plain recursion.
bool unit_exists(const Graph& g, const UnitShape& shape) {
  const Vertex n = g.order();
  for (Vertex u = 0; u < n; ++u) {
    std::vector<std::vector<Vertex>> paths;
    std::vector<Vertex> walk{u};
    std::function<void()> grow = [&]() {
      if (walk.size() > 1) paths.push_back(walk);
      if (static_cast<int>(walk.size()) - 1 == shape.h3) return;
      for (Vertex w : g.neighbors(walk.back())) {
        if (std::find(walk.begin(), walk.end(), w) != walk.end()) continue;
        walk.push_back(w);
        grow();
        walk.pop_back();
      }
    };
    grow();
    std::vector<int> pick;
    std::function<bool(std::size_t)> choose = [&](std::size_t from) -> bool {
      if (static_cast<int>(pick.size()) == shape.h1) {
        std::vector<char> used(n, 0);
        used[u] = 1;
        std::vector<Vertex> centres;
        for (int i : pick) {
          for (std::size_t k = 1; k < paths[i].size(); ++k) {
            if (used[paths[i][k]]) return false;
            used[paths[i][k]] = 1;
          }
          centres.push_back(paths[i].back());
        }
        std::function<bool(std::size_t, int)> leaves = [&](std::size_t c, int got) -> bool {
          if (c == centres.size()) return true;
          if (got == shape.h2) return leaves(c + 1, 0);
          for (Vertex w : g.neighbors(centres[c])) {
            if (used[w]) continue;
            used[w] = 1;
            bool ok = leaves(c, got + 1);
            used[w] = 0;
            if (ok) return true;
          }
          return false;
        };
        return leaves(0, 0);
      }
      for (std::size_t i = from; i < paths.size(); ++i) {
        pick.push_back(static_cast<int>(i));
        if (choose(i + 1)) return true;
        pick.pop_back();
      }
      return false;
    };
    if (choose(0)) return true;
  }
  return false;
}

TEST(BuildUnit, AgreesWithExistenceOracle) {
  std::mt19937_64 rng(12);
  int found = 0, missing = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Vertex n = 6 + trial % 3;
    Graph g = random_gnp(n, 0.25 + 0.05 * (trial % 5), rng);
    UnitShape shape{2, 1 + trial % 2, 1 + (trial / 2) % 2};
    BuildBudget budget;
    UnitBuild b = build_unit(g, {}, shape, budget);
    ASSERT_FALSE(b.budget_exhausted);
    bool exists = unit_exists(g, shape);
    EXPECT_EQ(b.unit.has_value(), exists) << "trial " << trial;
    if (b.unit) {
      EXPECT_FALSE(validate_unit(g, *b.unit, shape));
      ++found;
    } else {
      ++missing;
    }
  }
  EXPECT_GT(found, 0);
  EXPECT_GT(missing, 0);
}

// ------------------------------------------------------------ webs

TEST(BuildWeb, RecognisesPrebuiltWebInNoise) {
  Web w = prebuilt_web();
  Graph host = disjoint_union(web_host(w, 21), path_graph(6));
  host = add_edges(host, {Edge(9, 21), Edge(20, 26)});
  WebShape shape{2, {2, 2, 2}};
  BuildBudget budget;
  WebBuild b = build_web(host, {}, shape, budget);
  ASSERT_TRUE(b.web) << b.trace.back();
  EXPECT_FALSE(validate_web(host, *b.web, shape));
}

TEST(BuildWeb, DenseHost) {
  Graph k15 = complete_graph(15);
  WebShape shape{1, {2, 2, 3}};
  BuildBudget budget;
  WebBuild b = build_web(k15, {}, shape, budget);
  ASSERT_TRUE(b.web);
  EXPECT_FALSE(validate_web(k15, *b.web, shape));
}

TEST(BuildWeb, PathHostFails) {
  BuildBudget budget;
  WebBuild b = build_web(path_graph(30), {}, WebShape{1, {2, 2, 3}}, budget);
  EXPECT_FALSE(b.web);
}

TEST(BuildWeb, RandomOutputsValidate) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 10; ++trial) {
    Graph g = random_gnp(30, 0.2, rng);
    WebShape shape{2, {2, 2, 2}};
    BuildBudget budget;
    budget.max_nodes = 300000;
    WebBuild b = build_web(g, {0}, shape, budget);
    if (b.web) {
      EXPECT_FALSE(validate_web(g, *b.web, shape));
      EXPECT_FALSE(b.web->vertices().contains(0));
    }
  }
}

// ------------------------------------------------------------ cycles and suns

// Longest cycle of the given parity by trying every vertex sequence.
std::size_t longest_cycle_brute(const Graph& g, CycleParity parity) {
  std::size_t best = 0;
  std::vector<Vertex> seq;
  std::vector<char> on(g.order(), 0);
  std::function<void()> rec = [&]() {
    if (seq.size() >= 3 && g.adjacent(seq.back(), seq.front())) {
      bool ok = parity == CycleParity::kAny || (parity == CycleParity::kOdd) == (seq.size() % 2 == 1);
      if (ok) best = std::max(best, seq.size());
    }
    for (Vertex w = 0; w < g.order(); ++w) {
      if (on[w] || (!seq.empty() && !g.adjacent(seq.back(), w))) continue;
      on[w] = 1;
      seq.push_back(w);
      rec();
      seq.pop_back();
      on[w] = 0;
    }
  };
  rec();
  return best;
}

TEST(LongestCycle, ExactAgainstBruteForce) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_gnp(5 + trial % 4, 0.45, rng);
    for (CycleParity parity : {CycleParity::kAny, CycleParity::kOdd, CycleParity::kEven}) {
      CycleSearch c = longest_cycle(g, parity);
      EXPECT_TRUE(c.exact);
      EXPECT_EQ(c.cycle.size(), longest_cycle_brute(g, parity));
      for (std::size_t i = 0; i < c.cycle.size(); ++i)
        EXPECT_TRUE(g.adjacent(c.cycle[i], c.cycle[(i + 1) % c.cycle.size()]));
    }
  }
}

TEST(LongestCycle, HeuristicAboveTheCap) {
  CycleSearch c = longest_cycle(hypercube_graph(5), CycleParity::kEven, 3);
  EXPECT_FALSE(c.exact);
  EXPECT_GE(c.cycle.size(), 16u);
  for (std::size_t i = 0; i < c.cycle.size(); ++i)
    EXPECT_TRUE(hypercube_graph(5).adjacent(c.cycle[i], c.cycle[(i + 1) % c.cycle.size()]));
}

TEST(FindSun, Examples) {
  SunSearch c6 = find_sun(cycle_graph(6), 3);
  ASSERT_TRUE(c6.sun);
  EXPECT_EQ(c6.sun->a(), 3);
  EXPECT_EQ(c6.sun->b(), 0);

  Graph k24 = complete_bipartite_graph(2, 4);
  SunSearch s = find_sun(k24, 3);
  ASSERT_TRUE(s.sun);
  EXPECT_EQ(s.sun->a(), 2);
  EXPECT_EQ(s.sun->b(), 1);
  EXPECT_FALSE(validate_sun(k24, *s.sun));
  EXPECT_TRUE(VertexSet(s.sun->cycle).contains(0));
  EXPECT_TRUE(VertexSet(s.sun->cycle).contains(1));

  SunSearch k4 = find_sun(complete_graph(4), 3);
  ASSERT_TRUE(k4.odd_cycle);
  EXPECT_EQ(k4.odd_cycle->size(), 3u);
  EXPECT_FALSE(k4.sun);

  EXPECT_FALSE(find_sun(complete_graph(4), 4).found());
  EXPECT_THROW(find_sun(disjoint_union(cycle_graph(4), cycle_graph(4)), 2), GraphError);
}

TEST(FindSun, OutputAlwaysMeetsTheTarget) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> side;
    Graph g = random_banded_bipartite(12, 5, 0.6, rng, &side);
    if (!is_connected(g)) continue;
    for (int r0 = 2; r0 <= 8; ++r0) {
      SunSearch s = find_sun(g, r0);
      if (!s.sun) continue;
      EXPECT_GE(s.sun->a() + s.sun->b(), r0);
      EXPECT_FALSE(validate_sun(g, *s.sun));
    }
  }
}

// ------------------------------------------------------------ nakjis

TEST(BuildNakjis, RecognisesHandBuiltNakji) {
  // Head 0-1; arm 0-2-3-4-5 to leg 5-6; arm 1-7-8-9-10 to leg 10-11.
  Graph g = Graph::from_edges(12, {Edge(0, 1), Edge(0, 2), Edge(2, 3), Edge(3, 4), Edge(4, 5),
                                   Edge(5, 6), Edge(1, 7), Edge(7, 8), Edge(8, 9), Edge(9, 10),
                                   Edge(10, 11)});
  NakjiParams p{2, 2, 1, 3};
  NakjiBuild b = build_nakjis(g, {}, p, 1, {{0, 1}, {5, 6}, {10, 11}});
  ASSERT_EQ(b.nakjis.size(), 1u);
  const Nakji& nk = b.nakjis[0];
  EXPECT_EQ(nk.head, (VertexSet{0, 1}));
  EXPECT_EQ(nk.legs[0], (VertexSet{5, 6}));
  EXPECT_EQ(nk.legs[1], (VertexSet{10, 11}));
  EXPECT_EQ(nk.arms[0].vertices, (std::vector<Vertex>{0, 2, 3, 4, 5}));
  EXPECT_EQ(nk.arms[1].vertices, (std::vector<Vertex>{1, 7, 8, 9, 10}));
}

TEST(BuildNakjis, SingleLeg) {
  NakjiBuild b = build_nakjis(path_graph(10), {}, NakjiParams{1, 2, 1, 3}, 1, {{0, 1}, {8, 9}});
  ASSERT_EQ(b.nakjis.size(), 1u);
  EXPECT_EQ(b.nakjis[0].arms[0].vertices, (std::vector<Vertex>{1, 2, 3, 4, 5, 6, 7, 8}));
  EXPECT_FALSE(validate_nakji(path_graph(10), b.nakjis[0]));
}

TEST(BuildNakjis, CentralCliqueBecomesTheHead) {
  // Central K4 on 0..3; outer K4s on 4..7, 8..11, 12..15; each joined to
  // the centre by a path of length 5 through four fresh vertices.
  Graph g = disjoint_union(disjoint_union(complete_graph(4), complete_graph(4)),
                           disjoint_union(complete_graph(4), complete_graph(4)));
  g = disjoint_union(g, Graph(12));
  std::vector<Edge> links;
  for (int k = 0; k < 3; ++k) {
    Vertex from = static_cast<Vertex>(k);
    Vertex to = static_cast<Vertex>(4 + 4 * k);
    Vertex first = static_cast<Vertex>(16 + 4 * k);
    links.emplace_back(from, first);
    for (int j = 0; j < 3; ++j) links.emplace_back(first + j, first + j + 1);
    links.emplace_back(first + 3, to);
  }
  g = add_edges(g, links);
  std::vector<VertexSet> subs{{0, 1, 2, 3}, {4, 5, 6, 7}, {8, 9, 10, 11}, {12, 13, 14, 15}};
  NakjiBuild b = build_nakjis(g, {}, NakjiParams{3, 4, 1, 3}, 1, subs);
  ASSERT_EQ(b.nakjis.size(), 1u);
  EXPECT_EQ(b.nakjis[0].head, subs[0]);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(b.nakjis[0].legs[k], subs[k + 1]);
    EXPECT_EQ(b.nakjis[0].arms[k].length(), 5);
  }
  EXPECT_FALSE(validate_nakji(g, b.nakjis[0]));
}

TEST(BuildNakjis, InsufficientMaterialIsPartial) {
  NakjiBuild b = build_nakjis(path_graph(6), {}, NakjiParams{2, 1, 1, 2}, 1, {{0}, {5}});
  EXPECT_TRUE(b.nakjis.empty());
  EXPECT_FALSE(b.trace.empty());
}

TEST(BuildNakjis, RandomOutputsValidate) {
  std::mt19937_64 rng(44);
  for (int trial = 0; trial < 15; ++trial) {
    Graph g = random_gnp(60, 0.05, rng);
    std::vector<VertexSet> subs;
    for (Vertex v = 0; v < 60; v += 6) subs.push_back(ball(g, {v}, 1).intersect(VertexSet::range(60)));
    std::vector<VertexSet> disjoint;
    VertexSet taken;
    for (const VertexSet& s : subs)
      if (s.disjoint_from(taken)) {
        disjoint.push_back(s);
        taken = taken.unite(s);
      }
    NakjiBuild b = build_nakjis(g, {}, NakjiParams{2, 4, 2, 2}, 3, disjoint);
    VertexSet seen;
    for (const Nakji& nk : b.nakjis) {
      EXPECT_FALSE(validate_nakji(g, nk));
      EXPECT_TRUE(nk.vertices().disjoint_from(seen));
      seen = seen.unite(nk.vertices());
    }
  }
}

}  // namespace
}  // namespace subdiv
