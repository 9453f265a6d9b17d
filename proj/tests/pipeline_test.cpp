//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "subdiv/extremal.hpp"
#include "subdiv/families.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/pipeline.hpp"

namespace subdiv {
namespace {

// A K_k at every vertex of `skeleton`; each skeleton edge becomes a path of
// `len` edges between members of the two cliques, spread round-robin.
Graph clump_host(const Graph& skeleton, Vertex k, int len) {
  std::vector<Edge> edges;
  Vertex n = skeleton.order() * k;
  for (Vertex c = 0; c < skeleton.order(); ++c)
    for (Vertex i = 0; i < k; ++i)
      for (Vertex j = i + 1; j < k; ++j) edges.push_back(Edge(c * k + i, c * k + j));
  std::vector<int> port(skeleton.order(), 0);
  for (const Edge& e : skeleton.edges()) {
    Vertex prev = e.u * k + port[e.u]++ % k;
    Vertex last = e.v * k + port[e.v]++ % k;
    for (int s = 1; s < len; ++s) {
      edges.push_back(Edge(prev, n));
      prev = n++;
    }
    edges.push_back(Edge(prev, last));
  }
  return Graph::from_edges(n, edges);
}

PipelineConfig no_high_degree() {
  PipelineConfig cfg;
  cfg.high_degree_cutoff = 1 << 20;
  cfg.use_oracle = false;
  return cfg;
}

// Every vertex subset of `within` minus the centre, checked for a set of
// paths from the centre meeting only there; tiny inputs only.
bool brute_fan_exists(const Graph& g, Vertex centre, const std::vector<Vertex>& targets, const VertexSet& within) {
  std::vector<Vertex> pool;
  for (Vertex v : within)
    if (v != centre) pool.push_back(v);
  // Assign every pool vertex to "unused" or one of the targets' paths, then
  // ask for a centre-to-target path inside each class.
  const int k = static_cast<int>(targets.size());
  std::vector<int> label(pool.size(), 0);
  while (true) {
    bool ok = true;
    for (int i = 0; i < k && ok; ++i) {
      std::vector<Vertex> cls{centre};
      for (std::size_t p = 0; p < pool.size(); ++p)
        if (label[p] == i + 1) cls.push_back(pool[p]);
      auto pos = std::find(pool.begin(), pool.end(), targets[i]);
      if (pos == pool.end() || label[pos - pool.begin()] != i + 1) ok = false;
      else ok = is_connected(induced_subgraph(g, VertexSet(cls)).graph);
    }
    if (ok) return true;
    std::size_t i = 0;
    while (i < pool.size() && ++label[i] == k + 1) label[i++] = 0;
    if (i == pool.size()) return false;
  }
}

// ------------------------------------------------------------ anchors

TEST(FarApartAnchors, Examples) {
  AnchorPacking c12 = far_apart_anchors(cycle_graph(12), 3, 4);
  EXPECT_EQ(c12.anchors, (VertexSet{0, 4, 8}));
  EXPECT_EQ(c12.deficiency, 0);
  AnchorPacking any = far_apart_anchors(complete_graph(5), 5, 0);
  EXPECT_EQ(any.anchors.size(), 5u);
  AnchorPacking partial = far_apart_anchors(path_graph(4), 9, 1);
  EXPECT_EQ(partial.anchors.size(), 4u);
  EXPECT_EQ(partial.deficiency, 5);
  EXPECT_EQ(far_apart_anchors(cycle_graph(12), 5, 4).deficiency, 2);
}

TEST(FarApartAnchors, PairwiseDistanceHolds) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_gnp(40, 0.08, rng);
    int min_dist = 1 + trial % 4;
    AnchorPacking p = far_apart_anchors(g, 10, min_dist);
    std::vector<Vertex> a = p.anchors.members();
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i + 1; j < a.size(); ++j)
        EXPECT_TRUE(distance(g, VertexSet{a[i]}, VertexSet{a[j]}).at_least(min_dist));
    EXPECT_EQ(p.deficiency, 10 - static_cast<int>(a.size()));
  }
}

// ------------------------------------------------------------ subexpanders

TEST(SubexpanderFamily, SeparatedCliquesGiveOneMemberEach) {
  for (int len : {3, 6, 10, 20}) {
    Graph g = clump_host(path_graph(3), 6, len);
    std::vector<Subexpander> family = subexpander_family(g, {}, 3.0, 1);
    ASSERT_EQ(family.size(), 3u) << len;
    std::set<std::vector<Vertex>> members;
    for (const Subexpander& s : family) members.insert(s.vertices.members());
    EXPECT_EQ(members, (std::set<std::vector<Vertex>>{{0, 1, 2, 3, 4, 5}, {6, 7, 8, 9, 10, 11},
                                                      {12, 13, 14, 15, 16, 17}}))
        << len;
  }
}

TEST(SubexpanderFamily, DenseClumpAndEmptyGraph) {
  EXPECT_EQ(subexpander_family(complete_graph(20), {}, 3.0, 1).size(), 1u);
  EXPECT_EQ(subexpander_family(complete_graph(9), {}, 3.0, 1).size(), 1u);
  EXPECT_TRUE(subexpander_family(Graph(0), {}, 3.0, 1).empty());
  EXPECT_TRUE(subexpander_family(Graph(7), {}, 3.0, 1).empty());
  EXPECT_THROW(subexpander_family(complete_graph(4), {}, 3.0, 1, 1), std::invalid_argument);
}

TEST(SubexpanderFamily, MembersAreSeparatedDenseAndAvoidTheBlockedSet) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 8; ++trial) {
    Graph g = clump_host(random_gnp(10, 0.3, rng), 5, 2 + trial % 3);
    VertexSet avoid{0, 1};
    int sep = 1 + trial % 2;
    std::vector<Subexpander> family = subexpander_family(g, avoid, 3.0, sep);
    for (std::size_t i = 0; i < family.size(); ++i) {
      EXPECT_TRUE(family[i].vertices.disjoint_from(avoid));
      EXPECT_GE(family[i].avg_degree, 3.0);
      EXPECT_LE(family[i].vertices.size(), 16u);
      for (std::size_t j = 0; j < i; ++j)
        EXPECT_TRUE(family[i].vertices.disjoint_from(ball(g, family[j].vertices, sep)));
    }
  }
}

// ------------------------------------------------------------ fans

TEST(FindFan, Examples) {
  Graph wheel = add_edges(disjoint_union(Graph(1), cycle_graph(6)),
                          {Edge(0, 1), Edge(0, 2), Edge(0, 3), Edge(0, 4), Edge(0, 5), Edge(0, 6)});
  auto fan = find_fan(wheel, 0, {1, 3, 5}, VertexSet::range(7));
  ASSERT_TRUE(fan);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ((*fan)[i].length(), 1);
  // From a rim vertex, three disjoint routes to the far side need the hub.
  auto rim = find_fan(wheel, 1, {3, 4, 5}, VertexSet::range(7));
  ASSERT_TRUE(rim);
  EXPECT_FALSE(find_fan(wheel, 1, {3, 4, 5}, VertexSet::range(7).minus(VertexSet{0})));
  EXPECT_FALSE(find_fan(path_graph(5), 2, {0, 4}, VertexSet{1, 2, 3, 4}));
  EXPECT_TRUE(find_fan(path_graph(5), 2, {}, VertexSet{2}).value().empty());
  EXPECT_THROW(find_fan(path_graph(5), 2, {2}, VertexSet::range(5)), std::invalid_argument);
  EXPECT_THROW(find_fan(path_graph(5), 2, {1, 1}, VertexSet::range(5)), std::invalid_argument);
}

TEST(FindFan, AgreesWithExhaustiveSearch) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = random_gnp(7, 0.35 + 0.05 * (trial % 5), rng);
    Vertex centre = static_cast<Vertex>(rng() % 7);
    std::vector<Vertex> others;
    for (Vertex v = 0; v < 7; ++v)
      if (v != centre) others.push_back(v);
    std::shuffle(others.begin(), others.end(), rng);
    std::vector<Vertex> targets(others.begin(), others.begin() + 1 + trial % 3);
    VertexSet within = VertexSet::range(7);
    auto fan = find_fan(g, centre, targets, within);
    EXPECT_EQ(fan.has_value(), brute_fan_exists(g, centre, targets, within)) << trial;
    if (!fan) continue;
    std::vector<Vertex> seen;
    for (std::size_t i = 0; i < targets.size(); ++i) {
      const Path& p = (*fan)[i];
      EXPECT_EQ(p.front(), centre);
      EXPECT_EQ(p.back(), targets[i]);
      EXPECT_EQ(path_problem(g, p), "");
      seen.insert(seen.end(), p.vertices.begin() + 1, p.vertices.end());
    }
    EXPECT_EQ(VertexSet(seen).size(), seen.size()) << trial;
  }
}

// ------------------------------------------------------------ embedding

TEST(EmbedSubdivision, CycleInCompleteGraph) {
  EmbedOutcome out = embed_subdivision(complete_graph(5), cycle_graph(4));
  ASSERT_TRUE(out.success());
  EXPECT_EQ(out.certificate->strategy, Strategy::kHighDegree);
  EXPECT_EQ(out.certificate->validation, "pass");
  EXPECT_FALSE(validate_subdivision(complete_graph(5), cycle_graph(4), out.certificate->map));
  EXPECT_TRUE(out.warnings.empty());
}

TEST(EmbedSubdivision, HexagonInCube) {
  Graph q3 = hypercube_graph(3);
  EmbedOutcome out = embed_subdivision(q3, cycle_graph(6));
  ASSERT_TRUE(out.success());
  EXPECT_FALSE(validate_subdivision(q3, cycle_graph(6), out.certificate->map));
  EXPECT_EQ(find_subdivision(q3, cycle_graph(6)).outcome, SearchOutcome::kFound);
}

TEST(EmbedSubdivision, NonBipartitePatternWarnsAndStillEmbeds) {
  EmbedOutcome out = embed_subdivision(complete_graph(4), complete_graph(4));
  ASSERT_TRUE(out.success());
  EXPECT_FALSE(out.warnings.empty());
  EXPECT_FALSE(validate_subdivision(complete_graph(4), complete_graph(4), out.certificate->map));
  std::vector<Vertex> anchors = out.certificate->map.anchors;
  std::sort(anchors.begin(), anchors.end());
  EXPECT_EQ(anchors, (std::vector<Vertex>{0, 1, 2, 3}));
}

TEST(EmbedSubdivision, DegreeCapIsEnforced) {
  PipelineConfig cfg;
  cfg.max_degree_cap = 3;
  EXPECT_THROW(embed_subdivision(complete_graph(6), complete_graph(5), cfg), std::invalid_argument);
  EXPECT_NO_THROW(embed_subdivision(complete_graph(6), complete_graph(4), cfg));
}

TEST(EmbedSubdivision, FailureListsEveryStrategy) {
  EmbedOutcome out = embed_subdivision(path_graph(6), cycle_graph(4));
  EXPECT_FALSE(out.success());
  ASSERT_EQ(out.attempts.size(), 4u);
  EXPECT_EQ(out.attempts[0].strategy, Strategy::kHighDegree);
  EXPECT_EQ(out.attempts[1].strategy, Strategy::kWeb);
  EXPECT_EQ(out.attempts[2].strategy, Strategy::kNakji);
  EXPECT_EQ(out.attempts[3].strategy, Strategy::kOracle);
  for (const StrategyAttempt& a : out.attempts) {
    EXPECT_FALSE(a.success);
    EXPECT_FALSE(a.reason.empty());
  }
  ASSERT_TRUE(out.oracle);
  EXPECT_EQ(*out.oracle, SearchOutcome::kAbsent);
}

TEST(EmbedSubdivision, HighDegreeAvoidanceSetIsCumulative) {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_gnp(60, 0.3, rng);
    Graph h = trial % 2 ? cycle_graph(6) : complete_bipartite_graph(2, 3);
    EmbedOutcome out = embed_subdivision(g, h);
    ASSERT_TRUE(out.success());
    const EmbedCertificate& cert = *out.certificate;
    if (cert.strategy != Strategy::kHighDegree) continue;
    ++checked;
    ASSERT_TRUE(cert.high_degree);
    const auto& sizes = cert.high_degree->avoid_sizes;
    ASSERT_EQ(sizes.size(), h.size());
    std::size_t running = static_cast<std::size_t>(h.order());
    for (std::size_t l = 0; l < sizes.size(); ++l) {
      EXPECT_EQ(sizes[l], running);
      running += cert.map.branch_paths[l].interior().size();
    }
    const std::vector<Vertex>& high = cert.high_degree->high;
    for (Vertex a : cert.map.anchors) EXPECT_NE(std::find(high.begin(), high.end(), a), high.end()) << a;
  }
  EXPECT_GT(checked, 0);
}

TEST(EmbedSubdivision, WebAnchoringOnSparseRandomHosts) {
  std::mt19937_64 rng(1);
  for (Vertex n : {100, 200}) {
    Graph g = random_gnp(n, 8.0 / n, rng);
    Graph h = cycle_graph(4);
    EmbedOutcome out = embed_subdivision(g, h, no_high_degree());
    ASSERT_TRUE(out.success()) << n;
    const EmbedCertificate& cert = *out.certificate;
    EXPECT_EQ(cert.strategy, Strategy::kWeb);
    EXPECT_FALSE(validate_subdivision(g, h, cert.map));
    ASSERT_TRUE(cert.web);
    WebShape shape;
    shape.h0 = cert.config.web_arms;
    shape.unit = {cert.config.web_spokes, cert.config.web_star_leaves, cert.config.web_spoke_length};
    VertexSet seen;
    for (const Web& w : cert.web->webs) {
      EXPECT_FALSE(validate_web(g, w, shape));
      EXPECT_TRUE(w.vertices().disjoint_from(seen));
      seen = seen.unite(w.vertices());
    }
    // Every anchor is the core of the web its vertex ended on.
    for (Vertex x = 0; x < h.order(); ++x)
      EXPECT_EQ(cert.map.anchors[x], cert.web->webs[cert.web->final_web[x]].core);
    // Evicted webs never come back.
    std::set<int> evicted;
    for (const WebStep& s : cert.web->steps) {
      EXPECT_EQ(evicted.count(s.web), 0u);
      evicted.insert(s.evicted.begin(), s.evicted.end());
    }
  }
}

TEST(EmbedSubdivision, NakjiWiringOnClumpHosts) {
  int wired = 0;
  for (std::uint64_t seed = 1; seed <= 4; ++seed) {
    std::mt19937_64 rng(seed);
    Graph g = clump_host(random_gnp(30, 0.3, rng), 5, 3);
    PipelineConfig cfg = no_high_degree();
    cfg.web_count = 1;  // starve web anchoring so nakji wiring runs
    for (const Graph& h : {cycle_graph(4), path_graph(3)}) {
      EmbedOutcome out = embed_subdivision(g, h, cfg);
      ASSERT_EQ(out.attempts.size(), out.success() ? 3u : 4u);
      if (!out.success()) continue;
      ++wired;
      const EmbedCertificate& cert = *out.certificate;
      ASSERT_EQ(cert.strategy, Strategy::kNakji);
      EXPECT_FALSE(validate_subdivision(g, h, cert.map));
      ASSERT_TRUE(cert.nakji);
      EXPECT_EQ(cert.nakji->connections.size(), h.size());
      VertexSet seen;
      for (const Nakji& nk : cert.nakji->nakjis) {
        EXPECT_FALSE(validate_nakji(g, nk));
        EXPECT_TRUE(nk.vertices().disjoint_from(seen));
        seen = seen.unite(nk.vertices());
        for (const Path& arm : nk.arms) EXPECT_LE(arm.length(), 10 * cert.config.nakji_radius);
      }
      for (Vertex x = 0; x < h.order(); ++x)
        EXPECT_TRUE(cert.nakji->nakjis[x].head.contains(cert.map.anchors[x]));
    }
  }
  EXPECT_GE(wired, 6);
}

TEST(EmbedSubdivision, CertificateRecordsResolvedDials) {
  Graph g = complete_graph(7);
  EmbedOutcome out = embed_subdivision(g, cycle_graph(4));
  ASSERT_TRUE(out.success());
  const PipelineConfig& cfg = out.certificate->config;
  EXPECT_GT(cfg.high_degree_cutoff, 0);
  EXPECT_EQ(cfg.web_arms, 3);
  EXPECT_EQ(cfg.web_count, 8);
  EXPECT_EQ(cfg.nakji_legs, 2);
  EXPECT_EQ(out.certificate->host_fingerprint, graph_fingerprint(g));
  EXPECT_EQ(out.certificate->expander_vertices.size(), 7u);
}

// Pipeline successes always validate and never contradict a proof of
// absence from the oracle.
TEST(EmbedSubdivision, AgreesWithTheOracle) {
  std::mt19937_64 rng(2026);
  int contradictions = 0, successes = 0, absences = 0;
  for (int trial = 0; trial < 100; ++trial) {
    Vertex hn = 3 + static_cast<Vertex>(rng() % 4);
    Graph h = random_gnp(hn, 0.5, rng);
    if (h.size() == 0) h = path_graph(hn);
    Graph g = random_gnp(6 + static_cast<Vertex>(rng() % 9), 0.25 + 0.05 * (trial % 8), rng);
    EmbedOutcome out = embed_subdivision(g, h);
    SubdivisionSearch oracle = find_subdivision(g, h);
    if (out.success()) {
      ++successes;
      if (validate_subdivision(g, h, out.certificate->map)) ++contradictions;
      if (oracle.outcome == SearchOutcome::kAbsent) ++contradictions;
    }
    if (oracle.outcome == SearchOutcome::kAbsent) ++absences;
  }
  EXPECT_EQ(contradictions, 0);
  EXPECT_GT(successes, 0);
  EXPECT_GT(absences, 0);
}

}  // namespace
}  // namespace subdiv
