//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "subdiv/families.hpp"
#include "subdiv/serialize.hpp"

namespace subdiv {
namespace {

int count_lines_with(const std::string& text, const std::string& needle) {
  std::istringstream in(text);
  std::string line;
  int count = 0;
  while (std::getline(in, line))
    if (line.find(needle) != std::string::npos) ++count;
  return count;
}

TEST(Schema, DocumentsCarryAVersionedSchemaFirst) {
  Json doc = document("graph", to_json(cycle_graph(4)));
  EXPECT_EQ(doc.begin().key(), "schema");
  EXPECT_EQ(doc["schema"], "subdivkit.graph.v1");
  EXPECT_EQ(doc["n"], 4);
  EXPECT_NO_THROW(expect_schema(doc, "graph"));
  EXPECT_THROW(expect_schema(doc, "embed"), std::invalid_argument);
  EXPECT_THROW(expect_schema(Json::object(), "graph"), std::invalid_argument);
  Json old = doc;
  old["schema"] = "subdivkit.graph.v0";
  EXPECT_THROW(expect_schema(old, "graph"), std::invalid_argument);
}

TEST(RoundTrip, Graphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = random_gnp(1 + trial, 0.3, rng);
    Json j = Json::parse(to_json(g).dump());
    EXPECT_EQ(graph_from_json(j), g);
  }
  EXPECT_THROW(graph_from_json(Json{{"n", 3}}), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 0]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1], [1, 0]]})")), std::invalid_argument);
  EXPECT_THROW(graph_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1, 2]]})")), std::invalid_argument);
}

TEST(RoundTrip, SubdivisionMapsAndConfigs) {
  Graph g = hypercube_graph(3);
  EmbedOutcome out = embed_subdivision(g, cycle_graph(6));
  ASSERT_TRUE(out.success());
  Json j = Json::parse(to_json(out.certificate->map).dump());
  SubdivisionMap back = subdivision_map_from_json(j);
  EXPECT_EQ(back.anchors, out.certificate->map.anchors);
  EXPECT_EQ(back.branch_paths, out.certificate->map.branch_paths);
  EXPECT_FALSE(validate_subdivision(g, cycle_graph(6), back));

  PipelineConfig cfg;
  cfg.eps2 = 0.15;
  cfg.web_count = 9;
  cfg.use_oracle = false;
  cfg.seed = 77;
  cfg.oracle_limits.node_budget = 1234;
  PipelineConfig again = pipeline_config_from_json(Json::parse(to_json(cfg).dump()));
  EXPECT_EQ(to_json(again), to_json(cfg));
  EXPECT_EQ(again.web_count, 9);
  EXPECT_EQ(again.oracle_limits.node_budget, 1234);
  // Missing keys keep their defaults; mistyped keys are rejected.
  EXPECT_EQ(pipeline_config_from_json(Json::object()).nakji_size, PipelineConfig{}.nakji_size);
  EXPECT_THROW(pipeline_config_from_json(Json{{"web_count", "many"}}), std::invalid_argument);
  EXPECT_THROW(subdivision_map_from_json(Json{{"anchors", Json::array()}}), std::invalid_argument);
}

TEST(Certificates, EmbedOutcomeIsDeterministic) {
  Graph g = complete_graph(6);
  std::string first = document("embed", to_json(embed_subdivision(g, cycle_graph(4)))).dump(2);
  std::string second = document("embed", to_json(embed_subdivision(g, cycle_graph(4)))).dump(2);
  EXPECT_EQ(first, second);
  Json doc = Json::parse(first);
  EXPECT_EQ(doc["success"], true);
  EXPECT_EQ(doc["certificate"]["validation"], "pass");
  EXPECT_EQ(doc["certificate"]["strategy"], "high-degree");
  EXPECT_EQ(doc["certificate"]["host_fingerprint"], graph_fingerprint(g));
  EXPECT_TRUE(doc["certificate"]["traces"].contains("high_degree"));
  EXPECT_EQ(doc["certificate"]["config"]["web_arms"], 3);
}

TEST(Certificates, FailedEmbeddingListsReasons) {
  Json doc = to_json(embed_subdivision(path_graph(5), cycle_graph(4)));
  EXPECT_EQ(doc["success"], false);
  EXPECT_TRUE(doc["certificate"].is_null());
  ASSERT_EQ(doc["attempts"].size(), 4u);
  EXPECT_EQ(doc["attempts"][3]["strategy"], "oracle");
  EXPECT_EQ(doc["oracle"], "absent");
}

TEST(Certificates, ExpanderAndStructures) {
  ExtractionResult r = extract_expander(complete_graph(6), 0.003, 0.1);
  Json j = to_json(r);
  EXPECT_EQ(j["host_ids"].size(), 6u);
  EXPECT_EQ(j["certificate"]["passed"], true);
  EXPECT_EQ(j["certificate"]["mode"], "exhaustive");

  Unit u;
  u.core = 0;
  u.spokes = {Path{{0, 1}}};
  u.stars = {Star{1, {2, 3}}};
  Json ju = to_json(u);
  EXPECT_EQ(ju["interior"], Json::parse("[0, 1]"));
  EXPECT_EQ(ju["exterior"], Json::parse("[2, 3]"));
  EXPECT_TRUE(to_json(StructureCheck{}).is_null());
  EXPECT_EQ(to_json(StructureCheck{Violation{"star edge", "1-2"}})["clause"], "star edge");
}

TEST(Dot, GraphRendering) {
  std::string dot = to_dot(cycle_graph(5));
  EXPECT_EQ(dot.rfind("graph G {", 0), 0u);
  EXPECT_EQ(count_lines_with(dot, " -- "), 5);
  EXPECT_EQ(count_lines_with(dot, "[label="), 5);
  EXPECT_EQ(count_lines_with(dot, "fillcolor"), 0);
  DotStyle style = vertex_set_style(VertexSet{1, 3}, "red");
  style.edge_colour[Edge(0, 1)] = "blue";
  style.edge_width[Edge(0, 1)] = 2.5;
  std::string styled = to_dot(cycle_graph(5), style);
  EXPECT_EQ(count_lines_with(styled, "fillcolor=\"red\""), 2);
  EXPECT_EQ(count_lines_with(styled, "0 -- 1 [color=\"blue\", penwidth=2.5]"), 1);
}

TEST(Dot, StylesMarkTheirRoles) {
  Unit u;
  u.core = 0;
  u.spokes = {Path{{0, 1}}};
  u.stars = {Star{1, {2, 3}}};
  DotStyle us = structure_style(u);
  EXPECT_EQ(us.fill.at(0), "red");
  EXPECT_EQ(us.fill.at(1), "orange");
  EXPECT_EQ(us.fill.at(2), "lightblue");

  SubdivisionMap m;
  m.anchors = {0, 2};
  m.branch_paths = {Path{{0, 1, 2}}};
  DotStyle ms = subdivision_style(m);
  EXPECT_EQ(ms.fill.at(0), "gold");
  EXPECT_EQ(ms.fill.at(1), "lightgrey");
  EXPECT_EQ(ms.edge_width.at(Edge(1, 2)), 3.0);
  EXPECT_EQ(ms.label.at(2), "h1");

  SubdivisionResult r;
  r.result = path_graph(3);
  r.coloring = {0, 1, 0};
  r.subdivided = {{Edge(0, 2), 1}};
  DotStyle cs = coloring_style(r);
  EXPECT_NE(cs.fill.at(0), cs.fill.at(1));
  EXPECT_EQ(cs.fill.at(0), cs.fill.at(2));
  EXPECT_EQ(cs.label.at(1), "mid");
}

}  // namespace
}  // namespace subdiv
