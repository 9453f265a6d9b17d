//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_SERIALIZE_HPP
#define SUBDIV_SERIALIZE_HPP

#include <map>
#include <string>

#include "json.hpp"
#include "subdiv/expander.hpp"
#include "subdiv/extremal.hpp"
#include "subdiv/graph.hpp"
#include "subdiv/hpartition.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/paths.hpp"
#include "subdiv/pipeline.hpp"
#include "subdiv/planar.hpp"
#include "subdiv/structures.hpp"
#include "subdiv/transforms.hpp"

namespace subdiv {

// Keys keep insertion order so that equal values always print the same
// bytes.
using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

// {"schema": "subdivkit.<kind>.v1", ...body}. Body keys follow the schema
// field in their own order.
Json document(const std::string& kind, const Json& body);
// Throws std::invalid_argument unless doc carries the schema for `kind` at
// the current version.
void expect_schema(const Json& doc, const std::string& kind);

Json to_json(const Graph& g);
Json to_json(const VertexSet& s);
Json to_json(const Path& p);
Json to_json(const Edge& e);

Json to_json(const ExpanderParams& p);
Json to_json(const ExpansionWitness& w);
Json to_json(const ExpanderCertificate& c);
Json to_json(const ExtractionResult& r);

Json to_json(const PathSystem& ps);
Json to_json(const GrowthProfile& gp);
Json to_json(const IntersectionReport& r);

Json to_json(const StructureCheck& check);  // null when valid
Json to_json(const Star& s);
Json to_json(const Sun& s);
Json to_json(const Unit& u);
Json to_json(const Web& w);
Json to_json(const Nakji& n);

Json to_json(const BandwidthOrder& b);
Json to_json(const PartitionPlan& p);
Json to_json(const PartitionResult& r);
Json to_json(const SeparatorResult& r);

Json to_json(const ReductionTrace& t);
Json to_json(const ColourClasses& c);

Json to_json(const PlanarEmbedding& e);
Json to_json(const SubdivisionResult& r);

Json to_json(const GraphStats& s);
Json to_json(const MinorDegreeBounds& b);

Json to_json(const SubdivisionMap& m);
Json to_json(const SubdivisionSearch& s);
Json to_json(const MinorMap& m);
Json to_json(const MinorSearch& s);

Json to_json(const PipelineConfig& c);
Json to_json(const EmbedCertificate& c);
Json to_json(const EmbedOutcome& o);

// Inverses for the values a run can be restarted from. All throw
// std::invalid_argument on missing or mistyped fields.
Graph graph_from_json(const Json& j);
SubdivisionMap subdivision_map_from_json(const Json& j);
PipelineConfig pipeline_config_from_json(const Json& j);

// Graphviz rendering. Vertices and edges without a style use the defaults.
struct DotStyle {
  std::map<Vertex, std::string> fill;     // vertex -> colour
  std::map<Vertex, std::string> label;    // vertex -> extra label text
  std::map<Edge, std::string> edge_colour;
  std::map<Edge, double> edge_width;
  std::string title;
};

std::string to_dot(const Graph& g, const DotStyle& style = {});

// Exterior, interior and centre vertices in distinct colours.
DotStyle structure_style(const Unit& u);
DotStyle structure_style(const Web& w);
DotStyle structure_style(const Nakji& n);
// Anchors filled, branch paths drawn heavy, one colour per branch path.
DotStyle subdivision_style(const SubdivisionMap& m);
// The two colour classes of a subdivision result; midpoints labelled.
DotStyle coloring_style(const SubdivisionResult& r);
DotStyle vertex_set_style(const VertexSet& s, const std::string& colour);

}  // namespace subdiv

#endif  // SUBDIV_SERIALIZE_HPP
