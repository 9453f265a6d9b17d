//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/serialize.hpp"

#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace subdiv {

namespace {

std::string schema_name(const std::string& kind) {
  return "subdivkit." + kind + ".v" + std::to_string(kSchemaVersion);
}

Json ids(const std::vector<Vertex>& vs) { return Json(vs); }

template <typename T>
Json list(const std::vector<T>& items) {
  Json out = Json::array();
  for (const T& item : items) out.push_back(to_json(item));
  return out;
}

template <typename T>
Json maybe(const std::optional<T>& value) {
  return value ? to_json(*value) : Json(nullptr);
}

// JSON has no infinities; they only appear as unbounded diagnostics.
Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw std::invalid_argument(std::string("missing field '") + key + "'");
  return j.at(key);
}

template <typename T>
T read(const Json& j, const char* key) {
  try {
    return field(j, key).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("field '") + key + "': " + e.what());
  }
}

template <typename T>
void read_optional(const Json& j, const char* key, T& into) {
  if (j.contains(key)) into = read<T>(j, key);
}

const char* mode_name(VerifyMode m) { return m == VerifyMode::kExhaustive ? "exhaustive" : "sampled"; }

}  // namespace

Json document(const std::string& kind, const Json& body) {
  Json out;
  out["schema"] = schema_name(kind);
  for (auto it = body.begin(); it != body.end(); ++it) out[it.key()] = it.value();
  return out;
}

void expect_schema(const Json& doc, const std::string& kind) {
  if (!doc.is_object() || !doc.contains("schema") || !doc["schema"].is_string())
    throw std::invalid_argument("document has no schema field");
  if (doc["schema"].get<std::string>() != schema_name(kind))
    throw std::invalid_argument("expected schema " + schema_name(kind) + ", found " +
                                doc["schema"].get<std::string>());
}

// ---------------------------------------------------------------- graph core

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(Json::array({e.u, e.v}));
  return Json{{"n", g.order()}, {"m", g.size()}, {"edges", edges}};
}

Json to_json(const VertexSet& s) { return ids(s.members()); }
Json to_json(const Path& p) { return ids(p.vertices); }
Json to_json(const Edge& e) { return Json::array({e.u, e.v}); }

Graph graph_from_json(const Json& j) {
  Vertex n = read<Vertex>(j, "n");
  if (n < 0) throw std::invalid_argument("negative vertex count");
  std::vector<Edge> edges;
  for (const Json& e : field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("an edge must be a pair of ids");
    edges.push_back(Edge(e[0].get<Vertex>(), e[1].get<Vertex>()));
  }
  try {
    return Graph::from_edges(n, edges);
  } catch (const GraphError& e) {
    throw std::invalid_argument(e.what());
  }
}

// ---------------------------------------------------------------- expanders

Json to_json(const ExpanderParams& p) {
  Json out{{"eps1", p.eps1}, {"t", p.t}, {"C", p.C}};
  out["eps2"] = p.eps2 ? Json(*p.eps2) : Json(nullptr);
  return out;
}

Json to_json(const ExpansionWitness& w) {
  return Json{{"x", to_json(w.x)},     {"removed", list(w.removed)}, {"surviving", w.surviving},
              {"required", w.required}, {"slack", w.slack()}};
}

Json to_json(const ExpanderCertificate& c) {
  Json out;
  out["params"] = to_json(c.params);
  out["mode"] = mode_name(c.mode);
  out["passed"] = c.passed;
  out["host_fingerprint"] = c.host_fingerprint;
  out["host_order"] = c.host_order;
  out["sets_checked"] = c.sets_checked;
  out["log_base"] = c.log_base;
  out["worst"] = list(c.worst);
  out["counterexample"] = maybe(c.counterexample);
  return out;
}

Json to_json(const ExtractionResult& r) {
  Json out;
  out["host_ids"] = ids(r.host_ids);
  out["expander"] = to_json(r.expander);
  out["input_avg_degree"] = r.input_avg_degree;
  out["avg_degree"] = r.avg_degree;
  out["min_degree"] = r.min_degree;
  out["delta"] = r.delta;
  out["connected"] = r.connected;
  out["connectivity"] = r.connectivity ? Json(*r.connectivity) : Json(nullptr);
  out["improvement_steps"] = r.improvement_steps;
  out["stalled"] = r.stalled;
  out["certificate"] = to_json(r.certificate);
  return out;
}

// ---------------------------------------------------------------- paths

Json to_json(const PathSystem& ps) {
  Json out;
  out["source"] = to_json(ps.source);
  out["radius"] = ps.radius;
  out["requested"] = ps.requested;
  out["stopped_early"] = ps.stopped_early;
  out["avoided"] = to_json(ps.avoided);
  out["within"] = to_json(ps.within);
  out["paths"] = list(ps.paths);
  return out;
}

Json to_json(const GrowthProfile& gp) {
  return Json{{"sizes", gp.sizes},
              {"preconditions_hold", gp.preconditions_hold},
              {"precondition_failures", gp.precondition_failures},
              {"anomalies", gp.anomalies}};
}

Json to_json(const IntersectionReport& r) {
  auto counts = [](const std::vector<IntersectionCount>& cs) {
    Json out = Json::array();
    for (const IntersectionCount& c : cs) out.push_back(Json{{"layer", c.layer}, {"path", c.path}, {"count", c.count}});
    return out;
  };
  return Json{{"ok", r.ok()}, {"violations", counts(r.violations)}, {"counts", counts(r.counts)}};
}

// ---------------------------------------------------------------- structures

Json to_json(const StructureCheck& check) {
  if (!check) return Json(nullptr);
  return Json{{"clause", check->clause}, {"detail", check->detail}};
}

Json to_json(const Star& s) { return Json{{"centre", s.centre}, {"leaves", ids(s.leaves)}}; }

Json to_json(const Sun& s) {
  Json leaves = Json::array();
  for (const auto& [leaf, at] : s.leaves) leaves.push_back(Json{{"leaf", leaf}, {"at", at}});
  return Json{{"cycle", ids(s.cycle)}, {"leaves", leaves}};
}

Json to_json(const Unit& u) {
  Json out;
  out["core"] = u.core;
  out["spokes"] = list(u.spokes);
  out["stars"] = list(u.stars);
  out["interior"] = to_json(u.interior());
  out["exterior"] = to_json(u.exterior());
  return out;
}

Json to_json(const Web& w) {
  Json out;
  out["core"] = w.core;
  out["arms"] = list(w.arms);
  out["units"] = list(w.units);
  out["centre"] = to_json(w.centre());
  out["interior"] = to_json(w.interior());
  out["exterior"] = to_json(w.exterior());
  return out;
}

Json to_json(const Nakji& n) {
  Json out;
  out["params"] = Json{{"legs", n.params.t}, {"size", n.params.s}, {"radius", n.params.r}, {"separation", n.params.tau}};
  out["head"] = to_json(n.head);
  out["legs"] = list(n.legs);
  out["arms"] = list(n.arms);
  return out;
}

// ---------------------------------------------------------------- partitions

Json to_json(const BandwidthOrder& b) { return Json{{"order", ids(b.order)}, {"b", b.b}, {"exact", b.exact}}; }

Json to_json(const PartitionPlan& p) {
  Json out;
  out["target"] = Json{{"kind", p.kind == TargetKind::kOddCycle ? "odd-cycle" : "sun"},
                       {"graph", to_json(p.target)},
                       {"labels", ids(p.target_labels)}};
  out["r"] = p.r;
  out["d"] = p.d;
  out["cap"] = p.cap;
  out["classes"] = p.classes;
  out["loads"] = p.loads;
  out["seed"] = p.seed;
  out["attempt"] = p.attempt;
  out["strategy"] = p.strategy;
  out["blocks"] = Json{{"width", p.block_width},
                       {"segment_blocks", p.segment_blocks},
                       {"segments", p.segments},
                       {"segment_slots", p.segment_slots},
                       {"walk_lengths", p.walk_lengths},
                       {"ell_star", p.ell_star}};
  out["w_mass"] = Json{{"mass", p.w_mass},
                       {"ceiling", p.w_mass_ceiling},
                       {"within_sqrt_beta", p.w_mass_within_sqrt_beta}};
  return out;
}

Json to_json(const PartitionResult& r) {
  Json out;
  out["found"] = r.plan.has_value();
  out["attempts"] = r.attempts;
  out["plan"] = maybe(r.plan);
  out["best_near_miss"] = maybe(r.best_near_miss);
  out["overflow"] = r.overflow;
  return out;
}

Json to_json(const SeparatorResult& r) {
  return Json{{"found", r.separator.has_value()}, {"exact", r.exact}, {"separator", maybe(r.separator)}};
}

// ---------------------------------------------------------------- transforms

Json to_json(const ReductionTrace& t) {
  Json out;
  out["original"] = to_json(t.original);
  out["result"] = to_json(t.result);
  out["merge_edges"] = list(t.merge_edges);
  out["origin"] = ids(t.origin);
  Json splits = Json::array();
  for (const SplitStep& s : t.splits) splits.push_back(Json{{"from", s.from}, {"added", s.added}, {"moved", ids(s.moved)}});
  out["splits"] = splits;
  out["b_copy"] = ids(t.b_copy);
  Json outside = Json::array();
  for (const auto& [a, b] : t.outside_edges) outside.push_back(Json::array({a, b}));
  out["outside_edges"] = outside;
  return out;
}

Json to_json(const ColourClasses& c) {
  return Json{{"a", to_json(c.a)}, {"b", to_json(c.b)}, {"covered", c.covered()}, {"exact", c.exact}};
}

// ---------------------------------------------------------------- planar

Json to_json(const PlanarEmbedding& e) {
  Json faces = Json::array();
  for (const Face& f : e.faces) faces.push_back(ids(f));
  return Json{{"graph", to_json(e.graph)}, {"faces", faces}};
}

Json to_json(const SubdivisionResult& r) {
  Json out;
  out["vertices"] = r.result.order();
  out["result"] = to_json(r.result);
  Json sub = Json::array();
  for (const auto& [e, mid] : r.subdivided) sub.push_back(Json{{"edge", to_json(e)}, {"midpoint", mid}});
  out["subdivided"] = sub;
  out["coloring"] = r.coloring;
  out["one_side"] = r.one_side;
  return out;
}

// ---------------------------------------------------------------- extremal

Json to_json(const GraphStats& s) {
  return Json{{"alpha", s.alpha}, {"alpha2", s.alpha2}, {"chi", s.chi}, {"exact", s.exact}};
}

Json to_json(const MinorDegreeBounds& b) {
  return Json{{"t", b.t},
              {"lower", b.lower},
              {"upper", b.upper},
              {"witness_s", b.witness_s},
              {"witness_limit", b.witness_limit},
              {"stats", to_json(b.stats)}};
}

// ---------------------------------------------------------------- oracle

Json to_json(const SubdivisionMap& m) { return Json{{"anchors", ids(m.anchors)}, {"branch_paths", list(m.branch_paths)}}; }

SubdivisionMap subdivision_map_from_json(const Json& j) {
  SubdivisionMap m;
  m.anchors = read<std::vector<Vertex>>(j, "anchors");
  for (const Json& p : field(j, "branch_paths")) {
    if (!p.is_array()) throw std::invalid_argument("a branch path must be an array of ids");
    m.branch_paths.push_back(Path{p.get<std::vector<Vertex>>()});
  }
  return m;
}

Json to_json(const SubdivisionSearch& s) {
  return Json{{"outcome", outcome_name(s.outcome)}, {"nodes", s.nodes}, {"map", maybe(s.map)}};
}

Json to_json(const MinorMap& m) { return Json{{"branch_sets", list(m.branch_sets)}}; }

Json to_json(const MinorSearch& s) {
  return Json{{"outcome", outcome_name(s.outcome)}, {"nodes", s.nodes}, {"map", maybe(s.map)}};
}

// ---------------------------------------------------------------- pipeline

Json to_json(const PipelineConfig& c) {
  Json out;
  out["eps1"] = c.eps1;
  out["eps2"] = c.eps2;
  out["max_degree_cap"] = c.max_degree_cap;
  out["high_degree_cutoff"] = c.high_degree_cutoff;
  out["high_degree_factor"] = c.high_degree_factor;
  out["web_arms"] = c.web_arms;
  out["web_spokes"] = c.web_spokes;
  out["web_star_leaves"] = c.web_star_leaves;
  out["web_spoke_length"] = c.web_spoke_length;
  out["web_count"] = c.web_count;
  out["web_bad_threshold"] = c.web_bad_threshold;
  out["nakji_legs"] = c.nakji_legs;
  out["nakji_size"] = c.nakji_size;
  out["nakji_radius"] = c.nakji_radius;
  out["nakji_separation"] = c.nakji_separation;
  out["subexpander_min_degree"] = c.subexpander_min_degree;
  out["subexpander_separation"] = c.subexpander_separation;
  out["subexpander_max_size"] = c.subexpander_max_size;
  out["structure_budget"] = c.structure_budget;
  out["oracle_node_budget"] = c.oracle_limits.node_budget;
  out["oracle_max_path_length"] = c.oracle_limits.max_path_length;
  out["use_oracle"] = c.use_oracle;
  out["seed"] = c.seed;
  return out;
}

PipelineConfig pipeline_config_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("pipeline config must be an object");
  PipelineConfig c;
  read_optional(j, "eps1", c.eps1);
  read_optional(j, "eps2", c.eps2);
  read_optional(j, "max_degree_cap", c.max_degree_cap);
  read_optional(j, "high_degree_cutoff", c.high_degree_cutoff);
  read_optional(j, "high_degree_factor", c.high_degree_factor);
  read_optional(j, "web_arms", c.web_arms);
  read_optional(j, "web_spokes", c.web_spokes);
  read_optional(j, "web_star_leaves", c.web_star_leaves);
  read_optional(j, "web_spoke_length", c.web_spoke_length);
  read_optional(j, "web_count", c.web_count);
  read_optional(j, "web_bad_threshold", c.web_bad_threshold);
  read_optional(j, "nakji_legs", c.nakji_legs);
  read_optional(j, "nakji_size", c.nakji_size);
  read_optional(j, "nakji_radius", c.nakji_radius);
  read_optional(j, "nakji_separation", c.nakji_separation);
  read_optional(j, "subexpander_min_degree", c.subexpander_min_degree);
  read_optional(j, "subexpander_separation", c.subexpander_separation);
  read_optional(j, "subexpander_max_size", c.subexpander_max_size);
  read_optional(j, "structure_budget", c.structure_budget);
  read_optional(j, "oracle_node_budget", c.oracle_limits.node_budget);
  read_optional(j, "oracle_max_path_length", c.oracle_limits.max_path_length);
  read_optional(j, "use_oracle", c.use_oracle);
  read_optional(j, "seed", c.seed);
  return c;
}

Json to_json(const EmbedCertificate& c) {
  Json out;
  out["strategy"] = strategy_name(c.strategy);
  out["validation"] = c.validation;
  out["host_fingerprint"] = c.host_fingerprint;
  out["config"] = to_json(c.config);
  out["map"] = to_json(c.map);
  out["expander_vertices"] = ids(c.expander_vertices);
  out["expander"] = maybe(c.expander);
  out["connection_scale"] = number(c.connection_scale);
  Json traces;
  if (c.high_degree)
    traces["high_degree"] = Json{{"cutoff", c.high_degree->cutoff},
                                 {"high", ids(c.high_degree->high)},
                                 {"avoid_sizes", c.high_degree->avoid_sizes}};
  if (c.web) {
    Json steps = Json::array();
    for (const WebStep& s : c.web->steps)
      steps.push_back(Json{{"h_vertex", s.h_vertex}, {"web", s.web}, {"evicted", s.evicted}, {"dropped", ids(s.dropped)}});
    traces["web"] = Json{{"webs", list(c.web->webs)},
                         {"bad_threshold", c.web->bad_threshold},
                         {"steps", steps},
                         {"final_web", c.web->final_web}};
  }
  if (c.nakji)
    traces["nakji"] = Json{{"subexpanders", list(c.nakji->subexpanders)},
                           {"nakjis", list(c.nakji->nakjis)},
                           {"connections", list(c.nakji->connections)},
                           {"build_log", c.nakji->build_log}};
  out["traces"] = traces.is_null() ? Json::object() : traces;
  return out;
}

Json to_json(const EmbedOutcome& o) {
  Json out;
  out["success"] = o.success();
  Json attempts = Json::array();
  for (const StrategyAttempt& a : o.attempts)
    attempts.push_back(Json{{"strategy", strategy_name(a.strategy)}, {"success", a.success}, {"reason", a.reason}});
  out["attempts"] = attempts;
  out["warnings"] = o.warnings;
  out["oracle"] = o.oracle ? Json(outcome_name(*o.oracle)) : Json(nullptr);
  out["certificate"] = maybe(o.certificate);
  return out;
}

// ---------------------------------------------------------------- DOT

std::string to_dot(const Graph& g, const DotStyle& style) {
  std::ostringstream out;
  out << "graph G {\n";
  if (!style.title.empty()) out << "  label=" << std::quoted(style.title) << ";\n";
  out << "  node [shape=circle, fontsize=10];\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    std::string label = std::to_string(v);
    if (auto it = style.label.find(v); it != style.label.end()) label += "\\n" + it->second;
    out << " [label=\"" << label << "\"";
    if (auto it = style.fill.find(v); it != style.fill.end())
      out << ", style=filled, fillcolor=" << std::quoted(it->second);
    out << "];\n";
  }
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    auto colour = style.edge_colour.find(e);
    auto width = style.edge_width.find(e);
    if (colour != style.edge_colour.end() || width != style.edge_width.end()) {
      out << " [";
      bool first = true;
      if (colour != style.edge_colour.end()) {
        out << "color=" << std::quoted(colour->second);
        first = false;
      }
      if (width != style.edge_width.end()) out << (first ? "" : ", ") << "penwidth=" << width->second;
      out << "]";
    }
    out << ";\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

constexpr const char* kExterior = "lightblue";
constexpr const char* kInterior = "orange";
constexpr const char* kCentre = "red";

void paint_path(DotStyle& style, const Path& p, const std::string& colour, double width) {
  for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
    Edge e(p.vertices[i], p.vertices[i + 1]);
    style.edge_colour[e] = colour;
    style.edge_width[e] = width;
  }
}

void paint_unit(DotStyle& style, const Unit& u) {
  for (Vertex v : u.exterior()) style.fill[v] = kExterior;
  for (Vertex v : u.interior()) style.fill[v] = kInterior;
  for (const Path& p : u.spokes) paint_path(style, p, kInterior, 2.0);
  for (const Star& s : u.stars)
    for (Vertex w : s.leaves) {
      style.edge_colour[Edge(s.centre, w)] = kExterior;
      style.edge_width[Edge(s.centre, w)] = 2.0;
    }
}

}  // namespace

DotStyle structure_style(const Unit& u) {
  DotStyle style;
  paint_unit(style, u);
  style.fill[u.core] = kCentre;
  style.title = "unit";
  return style;
}

DotStyle structure_style(const Web& w) {
  DotStyle style;
  for (const Unit& u : w.units) paint_unit(style, u);
  for (const Path& p : w.arms) paint_path(style, p, kCentre, 2.5);
  for (Vertex v : w.centre()) style.fill[v] = kCentre;
  style.title = "web";
  return style;
}

DotStyle structure_style(const Nakji& n) {
  DotStyle style;
  for (const VertexSet& leg : n.legs)
    for (Vertex v : leg) style.fill[v] = kExterior;
  for (const Path& arm : n.arms) {
    paint_path(style, arm, kInterior, 2.0);
    for (Vertex v : arm.interior()) style.fill[v] = kInterior;
  }
  for (Vertex v : n.head) style.fill[v] = kCentre;
  style.title = "nakji";
  return style;
}

DotStyle subdivision_style(const SubdivisionMap& m) {
  static const char* palette[] = {"red", "blue", "darkgreen", "purple", "orange", "brown", "magenta", "teal"};
  DotStyle style;
  for (std::size_t i = 0; i < m.branch_paths.size(); ++i) {
    paint_path(style, m.branch_paths[i], palette[i % 8], 3.0);
    for (Vertex v : m.branch_paths[i].interior()) style.fill[v] = "lightgrey";
  }
  for (std::size_t x = 0; x < m.anchors.size(); ++x) {
    style.fill[m.anchors[x]] = "gold";
    style.label[m.anchors[x]] = "h" + std::to_string(x);
  }
  style.title = "subdivision";
  return style;
}

DotStyle coloring_style(const SubdivisionResult& r) {
  DotStyle style;
  for (std::size_t v = 0; v < r.coloring.size(); ++v)
    style.fill[static_cast<Vertex>(v)] = r.coloring[v] == 0 ? "white" : "grey60";
  for (const auto& [e, mid] : r.subdivided) style.label[mid] = "mid";
  style.title = "2-coloured subdivision";
  return style;
}

DotStyle vertex_set_style(const VertexSet& s, const std::string& colour) {
  DotStyle style;
  for (Vertex v : s) style.fill[v] = colour;
  return style;
}

}  // namespace subdiv
