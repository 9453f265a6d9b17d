//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "cli.hpp"

#include <chrono>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "subdiv/expander.hpp"
#include "subdiv/extremal.hpp"
#include "subdiv/hpartition.hpp"
#include "subdiv/io.hpp"
#include "subdiv/oracle.hpp"
#include "subdiv/paths.hpp"
#include "subdiv/pipeline.hpp"
#include "subdiv/planar.hpp"
#include "subdiv/serialize.hpp"
#include "subdiv/structures.hpp"
#include "subdiv/transforms.hpp"

namespace subdiv::cli {

namespace {

class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// FNV-1a, used to tie manifests to the exact bytes read and written.
std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct InputRecord {
  std::string path;
  std::uint64_t hash = 0;
  std::size_t bytes = 0;
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string slurp(const std::string& path) {
    std::string text;
    if (path == "-") {
      if (!stdin_) {
        std::ostringstream s;
        s << in_.rdbuf();
        stdin_ = s.str();
      }
      text = *stdin_;
    } else {
      std::ifstream f(path, std::ios::binary);
      if (!f) throw InputError("cannot open " + path);
      std::ostringstream s;
      s << f.rdbuf();
      text = s.str();
    }
    records_.push_back({path, fnv1a(text), text.size()});
    return text;
  }

  // Face lines are accepted everywhere so generator output can be piped
  // into any command; only callers that want them pass `faces`.
  Graph graph(const std::string& path, std::vector<Face>* faces = nullptr) {
    std::istringstream s(slurp(path));
    std::vector<Face> ignored;
    return parse_edge_list(s, path == "-" ? "<stdin>" : path, faces ? faces : &ignored);
  }

  const std::vector<InputRecord>& records() const { return records_; }

 private:
  std::istream& in_;
  std::optional<std::string> stdin_;
  std::vector<InputRecord> records_;
};

// "3,5,8" -> {3, 5, 8}; the empty string is the empty set.
VertexSet vertex_list(const std::string& text, const std::string& flag) {
  std::vector<Vertex> ids;
  std::istringstream s(text);
  std::string item;
  while (std::getline(s, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size()) throw InputError(flag + ": '" + item + "' is not a vertex id");
    ids.push_back(v);
  }
  return VertexSet(ids);
}

struct Result {
  int code = kSuccess;
  std::string kind;  // schema kind of the JSON body
  Json json;
  std::string dot;
  std::string text;
};

struct Globals {
  std::uint64_t seed = 0;
  long long budget = 0;  // 0 keeps each search's own default
  std::string format;    // empty: text for gen, json otherwise
  int exhaustive_cap = kDefaultExhaustiveCap;
  int threads = 1;
  std::string manifest;
  std::string output;
};

int search_code(SearchOutcome o) {
  switch (o) {
    case SearchOutcome::kFound: return kSuccess;
    case SearchOutcome::kAbsent: return kAbsent;
    default: return kUndecided;
  }
}

std::string edge_list_text(const Graph& g, const std::vector<Face>* faces = nullptr) {
  std::ostringstream s;
  write_edge_list(s, g, faces);
  return s.str();
}

std::string line(const std::string& key, const std::string& value) { return key + ": " + value + "\n"; }
std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string show(const std::vector<Vertex>& vs) {
  std::string out;
  for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? " " : "") + std::to_string(vs[i]);
  return out;
}

// Strips the flags that only say where results go, so a recorded command
// replays to the same bytes without touching the original files.
std::vector<std::string> replayable(const std::vector<std::string>& args) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    if (a == "--manifest" || a == "-o" || a == "--output") {
      ++i;
      continue;
    }
    if (a.rfind("--manifest=", 0) == 0 || a.rfind("--output=", 0) == 0) continue;
    out.push_back(a);
  }
  return out;
}

std::string render(const Result& r, const std::string& format) {
  if (format == "dot") {
    if (r.dot.empty()) throw InputError("this command has no DOT rendering");
    return r.dot;
  }
  if (format == "text" && !r.text.empty()) return r.text;
  return document(r.kind, r.json).dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"subdivkit: subdivisions, expanders and the structures used to embed them"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for every random choice")->capture_default_str();
  app.add_option("--budget", g.budget, "Node budget for exhaustive searches (0: built-in default)");
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--exhaustive-cap", g.exhaustive_cap, "Largest vertex count handled exactly")
      ->capture_default_str();
  app.add_option("--threads", g.threads, "Worker threads for verification")->check(CLI::PositiveNumber);
  app.add_option("--manifest", g.manifest, "Write a run manifest to this file");
  app.add_option("-o,--output", g.output, "Write the result here instead of standard output");

  Inputs inputs(in);
  std::function<Result()> action;
  std::string kind_default_format = "json";

  // ------------------------------------------------------------ expanders
  std::string graph_path = "-";
  double eps1 = 1.0 / (10.0 * kDefaultExpansionConstant), eps2 = 0.1;
  auto* extract = app.add_subcommand("extract-expander", "Extract a robust expander subgraph");
  extract->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  extract->add_option("--eps1", eps1)->capture_default_str();
  extract->add_option("--eps2", eps2)->capture_default_str();
  extract->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      ExtractOptions opt;
      opt.verify.exhaustive_cap = g.exhaustive_cap;
      opt.verify.seed = g.seed;
      opt.verify.threads = g.threads;
      ExtractionResult r = extract_expander(host, eps1, eps2, opt);
      Result res{kSuccess, "expander-extraction", to_json(r), {}, {}};
      DotStyle style = vertex_set_style(VertexSet(r.host_ids), "lightgreen");
      style.title = "extracted expander";
      res.dot = to_dot(host, style);
      res.text = line("vertices", show(VertexSet(r.host_ids).members())) +
                 line("average degree", std::to_string(r.avg_degree) + " (input " + std::to_string(r.input_avg_degree) + ")") +
                 line("minimum degree", std::to_string(r.min_degree)) +
                 line("certificate", r.certificate.passed ? "passed" : "failed");
      return res;
    };
  });

  double t_threshold = 1.0, constant = kDefaultExpansionConstant;
  std::optional<double> verify_eps2;
  std::string mode = "exhaustive";
  int trials = 2000;
  auto* verify = app.add_subcommand("verify-expander", "Check robust expansion of a whole graph");
  verify->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  verify->add_option("--eps1", eps1)->capture_default_str();
  verify->add_option("--t", t_threshold, "Size threshold")->capture_default_str();
  verify->add_option("--C", constant)->capture_default_str();
  verify->add_option("--eps2", verify_eps2);
  verify->add_option("--mode", mode)->check(CLI::IsMember({"exhaustive", "sampled"}))->capture_default_str();
  verify->add_option("--trials", trials, "Sampled sets per size")->capture_default_str();
  verify->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      ExpanderParams p;
      p.eps1 = eps1;
      p.t = t_threshold;
      p.C = constant;
      p.eps2 = verify_eps2;
      VerifyOptions opt;
      opt.exhaustive_cap = g.exhaustive_cap;
      opt.trials = trials;
      opt.seed = g.seed;
      opt.threads = g.threads;
      try {
        ExpanderCertificate c = verify_robust_expander(
            host, p, mode == "exhaustive" ? VerifyMode::kExhaustive : VerifyMode::kSampled, opt);
        Result res{c.passed ? kSuccess : kAbsent, "expander-certificate", to_json(c), {}, {}};
        res.text = line("passed", yes_no(c.passed)) + line("sets checked", std::to_string(c.sets_checked));
        if (c.counterexample) res.text += line("counterexample", show(c.counterexample->x.members()));
        if (c.counterexample) res.dot = to_dot(host, vertex_set_style(c.counterexample->x, "salmon"));
        return res;
      } catch (const CapExceeded& e) {
        return Result{kUndecided, "error", Json{{"error", e.what()}}, {}, std::string(e.what()) + "\n"};
      }
    };
  });

  // ------------------------------------------------------------ paths
  std::string from_list, to_list, avoid_list;
  auto* connect = app.add_subcommand("connect", "Shortest path between two sets avoiding a third");
  connect->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  connect->add_option("--from", from_list, "Comma-separated vertex ids")->required();
  connect->add_option("--to", to_list, "Comma-separated vertex ids")->required();
  connect->add_option("--avoid", avoid_list, "Comma-separated vertex ids");
  connect->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      VertexSet a = vertex_list(from_list, "--from"), b = vertex_list(to_list, "--to");
      VertexSet w = vertex_list(avoid_list, "--avoid");
      check_vertices(host, a);
      check_vertices(host, b);
      check_vertices(host, w);
      std::optional<Path> p = connect_avoiding(host, a, b, w);
      Result res{p ? kSuccess : kAbsent, "connection", Json{{"found", p.has_value()}}, {}, {}};
      res.json["path"] = p ? to_json(*p) : Json(nullptr);
      res.json["length"] = p ? p->length() : -1;
      res.text = p ? line("path", show(p->vertices)) : "no path\n";
      if (p) {
        SubdivisionMap m;
        m.branch_paths = {*p};
        res.dot = to_dot(host, subdivision_style(m));
      }
      return res;
    };
  });

  std::string source_list, policy = "farthest";
  int radius = 2, path_count = 1;
  auto* grow = app.add_subcommand("grow", "Consecutive shortest paths from a set, with growth diagnostics");
  grow->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  grow->add_option("--source", source_list, "Comma-separated vertex ids")->required();
  grow->add_option("--radius", radius)->capture_default_str();
  grow->add_option("--count", path_count)->capture_default_str();
  grow->add_option("--avoid", avoid_list, "Comma-separated vertex ids");
  grow->add_option("--policy", policy)->check(CLI::IsMember({"farthest", "nearest"}))->capture_default_str();
  grow->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      VertexSet x = vertex_list(source_list, "--source"), y = vertex_list(avoid_list, "--avoid");
      check_vertices(host, x);
      check_vertices(host, y);
      PathSystem ps = consecutive_shortest_paths(
          host, x, radius, y, path_count, policy == "farthest" ? EndpointPolicy::kFarthest : EndpointPolicy::kNearest);
      IntersectionReport report = check_path_intersection_bound(host, x, y, ps, radius);
      GrowthProfile profile = growth_profile(host, x, y, ps, radius);
      Json body{{"system", to_json(ps)}, {"intersection", to_json(report)}, {"growth", to_json(profile)},
                {"consecutive_problem", consecutive_problem(host, ps)}};
      Result res{kSuccess, "path-system", body, {}, {}};
      for (const Path& p : ps.paths) res.text += line("path", show(p.vertices));
      res.text += line("intersection law", report.ok() ? "holds" : "violated");
      SubdivisionMap m;
      m.branch_paths = ps.paths;
      res.dot = to_dot(host, subdivision_style(m));
      return res;
    };
  });

  // ------------------------------------------------------------ structures
  auto* build = app.add_subcommand("build", "Build a star family, unit, web or nakji");
  build->require_subcommand(1);
  int star_count = 1, leaves = 2, spokes = 1, spoke_length = 2, arms = 2;
  std::optional<int> core;
  auto* star = build->add_subcommand("star", "Vertex-disjoint stars");
  star->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  star->add_option("--count", star_count)->capture_default_str();
  star->add_option("--leaves", leaves)->capture_default_str();
  star->add_option("--avoid", avoid_list);
  star->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      VertexSet avoid = vertex_list(avoid_list, "--avoid");
      check_vertices(host, avoid);
      StarHarvest h = find_disjoint_stars(host, avoid, star_count, leaves);
      Json stars = Json::array();
      for (const Star& s : h.stars) stars.push_back(to_json(s));
      Result res{h.deficiency == 0 ? kSuccess : kAbsent, "stars",
                 Json{{"stars", stars}, {"deficiency", h.deficiency}}, {}, {}};
      DotStyle style;
      for (const Star& s : h.stars) {
        style.fill[s.centre] = "red";
        for (Vertex w : s.leaves) style.fill[w] = "lightblue";
      }
      res.dot = to_dot(host, style);
      for (const Star& s : h.stars) res.text += line("star " + std::to_string(s.centre), show(s.leaves));
      res.text += line("deficiency", std::to_string(h.deficiency));
      return res;
    };
  });

  auto* unit = build->add_subcommand("unit", "A unit: core, spokes and a star at each spoke end");
  unit->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  unit->add_option("--spokes", spokes)->capture_default_str();
  unit->add_option("--leaves", leaves)->capture_default_str();
  unit->add_option("--length", spoke_length, "Maximum spoke length")->capture_default_str();
  unit->add_option("--core", core, "Pin the core vertex");
  unit->add_option("--avoid", avoid_list);
  unit->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      VertexSet avoid = vertex_list(avoid_list, "--avoid");
      check_vertices(host, avoid);
      if (core) check_vertex(host, *core);
      UnitShape shape{spokes, leaves, spoke_length};
      BuildBudget budget;
      if (g.budget > 0) budget.max_nodes = g.budget;
      UnitBuild b = build_unit(host, avoid, shape, budget, core);
      Result res{b.unit ? kSuccess : (b.budget_exhausted ? kUndecided : kAbsent), "unit", Json::object(), {}, {}};
      res.json["built"] = b.unit.has_value();
      res.json["stage"] = b.stage;
      res.json["budget_exhausted"] = b.budget_exhausted;
      res.json["unit"] = b.unit ? to_json(*b.unit) : Json(nullptr);
      res.json["validation"] = b.unit ? to_json(validate_unit(host, *b.unit, shape)) : Json(nullptr);
      res.json["trace"] = b.trace;
      res.dot = b.unit ? to_dot(host, structure_style(*b.unit)) : to_dot(host);
      res.text = b.unit ? line("core", std::to_string(b.unit->core)) + line("interior", show(b.unit->interior().members())) +
                              line("exterior", show(b.unit->exterior().members()))
                        : "no unit\n";
      return res;
    };
  });

  auto* web = build->add_subcommand("web", "A web: core, arms and a unit at each arm end");
  web->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  web->add_option("--arms", arms)->capture_default_str();
  web->add_option("--spokes", spokes)->capture_default_str();
  web->add_option("--leaves", leaves)->capture_default_str();
  web->add_option("--length", spoke_length, "Maximum spoke length")->capture_default_str();
  web->add_option("--avoid", avoid_list);
  web->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      VertexSet avoid = vertex_list(avoid_list, "--avoid");
      check_vertices(host, avoid);
      WebShape shape{arms, {spokes, leaves, spoke_length}};
      BuildBudget budget;
      if (g.budget > 0) budget.max_nodes = g.budget;
      WebBuild b = build_web(host, avoid, shape, budget);
      Result res{b.web ? kSuccess : (b.budget_exhausted ? kUndecided : kAbsent), "web", Json::object(), {}, {}};
      res.json["built"] = b.web.has_value();
      res.json["stage"] = b.stage;
      res.json["budget_exhausted"] = b.budget_exhausted;
      res.json["web"] = b.web ? to_json(*b.web) : Json(nullptr);
      res.json["validation"] = b.web ? to_json(validate_web(host, *b.web, shape)) : Json(nullptr);
      res.json["trace"] = b.trace;
      res.dot = b.web ? to_dot(host, structure_style(*b.web)) : to_dot(host);
      res.text = b.web ? line("core", std::to_string(b.web->core)) + line("centre", show(b.web->centre().members())) +
                             line("exterior", show(b.web->exterior().members()))
                       : "no web\n";
      return res;
    };
  });

  int legs = 2, nakji_size = 6, nakji_radius = 2, nakji_separation = 2, nakji_count = 1, family_separation = 1,
      family_max_size = 12;
  double family_min_degree = 3.0;
  auto* nakji = build->add_subcommand("nakji", "Nakjis from a family of small separated expanders");
  nakji->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  nakji->add_option("--legs", legs)->capture_default_str();
  nakji->add_option("--size", nakji_size, "Head and leg size cap")->capture_default_str();
  nakji->add_option("--radius", nakji_radius, "Leg diameter")->capture_default_str();
  nakji->add_option("--separation", nakji_separation)->capture_default_str();
  nakji->add_option("--count", nakji_count)->capture_default_str();
  nakji->add_option("--min-degree", family_min_degree, "Subexpander average degree floor")->capture_default_str();
  nakji->add_option("--max-size", family_max_size, "Subexpander size cap")->capture_default_str();
  nakji->add_option("--family-separation", family_separation)->capture_default_str();
  nakji->add_option("--eps1", eps1)->capture_default_str();
  nakji->add_option("--eps2", eps2)->capture_default_str();
  nakji->add_option("--avoid", avoid_list);
  nakji->callback([&] {
    action = [&] {
      Graph host = inputs.graph(graph_path);
      VertexSet avoid = vertex_list(avoid_list, "--avoid");
      check_vertices(host, avoid);
      std::vector<Subexpander> family =
          subexpander_family(host, avoid, family_min_degree, family_separation, family_max_size, eps1, eps2);
      std::vector<VertexSet> members;
      for (const Subexpander& s : family) members.push_back(s.vertices);
      NakjiBuild b = build_nakjis(host, avoid, NakjiParams{legs, nakji_size, nakji_radius, nakji_separation},
                                  nakji_count, members);
      Json list = Json::array(), checks = Json::array(), subs = Json::array();
      for (const Nakji& n : b.nakjis) {
        list.push_back(to_json(n));
        checks.push_back(to_json(validate_nakji(host, n)));
      }
      for (const VertexSet& m : members) subs.push_back(to_json(m));
      bool enough = static_cast<int>(b.nakjis.size()) >= nakji_count;
      Result res{enough ? kSuccess : kAbsent, "nakjis", Json::object(), {}, {}};
      res.json["subexpanders"] = subs;
      res.json["nakjis"] = list;
      res.json["validation"] = checks;
      res.json["trace"] = b.trace;
      DotStyle style;
      for (const Nakji& n : b.nakjis) {
        DotStyle one = structure_style(n);
        style.fill.insert(one.fill.begin(), one.fill.end());
        style.edge_colour.insert(one.edge_colour.begin(), one.edge_colour.end());
        style.edge_width.insert(one.edge_width.begin(), one.edge_width.end());
      }
      style.title = "nakjis";
      res.dot = to_dot(host, style);
      res.text = line("subexpanders", std::to_string(members.size())) + line("nakjis", std::to_string(b.nakjis.size()));
      for (const Nakji& n : b.nakjis) res.text += line("head", show(n.head.members()));
      return res;
    };
  });

  // ------------------------------------------------------------ partitions
  auto* partition = app.add_subcommand("partition", "Balanced homomorphism onto an odd cycle or a sun");
  partition->require_subcommand(1);
  int r_classes = 3, sun_s = 2, sun_q = 1, retries = 64;
  double d_scale = 20.0, beta = 0.0;
  auto plan_result = [&](const Graph& h, const PartitionResult& pr) {
    Result res{pr.plan ? kSuccess : kAbsent, "partition", to_json(pr), {}, {}};
    if (pr.plan) {
      res.json["validation"] = plan_problem(h, *pr.plan);
      res.text = line("strategy", pr.plan->strategy) + line("attempt", std::to_string(pr.plan->attempt));
      std::string loads;
      for (int l : pr.plan->loads) loads += std::to_string(l) + " ";
      res.text += line("loads", loads) + line("cap", std::to_string(pr.plan->cap));
      DotStyle style;
      for (Vertex v = 0; v < h.order(); ++v) style.label[v] = "c" + std::to_string(pr.plan->classes[v]);
      res.dot = to_dot(h, style);
    } else {
      res.text = "no plan after " + std::to_string(pr.attempts) + " attempts\n";
    }
    return res;
  };
  auto* cycle = partition->add_subcommand("cycle", "Onto the odd cycle C_r");
  auto* sun = partition->add_subcommand("sun", "Onto a (2s,q)-sun");
  for (CLI::App* sub : {cycle, sun}) {
    sub->add_option("--graph", graph_path, "Bipartite pattern, edge-list file ('-' for stdin)");
    sub->add_option("--r", r_classes)->capture_default_str();
    sub->add_option("--d", d_scale, "Degree scale; classes hold at most floor(d/r)")->capture_default_str();
    sub->add_option("--beta", beta, "Block width fraction (0: smallest admissible)")->capture_default_str();
    sub->add_option("--retries", retries)->capture_default_str();
  }
  sun->add_option("--s", sun_s, "Half the sun's cycle length")->capture_default_str();
  sun->add_option("--q", sun_q, "Number of leaves")->capture_default_str();
  cycle->callback([&] {
    action = [&] {
      Graph h = inputs.graph(graph_path);
      PartitionOptions opt{beta, retries};
      return plan_result(h, partition_onto_odd_cycle(h, r_classes, d_scale, bandwidth_order(h), g.seed, opt));
    };
  });
  sun->callback([&] {
    action = [&] {
      Graph h = inputs.graph(graph_path);
      if (sun_s < 2 || sun_q < 0) throw InputError("--s must be at least 2 and --q non-negative");
      Sun target;
      for (int i = 0; i < 2 * sun_s; ++i) target.cycle.push_back(i);
      for (int j = 0; j < sun_q; ++j) target.leaves.push_back({2 * sun_s + j, 2 * j + 1});
      PartitionOptions opt{beta, retries};
      return plan_result(h, partition_onto_sun(h, target, r_classes, d_scale, bandwidth_order(h), g.seed, opt));
    };
  });

  double alpha = 0.5;
  auto* separable = app.add_subcommand("separable", "Find a small separator with small components");
  separable->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  separable->add_option("--alpha", alpha)->required();
  separable->callback([&] {
    action = [&] {
      Graph h = inputs.graph(graph_path);
      SeparatorResult s = check_separable(h, alpha);
      int code = s.separator ? kSuccess : (s.exact ? kAbsent : kUndecided);
      Result res{code, "separator", to_json(s), {}, {}};
      res.text = s.separator ? line("separator", show(s.separator->members()))
                             : std::string(s.exact ? "no separator\n" : "none found (heuristic)\n");
      if (s.separator) res.dot = to_dot(h, vertex_set_style(*s.separator, "red"));
      return res;
    };
  });

  // ------------------------------------------------------------ transforms
  auto* transform = app.add_subcommand("transform", "Degree splitting and bipartite doubling");
  transform->require_subcommand(1);
  int max_degree = 3;
  std::string a_list, b_list;
  auto trace_result = [&](const ReductionTrace& t) {
    Result res{kSuccess, "reduction", to_json(t), {}, edge_list_text(t.result)};
    DotStyle style;
    for (const Edge& e : t.merge_edges) {
      style.edge_colour[e] = "red";
      style.edge_width[e] = 2.5;
    }
    res.dot = to_dot(t.result, style);
    return res;
  };
  auto* split = transform->add_subcommand("split", "Split vertices above a maximum degree");
  split->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  split->add_option("--max-degree", max_degree)->capture_default_str();
  split->callback([&] { action = [&] { return trace_result(split_high_degree(inputs.graph(graph_path), max_degree)); }; });
  auto* doubling = transform->add_subcommand("double", "Double every vertex outside two independent sets");
  doubling->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  doubling->add_option("--a", a_list, "First independent set (default: best two colour classes)");
  doubling->add_option("--b", b_list, "Second independent set");
  doubling->callback([&] {
    action = [&] {
      Graph h = inputs.graph(graph_path);
      VertexSet a = vertex_list(a_list, "--a"), b = vertex_list(b_list, "--b");
      if (a_list.empty() && b_list.empty()) {
        ColourClasses c = two_color_classes(h, g.exhaustive_cap);
        a = c.a;
        b = c.b;
      }
      check_vertices(h, a);
      check_vertices(h, b);
      return trace_result(bipartite_double(h, a, b));
    };
  });

  // ------------------------------------------------------------ planar
  std::string embedding_path = "-";
  bool triangulate = false;
  auto* planar = app.add_subcommand("planar-subdivide", "Bipartite subdivision of a triangulation, 2t-2 vertices");
  planar->add_option("--embedding", embedding_path, "Edge list with face lines; faces are computed when absent");
  planar->add_flag("--triangulate", triangulate, "Fan-triangulate a non-triangular embedding first");
  planar->callback([&] {
    action = [&] {
      std::vector<Face> faces;
      Graph h = inputs.graph(embedding_path, &faces);
      PlanarEmbedding emb{h, faces};
      if (faces.empty()) {
        std::optional<PlanarEmbedding> found = find_embedding(h);
        if (!found) return Result{kAbsent, "error", Json{{"error", "graph is not planar"}}, {}, "graph is not planar\n"};
        emb = *found;
      }
      if (std::string why = embedding_problem(emb); !why.empty()) throw InputError("invalid embedding: " + why);
      if (triangulate && !is_triangulation(emb)) emb = fan_triangulate(emb);
      SubdivisionResult r = bipartite_subdivision(emb);
      Result res{kSuccess, "planar-subdivision", to_json(r), {}, edge_list_text(r.result)};
      res.dot = to_dot(r.result, coloring_style(r));
      return res;
    };
  });

  std::string independent_list;
  auto* one_sided = app.add_subcommand("one-sided-subdivide", "Subdivide every edge missing an independent set");
  one_sided->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  one_sided->add_option("--independent", independent_list, "Independent set (default: a largest one)");
  one_sided->callback([&] {
    action = [&] {
      Graph h = inputs.graph(graph_path);
      VertexSet x = independent_list.empty() ? maximum_independent_set(h, g.exhaustive_cap).set
                                             : vertex_list(independent_list, "--independent");
      check_vertices(h, x);
      SubdivisionResult r = one_sided_subdivision(h, x);
      Result res{kSuccess, "one-sided-subdivision", to_json(r), {}, edge_list_text(r.result)};
      res.json["independent_set"] = to_json(x);
      res.dot = to_dot(r.result, coloring_style(r));
      return res;
    };
  });

  // ------------------------------------------------------------ generators
  auto* gen = app.add_subcommand("gen", "Generate extremal and test graphs as edge lists");
  gen->require_subcommand(1);
  Vertex gen_s = 0, gen_n = 0, gen_q = 0, gen_copies = 0, gen_t = 0;
  std::vector<Vertex> dims;
  auto graph_result = [&](const Graph& made, const std::vector<Face>* faces = nullptr) {
    Result res{kSuccess, faces ? "embedding" : "graph", {}, to_dot(made), edge_list_text(made, faces)};
    res.json = faces ? to_json(PlanarEmbedding{made, *faces}) : to_json(made);
    return res;
  };
  auto* gen_bip = gen->add_subcommand("bipartite", "K_{s,n-s} on n vertices");
  gen_bip->add_option("s", gen_s)->required();
  gen_bip->add_option("n", gen_n)->required();
  gen_bip->callback([&] { action = [&] { return graph_result(gen_complete_bipartite(gen_s, gen_n)); }; });
  auto* gen_grid_cmd = gen->add_subcommand("grid", "Grid with the given side lengths");
  gen_grid_cmd->add_option("dims", dims)->required();
  gen_grid_cmd->callback([&] { action = [&] { return graph_result(gen_grid(dims)); }; });
  auto* gen_cliques = gen->add_subcommand("cliques", "Disjoint copies of K_q");
  gen_cliques->add_option("q", gen_q)->required();
  gen_cliques->add_option("copies", gen_copies)->required();
  gen_cliques->callback([&] { action = [&] { return graph_result(gen_disjoint_cliques(gen_q, gen_copies)); }; });
  auto* gen_pk4 = gen->add_subcommand("planar-k4", "floor(t/4) disjoint K4s chained into a planar graph");
  gen_pk4->add_option("t", gen_t)->required();
  gen_pk4->callback([&] {
    action = [&] {
      PlanarEmbedding emb = planar_with_k4s_embedding(gen_t);
      return graph_result(emb.graph, &emb.faces);
    };
  });
  gen->preparse_callback([&](std::size_t) { kind_default_format = "text"; });

  // ------------------------------------------------------------ statistics
  auto* stats = app.add_subcommand("stats", "Independence number, two-colour cover and chromatic number");
  stats->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  stats->callback([&] {
    action = [&] {
      GraphStats s = graph_stats(inputs.graph(graph_path), g.exhaustive_cap);
      Result res{kSuccess, "stats", to_json(s), {}, {}};
      res.text = line("alpha", std::to_string(s.alpha)) + line("alpha2", std::to_string(s.alpha2)) +
                 line("chi", std::to_string(s.chi)) + line("exact", yes_no(s.exact));
      return res;
    };
  });
  int bound_t = -1;
  auto* bounds = app.add_subcommand("bounds", "Average-degree bounds for forcing f as a minor");
  bounds->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  bounds->add_option("--t", bound_t, "Order to use (default |f|)");
  bounds->callback([&] {
    action = [&] {
      MinorDegreeBounds b = minor_degree_bounds(inputs.graph(graph_path), bound_t);
      Result res{kSuccess, "bounds", to_json(b), {}, {}};
      res.text = line("lower", std::to_string(b.lower)) + line("upper", std::to_string(b.upper)) +
                 line("witness", "K_{" + std::to_string(b.witness_s) + ",n}");
      return res;
    };
  });

  // ------------------------------------------------------------ oracles
  auto* oracle = app.add_subcommand("oracle", "Exact searches: subdivision, minor, K4-minor-freeness");
  oracle->require_subcommand(1);
  std::string host_path = "-", pattern_path;
  int max_path_length = 0;
  auto limits = [&] {
    SearchLimits l;
    if (g.budget > 0) l.node_budget = g.budget;
    l.max_path_length = max_path_length;
    return l;
  };
  auto* o_sub = oracle->add_subcommand("subdivision", "Is there a subdivision of the pattern in the host?");
  auto* o_minor = oracle->add_subcommand("minor", "Is the pattern a minor of the host?");
  for (CLI::App* sub : {o_sub, o_minor}) {
    sub->add_option("--host", host_path, "Edge-list file ('-' for stdin)")->capture_default_str();
    sub->add_option("--pattern", pattern_path, "Edge-list file")->required();
  }
  o_sub->add_option("--max-path-length", max_path_length, "0: unrestricted")->capture_default_str();
  o_sub->callback([&] {
    action = [&] {
      Graph host = inputs.graph(host_path), h = inputs.graph(pattern_path);
      SubdivisionSearch s = find_subdivision(host, h, limits());
      Result res{search_code(s.outcome), "subdivision-search", to_json(s), {}, {}};
      res.json["validation"] = s.map ? to_json(validate_subdivision(host, h, *s.map)) : Json(nullptr);
      res.text = line("outcome", outcome_name(s.outcome)) + line("nodes", std::to_string(s.nodes));
      res.dot = s.map ? to_dot(host, subdivision_style(*s.map)) : to_dot(host);
      return res;
    };
  });
  o_minor->callback([&] {
    action = [&] {
      Graph host = inputs.graph(host_path), h = inputs.graph(pattern_path);
      MinorSearch s = find_minor(host, h, limits());
      Result res{search_code(s.outcome), "minor-search", to_json(s), {}, {}};
      res.json["validation"] = s.map ? to_json(validate_minor(host, h, *s.map)) : Json(nullptr);
      res.text = line("outcome", outcome_name(s.outcome)) + line("nodes", std::to_string(s.nodes));
      DotStyle style;
      if (s.map)
        for (std::size_t x = 0; x < s.map->branch_sets.size(); ++x)
          for (Vertex v : s.map->branch_sets[x]) style.label[v] = "h" + std::to_string(x);
      res.dot = to_dot(host, style);
      return res;
    };
  });
  auto* o_k4 = oracle->add_subcommand("k4free", "Series-parallel reduction: exit 0 if K4-minor-free");
  o_k4->add_option("--graph", graph_path, "Edge-list file ('-' for stdin)");
  o_k4->callback([&] {
    action = [&] {
      bool free = is_k4_minor_free(inputs.graph(graph_path));
      return Result{free ? kSuccess : kAbsent, "k4-minor-free", Json{{"k4_minor_free", free}}, {},
                    line("k4 minor free", yes_no(free))};
    };
  });

  // ------------------------------------------------------------ pipeline
  auto* embed = app.add_subcommand("embed", "Embed a subdivision of the pattern into the host");
  std::string config_path, emit_dot;
  bool no_oracle = false;
  std::optional<int> high_cutoff;
  embed->add_option("--host", host_path, "Edge-list file ('-' for stdin)")->capture_default_str();
  embed->add_option("--pattern", pattern_path, "Edge-list file")->required();
  embed->add_option("--config", config_path, "JSON pipeline configuration");
  embed->add_option("--high-degree-cutoff", high_cutoff);
  embed->add_flag("--no-oracle", no_oracle, "Skip the exhaustive fallback");
  embed->add_option("--emit-dot", emit_dot, "Also write the host with the subdivision highlighted");
  embed->callback([&] {
    action = [&] {
      Graph host = inputs.graph(host_path), h = inputs.graph(pattern_path);
      PipelineConfig cfg;
      if (!config_path.empty()) {
        Json j;
        try {
          j = Json::parse(inputs.slurp(config_path));
        } catch (const nlohmann::json::parse_error& e) {
          throw InputError(config_path + ": " + e.what());
        }
        if (j.contains("schema")) expect_schema(j, "pipeline-config");
        cfg = pipeline_config_from_json(j);
      }
      cfg.seed = g.seed;
      if (g.budget > 0) {
        cfg.structure_budget = g.budget;
        cfg.oracle_limits.node_budget = g.budget;
      }
      if (high_cutoff) cfg.high_degree_cutoff = *high_cutoff;
      if (no_oracle) cfg.use_oracle = false;
      EmbedOutcome o = embed_subdivision(host, h, cfg);
      int code = o.success() ? kSuccess : (o.oracle == SearchOutcome::kAbsent ? kAbsent : kUndecided);
      Result res{code, "embed", to_json(o), {}, {}};
      res.dot = o.success() ? to_dot(host, subdivision_style(o.certificate->map)) : to_dot(host);
      if (o.success())
        res.text = line("strategy", strategy_name(o.certificate->strategy)) +
                   line("anchors", show(o.certificate->map.anchors)) + line("validation", o.certificate->validation);
      else
        for (const StrategyAttempt& a : o.attempts) res.text += line(strategy_name(a.strategy), a.reason);
      for (const std::string& w : o.warnings) res.text += line("warning", w);
      if (!emit_dot.empty()) {
        std::ofstream f(emit_dot);
        if (!f) throw InputError("cannot write " + emit_dot);
        f << res.dot;
      }
      return res;
    };
  });

  // ------------------------------------------------------------ manifests
  std::string replay_path;
  auto* replay = app.add_subcommand("replay", "Re-run a manifest and compare the output bytes");
  replay->add_option("manifest", replay_path)->required();
  replay->callback([&] {
    action = [&] {
      Json m;
      try {
        m = Json::parse(inputs.slurp(replay_path));
      } catch (const nlohmann::json::parse_error& e) {
        throw InputError(replay_path + ": " + e.what());
      }
      expect_schema(m, "manifest");
      for (const Json& rec : m.at("inputs")) {
        std::string path = rec.at("path").get<std::string>();
        if (path == "-") throw InputError("a run that read standard input cannot be replayed");
        Inputs probe(in);
        if (fnv1a(probe.slurp(path)) != rec.at("fnv1a").get<std::uint64_t>())
          throw InputError("input " + path + " changed since the manifest was written");
      }
      std::vector<std::string> command = m.at("command").get<std::vector<std::string>>();
      std::istringstream no_input;
      std::ostringstream again, again_err;
      int code = run(command, no_input, again, again_err);
      bool same = fnv1a(again.str()) == m.at("outcome").at("output_fnv1a").get<std::uint64_t>() &&
                  code == m.at("outcome").at("exit_code").get<int>();
      Json body{{"identical", same}, {"exit_code", code}, {"output_fnv1a", fnv1a(again.str())}};
      return Result{same ? kSuccess : kAbsent, "replay", body, {}, line("identical", yes_no(same))};
    };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  if (!action) return kInputError;

  auto start = std::chrono::steady_clock::now();
  Result result;
  try {
    result = action();
  } catch (const ParseError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::invalid_argument& e) {
    err << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kUndecided;
  }
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  std::string format = g.format.empty() ? kind_default_format : g.format;
  std::string rendered;
  try {
    rendered = render(result, format);
  } catch (const InputError& e) {
    err << e.what() << "\n";
    return kInputError;
  }
  if (g.output.empty()) {
    out << rendered;
  } else {
    std::ofstream f(g.output);
    if (!f) {
      err << "cannot write " << g.output << "\n";
      return kInputError;
    }
    f << rendered;
  }

  if (!g.manifest.empty()) {
    Json inputs_json = Json::array();
    for (const InputRecord& r : inputs.records())
      inputs_json.push_back(Json{{"path", r.path}, {"fnv1a", r.hash}, {"bytes", r.bytes}});
    Json manifest = document(
        "manifest", Json{{"command", replayable(args)},
                         {"config", Json{{"seed", g.seed},
                                         {"budget", g.budget},
                                         {"format", format},
                                         {"exhaustive_cap", g.exhaustive_cap},
                                         {"threads", g.threads}}},
                         {"inputs", inputs_json},
                         {"seed", g.seed},
                         {"outcome", Json{{"exit_code", result.code}, {"output_fnv1a", fnv1a(rendered)}}},
                         {"wall_time_seconds", seconds}});
    std::ofstream f(g.manifest);
    if (!f) {
      err << "cannot write " << g.manifest << "\n";
      return kInputError;
    }
    f << manifest.dump(2) << "\n";
  }
  return result.code;
}

}  // namespace subdiv::cli
