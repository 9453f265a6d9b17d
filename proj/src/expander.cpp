//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/expander.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>

namespace subdiv {

double ExpanderParams::delta() const { return C * eps1 / std::log(3.0); }

double ExpanderParams::nu() const {
  if (!eps2) throw std::invalid_argument("nu requires eps2");
  double l = std::log(5.0 / *eps2);
  return eps1 / (6.0 * l * l);
}

void ExpanderParams::check_basic() const {
  if (!(eps1 > 0.0)) throw std::invalid_argument("eps1 must be positive");
  if (!(t > 0.0)) throw std::invalid_argument("t must be positive");
}

void ExpanderParams::check_for_extraction() const {
  check_basic();
  if (!(C > 30.0)) throw std::invalid_argument("C must exceed 30");
  if (eps1 > 1.0 / (10.0 * C) * (1.0 + 1e-12))
    throw std::invalid_argument("eps1 must be at most 1/(10C) = " +
                                std::to_string(1.0 / (10.0 * C)));
  if (!(delta() < 1.0)) throw std::invalid_argument("delta must be below 1");
  if (eps2 && !(*eps2 > 0.0 && *eps2 < 0.2))
    throw std::invalid_argument("eps2 must lie in (0, 1/5)");
}

double rho(double x, const ExpanderParams& p) {
  if (x < p.t / 5.0) return 0.0;
  double l = std::log(15.0 * x / p.t);
  return p.eps1 / (l * l);
}

double gamma_weight(double x, const ExpanderParams& p) {
  if (x <= p.t / 5.0) return p.C * p.eps1 / std::log(3.0);
  return p.C * p.eps1 / std::log(15.0 * x / p.t);
}

double phi_score(const Graph& g, const ExpanderParams& p) {
  if (g.order() == 0) throw GraphError("phi of the empty graph");
  return average_degree_value(g) * (1.0 + gamma_weight(g.order(), p));
}

long long deletion_budget(const Rational& avg_degree, double x_size,
                          const ExpanderParams& p) {
  long double d = static_cast<long double>(avg_degree.numerator()) /
                  static_cast<long double>(avg_degree.denominator());
  long double v = d * static_cast<long double>(rho(x_size, p)) * x_size;
  return static_cast<long long>(std::floor(v));
}

namespace {

// Cheapest-first removal on a list of (cost, vertex); returns how many go.
int greedy_cut(std::vector<std::pair<int, Vertex>>& costs, long long budget) {
  std::sort(costs.begin(), costs.end());
  long long spent = 0;
  int removed = 0;
  for (const auto& [c, v] : costs) {
    if (spent + c > budget) break;
    spent += c;
    ++removed;
  }
  return removed;
}

}  // namespace

AdversarialDeletion adversarial_boundary_deletion(const Graph& g,
                                                  const VertexSet& x,
                                                  long long budget) {
  if (budget < 0) throw std::invalid_argument("negative deletion budget");
  std::vector<char> in = x.mask(g.order());
  std::vector<int> to_x(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : x)
    for (Vertex w : g.neighbors(v))
      if (!in[w]) ++to_x[w];
  std::vector<std::pair<int, Vertex>> costs;
  for (Vertex w = 0; w < g.order(); ++w)
    if (to_x[w] > 0) costs.emplace_back(to_x[w], w);
  AdversarialDeletion out;
  out.boundary = static_cast<int>(costs.size());
  int removed = greedy_cut(costs, budget);
  out.surviving = out.boundary - removed;
  for (int i = 0; i < removed; ++i) {
    Vertex w = costs[i].second;
    for (Vertex v : g.neighbors(w))
      if (in[v]) out.removed.emplace_back(v, w);
  }
  std::sort(out.removed.begin(), out.removed.end());
  return out;
}

namespace {

struct SizeWindow {
  int lo = 1;
  int hi = 0;
};

SizeWindow size_window(const Graph& g, const ExpanderParams& p) {
  SizeWindow w;
  w.lo = std::max(1, static_cast<int>(std::ceil(p.t / 2.0 - 1e-12)));
  w.hi = g.order() / 2;
  return w;
}

struct Scored {
  double slack;
  VertexSet x;
};

void keep_worst(std::vector<Scored>& worst, Scored s, int keep) {
  if (keep <= 0) return;
  auto pos = std::upper_bound(worst.begin(), worst.end(), s.slack,
                              [](double v, const Scored& e) { return v < e.slack; });
  worst.insert(pos, std::move(s));
  if (static_cast<int>(worst.size()) > keep) worst.pop_back();
}

ExpansionWitness make_witness(const Graph& g, const VertexSet& x,
                              const Rational& d, const ExpanderParams& p) {
  ExpansionWitness w;
  w.x = x;
  auto k = static_cast<double>(x.size());
  AdversarialDeletion del = adversarial_boundary_deletion(g, x, deletion_budget(d, k, p));
  w.removed = std::move(del.removed);
  w.surviving = del.surviving;
  w.required = rho(k, p) * k;
  return w;
}

VertexSet mask_to_set(std::uint32_t mask) {
  std::vector<Vertex> ids;
  for (Vertex v = 0; mask; ++v, mask >>= 1)
    if (mask & 1U) ids.push_back(v);
  return VertexSet(std::move(ids));
}

struct RangeResult {
  long long checked = 0;
  std::uint32_t first_violation = 0;
  bool violated = false;
  std::vector<std::pair<double, std::uint32_t>> worst;  // (slack, mask)
};

void scan_masks(const std::vector<std::uint32_t>& adj, SizeWindow win,
                const std::vector<long long>& budget,
                const std::vector<double>& required, std::uint32_t begin,
                std::uint32_t end, int keep, bool stop_on_violation,
                const std::atomic<std::uint32_t>& earliest, RangeResult& out) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::pair<int, Vertex>> costs;
  costs.reserve(n);
  for (std::uint32_t mask = begin; mask < end; ++mask) {
    int k = std::popcount(mask);
    if (k < win.lo || k > win.hi) continue;
    if (stop_on_violation && mask > earliest.load(std::memory_order_relaxed)) break;
    costs.clear();
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) continue;
      int c = std::popcount(adj[v] & mask);
      if (c) costs.emplace_back(c, v);
    }
    int boundary = static_cast<int>(costs.size());
    int surviving = boundary - greedy_cut(costs, budget[k]);
    double slack = surviving - required[k];
    ++out.checked;
    if (keep > 0 &&
        (static_cast<int>(out.worst.size()) < keep || slack < out.worst.back().first)) {
      auto item = std::make_pair(slack, mask);
      out.worst.insert(std::upper_bound(out.worst.begin(), out.worst.end(), item), item);
      if (static_cast<int>(out.worst.size()) > keep) out.worst.pop_back();
    }
    if (slack < 0 && !out.violated) {
      out.violated = true;
      out.first_violation = mask;
      if (stop_on_violation) break;
    }
  }
}

ExpanderCertificate verify_exhaustive(const Graph& g, const ExpanderParams& p,
                                      const VerifyOptions& opt) {
  const int n = g.order();
  if (n > opt.exhaustive_cap)
    throw CapExceeded("exhaustive verification cap is " +
                      std::to_string(opt.exhaustive_cap) + " vertices, graph has " +
                      std::to_string(n));
  if (n > 30) throw CapExceeded("exhaustive verification supports at most 30 vertices");
  ExpanderCertificate cert;
  cert.params = p;
  cert.mode = VerifyMode::kExhaustive;
  cert.host_fingerprint = graph_fingerprint(g);
  cert.host_order = n;
  SizeWindow win = size_window(g, p);
  if (n == 0 || win.lo > win.hi) {
    cert.passed = true;
    return cert;
  }
  Rational d = average_degree(g);
  std::vector<std::uint32_t> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.u] |= 1U << e.v;
    adj[e.v] |= 1U << e.u;
  }
  std::vector<long long> budget(n + 1, 0);
  std::vector<double> required(n + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    budget[k] = deletion_budget(d, k, p);
    required[k] = rho(k, p) * k;
  }
  const std::uint32_t total = 1U << n;
  int threads = std::max(1, std::min(opt.threads, 64));
  std::vector<RangeResult> results(threads);
  std::atomic<std::uint32_t> earliest{std::numeric_limits<std::uint32_t>::max()};
  auto run = [&](int i) {
    std::uint32_t b = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(total) * i / threads);
    std::uint32_t e = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(total) * (i + 1) / threads);
    // Witness collection needs the full scan; the first violation alone
    // lets a worker stop once an earlier range has one.
    scan_masks(adj, win, budget, required, b, e, opt.keep_worst, false, earliest,
               results[i]);
  };
  if (threads == 1) {
    run(0);
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(run, i);
    for (auto& t : pool) t.join();
  }
  std::vector<std::pair<double, std::uint32_t>> worst;
  for (const RangeResult& r : results) {
    cert.sets_checked += r.checked;
    worst.insert(worst.end(), r.worst.begin(), r.worst.end());
    if (r.violated && !cert.counterexample)
      cert.counterexample = make_witness(g, mask_to_set(r.first_violation), d, p);
  }
  std::sort(worst.begin(), worst.end());
  if (static_cast<int>(worst.size()) > opt.keep_worst) worst.resize(opt.keep_worst);
  for (const auto& [slack, mask] : worst)
    cert.worst.push_back(make_witness(g, mask_to_set(mask), d, p));
  cert.passed = !cert.counterexample.has_value();
  return cert;
}

// Grows a set to k vertices, always adding the outside vertex with the most
// edges into the set; this finds sparse cuts quickly.
VertexSet greedy_clump(const Graph& g, Vertex start, int k, std::mt19937_64& rng) {
  const int n = g.order();
  std::vector<char> in(n, 0);
  std::vector<int> to_set(n, 0);
  std::vector<Vertex> members;
  auto add = [&](Vertex v) {
    in[v] = 1;
    members.push_back(v);
    for (Vertex w : g.neighbors(v)) ++to_set[w];
  };
  add(start);
  while (static_cast<int>(members.size()) < k) {
    int best = -1;
    std::vector<Vertex> ties;
    for (Vertex v = 0; v < n; ++v) {
      if (in[v]) continue;
      if (to_set[v] > best) {
        best = to_set[v];
        ties.assign(1, v);
      } else if (to_set[v] == best) {
        ties.push_back(v);
      }
    }
    std::uniform_int_distribution<std::size_t> pick(0, ties.size() - 1);
    add(ties[pick(rng)]);
  }
  return VertexSet(std::move(members));
}

VertexSet bfs_prefix(const Graph& g, Vertex start, int k, std::mt19937_64& rng) {
  const int n = g.order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> order;
  std::uniform_int_distribution<Vertex> any(0, n - 1);
  Vertex s = start;
  while (static_cast<int>(order.size()) < k) {
    while (seen[s]) s = any(rng);
    std::size_t head = order.size();
    seen[s] = 1;
    order.push_back(s);
    while (head < order.size() && static_cast<int>(order.size()) < k) {
      Vertex v = order[head++];
      for (Vertex w : g.neighbors(v)) {
        if (seen[w]) continue;
        seen[w] = 1;
        order.push_back(w);
        if (static_cast<int>(order.size()) == k) break;
      }
    }
  }
  return VertexSet(std::move(order));
}

ExpanderCertificate verify_sampled(const Graph& g, const ExpanderParams& p,
                                   const VerifyOptions& opt) {
  ExpanderCertificate cert;
  cert.params = p;
  cert.mode = VerifyMode::kSampled;
  cert.host_fingerprint = graph_fingerprint(g);
  cert.host_order = g.order();
  SizeWindow win = size_window(g, p);
  if (g.order() == 0 || win.lo > win.hi) {
    cert.passed = true;
    return cert;
  }
  Rational d = average_degree(g);
  std::vector<Scored> worst;
  auto consider = [&](const VertexSet& x) {
    int k = static_cast<int>(x.size());
    if (k < win.lo || k > win.hi) return;
    ++cert.sets_checked;
    AdversarialDeletion del = adversarial_boundary_deletion(g, x, deletion_budget(d, k, p));
    double slack = del.surviving - rho(k, p) * k;
    keep_worst(worst, {slack, x}, opt.keep_worst);
    if (slack < 0 && !cert.counterexample) cert.counterexample = make_witness(g, x, d, p);
  };
  // Unions of whole components first: they have empty boundary.
  std::vector<VertexSet> comps = connected_components(g);
  std::sort(comps.begin(), comps.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
  VertexSet acc;
  for (const VertexSet& c : comps) {
    consider(c);
    acc = acc.unite(c);
    consider(acc);
  }
  std::mt19937_64 rng(opt.seed);
  std::uniform_int_distribution<Vertex> any(0, g.order() - 1);
  std::uniform_int_distribution<int> size(win.lo, win.hi);
  for (int trial = 0; trial < opt.trials && !cert.counterexample; ++trial) {
    int k = size(rng);
    Vertex start = any(rng);
    switch (trial % 3) {
      case 0:
        consider(bfs_prefix(g, start, k, rng));
        break;
      case 1:
        consider(greedy_clump(g, start, k, rng));
        break;
      default: {
        std::vector<Vertex> ids(g.order());
        for (Vertex v = 0; v < g.order(); ++v) ids[v] = v;
        std::shuffle(ids.begin(), ids.end(), rng);
        ids.resize(k);
        consider(VertexSet(std::move(ids)));
      }
    }
  }
  for (const Scored& s : worst) cert.worst.push_back(make_witness(g, s.x, d, p));
  cert.passed = !cert.counterexample.has_value();
  return cert;
}

}  // namespace

ExpanderCertificate verify_robust_expander(const Graph& g,
                                           const ExpanderParams& params,
                                           VerifyMode mode,
                                           const VerifyOptions& options) {
  params.check_basic();
  if (mode == VerifyMode::kExhaustive) return verify_exhaustive(g, params, options);
  return verify_sampled(g, params, options);
}

namespace {

// Working subgraph of the input, tracked by host ids with live degrees.
class Shrinker {
 public:
  explicit Shrinker(const Graph& g) : g_(g), alive_(g.order(), 1), deg_(g.order()) {
    for (Vertex v = 0; v < g.order(); ++v) deg_[v] = g.degree(v);
    n_ = g.order();
    e_ = static_cast<long long>(g.size());
  }

  void restrict_to(const VertexSet& keep) {
    std::vector<char> k = keep.mask(g_.order());
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v] && !k[v]) remove(v);
  }

  // Repeatedly delete a vertex of degree below d/2 (deg * n < e).
  void shed() {
    bool again = true;
    while (again && n_ > 0) {
      again = false;
      for (Vertex v = 0; v < g_.order(); ++v) {
        if (alive_[v] && static_cast<long long>(deg_[v]) * n_ < e_) {
          remove(v);
          again = true;
        }
      }
    }
  }

  VertexSet members() const {
    std::vector<Vertex> ids;
    for (Vertex v = 0; v < g_.order(); ++v)
      if (alive_[v]) ids.push_back(v);
    return VertexSet(std::move(ids));
  }

  Vertex order() const { return n_; }

 private:
  void remove(Vertex v) {
    alive_[v] = 0;
    --n_;
    for (Vertex w : g_.neighbors(v))
      if (alive_[w]) {
        --deg_[w];
        --e_;
      }
  }

  const Graph& g_;
  std::vector<char> alive_;
  std::vector<int> deg_;
  Vertex n_ = 0;
  long long e_ = 0;
};

double phi_of(const Graph& host, const VertexSet& s, const ExpanderParams& p) {
  return phi_score(induced_subgraph(host, s).graph, p);
}

}  // namespace

ExtractionResult extract_expander(const Graph& g, double eps1, double eps2,
                                  const ExtractOptions& options) {
  if (g.order() == 0 || g.size() == 0)
    throw std::invalid_argument("extract_expander needs a graph with an edge");
  const double d0 = average_degree_value(g);
  ExpanderParams params;
  params.C = options.C;
  params.eps1 = eps1;
  params.eps2 = eps2;
  params.t = eps2 * d0;
  params.check_for_extraction();

  ExtractionResult out;
  out.input_avg_degree = d0;
  out.delta = params.delta();
  Shrinker work(g);
  std::optional<ExpanderCertificate> cert;
  while (true) {
    work.shed();
    VertexSet current = work.members();
    InducedSubgraph sub = induced_subgraph(g, current);
    std::vector<VertexSet> comps = connected_components(sub.graph);
    if (comps.size() > 1) {
      double best = -1.0;
      VertexSet pick;
      for (const VertexSet& c : comps) {
        double f = phi_score(induced_subgraph(sub.graph, c).graph, params);
        if (f > best) {
          best = f;
          pick = c;
        }
      }
      std::vector<Vertex> host;
      for (Vertex v : pick) host.push_back(sub.original[v]);
      work.restrict_to(VertexSet(std::move(host)));
      continue;
    }
    VerifyMode mode = sub.graph.order() <= options.verify.exhaustive_cap
                          ? VerifyMode::kExhaustive
                          : VerifyMode::kSampled;
    cert = verify_robust_expander(sub.graph, params, mode, options.verify);
    if (cert->passed) break;

    const ExpansionWitness& bad = *cert->counterexample;
    Graph pruned = remove_edges(sub.graph, bad.removed);
    VertexSet y = bad.x.unite(neighborhood(pruned, bad.x));
    VertexSet rest = VertexSet::range(sub.graph.order()).minus(bad.x);
    double here = phi_score(sub.graph, params);
    double phi_y = phi_of(sub.graph, y, params);
    double phi_rest = rest.empty() ? -1.0 : phi_of(sub.graph, rest, params);
    const VertexSet* next = nullptr;
    if (phi_y > here && phi_y >= phi_rest) next = &y;
    else if (phi_rest > here) next = &rest;
    if (!next) {
      out.stalled = true;
      break;
    }
    std::vector<Vertex> host;
    for (Vertex v : *next) host.push_back(sub.original[v]);
    work.restrict_to(VertexSet(std::move(host)));
    ++out.improvement_steps;
  }

  VertexSet final_set = work.members();
  InducedSubgraph sub = induced_subgraph(g, final_set);
  out.expander = sub.graph;
  out.host_ids = sub.original;
  out.certificate = std::move(*cert);
  out.avg_degree = average_degree_value(out.expander);
  out.min_degree = out.expander.min_degree();
  out.connected = is_connected(out.expander);
  if (out.expander.order() <= options.connectivity_cap)
    out.connectivity = vertex_connectivity(out.expander);

  // Both guarantees are exact consequences of phi never decreasing.
  if (out.avg_degree < (1.0 - out.delta) * d0 * (1.0 - 1e-12))
    throw ExtractionError("average degree fell below (1-delta) d");
  if (2LL * out.min_degree * out.expander.order() <
      2LL * static_cast<long long>(out.expander.size()))
    throw ExtractionError("minimum degree fell below d(H)/2");
  return out;
}

}  // namespace subdiv
