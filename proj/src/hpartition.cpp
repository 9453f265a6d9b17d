//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#include "subdiv/hpartition.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "subdiv/families.hpp"

namespace subdiv {

// ---------------------------------------------------------------- bandwidth

int order_bandwidth(const Graph& h, const std::vector<Vertex>& order) {
  if (static_cast<Vertex>(order.size()) != h.order())
    throw GraphError("order_bandwidth: order has the wrong length");
  std::vector<int> pos(h.order(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    check_vertex(h, order[i]);
    if (pos[order[i]] >= 0) throw GraphError("order_bandwidth: repeated vertex");
    pos[order[i]] = static_cast<int>(i);
  }
  int b = 0;
  for (const Edge& e : h.edges()) b = std::max(b, std::abs(pos[e.u] - pos[e.v]));
  return b;
}

namespace {

// Level order per component; the component of `first` (if any) starts
// there, the others at a pseudo-peripheral vertex.
std::vector<Vertex> level_order(const Graph& h, Vertex first) {
  const Vertex n = h.order();
  std::vector<Vertex> order;
  std::vector<char> done(n, 0);
  auto by_degree = [&](Vertex a, Vertex b) {
    return h.degree(a) != h.degree(b) ? h.degree(a) < h.degree(b) : a < b;
  };
  for (Vertex s = 0; s < n; ++s) {
    if (done[s]) continue;
    // Pseudo-peripheral start: walk to a farthest low-degree vertex until
    // the eccentricity stops growing.
    Vertex start = s;
    int ecc = -1;
    std::vector<int> reach = bfs_layers(h, VertexSet{s});
    if (first >= 0 && reach[first] >= 0) {
      start = first;
      ecc = 1 << 30;
    }
    for (int round = 0; round < 8 && ecc < (1 << 30); ++round) {
      std::vector<int> layer = bfs_layers(h, VertexSet{start});
      int far = *std::max_element(layer.begin(), layer.end());
      if (far <= ecc) break;
      ecc = far;
      Vertex best = start;
      for (Vertex v = 0; v < n; ++v)
        if (layer[v] == far && (best == start || by_degree(v, best))) best = v;
      start = best;
    }
    std::deque<Vertex> queue{start};
    done[start] = 1;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      order.push_back(v);
      std::vector<Vertex> next;
      for (Vertex w : h.neighbors(v))
        if (!done[w]) {
          done[w] = 1;
          next.push_back(w);
        }
      std::sort(next.begin(), next.end(), by_degree);
      queue.insert(queue.end(), next.begin(), next.end());
    }
  }
  return order;
}

// Is there an order of bandwidth <= b? Fills `order` on success.
bool bandwidth_feasible(const Graph& h, int b, std::vector<Vertex>& order, long long& nodes) {
  const Vertex n = h.order();
  std::vector<int> pos(n, -1);
  std::vector<int> open(n, 0);  // unplaced neighbours
  for (Vertex v = 0; v < n; ++v) open[v] = h.degree(v);
  order.clear();
  std::function<bool()> dfs = [&]() -> bool {
    if (--nodes < 0) return false;
    int p = static_cast<int>(order.size());
    if (p == n) return true;
    // A placed vertex whose window closes now must take its last neighbour here.
    for (Vertex u : order)
      if (open[u] > std::max(0, pos[u] + b - p + 1)) return false;
    for (Vertex v = 0; v < n; ++v) {
      if (pos[v] >= 0) continue;
      bool ok = true;
      for (Vertex u : h.neighbors(v))
        if (pos[u] >= 0 && p - pos[u] > b) ok = false;
      if (!ok) continue;
      pos[v] = p;
      order.push_back(v);
      for (Vertex u : h.neighbors(v)) --open[u];
      if (dfs()) return true;
      for (Vertex u : h.neighbors(v)) ++open[u];
      order.pop_back();
      pos[v] = -1;
      if (nodes < 0) return false;
    }
    return false;
  };
  return dfs();
}

}  // namespace

BandwidthOrder bandwidth_order(const Graph& h, int exact_cap) {
  BandwidthOrder out;
  out.order = level_order(h, -1);
  out.b = order_bandwidth(h, out.order);
  std::vector<std::vector<Vertex>> others;
  others.emplace_back(h.order());
  std::iota(others.back().begin(), others.back().end(), 0);
  if (h.order() <= 400)
    for (Vertex v = 0; v < h.order(); ++v) others.push_back(level_order(h, v));
  for (auto& order : others) {
    int b = order_bandwidth(h, order);
    if (b < out.b) {
      out.b = b;
      out.order = std::move(order);
    }
  }
  if (h.order() > exact_cap) return out;
  int lower = 0;
  for (Vertex v = 0; v < h.order(); ++v) lower = std::max(lower, (h.degree(v) + 1) / 2);
  long long nodes = 50000000;
  for (int b = lower; b < out.b; ++b) {
    std::vector<Vertex> order;
    if (bandwidth_feasible(h, b, order, nodes)) {
      out.order = order;
      out.b = b;
      out.exact = true;
      return out;
    }
    if (nodes < 0) return out;
  }
  out.exact = true;
  return out;
}

// ---------------------------------------------------------------- targets

namespace {

struct Target {
  TargetKind kind;
  Graph graph;
  std::vector<Vertex> labels;
  std::vector<char> a_side;  // class -> hosts A vertices
  std::vector<std::pair<int, int>> slots;  // (A class, B class) per slot
};

Target odd_cycle_target(int r) {
  Target t{TargetKind::kOddCycle, cycle_graph(r), {}, std::vector<char>(r, 0), {}};
  // Any class can host either side on an odd cycle; the state graph below
  // only uses adjacency, so mark every class as A and B alike.
  std::fill(t.a_side.begin(), t.a_side.end(), 1);
  for (int l = 0; l < r; ++l) t.slots.emplace_back(l, (l + 1) % r);
  return t;
}

Target sun_target(const Sun& sun) {
  int len = static_cast<int>(sun.cycle.size());
  int q = static_cast<int>(sun.leaves.size());
  std::vector<Edge> edges;
  for (int i = 0; i < len; ++i) edges.emplace_back(i, (i + 1) % len);
  for (int j = 0; j < q; ++j) edges.emplace_back(sun.leaves[j].second, len + j);
  Target t{TargetKind::kSun, Graph::from_edges(len + q, edges), {}, {}, {}};
  t.labels = sun.cycle;
  for (const auto& [leaf, at] : sun.leaves) t.labels.push_back(leaf);
  t.a_side.assign(len + q, 0);
  for (int i = 0; i < len; i += 2) t.a_side[i] = 1;
  for (int j = 0; j < q; ++j) t.a_side[len + j] = 1;
  for (int l = 0; l < len / 2; ++l) t.slots.emplace_back(2 * l, 2 * l + 1);
  for (int j = 0; j < q; ++j) t.slots.emplace_back(len + j, sun.leaves[j].second);
  return t;
}

// States are ordered pairs (A class, B class) adjacent in the target; a
// move changes one coordinate and keeps the pair adjacent.
struct StateGraph {
  std::vector<std::pair<int, int>> states;
  std::vector<std::vector<int>> moves;
  std::vector<std::vector<int>> index;  // [a][b] -> state or -1

  explicit StateGraph(const Target& t) {
    int k = t.graph.order();
    index.assign(k, std::vector<int>(k, -1));
    for (int a = 0; a < k; ++a) {
      if (!t.a_side[a]) continue;
      for (Vertex b : t.graph.neighbors(a)) {
        if (t.kind == TargetKind::kSun && t.a_side[b]) continue;
        index[a][b] = static_cast<int>(states.size());
        states.emplace_back(a, b);
      }
    }
    moves.resize(states.size());
    for (std::size_t s = 0; s < states.size(); ++s) {
      auto [a, b] = states[s];
      for (Vertex a2 : t.graph.neighbors(b))
        if (a2 != a && index[a2][b] >= 0) moves[s].push_back(index[a2][b]);
      for (Vertex b2 : t.graph.neighbors(a))
        if (b2 != b && index[a][b2] >= 0) moves[s].push_back(index[a][b2]);
    }
  }

  std::vector<int> shortest(int from, int to) const {
    std::vector<int> parent(states.size(), -2);
    std::deque<int> queue{from};
    parent[from] = -1;
    while (!queue.empty()) {
      int s = queue.front();
      queue.pop_front();
      if (s == to) break;
      for (int n : moves[s])
        if (parent[n] == -2) {
          parent[n] = s;
          queue.push_back(n);
        }
    }
    if (parent[to] == -2) throw std::logic_error("partition: target state unreachable");
    std::vector<int> path;
    for (int s = to; s >= 0; s = parent[s]) path.push_back(s);
    std::reverse(path.begin(), path.end());
    return path;  // path[0] == from
  }
};

struct Layout {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<int> side;  // 0 = A, 1 = B
  int width = 0;
  int t = 0;
  int segments = 0;
};

class Partitioner {
 public:
  Partitioner(const Graph& h, Target target, int r, double d, const BandwidthOrder& bw,
              const PartitionOptions& options)
      : h_(h), target_(std::move(target)), states_(target_), r_(r), d_(d) {
    if (h.order() > d) throw std::invalid_argument("partition: |H| exceeds d");
    std::vector<int> colour = two_coloring(h);
    if (colour.empty() && h.order() > 0) throw std::invalid_argument("partition: H is not bipartite");
    int actual_b = order_bandwidth(h, bw.order);
    beta_ = options.beta > 0 ? options.beta : std::max(actual_b, 1) / d;
    if (actual_b > beta_ * d + 1e-9)
      throw std::invalid_argument("partition: bandwidth exceeds beta * d");
    retries_ = options.retries;
    cap_ = static_cast<int>(std::floor(d / r + 1e-9));
    // Per component, the larger colour class is the A side.
    layout_.side.assign(h.order(), 0);
    for (const VertexSet& comp : connected_components(h)) {
      int zeros = 0;
      for (Vertex v : comp) zeros += colour[v] == 0;
      int a_colour = 2 * zeros >= static_cast<int>(comp.size()) ? 0 : 1;
      for (Vertex v : comp) layout_.side[v] = colour[v] == a_colour ? 0 : 1;
    }
    layout_.width = std::max(1, static_cast<int>(std::floor(beta_ * d + 1e-9)));
    layout_.t = static_cast<int>(std::ceil(1.0 / std::sqrt(beta_) - 1e-12));
    for (std::size_t i = 0; i < bw.order.size(); i += layout_.width) {
      std::size_t end = std::min(bw.order.size(), i + layout_.width);
      layout_.blocks.emplace_back(bw.order.begin() + i, bw.order.begin() + end);
    }
    int nb = static_cast<int>(layout_.blocks.size());
    layout_.segments = (nb + layout_.t - 1) / layout_.t;
  }

  PartitionResult run(std::uint64_t seed) {
    PartitionResult out;
    long long best_excess = -1;
    for (int attempt = 0; attempt < std::max(1, retries_); ++attempt) {
      std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ULL * (attempt + 1)));
      for (int strategy = 0; strategy < 2; ++strategy) {
        PartitionPlan plan = strategy == 0 ? segment_walk(rng) : paced_walk(rng);
        repair(plan, rng);
        finish(plan, seed, attempt);
        if (!plan_problem(h_, plan).empty() && !overfull(plan)) {
          throw std::logic_error("partition: walk broke an edge: " + plan_problem(h_, plan));
        }
        long long excess = 0;
        for (int l : plan.loads) excess += std::max(0, l - cap_);
        out.attempts = attempt + 1;
        if (excess == 0) {
          out.plan = plan;
          out.best_near_miss.reset();
          out.overflow.clear();
          return out;
        }
        if (best_excess < 0 || excess < best_excess) {
          best_excess = excess;
          out.best_near_miss = plan;
          out.overflow.clear();
          for (int l : plan.loads) out.overflow.push_back(std::max(0, l - cap_));
        }
      }
    }
    return out;
  }

 private:
  PartitionPlan blank() const {
    PartitionPlan p;
    p.kind = target_.kind;
    p.target = target_.graph;
    p.target_labels = target_.labels;
    p.r = r_;
    p.d = d_;
    p.cap = cap_;
    p.classes.assign(h_.order(), -1);
    p.block_width = layout_.width;
    p.segment_blocks = layout_.t;
    p.segments = layout_.segments;
    return p;
  }

  void place_block(PartitionPlan& p, int block, int state) const {
    auto [a, b] = states_.states[state];
    for (Vertex v : layout_.blocks[block]) p.classes[v] = layout_.side[v] == 0 ? a : b;
  }

  // Segment walk: every segment gets a random slot; its first blocks walk
  // the state graph from the previous segment's state to that slot.
  PartitionPlan segment_walk(std::mt19937_64& rng) const {
    PartitionPlan p = blank();
    p.strategy = "segment-walk";
    std::uniform_int_distribution<int> pick(0, static_cast<int>(target_.slots.size()) - 1);
    int nb = static_cast<int>(layout_.blocks.size());
    int state = -1;
    for (int seg = 0; seg < layout_.segments; ++seg) {
      int slot = pick(rng);
      auto [sa, sb] = target_.slots[slot];
      int goal = states_.index[sa][sb];
      p.segment_slots.push_back(slot);
      if (target_.kind == TargetKind::kOddCycle) {
        int prev_b = state < 0 ? r_ - 1 : states_.states[state].second;
        int star = ((sa - prev_b) % r_ + r_) % r_;
        if (star % 2 == 0) star += r_;
        p.ell_star.push_back(star);
      }
      std::vector<int> path = state < 0 ? std::vector<int>{goal} : states_.shortest(state, goal);
      p.walk_lengths.push_back(static_cast<int>(path.size()) - 1);
      for (int k = 0; k < layout_.t; ++k) {
        int block = seg * layout_.t + k;
        if (block >= nb) break;
        int s = k + 1 < static_cast<int>(path.size()) ? path[k + 1] : goal;
        place_block(p, block, s);
        state = s;
      }
    }
    return p;
  }

  // Paced walk: per block, stay or take one move, whichever leaves the
  // smaller peak load (with a little noise to vary retries).
  PartitionPlan paced_walk(std::mt19937_64& rng) const {
    PartitionPlan p = blank();
    p.strategy = "paced-walk";
    std::uniform_int_distribution<int> start(0, static_cast<int>(states_.states.size()) - 1);
    std::uniform_real_distribution<double> noise(0.0, 1.0);
    std::vector<int> load(target_.graph.order(), 0);
    int state = start(rng);
    for (std::size_t block = 0; block < layout_.blocks.size(); ++block) {
      int na = 0, nb = 0;
      for (Vertex v : layout_.blocks[block]) (layout_.side[v] == 0 ? na : nb)++;
      std::vector<int> options{state};
      options.insert(options.end(), states_.moves[state].begin(), states_.moves[state].end());
      double best = 0;
      int choice = state;
      for (std::size_t i = 0; i < options.size(); ++i) {
        auto [a, b] = states_.states[options[i]];
        double score = std::max(load[a] + na, load[b] + nb) + noise(rng);
        if (i == 0 || score < best) {
          best = score;
          choice = options[i];
        }
      }
      state = choice;
      place_block(p, static_cast<int>(block), state);
      load[states_.states[state].first] += na;
      load[states_.states[state].second] += nb;
    }
    return p;
  }

  // Moves single vertices out of overfull classes when all their
  // neighbours' classes stay adjacent to the new class.
  void repair(PartitionPlan& p, std::mt19937_64& rng) const {
    int k = target_.graph.order();
    std::vector<int> load(k, 0);
    for (int c : p.classes) ++load[c];
    std::vector<Vertex> order(h_.order());
    std::iota(order.begin(), order.end(), 0);
    bool changed = true;
    while (changed && *std::max_element(load.begin(), load.end()) > cap_) {
      changed = false;
      std::shuffle(order.begin(), order.end(), rng);
      for (Vertex v : order) {
        if (load[p.classes[v]] <= cap_) continue;
        int best = -1;
        for (int c = 0; c < k; ++c) {
          if (c == p.classes[v] || load[c] >= cap_) continue;
          bool fits = true;
          for (Vertex u : h_.neighbors(v))
            if (!target_.graph.adjacent(c, p.classes[u])) fits = false;
          if (fits && (best < 0 || load[c] < load[best])) best = c;
        }
        if (best < 0) continue;
        --load[p.classes[v]];
        ++load[best];
        p.classes[v] = best;
        changed = true;
      }
    }
    while (*std::max_element(load.begin(), load.end()) > cap_ && augment(p, load, rng)) {
    }
  }

  bool fits(const PartitionPlan& p, Vertex v, int c) const {
    for (Vertex u : h_.neighbors(v))
      if (!target_.graph.adjacent(c, p.classes[u])) return false;
    return true;
  }

  // A chain of single-vertex moves from an overfull class to one with
  // slack: every class on the way hands one vertex to the next.
  bool augment(PartitionPlan& p, std::vector<int>& load, std::mt19937_64& rng) const {
    int k = target_.graph.order();
    std::vector<int> over;
    for (int c = 0; c < k; ++c)
      if (load[c] > cap_) over.push_back(c);
    std::shuffle(over.begin(), over.end(), rng);
    std::vector<std::vector<Vertex>> members(k);
    for (Vertex v = 0; v < h_.order(); ++v) members[p.classes[v]].push_back(v);
    for (auto& m : members) std::shuffle(m.begin(), m.end(), rng);
    for (int source : over) {
      std::vector<int> parent(k, -2);
      std::vector<Vertex> mover(k, -1);
      std::deque<int> queue{source};
      parent[source] = -1;
      int sink = -1;
      while (!queue.empty() && sink < 0) {
        int c = queue.front();
        queue.pop_front();
        for (Vertex v : members[c]) {
          for (int c2 = 0; c2 < k && sink < 0; ++c2) {
            if (parent[c2] != -2 || !fits(p, v, c2)) continue;
            parent[c2] = c;
            mover[c2] = v;
            if (load[c2] < cap_) sink = c2;
            else queue.push_back(c2);
          }
          if (sink >= 0) break;
        }
      }
      if (sink < 0) continue;
      // Apply the hops nearest the sink first, checking each against the
      // classes as they are at that moment.
      std::vector<std::pair<Vertex, int>> done;
      bool ok = true;
      for (int c = sink; parent[c] >= 0; c = parent[c]) {
        Vertex v = mover[c];
        if (!fits(p, v, c)) {
          ok = false;
          break;
        }
        done.emplace_back(v, p.classes[v]);
        p.classes[v] = c;
      }
      // Later hops may have moved an earlier mover's neighbour.
      for (const auto& [v, from] : done)
        if (ok && !fits(p, v, p.classes[v])) ok = false;
      if (!ok) {
        for (auto it = done.rbegin(); it != done.rend(); ++it) p.classes[it->first] = it->second;
        continue;
      }
      --load[source];
      ++load[sink];
      return true;
    }
    return false;
  }

  bool overfull(const PartitionPlan& p) const {
    return std::any_of(p.loads.begin(), p.loads.end(), [&](int l) { return l > cap_; });
  }

  void finish(PartitionPlan& p, std::uint64_t seed, int attempt) const {
    p.seed = seed;
    p.attempt = attempt;
    p.loads.assign(target_.graph.order(), 0);
    for (int c : p.classes) ++p.loads[c];
    long long w = 0;
    for (std::size_t block = 0; block < layout_.blocks.size(); ++block)
      if (static_cast<int>(block % layout_.t) < r_) w += static_cast<long long>(layout_.blocks[block].size());
    p.w_mass = w;
    p.w_mass_ceiling = static_cast<double>(layout_.segments) * r_ * layout_.width;
    if (static_cast<double>(w) > p.w_mass_ceiling + 1e-9)
      throw std::logic_error("partition: W mass above its ceiling");
    p.w_mass_within_sqrt_beta = static_cast<double>(w) <= r_ * std::sqrt(beta_) * d_ + 1e-9;
  }

  const Graph& h_;
  Target target_;
  StateGraph states_;
  int r_;
  double d_;
  double beta_ = 0.0;
  int retries_ = 64;
  int cap_ = 0;
  Layout layout_;
};

}  // namespace

std::string plan_problem(const Graph& h, const PartitionPlan& plan) {
  if (static_cast<Vertex>(plan.classes.size()) != h.order()) return "class map has the wrong size";
  std::vector<int> load(plan.target.order(), 0);
  for (Vertex v = 0; v < h.order(); ++v) {
    int c = plan.classes[v];
    if (c < 0 || c >= plan.target.order()) return "vertex " + std::to_string(v) + " has no class";
    ++load[c];
  }
  for (int c = 0; c < plan.target.order(); ++c)
    if (load[c] > plan.cap)
      return "class " + std::to_string(c) + " holds " + std::to_string(load[c]) + " > cap " +
             std::to_string(plan.cap);
  for (const Edge& e : h.edges())
    if (!plan.target.adjacent(plan.classes[e.u], plan.classes[e.v]))
      return "edge " + std::to_string(e.u) + "-" + std::to_string(e.v) + " maps to classes " +
             std::to_string(plan.classes[e.u]) + "," + std::to_string(plan.classes[e.v]);
  return {};
}

PartitionResult partition_onto_odd_cycle(const Graph& h, int r, double d,
                                         const BandwidthOrder& bw, std::uint64_t seed,
                                         const PartitionOptions& options) {
  if (r < 3 || r % 2 == 0) throw std::invalid_argument("partition_onto_odd_cycle: r must be odd and >= 3");
  Partitioner p(h, odd_cycle_target(r), r, d, bw, options);
  return p.run(seed);
}

PartitionResult partition_onto_sun(const Graph& h, const Sun& sun, int r, double d,
                                   const BandwidthOrder& bw, std::uint64_t seed,
                                   const PartitionOptions& options) {
  int len = static_cast<int>(sun.cycle.size());
  int s = len / 2;
  int q = sun.b();
  if (len < 4 || len % 2) throw std::invalid_argument("partition_onto_sun: sun cycle must be even, length >= 4");
  if (q > s) throw std::invalid_argument("partition_onto_sun: more leaves than s");
  if (s + q < r) throw std::invalid_argument("partition_onto_sun: s + q below r");
  if (r < 1) throw std::invalid_argument("partition_onto_sun: r must be positive");
  std::vector<char> taken(len, 0);
  for (const auto& [leaf, at] : sun.leaves) {
    if (at < 0 || at >= len || at % 2 == 0 || taken[at])
      throw std::invalid_argument("partition_onto_sun: leaves must sit on distinct x_2i positions");
    taken[at] = 1;
  }
  Partitioner p(h, sun_target(sun), r, d, bw, options);
  return p.run(seed);
}

// ---------------------------------------------------------------- separators

namespace {

int separator_cap(const Graph& h, double alpha) {
  return static_cast<int>(std::floor(alpha * h.order() + 1e-9));
}

}  // namespace

bool is_alpha_separator(const Graph& h, const VertexSet& s, double alpha) {
  check_vertices(h, s);
  int cap = separator_cap(h, alpha);
  if (static_cast<int>(s.size()) > cap) return false;
  for (const VertexSet& c : connected_components(h, s))
    if (static_cast<int>(c.size()) > cap) return false;
  return true;
}

SeparatorResult check_separable(const Graph& h, double alpha, int exact_cap) {
  if (!(alpha > 0.0) || alpha > 1.0) throw std::invalid_argument("check_separable: alpha must be in (0, 1]");
  SeparatorResult out;
  const Vertex n = h.order();
  int cap = separator_cap(h, alpha);
  if (n <= exact_cap) {
    out.exact = true;
    for (int k = 0; k <= std::min<int>(cap, n); ++k) {
      std::vector<Vertex> pick(k);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        VertexSet s(pick);
        if (is_alpha_separator(h, s, alpha)) {
          out.separator = s;
          return out;
        }
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    return out;
  }
  // Cut the largest oversized component along its most balanced BFS level.
  std::vector<Vertex> chosen;
  while (static_cast<int>(chosen.size()) <= cap) {
    VertexSet s(chosen);
    std::vector<VertexSet> comps = connected_components(h, s);
    auto big = std::max_element(comps.begin(), comps.end(),
                                [](const VertexSet& a, const VertexSet& b) { return a.size() < b.size(); });
    if (big == comps.end() || static_cast<int>(big->size()) <= cap) {
      out.separator = s;
      return out;
    }
    VertexSet outside = VertexSet::range(n).minus(*big);
    std::vector<int> layer = bfs_layers(h, VertexSet{(*big)[0]}, outside);
    int far = *std::max_element(layer.begin(), layer.end());
    Vertex start = (*big)[0];
    for (Vertex v : *big)
      if (layer[v] == far) start = v;
    layer = bfs_layers(h, VertexSet{start}, outside);
    far = *std::max_element(layer.begin(), layer.end());
    std::vector<int> count(far + 1, 0);
    for (Vertex v : *big) ++count[layer[v]];
    int best_level = -1;
    long long best_score = 0;
    long long before = 0;
    for (int l = 0; l <= far; ++l) {
      long long after = static_cast<long long>(big->size()) - before - count[l];
      long long score = std::max(before, after) * 4 + count[l];
      if (best_level < 0 || score < best_score) {
        best_level = l;
        best_score = score;
      }
      before += count[l];
    }
    for (Vertex v : *big)
      if (layer[v] == best_level) chosen.push_back(v);
  }
  return out;
}

}  // namespace subdiv
