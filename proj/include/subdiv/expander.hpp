//
// Copyright 2026 subdivkit Authors
// SPDX-License-Identifier: Apache-2.0
//

#ifndef SUBDIV_EXPANDER_HPP
#define SUBDIV_EXPANDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "subdiv/graph.hpp"

namespace subdiv {

inline constexpr double kDefaultExpansionConstant = 31.0;
inline constexpr int kDefaultExhaustiveCap = 18;

struct ExpanderParams {
  double eps1 = 1.0 / (10.0 * kDefaultExpansionConstant);
  double t = 1.0;  // size threshold, eps2 * d in the extraction setting
  double C = kDefaultExpansionConstant;
  std::optional<double> eps2;

  double delta() const;  // C * eps1 / ln 3
  double nu() const;     // eps1 / (6 ln^2(5 / eps2)); requires eps2
  // Throws std::invalid_argument unless eps1 > 0 and t > 0.
  void check_basic() const;
  // The stronger constraints extraction needs:
  // C > 30, 0 < eps1 <= 1/(10C), delta < 1, 0 < eps2 < 1/5 when present.
  void check_for_extraction() const;
};

// Expansion rate: 0 below t/5, eps1 / ln^2(15x/t) above (natural log).
double rho(double x, const ExpanderParams& p);
// C * integral_x^inf rho(u)/u du, in closed form.
double gamma_weight(double x, const ExpanderParams& p);
// d(g) * (1 + gamma(|g|)).
double phi_score(const Graph& g, const ExpanderParams& p);
// floor(d * rho(|X|) * |X|): how many edges the adversary may delete.
long long deletion_budget(const Rational& avg_degree, double x_size,
                          const ExpanderParams& p);

struct AdversarialDeletion {
  std::vector<Edge> removed;
  int surviving = 0;  // |N_{G\F}(X)|
  int boundary = 0;   // |N_G(X)|
};

// Optimal adversary: cut boundary vertices cheapest-first (by edges to X).
AdversarialDeletion adversarial_boundary_deletion(const Graph& g,
                                                  const VertexSet& x,
                                                  long long budget);

enum class VerifyMode { kExhaustive, kSampled };

struct ExpansionWitness {
  VertexSet x;
  std::vector<Edge> removed;
  int surviving = 0;
  double required = 0.0;  // rho(|X|) * |X|
  double slack() const { return surviving - required; }
};

struct ExpanderCertificate {
  ExpanderParams params;
  VerifyMode mode = VerifyMode::kExhaustive;
  bool passed = false;
  std::uint64_t host_fingerprint = 0;
  Vertex host_order = 0;
  long long sets_checked = 0;
  std::string log_base = "e";
  std::vector<ExpansionWitness> worst;  // smallest slack first
  std::optional<ExpansionWitness> counterexample;
};

struct VerifyOptions {
  int exhaustive_cap = kDefaultExhaustiveCap;
  int trials = 2000;
  std::uint64_t seed = 0;
  int threads = 1;
  int keep_worst = 5;
};

class CapExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Checks robust expansion against every X with t/2 <= |X| <= n/2 (exhaustive)
// or against sampled X (BFS clumps, greedy low-boundary sets, random sets).
ExpanderCertificate verify_robust_expander(const Graph& g,
                                           const ExpanderParams& params,
                                           VerifyMode mode,
                                           const VerifyOptions& options = {});

struct ExtractionResult {
  Graph expander;
  std::vector<Vertex> host_ids;  // expander vertex -> vertex of the input
  ExpanderCertificate certificate;
  double input_avg_degree = 0.0;
  double avg_degree = 0.0;
  int min_degree = 0;
  double delta = 0.0;
  bool connected = false;
  std::optional<int> connectivity;  // only computed for small expanders
  int improvement_steps = 0;
  bool stalled = false;  // a violation was found that no candidate improved
};

class ExtractionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct ExtractOptions {
  double C = kDefaultExpansionConstant;
  VerifyOptions verify;
  int connectivity_cap = 40;
};

// phi hill-climb: shed low-degree vertices, keep the best component, and
// on a violation move to G[X u N_{G\F}(X)] or G - X, whichever scores more.
ExtractionResult extract_expander(const Graph& g, double eps1, double eps2,
                                  const ExtractOptions& options = {});

}  // namespace subdiv

#endif  // SUBDIV_EXPANDER_HPP
