// Copyright 2026 The zfcount Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "zfc/rc.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "zfc/errors.hpp"
#include "zfc/exact.hpp"
#include "zfc/generators.hpp"
#include "zfc/graph_io.hpp"
#include "zfc/parallel.hpp"

namespace zfc {

RCParams RCParams::from_ising(const std::vector<double>& beta, const std::vector<double>& lambda) {
  RCParams rp;
  for (double b : beta) {
    if (!(b >= 1)) throw DomainError("from_ising: beta must be >= 1");
    rp.p.push_back(1 - 1 / b);
  }
  rp.lambda = lambda;
  return rp;
}

void RCParams::validate(const Graph& g) const {
  if (p.size() != g.edge_count()) throw ArgumentError("RCParams: p length != edge count");
  if (lambda.size() != g.vertex_count()) throw ArgumentError("RCParams: lambda length != vertex count");
  for (double x : p)
    if (!(x >= 0 && x <= 1)) throw DomainError("RCParams: p_e outside [0, 1]");
  for (double x : lambda)
    if (!(x >= 0 && x <= 1)) throw DomainError("RCParams: lambda_v outside [0, 1]");
}

namespace {

// Union-find with undo; tracks prod over components of (1 + prod of lambda).
class ClusterState {
 public:
  explicit ClusterState(const std::vector<double>& lambda)
      : parent_(lambda.size()), size_(lambda.size(), 1), field_(lambda) {
    std::iota(parent_.begin(), parent_.end(), 0);
    for (double l : lambda) factor_ *= 1 + l;
  }
  std::size_t find(std::size_t x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) {
      undo_.push_back({kNone, kNone, factor_, 0});
      return;
    }
    if (size_[a] < size_[b]) std::swap(a, b);
    undo_.push_back({a, b, factor_, field_[a]});
    factor_ = factor_ / ((1 + field_[a]) * (1 + field_[b])) * (1 + field_[a] * field_[b]);
    parent_[b] = a;
    size_[a] += size_[b];
    field_[a] *= field_[b];
  }
  void rollback() {
    Undo u = undo_.back();
    undo_.pop_back();
    factor_ = u.factor;
    if (u.root == kNone) return;
    parent_[u.child] = u.child;
    size_[u.root] -= size_[u.child];
    field_[u.root] = u.field;
  }
  double factor() const { return factor_; }

 private:
  static constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  struct Undo {
    std::size_t root, child;
    double factor, field;
  };
  std::vector<std::size_t> parent_, size_;
  std::vector<double> field_;
  std::vector<Undo> undo_;
  double factor_ = 1;
};

void check_pinning(const Graph& g, const EdgePinning& cond) {
  for (const auto& [e, _] : cond)
    if (e >= g.edge_count()) throw ArgumentError("edge pinning: bad edge id");
}

double rc_sum(const Graph& g, const RCParams& rp, const EdgePinning& cond) {
  std::size_t free_edges = g.edge_count() - cond.size();
  std::size_t cap = enumeration_cap(kEdgeCap);
  if (free_edges > cap)
    throw ResourceError("enumeration cap exceeded: " + std::to_string(free_edges) + " edges > cap " +
                        std::to_string(cap));
  ClusterState cs(rp.lambda);
  double total = 0;
  auto rec = [&](auto&& self, EdgeId e, double prefix) -> void {
    if (prefix == 0) return;
    if (e == g.edge_count()) {
      total += prefix * cs.factor();
      return;
    }
    auto it = cond.find(e);
    bool can_out = it == cond.end() || !it->second;
    bool can_in = it == cond.end() || it->second;
    if (can_out) self(self, e + 1, prefix * (1 - rp.p[e]));
    if (can_in) {
      cs.unite(g.edge(e).u, g.edge(e).v);
      self(self, e + 1, prefix * rp.p[e]);
      cs.rollback();
    }
  };
  rec(rec, 0, 1.0);
  return total;
}

}  // namespace

double rc_Z_exact(const Graph& g, const RCParams& rp, const EdgePinning& cond) {
  rp.validate(g);
  check_pinning(g, cond);
  return rc_sum(g, rp, cond);
}

double rc_weight(const Graph& g, const RCParams& rp, const RCConfig& s) {
  if (s.size() != g.edge_count()) throw ArgumentError("rc_weight: configuration size != edge count");
  ClusterState cs(rp.lambda);
  double w = 1;
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    if (s[e]) {
      w *= rp.p[e];
      cs.unite(g.edge(e).u, g.edge(e).v);
    } else {
      w *= 1 - rp.p[e];
    }
  }
  return w * cs.factor();
}

std::pair<double, double> ising_rc_consistency(const Graph& g, const std::vector<double>& beta,
                                               const std::vector<double>& lambda) {
  RCParams rp = RCParams::from_ising(beta, lambda);
  rp.validate(g);
  IsingParams ip;
  ip.beta = beta;
  ip.lambda.assign(lambda.begin(), lambda.end());
  double z_ising = exact_Z(g, ip).real();
  double prod = 1;
  for (double b : beta) prod *= b;
  return {z_ising, prod * rc_Z_exact(g, rp)};
}

double rc_edge_marginal(const Graph& g, const RCParams& rp, EdgeId e, const EdgePinning& cond, RcRoute route) {
  rp.validate(g);
  check_pinning(g, cond);
  if (e >= g.edge_count()) throw ArgumentError("rc_edge_marginal: bad edge id");
  if (cond.count(e)) throw ArgumentError("rc_edge_marginal: edge is pinned");
  if (route == RcRoute::kDirect) {
    EdgePinning out = cond;
    out[e] = false;
    double den = rc_sum(g, rp, cond);
    if (den == 0) throw NumericError("rc_edge_marginal: conditional Z vanishes");
    return rc_sum(g, rp, out) / den;
  }
  IsingParams ip;
  PartialEvaluation pe;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    auto it = cond.find(f);
    if (it != cond.end()) {
      ip.beta.push_back(1);
      pe.edges.emplace(f, it->second ? Extended<double>::infinity() : Extended<double>(1.0));
      continue;
    }
    if (rp.p[f] >= 1) throw DomainError("rc_edge_marginal: unpinned edge with p = 1 has no Ising translation");
    ip.beta.push_back(1 / (1 - rp.p[f]));
  }
  ip.lambda.assign(rp.lambda.begin(), rp.lambda.end());
  return exact_edge_ratio(g, ip, e, pe, 1.0).real();
}

namespace {

// Component of `start` in state minus e; returns the product of lambda and whether `target` was reached.
std::pair<double, bool> component(const Graph& g, const RCParams& rp, const RCConfig& state, EdgeId skip,
                                  VertexId start, VertexId target, std::vector<char>& seen) {
  std::fill(seen.begin(), seen.end(), 0);
  std::vector<VertexId> stack{start};
  seen[start] = 1;
  double prod = 1;
  bool hit = false;
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    prod *= rp.lambda[x];
    if (x == target) hit = true;
    for (const Incidence& inc : g.incident(x)) {
      if (inc.edge == skip || !state[inc.edge] || seen[inc.neighbor]) continue;
      seen[inc.neighbor] = 1;
      stack.push_back(inc.neighbor);
    }
  }
  return {prod, hit};
}

}  // namespace

double update_probability(const Graph& g, const RCParams& rp, const RCConfig& state, EdgeId e) {
  if (e >= g.edge_count()) throw ArgumentError("update_probability: bad edge id");
  if (state.size() != g.edge_count()) throw ArgumentError("update_probability: configuration size != edge count");
  const Edge& ed = g.edge(e);
  std::vector<char> seen(g.vertex_count());
  auto [x1, connected] = component(g, rp, state, e, ed.u, ed.v, seen);
  double p = rp.p[e];
  if (connected) return p;
  double x2 = component(g, rp, state, e, ed.v, ed.u, seen).first;
  double in = p * (1 + x1 * x2);
  return in / (in + (1 - p) * (1 + x1) * (1 + x2));
}

RCConfig glauber_step(const Graph& g, const RCParams& rp, const RCConfig& state, EdgeId e, double u01) {
  if (!(u01 >= 0 && u01 < 1)) throw ArgumentError("glauber_step: u01 outside [0, 1)");
  RCConfig next = state;
  next[e] = u01 >= 1 - update_probability(g, rp, state, e);
  return next;
}

CouplingTrace coupling_time(const Graph& g, const RCParams& rp, std::uint64_t seed, std::uint64_t step_cap) {
  rp.validate(g);
  for (double p : rp.p)
    if (p >= 1) throw DomainError("coupling_time: requires p_e < 1");
  CouplingTrace t;
  t.seed = seed;
  t.top_state = RCConfig(g.edge_count());
  t.top_state.set();
  t.bottom_state = RCConfig(g.edge_count());
  Rng rng(seed);
  while (t.top_state != t.bottom_state && t.steps < step_cap) {
    EdgeId e = uniform_index(rng, g.edge_count());
    double u = uniform01(rng);
    t.top_state[e] = u >= 1 - update_probability(g, rp, t.top_state, e);
    t.bottom_state[e] = u >= 1 - update_probability(g, rp, t.bottom_state, e);
    ++t.steps;
    if (!t.bottom_state.is_subset_of(t.top_state))
      throw std::logic_error("coupling_time: bottom chain left the top chain at step " + std::to_string(t.steps));
  }
  t.coalesced = t.top_state == t.bottom_state;
  return t;
}

std::vector<double> rc_distribution(const Graph& g, const RCParams& rp) {
  rp.validate(g);
  std::size_t m = g.edge_count();
  if (m > 20) throw ResourceError("rc_distribution: more than 20 edges");
  std::vector<double> w(std::size_t{1} << m);
  for (std::size_t mask = 0; mask < w.size(); ++mask) w[mask] = rc_weight(g, rp, RCConfig(m, mask));
  double z = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= z;
  return w;
}

std::vector<double> glauber_histogram(const Graph& g, const RCParams& rp, std::uint64_t seed, std::uint64_t steps,
                                      std::uint64_t burn_in) {
  rp.validate(g);
  std::size_t m = g.edge_count();
  if (m > 20) throw ResourceError("glauber_histogram: more than 20 edges");
  std::vector<double> h(std::size_t{1} << m);
  if (m == 0) {
    h[0] = 1;
    return h;
  }
  RCConfig s(m);
  Rng rng(seed);
  for (std::uint64_t i = 0; i < burn_in + steps; ++i) {
    EdgeId e = uniform_index(rng, m);
    double u = uniform01(rng);
    s[e] = u >= 1 - update_probability(g, rp, s, e);
    if (i >= burn_in) h[s.to_ulong()] += 1;
  }
  for (double& x : h) x /= static_cast<double>(steps);
  return h;
}

double total_variation(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ArgumentError("total_variation: size mismatch");
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s / 2;
}

std::vector<CoalescenceRow> ladder_coalescence(const std::vector<std::size_t>& rungs, double p, double lambda,
                                               std::size_t seeds, std::uint64_t base_seed, std::uint64_t step_cap,
                                               std::size_t threads) {
  std::vector<CoalescenceRow> rows;
  for (std::size_t L : rungs) {
    Graph g = ladder_graph(L);
    RCParams rp = RCParams::uniform(g, p, lambda);
    auto traces = parallel_map<CouplingTrace>(seeds, threads, [&](std::size_t s) {
      std::seed_seq seq{base_seed, static_cast<std::uint64_t>(L), static_cast<std::uint64_t>(s)};
      std::uint64_t seed;
      seq.generate(reinterpret_cast<std::uint32_t*>(&seed), reinterpret_cast<std::uint32_t*>(&seed) + 2);
      return coupling_time(g, rp, seed, step_cap);
    });
    CoalescenceRow row;
    row.rungs = L;
    row.edges = g.edge_count();
    row.runs = seeds;
    std::vector<double> steps;
    for (const auto& t : traces) {
      steps.push_back(static_cast<double>(t.steps));
      row.coalesced += t.coalesced;
    }
    std::sort(steps.begin(), steps.end());
    std::size_t n = steps.size();
    row.median_steps = n == 0 ? 0 : (n % 2 ? steps[n / 2] : (steps[n / 2 - 1] + steps[n / 2]) / 2);
    rows.push_back(row);
  }
  return rows;
}

double fit_mlogm_constant(const std::vector<CoalescenceRow>& rows) {
  double num = 0, den = 0;
  for (const auto& r : rows) {
    double m = static_cast<double>(r.edges);
    double x = m * std::log(m);
    num += r.median_steps * x;
    den += x * x;
  }
  if (den == 0) throw ArgumentError("fit_mlogm_constant: no rows with m >= 2");
  return num / den;
}

nlohmann::json to_json(const CouplingTrace& t, const Graph& g, const RCParams& rp) {
  nlohmann::json j{{"graph", graph_to_json(g)},
                   {"params", {{"p", rp.p}, {"lambda", rp.lambda}}},
                   {"seed", t.seed},
                   {"steps", t.steps},
                   {"coalesced", t.coalesced}};
  return j;
}

}  // namespace zfc
