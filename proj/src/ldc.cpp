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

#include "zfc/ldc.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "zfc/errors.hpp"
#include "zfc/generators.hpp"
#include "zfc/graph_io.hpp"
#include "zfc/parallel.hpp"

namespace zfc {

LdcReport divides(const RationalPoly& p, std::size_t t) {
  LdcReport r;
  r.required_order = t;
  auto ord = p.order();
  r.observed_order = ord ? *ord : kInfinite;
  r.pass = r.observed_order >= t;
  if (!r.pass) r.witness = p.coeff(*ord);
  return r;
}

nlohmann::json to_json(const LdcReport& r) {
  auto order = [](std::size_t o) -> nlohmann::json {
    if (o == kInfinite) return "inf";
    return o;
  };
  nlohmann::json j{{"lemma", r.lemma},
                   {"instance", r.instance},
                   {"required_order", order(r.required_order)},
                   {"observed_order", order(r.observed_order)},
                   {"pass", r.pass}};
  if (r.witness) j["witness"] = r.witness->get_str();
  return j;
}

LdcReport product_difference(const RationalPoly& a, const RationalPoly& b, const RationalPoly& c,
                             const RationalPoly& d, std::size_t t) {
  return divides(a * b - c * d, t);
}

namespace {

RationalPoly call(const ZPolyOracle& oracle, const Graph& g, const RationalIsingParams& p,
                  const RationalEvaluation& pe) {
  if (oracle) return oracle(g, p, pe);
  return exact_Z_poly(g, p, pe);
}

void check_overrides(const Graph& g, const RationalEvaluation& m, const char* what) {
  if (!m.fields.empty()) throw ArgumentError(std::string(what) + ": field overrides not allowed here");
  for (const auto& [e, x] : m.edges) {
    if (e >= g.edge_count()) throw ArgumentError(std::string(what) + ": bad edge id");
    if (x.is_infinite() || x.value() < 1) throw ArgumentError(std::string(what) + ": overrides must lie in [1, inf)");
  }
}

nlohmann::json rational_json(const Rational& q) { return q.get_str(); }

nlohmann::json params_json(const Graph& g, const RationalIsingParams& p) {
  nlohmann::json j = graph_to_json(g);
  nlohmann::json b = nlohmann::json::array(), l = nlohmann::json::array();
  for (const auto& x : p.beta) b.push_back(rational_json(x));
  for (const auto& x : p.lambda) l.push_back(rational_json(x));
  j["beta"] = b;
  j["lambda"] = l;
  return j;
}

nlohmann::json eval_json(const RationalEvaluation& m) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [e, x] : m.edges) j[std::to_string(e)] = x.is_infinite() ? "inf" : x.value().get_str();
  return j;
}

}  // namespace

LdcReport ising_product_ldc(const Graph& g, const RationalIsingParams& p, const RationalEvaluation& m1,
                            const RationalEvaluation& m2, const ZPolyOracle& oracle) {
  p.validate(g);
  check_overrides(g, m1, "ising_product_ldc");
  check_overrides(g, m2, "ising_product_ldc");
  RationalEvaluation both = compose(m1, m2);  // throws on overlap
  Distance d = edge_set_distance(g, m1.edge_domain(), m2.edge_domain());
  LdcReport r = product_difference(call(oracle, g, p, {}), call(oracle, g, p, both), call(oracle, g, p, m1),
                                   call(oracle, g, p, m2), order_after(d, 1));
  r.lemma = "ising-product";
  r.instance = {{"graph", params_json(g, p)}, {"m1", eval_json(m1)}, {"m2", eval_json(m2)}};
  return r;
}

LdcReport ising_edge_ldc(const Graph& g, const RationalIsingParams& p, EdgeId e, const Rational& m,
                         const RationalEvaluation& m1, const RationalEvaluation& m2, const ZPolyOracle& oracle) {
  p.validate(g);
  if (e >= g.edge_count()) throw ArgumentError("ising_edge_ldc: bad edge id");
  if (m < 1) throw ArgumentError("ising_edge_ldc: override must lie in [1, inf)");
  check_overrides(g, m1, "ising_edge_ldc");
  check_overrides(g, m2, "ising_edge_ldc");
  if (m1.edges.count(e) || m2.edges.count(e)) throw ArgumentError("ising_edge_ldc: e is in an override domain");
  RationalEvaluation me;
  me.edges.emplace(e, m);
  Distance d = edge_distance(g, e, disagreement_edges(m1, m2));
  // Numerator of Z^{m,m1}/Z^{m1} - Z^{m,m2}/Z^{m2}.
  LdcReport r = product_difference(call(oracle, g, p, compose(me, m1)), call(oracle, g, p, m2),
                                   call(oracle, g, p, compose(me, m2)), call(oracle, g, p, m1), order_after(d, 1));
  r.lemma = "ising-edge";
  r.instance = {{"graph", params_json(g, p)},
                {"e", e},
                {"m", rational_json(m)},
                {"m1", eval_json(m1)},
                {"m2", eval_json(m2)}};
  return r;
}

LdcReport ising_vertex_ldc(const Graph& g, const RationalIsingParams& p, VertexId v, const Rational& c,
                           const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                           const ZPolyOracle& oracle) {
  p.validate(g);
  if (v >= g.vertex_count()) throw ArgumentError("ising_vertex_ldc: bad vertex id");
  if (c < 0 || c >= 1) throw ArgumentError("ising_vertex_ldc: c must lie in [0, 1)");
  auto scaled = [&](const std::vector<VertexId>& s) {
    RationalEvaluation m;
    for (VertexId u : s) {
      if (u >= g.vertex_count()) throw ArgumentError("ising_vertex_ldc: bad vertex id");
      if (u == v) throw ArgumentError("ising_vertex_ldc: v is in A or B");
      m.fields[u] = c * p.lambda[u];
    }
    return m;
  };
  RationalEvaluation m1 = scaled(a), m2 = scaled(b), mv;
  mv.fields[v] = c * p.lambda[v];
  std::set<VertexId> sa(a.begin(), a.end()), sb(b.begin(), b.end());
  std::vector<VertexId> diff;
  std::set_symmetric_difference(sa.begin(), sa.end(), sb.begin(), sb.end(), std::back_inserter(diff));
  Distance d = vertex_set_distance(g, v, diff);
  LdcReport r = product_difference(call(oracle, g, p, compose(mv, m1)), call(oracle, g, p, m2),
                                   call(oracle, g, p, compose(mv, m2)), call(oracle, g, p, m1), order_after(d, 1));
  r.lemma = "ising-vertex";
  r.instance = {{"graph", params_json(g, p)},
                {"v", v},
                {"c", rational_json(c)},
                {"A", std::vector<VertexId>(sa.begin(), sa.end())},
                {"B", std::vector<VertexId>(sb.begin(), sb.end())}};
  return r;
}

std::string lemma_name(LdcLemma lemma) {
  switch (lemma) {
    case LdcLemma::kProduct: return "ising-product";
    case LdcLemma::kEdge: return "ising-edge";
    case LdcLemma::kVertex: return "ising-vertex";
  }
  return "?";
}

namespace {

const Rational kBetas[] = {Rational(1), Rational(6, 5), Rational(3, 2), Rational(2), Rational(3), Rational(5)};
const Rational kLambdas[] = {Rational(-1, 2), Rational(-1, 3), Rational(1, 4), Rational(1, 2),
                             Rational(2, 3),  Rational(1),     Rational(3, 2)};
const Rational kScales[] = {Rational(0), Rational(1, 3), Rational(1, 2), Rational(3, 4)};

template <class T, std::size_t N>
const T& pick(Rng& rng, const T (&xs)[N]) {
  return xs[uniform_index(rng, N)];
}

RationalIsingParams random_params(const Graph& g, Rng& rng) {
  RationalIsingParams p;
  for (std::size_t i = 0; i < g.edge_count(); ++i) p.beta.push_back(pick(rng, kBetas));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) p.lambda.push_back(pick(rng, kLambdas));
  return p;
}

RationalEvaluation random_overrides(const Graph& g, Rng& rng, double prob, std::optional<EdgeId> skip,
                                    const RationalEvaluation* exclude = nullptr) {
  RationalEvaluation m;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == skip || (exclude && exclude->edges.count(f))) continue;
    if (uniform01(rng) < prob) m.edges.emplace(f, pick(rng, kBetas));
  }
  return m;
}

// m2 is m1 with each entry kept, changed or dropped, plus a few new edges.
RationalEvaluation perturb(const Graph& g, const RationalEvaluation& m1, Rng& rng, EdgeId skip) {
  RationalEvaluation m2;
  for (EdgeId f = 0; f < g.edge_count(); ++f) {
    if (f == skip) continue;
    auto it = m1.edges.find(f);
    double u = uniform01(rng);
    if (it != m1.edges.end()) {
      if (u < 0.6) m2.edges.emplace(f, it->second);
      else if (u < 0.85) m2.edges.emplace(f, pick(rng, kBetas));
    } else if (u < 0.15) {
      m2.edges.emplace(f, pick(rng, kBetas));
    }
  }
  return m2;
}

std::vector<VertexId> random_subset(std::size_t n, VertexId skip, double prob, Rng& rng) {
  std::vector<VertexId> s;
  for (VertexId u = 0; u < n; ++u)
    if (u != skip && uniform01(rng) < prob) s.push_back(u);
  return s;
}

std::vector<LdcReport> graph_instances(LdcLemma lemma, const Graph& g, std::size_t count, Rng& rng,
                                       const ZPolyOracle& oracle) {
  std::vector<LdcReport> out;
  if (lemma != LdcLemma::kVertex && g.edge_count() == 0) return out;
  for (std::size_t i = 0; i < count; ++i) {
    RationalIsingParams p = random_params(g, rng);
    switch (lemma) {
      case LdcLemma::kProduct: {
        RationalEvaluation m1 = random_overrides(g, rng, 0.3, std::nullopt);
        RationalEvaluation m2 = random_overrides(g, rng, 0.3, std::nullopt, &m1);
        out.push_back(ising_product_ldc(g, p, m1, m2, oracle));
        break;
      }
      case LdcLemma::kEdge: {
        EdgeId e = uniform_index(rng, g.edge_count());
        Rational m = pick(rng, kBetas);
        RationalEvaluation m1 = random_overrides(g, rng, 0.3, e);
        RationalEvaluation m2 = perturb(g, m1, rng, e);
        out.push_back(ising_edge_ldc(g, p, e, m, m1, m2, oracle));
        break;
      }
      case LdcLemma::kVertex: {
        VertexId v = uniform_index(rng, g.vertex_count());
        std::vector<VertexId> a = random_subset(g.vertex_count(), v, 0.3, rng);
        std::vector<VertexId> b = uniform01(rng) < 0.5 ? random_subset(g.vertex_count(), v, 0.3, rng) : a;
        if (b == a && !b.empty()) b.erase(b.begin() + static_cast<long>(uniform_index(rng, b.size())));
        out.push_back(ising_vertex_ldc(g, p, v, pick(rng, kScales), a, b, oracle));
        break;
      }
    }
  }
  return out;
}

}  // namespace

LdcSuiteSummary run_ldc_suite(LdcLemma lemma, const std::vector<Graph>& graphs, const LdcSuiteOptions& opt,
                              const ZPolyOracle& oracle) {
  auto per_graph = parallel_map<std::vector<LdcReport>>(graphs.size(), opt.threads, [&](std::size_t i) {
    std::seed_seq seq{opt.seed, static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(lemma)};
    Rng rng(seq);
    return graph_instances(lemma, graphs[i], opt.instances_per_graph, rng, oracle);
  });
  LdcSuiteSummary s;
  s.lemma = lemma_name(lemma);
  for (auto& reports : per_graph) {
    for (auto& r : reports) {
      ++s.instances;
      if (r.tight()) {
        ++s.tight;
        if (!s.tight_example) s.tight_example = r;
      }
      if (!r.pass) {
        ++s.failures;
        if (s.failing.size() < opt.keep_failures) s.failing.push_back(std::move(r));
      }
    }
  }
  return s;
}

nlohmann::json to_json(const LdcSuiteSummary& s) {
  nlohmann::json j{{"lemma", s.lemma},
                   {"instances", s.instances},
                   {"failures", s.failures},
                   {"tight", s.tight},
                   {"pass", s.pass()}};
  nlohmann::json f = nlohmann::json::array();
  for (const auto& r : s.failing) f.push_back(to_json(r));
  j["failing"] = f;
  if (s.tight_example) j["tight_example"] = to_json(*s.tight_example);
  return j;
}

}  // namespace zfc
