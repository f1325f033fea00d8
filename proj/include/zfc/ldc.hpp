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

#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "zfc/exact.hpp"
#include "zfc/graph.hpp"
#include "zfc/rational.hpp"

namespace zfc {

/**
 * @brief Outcome of one divisibility check z^t | p.
 *
 * Orders equal to kInfinite stand for "no finite order": an empty
 * disagreement set on the required side, the zero polynomial on the observed
 * side.
 */
struct LdcReport {
  std::string lemma;
  nlohmann::json instance;
  std::size_t required_order = 0;
  std::size_t observed_order = kInfinite;
  bool pass = true;
  std::optional<Rational> witness;

  bool tight() const { return required_order != kInfinite && observed_order == required_order; }
};

/// Checks that coefficients 0..t-1 of p vanish exactly.
LdcReport divides(const RationalPoly& p, std::size_t t);

/// t = d + 1 with infinity preserved.
inline std::size_t order_after(Distance d, std::size_t extra) { return d == kInfinite ? kInfinite : d + extra; }

nlohmann::json to_json(const LdcReport& r);

/// Source of the Z polynomials; replaced by a mutated oracle in soundness tests.
using ZPolyOracle = std::function<RationalPoly(const Graph&, const RationalIsingParams&, const RationalEvaluation&)>;

/// z^t | a*b - c*d, with the products formed exactly.
LdcReport product_difference(const RationalPoly& a, const RationalPoly& b, const RationalPoly& c,
                             const RationalPoly& d, std::size_t t);

/// z^{d(A,B)+1} | Z Z^{m1,m2} - Z^{m1} Z^{m2} for edge overrides on disjoint A and B.
LdcReport ising_product_ldc(const Graph& g, const RationalIsingParams& p, const RationalEvaluation& m1,
                            const RationalEvaluation& m2, const ZPolyOracle& oracle = {});

/// Numerator of P^{m1}_{G,m} - P^{m2}_{G,m} where m sets beta_e to `m`; order d(e, m1 != m2) + 1.
LdcReport ising_edge_ldc(const Graph& g, const RationalIsingParams& p, EdgeId e, const Rational& m,
                         const RationalEvaluation& m1, const RationalEvaluation& m2, const ZPolyOracle& oracle = {});

/// Vertex form: m scales lambda_v by c, m1 and m2 scale the fields on A and B.
LdcReport ising_vertex_ldc(const Graph& g, const RationalIsingParams& p, VertexId v, const Rational& c,
                           const std::vector<VertexId>& a, const std::vector<VertexId>& b,
                           const ZPolyOracle& oracle = {});

enum class LdcLemma { kProduct, kEdge, kVertex };

std::string lemma_name(LdcLemma lemma);

struct LdcSuiteOptions {
  std::size_t instances_per_graph = 8;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
  /// Failing reports kept in the summary.
  std::size_t keep_failures = 5;
};

struct LdcSuiteSummary {
  std::string lemma;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::size_t tight = 0;
  std::vector<LdcReport> failing;
  std::optional<LdcReport> tight_example;

  bool pass() const { return failures == 0; }
};

/// Random rational instances of one lemma on every graph. Deterministic in the seed.
LdcSuiteSummary run_ldc_suite(LdcLemma lemma, const std::vector<Graph>& graphs, const LdcSuiteOptions& opt = {},
                              const ZPolyOracle& oracle = {});

nlohmann::json to_json(const LdcSuiteSummary& s);

}  // namespace zfc
