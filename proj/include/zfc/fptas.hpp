#pragma once

#include <optional>
#include <vector>

#include "zfc/graph.hpp"
#include "zfc/sawtree.hpp"
#include "zfc/series.hpp"

namespace zfc {

/// Working precision of the SAW-tree recursion.
enum class PrecisionMode { kAuto, kDouble, kLongDouble, kFixed };

/// Precision ladder: double, long double, then MPFR tiers growing by ~1.5x.
std::size_t precision_tier_count();
unsigned precision_tier_bits(std::size_t tier);

/**
 * kAuto computes at two consecutive tiers, starting at `start_tier`, and
 * climbs until they agree to `agreement` (relative to the largest
 * coefficient); the higher tier's result is kept.
 */
struct PrecisionPolicy {
  PrecisionMode mode = PrecisionMode::kAuto;
  /// Decimal digits for kFixed (rounded up to a tier).
  unsigned digits10 = 60;
  std::size_t start_tier = 0;
  double agreement = 1e-13;
};

struct FptasOptions {
  std::optional<std::size_t> k_override;
  std::size_t k_max = 96;
  bool retain_ratios = true;
  /// Skip the |lambda| < 1 and beta >= 1 checks.
  bool unsafe = false;
  PrecisionPolicy precision;
  SawOptions saw;
};

/// P_{G,e}^{[k]} with coefficients rounded to double, plus how it was computed.
struct EdgeRatioSeries {
  TruncatedSeries<double> series;
  unsigned precision_bits = 0;
  /// Tier of the accepted result; a good start for the next, larger graph.
  std::size_t tier = 0;
  /// Largest log2 |coefficient| among intermediate series.
  double envelope_log2 = 0;
};

/**
 * Edge-deletion ratio Z_{G-e}/Z_G to degree k in scalar S, from the three
 * pinned SAW trees at the endpoints of e = (u, v):
 * P = 1 - (1 - 1/beta) (R1 R2 + 1) / (R1 R2 + 1 + R3 + R2)
 * with R1 = R^{u+}_v, R2 = R^{v-}_u, R3 = R^{u-}_v.
 */
template <class S>
TruncatedSeries<S> edge_ratio_series_in(const Graph& g, const S& beta, EdgeId e, std::size_t k,
                                        const SawOptions& opt = {}, double* envelope = nullptr) {
  if (e >= g.edge_count()) throw ArgumentError("edge_ratio_series: edge " + std::to_string(e) + " not in graph");
  if (k < 1) throw ArgumentError("edge_ratio_series: k must be >= 1");
  const VertexId u = g.edge(e).u, v = g.edge(e).v;
  SawSeriesEvaluator<S> t1(g, Pinning{{u, Spin::kPlus}}, beta, opt);
  SawSeriesEvaluator<S> t2(g, Pinning{{v, Spin::kMinus}}, beta, opt);
  SawSeriesEvaluator<S> t3(g, Pinning{{u, Spin::kMinus}}, beta, opt);
  auto r1 = t1.ratio(v, k);
  auto r2 = t2.ratio(u, k);
  auto r3 = t3.ratio(v, k);
  auto r12 = mul(r1, r2);
  auto num = add_constant(r12, S(1));
  auto den = add(add(num, r3), r2);
  auto p = scale(div(num, den, "edge-ratio denominator"), S(-1) * (S(1) - S(1) / beta));
  p[0] += S(1);
  if (envelope) {
    double m = std::max({t1.envelope_log2(), t2.envelope_log2(), t3.envelope_log2()});
    for (const auto* s : {&r12, &den})
      for (std::size_t i = 0; i <= k; ++i) m = std::max(m, log2_abs((*s)[i]));
    *envelope = m;
  }
  return p;
}

/// Same series with the working precision chosen by `policy`.
EdgeRatioSeries edge_ratio_series(const Graph& g, double beta, EdgeId e, std::size_t k,
                                  const PrecisionPolicy& policy = {}, const SawOptions& opt = {});

struct TruncationStep {
  std::size_t k = 0;
  std::size_t edges_checked = 0;
  std::size_t worst_edge = 0;
  double worst_relative_change = 0;
  bool stable = false;
};

struct ApproxResult {
  Complex z_estimate;
  std::size_t k_used = 0;
  std::optional<std::vector<Complex>> per_edge_ratios;
  std::vector<TruncationStep> diagnostics;
  unsigned max_precision_bits = 0;
};

/// Candidate k values: 8, 16, 32, ... below k_max, then k_max.
std::vector<std::size_t> truncation_schedule(std::size_t k_max);

/// Smallest schedule entry k whose per-edge ratios move by at most
/// eps/(8m) relative between degree k and 2k; returns 2k.
std::size_t choose_truncation(const Graph& g, double beta, Complex lambda, double epsilon,
                              const FptasOptions& opt = {});

/// Z_hat = (1+lambda)^n / prod_i P^{[k]}_{G_i, e_i}(lambda).
ApproxResult approx_Z(const Graph& g, double beta, Complex lambda, double epsilon, const FptasOptions& opt = {});

}  // namespace zfc
