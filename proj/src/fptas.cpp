#include "zfc/fptas.hpp"

#include <cmath>

namespace zfc {

namespace {

// MPFR tiers in decimal digits; tiers 0 and 1 are double and long double.
constexpr unsigned kDigits[] = {30, 45, 60, 90, 120, 180, 240, 360, 480, 720, 960, 1440, 1920};
constexpr std::size_t kTierCount = 2 + std::size(kDigits);

template <unsigned D>
using StackMp = bmp::number<bmp::mpfr_float_backend<D, bmp::allocate_stack>, bmp::et_off>;

template <class S>
EdgeRatioSeries run_scalar(const Graph& g, double beta, EdgeId e, std::size_t k, const SawOptions& opt,
                           std::size_t tier) {
  EdgeRatioSeries out;
  auto p = edge_ratio_series_in<S>(g, S(beta), e, k, opt, &out.envelope_log2);
  out.series = TruncatedSeries<double>(k);
  for (std::size_t i = 0; i <= k; ++i) out.series[i] = to_double(p[i]);
  out.precision_bits = static_cast<unsigned>(std::numeric_limits<S>::digits);
  out.tier = tier;
  return out;
}

template <std::size_t I = 0>
EdgeRatioSeries run_tier(std::size_t tier, const Graph& g, double beta, EdgeId e, std::size_t k,
                         const SawOptions& opt) {
  if (tier == 0) return run_scalar<double>(g, beta, e, k, opt, 0);
  if (tier == 1) return run_scalar<long double>(g, beta, e, k, opt, 1);
  if constexpr (I < std::size(kDigits)) {
    if (tier == I + 2) return run_scalar<StackMp<kDigits[I]>>(g, beta, e, k, opt, tier);
    return run_tier<I + 1>(tier, g, beta, e, k, opt);
  } else {
    throw ArgumentError("precision tier out of range");
  }
}

}  // namespace

std::size_t precision_tier_count() { return kTierCount; }

unsigned precision_tier_bits(std::size_t tier) {
  if (tier == 0) return 53;
  if (tier == 1) return 64;
  if (tier >= kTierCount) throw ArgumentError("precision tier out of range");
  return static_cast<unsigned>(std::ceil(kDigits[tier - 2] * std::log2(10.0))) + 1;
}

EdgeRatioSeries edge_ratio_series(const Graph& g, double beta, EdgeId e, std::size_t k, const PrecisionPolicy& policy,
                                  const SawOptions& opt) {
  switch (policy.mode) {
    case PrecisionMode::kDouble:
      return run_tier(0, g, beta, e, k, opt);
    case PrecisionMode::kLongDouble:
      return run_tier(1, g, beta, e, k, opt);
    case PrecisionMode::kFixed: {
      std::size_t t = 2;
      while (t + 1 < kTierCount && kDigits[t - 2] < policy.digits10) ++t;
      return run_tier(t, g, beta, e, k, opt);
    }
    case PrecisionMode::kAuto:
      break;
  }
  // Envelope-based guess of the tier that can hold the cancellation.
  auto guess = [](double envelope) {
    if (!std::isfinite(envelope)) return std::size_t{1};
    std::size_t t = 0;
    while (t + 2 < kTierCount && precision_tier_bits(t) < 0.5 * envelope + 53) ++t;
    return t;
  };
  std::size_t t = std::min(policy.start_tier, kTierCount - 2);
  EdgeRatioSeries lo = run_tier(t, g, beta, e, k, opt);
  while (t + 1 < kTierCount) {
    EdgeRatioSeries hi = run_tier(t + 1, g, beta, e, k, opt);
    double scale = 1;
    for (std::size_t i = 0; i <= k; ++i) scale = std::max(scale, std::abs(hi.series[i]));
    bool finite = true;
    for (std::size_t i = 0; i <= k; ++i) finite = finite && std::isfinite(lo.series[i]);
    if (finite && max_coeff_diff(lo.series, hi.series) <= policy.agreement * scale) return hi;
    std::size_t jump = guess(std::isfinite(hi.envelope_log2) ? hi.envelope_log2 : lo.envelope_log2);
    if (jump > t + 1 && jump + 1 < kTierCount) {
      t = jump;
      lo = run_tier(t, g, beta, e, k, opt);
    } else {
      ++t;
      lo = std::move(hi);
    }
  }
  throw NumericError("edge ratio series did not settle at the highest precision tier");
}

std::vector<std::size_t> truncation_schedule(std::size_t k_max) {
  std::vector<std::size_t> s;
  for (std::size_t k = 8; k < k_max; k *= 2) s.push_back(k);
  if (k_max >= 1) s.push_back(k_max);
  return s;
}

namespace {

void validate(const Graph& g, double beta, Complex lambda, double epsilon, const FptasOptions& opt) {
  (void)g;
  if (!(epsilon > 0 && epsilon < 1)) throw ArgumentError("epsilon must lie in (0, 1)");
  if (opt.unsafe) return;
  if (!(beta >= 1)) throw DomainError("beta must be >= 1 (ferromagnetic)");
  if (!(std::abs(lambda) < 1)) throw DomainError("|lambda| must be < 1 (use --unsafe to override)");
}

struct Search {
  std::size_t k = 0;
  std::vector<Complex> ratios;
  std::vector<TruncationStep> steps;
  unsigned max_bits = 0;
};

constexpr double kNearZero = 1e-12;

Complex checked_eval(const TruncatedSeries<double>& s, Complex lambda, EdgeId i) {
  Complex x = eval(s, lambda);
  if (std::abs(x) < kNearZero)
    throw NumericError("edge ratio " + std::to_string(i) + " evaluates to ~0 at lambda");
  return x;
}

Search search_truncation(const Graph& g, double beta, Complex lambda, double epsilon, const FptasOptions& opt) {
  const std::size_t m = g.edge_count();
  Search out;
  if (m == 0) {
    out.k = truncation_schedule(opt.k_max).front() * 2;
    return out;
  }
  const double tol = epsilon / (8.0 * static_cast<double>(m));
  PrecisionPolicy precision = opt.precision;
  std::size_t worst_edge = 0;
  double worst = 0;
  for (std::size_t k : truncation_schedule(opt.k_max)) {
    TruncationStep step{k, 0, 0, 0, true};
    std::vector<Complex> ratios;
    for (EdgeId i = 0; i < m && step.stable; ++i) {
      Graph gi = g.prefix(i + 1);
      auto r = edge_ratio_series(gi, beta, i, 2 * k, precision, opt.saw);
      out.max_bits = std::max(out.max_bits, r.precision_bits);
      // Later edges and larger k never need less precision; skip the
      // tiers already shown to be too coarse.
      if (r.tier > 0) precision.start_tier = std::max(precision.start_tier, r.tier - 1);
      Complex hi = checked_eval(r.series, lambda, i);
      Complex lo = checked_eval(r.series.truncated(k), lambda, i);
      double rel = std::abs(hi - lo) / std::abs(lo);
      ++step.edges_checked;
      if (rel > step.worst_relative_change) {
        step.worst_relative_change = rel;
        step.worst_edge = i;
      }
      if (rel > tol) step.stable = false;
      ratios.push_back(hi);
    }
    out.steps.push_back(step);
    worst_edge = step.worst_edge;
    worst = step.worst_relative_change;
    if (step.stable) {
      out.k = 2 * k;
      out.ratios = std::move(ratios);
      return out;
    }
  }
  throw ConvergenceError("truncation did not stabilize by k_max=" + std::to_string(opt.k_max) + "; worst edge " +
                         std::to_string(worst_edge) + " relative change " + std::to_string(worst));
}

}  // namespace

std::size_t choose_truncation(const Graph& g, double beta, Complex lambda, double epsilon, const FptasOptions& opt) {
  validate(g, beta, lambda, epsilon, opt);
  return search_truncation(g, beta, lambda, epsilon, opt).k;
}

ApproxResult approx_Z(const Graph& g, double beta, Complex lambda, double epsilon, const FptasOptions& opt) {
  validate(g, beta, lambda, epsilon, opt);
  ApproxResult res;
  std::vector<Complex> ratios;
  if (opt.k_override) {
    if (*opt.k_override < 1) throw ArgumentError("k must be >= 1");
    res.k_used = *opt.k_override;
    PrecisionPolicy precision = opt.precision;
    for (EdgeId i = 0; i < g.edge_count(); ++i) {
      auto r = edge_ratio_series(g.prefix(i + 1), beta, i, res.k_used, precision, opt.saw);
      res.max_precision_bits = std::max(res.max_precision_bits, r.precision_bits);
      if (r.tier > 0) precision.start_tier = std::max(precision.start_tier, r.tier - 1);
      ratios.push_back(checked_eval(r.series, lambda, i));
    }
  } else {
    auto s = search_truncation(g, beta, lambda, epsilon, opt);
    res.k_used = s.k;
    res.diagnostics = std::move(s.steps);
    res.max_precision_bits = s.max_bits;
    ratios = std::move(s.ratios);
  }
  Complex z = 1.0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) z *= 1.0 + lambda;
  for (const auto& r : ratios) z /= r;
  res.z_estimate = z;
  if (opt.retain_ratios) res.per_edge_ratios = std::move(ratios);
  return res;
}

}  // namespace zfc
