#pragma once

#include <cstddef>
#include <vector>

#include "zfc/graph.hpp"
#include "zfc/rational.hpp"

namespace zfc {

using RationalEvaluation = PartialEvaluationT<Rational, Rational>;
using RationalIsingParams = IsingParamsT<Rational, Rational>;

/// Largest vertex (or edge) count a brute-force oracle accepts: ZFC_CAP if
/// set, else `fallback`. Vertex oracles use 22, edge-subset oracles 24.
std::size_t enumeration_cap(std::size_t fallback = 22);
inline constexpr std::size_t kEdgeCap = 24;

/**
 * Exact Z^{pin}_G after applying `pe`. Edges overridden to infinity are
 * contracted; a pin that contradicts a contraction gives 0.
 */
Complex exact_Z(const Graph& g, const IsingParams& p, const PartialEvaluation& pe = {}, const Pinning& pin = {});

/// Sum over consistent configurations of w(sigma) z^{#plus}.
RationalPoly exact_Z_poly(const Graph& g, const RationalIsingParams& p, const RationalEvaluation& pe = {},
                          const Pinning& pin = {});

/// Z with beta_e replaced by `replacement` over Z, both under `pe`.
Complex exact_edge_ratio(const Graph& g, const IsingParams& p, EdgeId e, const PartialEvaluation& pe = {},
                         Extended<double> replacement = 1.0);

/// R^{pin}_{G,v} = Z^{pin, v+} / Z^{pin, v-}.
Complex exact_marginal_ratio(const Graph& g, const IsingParams& p, VertexId v, const Pinning& pin = {});

}  // namespace zfc
