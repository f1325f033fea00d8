#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "zfc/graph.hpp"
#include "zfc/ldc.hpp"
#include "zfc/rational.hpp"
#include "zfc/rc.hpp"

namespace zfc {

/// Hypergraph with nonempty edges stored as sorted vertex lists.
class Hypergraph {
 public:
  Hypergraph() = default;
  Hypergraph(std::size_t n, std::vector<std::vector<VertexId>> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<std::vector<VertexId>>& edges() const { return edges_; }

  bool operator==(const Hypergraph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::vector<VertexId>> edges_;
};

Hypergraph hypergraph_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Hypergraph& h);

enum class DeletionKind { kMild, kTotal };

/// Deletes v; vertices above v shift down by one.
Hypergraph hyper_ops(const Hypergraph& h, VertexId v, DeletionKind kind);

/// Independence polynomial over sets extending the pin (plus = in the set).
RationalPoly hyper_Z(const Hypergraph& h, const Pinning& pin = {});

/// Occupation probability Z^+ / Z at lambda.
Rational hyper_marginal(const Hypergraph& h, VertexId v, const Rational& lambda, const Pinning& pin = {});

/// (H mild-minus plus-pinned) total-minus minus-pinned, with the old-to-new vertex map (kInfinite if removed).
std::pair<Hypergraph, std::vector<VertexId>> hyper_condition(const Hypergraph& h, const Pinning& pin);

/// Shortest path where two vertices are adjacent iff they share an edge.
Distance hyper_distance(const Hypergraph& h, VertexId u, VertexId v);

/// lambda^{d_H(u,v)+1} | Z^{++} Z^{--} - Z^{+-} Z^{-+}.
LdcReport hyper_ldc(const Hypergraph& h, const Pinning& pin, VertexId u, VertexId v);

/// lambda_s(D) = (D-1)^{D-1} / D^D.
Rational lambda_s(unsigned delta);
/// lambda_c(D) = (D-1)^{D-1} / (D-2)^D, for D >= 3.
Rational lambda_c(unsigned delta);

/// Subset expansion sum_F q^{k(V,F)} z^{|F|} with z = w - 1.
RationalPoly potts_Z(const Graph& g, unsigned q);
/// Value at w, either via the subset expansion or the spin sum sum_sigma w^{#monochromatic edges}.
Rational potts_Z_value(const Graph& g, unsigned q, const Rational& w, bool as_tutte = true);

/// (w-1)^{d(e1,e2)} | Z_{G-e1} Z_{G-e2} - Z_G Z_{G-{e1,e2}}.
LdcReport potts_ldc(const Graph& g, unsigned q, EdgeId e1, EdgeId e2);

/// Binary symmetric Holant instance with a uniform edge activity.
struct HolantInstance {
  Graph graph;
  std::vector<std::vector<Rational>> local_fn;  ///< f_v(k) for k = 0..deg(v)
  Rational edge_activity = 1;

  void validate() const;
};

/// f(k) = 1 for even k, rho for odd k.
HolantInstance holant_even_subgraph(const Graph& g, const Rational& rho, const Rational& activity = 1);
/// f(k) = beta^{C(k,2) + C(d-k,2)}.
HolantInstance holant_line_ising(const Graph& g, const Rational& beta, const Rational& activity = 1);
/// Preset by name: "even-subgraph" or "line-ising".
HolantInstance holant_preset(const std::string& name, const Graph& g, const Rational& param,
                             const Rational& activity = 1);

/// Polynomial in the edge activity.
RationalPoly holant_Z(const HolantInstance& inst, const EdgePinning& pin = {});
Rational holant_Z_value(const HolantInstance& inst, const EdgePinning& pin = {});

/// lambda^{d(e1,e2)+2} | Z^{++} Z^{--} - Z^{+-} Z^{-+}.
LdcReport holant_ldc(const HolantInstance& inst, const EdgePinning& pin, EdgeId e1, EdgeId e2);

/// All hypergraphs on n <= exhaustive_n vertices (edge size <= 3), then random ones up to max_n.
struct HyperSuiteOptions {
  std::size_t exhaustive_n = 4;
  std::size_t max_n = 6;
  std::size_t random_per_n = 2000;
  std::uint64_t seed = 1;
  std::size_t threads = 0;
};

LdcSuiteSummary hyper_ldc_suite(const HyperSuiteOptions& opt);
/// Every edge pair of every graph.
LdcSuiteSummary potts_ldc_suite(const std::vector<Graph>& graphs, unsigned q, std::size_t threads = 0);
/// Every pair of distinct edges, empty pin.
LdcSuiteSummary holant_ldc_suite(const std::vector<Graph>& graphs, const Rational& rho, std::size_t threads = 0);

}  // namespace zfc
