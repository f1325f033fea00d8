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

#include <boost/dynamic_bitset.hpp>
#include <json.hpp>

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "zfc/graph.hpp"

namespace zfc {

/// Random cluster parameters: p_e and lambda_v, both in [0, 1].
struct RCParams {
  std::vector<double> p;
  std::vector<double> lambda;

  static RCParams uniform(const Graph& g, double p, double lambda) {
    return {std::vector<double>(g.edge_count(), p), std::vector<double>(g.vertex_count(), lambda)};
  }
  /// p = 1 - 1/beta edgewise.
  static RCParams from_ising(const std::vector<double>& beta, const std::vector<double>& lambda);
  void validate(const Graph& g) const;
};

/// Included edges.
using RCConfig = boost::dynamic_bitset<>;

/// Edge id -> true (pinned in) or false (pinned out).
using EdgePinning = std::map<EdgeId, bool>;

/// Weighted random cluster partition function restricted to the pinning.
double rc_Z_exact(const Graph& g, const RCParams& rp, const EdgePinning& cond = {});

/// Weight of one configuration.
double rc_weight(const Graph& g, const RCParams& rp, const RCConfig& s);

/// (Z_Ising, prod beta * Z_RC) at real parameters.
std::pair<double, double> ising_rc_consistency(const Graph& g, const std::vector<double>& beta,
                                               const std::vector<double>& lambda);

enum class RcRoute { kDirect, kViaIsing };

/// Probability that e is not picked given the pinning.
double rc_edge_marginal(const Graph& g, const RCParams& rp, EdgeId e, const EdgePinning& cond, RcRoute route);

/// Inclusion probability p(sigma, e) of the heat-bath update.
double update_probability(const Graph& g, const RCParams& rp, const RCConfig& state, EdgeId e);

/// Resamples e; included iff u01 >= 1 - p(sigma, e).
RCConfig glauber_step(const Graph& g, const RCParams& rp, const RCConfig& state, EdgeId e, double u01);

struct CouplingTrace {
  std::uint64_t steps = 0;
  bool coalesced = false;
  RCConfig top_state;
  RCConfig bottom_state;
  std::uint64_t seed = 0;
};

/// Grand coupling from all-in and all-out. Throws std::logic_error if bottom leaves top.
CouplingTrace coupling_time(const Graph& g, const RCParams& rp, std::uint64_t seed, std::uint64_t step_cap);

/// Exact distribution over configurations, indexed by the edge bitmask.
std::vector<double> rc_distribution(const Graph& g, const RCParams& rp);

/// Visit frequencies of a single chain started empty, after burn_in.
std::vector<double> glauber_histogram(const Graph& g, const RCParams& rp, std::uint64_t seed, std::uint64_t steps,
                                      std::uint64_t burn_in);

double total_variation(const std::vector<double>& a, const std::vector<double>& b);

struct CoalescenceRow {
  std::size_t rungs = 0;
  std::size_t edges = 0;
  double median_steps = 0;
  std::size_t coalesced = 0;
  std::size_t runs = 0;
};

/// Median coalescence steps on 2 x L ladders over `seeds` chains each.
std::vector<CoalescenceRow> ladder_coalescence(const std::vector<std::size_t>& rungs, double p, double lambda,
                                               std::size_t seeds, std::uint64_t base_seed, std::uint64_t step_cap,
                                               std::size_t threads = 0);

/// c minimizing sum (median - c m ln m)^2.
double fit_mlogm_constant(const std::vector<CoalescenceRow>& rows);

nlohmann::json to_json(const CouplingTrace& t, const Graph& g, const RCParams& rp);

}  // namespace zfc
