#pragma once

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "zfc/graph.hpp"

namespace zfc {

enum class SsmFamily { kPath, kCycle, kLadder, kBinaryTree };
enum class SsmModel { kIsingEdge, kIsingVertex, kRcEdge };

SsmFamily parse_family(const std::string& name);
SsmModel parse_model(const std::string& name);
std::string family_name(SsmFamily f);
std::string model_name(SsmModel m);

/// Vertices for path and cycle, rungs for ladder, depth for binary tree.
Graph family_graph(SsmFamily f, std::size_t size);

/**
 * @brief One decay scan.
 *
 * The probe is edge 0 (vertex 0 for ising-vertex). For each distance t the
 * boundary catalog is: each single far element alone, all elements at
 * distance >= t at once, and the mixed pair on that same set. Edge models
 * delete in the first two shapes; the mixed pair sets beta to 1 on one side
 * and to mixed_factor * beta on the other (pinned out against pinned in for
 * rc-edge). The vertex model sets lambda to 0, and the mixed side to
 * vertex_scale * lambda.
 */
struct SsmSpec {
  SsmFamily family = SsmFamily::kPath;
  std::size_t size = 20;
  SsmModel model = SsmModel::kIsingEdge;
  double beta = 2;
  Complex lambda = 0.5;
  std::size_t d_max = 8;
  Extended<double> mixed_factor = 2.0;
  double vertex_scale = 0.5;
  bool unsafe = false;
  std::size_t threads = 0;
};

struct DecayRow {
  std::size_t distance = 0;
  double max_abs_diff = 0;
  std::size_t instance_count = 0;
};

struct DecayTable {
  std::vector<DecayRow> rows;
  std::string model_tag;
  std::string parameter_tag;
};

struct DecayFit {
  double log_C = 0;
  double rate_r = 1;
  double r_squared = 0;
  std::size_t rows_used = 0;
  bool decaying = false;
};

/// Rows below this are treated as rounding noise.
inline constexpr double kNoiseFloor = 1e-13;

DecayTable ssm_scan(const SsmSpec& spec);

/// Least squares of log(max_abs_diff) on distance over rows above the floor.
DecayFit fit_decay(const DecayTable& table, double noise_floor = kNoiseFloor);

/// True when every row above the floor is at most its predecessor (relative slack 1e-9).
bool nonincreasing(const DecayTable& table, double noise_floor = kNoiseFloor);

std::string to_csv(const DecayTable& table);
nlohmann::json to_json(const DecayTable& table);
nlohmann::json to_json(const DecayFit& fit);

}  // namespace zfc
