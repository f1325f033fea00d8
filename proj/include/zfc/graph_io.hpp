#pragma once

#include <json.hpp>

#include <optional>
#include <string>
#include <vector>

#include "zfc/graph.hpp"

namespace zfc {

/// Contents of a graph JSON file; parameters are optional.
struct GraphFile {
  Graph graph;
  std::optional<std::vector<double>> beta;
  std::optional<std::vector<Complex>> lambda;

  /// Parameters with uniform fallbacks for missing fields.
  IsingParams params(double beta_default, Complex lambda_default) const;
};

GraphFile graph_from_json(const nlohmann::json& j);
GraphFile read_graph_file(const std::string& path);
nlohmann::json graph_to_json(const Graph& g);
nlohmann::json graph_to_json(const Graph& g, const IsingParams& p);

nlohmann::json complex_to_json(Complex z);
Complex complex_from_json(const nlohmann::json& j);

}  // namespace zfc
