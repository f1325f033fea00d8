#include "zfc/graph_io.hpp"

#include <fstream>

namespace zfc {

using nlohmann::json;

nlohmann::json complex_to_json(Complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

Complex complex_from_json(const json& j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_object()) return {j.value("re", 0.0), j.value("im", 0.0)};
  throw ArgumentError("expected a complex value, got " + j.dump());
}

IsingParams GraphFile::params(double beta_default, Complex lambda_default) const {
  IsingParams p = IsingParams::uniform(graph, beta_default, lambda_default);
  if (beta) p.beta = *beta;
  if (lambda) p.lambda = *lambda;
  return p;
}

GraphFile graph_from_json(const json& j) {
  try {
    if (!j.is_object()) throw ArgumentError("graph JSON must be an object");
    auto n = j.at("vertex_count").get<std::size_t>();
    std::vector<Edge> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ArgumentError("graph edge must be a pair: " + e.dump());
      edges.push_back({e[0].get<std::size_t>(), e[1].get<std::size_t>()});
    }
    GraphFile f{Graph(n, std::move(edges)), std::nullopt, std::nullopt};
    if (j.contains("beta")) {
      const auto& b = j["beta"];
      if (b.is_number()) f.beta = std::vector<double>(f.graph.edge_count(), b.get<double>());
      else f.beta = b.get<std::vector<double>>();
      if (f.beta->size() != f.graph.edge_count()) throw ArgumentError("beta array length != edge count");
      for (double x : *f.beta)
        if (!(x >= 1.0)) throw ArgumentError("beta must be >= 1");
    }
    if (j.contains("lambda")) {
      const auto& l = j["lambda"];
      if (l.is_array()) {
        std::vector<Complex> lam;
        for (const auto& x : l) lam.push_back(complex_from_json(x));
        if (lam.size() != n) throw ArgumentError("lambda array length != vertex count");
        f.lambda = std::move(lam);
      } else {
        f.lambda = std::vector<Complex>(n, complex_from_json(l));
      }
    }
    return f;
  } catch (const json::exception& e) {
    throw ArgumentError(std::string("malformed graph JSON: ") + e.what());
  }
}

GraphFile read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open graph file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ArgumentError("cannot parse " + path + ": " + e.what());
  }
  return graph_from_json(j);
}

json graph_to_json(const Graph& g) {
  json edges = json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  return {{"vertex_count", g.vertex_count()}, {"edges", edges}};
}

json graph_to_json(const Graph& g, const IsingParams& p) {
  json j = graph_to_json(g);
  j["beta"] = p.beta;
  json lam = json::array();
  for (auto z : p.lambda) lam.push_back(complex_to_json(z));
  j["lambda"] = lam;
  return j;
}

}  // namespace zfc
