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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zfc/errors.hpp"

namespace zfc {

using VertexId = std::size_t;
using EdgeId = std::size_t;
using Complex = std::complex<double>;

/// Graph distance; kInfinite when no path exists or a set is empty.
using Distance = std::size_t;
inline constexpr Distance kInfinite = std::numeric_limits<std::size_t>::max();

struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  bool operator==(const Edge&) const = default;
};

/// One entry of a vertex's incidence list.
struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/**
 * @brief Finite simple undirected graph.
 *
 * Edges keep their insertion order, which is the order used by the
 * telescoping product. Incidence lists are sorted by neighbor id.
 */
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t vertex_count, std::vector<Edge> edges);

  std::size_t vertex_count() const { return n_; }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  std::span<const Incidence> incident(VertexId v) const;
  std::size_t degree(VertexId v) const { return incident(v).size(); }
  std::size_t max_degree() const;
  std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

  /// Graph on the same vertices with only the first i edges.
  Graph prefix(std::size_t i) const;

  bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::size_t> offset_;
  std::vector<Incidence> adj_;
};

Graph delete_edges(const Graph& g, const std::vector<EdgeId>& removed);

std::vector<Distance> bfs_distances(const Graph& g, VertexId source);
Distance vertex_distance(const Graph& g, VertexId a, VertexId b);
/// Distance from v to the nearest vertex of `targets`.
Distance vertex_set_distance(const Graph& g, VertexId v, const std::vector<VertexId>& targets);
/// Shortest path between any endpoint of e and any endpoint of f.
Distance edge_distance(const Graph& g, EdgeId e, EdgeId f);
/// min over f in targets of edge_distance(e, f).
Distance edge_distance(const Graph& g, EdgeId e, const std::vector<EdgeId>& targets);
/// min over pairs (a in A, b in B) of edge_distance(a, b).
Distance edge_set_distance(const Graph& g, const std::vector<EdgeId>& a, const std::vector<EdgeId>& b);
bool is_connected(const Graph& g);

enum class Spin : std::int8_t { kMinus = -1, kPlus = 1 };

inline char spin_char(Spin s) { return s == Spin::kPlus ? '+' : '-'; }

/// Partial spin assignment.
class Pinning {
 public:
  Pinning() = default;
  Pinning(std::initializer_list<std::pair<const VertexId, Spin>> init) : spins_(init) {}

  void set(VertexId v, Spin s) { spins_[v] = s; }
  void erase(VertexId v) { spins_.erase(v); }
  std::optional<Spin> get(VertexId v) const {
    auto it = spins_.find(v);
    if (it == spins_.end()) return std::nullopt;
    return it->second;
  }
  bool contains(VertexId v) const { return spins_.count(v) != 0; }
  bool empty() const { return spins_.empty(); }
  std::size_t size() const { return spins_.size(); }
  const std::map<VertexId, Spin>& spins() const { return spins_; }
  void validate(const Graph& g) const;

  Pinning with(VertexId v, Spin s) const {
    Pinning p = *this;
    p.set(v, s);
    return p;
  }

 private:
  std::map<VertexId, Spin> spins_;
};

/// Value in T extended by a positive infinity sentinel.
template <class T>
class Extended {
 public:
  Extended() : value_{} {}
  Extended(T v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
  static Extended infinity() {
    Extended x;
    x.infinite_ = true;
    return x;
  }
  bool is_infinite() const { return infinite_; }
  const T& value() const {
    if (infinite_) throw ArgumentError("value() on infinite edge activity");
    return value_;
  }
  bool operator==(const Extended& o) const {
    return infinite_ == o.infinite_ && (infinite_ || value_ == o.value_);
  }

 private:
  T value_;
  bool infinite_ = false;
};

/**
 * @brief Overrides of edge activities and vertex fields.
 *
 * An edge mapped to infinity is contracted: its endpoints are forced equal.
 */
template <class Real, class Field>
struct PartialEvaluationT {
  std::map<EdgeId, Extended<Real>> edges;
  std::map<VertexId, Field> fields;

  bool empty() const { return edges.empty() && fields.empty(); }

  std::vector<EdgeId> edge_domain() const {
    std::vector<EdgeId> d;
    for (const auto& [e, _] : edges) d.push_back(e);
    return d;
  }
  std::vector<VertexId> field_domain() const {
    std::vector<VertexId> d;
    for (const auto& [v, _] : fields) d.push_back(v);
    return d;
  }
};

template <class Real, class Field>
PartialEvaluationT<Real, Field> compose(const PartialEvaluationT<Real, Field>& a,
                                        const PartialEvaluationT<Real, Field>& b) {
  PartialEvaluationT<Real, Field> c = a;
  for (const auto& [e, x] : b.edges)
    if (!c.edges.emplace(e, x).second) throw ArgumentError("compose: overlapping edge domains");
  for (const auto& [v, x] : b.fields)
    if (!c.fields.emplace(v, x).second) throw ArgumentError("compose: overlapping vertex domains");
  return c;
}

/// Edges where a and b disagree, including edges in only one domain.
template <class Real, class Field>
std::vector<EdgeId> disagreement_edges(const PartialEvaluationT<Real, Field>& a,
                                       const PartialEvaluationT<Real, Field>& b) {
  std::vector<EdgeId> out;
  for (const auto& [e, x] : a.edges) {
    auto it = b.edges.find(e);
    if (it == b.edges.end() || !(it->second == x)) out.push_back(e);
  }
  for (const auto& [e, _] : b.edges)
    if (!a.edges.count(e)) out.push_back(e);
  return out;
}

/// Per-edge activities and per-vertex fields.
template <class Real, class Field>
struct IsingParamsT {
  std::vector<Real> beta;
  std::vector<Field> lambda;

  static IsingParamsT uniform(const Graph& g, const Real& b, const Field& l) {
    return {std::vector<Real>(g.edge_count(), b), std::vector<Field>(g.vertex_count(), l)};
  }
  void validate(const Graph& g) const {
    if (beta.size() != g.edge_count()) throw ArgumentError("beta length != edge count");
    if (lambda.size() != g.vertex_count()) throw ArgumentError("lambda length != vertex count");
  }
};

using IsingParams = IsingParamsT<double, Complex>;
using PartialEvaluation = PartialEvaluationT<double, Complex>;

}  // namespace zfc
