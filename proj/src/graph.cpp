#include "zfc/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace zfc {

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges)
    : n_(vertex_count), edges_(std::move(edges)) {
  std::set<std::pair<VertexId, VertexId>> seen;
  std::vector<std::size_t> deg(n_, 0);
  for (const auto& [u, v] : edges_) {
    if (u >= n_ || v >= n_)
      throw ArgumentError("edge endpoint out of range: " + std::to_string(u) + "," + std::to_string(v));
    if (u == v) throw ArgumentError("self-loop at vertex " + std::to_string(u));
    if (!seen.emplace(std::min(u, v), std::max(u, v)).second)
      throw ArgumentError("duplicate edge " + std::to_string(u) + "," + std::to_string(v));
    ++deg[u];
    ++deg[v];
  }
  offset_.assign(n_ + 1, 0);
  for (std::size_t v = 0; v < n_; ++v) offset_[v + 1] = offset_[v] + deg[v];
  adj_.resize(offset_[n_]);
  std::vector<std::size_t> fill(offset_.begin(), offset_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    auto [u, v] = edges_[e];
    adj_[fill[u]++] = {v, e};
    adj_[fill[v]++] = {u, e};
  }
  for (std::size_t v = 0; v < n_; ++v)
    std::sort(adj_.begin() + offset_[v], adj_.begin() + offset_[v + 1],
              [](const Incidence& a, const Incidence& b) { return a.neighbor < b.neighbor; });
}

std::span<const Incidence> Graph::incident(VertexId v) const {
  if (v >= n_) throw ArgumentError("vertex out of range: " + std::to_string(v));
  return {adj_.data() + offset_[v], offset_[v + 1] - offset_[v]};
}

std::size_t Graph::max_degree() const {
  std::size_t d = 0;
  for (std::size_t v = 0; v < n_; ++v) d = std::max(d, offset_[v + 1] - offset_[v]);
  return d;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
  for (const auto& inc : incident(u))
    if (inc.neighbor == v) return inc.edge;
  return std::nullopt;
}

Graph Graph::prefix(std::size_t i) const {
  if (i > edges_.size()) throw ArgumentError("prefix longer than edge list");
  return Graph(n_, std::vector<Edge>(edges_.begin(), edges_.begin() + static_cast<std::ptrdiff_t>(i)));
}

Graph delete_edges(const Graph& g, const std::vector<EdgeId>& removed) {
  std::vector<bool> drop(g.edge_count(), false);
  for (EdgeId e : removed) {
    if (e >= g.edge_count()) throw ArgumentError("delete_edges: bad edge id");
    drop[e] = true;
  }
  std::vector<Edge> kept;
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    if (!drop[e]) kept.push_back(g.edge(e));
  return Graph(g.vertex_count(), std::move(kept));
}

std::vector<Distance> bfs_distances(const Graph& g, VertexId source) {
  std::vector<Distance> dist(g.vertex_count(), kInfinite);
  std::deque<VertexId> q{source};
  dist.at(source) = 0;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (dist[inc.neighbor] == kInfinite) {
        dist[inc.neighbor] = dist[x] + 1;
        q.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

Distance vertex_distance(const Graph& g, VertexId a, VertexId b) { return bfs_distances(g, a).at(b); }

Distance vertex_set_distance(const Graph& g, VertexId v, const std::vector<VertexId>& targets) {
  auto d = bfs_distances(g, v);
  Distance best = kInfinite;
  for (VertexId t : targets) best = std::min(best, d.at(t));
  return best;
}

namespace {

// Multi-source BFS from both endpoints of e.
std::vector<Distance> edge_bfs(const Graph& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  std::vector<Distance> dist(g.vertex_count(), kInfinite);
  std::deque<VertexId> q{ed.u, ed.v};
  dist[ed.u] = dist[ed.v] = 0;
  while (!q.empty()) {
    VertexId x = q.front();
    q.pop_front();
    for (const auto& inc : g.incident(x)) {
      if (dist[inc.neighbor] == kInfinite) {
        dist[inc.neighbor] = dist[x] + 1;
        q.push_back(inc.neighbor);
      }
    }
  }
  return dist;
}

}  // namespace

Distance edge_distance(const Graph& g, EdgeId e, EdgeId f) {
  auto d = edge_bfs(g, e);
  const Edge& ef = g.edge(f);
  return std::min(d[ef.u], d[ef.v]);
}

Distance edge_distance(const Graph& g, EdgeId e, const std::vector<EdgeId>& targets) {
  if (targets.empty()) return kInfinite;
  auto d = edge_bfs(g, e);
  Distance best = kInfinite;
  for (EdgeId f : targets) {
    const Edge& ef = g.edge(f);
    best = std::min({best, d[ef.u], d[ef.v]});
  }
  return best;
}

Distance edge_set_distance(const Graph& g, const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  Distance best = kInfinite;
  for (EdgeId e : a) best = std::min(best, edge_distance(g, e, b));
  return best;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  auto d = bfs_distances(g, 0);
  return std::none_of(d.begin(), d.end(), [](Distance x) { return x == kInfinite; });
}

void Pinning::validate(const Graph& g) const {
  for (const auto& [v, _] : spins_)
    if (v >= g.vertex_count()) throw ArgumentError("pinned vertex out of range: " + std::to_string(v));
}

}  // namespace zfc
