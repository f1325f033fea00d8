#include "zfc/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <numeric>

namespace zfc {

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw ArgumentError("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
  return Graph(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= leaves; ++i) e.push_back({0, i});
  return Graph(leaves + 1, e);
}

Graph ladder_graph(std::size_t length) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < length; ++i) {
    e.push_back({i, length + i});
    if (i + 1 < length) {
      e.push_back({i, i + 1});
      e.push_back({length + i, length + i + 1});
    }
  }
  return Graph(2 * length, e);
}

Graph binary_tree(std::size_t depth) {
  std::size_t n = (std::size_t{1} << (depth + 1)) - 1;
  std::vector<Edge> e;
  for (std::size_t v = 1; v < n; ++v) e.push_back({(v - 1) / 2, v});
  return Graph(n, e);
}

Graph grid_graph(std::size_t rows, std::size_t cols) {
  std::vector<Edge> e;
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      std::size_t v = r * cols + c;
      if (c + 1 < cols) e.push_back({v, v + 1});
      if (r + 1 < rows) e.push_back({v, v + cols});
    }
  return Graph(rows * cols, e);
}

Graph random_bounded_degree_graph(std::size_t n, std::size_t max_deg, Rng& rng, bool connected,
                                  double keep_probability) {
  for (int attempt = 0; attempt < 10000; ++attempt) {
    std::vector<Edge> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({i, j});
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[uniform_index(rng, i)]);
    std::vector<std::size_t> deg(n, 0);
    std::vector<Edge> chosen;
    for (const auto& p : pairs) {
      if (deg[p.u] >= max_deg || deg[p.v] >= max_deg) continue;
      if (keep_probability < 1.0 && uniform01(rng) >= keep_probability) continue;
      chosen.push_back(p);
      ++deg[p.u];
      ++deg[p.v];
    }
    Graph g(n, chosen);
    if (!connected || is_connected(g)) return g;
  }
  throw ResourceError("random_bounded_degree_graph: no connected sample found");
}

Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (uniform01(rng) < p) e.push_back({i, j});
  return Graph(n, e);
}

namespace {

using Mask = std::uint32_t;

struct Small {
  std::size_t n;
  std::vector<Mask> adj;
};

Small to_small(const Graph& g) {
  Small s{g.vertex_count(), std::vector<Mask>(g.vertex_count(), 0)};
  for (const auto& e : g.edges()) {
    s.adj[e.u] |= Mask{1} << e.v;
    s.adj[e.v] |= Mask{1} << e.u;
  }
  return s;
}

Graph from_small(const Small& s) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < s.n; ++i)
    for (std::size_t j = i + 1; j < s.n; ++j)
      if (s.adj[i] >> j & 1) e.push_back({i, j});
  return Graph(s.n, e);
}

// Colour refinement; colours are ranks of sorted signatures so they do not
// depend on the labelling. Returns final colours and an invariant key.
std::pair<std::vector<std::size_t>, std::vector<std::size_t>> refine(const Small& s) {
  std::vector<std::size_t> color(s.n), key;
  for (std::size_t v = 0; v < s.n; ++v) color[v] = static_cast<std::size_t>(__builtin_popcount(s.adj[v]));
  key.push_back(s.n);
  for (std::size_t round = 0; round <= s.n; ++round) {
    std::vector<std::vector<std::size_t>> sig(s.n);
    for (std::size_t v = 0; v < s.n; ++v) {
      sig[v].push_back(color[v]);
      std::vector<std::size_t> nb;
      for (std::size_t w = 0; w < s.n; ++w)
        if (s.adj[v] >> w & 1) nb.push_back(color[w]);
      std::sort(nb.begin(), nb.end());
      // triangles through v, a cheap extra invariant
      std::size_t tri = 0;
      for (std::size_t w = 0; w < s.n; ++w)
        if (s.adj[v] >> w & 1) tri += static_cast<std::size_t>(__builtin_popcount(s.adj[v] & s.adj[w]));
      sig[v].push_back(tri);
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    auto uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    std::vector<std::size_t> next(s.n);
    for (std::size_t v = 0; v < s.n; ++v)
      next[v] = static_cast<std::size_t>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    auto sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    for (const auto& x : sorted) {
      key.insert(key.end(), x.begin(), x.end());
      key.push_back(SIZE_MAX);
    }
    bool stable = std::set<std::size_t>(next.begin(), next.end()).size() ==
                  std::set<std::size_t>(color.begin(), color.end()).size();
    color = next;
    if (stable && round > 0) break;
  }
  return {color, key};
}

bool iso_search(const Small& a, const Small& b, const std::vector<std::size_t>& ca,
                const std::vector<std::size_t>& cb, std::vector<int>& map, std::vector<bool>& used, std::size_t v) {
  if (v == a.n) return true;
  for (std::size_t w = 0; w < b.n; ++w) {
    if (used[w] || ca[v] != cb[w]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < v && ok; ++u)
      ok = ((a.adj[v] >> u) & 1) == ((b.adj[w] >> map[u]) & 1);
    if (!ok) continue;
    map[v] = static_cast<int>(w);
    used[w] = true;
    if (iso_search(a, b, ca, cb, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

bool iso_small(const Small& a, const std::vector<std::size_t>& ca, const Small& b,
               const std::vector<std::size_t>& cb) {
  std::vector<int> map(a.n, -1);
  std::vector<bool> used(b.n, false);
  return iso_search(a, b, ca, cb, map, used, 0);
}

}  // namespace

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  Small sa = to_small(a), sb = to_small(b);
  auto [ca, ka] = refine(sa);
  auto [cb, kb] = refine(sb);
  return ka == kb && iso_small(sa, ca, sb, cb);
}

std::vector<Graph> all_graphs(std::size_t n) {
  if (n > 10) throw ResourceError("all_graphs: n > 10 not supported");
  std::vector<Small> level{Small{0, {}}};
  for (std::size_t k = 1; k <= n; ++k) {
    struct Entry {
      Small g;
      std::vector<std::size_t> colors;
    };
    std::map<std::vector<std::size_t>, std::vector<Entry>> buckets;
    std::vector<Small> next;
    for (const auto& base : level) {
      for (Mask nb = 0; nb < (Mask{1} << (k - 1)); ++nb) {
        Small s{k, base.adj};
        s.adj.push_back(nb);
        for (std::size_t i = 0; i + 1 < k; ++i)
          if (nb >> i & 1) s.adj[i] |= Mask{1} << (k - 1);
        auto [colors, key] = refine(s);
        auto& bucket = buckets[key];
        bool seen = std::any_of(bucket.begin(), bucket.end(),
                                [&](const Entry& e) { return iso_small(s, colors, e.g, e.colors); });
        if (!seen) {
          bucket.push_back({s, colors});
          next.push_back(s);
        }
      }
    }
    level = std::move(next);
  }
  std::vector<Graph> out;
  for (const auto& s : level) out.push_back(from_small(s));
  return out;
}

std::vector<Graph> all_connected_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(std::move(g));
  return out;
}

}  // namespace zfc
