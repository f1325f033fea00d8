#include <doctest.h>

#include <algorithm>

#include "zfc/generators.hpp"
#include "zfc/graph.hpp"
#include "zfc/graph_io.hpp"

using namespace zfc;

TEST_CASE("graph construction rejects loops, duplicates and bad ids") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), ArgumentError);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), ArgumentError);
  Graph g(4, {{2, 0}, {0, 1}, {3, 0}});
  auto inc = g.incident(0);
  REQUIRE(inc.size() == 3);
  CHECK(inc[0].neighbor == 1);
  CHECK(inc[1].neighbor == 2);
  CHECK(inc[2].neighbor == 3);
  CHECK(inc[1].edge == 0);
}

TEST_CASE("edge_distance") {
  Graph p = path_graph(4);
  CHECK(edge_distance(p, 0, std::vector<EdgeId>{2}) == 1);
  CHECK(edge_distance(p, 1, std::vector<EdgeId>{1}) == 0);
  CHECK(edge_distance(p, 0, std::vector<EdgeId>{}) == kInfinite);
  Graph two(4, {{0, 1}, {2, 3}});
  CHECK(edge_distance(two, 0, 1) == kInfinite);
}

TEST_CASE("edge_distance symmetric and monotone under edge addition") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = random_graph(8, 0.3, rng);
    if (g.edge_count() < 2) continue;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (EdgeId f = 0; f < g.edge_count(); ++f) CHECK(edge_distance(g, e, f) == edge_distance(g, f, e));
    // Adding edges at the end keeps ids of the old ones.
    std::vector<Edge> more = g.edges();
    for (std::size_t u = 0; u < 8; ++u)
      for (std::size_t v = u + 1; v < 8; ++v)
        if (!g.find_edge(u, v) && uniform01(rng) < 0.2) more.push_back({u, v});
    Graph h(8, more);
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      for (EdgeId f = 0; f < g.edge_count(); ++f) CHECK(edge_distance(h, e, f) <= edge_distance(g, e, f));
  }
}

TEST_CASE("delete_edges") {
  Graph tri = complete_graph(3);
  Graph p = delete_edges(tri, {2});
  CHECK(p.edge_count() == 2);
  CHECK(p.vertex_count() == 3);
  CHECK(delete_edges(tri, {0, 1, 2}).edge_count() == 0);
  CHECK(delete_edges(tri, {}) == tri);
  CHECK_THROWS_AS(delete_edges(tri, {3}), ArgumentError);

  // Deleting in two rounds equals deleting the union.
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_graph(7, 0.5, rng);
    std::vector<EdgeId> a, b;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
      double x = uniform01(rng);
      if (x < 0.3) a.push_back(e);
      else if (x < 0.6) b.push_back(e);
    }
    Graph ga = delete_edges(g, a);
    std::vector<EdgeId> b_remapped;
    for (EdgeId e : b) b_remapped.push_back(e - static_cast<EdgeId>(std::count_if(a.begin(), a.end(), [&](EdgeId x) { return x < e; })));
    std::vector<EdgeId> ab = a;
    ab.insert(ab.end(), b.begin(), b.end());
    CHECK(delete_edges(ga, b_remapped) == delete_edges(g, ab));
  }
}

TEST_CASE("max_degree") {
  CHECK(star_graph(4).max_degree() == 4);
  CHECK(cycle_graph(5).max_degree() == 2);
  CHECK(Graph(3, {}).max_degree() == 0);
}

TEST_CASE("families") {
  CHECK(ladder_graph(4).edge_count() == 10);
  CHECK(binary_tree(3).vertex_count() == 15);
  CHECK(is_connected(ladder_graph(5)));
  Rng rng(3);
  for (int i = 0; i < 20; ++i) {
    Graph g = random_bounded_degree_graph(12, 4, rng);
    CHECK(g.max_degree() <= 4);
    CHECK(is_connected(g));
  }
}

TEST_CASE("isomorphism classes match known counts") {
  const std::size_t all[] = {1, 1, 2, 4, 11, 34, 156, 1044};
  const std::size_t conn[] = {1, 1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    CHECK(all_graphs(n).size() == all[n]);
    CHECK(all_connected_graphs(n).size() == conn[n]);
  }
}

TEST_CASE("isomorphic detects relabelling") {
  Graph a(4, {{0, 1}, {1, 2}, {2, 3}});
  Graph b(4, {{3, 1}, {1, 0}, {0, 2}});
  Graph c = star_graph(3);
  CHECK(isomorphic(a, b));
  CHECK_FALSE(isomorphic(a, c));
}

TEST_CASE("graph JSON round trip") {
  Graph g = cycle_graph(4);
  IsingParams p = IsingParams::uniform(g, 2.0, {0.25, -0.5});
  p.beta[1] = 3.0;
  auto f = graph_from_json(graph_to_json(g, p));
  CHECK(f.graph == g);
  CHECK(*f.beta == p.beta);
  CHECK(*f.lambda == p.lambda);

  auto j = nlohmann::json::parse(R"({"vertex_count": 2, "edges": [[0,1]], "beta": 2, "lambda": {"re": 0.5, "im": 0}})");
  auto h = graph_from_json(j);
  CHECK(h.beta->at(0) == 2.0);
  CHECK(h.lambda->at(1) == Complex(0.5, 0));
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"vertex_count": 2, "edges": [[0,2]]})")), ArgumentError);
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::parse(R"({"edges": []})")), ArgumentError);
}
