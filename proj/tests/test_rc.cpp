#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "zfc/errors.hpp"
#include "zfc/exact.hpp"
#include "zfc/generators.hpp"
#include "zfc/rc.hpp"

using namespace zfc;

namespace {

// Components counted by repeated BFS over the included edges.
double naive_rc_Z(const Graph& g, const RCParams& rp, const EdgePinning& cond = {}) {
  std::size_t m = g.edge_count(), n = g.vertex_count();
  double z = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
    bool ok = true;
    for (const auto& [e, in] : cond) ok = ok && (((mask >> e) & 1) == (in ? 1u : 0u));
    if (!ok) continue;
    double w = 1;
    for (EdgeId e = 0; e < m; ++e) w *= ((mask >> e) & 1) ? rp.p[e] : 1 - rp.p[e];
    std::vector<int> comp(n, -1);
    for (VertexId s = 0; s < n; ++s) {
      if (comp[s] >= 0) continue;
      double prod = 1;
      std::vector<VertexId> q{s};
      comp[s] = static_cast<int>(s);
      for (std::size_t i = 0; i < q.size(); ++i) {
        prod *= rp.lambda[q[i]];
        for (EdgeId e = 0; e < m; ++e) {
          if (!((mask >> e) & 1)) continue;
          VertexId a = g.edge(e).u, b = g.edge(e).v, other;
          if (a == q[i]) other = b;
          else if (b == q[i]) other = a;
          else continue;
          if (comp[other] < 0) {
            comp[other] = static_cast<int>(s);
            q.push_back(other);
          }
        }
      }
      w *= 1 + prod;
    }
    z += w;
  }
  return z;
}

RCParams random_rc(const Graph& g, Rng& rng, double pmax = 0.95) {
  RCParams rp;
  for (std::size_t i = 0; i < g.edge_count(); ++i) rp.p.push_back(uniform_real(rng, 0, pmax));
  for (std::size_t i = 0; i < g.vertex_count(); ++i) rp.lambda.push_back(uniform01(rng));
  return rp;
}

RCConfig random_state(std::size_t m, Rng& rng) {
  RCConfig s(m);
  for (std::size_t i = 0; i < m; ++i) s[i] = uniform01(rng) < 0.5;
  return s;
}

}  // namespace

TEST_CASE("rc_Z_exact examples") {
  Graph k2 = path_graph(2);
  CHECK(rc_Z_exact(k2, RCParams::uniform(k2, 0.5, 1)) == doctest::Approx(3).epsilon(1e-15));

  Graph empty(3, {});
  RCParams rp{{}, {0.5, 0.25, 1}};
  CHECK(rc_Z_exact(empty, rp) == doctest::Approx(1.5 * 1.25 * 2));

  // p = 1 on edge {0,1} of P3 gives K2 with merged field lambda_0 lambda_1.
  Graph p3 = path_graph(3);
  RCParams r3{{1, 0.4}, {0.5, 0.6, 0.7}};
  RCParams merged{{0.4}, {0.3, 0.7}};
  CHECK(rc_Z_exact(p3, r3) == doctest::Approx(rc_Z_exact(k2, merged)).epsilon(1e-14));
}

TEST_CASE("property: rc_Z_exact matches the naive component count") {
  Rng rng(11);
  for (int t = 0; t < 60; ++t) {
    Graph g = random_graph(2 + uniform_index(rng, 5), 0.5, rng);
    RCParams rp = random_rc(g, rng, 1.0);
    if (t % 3 == 0)
      for (auto& l : rp.lambda)
        if (uniform01(rng) < 0.3) l = 0;
    EdgePinning cond;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
      if (uniform01(rng) < 0.3) cond[e] = uniform01(rng) < 0.5;
    CHECK(rc_Z_exact(g, rp, cond) == doctest::Approx(naive_rc_Z(g, rp, cond)).epsilon(1e-12));
  }
}

TEST_CASE("rc cap and validation") {
  Graph g = grid_graph(5, 5);  // 40 edges
  CHECK_THROWS_AS(rc_Z_exact(g, RCParams::uniform(g, 0.5, 0.5)), ResourceError);
  Graph k2 = path_graph(2);
  CHECK_THROWS_AS(rc_Z_exact(k2, RCParams::uniform(k2, 1.5, 0.5)), DomainError);
  CHECK_THROWS_AS(rc_Z_exact(k2, RCParams{{0.5}, {0.5}}), ArgumentError);
}

TEST_CASE("Ising and random cluster agree") {
  Graph k2 = path_graph(2);
  auto [zi, zr] = ising_rc_consistency(k2, {2}, {1, 1});
  CHECK(zi == doctest::Approx(6));
  CHECK(zr == doctest::Approx(6));

  Graph tri = cycle_graph(3);
  auto [a, b] = ising_rc_consistency(tri, {3, 3, 3}, {0.5, 0.5, 0.5});
  CHECK(std::abs(a - b) <= 1e-10 * std::abs(a));

  // beta = 1 means p = 0.
  auto [c, d] = ising_rc_consistency(tri, {1, 1, 1}, {0.2, 0.3, 0.4});
  CHECK(c == doctest::Approx(1.2 * 1.3 * 1.4));
  CHECK(d == doctest::Approx(c));

  Rng rng(3);
  for (std::size_t n = 2; n <= 5; ++n) {
    for (const Graph& g : all_graphs(n)) {
      std::vector<double> beta, lambda;
      for (std::size_t i = 0; i < g.edge_count(); ++i) beta.push_back(uniform_real(rng, 1, 4));
      for (std::size_t i = 0; i < n; ++i) lambda.push_back(uniform01(rng));
      auto [x, y] = ising_rc_consistency(g, beta, lambda);
      CHECK(std::abs(x - y) <= 1e-10 * std::abs(x));
    }
  }
}

TEST_CASE("rc_edge_marginal examples") {
  Graph k2 = path_graph(2);
  RCParams rp = RCParams::uniform(k2, 0.5, 1);
  CHECK(rc_edge_marginal(k2, rp, 0, {}, RcRoute::kDirect) == doctest::Approx(2.0 / 3));
  CHECK(rc_edge_marginal(k2, rp, 0, {}, RcRoute::kViaIsing) == doctest::Approx(2.0 / 3));
  CHECK(rc_edge_marginal(k2, RCParams::uniform(k2, 0, 0.3), 0, {}, RcRoute::kDirect) == 1.0);

  Graph p3 = path_graph(3);
  RCParams r3 = RCParams::uniform(p3, 0.5, 0.7);
  double direct = rc_edge_marginal(p3, r3, 1, {{0, true}}, RcRoute::kDirect);
  double via = rc_edge_marginal(p3, r3, 1, {{0, true}}, RcRoute::kViaIsing);
  CHECK(std::abs(direct - via) <= 1e-10);

  CHECK_THROWS_AS(rc_edge_marginal(p3, r3, 0, {{0, true}}, RcRoute::kDirect), ArgumentError);
  RCParams sure{{1, 0.5}, {0.5, 0.5, 0.5}};
  CHECK_THROWS_AS(rc_edge_marginal(p3, sure, 1, {}, RcRoute::kViaIsing), DomainError);
  // p = 1 is fine once that edge is pinned in.
  CHECK(std::abs(rc_edge_marginal(p3, sure, 1, {{0, true}}, RcRoute::kViaIsing) -
                 rc_edge_marginal(p3, sure, 1, {{0, true}}, RcRoute::kDirect)) <= 1e-10);
}

TEST_CASE("property: both marginal routes agree") {
  Rng rng(21);
  for (int t = 0; t < 150; ++t) {
    Graph g = random_graph(2 + uniform_index(rng, 6), 0.45, rng);
    if (g.edge_count() == 0 || g.edge_count() > 10) continue;
    RCParams rp = random_rc(g, rng);
    EdgeId e = uniform_index(rng, g.edge_count());
    EdgePinning cond;
    for (EdgeId f = 0; f < g.edge_count(); ++f)
      if (f != e && uniform01(rng) < 0.4) cond[f] = uniform01(rng) < 0.5;
    double a = rc_edge_marginal(g, rp, e, cond, RcRoute::kDirect);
    double b = rc_edge_marginal(g, rp, e, cond, RcRoute::kViaIsing);
    CHECK(std::abs(a - b) <= 1e-10);
  }
}

TEST_CASE("update probability examples") {
  Graph tri = cycle_graph(3);
  RCParams rp = RCParams::uniform(tri, 0.3, 0.6);
  RCConfig s(3);
  s[1] = s[2] = true;  // edge 0 closes a cycle
  CHECK(update_probability(tri, rp, s, 0) == 0.3);

  Graph k2 = path_graph(2);
  CHECK(update_probability(k2, RCParams::uniform(k2, 0.5, 1), RCConfig(1), 0) == doctest::Approx(1.0 / 3));
  for (double p : {0.1, 0.5, 0.9}) {
    Graph p4 = path_graph(4);
    RCConfig st(3);
    st[0] = true;
    CHECK(update_probability(p4, RCParams::uniform(p4, p, 1), st, 1) == doctest::Approx(p / (2 - p)));
  }
}

TEST_CASE("property: update probability bounds and monotonicity") {
  Rng rng(5);
  for (int t = 0; t < 300; ++t) {
    Graph g = random_graph(3 + uniform_index(rng, 6), 0.5, rng);
    if (g.edge_count() == 0) continue;
    RCParams rp = random_rc(g, rng);
    RCConfig lo = random_state(g.edge_count(), rng), hi = lo;
    for (std::size_t i = 0; i < hi.size(); ++i)
      if (uniform01(rng) < 0.4) hi[i] = true;
    EdgeId e = uniform_index(rng, g.edge_count());
    double a = update_probability(g, rp, lo, e), b = update_probability(g, rp, hi, e);
    CHECK(a <= rp.p[e] * (1 + 1e-15));
    CHECK(a >= rp.p[e] / 6 * (1 - 1e-15));
    CHECK(a <= b * (1 + 1e-15));
  }
}

TEST_CASE("glauber step threshold") {
  Graph k2 = path_graph(2);
  RCParams rp = RCParams::uniform(k2, 0.5, 1);
  RCConfig s(1);
  CHECK(!glauber_step(k2, rp, s, 0, 0.5)[0]);
  CHECK(glauber_step(k2, rp, s, 0, 1 - 1.0 / 3)[0]);
  CHECK_THROWS_AS(glauber_step(k2, rp, s, 0, 1.0), ArgumentError);
}

TEST_CASE("coupling") {
  Graph k2 = path_graph(2);
  auto t = coupling_time(k2, RCParams::uniform(k2, 0.5, 1), 7, 1000);
  CHECK(t.coalesced);
  CHECK(t.steps == 1);
  CHECK(t.top_state == t.bottom_state);

  Graph g = grid_graph(3, 3);
  RCParams rp = RCParams::uniform(g, 0.5, 0.8);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto tr = coupling_time(g, rp, seed, 10000);
    CHECK(tr.bottom_state.is_subset_of(tr.top_state));
    if (tr.coalesced) CHECK(tr.top_state == tr.bottom_state);
  }
  auto capped = coupling_time(g, rp, 1, 3);
  CHECK(!capped.coalesced);
  CHECK(capped.steps == 3);
  CHECK_THROWS_AS(coupling_time(k2, RCParams::uniform(k2, 1, 1), 1, 10), DomainError);
}

TEST_CASE("short run is close to stationary") {
  Graph g = cycle_graph(4);
  RCParams rp{{0.3, 0.5, 0.7, 0.4}, {0.2, 1, 0.5, 0.9}};
  auto exact = rc_distribution(g, rp);
  auto emp = glauber_histogram(g, rp, 3, 200000, 10000);
  CHECK(total_variation(exact, emp) <= 0.03);
  double s = 0;
  for (std::size_t mask = 0; mask < exact.size(); ++mask) s += rc_weight(g, rp, RCConfig(4, mask));
  CHECK(s == doctest::Approx(rc_Z_exact(g, rp)).epsilon(1e-14));
}

TEST_CASE("coalescence sweep is deterministic") {
  auto a = ladder_coalescence({3, 4}, 0.5, 1, 9, 42, 100000, 1);
  auto b = ladder_coalescence({3, 4}, 0.5, 1, 9, 42, 100000, 4);
  REQUIRE(a.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    CHECK(a[i].median_steps == b[i].median_steps);
    CHECK(a[i].coalesced == 9);
  }
  CHECK(a[0].edges == 7);

  std::vector<CoalescenceRow> rows;
  for (std::size_t m : {4, 8, 16}) {
    CoalescenceRow r;
    r.edges = m;
    r.median_steps = 2.5 * static_cast<double>(m) * std::log(static_cast<double>(m));
    rows.push_back(r);
  }
  CHECK(fit_mlogm_constant(rows) == doctest::Approx(2.5));
}
