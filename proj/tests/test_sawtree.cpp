#include <doctest.h>

#include "oracle.hpp"
#include "zfc/exact.hpp"
#include "zfc/generators.hpp"
#include "zfc/sawtree.hpp"

using namespace zfc;

namespace {

bool same_shape(const Graph& g, const SawNode& t, VertexId v, VertexId parent) {
  std::size_t expected = 0;
  for (const auto& inc : g.incident(v))
    if (inc.neighbor != parent) ++expected;
  if (t.children.size() != expected) return false;
  std::size_t i = 0;
  for (const auto& inc : g.incident(v)) {
    if (inc.neighbor == parent) continue;
    const SawNode& c = t.children[i++];
    if (c.original_vertex != inc.neighbor) return false;
    if (c.pin == SawPin::kFree && !same_shape(g, c, inc.neighbor, v)) return false;
  }
  return true;
}

Pinning random_pinning(std::size_t n, VertexId except, Rng& rng) {
  Pinning p;
  for (VertexId v = 0; v < n; ++v)
    if (v != except && uniform01(rng) < 0.3) p.set(v, uniform01(rng) < 0.5 ? Spin::kPlus : Spin::kMinus);
  return p;
}

}  // namespace

TEST_CASE("SAW tree of a tree is the tree") {
  Graph t = binary_tree(3);
  SawNode root = build_saw_tree(t, 0, {}, 10);
  CHECK(root.size() == t.vertex_count());
  CHECK(same_shape(t, root, 0, SIZE_MAX));
  Pinning pin{{3, Spin::kPlus}};
  SawNode pinned = build_saw_tree(t, 0, pin, 10);
  CHECK(pinned.children[0].children[0].pin == SawPin::kPlus);
  CHECK(pinned.children[0].children[0].children.empty());
}

TEST_CASE("SAW tree of a triangle") {
  Graph tri = complete_graph(3);
  SawNode r = build_saw_tree(tri, 0, {}, 3);
  REQUIRE(r.children.size() == 2);
  // 0-1-2 then back to 0: the closing copy of 0 sits at depth 3.
  REQUIRE(r.children[0].children.size() == 1);
  REQUIRE(r.children[1].children.size() == 1);
  REQUIRE(r.children[0].children[0].children.size() == 1);
  REQUIRE(r.children[1].children[0].children.size() == 1);
  CHECK(r.children[0].children[0].pin == SawPin::kFree);
  SawPin a = r.children[0].children[0].children[0].pin, b = r.children[1].children[0].children[0].pin;
  CHECK(a != SawPin::kFree);
  CHECK(b != SawPin::kFree);
  CHECK(a != b);
  CHECK(build_saw_tree(tri, 0, {}, 0).children.empty());
  CHECK(build_saw_tree(tri, 0, {}, 0).frontier);
  CHECK_THROWS_AS(build_saw_tree(tri, 0, Pinning{{0, Spin::kPlus}}, 2), ArgumentError);
}

TEST_CASE("ratio_series examples") {
  const double beta = 3.0;
  SawNode root;
  root.limit = 4;
  SawNode plus;
  plus.pin = SawPin::kPlus;
  plus.depth = 1;
  plus.limit = 4;
  root.children.push_back(plus);
  auto s = ratio_series(root, beta, 3);
  CHECK(s[0] == 0);
  CHECK(s[1] == doctest::Approx(beta));
  CHECK(s[2] == 0);

  Graph k2 = complete_graph(2);
  SawNode t = build_saw_tree(k2, 0, {}, 2);
  auto r = ratio_series(t, beta, 2);
  CHECK(r[0] == 0);
  CHECK(r[1] == doctest::Approx(1 / beta));
  CHECK(r[2] == doctest::Approx(1 - 1 / (beta * beta)));

  SawNode leaf;
  leaf.frontier = true;
  for (std::size_t k : {0u, 1u, 5u}) CHECK(max_coeff_diff(ratio_series(leaf, beta, k), TruncatedSeries<double>(k)) == 0);
  CHECK_THROWS_AS(ratio_series(t, beta, 3), ArgumentError);
}

TEST_CASE("property: exactness at full depth") {
  // All pin sets for n <= 5, three random pin sets per graph and root above.
  Rng rng(5);
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const Graph& g : all_graphs(n)) {
      for (VertexId root = 0; root < n; ++root) {
        std::vector<Pinning> pins;
        if (n <= 5) {
          std::size_t total = 1;
          for (std::size_t i = 1; i < n; ++i) total *= 3;
          for (std::size_t code = 0; code < total; ++code) {
            Pinning p;
            std::size_t c = code;
            for (VertexId v = 0; v < n; ++v) {
              if (v == root) continue;
              if (c % 3 == 1) p.set(v, Spin::kPlus);
              if (c % 3 == 2) p.set(v, Spin::kMinus);
              c /= 3;
            }
            pins.push_back(p);
          }
        } else {
          for (int i = 0; i < 3; ++i) pins.push_back(random_pinning(n, root, rng));
        }
        for (const auto& pin : pins) {
          SawNode t = build_saw_tree(g, root, pin, n + 1);
          for (double lam : {0.2, 0.5}) {
            Complex want = exact_marginal_ratio(g, IsingParams::uniform(g, 2.5, lam), root, pin);
            Complex got = ratio_value(t, 2.5, lam);
            CHECK(std::abs(got - want) <= 1e-10 * std::max(1.0, std::abs(want)));
          }
        }
      }
    }
  }
}

TEST_CASE("property: coefficient stability across build depths") {
  Rng rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + uniform_index(rng, 9);
    Graph g = random_bounded_degree_graph(n, 3, rng, false);
    VertexId root = uniform_index(rng, n);
    Pinning pin = random_pinning(n, root, rng);
    std::size_t k = 1 + uniform_index(rng, 8);
    auto a = ratio_series(build_saw_tree(g, root, pin, k), 2.0, k);
    auto b = ratio_series(build_saw_tree(g, root, pin, k + 5), 2.0, k);
    CHECK(max_coeff_diff(a, b) <= 1e-12);
  }
}

TEST_CASE("series match exact Taylor coefficients of the marginal ratio") {
  Rng rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    std::size_t n = 2 + uniform_index(rng, 6);
    Graph g = random_graph(n, 0.5, rng);
    VertexId root = uniform_index(rng, n);
    Pinning pin = random_pinning(n, root, rng);
    const std::size_t k = 8;
    auto want = oracle::marginal_ratio_taylor(g, Rational(3, 2), root, pin, k);
    auto got = ratio_series(build_saw_tree(g, root, pin, k), 1.5, k);
    for (std::size_t i = 0; i <= k; ++i) CHECK(got[i] == doctest::Approx(want[i].get_d()).epsilon(1e-10));
  }
}

TEST_CASE("lazy evaluator matches the materialized tree, with and without memo") {
  Rng rng(77);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + uniform_index(rng, 9);
    Graph g = random_bounded_degree_graph(n, 4, rng, false);
    VertexId root = uniform_index(rng, n);
    Pinning pin = random_pinning(n, root, rng);
    std::size_t k = 1 + uniform_index(rng, 9);
    auto ref = ratio_series(build_saw_tree(g, root, pin, k), 2.0, k);
    SawOptions memo, plain;
    plain.memoize = false;
    memo.memo_min_bound = 1;
    SawSeriesEvaluator<double> a(g, pin, 2.0, plain), b(g, pin, 2.0, memo);
    CHECK(max_coeff_diff(a.ratio(root, k), ref) <= 1e-12);
    CHECK(max_coeff_diff(b.ratio(root, k), ref) <= 1e-12);
    CHECK(b.nodes_visited() <= a.nodes_visited());
  }
}

TEST_CASE("no division error for valid inputs") {
  Rng rng(31);
  for (int trial = 0; trial < 30; ++trial) {
    Graph g = random_bounded_degree_graph(9, 4, rng, false);
    SawSeriesEvaluator<double> ev(g, {}, 1.0 + 4 * uniform01(rng));
    CHECK_NOTHROW(ev.ratio(uniform_index(rng, 9), 10));
  }
}
