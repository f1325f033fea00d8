#include <doctest.h>

#include "zfc/errors.hpp"
#include "zfc/exact.hpp"
#include "zfc/generators.hpp"
#include "zfc/ldc.hpp"

using namespace zfc;

namespace {

RationalIsingParams uniform_params(const Graph& g, Rational b, Rational l) {
  return RationalIsingParams::uniform(g, b, l);
}

RationalEvaluation edge_eval(std::initializer_list<std::pair<EdgeId, Rational>> xs) {
  RationalEvaluation m;
  for (const auto& [e, x] : xs) m.edges.emplace(e, x);
  return m;
}

// Brute-force Z polynomial whose configuration `target` gets weight times `factor`.
ZPolyOracle mutated_oracle(std::size_t target, Rational factor) {
  return [target, factor](const Graph& g, const RationalIsingParams& p, const RationalEvaluation& pe) {
    std::size_t n = g.vertex_count();
    std::vector<Rational> coeff(n + 1);
    for (std::size_t s = 0; s < (std::size_t{1} << n); ++s) {
      Rational w = 1;
      for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (((s >> ed.u) & 1) != ((s >> ed.v) & 1)) continue;
        auto it = pe.edges.find(e);
        w *= it == pe.edges.end() ? p.beta[e] : it->second.value();
      }
      std::size_t plus = 0;
      for (VertexId v = 0; v < n; ++v) {
        if (!((s >> v) & 1)) continue;
        ++plus;
        auto it = pe.fields.find(v);
        w *= it == pe.fields.end() ? p.lambda[v] : it->second;
      }
      if (s == target) w *= factor;
      coeff[plus] += w;
    }
    return RationalPoly(std::move(coeff));
  };
}

}  // namespace

TEST_CASE("divides examples") {
  auto a = divides(RationalPoly({0, 0, 0, 1, -1}), 3);
  CHECK(a.pass);
  CHECK(a.observed_order == 3);
  CHECK(!a.witness);

  auto b = divides(RationalPoly{}, 40);
  CHECK(b.pass);
  CHECK(b.observed_order == kInfinite);

  auto c = divides(RationalPoly({1, 1}), 1);
  CHECK(!c.pass);
  CHECK(c.observed_order == 0);
  REQUIRE(c.witness);
  CHECK(*c.witness == 1);

  CHECK(divides(RationalPoly({5}), 0).pass);
  CHECK(!divides(RationalPoly({0, Rational(-3, 7)}), kInfinite).pass);
}

TEST_CASE("report json shape") {
  auto r = divides(RationalPoly({Rational(2, 3)}), 2);
  r.lemma = "x";
  auto j = to_json(r);
  CHECK(j["required_order"] == 2);
  CHECK(j["observed_order"] == 0);
  CHECK(j["pass"] == false);
  CHECK(j["witness"] == "2/3");
  CHECK(to_json(divides({}, 1))["observed_order"] == "inf");
  CHECK(!to_json(divides({}, 1)).contains("witness"));
}

TEST_CASE("product form examples") {
  Graph g = path_graph(6);
  auto p = uniform_params(g, 2, Rational(1, 2));
  auto r = ising_product_ldc(g, p, edge_eval({{0, 3}}), edge_eval({{4, 1}}));
  // Edges {0,1} and {4,5}: nearest endpoints 1 and 4.
  CHECK(r.required_order == 4);
  CHECK(r.pass);
  CHECK(r.tight());

  auto empty = ising_product_ldc(g, p, {}, edge_eval({{4, 1}}));
  CHECK(empty.required_order == kInfinite);
  CHECK(empty.observed_order == kInfinite);
  CHECK(empty.pass);

  CHECK_THROWS_AS(ising_product_ldc(g, p, edge_eval({{1, 3}}), edge_eval({{1, 2}})), ArgumentError);
  RationalEvaluation inf;
  inf.edges.emplace(1, Extended<Rational>::infinity());
  CHECK_THROWS_AS(ising_product_ldc(g, p, inf, {}), ArgumentError);
  CHECK_THROWS_AS(ising_product_ldc(g, p, edge_eval({{1, Rational(1, 2)}}), {}), ArgumentError);
}

TEST_CASE("mutating one coefficient is caught at that index") {
  Graph g = path_graph(6);
  auto p = uniform_params(g, 3, Rational(2, 3));
  auto m1 = edge_eval({{0, 1}}), m2 = edge_eval({{4, 2}});
  RationalPoly z = exact_Z_poly(g, p), z12 = exact_Z_poly(g, p, compose(m1, m2));
  RationalPoly z1 = exact_Z_poly(g, p, m1), z2 = exact_Z_poly(g, p, m2);
  REQUIRE(product_difference(z, z12, z1, z2, 4).pass);
  for (std::size_t j = 0; j < 4; ++j) {
    RationalPoly bad = z;
    bad.add_to(j, Rational(1, 5));
    auto r = product_difference(bad, z12, z1, z2, 4);
    CHECK(!r.pass);
    CHECK(r.observed_order == j);
    REQUIRE(r.witness);
    CHECK(*r.witness == Rational(1, 5) * z12.coeff(0));
  }
}

TEST_CASE("edge form examples") {
  Graph g = path_graph(6);
  auto p = uniform_params(g, 2, Rational(1, 2));
  auto same = ising_edge_ldc(g, p, 0, 1, edge_eval({{3, 2}}), edge_eval({{3, 2}}));
  CHECK(same.observed_order == kInfinite);
  CHECK(same.pass);

  auto far = ising_edge_ldc(g, p, 0, 1, edge_eval({{4, 1}}), {});
  CHECK(far.required_order == 4);
  CHECK(far.pass);
  CHECK(far.observed_order >= 4);

  // Agreement on a shared edge with equal values does not count as a disagreement.
  auto shared = ising_edge_ldc(g, p, 0, 3, edge_eval({{1, 2}, {4, 1}}), edge_eval({{1, 2}}));
  CHECK(shared.required_order == 4);
  CHECK(shared.pass);

  CHECK_THROWS_AS(ising_edge_ldc(g, p, 0, 1, edge_eval({{0, 2}}), {}), ArgumentError);
  CHECK_THROWS_AS(ising_edge_ldc(g, p, 0, Rational(1, 2), {}, {}), ArgumentError);
}

TEST_CASE("vertex form examples") {
  Graph path = path_graph(6);
  auto p = uniform_params(path, 2, Rational(1, 2));
  auto same = ising_vertex_ldc(path, p, 0, Rational(1, 2), {3, 4}, {4, 3});
  CHECK(same.pass);
  CHECK(same.required_order == kInfinite);

  auto pinned = ising_vertex_ldc(path, p, 0, 0, {5}, {});
  CHECK(pinned.required_order == 6);
  CHECK(pinned.pass);
  CHECK(pinned.tight());

  Graph star = star_graph(4);
  auto sp = uniform_params(star, 3, Rational(1, 3));
  auto r = ising_vertex_ldc(star, sp, 0, Rational(1, 2), {1}, {2});
  CHECK(r.required_order == 2);
  CHECK(r.pass);

  CHECK_THROWS_AS(ising_vertex_ldc(path, p, 0, Rational(1, 2), {0}, {}), ArgumentError);
  CHECK_THROWS_AS(ising_vertex_ldc(path, p, 0, 1, {2}, {}), ArgumentError);
}

TEST_CASE("suites pass on all graphs up to five vertices") {
  std::vector<Graph> graphs;
  for (std::size_t n = 1; n <= 5; ++n)
    for (auto& g : all_graphs(n)) graphs.push_back(g);
  for (LdcLemma lemma : {LdcLemma::kProduct, LdcLemma::kEdge, LdcLemma::kVertex}) {
    LdcSuiteOptions opt;
    opt.instances_per_graph = 6;
    auto s = run_ldc_suite(lemma, graphs, opt);
    INFO(to_json(s).dump());
    CHECK(s.pass());
    CHECK(s.instances > 100);
    CHECK(s.tight > 0);
  }
}

TEST_CASE("suite output does not depend on thread count") {
  std::vector<Graph> graphs = all_graphs(4);
  LdcSuiteOptions one, many;
  one.threads = 1;
  many.threads = 4;
  auto a = run_ldc_suite(LdcLemma::kEdge, graphs, one);
  auto b = run_ldc_suite(LdcLemma::kEdge, graphs, many);
  CHECK(to_json(a) == to_json(b));
}

TEST_CASE("mutated configuration weight breaks some instance") {
  // Weights with many plus spins only show up at high order, so the catch for
  // them comes from disconnected graphs where the difference must vanish.
  std::vector<Graph> graphs = all_graphs(4);
  LdcSuiteOptions opt;
  opt.instances_per_graph = 12;
  opt.threads = 1;
  std::size_t clean = 0;
  for (LdcLemma lemma : {LdcLemma::kProduct, LdcLemma::kEdge, LdcLemma::kVertex})
    clean += run_ldc_suite(lemma, graphs, opt, mutated_oracle(0, 1)).failures;
  CHECK(clean == 0);
  for (std::size_t target = 0; target < 16; ++target) {
    std::size_t failures = 0;
    for (LdcLemma lemma : {LdcLemma::kProduct, LdcLemma::kEdge, LdcLemma::kVertex})
      failures += run_ldc_suite(lemma, graphs, opt, mutated_oracle(target, 2)).failures;
    INFO("target " << target);
    CHECK(failures > 0);
  }
}
