#include <doctest.h>

#include <complex>

#include "zfc/generators.hpp"
#include "zfc/series.hpp"

using namespace zfc;
using C = std::complex<double>;
using CS = TruncatedSeries<C>;

namespace {

CS random_series(Rng& rng, std::size_t m) {
  CS s(m);
  for (std::size_t i = 0; i <= m; ++i) s[i] = {uniform_real(rng, -1, 1), uniform_real(rng, -1, 1)};
  return s;
}

// g = g0 (1 + sum a_j z^j) with sum |a_j| <= 1/2, so g has no zero in the
// closed unit disk and 1/g has bounded coefficients.
CS random_divisor(Rng& rng, std::size_t m) {
  C g0 = std::polar(uniform_real(rng, 0.1, 1.0), uniform_real(rng, 0, 6.283));
  CS s(m);
  std::vector<double> w(m + 1, 0);
  double total = 0;
  for (std::size_t i = 1; i <= m; ++i) total += w[i] = uniform01(rng) / static_cast<double>(i * i);
  s[0] = g0;
  for (std::size_t i = 1; i <= m; ++i)
    s[i] = g0 * std::polar(0.5 * w[i] / (total + 1e-300), uniform_real(rng, 0, 6.283));
  return s;
}

}  // namespace

TEST_CASE("add examples") {
  CHECK(add(CS(2, {1, 1}), CS(2, {1, -1}))[0] == C(2));
  CHECK(add(CS(2, {1, 1}), CS(2, {1, -1}))[1] == C(0));
  CS f(3, {1, 2, 3, 4});
  CHECK(max_coeff_diff(add(f, CS(3)), f) == 0);
  CS z2 = CS(2, {0, 0, 1}).truncated(1);
  CS s = add(z2, CS(1, {0, 1}));
  CHECK(s[0] == C(0));
  CHECK(s[1] == C(1));
  CHECK_THROWS_AS(add(CS(1), CS(2)), ArgumentError);
}

TEST_CASE("mul examples") {
  CS a = mul(CS(1, {1, 1}), CS(1, {1, 1}));
  CHECK(a[0] == C(1));
  CHECK(a[1] == C(2));
  CS f(4, {1, -2, 3, 0.5, 7});
  CHECK(max_coeff_diff(mul(f, CS::constant(4, 1)), f) == 0);
  CS b = mul(CS(2, {1, 1, 1}), CS(2, {1, -1}));
  CHECK(b[0] == C(1));
  CHECK(b[1] == C(0));
  CHECK(b[2] == C(0));
  CHECK_THROWS_AS(mul(CS(1), CS(2)), ArgumentError);
}

TEST_CASE("div examples") {
  CS g = div(CS::constant(2, 1), CS(2, {1, -1}));
  CHECK(g[0] == C(1));
  CHECK(g[1] == C(1));
  CHECK(g[2] == C(1));
  CS f(5, {2, 1, 3, 0, 1, 1});
  CHECK(max_coeff_diff(div(f, f), CS::constant(5, 1)) < 1e-14);
  CS h = div(CS(2, {1, 2, 1}), CS(2, {2, 2, 2}));
  CHECK(std::abs(h[0] - 0.5) < 1e-15);
  CHECK(std::abs(h[1] - 0.5) < 1e-15);
  CHECK(std::abs(h[2] + 0.5) < 1e-15);
  CHECK_THROWS_AS(div(f, CS(5, {0, 1})), DivisionError);
  try {
    div(f, CS(5, {0, 1}), "my-denominator");
  } catch (const DivisionError& e) {
    CHECK(std::string(e.what()).find("my-denominator") != std::string::npos);
  }
}

TEST_CASE("eval examples") {
  CHECK(eval(CS(2, {1, 1, 1}), C(0)) == C(1));
  CHECK(eval(CS(1, {1, 1}), C(0, 1)) == C(1, 1));
  CHECK(eval(CS(2, {1, 1, 1}), C(0.5)) == C(1.75));
  CHECK(eval(TruncatedSeries<double>(2, {1, 1, 1}), C(0.5)) == C(1.75));
}

TEST_CASE("property: division round trip") {
  Rng rng(2024);
  for (std::size_t m : {0u, 1u, 5u, 7u, 8u, 20u, 64u, 128u}) {
    for (int trial = 0; trial < 20; ++trial) {
      CS f = random_series(rng, m), g = random_divisor(rng, m);
      CHECK(max_coeff_diff(mul(div(f, g), g), f) <= 1e-12);
      // Newton and substitution agree.
      CHECK(max_coeff_diff(div(f, g, "g", DivisionMethod::kNewton), div(f, g, "g", DivisionMethod::kSubstitution)) <=
            1e-11);
    }
  }
}

TEST_CASE("property: mul commutative and associative") {
  Rng rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    std::size_t m = uniform_index(rng, 40);
    CS a = random_series(rng, m), b = random_series(rng, m), c = random_series(rng, m);
    CHECK(max_coeff_diff(mul(a, b), mul(b, a)) <= 1e-12);
    CHECK(max_coeff_diff(mul(mul(a, b), c), mul(a, mul(b, c))) <= 1e-12 * static_cast<double>(m + 1) * 4);
  }
}

TEST_CASE("property: truncation consistency") {
  Rng rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t m = 1 + uniform_index(rng, 60), mp = uniform_index(rng, m);
    CS a = random_series(rng, m), b = random_series(rng, m), g = random_divisor(rng, m);
    CHECK(max_coeff_diff(add(a, b).truncated(mp), add(a.truncated(mp), b.truncated(mp))) <= 1e-12);
    CHECK(max_coeff_diff(mul(a, b).truncated(mp), mul(a.truncated(mp), b.truncated(mp))) <= 1e-12);
    CHECK(max_coeff_diff(div(a, g).truncated(mp), div(a.truncated(mp), g.truncated(mp))) <= 1e-12);
  }
}

TEST_CASE("transform product agrees with schoolbook") {
  Rng rng(13);
  for (std::size_t m : {0u, 3u, 31u, 100u}) {
    CS a = random_series(rng, m), b = random_series(rng, m);
    CHECK(max_coeff_diff(mul_transform(a, b), mul(a, b)) <= 1e-12);
    auto ra = TruncatedSeries<double>(m), rb = TruncatedSeries<double>(m);
    for (std::size_t i = 0; i <= m; ++i) {
      ra[i] = a[i].real();
      rb[i] = b[i].real();
    }
    CHECK(max_coeff_diff(mul_transform(ra, rb), mul(ra, rb)) <= 1e-12);
  }
}

TEST_CASE("multiprecision scalar") {
  using M = MpReal<50>;
  TruncatedSeries<M> g(30, {M(1), M(-1)});
  auto h = div(TruncatedSeries<M>::constant(30, M(1)), g);
  for (std::size_t i = 0; i <= 30; ++i) CHECK(to_double(h[i]) == 1.0);
  TruncatedSeries<M> x(3, {M(3), M(1)});
  auto y = div(TruncatedSeries<M>::constant(3, M(1)), x);
  CHECK(to_double(abs(y[3] - M(-1) / M(81))) < 1e-40);
}
