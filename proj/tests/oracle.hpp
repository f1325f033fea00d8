// Reference helpers shared by the unit tests and the acceptance suite.
#pragma once

#include <vector>

#include "zfc/exact.hpp"
#include "zfc/rational.hpp"

namespace zfc::oracle {

/// First k+1 Taylor coefficients of num/den, exactly. A common power of z
/// (from vertices pinned +) is cancelled first.
inline std::vector<Rational> taylor_quotient(const RationalPoly& num, const RationalPoly& den, std::size_t k) {
  const std::size_t s = den.order().value();
  std::vector<Rational> q(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    Rational acc = num.coeff(i + s);
    for (std::size_t j = 1; j <= i; ++j) acc -= den.coeff(j + s) * q[i - j];
    q[i] = acc / den.coeff(s);
  }
  return q;
}

/// Polynomials in the uniform field z with every lambda_v = 1.
inline RationalPoly uniform_poly(const Graph& g, const Rational& beta, const RationalEvaluation& pe = {},
                                 const Pinning& pin = {}) {
  return exact_Z_poly(g, RationalIsingParams::uniform(g, beta, Rational(1)), pe, pin);
}

/// Taylor coefficients of Z_{G-e}/Z_G in the uniform field.
inline std::vector<Rational> edge_ratio_taylor(const Graph& g, const Rational& beta, EdgeId e, std::size_t k) {
  RationalEvaluation del;
  del.edges.emplace(e, Rational(1));
  return taylor_quotient(uniform_poly(g, beta, del), uniform_poly(g, beta), k);
}

/// Taylor coefficients of R^{pin}_{G,v} in the uniform field.
inline std::vector<Rational> marginal_ratio_taylor(const Graph& g, const Rational& beta, VertexId v, const Pinning& pin,
                                                   std::size_t k) {
  return taylor_quotient(uniform_poly(g, beta, {}, pin.with(v, Spin::kPlus)),
                         uniform_poly(g, beta, {}, pin.with(v, Spin::kMinus)), k);
}

}  // namespace zfc::oracle
