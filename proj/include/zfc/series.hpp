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

#include <Eigen/Core>
#include <unsupported/Eigen/FFT>

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "zfc/errors.hpp"
#include "zfc/scalar.hpp"

namespace zfc {

/**
 * @brief Power series truncated to degree m, i.e. an element of S[z]/(z^{m+1}).
 *
 * Coefficients live in an Eigen column vector of length m+1.
 */
template <class Scalar>
class TruncatedSeries {
 public:
  using Coeffs = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  TruncatedSeries() : TruncatedSeries(0) {}
  explicit TruncatedSeries(std::size_t degree_bound) : c_(Coeffs::Zero(static_cast<Eigen::Index>(degree_bound + 1))) {}
  /// Missing coefficients are zero; extra ones are dropped.
  TruncatedSeries(std::size_t degree_bound, std::initializer_list<Scalar> coeffs) : TruncatedSeries(degree_bound) {
    std::size_t i = 0;
    for (const auto& a : coeffs) {
      if (i > degree_bound) break;
      c_(static_cast<Eigen::Index>(i++)) = a;
    }
  }
  explicit TruncatedSeries(Coeffs c) : c_(std::move(c)) {
    if (c_.size() == 0) throw ArgumentError("series needs at least one coefficient");
  }

  static TruncatedSeries constant(std::size_t degree_bound, const Scalar& a) {
    TruncatedSeries s(degree_bound);
    s.c_(0) = a;
    return s;
  }
  /// The series z (just 0 when the bound is 0).
  static TruncatedSeries variable(std::size_t degree_bound) {
    TruncatedSeries s(degree_bound);
    if (degree_bound >= 1) s.c_(1) = Scalar(1);
    return s;
  }

  std::size_t degree_bound() const { return static_cast<std::size_t>(c_.size()) - 1; }
  const Coeffs& coeffs() const { return c_; }
  Coeffs& coeffs() { return c_; }
  const Scalar& operator[](std::size_t i) const { return c_(static_cast<Eigen::Index>(i)); }
  Scalar& operator[](std::size_t i) { return c_(static_cast<Eigen::Index>(i)); }

  /// Drop to a smaller bound (or zero-pad to a larger one).
  TruncatedSeries truncated(std::size_t degree_bound) const {
    TruncatedSeries s(degree_bound);
    auto n = static_cast<Eigen::Index>(std::min(degree_bound, this->degree_bound()) + 1);
    s.c_.head(n) = c_.head(n);
    return s;
  }

  template <class Other>
  TruncatedSeries<Other> cast() const {
    typename TruncatedSeries<Other>::Coeffs c(c_.size());
    for (Eigen::Index i = 0; i < c_.size(); ++i) c(i) = static_cast<Other>(c_(i));
    return TruncatedSeries<Other>(std::move(c));
  }

 private:
  Coeffs c_;
};

namespace detail {
template <class S>
void check_bounds(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g, const char* op) {
  if (f.degree_bound() != g.degree_bound())
    throw ArgumentError(std::string(op) + ": mismatched degree bounds " + std::to_string(f.degree_bound()) + " vs " +
                        std::to_string(g.degree_bound()));
}
}  // namespace detail

template <class S>
TruncatedSeries<S> add(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  detail::check_bounds(f, g, "add");
  return TruncatedSeries<S>(typename TruncatedSeries<S>::Coeffs(f.coeffs() + g.coeffs()));
}

template <class S>
TruncatedSeries<S> sub(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  detail::check_bounds(f, g, "sub");
  return TruncatedSeries<S>(typename TruncatedSeries<S>::Coeffs(f.coeffs() - g.coeffs()));
}

template <class S>
TruncatedSeries<S> scale(const TruncatedSeries<S>& f, const S& a) {
  return TruncatedSeries<S>(typename TruncatedSeries<S>::Coeffs(f.coeffs() * a));
}

/// f + a, a a constant.
template <class S>
TruncatedSeries<S> add_constant(TruncatedSeries<S> f, const S& a) {
  f[0] += a;
  return f;
}

/// Schoolbook Cauchy product mod z^{m+1}.
template <class S>
TruncatedSeries<S> mul(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  detail::check_bounds(f, g, "mul");
  const std::size_t m = f.degree_bound();
  TruncatedSeries<S> h(m);
  for (std::size_t i = 0; i <= m; ++i) {
    if (f[i] == S(0)) continue;
    for (std::size_t j = 0; i + j <= m; ++j) h[i + j] += f[i] * g[j];
  }
  return h;
}

/// FFT product for double and complex<double> coefficients.
template <class S>
TruncatedSeries<S> mul_transform(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  static_assert(std::is_same_v<S, double> || std::is_same_v<S, std::complex<double>>,
                "transform product needs double precision coefficients");
  detail::check_bounds(f, g, "mul_transform");
  const std::size_t m = f.degree_bound();
  std::size_t n = 1;
  while (n < 2 * (m + 1)) n <<= 1;
  std::vector<std::complex<double>> a(n), b(n), fa, fb, prod(n);
  for (std::size_t i = 0; i <= m; ++i) {
    a[i] = f[i];
    b[i] = g[i];
  }
  Eigen::FFT<double> fft;
  fft.fwd(fa, a);
  fft.fwd(fb, b);
  for (std::size_t i = 0; i < n; ++i) fa[i] *= fb[i];
  fft.inv(prod, fa);
  TruncatedSeries<S> h(m);
  for (std::size_t i = 0; i <= m; ++i) {
    if constexpr (std::is_same_v<S, double>) h[i] = prod[i].real();
    else h[i] = prod[i];
  }
  return h;
}

enum class DivisionMethod { kAuto, kNewton, kSubstitution };

/// Divisions whose divisor has |g(0)| at or below this are refused.
inline constexpr double kDivisionThreshold = 1e-14;

namespace detail {

template <class S>
TruncatedSeries<S> div_substitution(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  const std::size_t m = f.degree_bound();
  TruncatedSeries<S> h(m);
  const S inv0 = S(1) / g[0];
  for (std::size_t k = 0; k <= m; ++k) {
    S acc = f[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= g[j] * h[k - j];
    h[k] = acc * inv0;
  }
  return h;
}

// Reciprocal by y <- y(2 - g y), doubling the number of correct terms each pass.
template <class S>
TruncatedSeries<S> reciprocal_newton(const TruncatedSeries<S>& g) {
  const std::size_t m = g.degree_bound();
  TruncatedSeries<S> y = TruncatedSeries<S>::constant(0, S(1) / g[0]);
  std::size_t have = 1;
  while (have < m + 1) {
    std::size_t next = std::min(2 * have, m + 1);
    auto yb = y.truncated(next - 1);
    auto e = mul(g.truncated(next - 1), yb);
    e = scale(e, S(-1));
    e[0] += S(2);
    y = mul(yb, e);
    have = next;
  }
  return y;
}

}  // namespace detail

/**
 * @brief h with h*g = f mod z^{m+1}.
 *
 * Newton iteration on 1/g from bound 8 upward, forward substitution below.
 * @throws DivisionError when |g(0)| <= threshold; `name` labels the divisor.
 */
template <class S>
TruncatedSeries<S> div(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g, std::string_view name = "divisor",
                       DivisionMethod method = DivisionMethod::kAuto, double threshold = kDivisionThreshold) {
  detail::check_bounds(f, g, "div");
  using std::abs;
  if (!(to_double(abs(g[0])) > threshold))
    throw DivisionError("series division: " + std::string(name) + " has vanishing constant term");
  if (method == DivisionMethod::kAuto)
    method = f.degree_bound() < 8 ? DivisionMethod::kSubstitution : DivisionMethod::kNewton;
  if (method == DivisionMethod::kSubstitution) return detail::div_substitution(f, g);
  return mul(f, detail::reciprocal_newton(g));
}

/// Horner evaluation at z0; coefficients are promoted to the point's type.
template <class S, class Point>
Point eval(const TruncatedSeries<S>& f, const Point& z0) {
  Point acc(0);
  for (std::size_t i = f.degree_bound() + 1; i-- > 0;) {
    if constexpr (std::is_same_v<Point, std::complex<double>> && !std::is_same_v<S, std::complex<double>>)
      acc = acc * z0 + to_complex(f[i]);
    else
      acc = acc * z0 + Point(f[i]);
  }
  return acc;
}

template <class S>
TruncatedSeries<S> operator+(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) { return add(f, g); }
template <class S>
TruncatedSeries<S> operator-(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) { return sub(f, g); }
template <class S>
TruncatedSeries<S> operator*(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) { return mul(f, g); }
template <class S>
TruncatedSeries<S> operator/(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) { return div(f, g); }

/// Largest coefficient magnitude of f - g.
template <class S>
double max_coeff_diff(const TruncatedSeries<S>& f, const TruncatedSeries<S>& g) {
  detail::check_bounds(f, g, "max_coeff_diff");
  double worst = 0;
  using std::abs;
  for (std::size_t i = 0; i <= f.degree_bound(); ++i) worst = std::max(worst, to_double(abs(f[i] - g[i])));
  return worst;
}

}  // namespace zfc
