#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

namespace zfc {

using Rational = mpq_class;

/// Parse "p/q", an integer or a decimal literal such as "1.25" exactly.
Rational parse_rational(const std::string& text);
/// Exact binary value of a double.
inline Rational rational_from_double(double x) { return Rational(x); }

/**
 * @brief Dense univariate polynomial with exact rational coefficients.
 *
 * Stored lowest degree first with no trailing zeros, so the zero polynomial
 * has an empty coefficient vector.
 */
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> c) : c_(c) { trim(); }
  explicit RationalPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

  static RationalPoly constant(const Rational& a) { return RationalPoly({a}); }
  static RationalPoly monomial(std::size_t degree, const Rational& a = 1);

  bool is_zero() const { return c_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  /// Index of the lowest nonzero coefficient, nullopt for zero.
  std::optional<std::size_t> order() const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  /// Adds a to the coefficient of z^i.
  void add_to(std::size_t i, const Rational& a);

  Rational eval(const Rational& x) const;
  double eval(double x) const;
  /// p(z + a), computed exactly.
  RationalPoly shifted(const Rational& a) const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& a);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& b) { return a *= b; }
  friend RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) { return a.c_ == b.c_; }

  std::string to_string(const std::string& var = "z") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

}  // namespace zfc
