#include "zfc/rational.hpp"

#include <sstream>

#include "zfc/errors.hpp"

namespace zfc {

Rational parse_rational(const std::string& text) {
  std::string s = text;
  if (s.empty()) throw ArgumentError("empty rational literal");
  try {
    auto dot = s.find('.');
    auto exp = s.find_first_of("eE");
    if (dot == std::string::npos && exp == std::string::npos) {
      Rational r(s);
      r.canonicalize();
      return r;
    }
    // Decimal literal: mantissa digits over a power of ten.
    long e10 = 0;
    if (exp != std::string::npos) {
      e10 = std::stol(s.substr(exp + 1));
      s = s.substr(0, exp);
    }
    if (dot != std::string::npos && dot < s.size()) {
      e10 -= static_cast<long>(s.size() - dot - 1);
      s.erase(dot, 1);
    }
    mpz_class mant(s);
    mpz_class p10;
    mpz_ui_pow_ui(p10.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
    Rational r = e10 < 0 ? Rational(mant, p10) : Rational(mant * p10);
    r.canonicalize();
    return r;
  } catch (const std::invalid_argument&) {
    throw ArgumentError("bad rational literal: " + text);
  }
}

RationalPoly RationalPoly::monomial(std::size_t degree, const Rational& a) {
  std::vector<Rational> c(degree + 1);
  c[degree] = a;
  return RationalPoly(std::move(c));
}

std::optional<std::size_t> RationalPoly::order() const {
  for (std::size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return i;
  return std::nullopt;
}

void RationalPoly::add_to(std::size_t i, const Rational& a) {
  if (c_.size() <= i) c_.resize(i + 1);
  c_[i] += a;
  trim();
}

Rational RationalPoly::eval(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double RationalPoly::eval(double x) const {
  double acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + it->get_d();
  return acc;
}

RationalPoly RationalPoly::shifted(const Rational& a) const {
  // Horner in polynomial arithmetic: ((c_n)(z+a) + c_{n-1})(z+a) + ...
  RationalPoly lin({a, 1});
  RationalPoly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * lin;
    acc += RationalPoly::constant(*it);
  }
  return acc;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (c_.size() < o.c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& a) {
  for (auto& x : c_) x *= a;
  trim();
  return *this;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return RationalPoly(std::move(c));
}

std::string RationalPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!first) os << (c_[i] < 0 ? " - " : " + ");
    else if (c_[i] < 0) os << "-";
    first = false;
    Rational m = abs(c_[i]);
    if (i == 0 || m != 1) os << m.get_str();
    if (i > 0) os << (i == 0 || m != 1 ? "*" : "") << var << (i > 1 ? "^" + std::to_string(i) : "");
  }
  return os.str();
}

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

}  // namespace zfc
