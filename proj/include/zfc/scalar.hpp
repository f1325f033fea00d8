#pragma once

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <cmath>
#include <complex>
#include <type_traits>

namespace zfc {

namespace bmp = boost::multiprecision;

/// Fixed-precision MPFR real with `Digits10` decimal digits.
/// Precision is part of the type, so no global precision state is touched.
template <unsigned Digits10>
using MpReal = bmp::number<bmp::mpfr_float_backend<Digits10>, bmp::et_off>;

template <class T>
struct is_complex : std::false_type {};
template <class T>
struct is_complex<std::complex<T>> : std::true_type {};

template <class Scalar>
double to_double(const Scalar& x) {
  if constexpr (std::is_arithmetic_v<Scalar>) {
    return static_cast<double>(x);
  } else {
    return x.template convert_to<double>();
  }
}

template <class Scalar>
std::complex<double> to_complex(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return {to_double(x.real()), to_double(x.imag())};
  } else {
    return {to_double(x), 0.0};
  }
}

/// log2 |x| without overflow; -inf for zero.
template <class Scalar>
double log2_abs(const Scalar& x) {
  if constexpr (is_complex<Scalar>::value) {
    return std::max(log2_abs(x.real()), log2_abs(x.imag())) + 0.5;
  } else if constexpr (std::is_arithmetic_v<Scalar>) {
    return x == 0 ? -INFINITY : static_cast<double>(std::log2(std::fabs(static_cast<long double>(x))));
  } else {
    if (x == 0) return -INFINITY;
    long e = 0;
    double m = mpfr_get_d_2exp(&e, x.backend().data(), MPFR_RNDN);
    return static_cast<double>(e) + std::log2(std::fabs(m));
  }
}

/// Significand bits of a real scalar type.
template <class Scalar>
constexpr int mantissa_bits() {
  if constexpr (std::is_arithmetic_v<Scalar>) {
    return std::numeric_limits<Scalar>::digits;
  } else if constexpr (is_complex<Scalar>::value) {
    return mantissa_bits<typename Scalar::value_type>();
  } else {
    return std::numeric_limits<Scalar>::digits;
  }
}

}  // namespace zfc
