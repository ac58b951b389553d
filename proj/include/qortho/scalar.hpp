#pragma once

#include <cmath>
#include <limits>
#include <type_traits>

#include <boost/math/special_functions/fpclassify.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>

namespace qortho {

using Extended = boost::multiprecision::cpp_bin_float_50;
using Wide = boost::multiprecision::cpp_bin_float_100;
using Huge = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<300>>;

// Escalation ladder used when a series is too ill-conditioned for its type.
template <class R>
struct wider {
  using type = void;
};
template <>
struct wider<double> {
  using type = Extended;
};
template <>
struct wider<Extended> {
  using type = Wide;
};
template <>
struct wider<Wide> {
  using type = Huge;
};

namespace num {

template <class R>
inline R eps() {
  return std::numeric_limits<R>::epsilon();
}
template <class R>
inline R abs(const R& x) {
  using std::abs;
  return abs(x);
}
template <class R>
inline R sqrt(const R& x) {
  using std::sqrt;
  return sqrt(x);
}
template <class R>
inline R log(const R& x) {
  using std::log;
  return log(x);
}
template <class R>
inline R exp(const R& x) {
  using std::exp;
  return exp(x);
}
template <class R>
inline R pow(const R& x, const R& y) {
  using std::pow;
  return pow(x, y);
}
template <class R>
inline R round(const R& x) {
  using std::round;
  return round(x);
}
template <class R>
inline R frexp(const R& x, int* e) {
  using std::frexp;
  return frexp(x, e);
}
template <class R>
inline R ldexp(const R& x, long e) {
  using std::ldexp;
  return ldexp(x, static_cast<int>(e));
}
template <class R>
inline bool isfinite(const R& x) {
  return (boost::math::isfinite)(x);
}
template <class R>
inline R max(const R& x, const R& y) {
  return x < y ? y : x;
}
template <class R>
inline R min(const R& x, const R& y) {
  return y < x ? y : x;
}

// q^n for integer n (negative allowed), by repeated squaring.
template <class R>
inline R powi(const R& q, long n) {
  R base = n < 0 ? R(1) / q : q;
  unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
  R result(1);
  while (k) {
    if (k & 1UL) result *= base;
    base *= base;
    k >>= 1;
  }
  return result;
}

template <class To, class From>
inline To cast(const From& x) {
  if constexpr (std::is_same_v<To, From>) {
    return x;
  } else {
    return static_cast<To>(x);
  }
}

}  // namespace num

template <class R>
inline const char* precision_name() {
  if constexpr (std::is_same_v<R, double>) return "double";
  else if constexpr (std::is_same_v<R, Extended>) return "extended";
  else if constexpr (std::is_same_v<R, Wide>) return "wide";
  else return "huge";
}

}  // namespace qortho
