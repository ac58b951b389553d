#pragma once

#include <string>

#include "qortho/errors.hpp"
#include "qortho/scalar.hpp"

namespace qortho {

inline void validate_params(double q, double a, double b) {
  if (!(q > 0.0 && q < 1.0)) throw ParameterError("q must lie in (0,1)");
  if (!(a > 0.0 && a < 1.0 / q)) throw ParameterError("a must lie in (0, 1/q)");
  if (!(b < 0.0)) throw ParameterError("b must be negative");
}

// (q, a, b) with 0<q<1, 0<a<1/q, b<0; l is defined by a = q^{2l-1}.
template <class R>
struct BasicQParams {
  R q{0.5};
  R a{0.5};
  R b{-0.7};

  static BasicQParams make(const R& q, const R& a, const R& b) {
    validate_params(static_cast<double>(q), static_cast<double>(a), static_cast<double>(b));
    return unchecked(q, a, b);
  }
  static BasicQParams from_l(const R& q, const R& l, const R& b) {
    if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
    if (!(l > 0)) throw ParameterError("l must be positive");
    return make(q, num::pow(q, 2 * l - 1), b);
  }
  static BasicQParams unchecked(const R& q, const R& a, const R& b) {
    BasicQParams p;
    p.q = q;
    p.a = a;
    p.b = b;
    return p;
  }

  R l() const { return (1 + num::log(a) / num::log(q)) / 2; }
  R alpha() const { return num::sqrt(-b) * num::pow(q, l()) * (1 - q); }
  R beta1() const { return b * (1 + q); }
  R beta2() const { return b * q + num::pow(q, 2 * l()) * (b + 1); }

  // a <-> b exchanged, without domain checks (P_n is symmetric in a, b).
  BasicQParams swapped() const { return unchecked(q, b, a); }

  template <class T>
  BasicQParams<T> cast() const {
    return BasicQParams<T>::unchecked(num::cast<T>(q), num::cast<T>(a), num::cast<T>(b));
  }
};

using QParams = BasicQParams<double>;

}  // namespace qortho
