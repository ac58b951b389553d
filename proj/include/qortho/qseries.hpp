#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "qortho/errors.hpp"
#include "qortho/qparams.hpp"
#include "qortho/scalar.hpp"
#include "qortho/summation.hpp"

namespace qortho {

inline constexpr double kTerminationTol = 1e-10;

// n >= 0 with a == q^{-n} to relative tolerance 1e-10, if any.
template <class R>
std::optional<long> terminating_index(const R& a, const R& q) {
  if (!(a > 0)) return std::nullopt;
  R n = num::round(-num::log(a) / num::log(q));
  if (n < 0) return std::nullopt;
  long k = static_cast<long>(n);
  if (num::abs(a * num::powi(q, k) - 1) <= R(kTerminationTol)) return k;
  return std::nullopt;
}

template <class R>
R q_pochhammer(const R& a, const R& q, long n) {
  R r(1);
  R aq = a;
  for (long k = 0; k < n; ++k) {
    r *= (1 - aq);
    aq *= q;
  }
  return r;
}

template <class R>
R q_pochhammer_inf(const R& a, const R& q, const Truncation& t = {}) {
  if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
  if (terminating_index(a, q)) return R(0);
  R r(1);
  R f = a;
  std::size_t run = 0;
  const R bound = num::eps<R>() * (1 - q);
  for (std::size_t k = 0; k < t.max_terms; ++k) {
    r *= (1 - f);
    run = num::abs(f) * q <= bound ? run + 1 : 0;
    if (run >= t.small_run || f == 0) return r;
    f *= q;
  }
  throw NonConvergenceError("q_pochhammer_inf: max_terms exceeded");
}

template <class R>
R q_number(const R& a, const R& q) {
  return (num::pow(q, a / 2) - num::pow(q, -a / 2)) / (num::sqrt(q) - 1 / num::sqrt(q));
}

template <class R>
struct SeriesValue {
  R value{0};
  R magnitude{0};  // sum of |terms|
  std::size_t terms = 0;
  bool terminated = false;
  R tail{0};
};

// r phi s with r = s + 1 (balanced form, no extra q^{k(k-1)/2} factors).
template <class R>
SeriesValue<R> basic_series(std::span<const R> numer, std::span<const R> denom, const R& q, const R& z,
                            const Truncation& t = {}) {
  if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
  std::optional<long> stop;
  for (const R& a : numer) {
    if (auto n = terminating_index(a, q); n && (!stop || *n < *stop)) stop = n;
  }
  for (const R& b : denom) {
    if (auto j = terminating_index(b, q); j && (!stop || *j < *stop))
      throw ZeroDenominatorError("basic series: denominator factor vanishes before termination");
  }
  if (!stop && z != 0 && num::abs(z) >= 1) throw DivergenceError("basic series: nonterminating with |z| >= 1");

  SeriesValue<R> out;
  CompensatedSum<R> acc;
  TailMonitor<R> monitor(t);
  R term(1);
  R qk(1);
  acc.add(term);
  out.terms = 1;
  if (stop && *stop == 0) {
    out.value = acc.value();
    out.magnitude = acc.magnitude();
    out.terminated = true;
    return out;
  }
  if (z == 0) {
    out.value = 1;
    out.magnitude = 1;
    out.terminated = true;
    return out;
  }
  const std::size_t limit = stop ? static_cast<std::size_t>(*stop) + 1 : t.max_terms;
  for (std::size_t k = 0; k + 1 < limit || !stop; ++k) {
    if (!stop && k + 1 >= t.max_terms) throw NonConvergenceError("basic series: max_terms exceeded");
    R ratio = z;
    for (const R& a : numer) ratio *= (1 - a * qk);
    for (const R& b : denom) ratio /= (1 - b * qk);
    ratio /= (1 - qk * q);
    term *= ratio;
    qk *= q;
    acc.add(term);
    ++out.terms;
    if (!stop && monitor.push(term, acc.value(), acc.magnitude())) break;
    if (stop && k + 1 >= static_cast<std::size_t>(*stop)) break;
  }
  out.value = acc.value();
  out.magnitude = acc.magnitude();
  out.terminated = stop.has_value();
  out.tail = stop ? R(0) : monitor.tail();
  return out;
}

template <class R>
SeriesValue<R> phi_2_1_detail(const R& a, const R& b, const R& c, const R& q, const R& z, const Truncation& t = {}) {
  std::array<R, 2> n{a, b};
  std::array<R, 1> d{c};
  return basic_series<R>(n, d, q, z, t);
}

template <class R>
SeriesValue<R> phi_3_2_detail(const R& a1, const R& a2, const R& a3, const R& b1, const R& b2, const R& q,
                              const R& z, const Truncation& t = {}) {
  std::array<R, 3> n{a1, a2, a3};
  std::array<R, 2> d{b1, b2};
  return basic_series<R>(n, d, q, z, t);
}

template <class R>
R phi_2_1(const R& a, const R& b, const R& c, const R& q, const R& z, const Truncation& t = {}) {
  return phi_2_1_detail(a, b, c, q, z, t).value;
}

template <class R>
R phi_3_2(const R& a1, const R& a2, const R& a3, const R& b1, const R& b2, const R& q, const R& z,
          const Truncation& t = {}) {
  return phi_3_2_detail(a1, a2, a3, b1, b2, q, z, t).value;
}

// Rounding estimate of a summed series is below the requested accuracy.
template <class T>
bool well_conditioned(const SeriesValue<T>& v, double rel_tol, double abs_tol) {
  T err = v.magnitude * num::eps<T>() * T(static_cast<double>(v.terms + 1));
  return err <= num::max(T(0.1 * rel_tol) * num::abs(v.value), T(abs_tol));
}

// Evaluates eval(std::type_identity<T>{}) -> SeriesValue<T> at R and then at
// successively wider types until the cancellation estimate is acceptable.
template <class R, class Eval>
R evaluate_with_escalation(Eval&& eval, double rel_tol, double abs_tol) {
  auto v = eval(std::type_identity<R>{});
  if (well_conditioned(v, rel_tol, abs_tol)) return v.value;
  using W = typename wider<R>::type;
  if constexpr (std::is_void_v<W>) {
    return v.value;
  } else {
    return num::cast<R>(evaluate_with_escalation<W>(eval, rel_tol, abs_tol));
  }
}

template <class R>
SeriesValue<R> jackson_Eq_detail(const R& z, const R& q, const Truncation& t = {}) {
  if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
  SeriesValue<R> out;
  CompensatedSum<R> acc;
  TailMonitor<R> monitor(t);
  R term(1);
  R qn(1);
  acc.add(term);
  out.terms = 1;
  if (z == 0) {
    out.value = 1;
    out.magnitude = 1;
    return out;
  }
  for (std::size_t n = 0;; ++n) {
    if (n + 1 >= t.max_terms) throw NonConvergenceError("jackson_Eq: max_terms exceeded");
    term *= qn * z / (1 - qn * q);
    qn *= q;
    acc.add(term);
    ++out.terms;
    if (monitor.push(term, acc.value(), acc.magnitude())) break;
  }
  out.value = acc.value();
  out.magnitude = acc.magnitude();
  out.tail = monitor.tail();
  return out;
}

// E_q(z) = sum q^{n(n-1)/2} z^n / (q;q)_n = (-z;q)_inf.
template <class R>
R jackson_Eq(const R& z, const R& q, const Truncation& t = {}) {
  auto eval = [&]<class T>(std::type_identity<T>) {
    return jackson_Eq_detail<T>(num::cast<T>(z), num::cast<T>(q), t);
  };
  return evaluate_with_escalation<R>(eval, t.rel_tol, t.abs_tol);
}

}  // namespace qortho
