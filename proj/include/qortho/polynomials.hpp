#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "qortho/qseries.hpp"

namespace qortho {

namespace detail {

// Accuracy target for the cancellation guard on finite sums (relative).
inline constexpr double kPolyRelTarget = 1e-13;

template <class T>
SeriesValue<T> big_q_laguerre_series(long n, const T& x, const T& A, const T& B, const T& q, const Truncation& t) {
  return phi_3_2_detail<T>(num::powi(q, -n), T(0), x, A * q, B * q, q, q, t);
}

// 2phi1 form of P_n with the factor (Aq/x;q)_k (x/B)^k expanded as a product,
// so x = 0 needs no special case. Orientation: x >= 0 uses (a, b), x < 0 uses
// (b, a); at the spectral points aq^{j+1} / bq^{j+1} the sum stops at k = j.
template <class T>
ScaledValue<T> two_phi_one_scaled(long n, const T& x, T A, T B, const T& q, T* condition) {
  if (x < 0) std::swap(A, B);
  std::vector<ScaledValue<T>> terms;
  terms.reserve(static_cast<std::size_t>(n) + 1);
  ScaledValue<T> term = ScaledValue<T>::one();
  terms.push_back(term);
  T Aqk = A * q;
  T qk(1);
  const T xtol = T(kTerminationTol) * num::abs(x);
  for (long k = 0; k < n; ++k) {
    T f = x - Aqk;
    if (x != 0 && num::abs(f) <= xtol) break;
    T ratio = (1 - num::powi(q, k - n)) * f / ((1 - Aqk) * (1 - qk * q) * B);
    term *= ratio;
    terms.push_back(term);
    Aqk *= q;
    qk *= q;
  }
  T cond(1);
  ScaledValue<T> sum = scaled_sum(terms, &cond);
  ScaledValue<T> pref = ScaledValue<T>::one();
  for (long i = 0; i < n; ++i) pref *= (1 - num::powi(q, i - n) / B);
  if (condition) *condition = cond * T(static_cast<double>(terms.size() + 1));
  return sum / pref;
}

template <class R>
ScaledValue<R> two_phi_one_escalated(long n, const R& x, const R& A, const R& B, const R& q) {
  R cond(1);
  ScaledValue<R> v = two_phi_one_scaled<R>(n, x, A, B, q, &cond);
  if (cond * num::eps<R>() <= R(kPolyRelTarget)) return v;
  using W = typename wider<R>::type;
  if constexpr (std::is_void_v<W>) {
    return v;
  } else {
    return two_phi_one_escalated<W>(n, num::cast<W>(x), num::cast<W>(A), num::cast<W>(B), num::cast<W>(q))
        .template as<R>();
  }
}

}  // namespace detail

// P_n(x; A, B; q) from the terminating 3phi2 definition without domain checks.
template <class R>
R big_q_laguerre_raw(long n, const R& x, const R& A, const R& B, const R& q, const Truncation& t = {}) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (n == 0) return R(1);
  auto eval = [&]<class T>(std::type_identity<T>) {
    return detail::big_q_laguerre_series<T>(n, num::cast<T>(x), num::cast<T>(A), num::cast<T>(B), num::cast<T>(q),
                                            t);
  };
  return evaluate_with_escalation<R>(eval, t.rel_tol, t.abs_tol);
}

template <class R>
R big_q_laguerre(long n, const R& x, const BasicQParams<R>& p, const Truncation& t = {}) {
  return big_q_laguerre_raw<R>(n, x, p.a, p.b, p.q, t);
}

// P_n via the 2phi1 form, in scaled representation (no overflow for large n).
template <class R>
ScaledValue<R> big_q_laguerre_scaled(long n, const R& x, const BasicQParams<R>& p) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  return detail::two_phi_one_escalated<R>(n, x, p.a, p.b, p.q);
}

template <class R>
R big_q_laguerre_two_phi_one(long n, const R& x, const BasicQParams<R>& p) {
  return big_q_laguerre_scaled<R>(n, x, p).value();
}

// P_0(x) .. P_{n_max}(x) by upward three-term recurrence.
template <class R>
std::vector<R> big_q_laguerre_recurrence(long n_max, const R& x, const BasicQParams<R>& p) {
  if (n_max < 0) throw ParameterError("degree must be nonnegative");
  const R& q = p.q;
  const R& a = p.a;
  const R& b = p.b;
  std::vector<R> out(static_cast<std::size_t>(n_max) + 1);
  out[0] = 1;
  R qn1 = q;  // q^{n+1}
  R qn(1);    // q^n
  for (long n = 0; n < n_max; ++n) {
    R d = -a * b * qn1 * qn * (1 + q) + qn1 * (a + a * b + b);
    R next = (x - d) * out[n];
    if (n > 0) next += a * b * qn1 * (1 - qn) * out[n - 1];
    out[n + 1] = next / ((1 - a * qn1) * (1 - b * qn1));
    qn = qn1;
    qn1 *= q;
  }
  return out;
}

// P_0 .. P_{n_max} at a spectral point from the Taylor coefficients (in t) of
// the closed-form generating function.
template <class R>
std::vector<R> big_q_laguerre_generating(long n_max, const R& x, const BasicQParams<R>& p) {
  if (n_max < 0) throw ParameterError("degree must be nonnegative");
  const R& q = p.q;
  R A = p.a, B = p.b;
  std::optional<long> j;
  if (x > 0) j = terminating_index<R>(A * q / x, q);
  if (!j && x < 0) {
    std::swap(A, B);
    j = terminating_index<R>(A * q / x, q);
  }
  if (!j) throw ParameterError("generating-function route requires a spectral point");
  const std::size_t N = static_cast<std::size_t>(n_max) + 1;

  std::vector<R> E(N);
  E[0] = 1;
  for (std::size_t m = 1; m < N; ++m) {
    R qm1 = num::powi(q, static_cast<long>(m) - 1);
    E[m] = E[m - 1] * (1 - A * qm1 * q) / (1 - qm1 * q) * (-B * q);
  }
  std::vector<R> S(N, R(0)), Q(N, R(0)), next(N);
  S[0] = 1;
  Q[0] = 1;
  for (long i = 0; i < *j; ++i) {
    R qi = num::powi(q, i);
    R gamma = (x - A * qi * q) / (qi * (1 - qi * q));
    R u = B / qi;
    next[0] = 0;
    for (std::size_t d = 1; d < N; ++d) next[d] = gamma * Q[d - 1] - u * next[d - 1];
    Q.swap(next);
    for (std::size_t d = 0; d < N; ++d) S[d] += Q[d];
  }
  std::vector<R> out(N);
  R pq(1), paq(1), pbq(1);
  for (std::size_t n = 0; n < N; ++n) {
    CompensatedSum<R> g;
    for (std::size_t m = 0; m <= n; ++m) g.add(E[m] * S[n - m]);
    long nn = static_cast<long>(n);
    if (n > 0) {
      R qn = num::powi(q, nn);
      pq *= (1 - qn);
      paq *= (1 - p.a * qn);
      pbq *= (1 - p.b * qn);
    }
    out[n] = g.value() * pq * num::powi(q, nn * (nn - 1) / 2) / (paq * pbq);
  }
  return out;
}

// M_n(q^{-m}; bparam, c; q) = 2phi1(q^{-n}, q^{-m}; bparam q; q, -q^{n+1}/c).
template <class R>
R q_meixner(long n, long m, const R& bparam, const R& c, const R& q, const Truncation& t = {}) {
  if (n < 0 || m < 0) throw ParameterError("indices must be nonnegative");
  if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
  if (n == 0 || m == 0) return R(1);
  auto eval = [&]<class T>(std::type_identity<T>) {
    T qq = num::cast<T>(q);
    return phi_2_1_detail<T>(num::powi(qq, -n), num::powi(qq, -m), num::cast<T>(bparam) * qq, qq,
                             -num::powi(qq, n + 1) / num::cast<T>(c), t);
  };
  return evaluate_with_escalation<R>(eval, t.rel_tol, t.abs_tol);
}

namespace detail {

template <class T>
ScaledValue<T> q_meixner_scaled_impl(long n, long m, const T& bparam, const T& c, const T& q, T* condition) {
  const long N = std::min(n, m);
  if (auto j = terminating_index<T>(bparam * q, q); j && *j < N)
    throw ZeroDenominatorError("q_meixner: denominator factor vanishes before termination");
  const T z = -num::powi(q, n + 1) / c;
  std::vector<ScaledValue<T>> terms;
  ScaledValue<T> term = ScaledValue<T>::one();
  terms.push_back(term);
  T qk(1);
  for (long k = 0; k < N; ++k) {
    term *= (1 - num::powi(q, k - n)) * (1 - num::powi(q, k - m)) * z / ((1 - bparam * qk * q) * (1 - qk * q));
    terms.push_back(term);
    qk *= q;
  }
  T cond(1);
  ScaledValue<T> s = scaled_sum(terms, &cond);
  if (condition) *condition = cond * T(static_cast<double>(terms.size() + 1));
  return s;
}

template <class R>
ScaledValue<R> q_meixner_escalated(long n, long m, const R& bparam, const R& c, const R& q) {
  R cond(1);
  ScaledValue<R> v = q_meixner_scaled_impl<R>(n, m, bparam, c, q, &cond);
  if (cond * num::eps<R>() <= R(kPolyRelTarget)) return v;
  using W = typename wider<R>::type;
  if constexpr (std::is_void_v<W>) {
    return v;
  } else {
    return q_meixner_escalated<W>(n, m, num::cast<W>(bparam), num::cast<W>(c), num::cast<W>(q)).template as<R>();
  }
}

}  // namespace detail

// M_n(q^{-m}; bparam, c; q) in scaled representation (large m).
template <class R>
ScaledValue<R> q_meixner_scaled(long n, long m, const R& bparam, const R& c, const R& q) {
  if (n < 0 || m < 0) throw ParameterError("indices must be nonnegative");
  if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
  return detail::q_meixner_escalated<R>(n, m, bparam, c, q);
}

// f_n(q^{-m}) = P_m(aq^{n+1}).
template <class R>
R dual_f(long n, long m, const BasicQParams<R>& p) {
  if (n < 0 || m < 0) throw ParameterError("indices must be nonnegative");
  return big_q_laguerre_scaled<R>(m, p.a * num::powi(p.q, n + 1), p).value();
}

// g_n(q^{-m}) = P_m(bq^{n+1}).
template <class R>
R dual_g(long n, long m, const BasicQParams<R>& p) {
  if (n < 0 || m < 0) throw ParameterError("indices must be nonnegative");
  return big_q_laguerre_scaled<R>(m, p.b * num::powi(p.q, n + 1), p).value();
}

template <class R>
struct GeneratingSum {
  R value{0};
  R last_term{0};
  R tail_estimate{0};
  std::size_t terms = 0;
  bool converged = false;
};

// Partial sum n <= n_max of sum_n (aq,bq;q)_n q^{-n(n-1)/2} / (q;q)_n P_n(x) t^n.
template <class R>
GeneratingSum<R> generating_series(const R& x, const R& tvar, const BasicQParams<R>& p, long n_max,
                                   bool strict = false, const Truncation& t = {}) {
  if (n_max < 0) throw ParameterError("n_max must be nonnegative");
  GeneratingSum<R> out;
  CompensatedSum<R> acc;
  acc.add(R(1));
  out.terms = 1;
  R prev(1), last(1);
  ScaledValue<R> coef = ScaledValue<R>::one();
  const R& q = p.q;
  for (long n = 1; n <= n_max; ++n) {
    R qn = num::powi(q, n);
    coef *= (1 - p.a * qn) * (1 - p.b * qn) * num::powi(q, 1 - n) * tvar / (1 - qn);
    R term = (coef * big_q_laguerre_scaled<R>(n, x, p)).value();
    acc.add(term);
    prev = last;
    last = term;
    ++out.terms;
  }
  out.value = acc.value();
  out.last_term = last;
  if (tvar == 0 || n_max == 0) {
    out.tail_estimate = 0;
    out.converged = true;
  } else {
    R ratio = prev == 0 ? R(0) : num::abs(last / prev);
    out.tail_estimate =
        ratio < 1 ? num::abs(last) * ratio / (1 - ratio) : R(std::numeric_limits<double>::infinity());
    out.converged = out.tail_estimate <= R(t.rel_tol) * num::max(R(1), num::abs(out.value));
  }
  if (strict && !out.converged) throw NonConvergenceError("generating_series: tail not negligible");
  return out;
}

// (-ABq^2 t;q)_inf / (-Bqt;q)_inf * 2phi1(Aq/x, 0; -1/(Bt); q, x/B), with the
// orientation (A, B) in {(a, b), (b, a)} that terminates or converges.
template <class R>
R generating_closed(const R& x, const R& tvar, const BasicQParams<R>& p, const Truncation& t = {}) {
  if (tvar == 0) return R(1);
  const R& q = p.q;
  R A = p.a, B = p.b;
  bool terminating = false;
  if (x > 0 && terminating_index<R>(A * q / x, q)) {
    terminating = true;
  } else if (x < 0 && terminating_index<R>(B * q / x, q)) {
    std::swap(A, B);
    terminating = true;
  } else if (!(num::abs(x / B) < 1)) {
    std::swap(A, B);
    if (!(num::abs(x / B) < 1)) throw DivergenceError("generating_closed: |x| exceeds both |a| and |b|");
  }
  R den = q_pochhammer_inf<R>(-B * q * tvar, q, t);
  if (den == 0) throw ZeroDenominatorError("generating_closed: (-bqt;q)_inf vanishes");
  R pref = q_pochhammer_inf<R>(-A * B * q * q * tvar, q, t) / den;

  CompensatedSum<R> acc;
  TailMonitor<R> monitor(t);
  R term(1), Aqk = A * q, qk(1);
  acc.add(term);
  const R xtol = R(kTerminationTol) * num::abs(x);
  for (std::size_t k = 0;; ++k) {
    if (k + 1 >= t.max_terms) throw NonConvergenceError("generating_closed: max_terms exceeded");
    R f = x - Aqk;
    if (terminating && num::abs(f) <= xtol) break;
    R d = B * tvar + qk;
    if (d == 0) throw ZeroDenominatorError("generating_closed: -1/(bt) = q^{-k}");
    term *= f * tvar / ((1 - qk * q) * d);
    acc.add(term);
    Aqk *= q;
    qk *= q;
    if (!terminating && monitor.push(term, acc.value(), acc.magnitude())) break;
  }
  return pref * acc.value();
}

namespace detail {

// M_n(x; b, c; 1/q) rewritten in base q:
// sum_k (q^{-n};q)_k / ((q/b;q)_k (q;q)_k) prod_{i<k}(x - q^i) (-q/(bc))^k.
template <class T>
SeriesValue<T> q_inverse_meixner_lhs(long n, const T& x, const T& b, const T& c, const T& q) {
  SeriesValue<T> out;
  CompensatedSum<T> acc;
  T term(1), qk(1);
  acc.add(term);
  for (long k = 0; k < n; ++k) {
    T den = 1 - q * qk / b;
    if (den == 0) throw ZeroDenominatorError("q_inverse_meixner_relation: (q/b;q)_k vanishes");
    term *= (1 - num::powi(q, k - n)) * (x - qk) * (-q / (b * c)) / (den * (1 - qk * q));
    acc.add(term);
    qk *= q;
  }
  out.value = acc.value();
  out.magnitude = acc.magnitude();
  out.terms = static_cast<std::size_t>(n) + 1;
  out.terminated = true;
  return out;
}

}  // namespace detail

// (LHS, RHS) of M_n(x; b, c; q^{-1}) = (-q^{-n}/c; q)_n P_n(qx/b; 1/b, -c; q).
template <class R>
std::pair<R, R> q_inverse_meixner_relation(long n, const R& x, const R& bparam, const R& c, const R& q,
                                           const Truncation& t = {}) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  if (!(q > 0 && q < 1)) throw ParameterError("q must lie in (0,1)");
  if (bparam == 0 || c == 0) throw ParameterError("b and c must be nonzero");
  auto eval = [&]<class T>(std::type_identity<T>) {
    return detail::q_inverse_meixner_lhs<T>(n, num::cast<T>(x), num::cast<T>(bparam), num::cast<T>(c),
                                            num::cast<T>(q));
  };
  R lhs = evaluate_with_escalation<R>(eval, t.rel_tol, t.abs_tol);
  R pref = q_pochhammer<R>(-num::powi(q, -n) / c, q, n);
  R rhs = pref * big_q_laguerre_raw<R>(n, q * x / bparam, 1 / bparam, -c, q, t);
  return {lhs, rhs};
}

// L_n^{(alpha)}(x) by the three-term recurrence.
template <class R>
R classical_laguerre(long n, const R& alpha, const R& x) {
  if (n < 0) throw ParameterError("degree must be nonnegative");
  R l0(1);
  if (n == 0) return l0;
  R l1 = 1 + alpha - x;
  for (long k = 1; k < n; ++k) {
    R kk(static_cast<double>(k));
    R l2 = ((2 * kk + 1 + alpha - x) * l1 - (kk + alpha) * l0) / (kk + 1);
    l0 = l1;
    l1 = l2;
  }
  return l1;
}

}  // namespace qortho
