#include "qortho/orthogonality.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <type_traits>

#include "qortho/polynomials.hpp"

namespace qortho {

namespace {

template <class R>
struct SumResult {
  R value{0};
  R tail{0};
  R magnitude{0};
  std::size_t terms = 0;
  bool certified = false;
};

// Sums term(0), term(1), ... until the tail monitor certifies the remainder.
// Running out of max_terms leaves certified = false (reported as inconclusive).
template <class R, class Term>
SumResult<R> certified_sum(Term&& term, const Truncation& t, const R& scale) {
  CompensatedSum<R> acc;
  TailMonitor<R> monitor(t, scale);
  SumResult<R> out;
  for (std::size_t k = 0; k < t.max_terms; ++k) {
    R x = term(k);
    acc.add(x);
    out.terms = k + 1;
    if (monitor.push(x, acc.value(), acc.magnitude())) {
      out.certified = true;
      break;
    }
  }
  out.value = acc.value();
  out.magnitude = acc.magnitude();
  out.tail = monitor.tail();
  return out;
}

template <class R>
double d(const R& x) {
  return static_cast<double>(x);
}

template <class R>
VerificationReport start(const char* id, const QParams& p, long i, long j, double tol) {
  VerificationReport r;
  r.identity_id = id;
  r.params = p;
  r.i = i;
  r.j = j;
  r.tolerance = tol;
  r.precision = precision_name<R>();
  return r;
}

// Fills lhs/rhs (normalized by scale) and the diagnostics, then finalizes.
template <class R>
void complete(VerificationReport& r, const SumResult<R>& s, const R& rhs_raw, const R& scale, bool weights_ok) {
  r.scale = d(scale);
  r.lhs = d(s.value / scale);
  r.rhs = d(rhs_raw / scale);
  r.terms_used = s.terms;
  r.tail_estimate = d(s.tail / scale);
  r.extras.emplace_back("lhs_raw", d(s.value));
  r.extras.emplace_back("rhs_raw", d(rhs_raw));
  r.extras.emplace_back("condition", d(s.value == 0 ? R(0) : s.magnitude / num::abs(s.value)));
  finalize(r, s.certified);
  if (!weights_ok) {
    r.passed = false;
    r.status = Status::Failed;
    r.note += "nonpositive weight encountered; ";
  }
}

template <class R>
R pinf(const R& x, const R& q, const Truncation& t) {
  return q_pochhammer_inf<R>(x, q, t);
}

// Norm h_m of the big q-Laguerre orthogonality.
template <class R>
R laguerre_norm(long m, const BasicQParams<R>& p, const Truncation& t) {
  const R &q = p.q, &a = p.a, &b = p.b;
  R h0 = pinf(q, q, t) * pinf(b / a, q, t) * pinf(a * q / b, q, t) / (pinf(a * q, q, t) * pinf(b * q, q, t));
  R mm(static_cast<double>(m));
  return h0 * q_pochhammer<R>(q, q, m) / (q_pochhammer<R>(a * q, q, m) * q_pochhammer<R>(b * q, q, m)) *
         num::pow(-a * b, mm) * num::pow(q, mm * (mm + 3) / 2);
}

// The two positive spectral weights at index n, advanced incrementally.
template <class R>
class LaguerreWeights {
 public:
  LaguerreWeights(const BasicQParams<R>& p, const Truncation& t) : p_(p) {
    const R &q = p.q, &a = p.a, &b = p.b;
    wu_ = pinf(q, q, t) * pinf(a * q / b, q, t) / pinf(a * q, q, t);
    wl_ = pinf(q, q, t) * pinf(b * q / a, q, t) / pinf(b * q, q, t);
  }
  // Weights at n; must be called with n = 0, 1, 2, ...
  std::pair<R, R> at(std::size_t n) {
    const R &q = p_.q, &a = p_.a, &b = p_.b;
    R qn = num::powi(q, static_cast<long>(n));
    if (n > 0) {
      wu_ *= (1 - a * qn) / ((1 - qn) * (1 - a * qn / b));
      wl_ *= (1 - b * qn) / ((1 - qn) * (1 - b * qn / a));
    }
    return {wu_ * qn, -(b / a) * wl_ * qn};
  }

 private:
  BasicQParams<R> p_;
  R wu_{0};
  R wl_{0};
};

template <class R>
VerificationReport big_laguerre_impl(long m, long m2, const QParams& p0, const Truncation& t, double tol) {
  auto r = start<R>("big-laguerre", p0, m, m2, tol);
  auto p = p0.template cast<R>();
  R scale = num::sqrt(laguerre_norm<R>(m, p, t) * laguerre_norm<R>(m2, p, t));
  R rhs = m == m2 ? laguerre_norm<R>(m, p, t) : R(0);
  LaguerreWeights<R> w(p, t);
  bool positive = true;
  auto term = [&](std::size_t n) {
    auto [wu, wl] = w.at(n);
    positive = positive && wu > 0 && wl > 0;
    R qn1 = num::powi(p.q, static_cast<long>(n) + 1);
    R xu = p.a * qn1, xl = p.b * qn1;
    R pu = (big_q_laguerre_scaled<R>(m, xu, p) * big_q_laguerre_scaled<R>(m2, xu, p)).value();
    R pl = (big_q_laguerre_scaled<R>(m, xl, p) * big_q_laguerre_scaled<R>(m2, xl, p)).value();
    return wu * pu + wl * pl;
  };
  auto s = certified_sum<R>(term, t, scale);
  complete(r, s, rhs, scale, positive);
  return r;
}

template <class R>
VerificationReport sears_impl(const QParams& p0, const Truncation& t, double tol) {
  auto r = start<R>("sears", p0, 0, 0, tol);
  auto p = p0.template cast<R>();
  const R &q = p.q, &a = p.a, &b = p.b;
  R rhs = laguerre_norm<R>(0, p, t);
  LaguerreWeights<R> w(p, t);
  bool positive = true;
  CompensatedSum<R> upper, lower;
  auto term = [&](std::size_t n) {
    auto [wu, wl] = w.at(n);
    positive = positive && wu > 0 && wl > 0;
    upper.add(wu);
    lower.add(wl);
    return wu + wl;
  };
  auto s = certified_sum<R>(term, t, rhs);
  R form37 = pinf(a * q / b, q, t) * pinf(q, q, t) / pinf(a * q, q, t) * phi_2_1<R>(a * q, R(0), a * q / b, q, q, t) -
             (b / a) * pinf(b * q / a, q, t) * pinf(q, q, t) / pinf(b * q, q, t) *
                 phi_2_1<R>(b * q, R(0), b * q / a, q, q, t);
  complete(r, s, rhs, rhs, true);
  r.extras.emplace_back("form_2phi1", d(form37 / rhs));
  r.extras.emplace_back("upper_sum", d(upper.value()));
  r.extras.emplace_back("lower_sum", d(lower.value()));
  finalize_with_residual(r, std::max(r.residual, d(num::abs(form37 - rhs) / rhs)), s.certified);
  if (!(positive && upper.value() > 0 && lower.value() > 0)) {
    r.passed = false;
    r.status = Status::Failed;
    r.note += "nonpositive weight encountered; ";
  }
  return r;
}

// c_n^2 a_m(lambda_n) a_m'(lambda_n) summed over both spectral branches.
template <class R>
VerificationReport rows_impl(long m, long m2, const QParams& p0, const Truncation& t, double tol) {
  auto r = start<R>("unitarity-rows", p0, m, m2, tol);
  auto p = p0.template cast<R>();
  long top = std::max(m, m2);
  auto term = [&](std::size_t n) {
    long k = static_cast<long>(n);
    R qn1 = num::powi(p.q, k + 1);
    R cu = normalization_c<R>(k, p, t), cl = normalization_cprime<R>(k, p, t);
    auto au = eigen_coefficients<R>(p.a * qn1, p, top).scaled;
    auto al = eigen_coefficients<R>(p.b * qn1, p, top).scaled;
    return cu * cu * (au[m] * au[m2]).value() + cl * cl * (al[m] * al[m2]).value();
  };
  auto s = certified_sum<R>(term, t, R(1));
  complete(r, s, R(m == m2 ? 1 : 0), R(1), true);
  return r;
}

// c_i c_j sum_m a_m(lambda_i) a_m(lambda_j), i, j over Z.
template <class R>
VerificationReport columns_impl(long i, long j, const QParams& p0, const Truncation& t, double tol) {
  auto r = start<R>("unitarity-columns", p0, i, j, tol);
  auto p = p0.template cast<R>();
  using Family = typename CoefficientStream<R>::Family;
  CoefficientStream<R> si(spectral_point_z<R>(i, p), p, Family::Eigen);
  CoefficientStream<R> sj(spectral_point_z<R>(j, p), p, Family::Eigen);
  R cc = normalization_z<R>(i, p, t) * normalization_z<R>(j, p, t);
  auto term = [&](std::size_t) { return cc * (si.next() * sj.next()).value(); };
  auto s = certified_sum<R>(term, t, R(1));
  complete(r, s, R(i == j ? 1 : 0), R(1), true);
  return r;
}

template <class R>
VerificationReport dual_impl(DualKind kind, long n, long n2, const QParams& p0, const Truncation& t, double tol) {
  const char* id = kind == DualKind::FF ? "dual-ff" : kind == DualKind::GG ? "dual-gg" : "dual-fg";
  auto r = start<R>(id, p0, n, n2, tol);
  auto p = p0.template cast<R>();
  R qn = num::powi(p.q, n + 1), qn2 = num::powi(p.q, n2 + 1);
  R x1 = kind == DualKind::GG ? p.b * qn : p.a * qn;
  R x2 = kind == DualKind::FF ? p.a * qn2 : p.b * qn2;
  R c1 = kind == DualKind::GG ? normalization_cprime<R>(n, p, t) : normalization_c<R>(n, p, t);
  R c2 = kind == DualKind::FF ? normalization_c<R>(n2, p, t) : normalization_cprime<R>(n2, p, t);
  R scale = 1 / (c1 * c2);
  R rhs = kind != DualKind::FG && n == n2 ? 1 / (c1 * c1) : R(0);
  bool positive = true;
  auto term = [&](std::size_t k) {
    long mm = static_cast<long>(k);
    ScaledValue<R> w = weight_dual<R>(mm, p);
    positive = positive && w.sign() > 0;
    return (w * big_q_laguerre_scaled<R>(mm, x1, p) * big_q_laguerre_scaled<R>(mm, x2, p)).value();
  };
  auto s = certified_sum<R>(term, t, scale);
  complete(r, s, rhs, scale, positive);
  return r;
}

template <class R>
R meixner_norm(long n, const BasicQParams<R>& roles, const Truncation& t) {
  const R &q = roles.q, &A = roles.a, &B = roles.b;
  return pinf(B / A, q, t) / pinf(B * q, q, t) * q_pochhammer<R>(A * q / B, q, n) * q_pochhammer<R>(q, q, n) /
         q_pochhammer<R>(A * q, q, n) / num::powi(q, n);
}

template <class R>
SumResult<R> meixner_sum(long n, long n2, const BasicQParams<R>& roles, const Truncation& t, const R& scale,
                         bool* positive) {
  const R &q = roles.q, &A = roles.a, &B = roles.b;
  auto term = [&](std::size_t k) {
    long m = static_cast<long>(k);
    ScaledValue<R> w = weight_meixner<R>(m, roles);
    if (positive) *positive = *positive && w.sign() > 0;
    return (w * q_meixner_scaled<R>(n, m, A, -B / A, q) * q_meixner_scaled<R>(n2, m, A, -B / A, q)).value();
  };
  return certified_sum<R>(term, t, scale);
}

template <class R>
VerificationReport meixner_impl(bool negative_b, long n, long n2, const QParams& p0, const Truncation& t,
                                double tol) {
  auto r = start<R>(negative_b ? "meixner-negb" : "meixner", p0, n, n2, tol);
  auto p = p0.template cast<R>();
  auto roles = negative_b ? p.swapped() : p;
  R scale = num::sqrt(meixner_norm<R>(n, roles, t) * meixner_norm<R>(n2, roles, t));
  R rhs = n == n2 ? meixner_norm<R>(n, roles, t) : R(0);
  bool positive = true;
  auto s = meixner_sum<R>(n, n2, roles, t, scale, &positive);
  complete(r, s, rhs, scale, positive);
  return r;
}

template <class R>
VerificationReport eq_zero_impl(long n, long n2, const QParams& p0, const Truncation& t, double tol) {
  auto r = start<R>("eq-zero", p0, n, n2, tol);
  auto p = p0.template cast<R>();
  const R &q = p.q, &a = p.a, &b = p.b;
  R scale = 1 / (normalization_c<R>(n, p, t) * normalization_cprime<R>(n2, p, t));
  auto term = [&](std::size_t k) {
    long m = static_cast<long>(k);
    return (weight_eq_zero<R>(m, q) * q_meixner_scaled<R>(n, m, a, -b / a, q) *
            q_meixner_scaled<R>(n2, m, b, -a / b, q))
        .value();
  };
  auto s = certified_sum<R>(term, t, scale);
  complete(r, s, R(0), scale, true);
  r.note =
      "each product M_n M_n' is a polynomial in q^{-m}; the sum splits into E_q(-q^{-j}), j = 0..n+n', "
      "and every E_q(-q^{-j}) vanishes; ";
  return r;
}

template <class R>
VerificationReport biortho_impl(long m, long n, const QParams& p0, const Truncation& t, double tol) {
  auto r = start<R>("biortho", p0, m, n, tol);
  auto p = p0.template cast<R>();
  using Family = typename CoefficientStream<R>::Family;
  CoefficientStream<R> psi(spectral_point_z<R>(m, p), p, Family::Psi);
  CoefficientStream<R> phi(spectral_point_z<R>(n, p), p, Family::Phi);
  R cc = normalization_z<R>(m, p, t) * normalization_z<R>(n, p, t);
  auto term = [&](std::size_t) { return cc * (psi.next() * phi.next()).value(); };
  auto s = certified_sum<R>(term, t, R(1));
  complete(r, s, R(m == n ? 1 : 0), R(1), true);
  return r;
}

// Runs fn at the requested precision; a double run that does not pass is
// repeated in extended precision when auto_extend is set.
template <class Fn>
VerificationReport dispatch(const VerifyOptions& o, Fn&& fn) {
  if (o.precision == Precision::Extended) return fn(std::type_identity<Extended>{});
  VerificationReport r;
  try {
    r = fn(std::type_identity<double>{});
  } catch (const SeriesError&) {
    if (!o.auto_extend) throw;
    r.status = Status::Failed;
  }
  if (r.status == Status::Passed || !o.auto_extend) return r;
  VerificationReport x = fn(std::type_identity<Extended>{});
  x.note += "retried in extended precision; ";
  return x;
}

void check_index(long n, const char* what) {
  if (n < 0) throw ParameterError(std::string(what) + " must be nonnegative");
}

}  // namespace

VerificationReport verify_big_laguerre_orthogonality(long m, long m2, const QParams& p, const Truncation& t,
                                                     const VerifyOptions& o) {
  check_index(m, "m");
  check_index(m2, "m'");
  return dispatch(o, [&]<class R>(std::type_identity<R>) { return big_laguerre_impl<R>(m, m2, p, t, o.tolerance); });
}

VerificationReport verify_identity_3637(const QParams& p, const Truncation& t, const VerifyOptions& o) {
  return dispatch(o, [&]<class R>(std::type_identity<R>) { return sears_impl<R>(p, t, o.tolerance); });
}

VerificationReport verify_unitarity(RowCol rc, long i, long j, const QParams& p, const Truncation& t,
                                    const VerifyOptions& o) {
  if (rc == RowCol::Rows) {
    check_index(i, "m");
    check_index(j, "m'");
    return dispatch(o, [&]<class R>(std::type_identity<R>) { return rows_impl<R>(i, j, p, t, o.tolerance); });
  }
  return dispatch(o, [&]<class R>(std::type_identity<R>) { return columns_impl<R>(i, j, p, t, o.tolerance); });
}

VerificationReport verify_dual_orthogonality(DualKind kind, long n, long n2, const QParams& p, const Truncation& t,
                                             const VerifyOptions& o) {
  check_index(n, "n");
  check_index(n2, "n'");
  return dispatch(o, [&]<class R>(std::type_identity<R>) { return dual_impl<R>(kind, n, n2, p, t, o.tolerance); });
}

VerificationReport verify_meixner_orthogonality(long n, long n2, const QParams& p, const Truncation& t,
                                                const VerifyOptions& o) {
  check_index(n, "n");
  check_index(n2, "n'");
  return dispatch(o,
                  [&]<class R>(std::type_identity<R>) { return meixner_impl<R>(false, n, n2, p, t, o.tolerance); });
}

VerificationReport verify_negative_b_meixner_orthogonality(long n, long n2, const QParams& p, const Truncation& t,
                                                           const VerifyOptions& o) {
  check_index(n, "n");
  check_index(n2, "n'");
  return dispatch(o,
                  [&]<class R>(std::type_identity<R>) { return meixner_impl<R>(true, n, n2, p, t, o.tolerance); });
}

VerificationReport verify_Eq_zero_identity(long n, long n2, const QParams& p, const Truncation& t,
                                           const VerifyOptions& o) {
  check_index(n, "n");
  check_index(n2, "n'");
  return dispatch(o, [&]<class R>(std::type_identity<R>) { return eq_zero_impl<R>(n, n2, p, t, o.tolerance); });
}

VerificationReport verify_biorthogonality(long m, long n, const QParams& p, const Truncation& t,
                                          const VerifyOptions& o) {
  return dispatch(o, [&]<class R>(std::type_identity<R>) { return biortho_impl<R>(m, n, p, t, o.tolerance); });
}

WeightedSum meixner_weighted_sum(long n, long n2, const QParams& roles, const Truncation& t) {
  auto s = meixner_sum<double>(n, n2, roles, t, 0.0, nullptr);
  return {s.value, s.tail, s.terms, s.certified};
}

}  // namespace qortho
