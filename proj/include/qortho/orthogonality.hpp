#pragma once

#include <cstddef>

#include "qortho/operators.hpp"
#include "qortho/report.hpp"

namespace qortho {

enum class Precision { Double, Extended };

struct VerifyOptions {
  double tolerance = 1e-8;
  Precision precision = Precision::Double;
  // Retry at extended precision when the double-precision check does not pass.
  bool auto_extend = true;
};

enum class RowCol { Rows, Columns };
enum class DualKind { FF, GG, FG };

// Weights of the scalar products on functions of q^{-m}.
// weight_dual: the space spanned by f_n, g_n; weight_meixner: the q-Meixner
// measure with roles (A, B) = (p.a, p.b) (pass p.swapped() for the b < 0 family).
template <class R>
ScaledValue<R> weight_dual(long m, const BasicQParams<R>& p) {
  const R &q = p.q, &a = p.a, &b = p.b;
  ScaledValue<R> w = ScaledValue<R>::one();
  for (long k = 1; k <= m; ++k) {
    R qk = num::powi(q, k);
    w *= (1 - a * qk) * (1 - b * qk) / ((1 - qk) * (-a * b * q * q));
    w /= num::powi(q, k - 1);
  }
  return w;
}

template <class R>
ScaledValue<R> weight_meixner(long m, const BasicQParams<R>& roles) {
  const R &q = roles.q, &A = roles.a, &B = roles.b;
  ScaledValue<R> w = ScaledValue<R>::one();
  for (long k = 1; k <= m; ++k) {
    R qk = num::powi(q, k);
    w *= (1 - A * qk) * (-B / A) * num::powi(q, k - 1) / ((1 - B * qk) * (1 - qk));
  }
  return w;
}

template <class R>
ScaledValue<R> weight_eq_zero(long m, const R& q) {
  ScaledValue<R> w = ScaledValue<R>::one();
  for (long k = 1; k <= m; ++k) w *= -num::powi(q, k - 1) / (1 - num::powi(q, k));
  return w;
}

VerificationReport verify_big_laguerre_orthogonality(long m, long m2, const QParams& p, const Truncation& t = {},
                                                     const VerifyOptions& o = {});
VerificationReport verify_identity_3637(const QParams& p, const Truncation& t = {}, const VerifyOptions& o = {});
// Rows: i, j are nonnegative basis indices. Columns: i, j label the eigenbasis
// over Z (n >= 0 -> aq^{n+1}, n < 0 -> bq^{-n}).
VerificationReport verify_unitarity(RowCol rc, long i, long j, const QParams& p, const Truncation& t = {},
                                    const VerifyOptions& o = {});
VerificationReport verify_dual_orthogonality(DualKind kind, long n, long n2, const QParams& p,
                                             const Truncation& t = {}, const VerifyOptions& o = {});
VerificationReport verify_meixner_orthogonality(long n, long n2, const QParams& p, const Truncation& t = {},
                                                const VerifyOptions& o = {});
VerificationReport verify_negative_b_meixner_orthogonality(long n, long n2, const QParams& p,
                                                           const Truncation& t = {}, const VerifyOptions& o = {});
VerificationReport verify_Eq_zero_identity(long n, long n2, const QParams& p, const Truncation& t = {},
                                           const VerifyOptions& o = {});
// m, n over Z with the same labelling as verify_unitarity(Columns, ...).
VerificationReport verify_biorthogonality(long m, long n, const QParams& p, const Truncation& t = {},
                                          const VerifyOptions& o = {});

struct WeightedSum {
  double value = 0.0;
  double tail = 0.0;
  std::size_t terms = 0;
  bool certified = false;
};

// sum_m w_m M_n(q^{-m}; A, -B/A) M_n2(q^{-m}; A, -B/A) with (A, B) = (roles.a, roles.b);
// no domain checks, so both q-Meixner relations share it.
WeightedSum meixner_weighted_sum(long n, long n2, const QParams& roles, const Truncation& t = {});

}  // namespace qortho
