#pragma once

#include <algorithm>
#include <array>
#include <limits>
#include <optional>
#include <cstddef>
#include <utility>
#include <vector>

#include "qortho/polynomials.hpp"

namespace qortho {

template <class R>
struct SymTridiagonal {
  std::vector<R> diag;
  std::vector<R> off;  // off[n] couples rows n and n+1
  std::size_t dim() const { return diag.size(); }
};

// General tridiagonal matrix M; lower[n] = M(n+1, n), upper[n] = M(n, n+1).
// Column n holds the coefficients of X f_n, so coefficient vectors map as M v.
template <class R>
struct Tridiagonal {
  std::vector<R> diag;
  std::vector<R> lower;
  std::vector<R> upper;

  explicit Tridiagonal(std::size_t dim = 0)
      : diag(dim, R(0)), lower(dim ? dim - 1 : 0, R(0)), upper(dim ? dim - 1 : 0, R(0)) {}
  static Tridiagonal from_symmetric(const SymTridiagonal<R>& s) {
    Tridiagonal t(s.dim());
    t.diag = s.diag;
    t.lower = s.off;
    t.upper = s.off;
    return t;
  }
  std::size_t dim() const { return diag.size(); }
  bool symmetric() const { return lower == upper; }

  Tridiagonal transpose() const {
    Tridiagonal t = *this;
    std::swap(t.lower, t.upper);
    return t;
  }
  // diag(d) * M
  Tridiagonal scale_rows(const std::vector<R>& d) const {
    Tridiagonal t = *this;
    for (std::size_t i = 0; i < dim(); ++i) t.diag[i] *= d[i];
    for (std::size_t i = 0; i + 1 < dim(); ++i) {
      t.lower[i] *= d[i + 1];
      t.upper[i] *= d[i];
    }
    return t;
  }
  // M * diag(d)
  Tridiagonal scale_cols(const std::vector<R>& d) const {
    Tridiagonal t = *this;
    for (std::size_t i = 0; i < dim(); ++i) t.diag[i] *= d[i];
    for (std::size_t i = 0; i + 1 < dim(); ++i) {
      t.lower[i] *= d[i];
      t.upper[i] *= d[i + 1];
    }
    return t;
  }
  Tridiagonal& operator+=(const Tridiagonal& o) {
    for (std::size_t i = 0; i < dim(); ++i) diag[i] += o.diag[i];
    for (std::size_t i = 0; i + 1 < dim(); ++i) {
      lower[i] += o.lower[i];
      upper[i] += o.upper[i];
    }
    return *this;
  }
  std::vector<R> apply(const std::vector<R>& v) const {
    std::vector<R> out(dim(), R(0));
    for (std::size_t i = 0; i < dim(); ++i) {
      out[i] = diag[i] * v[i];
      if (i > 0) out[i] += lower[i - 1] * v[i - 1];
      if (i + 1 < dim()) out[i] += upper[i] * v[i + 1];
    }
    return out;
  }
};

template <class R>
struct GeneratorMatrices {
  Tridiagonal<R> jplus;     // lower band: J+ f_n = jplus.lower[n] f_{n+1}
  Tridiagonal<R> jminus;    // J- as the adjoint (transpose) of J+
  std::vector<R> lowering;  // J- f_n coefficient of f_{n-1} from its own formula; 0 at n = 0
  std::vector<R> j0;        // l + n
  std::vector<R> q_j0;      // q^{l+n}
};

template <class R>
GeneratorMatrices<R> build_generator_matrices(const BasicQParams<R>& p, std::size_t dim) {
  if (dim < 2) throw ParameterError("dim must be at least 2");
  const R& q = p.q;
  const R l = p.l();
  GeneratorMatrices<R> g;
  g.jplus = Tridiagonal<R>(dim);
  g.lowering.assign(dim, R(0));
  g.j0.resize(dim);
  g.q_j0.resize(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    R n(static_cast<double>(i));
    g.j0[i] = l + n;
    g.q_j0[i] = num::pow(q, l + n);
    if (i + 1 < dim) {
      g.jplus.lower[i] = num::pow(q, -(n + l - R(0.5)) / 2) / (1 - q) *
                         num::sqrt((1 - num::pow(q, n + 1)) * (1 - num::pow(q, 2 * l + n)));
    }
    g.lowering[i] = num::pow(q, -(n + l - R(1.5)) / 2) / (1 - q) *
                    num::sqrt((1 - num::pow(q, n)) * (1 - num::pow(q, 2 * l + n - 1)));
  }
  g.jminus = g.jplus.transpose();
  return g;
}

template <class R>
SymTridiagonal<R> build_A(const BasicQParams<R>& p, std::size_t dim) {
  if (dim < 1) throw ParameterError("dim must be positive");
  const R &q = p.q, &a = p.a, &b = p.b;
  SymTridiagonal<R> A;
  A.diag.resize(dim);
  A.off.resize(dim - 1);
  const R s = num::sqrt(-a * b);
  for (std::size_t i = 0; i < dim; ++i) {
    long n = static_cast<long>(i);
    R qn1 = num::powi(q, n + 1);
    A.diag[i] = -(a * b * num::powi(q, 2 * n + 1) * (1 + q) - qn1 * (a + a * b + b));
    if (i + 1 < dim) {
      A.off[i] = s * num::pow(q, R(static_cast<double>(n + 2)) / 2) *
                 num::sqrt((1 - qn1) * (1 - a * qn1) * (1 - b * qn1));
    }
  }
  return A;
}

namespace detail {
template <class R>
std::vector<R> operator_diagonal(const BasicQParams<R>& p, const std::vector<R>& q_j0) {
  std::vector<R> d(q_j0.size());
  const R l = p.l();
  const R ql = num::pow(p.q, l);
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = -p.beta1() * q_j0[i] * q_j0[i] + p.beta2() * (q_j0[i] / ql);
  return d;
}
}  // namespace detail

// A assembled as a product of the generator matrices and diagonal functions of J0.
template <class R>
Tridiagonal<R> compose_A(const BasicQParams<R>& p, std::size_t dim) {
  auto g = build_generator_matrices(p, dim);
  const R ql = num::pow(p.q, p.l());
  std::vector<R> quarter(dim), half(dim), root(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    R qn = g.q_j0[i] / ql;  // q^{J0 - l}
    quarter[i] = num::pow(g.q_j0[i], R(0.25));
    half[i] = num::sqrt(qn);
    root[i] = num::sqrt(1 - p.b * qn);
  }
  Tridiagonal<R> inner = g.jplus.scale_cols(half).scale_rows(root);
  inner += g.jminus.scale_cols(root).scale_rows(half);
  Tridiagonal<R> A = inner.scale_cols(quarter).scale_rows(quarter);
  const R alpha = p.alpha();
  for (auto& v : A.lower) v *= alpha;
  for (auto& v : A.upper) v *= alpha;
  auto d = detail::operator_diagonal(p, g.q_j0);
  for (std::size_t i = 0; i < dim; ++i) A.diag[i] = d[i];
  return A;
}

// A1 = alpha q^{J0/4}[(1 - b q^{J0-l}) J+ + q^{J0-l} J-] q^{J0/4} + diag,
// A2 = alpha q^{J0/4}[J+ q^{J0-l} + J- (1 - b q^{J0-l})] q^{J0/4} + diag.
// Entries are formed with the same commutative grouping so that A2 == A1^T bitwise.
template <class R>
std::pair<Tridiagonal<R>, Tridiagonal<R>> build_A1_A2(const BasicQParams<R>& p, std::size_t dim) {
  auto g = build_generator_matrices(p, dim);
  const R ql = num::pow(p.q, p.l());
  const R alpha = p.alpha();
  std::vector<R> quarter(dim), qn(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    quarter[i] = num::pow(g.q_j0[i], R(0.25));
    qn[i] = g.q_j0[i] / ql;
  }
  Tridiagonal<R> A1(dim), A2(dim);
  auto d = detail::operator_diagonal(p, g.q_j0);
  A1.diag = d;
  A2.diag = d;
  for (std::size_t n = 0; n + 1 < dim; ++n) {
    const R j = g.jplus.lower[n];  // J+ : f_n -> f_{n+1}; J- : f_{n+1} -> f_n
    const R qq = quarter[n] * quarter[n + 1];
    const R s = 1 - p.b * qn[n + 1];
    A1.lower[n] = alpha * (qq * (s * j));
    A1.upper[n] = alpha * (qq * (qn[n] * j));
    A2.lower[n] = alpha * (qq * (qn[n] * j));
    A2.upper[n] = alpha * (qq * (s * j));
  }
  return {A1, A2};
}

template <class R>
struct CoefficientVector {
  std::vector<ScaledValue<R>> scaled;
  std::vector<R> coeffs;
  R lambda{0};
  bool normalizable = false;
};

// Branch/index of a spectral point: +1 for aq^{j+1}, -1 for bq^{j+1}.
template <class R>
std::optional<std::pair<int, long>> spectral_index(const R& lambda, const BasicQParams<R>& p) {
  if (lambda > 0) {
    if (auto j = terminating_index<R>(p.a * p.q / lambda, p.q)) return std::make_pair(1, *j);
  } else if (lambda < 0) {
    if (auto j = terminating_index<R>(p.b * p.q / lambda, p.q)) return std::make_pair(-1, *j);
  }
  return std::nullopt;
}

// Streams the coefficients
//   (-ab)^{-m/2} q^{-e(m)} sqrt((aq;q)_m (bq;q)_m^{bq_power} / (q;q)_m) P_m(lambda)
// for m = 0, 1, 2, ...; e(m) = m(m+3)/4 gives a_m of the eigenvectors of A,
// e(m) = m with bq_power 0 and e(m) = m(m+1)/2 with bq_power 2 give the
// non-selfadjoint families.
template <class R>
class CoefficientStream {
 public:
  enum class Family { Eigen, Psi, Phi };

  CoefficientStream(const R& lambda, const BasicQParams<R>& p, Family family)
      : lambda_(lambda), p_(p), family_(family) {}

  ScaledValue<R> next() {
    const R &q = p_.q, &a = p_.a, &b = p_.b;
    if (m_ > 0) {
      R qm = num::powi(q, m_);
      R bq = 1 - b * qm;
      R ratio = (1 - a * qm) / ((1 - qm) * (-a * b));
      R shift(0);  // 2 (e(m) - e(m-1))
      switch (family_) {
        case Family::Eigen:
          ratio *= bq;
          shift = R(static_cast<double>(m_ + 1));
          break;
        case Family::Psi:
          shift = R(2);
          break;
        case Family::Phi:
          ratio *= bq * bq;
          shift = R(static_cast<double>(2 * m_));
          break;
      }
      k2_ *= ratio;
      k2_ /= num::pow(q, shift);
    }
    ScaledValue<R> v = scaled_sqrt(k2_) * big_q_laguerre_scaled<R>(m_, lambda_, p_);
    ++m_;
    return v;
  }
  long index() const { return m_; }

 private:
  R lambda_;
  BasicQParams<R> p_;
  Family family_;
  long m_ = 0;
  ScaledValue<R> k2_ = ScaledValue<R>::one();
};

namespace detail {

template <class R>
CoefficientVector<R> coefficient_family(const R& lambda, const BasicQParams<R>& p, long m_max,
                                        typename CoefficientStream<R>::Family family) {
  if (m_max < 0) throw ParameterError("m_max must be nonnegative");
  CoefficientVector<R> cv;
  cv.lambda = lambda;
  cv.normalizable = spectral_index(lambda, p).has_value();
  CoefficientStream<R> stream(lambda, p, family);
  for (long m = 0; m <= m_max; ++m) {
    ScaledValue<R> v = stream.next();
    cv.scaled.push_back(v);
    cv.coeffs.push_back(v.value());
  }
  return cv;
}

}  // namespace detail

// a_m(lambda) of the eigenvectors of A in the orthonormal basis f^l_m.
template <class R>
CoefficientVector<R> eigen_coefficients(const R& lambda, const BasicQParams<R>& p, long m_max) {
  return detail::coefficient_family<R>(lambda, p, m_max, CoefficientStream<R>::Family::Eigen);
}

// Coefficients of x^m in the eigenfunction, from the monomial form.
template <class R>
std::vector<R> monomial_coefficients(const R& lambda, const BasicQParams<R>& p, long m_max) {
  const R &q = p.q, &a = p.a, &b = p.b;
  std::vector<R> out;
  ScaledValue<R> k = ScaledValue<R>::one();
  ScaledValue<R> bq2 = ScaledValue<R>::one();
  for (long m = 0; m <= m_max; ++m) {
    if (m > 0) {
      R qm = num::powi(q, m);
      k *= (1 - a * qm) / (1 - qm) / num::sqrt(-b) / num::pow(a, R(0.75)) /
           num::pow(q, R(static_cast<double>(m + 1)) / 2);
      bq2 *= (1 - b * qm);
    }
    out.push_back((k * scaled_sqrt(bq2) * big_q_laguerre_scaled<R>(m, lambda, p)).value());
  }
  return out;
}

// c^l_n as a product of q-numbers.
template <class R>
R basis_constant(long n, const BasicQParams<R>& p) {
  const R l = p.l();
  R c(1);
  for (long k = 1; k <= n; ++k) {
    R kk(static_cast<double>(k));
    c *= num::sqrt(q_number<R>(2 * l + kk - 1, p.q) / q_number<R>(kk, p.q));
  }
  return c;
}

// c^l_n = q^{(1-2l)n/4} ((q^{2l};q)_n / (q;q)_n)^{1/2}.
template <class R>
R basis_constant_closed(long n, const BasicQParams<R>& p) {
  const R l = p.l();
  return num::pow(p.q, (1 - 2 * l) * R(static_cast<double>(n)) / 4) *
         num::sqrt(q_pochhammer<R>(num::pow(p.q, 2 * l), p.q, n) / q_pochhammer<R>(p.q, p.q, n));
}

enum class NormForm { Product, Finite };

namespace detail {
inline void require_positive_radicand(bool ok) {
  if (!ok) throw ParameterError("normalization radicand is not positive");
}
}  // namespace detail

// c_n, the normalization of the eigenvector at aq^{n+1}.
template <class R>
R normalization_c(long n, const BasicQParams<R>& p, const Truncation& t = {}, NormForm form = NormForm::Finite) {
  if (n < 0) throw ParameterError("index must be nonnegative");
  const R &q = p.q, &a = p.a, &b = p.b;
  R qn = num::powi(q, n);
  R v;
  if (form == NormForm::Product) {
    R qn1 = qn * q;
    R num_ = q_pochhammer_inf<R>(qn1, q, t) * q_pochhammer_inf<R>(a * qn1 / b, q, t) *
             q_pochhammer_inf<R>(a * q, q, t) * q_pochhammer_inf<R>(b * q, q, t) * qn;
    R den = q_pochhammer_inf<R>(a * qn1, q, t) * q_pochhammer_inf<R>(q, q, t) * q_pochhammer_inf<R>(b / a, q, t) *
            q_pochhammer_inf<R>(a * q / b, q, t);
    v = num_ / den;
  } else {
    v = q_pochhammer<R>(a * q, q, n) * q_pochhammer_inf<R>(b * q, q, t) * qn /
        (q_pochhammer<R>(a * q / b, q, n) * q_pochhammer<R>(q, q, n) * q_pochhammer_inf<R>(b / a, q, t));
  }
  detail::require_positive_radicand(v > 0);
  return num::sqrt(v);
}

// c'_n, the normalization of the eigenvector at bq^{n+1}.
template <class R>
R normalization_cprime(long n, const BasicQParams<R>& p, const Truncation& t = {},
                       NormForm form = NormForm::Finite) {
  if (n < 0) throw ParameterError("index must be nonnegative");
  const R &q = p.q, &a = p.a, &b = p.b;
  R qn = num::powi(q, n);
  R v;
  if (form == NormForm::Product) {
    R qn1 = qn * q;
    R num_ = (-b / a) * qn * q_pochhammer_inf<R>(b * qn1 / a, q, t) * q_pochhammer_inf<R>(qn1, q, t) *
             q_pochhammer_inf<R>(a * q, q, t) * q_pochhammer_inf<R>(b * q, q, t);
    R den = q_pochhammer_inf<R>(b * qn1, q, t) * q_pochhammer_inf<R>(q, q, t) * q_pochhammer_inf<R>(b / a, q, t) *
            q_pochhammer_inf<R>(a * q / b, q, t);
    v = num_ / den;
  } else {
    v = (-b / a) * qn * q_pochhammer<R>(b * q, q, n) * q_pochhammer_inf<R>(a * q, q, t) /
        (q_pochhammer<R>(q, q, n) * q_pochhammer_inf<R>(a * q / b, q, t) * q_pochhammer<R>(b / a, q, n + 1));
  }
  detail::require_positive_radicand(v > 0);
  return num::sqrt(v);
}

// Normalization for the Z-labelled basis: n >= 0 -> c_n, n < 0 -> c'_{-n-1}.
template <class R>
R normalization_z(long n, const BasicQParams<R>& p, const Truncation& t = {}) {
  return n >= 0 ? normalization_c<R>(n, p, t) : normalization_cprime<R>(-n - 1, p, t);
}

// Spectral point of the Z-labelled basis: n >= 0 -> aq^{n+1}, n < 0 -> bq^{-n}.
template <class R>
R spectral_point_z(long n, const BasicQParams<R>& p) {
  return n >= 0 ? p.a * num::powi(p.q, n + 1) : p.b * num::powi(p.q, -n);
}

template <class R>
struct SpectralPoints {
  std::vector<R> upper;  // aq^{n+1}
  std::vector<R> lower;  // bq^{n+1}
};

template <class R>
SpectralPoints<R> spectrum_points(const BasicQParams<R>& p, std::size_t N) {
  if (N < 1) throw ParameterError("N must be positive");
  SpectralPoints<R> s;
  R qn = p.q;
  for (std::size_t n = 0; n < N; ++n) {
    s.upper.push_back(p.a * qn);
    s.lower.push_back(p.b * qn);
    qn *= p.q;
  }
  return s;
}

// The k largest-|lambda| points of the union of both branches, ordered by |lambda|.
template <class R>
std::vector<R> extreme_spectral_points(const BasicQParams<R>& p, std::size_t k) {
  auto s = spectrum_points(p, k);
  std::vector<R> all = s.upper;
  all.insert(all.end(), s.lower.begin(), s.lower.end());
  std::stable_sort(all.begin(), all.end(), [](const R& x, const R& y) { return num::abs(x) > num::abs(y); });
  all.resize(k);
  return all;
}

// Number of eigenvalues of T strictly below x (Sturm sequence count).
template <class R>
std::size_t sturm_count(const SymTridiagonal<R>& T, const R& x) {
  std::size_t count = 0;
  R d(1);
  const R tiny = num::eps<R>() * num::eps<R>();
  for (std::size_t i = 0; i < T.dim(); ++i) {
    R e2 = i > 0 ? T.off[i - 1] * T.off[i - 1] : R(0);
    d = (T.diag[i] - x) - (i > 0 ? e2 / d : R(0));
    if (d == 0) d = -tiny;
    if (d < 0) ++count;
  }
  return count;
}

// All eigenvalues ascending, by bisection on the Sturm count.
template <class R>
std::vector<R> eig_tridiagonal(const SymTridiagonal<R>& T) {
  const std::size_t n = T.dim();
  if (n == 0) return {};
  if (T.off.size() + 1 != n) throw ParameterError("off-diagonal length must be dim - 1");
  R lo = T.diag[0], hi = T.diag[0], norm(0);
  for (std::size_t i = 0; i < n; ++i) {
    R r = (i > 0 ? num::abs(T.off[i - 1]) : R(0)) + (i + 1 < n ? num::abs(T.off[i]) : R(0));
    lo = num::min(lo, T.diag[i] - r);
    hi = num::max(hi, T.diag[i] + r);
    norm = num::max(norm, num::abs(T.diag[i]) + r);
  }
  std::vector<R> out(n);
  if (n == 1) {
    out[0] = T.diag[0];
    return out;
  }
  const R tol = 2 * num::eps<R>() * num::max(norm, R(std::numeric_limits<double>::min()));
  const int max_iter = 4 * std::numeric_limits<R>::digits + 64;
  for (std::size_t k = 0; k < n; ++k) {
    R a = k > 0 ? out[k - 1] : lo;
    R b = hi;
    int iter = 0;
    while (b - a > tol) {
      R mid = (a + b) / 2;
      if (mid <= a || mid >= b) break;
      if (sturm_count(T, mid) > k) b = mid;
      else a = mid;
      if (++iter > max_iter) throw NonConvergenceError("eig_tridiagonal: bisection did not converge");
    }
    out[k] = (a + b) / 2;
  }
  return out;
}

enum class XiBasis { Upper, Lower };

template <class R>
struct ThreeTermAction {
  R sub{0};    // coefficient of Xi_{n-1}
  R diag{0};   // coefficient of Xi_n
  R super{0};  // coefficient of Xi_{n+1}
};

// q^{-J0} on Xi_n (Upper, lambda = aq^{n+1}) or Xi'_n (Lower, lambda = bq^{n+1});
// orthonormal = true gives the action on the normalized basis.
template <class R>
ThreeTermAction<R> qJ0_inverse_action(XiBasis basis, long n, const BasicQParams<R>& p, bool orthonormal = false) {
  if (n < 0) throw ParameterError("index must be nonnegative");
  const R &q = p.q, &a = p.a, &b = p.b;
  const R qn = num::powi(q, n), qn1 = qn * q;
  const R q2n = num::powi(q, -2 * n);
  const R sq = num::sqrt(q);
  ThreeTermAction<R> r;
  if (basis == XiBasis::Upper) {
    const R k = 1 / (a * num::sqrt(a));
    r.diag = -k * q2n / (q * sq) * (b * (1 + q) - qn1 * (a * b + a + b));
    if (!orthonormal) {
      r.super = k * b * q2n / (q * sq) * (1 - a * qn1);
      r.sub = k * b * q2n / sq * (1 - qn) * (1 - a * qn / b);
    } else {
      r.super = k * b * q2n / (q * q) * num::sqrt((1 - a * qn1) * (1 - qn1) * (1 - a * qn1 / b));
      r.sub = k * b * q2n * num::sqrt((1 - a * qn) * (1 - qn) * (1 - a * qn / b));
    }
  } else {
    const R k = num::sqrt(a) / b;
    r.diag = -k * q2n / (q * sq) * (1 + q - qn1 * (a * b + a + b) / a);
    if (!orthonormal) {
      r.super = k * q2n / (q * sq) * (1 - b * qn1);
      r.sub = k * q2n / sq * (1 - qn) * (1 - b * qn / a);
    } else {
      r.super = k * q2n / (q * q) * num::sqrt((1 - b * qn1) * (1 - qn1) * (1 - b * qn1 / a));
      r.sub = k * q2n * num::sqrt((1 - b * qn) * (1 - qn) * (1 - b * qn / a));
    }
  }
  return r;
}

// Coefficients of psi_lambda (first line of the A1-family series) and
// phi_lambda (A2-family series) in the basis f^l_m.
template <class R>
std::pair<CoefficientVector<R>, CoefficientVector<R>> psi_phi_coefficients(const R& lambda,
                                                                          const BasicQParams<R>& p,
                                                                          long m_max) {
  auto psi = detail::coefficient_family<R>(lambda, p, m_max, CoefficientStream<R>::Family::Psi);
  auto phi = detail::coefficient_family<R>(lambda, p, m_max, CoefficientStream<R>::Family::Phi);
  return {psi, phi};
}

// max over rows 0..dim-2 of |(M v)_i - lambda v_i| / (row scale), where the row
// scale is the sum of magnitudes of the contributing products. Rows are taken
// only while the coefficients stay above sqrt(min normal); past that the
// products underflow.
template <class R>
R interior_residual(const Tridiagonal<R>& M, const std::vector<R>& v, const R& lambda) {
  const std::size_t n = std::min(M.dim(), v.size());
  const R tiny = num::sqrt(R(std::numeric_limits<R>::min()));
  R worst(0);
  for (std::size_t i = 0; i + 1 < n; ++i) {
    R smallest = num::min(num::abs(v[i]), num::abs(v[i + 1]));
    if (i > 0) smallest = num::min(smallest, num::abs(v[i - 1]));
    if (smallest < tiny && smallest != 0) break;
    R left = i > 0 ? M.lower[i - 1] * v[i - 1] : R(0);
    R mid = M.diag[i] * v[i];
    R right = M.upper[i] * v[i + 1];
    R lv = lambda * v[i];
    R scale = num::abs(left) + num::abs(mid) + num::abs(right) + num::abs(lv);
    if (scale == 0) continue;
    worst = num::max(worst, num::abs(left + mid + right - lv) / scale);
  }
  return worst;
}

}  // namespace qortho
