#include <cmath>
#include <limits>
#include <vector>

#include <gtest/gtest.h>

#include "qortho/polynomials.hpp"

using namespace qortho;

namespace {

double product(double a, double q, int n) {
  double r = 1;
  for (int k = 0; k < n; ++k) r *= 1 - a * std::pow(q, k);
  return r;
}

// 3phi2(q^{-n}, 0, x; aq, bq; q, q) summed term by term.
double oracle_laguerre(int n, double x, double a, double b, double q) {
  double s = 0;
  for (int k = 0; k <= n; ++k)
    s += product(std::pow(q, -n), q, k) * product(x, q, k) /
         (product(a * q, q, k) * product(b * q, q, k) * product(q, q, k)) * std::pow(q, k);
  return s;
}

// 2phi1(q^{-n}, q^{-m}; bq; q, -q^{n+1}/c).
double oracle_meixner(int n, int m, double b, double c, double q) {
  double s = 0;
  double z = -std::pow(q, n + 1) / c;
  for (int k = 0; k <= std::min(n, m); ++k)
    s += product(std::pow(q, -n), q, k) * product(std::pow(q, -m), q, k) / (product(b * q, q, k) * product(q, q, k)) *
         std::pow(z, k);
  return s;
}

// M_n(x; b, c; p) at base p = 1/q summed naively; fine for small n.
double oracle_inverse_meixner(int n, double x, double b, double c, double q) {
  const double p = 1 / q;
  double s = 0;
  for (int k = 0; k <= n; ++k)
    s += product(std::pow(p, -n), p, k) * product(x, p, k) / (product(b * p, p, k) * product(p, p, k)) *
         std::pow(-std::pow(p, n + 1) / c, k);
  return s;
}

std::vector<double> spectral_grid(const QParams& p) {
  std::vector<double> xs;
  for (int k = 0; k <= 8; ++k) {
    xs.push_back(p.a * std::pow(p.q, k + 1));
    xs.push_back(p.b * std::pow(p.q, k + 1));
  }
  return xs;
}

const QParams kP1 = QParams::make(0.5, 0.5, -0.7);
const QParams kP2 = QParams::make(0.7, 0.9, -0.4);

}  // namespace

TEST(BigQLaguerre, DegreeZero) {
  for (double x : {-0.3, 0.0, 0.1, 0.25}) EXPECT_EQ(big_q_laguerre(0, x, kP1), 1.0);
}

TEST(BigQLaguerre, ForcedValueAtAq) {
  for (long n = 0; n <= 10; ++n) {
    double want = 1 / q_pochhammer(std::pow(kP1.q, -n) / kP1.b, kP1.q, n);
    EXPECT_NEAR(big_q_laguerre(n, kP1.a * kP1.q, kP1), want, 1e-12 * std::max(1.0, std::abs(want)));
  }
}

TEST(BigQLaguerre, HandRolledDegreeThree) {
  EXPECT_NEAR(big_q_laguerre(3, 0.2, kP1), oracle_laguerre(3, 0.2, 0.5, -0.7, 0.5), 1e-13);
}

TEST(BigQLaguerre, SymmetricInAB) {
  for (const auto& p : {kP1, kP2})
    for (long n = 0; n <= 12; ++n)
      for (double x : {-0.2, 0.05, 0.3}) {
        double v = big_q_laguerre(n, x, p);
        double w = big_q_laguerre(n, x, p.swapped());
        EXPECT_NEAR(v, w, 1e-12 * std::max(1.0, std::abs(v)));
      }
}

TEST(BigQLaguerre, RecurrenceMatchesSeries) {
  for (const auto& p : {kP1, kP2}) {
    std::vector<double> xs = spectral_grid(p);
    xs.push_back(0.0);
    for (double x : xs) {
      auto rec = big_q_laguerre_recurrence(20, x, p);
      ASSERT_EQ(rec.size(), 21u);
      EXPECT_EQ(rec[0], 1.0);
      for (long n = 0; n <= 20; ++n) {
        double s = big_q_laguerre(n, x, p);
        EXPECT_LE(std::abs(s - rec[n]), 1e-10 * std::max(1.0, std::abs(s))) << "x=" << x << " n=" << n;
      }
    }
  }
}

TEST(BigQLaguerre, TwoPhiOneFormMatches) {
  // At spectral points the 3phi2 sees the rounded argument; compare with max(1,|P|).
  for (const auto& p : {kP1, kP2})
    for (double x : spectral_grid(p))
      for (long n = 0; n <= 20; ++n) {
        double s = big_q_laguerre(n, x, p);
        double f = big_q_laguerre_two_phi_one(n, x, p);
        EXPECT_LE(std::abs(s - f), 1e-12 * std::max(1.0, std::abs(f))) << "x=" << x << " n=" << n;
      }
}

TEST(BigQLaguerre, GeneratingRouteMatches) {
  for (const auto& p : {kP1, kP2})
    for (double x : spectral_grid(p)) {
      auto gen = big_q_laguerre_generating(20, x, p);
      for (long n = 0; n <= 20; ++n) {
        double s = big_q_laguerre(n, x, p);
        EXPECT_LE(std::abs(s - gen[n]), 1e-10 * std::max(1.0, std::abs(s))) << "x=" << x << " n=" << n;
      }
    }
}

TEST(BigQLaguerre, GeneratingRouteNeedsSpectralPoint) {
  EXPECT_THROW(big_q_laguerre_generating(5, 0.1, kP1), ParameterError);
}

TEST(QMeixner, Degenerate) {
  EXPECT_EQ(q_meixner(0, 4, 0.5, 0.4, 0.5), 1.0);
  EXPECT_EQ(q_meixner(3, 0, 0.5, 0.4, 0.5), 1.0);
}

TEST(QMeixner, HandRolled) {
  EXPECT_NEAR(q_meixner(2, 3, 0.5, 0.4, 0.5), oracle_meixner(2, 3, 0.5, 0.4, 0.5), 1e-13);
  EXPECT_NEAR(q_meixner(3, 2, -0.7, 1.4, 0.5), oracle_meixner(3, 2, -0.7, 1.4, 0.5),
              1e-13 * std::abs(oracle_meixner(3, 2, -0.7, 1.4, 0.5)));
}

TEST(Duality, DualFIsMeixner) {
  for (const auto& p : {kP1, kP2})
    for (long n = 0; n <= 12; ++n)
      for (long m = 0; m <= 12; ++m) {
        double f = dual_f(n, m, p);
        double want = q_meixner(n, m, p.a, -p.b / p.a, p.q) / q_pochhammer(std::pow(p.q, -m) / p.b, p.q, m);
        EXPECT_LE(std::abs(f - want), 1e-11 * std::max(1.0, std::abs(want))) << n << "," << m;
      }
}

TEST(Duality, DualGIsNegativeParameterMeixner) {
  for (const auto& p : {kP1, kP2})
    for (long n = 0; n <= 12; ++n)
      for (long m = 0; m <= 12; ++m) {
        double g = dual_g(n, m, p);
        double want = q_meixner(n, m, p.b, -p.a / p.b, p.q) / q_pochhammer(std::pow(p.q, -m) / p.a, p.q, m);
        EXPECT_LE(std::abs(g - want), 1e-11 * std::max(1.0, std::abs(want))) << n << "," << m;
      }
}

TEST(Duality, DegreeZeroAndSwap) {
  for (long n = 0; n < 5; ++n) {
    EXPECT_EQ(dual_f(n, 0, kP1), 1.0);
    EXPECT_EQ(dual_g(n, 0, kP1), 1.0);
    for (long m = 0; m < 6; ++m)
      EXPECT_NEAR(dual_g(n, m, kP1), dual_f(n, m, kP1.swapped()), 1e-12 * std::max(1.0, std::abs(dual_g(n, m, kP1))));
  }
  EXPECT_NEAR(dual_f(0, 2, kP1), big_q_laguerre(2, kP1.a * kP1.q, kP1), 1e-14);
}

TEST(Generating, TrivialCases) {
  EXPECT_EQ(generating_series(0.1, 0.0, kP1, 30).value, 1.0);
  EXPECT_EQ(generating_series(0.1, -0.2, kP1, 0).value, 1.0);
  EXPECT_EQ(generating_closed(0.1, 0.0, kP1), 1.0);
  EXPECT_NEAR(generating_closed(0.1, 1e-9, kP1), 1.0, 1e-8);
}

TEST(Generating, ClosedFormAtAq) {
  const auto& p = kP1;
  for (double t : {-0.3, -0.1, 0.1, 0.3}) {
    double want = q_pochhammer_inf(-p.a * p.b * p.q * p.q * t, p.q) / q_pochhammer_inf(-p.b * p.q * t, p.q);
    EXPECT_NEAR(generating_closed(p.a * p.q, t, p), want, 1e-13);
  }
}

TEST(Generating, SeriesMatchesClosedAtSpectralPoints) {
  int compared = 0;
  for (const auto& p : {kP1, kP2})
    for (double x : spectral_grid(p))
      for (double t : {-0.3, -0.1, 0.1, 0.3}) {
        auto s = generating_series(x, t, p, 80);
        if (!s.converged) continue;
        ++compared;
        double c = generating_closed(x, t, p);
        EXPECT_LE(std::abs(s.value - c), 1e-10 * std::max(1.0, std::abs(c))) << "x=" << x << " t=" << t;
      }
  EXPECT_GE(compared, 80);
}

TEST(Generating, OffSpectrumSeriesIsFlagged) {
  // Away from the spectrum the coefficients grow faster than any geometric rate.
  auto s = generating_series(0.1, -0.2, kP1, 60);
  EXPECT_FALSE(s.converged);
  EXPECT_THROW(generating_series(0.1, -0.2, kP1, 60, true), NonConvergenceError);
}

TEST(Generating, OptimalTruncationOffSpectrum) {
  for (double x : {0.05, 0.1, 0.2})
    for (double t : {-0.3, -0.1, 0.1, 0.3}) {
      double closed = generating_closed(x, t, kP1);
      double smallest = std::numeric_limits<double>::infinity(), value = 0;
      for (long n = 1; n <= 40; ++n) {
        auto g = generating_series(x, t, kP1, n);
        if (std::abs(g.last_term) < smallest) {
          smallest = std::abs(g.last_term);
          value = g.value;
        }
      }
      EXPECT_GT(smallest, 1e-10) << "x=" << x << " t=" << t;
      EXPECT_LE(std::abs(value - closed), 10 * smallest) << "x=" << x << " t=" << t;
    }
}

TEST(QInverse, Degenerate) {
  auto [l0, r0] = q_inverse_meixner_relation(0, 0.7, 2.0, 0.3, 0.5);
  EXPECT_EQ(l0, 1.0);
  EXPECT_NEAR(r0, 1.0, 1e-15);
  for (long n = 1; n <= 5; ++n) {
    auto [l, r] = q_inverse_meixner_relation(n, 1.0, 2.0, 0.3, 0.5);
    EXPECT_NEAR(l, 1.0, 1e-14);
    EXPECT_NEAR(r, 1.0, 1e-10);
  }
}

TEST(QInverse, DegreeTwo) {
  auto [l, r] = q_inverse_meixner_relation(2, 2.0, 2.0, 0.3, 0.5);
  EXPECT_LE(std::abs(l - r), 1e-11 * (1 + std::abs(r)));
  EXPECT_NEAR(l, oracle_inverse_meixner(2, 2.0, 2.0, 0.3, 0.5), 1e-12 * (1 + std::abs(l)));
}

TEST(QInverse, Grid) {
  for (long n = 0; n <= 10; ++n)
    for (long j = 0; j <= 4; ++j)
      for (double b : {2.0, 0.6}) {
        double x = std::pow(0.5, -j);
        auto [l, r] = q_inverse_meixner_relation(n, x, b, 0.3, 0.5);
        EXPECT_LE(std::abs(l - r), 1e-10 * (1 + std::abs(r))) << n << " " << x << " " << b;
      }
}

TEST(ClassicalLaguerre, Values) {
  EXPECT_EQ(classical_laguerre(0, 1.3, 0.4), 1.0);
  EXPECT_NEAR(classical_laguerre(1, 1.3, 0.4), 1 + 1.3 - 0.4, 1e-15);
  // L_3^{(1)}(x) = 4 - 6x + 2x^2 - x^3/6
  const double x = 0.5;
  EXPECT_NEAR(classical_laguerre(3, 1.0, x), 4 - 6 * x + 2 * x * x - x * x * x / 6, 1e-13);
}
