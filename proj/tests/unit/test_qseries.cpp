#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "qortho/qseries.hpp"
#include "qortho/qparams.hpp"

using namespace qortho;

namespace {

// Oracles: plain loops, no library code.
double product(double a, double q, int n) {
  double r = 1;
  for (int k = 0; k < n; ++k) r *= 1 - a * std::pow(q, k);
  return r;
}

double brute_2phi1(double a, double b, double c, double q, double z, int terms) {
  double s = 0;
  for (int k = 0; k < terms; ++k)
    s += product(a, q, k) * product(b, q, k) / (product(c, q, k) * product(q, q, k)) * std::pow(z, k);
  return s;
}

}  // namespace

TEST(QPochhammer, EmptyProductIsOne) {
  EXPECT_EQ(q_pochhammer(0.3, 0.5, 0), 1.0);
  EXPECT_EQ(q_pochhammer(-7.0, 0.9, 0), 1.0);
}

TEST(QPochhammer, UnitArgumentVanishes) {
  for (long n = 1; n < 6; ++n) EXPECT_EQ(q_pochhammer(1.0, 0.5, n), 0.0);
}

TEST(QPochhammer, TwoFactors) { EXPECT_DOUBLE_EQ(q_pochhammer(0.5, 0.5, 2), 0.375); }

TEST(QPochhammer, NegativeArgumentSign) {
  EXPECT_NEAR(q_pochhammer(-2.0, 0.5, 3), product(-2.0, 0.5, 3), 1e-14);
  EXPECT_GT(q_pochhammer(-2.0, 0.5, 3), 0.0);
  EXPECT_LT(q_pochhammer(4.0, 0.5, 1), 0.0);
}

TEST(QPochhammer, Splitting) {
  for (double a : {-1.3, 0.2, 0.7, 2.5})
    for (double q : {0.3, 0.5, 0.9})
      for (long m = 0; m < 6; ++m)
        for (long n = 0; n < 6; ++n) {
          double lhs = q_pochhammer(a, q, m + n);
          double rhs = q_pochhammer(a, q, m) * q_pochhammer(a * std::pow(q, m), q, n);
          EXPECT_LE(std::abs(lhs - rhs), 1e-13 * std::max(1.0, std::abs(lhs)));
        }
}

TEST(QPochhammerInf, Basics) {
  Truncation t;
  EXPECT_EQ(q_pochhammer_inf(0.0, 0.5, t), 1.0);
  EXPECT_EQ(q_pochhammer_inf(1.0, 0.5, t), 0.0);
  EXPECT_EQ(q_pochhammer_inf(std::pow(0.5, -3), 0.5, t), 0.0);
}

TEST(QPochhammerInf, MatchesSixtyFactors) {
  EXPECT_NEAR(q_pochhammer_inf(0.5, 0.5), product(0.5, 0.5, 61), 1e-12);
}

TEST(QPochhammerInf, MaxTermsIsAnError) {
  Truncation t;
  t.max_terms = 5;
  EXPECT_THROW(q_pochhammer_inf(0.5, 0.99, t), NonConvergenceError);
}

TEST(QPochhammerInf, RejectsBadBase) { EXPECT_THROW(q_pochhammer_inf(0.5, 1.5), ParameterError); }

TEST(QNumber, Values) {
  EXPECT_NEAR(q_number(0.0, 0.3), 0.0, 1e-15);
  EXPECT_NEAR(q_number(1.0, 0.3), 1.0, 1e-15);
  EXPECT_NEAR(q_number(2.0, 0.25), 2.5, 1e-14);
  EXPECT_NEAR(q_number(3.0, 1 - 1e-6), 3.0, 1e-6);
}

TEST(TerminatingIndex, DetectsInversePowers) {
  EXPECT_EQ(terminating_index(std::pow(0.5, -4), 0.5).value(), 4);
  EXPECT_EQ(terminating_index(1.0, 0.7).value(), 0);
  EXPECT_FALSE(terminating_index(0.3, 0.5).has_value());
  EXPECT_FALSE(terminating_index(-2.0, 0.5).has_value());
}

TEST(Phi21, TerminatingWithUnitParameter) {
  for (long n = 1; n < 5; ++n) EXPECT_EQ(phi_2_1(std::pow(0.5, -n), 1.0, 0.3, 0.5, 0.7), 1.0);
}

TEST(Phi21, ZeroArgument) { EXPECT_EQ(phi_2_1(0.4, 0.0, 0.25, 0.5, 0.0), 1.0); }

TEST(Phi21, BruteForce) {
  EXPECT_NEAR(phi_2_1(0.5, 0.0, 0.25, 0.5, 0.3), brute_2phi1(0.5, 0.0, 0.25, 0.5, 0.3, 200), 1e-12);
  EXPECT_NEAR(phi_2_1(-0.4, 0.3, 0.6, 0.8, -0.7), brute_2phi1(-0.4, 0.3, 0.6, 0.8, -0.7, 400), 1e-12);
}

TEST(Phi21, DivergentSeriesRejected) { EXPECT_THROW(phi_2_1(0.5, 0.2, 0.3, 0.5, 1.5), DivergenceError); }

TEST(Phi21, ZeroDenominatorRejected) {
  // c = q^{-1}: the k = 2 denominator vanishes before the series ends.
  EXPECT_THROW(phi_2_1(std::pow(0.5, -4), 0.2, std::pow(0.5, -1), 0.5, 0.3), ZeroDenominatorError);
}

TEST(Phi21, QBinomialTheorem) {
  for (double a : {-0.8, 0.3, 2.0})
    for (double z : {-0.6, 0.2, 0.5}) {
      double lhs = phi_2_1(a, 0.0, 0.0, 0.6, z);
      double rhs = q_pochhammer_inf(a * z, 0.6) / q_pochhammer_inf(z, 0.6);
      EXPECT_NEAR(lhs, rhs, 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST(Phi32, Degenerate) {
  EXPECT_EQ(phi_3_2(1.0, 0.0, 0.3, 0.25, -0.35, 0.5, 0.5), 1.0);
  EXPECT_EQ(phi_3_2(0.4, 0.0, 0.0, 0.25, -0.35, 0.5, 0.0), 1.0);
}

TEST(Phi32, HandExpandedDegreeTwo) {
  const double q = 0.5, a3 = 0.2, b1 = 0.25, b2 = -0.35;
  const double a1 = 4.0;  // q^{-2}
  double t1 = (1 - a1) * (1 - a3) / ((1 - b1) * (1 - b2) * (1 - q)) * q;
  double t2 = t1 * (1 - a1 * q) * (1 - a3 * q) / ((1 - b1 * q) * (1 - b2 * q) * (1 - q * q)) * q;
  EXPECT_NEAR(phi_3_2(a1, 0.0, a3, b1, b2, q, q), 1 + t1 + t2, 1e-14);
}

TEST(JacksonEq, Values) {
  EXPECT_EQ(jackson_Eq(0.0, 0.5), 1.0);
  EXPECT_NEAR(jackson_Eq(-1.0, 0.5), 0.0, 1e-12);
  EXPECT_NEAR(jackson_Eq(0.3, 0.5), q_pochhammer_inf(-0.3, 0.5), 1e-12);
}

TEST(JacksonEq, SeriesMatchesProductOnGrid) {
  for (double q : {0.3, 0.5, 0.9})
    for (int k = -8; k <= 8; ++k) {
      double z = 0.25 * k;
      double e = jackson_Eq(z, q);
      EXPECT_LE(std::abs(e - q_pochhammer_inf(-z, q)), 1e-11 * (1 + std::abs(e))) << "q=" << q << " z=" << z;
    }
}

TEST(JacksonEq, VanishesAtInversePowers) {
  for (long j = 0; j < 4; ++j) EXPECT_NEAR(jackson_Eq(-std::pow(0.6, -j), 0.6), 0.0, 1e-10);
}

TEST(Truncation, Defaults) {
  Truncation t;
  EXPECT_EQ(t.rel_tol, 1e-12);
  EXPECT_EQ(t.max_terms, 10000u);
  EXPECT_EQ(t.small_run, 10u);
}

TEST(CompensatedSum, RecoversSmallAddends) {
  CompensatedSum<double> s;
  s.add(1.0);
  for (int i = 0; i < 1000; ++i) s.add(1e-17);
  s.add(-1.0);
  EXPECT_NEAR(s.value(), 1e-14, 1e-20);
}

TEST(ScaledValue, SurvivesOverflow) {
  auto big = ScaledValue<double>::from(1e300);
  auto prod = big * big;
  prod /= ScaledValue<double>::from(1e300);
  EXPECT_NEAR(prod.value(), 1e300, 1e286);
  EXPECT_NEAR(scaled_sqrt(ScaledValue<double>::from(2.0)).value(), std::sqrt(2.0), 1e-15);
}

TEST(QParams, DomainChecks) {
  EXPECT_THROW(QParams::make(1.0, 0.5, -0.7), ParameterError);
  EXPECT_THROW(QParams::make(0.5, 2.0, -0.7), ParameterError);
  EXPECT_THROW(QParams::make(0.5, 0.5, 0.0), ParameterError);
  try {
    QParams::make(0.5, 0.5, 0.7);
    FAIL();
  } catch (const ParameterError& e) {
    EXPECT_STREQ(e.what(), "b must be negative");
  }
}

TEST(QParams, LRoundTrip) {
  for (double q : {0.3, 0.5, 0.9})
    for (double a : {0.1, 0.5, 1.0, 1.05}) {
      if (a >= 1 / q) continue;
      auto p = QParams::make(q, a, -0.5);
      EXPECT_NEAR(std::pow(q, 2 * p.l() - 1), a, 1e-14 * a);
      EXPECT_GT(p.l(), 0.0);
    }
}

TEST(QParams, DerivedFields) {
  auto p = QParams::make(0.5, 0.5, -0.7);
  EXPECT_NEAR(p.l(), 1.0, 1e-15);
  EXPECT_NEAR(p.alpha(), std::sqrt(0.7) * 0.5 * 0.5, 1e-15);
  EXPECT_NEAR(p.beta1(), -0.7 * 1.5, 1e-15);
}
