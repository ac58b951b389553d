#pragma once

#include <vector>

#include "qortho/report.hpp"
#include "qortho/summation.hpp"

namespace qortho {

// q -> 1 sweep with a(q) = q^alpha, b(q) = q^beta / (q - 1).
struct LimitSweep {
  double alpha = 1.0;
  double beta = 0.5;
  double lambda = 0.25;
  double x = 0.4;
  std::vector<double> q_sequence;
  // Per-q tolerance: envelope * (1 - q), times (rows + 1) for the operator entries.
  double envelope = 4.0;

  // q = 1 - 2^{-k}, k = k_min..k_max.
  static LimitSweep standard(int k_min = 2, int k_max = 10);
  void validate() const;
};

struct LimitResult {
  // One record per q, then the rate record.
  std::vector<VerificationReport> records;
  std::vector<double> errors;
  double order = 0.0;       // least-squares slope over the finest half of the sweep
  double constant = 0.0;    // err ~ constant * (1-q)^order on that window
  double order_full = 0.0;  // slope over the whole sweep
  int nonmonotone_steps = 0;
};

// Minimum fitted order required of a limit check.
inline constexpr double kLimitOrder = 0.9;

// P_n(x; q^alpha, q^beta/(q-1); q) against L_n^{(alpha)}(1-x) / L_n^{(alpha)}(0).
LimitResult limit_polynomial_check(long n, double x, const LimitSweep& sweep, const Truncation& t = {});

// Matrix of A in the monomial basis (rows 0..n) against the classical operator
// (1-x)^2 d/dx + 2l(x-1) + 1 applied to x^k, l = (alpha+1)/2.
LimitResult limit_operator_entries_check(long n, const LimitSweep& sweep);

// (1-x)^{-2l} exp((lambda-1) x / (1-x)), |x| < 1.
double classical_eigenfunction(double lambda, double x, double l);

struct SeriesSum {
  double value = 0.0;
  std::size_t terms = 0;
  double tail = 0.0;
};

// sum_n L_n^{(2l-1)}(1-lambda) x^n.
SeriesSum classical_eigenfunction_series(double lambda, double x, double l, const Truncation& t = {});

// Five-point central differences for A^cl xi = lambda xi at x with step h.
VerificationReport classical_operator_check(double lambda, double x, double l, double h = 1e-3,
                                            double tolerance = 1e-8);

}  // namespace qortho
