#include "qortho/report.hpp"

#include <algorithm>
#include <cmath>
#include <tuple>

namespace qortho {

const char* status_name(Status s) {
  switch (s) {
    case Status::Passed:
      return "passed";
    case Status::Failed:
      return "failed";
    case Status::Inconclusive:
      return "inconclusive";
  }
  return "failed";
}

double VerificationReport::extra(const std::string& key, double fallback) const {
  for (const auto& [k, v] : extras)
    if (k == key) return v;
  return fallback;
}

void finalize_with_residual(VerificationReport& r, double residual, bool tail_certified) {
  r.residual = residual;
  double bound = r.tolerance * (1.0 + std::max(std::abs(r.lhs), std::abs(r.rhs)));
  r.passed = std::isfinite(residual) && residual <= bound;
  bool tail_ok = tail_certified && std::isfinite(r.tail_estimate) && r.tail_estimate < std::max(r.tolerance, 1e-300);
  if (!tail_ok) {
    r.status = Status::Inconclusive;
  } else {
    r.status = r.passed ? Status::Passed : Status::Failed;
  }
}

void finalize(VerificationReport& r, bool tail_certified) {
  finalize_with_residual(r, std::abs(r.lhs - r.rhs), tail_certified);
}

Summary summarize(const std::vector<VerificationReport>& records) {
  Summary s;
  for (const auto& r : records) {
    switch (r.status) {
      case Status::Passed:
        ++s.passed;
        break;
      case Status::Failed:
        ++s.failed;
        break;
      case Status::Inconclusive:
        ++s.inconclusive;
        break;
    }
  }
  return s;
}

void sort_records(std::vector<VerificationReport>& records) {
  std::stable_sort(records.begin(), records.end(), [](const VerificationReport& x, const VerificationReport& y) {
    return std::tie(x.identity_id, x.i, x.j) < std::tie(y.identity_id, y.i, y.j);
  });
}

}  // namespace qortho
