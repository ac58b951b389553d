#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qortho/qparams.hpp"

namespace qortho {

enum class Status { Passed, Failed, Inconclusive };

const char* status_name(Status s);

// One identity check. lhs/rhs are stored divided by `scale` (the natural
// magnitude of the identity, e.g. sqrt(h_m h_m') for an orthogonality
// relation); raw values go to extras.
struct VerificationReport {
  std::string identity_id;
  QParams params;
  long i = 0;
  long j = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  double residual = 0.0;
  std::size_t terms_used = 0;
  double tail_estimate = 0.0;
  double tolerance = 0.0;
  double scale = 1.0;
  bool passed = false;
  Status status = Status::Failed;
  std::string precision = "double";
  std::string note;
  std::vector<std::pair<std::string, double>> extras;

  double extra(const std::string& key, double fallback = 0.0) const;
};

// residual = |lhs - rhs|; passed <=> residual <= tolerance (1 + max(|lhs|, |rhs|));
// an uncertified tail (or tail >= tolerance) makes the status inconclusive.
void finalize(VerificationReport& r, bool tail_certified);

// Same rule with a precomputed residual.
void finalize_with_residual(VerificationReport& r, double residual, bool tail_certified);

struct Summary {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t inconclusive = 0;
};

Summary summarize(const std::vector<VerificationReport>& records);

// Records ordered by (identity_id, i, j).
void sort_records(std::vector<VerificationReport>& records);

}  // namespace qortho
