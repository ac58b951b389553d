#include <cmath>
#include <limits>

#include <gtest/gtest.h>

#include "qortho/report.hpp"

using namespace qortho;

namespace {

VerificationReport make(double lhs, double rhs, double tol) {
  VerificationReport r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.tolerance = tol;
  return r;
}

}  // namespace

TEST(Finalize, RelativeBound) {
  auto r = make(100.0, 100.5, 1e-2);
  finalize(r, true);
  EXPECT_EQ(r.residual, 0.5);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.status, Status::Passed);

  auto f = make(1.0, 1.1, 1e-2);
  finalize(f, true);
  EXPECT_FALSE(f.passed);
  EXPECT_EQ(f.status, Status::Failed);
}

TEST(Finalize, UncertifiedTailIsInconclusive) {
  auto r = make(1.0, 1.0, 1e-8);
  finalize(r, false);
  EXPECT_EQ(r.status, Status::Inconclusive);

  auto big_tail = make(1.0, 1.0, 1e-8);
  big_tail.tail_estimate = 1e-6;
  finalize(big_tail, true);
  EXPECT_EQ(big_tail.status, Status::Inconclusive);
}

TEST(Finalize, NonFiniteResidualFails) {
  auto r = make(std::numeric_limits<double>::quiet_NaN(), 0.0, 1e-8);
  finalize(r, true);
  EXPECT_FALSE(r.passed);
  EXPECT_EQ(r.status, Status::Failed);
}

TEST(Report, Extras) {
  VerificationReport r;
  r.extras.emplace_back("lhs_raw", 2.5);
  EXPECT_EQ(r.extra("lhs_raw"), 2.5);
  EXPECT_EQ(r.extra("missing", -1.0), -1.0);
}

TEST(Summary, CountsAndNames) {
  std::vector<VerificationReport> v(4);
  v[0].status = Status::Passed;
  v[1].status = Status::Failed;
  v[2].status = Status::Inconclusive;
  v[3].status = Status::Passed;
  auto s = summarize(v);
  EXPECT_EQ(s.passed, 2u);
  EXPECT_EQ(s.failed, 1u);
  EXPECT_EQ(s.inconclusive, 1u);
  EXPECT_STREQ(status_name(Status::Inconclusive), "inconclusive");
}

TEST(Sort, ByIdentityThenIndices) {
  std::vector<VerificationReport> v(3);
  v[0].identity_id = "meixner";
  v[0].i = 1;
  v[1].identity_id = "dual-ff";
  v[1].i = 2;
  v[2].identity_id = "meixner";
  v[2].i = 0;
  sort_records(v);
  EXPECT_EQ(v[0].identity_id, "dual-ff");
  EXPECT_EQ(v[1].i, 0);
  EXPECT_EQ(v[2].i, 1);
}
