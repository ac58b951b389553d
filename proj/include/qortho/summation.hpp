#pragma once

#include <cstddef>
#include <deque>
#include <vector>

#include "qortho/scalar.hpp"

namespace qortho {

struct Truncation {
  double rel_tol = 1e-12;
  double abs_tol = 0.0;
  std::size_t max_terms = 10000;
  std::size_t small_run = 10;
};

// Neumaier summation with a running sum of magnitudes.
template <class R>
class CompensatedSum {
 public:
  void add(const R& x) {
    R t = sum_ + x;
    if (num::abs(sum_) >= num::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
    magnitude_ += num::abs(x);
    ++count_;
  }
  R value() const { return sum_ + comp_; }
  R magnitude() const { return magnitude_; }
  std::size_t count() const { return count_; }

 private:
  R sum_{0};
  R comp_{0};
  R magnitude_{0};
  std::size_t count_ = 0;
};

// Decides when an infinite sum may stop: small_run consecutive negligible
// terms, then a geometric extrapolation of the envelope bounds the tail.
template <class R>
class TailMonitor {
 public:
  explicit TailMonitor(const Truncation& t, const R& scale = R(0))
      : rel_(t.rel_tol), abs_(t.abs_tol), run_needed_(t.small_run ? t.small_run : 1), scale_(scale) {
    half_ = run_needed_ / 2 ? run_needed_ / 2 : 1;
  }

  // Returns true once the sum can stop.
  bool push(const R& term, const R& running_sum, const R& magnitude) {
    R mag = num::abs(term);
    history_.push_back(mag);
    if (history_.size() > 2 * half_) history_.pop_front();
    R threshold = num::max(R(abs_), R(rel_) * num::max(num::abs(running_sum), scale_));
    threshold = num::max(threshold, num::eps<R>() * magnitude);
    run_ = mag <= threshold ? run_ + 1 : 0;
    if (run_ < run_needed_ || history_.size() < 2 * half_) return false;

    R e0(0), e1(0);
    for (std::size_t i = 0; i < half_; ++i) e0 = num::max(e0, history_[i]);
    for (std::size_t i = half_; i < 2 * half_; ++i) e1 = num::max(e1, history_[i]);
    if (e1 == 0) {
      tail_ = 0;
      certified_ = true;
      return true;
    }
    if (e0 == 0) return false;
    R ratio = num::pow(e1 / e0, R(1) / R(static_cast<double>(half_)));
    if (!(ratio < 1)) return false;
    tail_ = e1 * ratio / (1 - ratio);
    certified_ = tail_ <= num::max(threshold * R(static_cast<double>(run_needed_)), R(abs_));
    return certified_;
  }

  bool certified() const { return certified_; }
  R tail() const { return tail_; }

 private:
  double rel_;
  double abs_;
  std::size_t run_needed_;
  std::size_t half_;
  R scale_;
  std::deque<R> history_;
  std::size_t run_ = 0;
  R tail_{0};
  bool certified_ = false;
};

// Sign/mantissa/binary-exponent representation that survives the huge dynamic
// range of q^{-m(m+3)/4}-type factors. value = mant * 2^exp2.
template <class R>
struct ScaledValue {
  R mant{0};
  long exp2 = 0;

  static ScaledValue from(const R& x) {
    ScaledValue s;
    s.mant = x;
    s.normalize();
    return s;
  }
  static ScaledValue one() { return from(R(1)); }

  void normalize() {
    if (mant == 0) {
      exp2 = 0;
      return;
    }
    int e = 0;
    mant = num::frexp(mant, &e);
    exp2 += e;
  }
  bool is_zero() const { return mant == 0; }
  int sign() const { return mant > 0 ? 1 : (mant < 0 ? -1 : 0); }
  R value() const { return mant == 0 ? R(0) : num::ldexp(mant, exp2); }
  R log_abs() const {
    return num::log(num::abs(mant)) + R(static_cast<double>(exp2)) * num::log(R(2));
  }

  ScaledValue& operator*=(const R& f) {
    mant *= f;
    normalize();
    return *this;
  }
  ScaledValue& operator/=(const R& f) {
    mant /= f;
    normalize();
    return *this;
  }
  ScaledValue& operator*=(const ScaledValue& o) {
    mant *= o.mant;
    exp2 += o.exp2;
    normalize();
    return *this;
  }
  ScaledValue& operator/=(const ScaledValue& o) {
    mant /= o.mant;
    exp2 -= o.exp2;
    normalize();
    return *this;
  }
  friend ScaledValue operator*(ScaledValue a, const ScaledValue& b) { return a *= b; }
  friend ScaledValue operator/(ScaledValue a, const ScaledValue& b) { return a /= b; }
  friend ScaledValue operator*(ScaledValue a, const R& b) { return a *= b; }

  template <class To>
  ScaledValue<To> as() const {
    ScaledValue<To> s;
    s.mant = num::cast<To>(mant);
    s.exp2 = exp2;
    return s;
  }
};

template <class R>
ScaledValue<R> scaled_sqrt(ScaledValue<R> x) {
  if (x.exp2 % 2 != 0) {
    x.mant *= 2;
    x.exp2 -= 1;
  }
  ScaledValue<R> r;
  r.mant = num::sqrt(x.mant);
  r.exp2 = x.exp2 / 2;
  r.normalize();
  return r;
}

// Sum of scaled terms. magnitude_ratio receives sum|t| / |sum t| (condition).
template <class R>
ScaledValue<R> scaled_sum(const std::vector<ScaledValue<R>>& terms, R* magnitude_ratio = nullptr) {
  long top = 0;
  bool any = false;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    if (!any || t.exp2 > top) top = t.exp2;
    any = true;
  }
  if (!any) {
    if (magnitude_ratio) *magnitude_ratio = R(1);
    return ScaledValue<R>{};
  }
  CompensatedSum<R> acc;
  for (const auto& t : terms) {
    if (t.is_zero()) continue;
    acc.add(num::ldexp(t.mant, t.exp2 - top));
  }
  ScaledValue<R> s;
  s.mant = acc.value();
  s.exp2 = top;
  s.normalize();
  if (magnitude_ratio) {
    R v = num::abs(acc.value());
    *magnitude_ratio = v == 0 ? R(std::numeric_limits<double>::infinity()) : acc.magnitude() / v;
  }
  return s;
}

}  // namespace qortho
