#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "stnf/exact/polynomial.hpp"

namespace stnf {

// A real event time: either a rational or the unique root of a square-free
// integer polynomial inside an open isolating interval. Algebraic values are
// always irrational.
class TimeValue {
 public:
  TimeValue() = default;
  TimeValue(const Rational& r) : value_(r) {}  // NOLINT(google-explicit-constructor)
  static TimeValue exact(const Rational& r) { return TimeValue(r); }
  // Validates that poly has exactly one root in ]lo, hi[; collapses to an
  // exact value when that root is rational. Throws std::invalid_argument.
  static TimeValue algebraic(const Polynomial& poly, const Rational& lo, const Rational& hi);

  bool is_exact() const { return poly_.is_zero(); }
  // Exact value; for algebraic values this is unspecified.
  const Rational& value() const { return value_; }
  const Polynomial& poly() const { return poly_; }
  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }

  // Rational bounds; equal to value() for exact values.
  Rational lower() const { return is_exact() ? value_ : lo_; }
  Rational upper() const { return is_exact() ? value_ : hi_; }

  // Same number with an isolating interval of width at most eps.
  TimeValue narrowed(const Rational& eps) const;
  // One bisection step (no-op for exact values).
  TimeValue bisected() const;
  TimeValue negated() const;

  std::string to_string() const;

 private:
  static TimeValue unchecked(Polynomial poly, Rational lo, Rational hi);
  Rational value_;
  Polynomial poly_;
  Rational lo_;
  Rational hi_;
};

// Every distinct real root of p in [lo, hi], ascending. Throws
// std::domain_error("indeterminate roots") for the zero polynomial.
std::vector<TimeValue> poly_real_roots(const Polynomial& p, const Rational& lo,
                                       const Rational& hi);

// Rational interval of width <= eps containing tv.
std::pair<Rational, Rational> refine(const TimeValue& tv, const Rational& eps);

std::strong_ordering tv_compare(const TimeValue& a, const TimeValue& b);
std::strong_ordering tv_compare(const TimeValue& a, const Rational& b);

inline bool operator==(const TimeValue& a, const TimeValue& b) {
  return tv_compare(a, b) == std::strong_ordering::equal;
}
inline std::strong_ordering operator<=>(const TimeValue& a, const TimeValue& b) {
  return tv_compare(a, b);
}

// p(tv) == 0, decided symbolically.
bool vanishes_at(const Polynomial& p, const TimeValue& tv);
int sign_at(const Polynomial& p, const TimeValue& tv);

// The rational with the smallest denominator (then smallest magnitude)
// strictly between a and b. Requires a < b.
Rational simplest_between(const TimeValue& a, const TimeValue& b);

// Cauchy bound: every real root of p has absolute value below the result.
Rational root_bound(const Polynomial& p);

}  // namespace stnf
