#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "stnf/exact/rational_function.hpp"
#include "stnf/exact/time_value.hpp"
#include "stnf/geom/primitives.hpp"

namespace stnf {

// A time point {lo} or an interval with independently closed ends.
struct TimeInterval {
  TimeValue lo;
  TimeValue hi;
  bool closed_lo = true;
  bool closed_hi = true;

  static TimeInterval point(const TimeValue& t) { return {t, t, true, true}; }
  static TimeInterval closed(const TimeValue& a, const TimeValue& b) { return {a, b, true, true}; }
  static TimeInterval open(const TimeValue& a, const TimeValue& b) { return {a, b, false, false}; }

  bool is_point() const { return lo == hi; }
  bool contains(const TimeValue& t) const;
  std::string to_string() const;
};

bool operator==(const TimeInterval& a, const TimeInterval& b);

// Throws std::invalid_argument unless lo <= hi and a point is closed on both ends.
void check_interval(const TimeInterval& i);

// Empty when the intervals do not meet.
std::optional<TimeInterval> intersect(const TimeInterval& a, const TimeInterval& b);

// Distinct roots of p inside i, ascending. p must not be the zero polynomial.
std::vector<TimeValue> roots_in(const Polynomial& p, const TimeInterval& i);

// (x, y; t) -> (a11 x + a12 y + b1, a21 x + a22 y + b2).
struct TimeDepAffinity {
  RationalFunction a11 = Rational(1);
  RationalFunction a12;
  RationalFunction a21;
  RationalFunction a22 = Rational(1);
  RationalFunction b1;
  RationalFunction b2;

  static TimeDepAffinity identity() { return {}; }
  RationalFunction det() const;
  Point apply(const Point& p, const Rational& t) const;
  std::array<RationalFunction, 6> coefficients() const { return {a11, a12, a21, a22, b1, b2}; }
  std::string to_string() const;
};

bool operator==(const TimeDepAffinity& f, const TimeDepAffinity& g);

// No coefficient has a pole at t and the determinant does not vanish there.
bool nonsingular_at(const TimeDepAffinity& f, const TimeValue& t);

struct MovingPoint {
  RationalFunction fx;
  RationalFunction fy;
  TimeInterval domain;

  Point at(const Rational& t) const { return {fx.eval(t), fy.eval(t)}; }
};

inline bool same_trajectory(const MovingPoint& p, const MovingPoint& q) {
  return p.fx == q.fx && p.fy == q.fy;
}

MovingPoint moving_image(const TimeDepAffinity& f, const Point& p, const TimeInterval& domain);

struct AtomicObject {
  Triangle ref;
  TimeInterval domain;
  TimeDepAffinity f;
  std::string source_id;
  bool approximate = false;
};

struct GeometricObject {
  std::string id;
  std::vector<AtomicObject> atoms;
};

struct Violation {
  enum class Kind { pole_in_domain, singular };
  Kind kind;
  TimeValue at;
  // "pole-in-domain" or "singular-at-<t>".
  std::string label() const;
};

std::vector<Violation> validate_atomic(const AtomicObject& o);

std::optional<Triangle> snapshot_atomic(const AtomicObject& o, const Rational& t);
std::vector<Triangle> snapshot_geometric(const GeometricObject& g, const Rational& t);

// Convex closure of the atom domains. Throws std::invalid_argument when empty.
TimeInterval time_domain(const GeometricObject& g);

std::array<MovingPoint, 3> moving_corners(const AtomicObject& o);

}  // namespace stnf
