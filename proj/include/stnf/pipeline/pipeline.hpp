#pragma once

#include <array>
#include <vector>

#include "stnf/model/object.hpp"

namespace stnf {

// Sorted distinct event times.
using EventList = std::vector<TimeValue>;

struct MovingSegment {
  MovingPoint p;
  MovingPoint q;
};

// a(t) x + b(t) y = c(t), divided through by a when a is not identically
// zero and by b otherwise. pa, pb, pc are the undivided coefficients with
// denominators cleared; they define the same line at every time of the domain.
struct MovingCarrier {
  RationalFunction a;
  RationalFunction b;
  RationalFunction c;
  TimeInterval domain;
  Polynomial pa;
  Polynomial pb;
  Polynomial pc;
};

// Throws std::invalid_argument("degenerate moving segment") when the endpoints
// have identical trajectories.
MovingCarrier moving_carrier(const MovingSegment& seg);

std::vector<TimeValue> pair_events(const MovingCarrier& c1, const MovingCarrier& c2,
                                   const TimeInterval& i);
std::vector<TimeValue> triple_events(const MovingCarrier& c1, const MovingCarrier& c2,
                                     const MovingCarrier& c3, const TimeInterval& i);

EventList partition(const GeometricObject& g);

// Requires lo < hi. Midpoint when both ends are exact, otherwise the simplest
// rational strictly between them.
Rational sample_time(const TimeValue& lo, const TimeValue& hi);

// Rational in ]L, L + 2^-k[ where L = floor(t 2^k) / 2^k and 2^-k <= eps.
Rational approximate_time(const TimeValue& t, const Rational& eps);

// The affinity sending ref corner i to corners[i](t). Segment references are
// completed with p + rot90(q - p) on both sides, point references give a
// translation.
TimeDepAffinity recover_affinity(const Triangle& ref, const std::array<MovingPoint, 3>& corners);

inline const Rational kDefaultEpsilon = pow2(-32);

// One atom per triangle of each partition element: event points first, then
// the open intervals between consecutive events, in time order.
std::vector<AtomicObject> triangulate_steps(const GeometricObject& g, const EventList& chi,
                                            const Rational& eps = kDefaultEpsilon);

struct NormalForm {
  std::vector<AtomicObject> atoms;
  std::vector<TimeInterval> partition;
};

// Equal up to source ids.
bool operator==(const NormalForm& a, const NormalForm& b);

// The partition elements of chi, in time order.
std::vector<TimeInterval> elements_of(const EventList& chi);

// Greedy left-to-right merge of adjacent partition elements, followed by the
// canonical rebase of every atom. The input object supplies the source id
// and the input domain endpoints.
NormalForm merge(const GeometricObject& g, const std::vector<AtomicObject>& atoms,
                 const EventList& chi);

// Throws std::invalid_argument naming the first violation of an invalid atom.
NormalForm t_st(const GeometricObject& g, const Rational& eps = kDefaultEpsilon);

bool normal_form_equal(const GeometricObject& g1, const GeometricObject& g2);

// The atoms of a normal form as a geometric object with the given id.
GeometricObject as_object(const NormalForm& nf, const std::string& id);

// Canonical, sorted snapshot of the atoms alive at t.
std::vector<Triangle> snapshot_normal_form(const NormalForm& nf, const Rational& t);

}  // namespace stnf
