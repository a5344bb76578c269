#include "stnf/model/object.hpp"

#include <stdexcept>

namespace stnf {

bool TimeInterval::contains(const TimeValue& t) const {
  const auto l = tv_compare(lo, t);
  const auto h = tv_compare(t, hi);
  const bool above = l == std::strong_ordering::less || (closed_lo && l == std::strong_ordering::equal);
  const bool below = h == std::strong_ordering::less || (closed_hi && h == std::strong_ordering::equal);
  return above && below;
}

std::string TimeInterval::to_string() const {
  if (is_point()) return "{" + lo.to_string() + "}";
  return std::string(closed_lo ? "[" : "]") + lo.to_string() + ", " + hi.to_string() +
         (closed_hi ? "]" : "[");
}

bool operator==(const TimeInterval& a, const TimeInterval& b) {
  return a.closed_lo == b.closed_lo && a.closed_hi == b.closed_hi && a.lo == b.lo && a.hi == b.hi;
}

void check_interval(const TimeInterval& i) {
  const auto c = tv_compare(i.lo, i.hi);
  if (c == std::strong_ordering::greater) throw std::invalid_argument("interval with lo > hi");
  if (c == std::strong_ordering::equal && !(i.closed_lo && i.closed_hi))
    throw std::invalid_argument("empty interval");
}

std::optional<TimeInterval> intersect(const TimeInterval& a, const TimeInterval& b) {
  TimeInterval r;
  const auto l = tv_compare(a.lo, b.lo);
  if (l == std::strong_ordering::greater) {
    r.lo = a.lo;
    r.closed_lo = a.closed_lo;
  } else if (l == std::strong_ordering::less) {
    r.lo = b.lo;
    r.closed_lo = b.closed_lo;
  } else {
    r.lo = a.lo;
    r.closed_lo = a.closed_lo && b.closed_lo;
  }
  const auto h = tv_compare(a.hi, b.hi);
  if (h == std::strong_ordering::less) {
    r.hi = a.hi;
    r.closed_hi = a.closed_hi;
  } else if (h == std::strong_ordering::greater) {
    r.hi = b.hi;
    r.closed_hi = b.closed_hi;
  } else {
    r.hi = a.hi;
    r.closed_hi = a.closed_hi && b.closed_hi;
  }
  const auto c = tv_compare(r.lo, r.hi);
  if (c == std::strong_ordering::greater) return std::nullopt;
  if (c == std::strong_ordering::equal && !(r.closed_lo && r.closed_hi)) return std::nullopt;
  return r;
}

std::vector<TimeValue> roots_in(const Polynomial& p, const TimeInterval& i) {
  std::vector<TimeValue> out;
  if (p.degree() <= 0) return out;
  for (auto& r : poly_real_roots(p, i.lo.lower(), i.hi.upper()))
    if (i.contains(r)) out.push_back(std::move(r));
  return out;
}

RationalFunction TimeDepAffinity::det() const { return a11 * a22 - a12 * a21; }

Point TimeDepAffinity::apply(const Point& p, const Rational& t) const {
  return {a11.eval(t) * p.x + a12.eval(t) * p.y + b1.eval(t),
          a21.eval(t) * p.x + a22.eval(t) * p.y + b2.eval(t)};
}

namespace {

std::string component(const RationalFunction& ax, const RationalFunction& ay,
                      const RationalFunction& b) {
  std::string out;
  const auto join = [&](const std::string& s) {
    if (out.empty())
      out = s;
    else if (s[0] == '-')
      out += " - " + s.substr(1);
    else
      out += " + " + s;
  };
  const auto term = [&](const RationalFunction& c, const std::string& var) {
    if (c.is_zero()) return;
    std::string s;
    if (c == RationalFunction(Rational(1)))
      s = var;
    else if (c == RationalFunction(Rational(-1)))
      s = "-" + var;
    else
      s = "(" + c.to_string() + ")" + var;
    join(s);
  };
  term(ax, "x");
  term(ay, "y");
  if (!b.is_zero()) join(b.to_string());
  return out.empty() ? "0" : out;
}

}  // namespace

std::string TimeDepAffinity::to_string() const {
  return "(" + component(a11, a12, b1) + ", " + component(a21, a22, b2) + ")";
}

bool operator==(const TimeDepAffinity& f, const TimeDepAffinity& g) {
  return f.coefficients() == g.coefficients();
}

bool nonsingular_at(const TimeDepAffinity& f, const TimeValue& t) {
  for (const auto& c : f.coefficients())
    if (vanishes_at(c.den(), t)) return false;
  return !vanishes_at(f.det().num(), t);
}

MovingPoint moving_image(const TimeDepAffinity& f, const Point& p, const TimeInterval& domain) {
  return {f.a11 * p.x + f.a12 * p.y + f.b1, f.a21 * p.x + f.a22 * p.y + f.b2, domain};
}

std::string Violation::label() const {
  return kind == Kind::pole_in_domain ? "pole-in-domain" : "singular-at-" + at.to_string();
}

std::vector<Violation> validate_atomic(const AtomicObject& o) {
  std::vector<Violation> out;
  for (const auto& c : o.f.coefficients())
    for (const auto& r : roots_in(c.den(), o.domain))
      out.push_back({Violation::Kind::pole_in_domain, r});
  const RationalFunction d = o.f.det();
  if (d.is_zero()) {
    out.push_back({Violation::Kind::singular, o.domain.lo});
  } else {
    for (const auto& r : roots_in(d.num(), o.domain)) out.push_back({Violation::Kind::singular, r});
  }
  return out;
}

std::optional<Triangle> snapshot_atomic(const AtomicObject& o, const Rational& t) {
  if (!o.domain.contains(t)) return std::nullopt;
  Triangle s;
  for (int i = 0; i < 3; ++i) s.corners[i] = o.f.apply(o.ref.corners[i], t);
  return s;
}

std::vector<Triangle> snapshot_geometric(const GeometricObject& g, const Rational& t) {
  std::vector<Triangle> out;
  for (const auto& o : g.atoms)
    if (auto s = snapshot_atomic(o, t)) out.push_back(std::move(*s));
  return out;
}

TimeInterval time_domain(const GeometricObject& g) {
  if (g.atoms.empty()) throw std::invalid_argument("empty geometric object has no time domain");
  TimeInterval r = g.atoms.front().domain;
  for (const auto& o : g.atoms) {
    const auto l = tv_compare(o.domain.lo, r.lo);
    if (l == std::strong_ordering::less) r.lo = o.domain.lo, r.closed_lo = o.domain.closed_lo;
    else if (l == std::strong_ordering::equal) r.closed_lo = r.closed_lo || o.domain.closed_lo;
    const auto h = tv_compare(o.domain.hi, r.hi);
    if (h == std::strong_ordering::greater) r.hi = o.domain.hi, r.closed_hi = o.domain.closed_hi;
    else if (h == std::strong_ordering::equal) r.closed_hi = r.closed_hi || o.domain.closed_hi;
  }
  return r;
}

std::array<MovingPoint, 3> moving_corners(const AtomicObject& o) {
  return {moving_image(o.f, o.ref.corners[0], o.domain), moving_image(o.f, o.ref.corners[1], o.domain),
          moving_image(o.f, o.ref.corners[2], o.domain)};
}

}  // namespace stnf
