#include "stnf/geom/primitives.hpp"

#include <algorithm>
#include <stdexcept>

namespace stnf {

std::string to_string(const Point& p) {
  return "(" + to_string(p.x) + "," + to_string(p.y) + ")";
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

Orientation orientation(const Point& p, const Point& q, const Point& r) {
  return static_cast<Orientation>(sgn(cross(p, q, r)));
}

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.a, s.b, p) != Orientation::collinear) return false;
  const auto between = [](const Rational& v, const Rational& a, const Rational& b) {
    return a <= b ? (a <= v && v <= b) : (b <= v && v <= a);
  };
  return between(p.x, s.a.x, s.b.x) && between(p.y, s.a.y, s.b.y);
}

bool operator<(const Line& l, const Line& m) {
  if (l.a != m.a) return l.a < m.a;
  if (l.b != m.b) return l.b < m.b;
  return l.c < m.c;
}

Line line_through(const Point& p, const Point& q) {
  if (p == q) throw std::invalid_argument("line through coincident points");
  // Left normal of q - p.
  Rational a = p.y - q.y;
  Rational b = q.x - p.x;
  Rational c = a * p.x + b * p.y;
  const Rational s = sgn(a) != 0 ? a : b;
  a /= s;
  b /= s;
  c /= s;
  return {a, b, c};
}

std::optional<Point> intersect(const Line& l, const Line& m) {
  const Rational det = l.a * m.b - l.b * m.a;
  if (sgn(det) == 0) return std::nullopt;
  return Point{(l.c * m.b - l.b * m.c) / det, (l.a * m.c - l.c * m.a) / det};
}

Degeneracy Triangle::degeneracy() const {
  const auto& c = corners;
  if (orientation(c[0], c[1], c[2]) != Orientation::collinear) return Degeneracy::full;
  if (c[0] == c[1] && c[1] == c[2]) return Degeneracy::point;
  return Degeneracy::segment;
}

bool operator==(const Triangle& s, const Triangle& t) { return s.corners == t.corners; }

namespace {

std::array<Point, 3> sorted_corners(const Triangle& t) {
  std::array<Point, 3> c = t.corners;
  std::sort(c.begin(), c.end());
  return c;
}

}  // namespace

bool operator<(const Triangle& s, const Triangle& t) {
  const auto a = sorted_corners(s);
  const auto b = sorted_corners(t);
  for (int i = 0; i < 3; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return false;
}

std::string to_string(const Triangle& t) {
  return "(" + to_string(t.corners[0]) + "," + to_string(t.corners[1]) + "," +
         to_string(t.corners[2]) + ")";
}

CanonicalTriangle canonicalize(const Triangle& t) {
  const auto& c = t.corners;
  std::array<int, 3> idx{0, 1, 2};
  switch (t.degeneracy()) {
    case Degeneracy::point:
      break;
    case Degeneracy::segment: {
      int lo = 0, hi = 0;
      for (int i = 1; i < 3; ++i) {
        if (c[i] < c[lo]) lo = i;
        if (c[hi] < c[i]) hi = i;
      }
      idx = {lo, hi, hi};
      break;
    }
    case Degeneracy::full: {
      int lo = 0;
      for (int i = 1; i < 3; ++i)
        if (c[i] < c[lo]) lo = i;
      const bool ccw = orientation(c[0], c[1], c[2]) == Orientation::ccw;
      const int step = ccw ? 1 : 2;
      idx = {lo, (lo + step) % 3, (lo + 2 * step) % 3};
      break;
    }
  }
  return {Triangle{{c[idx[0]], c[idx[1]], c[idx[2]]}}, idx};
}

Triangle canonical(const Triangle& t) { return canonicalize(t).triangle; }

void sort_canonical(std::vector<Triangle>& ts) {
  for (auto& t : ts) t = canonical(t);
  std::sort(ts.begin(), ts.end(), [](const Triangle& a, const Triangle& b) {
    if (a < b) return true;
    if (b < a) return false;
    // Same corner set: order by stored corner sequence for determinism.
    for (int i = 0; i < 3; ++i) {
      if (a.corners[i] < b.corners[i]) return true;
      if (b.corners[i] < a.corners[i]) return false;
    }
    return false;
  });
}

bool contains_closed(const Triangle& t, const Point& p) {
  const auto& c = t.corners;
  switch (t.degeneracy()) {
    case Degeneracy::point:
      return p == c[0];
    case Degeneracy::segment: {
      const auto can = canonical(t);
      return on_segment(p, {can.corners[0], can.corners[1]});
    }
    case Degeneracy::full: {
      const int s = sgn(cross(c[0], c[1], c[2]));
      for (int i = 0; i < 3; ++i)
        if (sgn(cross(c[i], c[(i + 1) % 3], p)) * s < 0) return false;
      return true;
    }
  }
  return false;
}

std::vector<Point> convex_hull(std::vector<Point> points) {
  if (points.empty()) throw std::invalid_argument("convex hull of empty set");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() <= 2) return points;
  std::vector<Point> hull(2 * points.size());
  std::size_t k = 0;
  for (const auto& p : points) {
    while (k >= 2 && sgn(cross(hull[k - 2], hull[k - 1], p)) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && sgn(cross(hull[k - 2], hull[k - 1], points[i])) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

Point vertex_mean(const std::vector<Point>& walk) {
  if (walk.empty()) throw std::invalid_argument("mean of empty walk");
  Point sum{0, 0};
  for (const auto& p : walk) sum = sum + p;
  const Rational n(static_cast<long>(walk.size()));
  return {sum.x / n, sum.y / n};
}

}  // namespace stnf
