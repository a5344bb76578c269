#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "stnf/exact/rational.hpp"

namespace stnf {

struct Point {
  Rational x;
  Rational y;
};

inline bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }
inline bool operator!=(const Point& p, const Point& q) { return !(p == q); }
// Lexicographic (x, then y).
inline bool operator<(const Point& p, const Point& q) {
  const int c = cmp(p.x, q.x);
  return c != 0 ? c < 0 : p.y < q.y;
}
inline Point operator+(const Point& p, const Point& q) { return {p.x + q.x, p.y + q.y}; }
inline Point operator-(const Point& p, const Point& q) { return {p.x - q.x, p.y - q.y}; }
inline Point operator*(const Rational& s, const Point& p) { return {s * p.x, s * p.y}; }

struct PointHash {
  std::size_t operator()(const Point& p) const {
    return hash_value(p.x) * 31 + hash_value(p.y);
  }
};

std::string to_string(const Point& p);

enum class Orientation { cw = -1, collinear = 0, ccw = 1 };

// Twice the signed area of (p, q, r).
Rational cross(const Point& p, const Point& q, const Point& r);
Orientation orientation(const Point& p, const Point& q, const Point& r);

struct Segment {
  Point a;
  Point b;
};

// Closed segment membership.
bool on_segment(const Point& p, const Segment& s);

// a*x + b*y = c with the first nonzero of (a, b) equal to one.
struct Line {
  Rational a;
  Rational b;
  Rational c;
  Rational eval(const Point& p) const { return a * p.x + b * p.y - c; }
  bool contains(const Point& p) const { return sgn(eval(p)) == 0; }
};

inline bool operator==(const Line& l, const Line& m) {
  return l.a == m.a && l.b == m.b && l.c == m.c;
}
bool operator<(const Line& l, const Line& m);

struct LineHash {
  std::size_t operator()(const Line& l) const {
    return (hash_value(l.a) * 31 + hash_value(l.b)) * 31 + hash_value(l.c);
  }
};

// Throws std::invalid_argument when p == q.
Line line_through(const Point& p, const Point& q);
std::optional<Point> intersect(const Line& l, const Line& m);

enum class Degeneracy { full, segment, point };

struct Triangle {
  std::array<Point, 3> corners;
  Degeneracy degeneracy() const;
};

bool operator==(const Triangle& s, const Triangle& t);
// Compares sorted-corner keys lexicographically.
bool operator<(const Triangle& s, const Triangle& t);

std::string to_string(const Triangle& t);

struct CanonicalTriangle {
  Triangle triangle;
  // triangle.corners[i] == input.corners[perm[i]]
  std::array<int, 3> perm;
};

// Full: counter-clockwise starting at the lexicographic minimum.
// Segment: (min, max, max). Point: (p, p, p).
CanonicalTriangle canonicalize(const Triangle& t);
Triangle canonical(const Triangle& t);
void sort_canonical(std::vector<Triangle>& ts);

// Closed membership; works for every degeneracy.
bool contains_closed(const Triangle& t, const Point& p);

// Counter-clockwise hull without collinear points. Degenerate inputs give
// one or two vertices. Throws std::invalid_argument on an empty input.
std::vector<Point> convex_hull(std::vector<Point> points);

Point vertex_mean(const std::vector<Point>& walk);

}  // namespace stnf
