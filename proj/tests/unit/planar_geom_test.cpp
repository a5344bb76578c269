#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "stnf/geom/subdivision.hpp"

namespace stnf {
namespace {

Rational q(long n, long d = 1) { return make_rational(n, d); }
Point pt(Rational x, Rational y) { return {std::move(x), std::move(y)}; }
Triangle tri(Point a, Point b, Point c) { return Triangle{{std::move(a), std::move(b), std::move(c)}}; }

std::set<std::pair<Point, Point>> segment_set(const std::vector<BoundaryEdge>& edges) {
  std::set<std::pair<Point, Point>> out;
  for (const auto& e : edges) out.insert(std::minmax(e.segment.a, e.segment.b));
  return out;
}

// Hull vertices by brute force: a is a vertex iff some b makes every other
// point lie left of or on [a, b], with collinear points inside the segment.
std::set<Point> brute_hull(const std::vector<Point>& pts) {
  std::set<Point> out;
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      if (a == b) continue;
      bool edge = true;
      for (const auto& p : pts) {
        const int s = sgn(cross(a, b, p));
        if (s < 0 || (s == 0 && !on_segment(p, {a, b}))) {
          edge = false;
          break;
        }
      }
      if (edge) {
        out.insert(a);
        out.insert(b);
      }
    }
  }
  return out;
}

TEST(Orientation, Examples) {
  EXPECT_EQ(orientation(pt(0, 0), pt(1, 0), pt(0, 1)), Orientation::ccw);
  EXPECT_EQ(orientation(pt(0, 0), pt(1, 1), pt(2, 2)), Orientation::collinear);
  EXPECT_EQ(orientation(pt(0, 0), pt(0, 1), pt(1, 0)), Orientation::cw);
}

TEST(Line, CanonicalScaling) {
  const Line l = line_through(pt(0, 2), pt(1, 4));  // y = 2x + 2
  EXPECT_EQ(l.a, q(1));
  EXPECT_EQ(l.b, q(-1, 2));
  EXPECT_EQ(l.c, q(-1));
  EXPECT_EQ(line_through(pt(1, 4), pt(0, 2)), l);
  const Line h = line_through(pt(-1, 0), pt(1, 0));
  EXPECT_EQ(h.a, q(0));
  EXPECT_EQ(h.b, q(1));
  EXPECT_EQ(h.c, q(0));
}

TEST(Triangle, CanonicalForms) {
  const Triangle t = tri(pt(2, 0), pt(0, 0), pt(0, 2));
  const auto can = canonicalize(t);
  EXPECT_EQ(can.triangle, tri(pt(0, 0), pt(2, 0), pt(0, 2)));
  for (int i = 0; i < 3; ++i) EXPECT_EQ(can.triangle.corners[i], t.corners[can.perm[i]]);
  EXPECT_EQ(canonical(tri(pt(3, 3), pt(1, 1), pt(2, 2))), tri(pt(1, 1), pt(3, 3), pt(3, 3)));
  EXPECT_EQ(tri(pt(1, 1), pt(1, 1), pt(1, 1)).degeneracy(), Degeneracy::point);
}

TEST(ConvexHull, Examples) {
  EXPECT_EQ(convex_hull({pt(0, 0), pt(1, 0), pt(0, 1)}),
            (std::vector<Point>{pt(0, 0), pt(1, 0), pt(0, 1)}));
  const auto square = convex_hull({pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2), pt(1, 1)});
  EXPECT_EQ(square.size(), 4u);
  EXPECT_EQ(std::count(square.begin(), square.end(), pt(1, 1)), 0);
  EXPECT_EQ(convex_hull({pt(0, 0), pt(1, 1), pt(2, 2)}).size(), 2u);
  EXPECT_EQ(convex_hull({pt(5, 5)}).size(), 1u);
}

TEST(ConvexHull, SnapshotCornersMatchBruteForce) {
  // Both atoms of the two-triangle object at t = 1/4.
  const std::vector<Point> pts{pt(-1, 0), pt(1, 0), pt(0, 2), pt(q(-11, 4), 1), pt(q(-3, 4), 1),
                               pt(q(-7, 4), 3)};
  const auto hull = convex_hull(pts);
  EXPECT_EQ(std::set<Point>(hull.begin(), hull.end()), brute_hull(pts));
  EXPECT_EQ(hull.size(), 5u);
  for (std::size_t i = 0; i < hull.size(); ++i)
    EXPECT_EQ(orientation(hull[i], hull[(i + 1) % hull.size()], hull[(i + 2) % hull.size()]),
              Orientation::ccw);
}

TEST(ConvexHull, AffineEquivariant) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> c(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<Point> pts;
    for (int i = 0; i < 12; ++i) pts.push_back(pt(q(c(rng), 3), q(c(rng), 2)));
    Rational a11 = c(rng), a12 = c(rng), a21 = c(rng), a22 = c(rng);
    if (sgn(a11 * a22 - a12 * a21) == 0) continue;
    const auto map = [&](const Point& p) {
      return pt(a11 * p.x + a12 * p.y + 1, a21 * p.x + a22 * p.y - q(1, 3));
    };
    std::vector<Point> image;
    for (const auto& p : pts) image.push_back(map(p));
    std::set<Point> expected;
    for (const auto& p : convex_hull(pts)) expected.insert(map(p));
    const auto got = convex_hull(image);
    EXPECT_EQ(std::set<Point>(got.begin(), got.end()), expected);
  }
}

TEST(BoundarySegments, SingleTriangle) {
  EXPECT_EQ(boundary_segments({tri(pt(0, 0), pt(1, 0), pt(0, 1))}).size(), 3u);
}

TEST(BoundarySegments, SquareDiagonalExcluded) {
  const auto edges = boundary_segments(
      {tri(pt(0, 0), pt(2, 0), pt(2, 2)), tri(pt(0, 0), pt(0, 2), pt(2, 2))});
  EXPECT_EQ(edges.size(), 4u);
  for (const auto& e : edges) EXPECT_FALSE(on_segment(pt(1, 1), e.segment));
}

TEST(BoundarySegments, DisjointSnapshotKeepsAllSix) {
  const auto edges = boundary_segments({tri(pt(-1, 0), pt(1, 0), pt(0, 2)),
                                        tri(pt(q(-11, 4), 1), pt(q(-3, 4), 1), pt(q(-7, 4), 3))});
  EXPECT_EQ(edges.size(), 6u);
}

TEST(BoundarySegments, CevianSplitKeepsCarriersAndCoverage) {
  const Triangle big = tri(pt(0, 0), pt(4, 0), pt(1, 3));
  const Triangle other = tri(pt(2, 1), pt(6, 1), pt(5, 4));
  // Split big along the cevian from (1,3) to (2,0).
  const auto a = boundary_segments({big, other});
  const auto b = boundary_segments(
      {tri(pt(0, 0), pt(2, 0), pt(1, 3)), tri(pt(2, 0), pt(4, 0), pt(1, 3)), other});
  std::set<Line> la, lb;
  for (const auto& e : a) la.insert(e.carrier);
  for (const auto& e : b) lb.insert(e.carrier);
  EXPECT_EQ(la, lb);
}

TEST(Subdivision, SingleTriangle) {
  const PlanarSubdivision sub({tri(pt(0, 0), pt(1, 0), pt(0, 1))});
  ASSERT_EQ(sub.dcel().faces.size(), 2u);
  EXPECT_TRUE(sub.inside(1));
  EXPECT_FALSE(sub.inside(Dcel::kUnbounded));
  sub.dcel().check();
}

TEST(Subdivision, OverlappingPairLeavesTopFaceOutside) {
  // v1=(0,2), v2=(2,2), v3=(0,0), v4=(2,0); T1=(v1,v3,v4), T2=(v2,v3,v4).
  const PlanarSubdivision sub({tri(pt(0, 2), pt(0, 0), pt(2, 0)), tri(pt(2, 2), pt(0, 0), pt(2, 0))});
  sub.dcel().check();
  const Location top = sub.locate(pt(1, q(3, 2)));
  ASSERT_EQ(top.kind, Location::Kind::face);
  EXPECT_FALSE(sub.inside(top.index));
  EXPECT_TRUE(sub.covers(pt(q(1, 3), 1)));
  EXPECT_TRUE(sub.covers(pt(1, q(1, 3))));
  EXPECT_FALSE(sub.covers(pt(1, q(3, 2))));
  EXPECT_TRUE(sub.covers(pt(1, 1)));
  EXPECT_FALSE(sub.covers_interior(pt(1, 1)));
}

TEST(Subdivision, SquareWithDiagonal) {
  const PlanarSubdivision sub(
      {tri(pt(0, 0), pt(2, 0), pt(2, 2)), tri(pt(0, 0), pt(0, 2), pt(2, 2))});
  int inside = 0;
  for (std::size_t f = 0; f < sub.dcel().faces.size(); ++f) inside += sub.inside(static_cast<int>(f));
  EXPECT_EQ(inside, 2);
  EXPECT_TRUE(sub.covers_interior(pt(1, 1)));
}

TEST(Subdivision, NestedTriangleHole) {
  // Outer triangle and a disjoint inner triangle that is not part of it:
  // use a ring made of the outer minus nothing, plus the inner triangle.
  const PlanarSubdivision sub({tri(pt(0, 0), pt(10, 0), pt(0, 10)), tri(pt(1, 1), pt(3, 1), pt(1, 3))});
  sub.dcel().check();
  EXPECT_TRUE(sub.covers_interior(pt(5, 1)));
  EXPECT_TRUE(sub.covers_interior(pt(q(3, 2), q(3, 2))));
  EXPECT_FALSE(sub.covers(pt(8, 8)));
}

TEST(Locate, SquareCases) {
  const PlanarSubdivision sub(
      {tri(pt(0, 0), pt(2, 0), pt(2, 2)), tri(pt(0, 0), pt(0, 2), pt(2, 2))});
  const Location in = sub.locate(pt(q(1, 2), q(1, 4)));
  ASSERT_EQ(in.kind, Location::Kind::face);
  EXPECT_TRUE(sub.inside(in.index));
  EXPECT_EQ(sub.locate(pt(1, 0)).kind, Location::Kind::edge);
  EXPECT_EQ(sub.locate(pt(2, 1)).kind, Location::Kind::edge);
  EXPECT_EQ(sub.locate(pt(2, 2)).kind, Location::Kind::vertex);
  const Location out = sub.locate(pt(5, 1));
  EXPECT_EQ(out.kind, Location::Kind::face);
  EXPECT_EQ(out.index, Dcel::kUnbounded);
}

TEST(Arrangement, NoLines) {
  const auto arr = arrangement_dcel({}, {pt(0, 0), pt(2, 0), pt(2, 2), pt(0, 2)});
  EXPECT_EQ(arr.dcel.faces.size(), 2u);
  EXPECT_EQ(arr.dcel.vertices.size(), 4u);
  EXPECT_EQ(arr.dcel.edge_count(), 4u);
  EXPECT_THROW(arrangement_dcel({}, {pt(0, 0), pt(1, 1)}), std::invalid_argument);
}

TEST(Arrangement, HalfEdgeRecordsOfTwoTriangleExample) {
  const Point v1 = pt(0, 2), v2 = pt(2, 2), v3 = pt(0, 0), v4 = pt(2, 0), v5 = pt(1, 1);
  const std::vector<Triangle> s{tri(v1, v3, v4), tri(v2, v3, v4)};
  std::set<Line> lines;
  for (const auto& e : boundary_segments(s)) lines.insert(e.carrier);
  std::vector<Point> corners{v1, v3, v4, v2};
  const auto arr = arrangement_dcel({lines.begin(), lines.end()}, convex_hull(corners));
  const Dcel& d = arr.dcel;
  d.check();
  EXPECT_EQ(d.half_edges.size(), 16u);
  EXPECT_EQ(d.faces.size(), 5u);
  std::map<std::pair<Point, Point>, int> he;
  for (std::size_t e = 0; e < d.half_edges.size(); ++e)
    he[{d.vertices[d.half_edges[e].origin].p, d.vertices[d.dest(static_cast<int>(e))].p}] =
        static_cast<int>(e);
  const auto e = [&](const Point& a, const Point& b) { return he.at({a, b}); };
  // Expected half-edge records: next and prev of each edge.
  EXPECT_EQ(d.half_edges[e(v2, v1)].next, e(v1, v5));
  EXPECT_EQ(d.half_edges[e(v1, v5)].next, e(v5, v2));
  EXPECT_EQ(d.half_edges[e(v5, v2)].next, e(v2, v1));
  EXPECT_EQ(d.half_edges[e(v1, v3)].next, e(v3, v5));
  EXPECT_EQ(d.half_edges[e(v3, v4)].next, e(v4, v5));
  EXPECT_EQ(d.half_edges[e(v4, v2)].next, e(v2, v5));
  EXPECT_EQ(d.half_edges[e(v1, v2)].next, e(v2, v4));
  EXPECT_EQ(d.half_edges[e(v1, v2)].prev, e(v3, v1));
  EXPECT_EQ(d.half_edges[e(v4, v3)].next, e(v3, v1));
  EXPECT_EQ(d.half_edges[e(v1, v2)].face, Dcel::kUnbounded);
  // The face (v1, v5, v2) lies outside the union.
  const PlanarSubdivision sub(s);
  const Point mean = vertex_mean(d.outer_walk(d.half_edges[e(v2, v1)].face));
  EXPECT_EQ(mean, pt(1, q(5, 3)));
  EXPECT_FALSE(sub.covers(mean));
}

TEST(Arrangement, TwoCrossingLines) {
  const auto arr = arrangement_dcel({line_through(pt(0, 0), pt(1, 1)), line_through(pt(0, 4), pt(4, 0))},
                                    {pt(-10, -10), pt(10, -10), pt(10, 10), pt(-10, 10)});
  arr.dcel.check();
  EXPECT_EQ(arr.dcel.faces.size() - 1, 4u);
  const long v = static_cast<long>(arr.dcel.vertices.size());
  const long e = static_cast<long>(arr.dcel.edge_count());
  EXPECT_EQ(v - e + static_cast<long>(arr.dcel.faces.size()), 2);
}

TEST(Arrangement, RandomLinesEulerConvexityAndLocation) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> c(-6, 6);
  const std::vector<Point> hull = convex_hull({pt(-8, -7), pt(9, -8), pt(7, 9), pt(-9, 6), pt(0, 11)});
  for (int trial = 0; trial < 15; ++trial) {
    std::set<Line> ls;
    for (int i = 0; i < 8; ++i) {
      const Point a = pt(c(rng), c(rng));
      const Point b = pt(c(rng), c(rng));
      if (a != b) ls.insert(line_through(a, b));
    }
    const auto arr = arrangement_dcel({ls.begin(), ls.end()}, hull);
    const Dcel& d = arr.dcel;
    d.check();
    EXPECT_EQ(static_cast<long>(d.vertices.size()) - static_cast<long>(d.edge_count()) +
                  static_cast<long>(d.faces.size()),
              2);
    for (std::size_t f = 1; f < d.faces.size(); ++f) {
      const auto walk = d.outer_walk(static_cast<int>(f));
      for (std::size_t i = 0; i < walk.size(); ++i)
        EXPECT_NE(orientation(walk[i], walk[(i + 1) % walk.size()], walk[(i + 2) % walk.size()]),
                  Orientation::cw);
    }
    const PointLocator loc(d);
    std::uniform_int_distribution<long> r(-60, 60);
    for (int k = 0; k < 60; ++k) {
      const Point p = pt(q(r(rng), 5), q(r(rng), 5));
      const Location got = loc.locate(p);
      // Brute force: vertex, then edge, then strict containment in a face.
      Location want;
      bool found = false;
      for (std::size_t v = 0; v < d.vertices.size() && !found; ++v)
        if (d.vertices[v].p == p) want = {Location::Kind::vertex, static_cast<int>(v)}, found = true;
      for (std::size_t e = 0; e < d.half_edges.size() && !found; ++e)
        if (on_segment(p, {d.vertices[d.half_edges[e].origin].p, d.vertices[d.dest(static_cast<int>(e))].p}))
          want = {Location::Kind::edge, static_cast<int>(e)}, found = true;
      for (std::size_t f = 1; f < d.faces.size() && !found; ++f) {
        const auto walk = d.outer_walk(static_cast<int>(f));
        bool in = true;
        for (std::size_t i = 0; i < walk.size(); ++i)
          if (sgn(cross(walk[i], walk[(i + 1) % walk.size()], p)) < 0) in = false;
        if (in) want = {Location::Kind::face, static_cast<int>(f)}, found = true;
      }
      ASSERT_EQ(got.kind, want.kind) << to_string(p);
      if (got.kind == Location::Kind::edge)
        EXPECT_TRUE(got.index == want.index || got.index == d.half_edges[want.index].twin);
      else
        EXPECT_EQ(got.index, want.index) << to_string(p);
    }
  }
}

TEST(VertexMean, Examples) {
  EXPECT_EQ(vertex_mean({pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}), pt(q(1, 2), q(1, 2)));
  EXPECT_EQ(vertex_mean({pt(0, 0), pt(3, 0), pt(0, 3)}), pt(1, 1));
  const std::vector<Point> walk{pt(0, 0), pt(5, 1), pt(2, 7), pt(-1, 3)};
  const auto alpha = [](const Point& p) { return pt(2 * p.x + p.y + 1, p.y - 3); };
  std::vector<Point> image;
  for (const auto& p : walk) image.push_back(alpha(p));
  EXPECT_EQ(vertex_mean(image), alpha(vertex_mean(walk)));
}

}  // namespace
}  // namespace stnf
