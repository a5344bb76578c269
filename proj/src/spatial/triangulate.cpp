#include "stnf/spatial/triangulate.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "stnf/geom/subdivision.hpp"

namespace stnf {

namespace {

struct Builder {
  SnapshotTriangulation out;
  std::unordered_map<Point, int, PointHash> ids;
  std::map<Line, int> line_ids;
  std::vector<std::pair<Triangle, std::array<int, 3>>> raw;

  int add_line(const Line& l, LineSource src) {
    auto [it, fresh] = line_ids.emplace(l, static_cast<int>(out.lines.size()));
    if (fresh) {
      out.lines.push_back(l);
      out.line_sources.emplace_back();
    }
    out.line_sources[it->second].push_back(src);
    return it->second;
  }

  int vertex(const Point& p, VertexOrigin origin) {
    auto [it, fresh] = ids.emplace(p, static_cast<int>(out.vertices.size()));
    if (fresh) {
      out.vertices.push_back(p);
      out.origins.push_back(std::move(origin));
    }
    return it->second;
  }

  void emit(int a, int b, int c) {
    raw.push_back({Triangle{{out.vertices[a], out.vertices[b], out.vertices[c]}}, {a, b, c}});
  }

  void finish() {
    std::vector<std::pair<Triangle, std::array<int, 3>>> can;
    for (const auto& [t, v] : raw) {
      const CanonicalTriangle c = canonicalize(t);
      can.push_back({c.triangle, {v[c.perm[0]], v[c.perm[1]], v[c.perm[2]]}});
    }
    std::sort(can.begin(), can.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    can.erase(std::unique(can.begin(), can.end(),
                          [](const auto& x, const auto& y) { return x.first == y.first; }),
              can.end());
    for (auto& [t, v] : can) {
      out.triangles.push_back(std::move(t));
      out.corner_vertices.push_back(v);
    }
  }
};

struct Endpoint {
  Point p;
  int triangle;
  int corner;
};

struct DegenerateSegment {
  Endpoint lo;
  Endpoint hi;
  Line carrier;
};

// Points of s (in order, endpoints included) where it meets one of the given
// lines transversally; `hit` receives the index of the line for inner points.
std::vector<std::pair<Point, int>> cut_points(const Segment& s, const Line& own,
                                              const std::vector<Line>& lines) {
  std::vector<std::pair<Point, int>> cuts{{s.a, -1}, {s.b, -1}};
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (lines[k] == own) continue;
    const auto p = intersect(own, lines[k]);
    if (!p || !on_segment(*p, s)) continue;
    cuts.push_back({*p, static_cast<int>(k)});
  }
  // Endpoint entries sort first among equal points, so provenance prefers
  // the input corner.
  std::sort(cuts.begin(), cuts.end(), [](const auto& x, const auto& y) {
    if (x.first < y.first) return true;
    if (y.first < x.first) return false;
    return x.second < y.second;
  });
  cuts.erase(std::unique(cuts.begin(), cuts.end(),
                         [](const auto& x, const auto& y) { return x.first == y.first; }),
             cuts.end());
  return cuts;
}

Point midpoint(const Point& a, const Point& b) { return {(a.x + b.x) / 2, (a.y + b.y) / 2}; }

}  // namespace

SnapshotTriangulation triangulate_snapshot(const std::vector<Triangle>& s) {
  Builder b;
  if (s.empty()) return b.out;
  std::vector<Triangle> full;
  for (const auto& t : s)
    if (t.degeneracy() == Degeneracy::full) full.push_back(t);
  const PlanarSubdivision sub(full);

  for (const auto& e : boundary_segments(s)) b.add_line(e.carrier, {e.triangle, e.edge, (e.edge + 1) % 3});
  const std::vector<Line> boundary_lines = b.out.lines;

  // Degenerate segments with a piece outside the closed union.
  std::vector<DegenerateSegment> loose;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].degeneracy() != Degeneracy::segment) continue;
    const CanonicalTriangle c = canonicalize(s[i]);
    const Endpoint lo{c.triangle.corners[0], static_cast<int>(i), c.perm[0]};
    const Endpoint hi{c.triangle.corners[1], static_cast<int>(i), c.perm[1]};
    const Line carrier = line_through(lo.p, hi.p);
    const auto cuts = cut_points({lo.p, hi.p}, carrier, boundary_lines);
    bool uncovered = false;
    for (std::size_t k = 0; k + 1 < cuts.size() && !uncovered; ++k)
      uncovered = !sub.covers(midpoint(cuts[k].first, cuts[k + 1].first));
    if (!uncovered) continue;
    loose.push_back({lo, hi, carrier});
    b.add_line(carrier, {static_cast<int>(i), lo.corner, hi.corner});
  }

  // Merge collinear overlapping loose segments into maximal ones.
  std::sort(loose.begin(), loose.end(), [](const DegenerateSegment& x, const DegenerateSegment& y) {
    if (!(x.carrier == y.carrier)) return x.carrier < y.carrier;
    return x.lo.p < y.lo.p;
  });
  std::vector<DegenerateSegment> merged;
  for (const auto& d : loose) {
    if (!merged.empty() && merged.back().carrier == d.carrier && !(merged.back().hi.p < d.lo.p)) {
      if (merged.back().hi.p < d.hi.p) merged.back().hi = d.hi;
      continue;
    }
    merged.push_back(d);
  }
  for (const auto& d : merged) {
    const int own = b.line_ids.at(d.carrier);
    const auto cuts = cut_points({d.lo.p, d.hi.p}, d.carrier, b.out.lines);
    std::vector<int> vid;
    for (const auto& [p, line] : cuts) {
      VertexOrigin o;
      if (p == d.lo.p || p == d.hi.p) {
        const Endpoint& e = p == d.lo.p ? d.lo : d.hi;
        o.kind = VertexOrigin::Kind::input_corner;
        o.triangle = e.triangle;
        o.corner = e.corner;
      } else {
        o.kind = VertexOrigin::Kind::line_meet;
        o.line1 = std::min(own, line);
        o.line2 = std::max(own, line);
      }
      vid.push_back(b.vertex(p, o));
    }
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k)
      if (!sub.covers(midpoint(cuts[k].first, cuts[k + 1].first))) b.emit(vid[k], vid[k + 1], vid[k + 1]);
  }

  // Isolated points.
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i].degeneracy() != Degeneracy::point) continue;
    const Point& p = s[i].corners[0];
    if (sub.covers(p)) continue;
    bool on_seg = false;
    for (const auto& t : s)
      if (t.degeneracy() == Degeneracy::segment && contains_closed(t, p)) on_seg = true;
    if (on_seg) continue;
    VertexOrigin o;
    o.triangle = static_cast<int>(i);
    o.corner = 0;
    const int v = b.vertex(p, o);
    b.emit(v, v, v);
  }

  if (!full.empty()) {
    std::vector<Point> corners;
    for (const auto& t : s) corners.insert(corners.end(), t.corners.begin(), t.corners.end());
    const Arrangement arr = arrangement_dcel(b.out.lines, convex_hull(corners));
    const Dcel& d = arr.dcel;
    const auto face_inside = [&](const Point& m) {
      const Location loc = sub.locate(m);
      if (loc.kind == Location::Kind::face) return sub.inside(loc.index);
      return sub.covers(m);
    };
    for (std::size_t f = 1; f < d.faces.size(); ++f) {
      const std::vector<int> walk = d.cycle(d.faces[f].outer);
      std::vector<Point> pts;
      for (int h : walk) pts.push_back(d.vertices[d.half_edges[h].origin].p);
      const Point mean = vertex_mean(pts);
      if (!face_inside(mean)) continue;
      std::vector<int> vid;
      for (int h : walk) {
        const int dv = d.half_edges[h].origin;
        const auto& vl = arr.vertex_lines[dv];
        if (vl.size() < 2) throw std::logic_error("inside face vertex on fewer than two lines");
        VertexOrigin o;
        o.kind = VertexOrigin::Kind::line_meet;
        o.line1 = vl[0];
        o.line2 = vl[1];
        vid.push_back(b.vertex(d.vertices[dv].p, o));
      }
      VertexOrigin mo;
      mo.kind = VertexOrigin::Kind::face_mean;
      mo.parts = vid;
      const int m = b.vertex(mean, mo);
      for (std::size_t k = 0; k < vid.size(); ++k) b.emit(vid[k], vid[(k + 1) % vid.size()], m);
    }
  }
  b.finish();
  return b.out;
}

CountBound count_bound_check(const std::vector<Triangle>& s) {
  const std::size_t m = s.size();
  return {triangulate_snapshot(s).triangles.size(), 9 * (3 * m) * (3 * m)};
}

}  // namespace stnf
