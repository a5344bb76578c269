#include <optional>
#include <stdexcept>

#include "stnf/pipeline/pipeline.hpp"
#include "stnf/spatial/triangulate.hpp"

namespace stnf {

namespace {

struct MovingXY {
  RationalFunction x;
  RationalFunction y;
};

MovingXY rot90_about(const MovingXY& p, const MovingXY& q) {
  return {p.x - (q.y - p.y), p.y + (q.x - p.x)};
}

Point rot90_about(const Point& p, const Point& q) { return {p.x - (q.y - p.y), p.y + (q.x - p.x)}; }

// Inverse of the matrix with rows (x_k, y_k, 1).
std::array<std::array<Rational, 3>, 3> inverse_rows(const std::array<Point, 3>& p) {
  const Rational m[3][3] = {{p[0].x, p[0].y, 1}, {p[1].x, p[1].y, 1}, {p[2].x, p[2].y, 1}};
  const Rational det = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  if (sgn(det) == 0) throw std::logic_error("singular recovery system");
  std::array<std::array<Rational, 3>, 3> inv;
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) {
      const int r1 = (c + 1) % 3, r2 = (c + 2) % 3, c1 = (r + 1) % 3, c2 = (r + 2) % 3;
      inv[r][c] = (m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]) / det;
    }
  return inv;
}

TimeDepAffinity solve(const std::array<Point, 3>& ref, const std::array<MovingXY, 3>& img) {
  const auto inv = inverse_rows(ref);
  const auto row = [&](int r, bool y) {
    RationalFunction s;
    for (int k = 0; k < 3; ++k) s = s + RationalFunction(inv[r][k]) * (y ? img[k].y : img[k].x);
    return s;
  };
  TimeDepAffinity f;
  f.a11 = row(0, false);
  f.a12 = row(1, false);
  f.b1 = row(2, false);
  f.a21 = row(0, true);
  f.a22 = row(1, true);
  f.b2 = row(2, true);
  return f;
}

// Time-dependent counterparts of the constructions of one snapshot
// triangulation, built on demand.
class MovingReplay {
 public:
  MovingReplay(const SnapshotTriangulation& st, const std::vector<std::array<MovingXY, 3>>& corners)
      : st_(st), corners_(corners), lines_(st.lines.size()), vertices_(st.vertices.size()) {}

  const MovingXY& vertex(int v) {
    if (vertices_[v]) return *vertices_[v];
    const VertexOrigin& o = st_.origins[v];
    MovingXY p;
    switch (o.kind) {
      case VertexOrigin::Kind::input_corner:
        p = corners_[o.triangle][o.corner];
        break;
      case VertexOrigin::Kind::line_meet: {
        const auto& l1 = line(o.line1);
        const auto& l2 = line(o.line2);
        const RationalFunction det = l1[0] * l2[1] - l2[0] * l1[1];
        p = {(l1[2] * l2[1] - l2[2] * l1[1]) / det, (l1[0] * l2[2] - l2[0] * l1[2]) / det};
        break;
      }
      case VertexOrigin::Kind::face_mean: {
        for (int part : o.parts) {
          const MovingXY& q = vertex(part);
          p.x = p.x + q.x;
          p.y = p.y + q.y;
        }
        const Rational n(static_cast<long>(o.parts.size()));
        p.x = p.x / RationalFunction(n);
        p.y = p.y / RationalFunction(n);
        break;
      }
    }
    vertices_[v] = std::move(p);
    return *vertices_[v];
  }

 private:
  const std::array<RationalFunction, 3>& line(int l) {
    if (lines_[l]) return *lines_[l];
    const LineSource& s = st_.line_sources[l].front();
    const MovingXY& p = corners_[s.triangle][s.i];
    const MovingXY& q = corners_[s.triangle][s.j];
    const RationalFunction a = q.y - p.y;
    const RationalFunction b = p.x - q.x;
    lines_[l] = std::array<RationalFunction, 3>{a, b, a * p.x + b * p.y};
    return *lines_[l];
  }

  const SnapshotTriangulation& st_;
  const std::vector<std::array<MovingXY, 3>>& corners_;
  std::vector<std::optional<std::array<RationalFunction, 3>>> lines_;
  std::vector<std::optional<MovingXY>> vertices_;
};

}  // namespace

TimeDepAffinity recover_affinity(const Triangle& ref, const std::array<MovingPoint, 3>& corners) {
  std::array<MovingXY, 3> img;
  for (int k = 0; k < 3; ++k) img[k] = {corners[k].fx, corners[k].fy};
  switch (ref.degeneracy()) {
    case Degeneracy::full:
      return solve(ref.corners, img);
    case Degeneracy::segment: {
      int j = 1;
      while (ref.corners[j] == ref.corners[0]) ++j;
      const Point& p = ref.corners[0];
      const Point& q = ref.corners[j];
      return solve({p, q, rot90_about(p, q)}, {img[0], img[j], rot90_about(img[0], img[j])});
    }
    case Degeneracy::point:
      break;
  }
  TimeDepAffinity f;
  f.b1 = img[0].x - RationalFunction(ref.corners[0].x);
  f.b2 = img[0].y - RationalFunction(ref.corners[0].y);
  return f;
}

std::vector<TimeInterval> elements_of(const EventList& chi) {
  std::vector<TimeInterval> out;
  for (std::size_t i = 0; i < chi.size(); ++i) {
    out.push_back(TimeInterval::point(chi[i]));
    if (i + 1 < chi.size()) out.push_back(TimeInterval::open(chi[i], chi[i + 1]));
  }
  return out;
}

std::vector<AtomicObject> triangulate_steps(const GeometricObject& g, const EventList& chi,
                                            const Rational& eps) {
  std::vector<AtomicObject> out;
  for (const TimeInterval& e : elements_of(chi)) {
    if (e.is_point()) {
      const Rational t = approximate_time(e.lo, eps);
      std::vector<Triangle> s;
      for (const auto& o : g.atoms) {
        if (!o.domain.contains(e.lo)) continue;
        Triangle snap;
        for (int k = 0; k < 3; ++k) snap.corners[k] = o.f.apply(o.ref.corners[k], t);
        s.push_back(snap);
      }
      for (const auto& tri : triangulate_snapshot(s).triangles)
        out.push_back({tri, e, TimeDepAffinity::identity(), g.id, !e.lo.is_exact()});
      continue;
    }
    const Rational tm = sample_time(e.lo, e.hi);
    std::vector<Triangle> s;
    std::vector<std::array<MovingXY, 3>> corners;
    for (const auto& o : g.atoms) {
      if (!o.domain.contains(tm)) continue;
      const auto mc = moving_corners(o);
      corners.push_back({MovingXY{mc[0].fx, mc[0].fy}, MovingXY{mc[1].fx, mc[1].fy},
                         MovingXY{mc[2].fx, mc[2].fy}});
      s.push_back(*snapshot_atomic(o, tm));
    }
    const SnapshotTriangulation st = triangulate_snapshot(s);
    MovingReplay replay(st, corners);
    for (std::size_t t = 0; t < st.triangles.size(); ++t) {
      std::array<MovingPoint, 3> mc;
      for (int k = 0; k < 3; ++k) {
        const int v = st.corner_vertices[t][k];
        const MovingXY& p = replay.vertex(v);
        mc[k] = {p.x, p.y, e};
        if (mc[k].at(tm) != st.vertices[v]) throw std::logic_error("moving vertex replay mismatch");
      }
      out.push_back({st.triangles[t], e, recover_affinity(st.triangles[t], mc), g.id, false});
    }
  }
  return out;
}

}  // namespace stnf
