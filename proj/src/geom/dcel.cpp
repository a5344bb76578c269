#include "stnf/geom/dcel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace stnf {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Counter-clockwise angular order of direction vectors starting at +x.
bool angle_less(const Point& u, const Point& v) {
  const auto half = [](const Point& w) {
    return sgn(w.y) > 0 || (sgn(w.y) == 0 && sgn(w.x) > 0) ? 0 : 1;
  };
  const int hu = half(u), hv = half(v);
  if (hu != hv) return hu < hv;
  return sgn(u.x * v.y - u.y * v.x) > 0;
}

Rational twice_area(const std::vector<Point>& pts) {
  Rational a(0);
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point& p = pts[i];
    const Point& q = pts[(i + 1) % pts.size()];
    a += p.x * q.y - p.y * q.x;
  }
  return a;
}

// Winding number test; p must not lie on the polygon boundary.
bool strictly_inside(const std::vector<Point>& poly, const Point& p) {
  int wn = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    if (a.y <= p.y) {
      if (b.y > p.y && sgn(cross(a, b, p)) > 0) ++wn;
    } else if (b.y <= p.y && sgn(cross(a, b, p)) < 0) {
      --wn;
    }
  }
  return wn != 0;
}

bool boxes_overlap(const Segment& s, const Segment& t) {
  const auto lo = [](const Rational& a, const Rational& b) { return a < b ? a : b; };
  const auto hi = [](const Rational& a, const Rational& b) { return a < b ? b : a; };
  return !(hi(s.a.x, s.b.x) < lo(t.a.x, t.b.x) || hi(t.a.x, t.b.x) < lo(s.a.x, s.b.x) ||
           hi(s.a.y, s.b.y) < lo(t.a.y, t.b.y) || hi(t.a.y, t.b.y) < lo(s.a.y, s.b.y));
}

}  // namespace

std::size_t Dcel::component_count() const {
  DisjointSets ds(vertices.size());
  for (std::size_t e = 0; e < half_edges.size(); e += 2)
    ds.unite(half_edges[e].origin, half_edges[e + 1].origin);
  std::size_t c = 0;
  for (std::size_t v = 0; v < vertices.size(); ++v)
    if (ds.find(static_cast<int>(v)) == static_cast<int>(v)) ++c;
  return c;
}

std::vector<int> Dcel::cycle(int e) const {
  std::vector<int> out;
  int cur = e;
  do {
    out.push_back(cur);
    cur = half_edges[cur].next;
    if (out.size() > half_edges.size()) throw std::logic_error("open half-edge cycle");
  } while (cur != e);
  return out;
}

std::vector<Point> Dcel::outer_walk(int face) const {
  std::vector<Point> pts;
  if (faces[face].outer < 0) return pts;
  for (int e : cycle(faces[face].outer)) pts.push_back(vertices[half_edges[e].origin].p);
  return pts;
}

void Dcel::check() const {
  const int n = static_cast<int>(half_edges.size());
  for (int e = 0; e < n; ++e) {
    const auto& h = half_edges[e];
    if (half_edges[h.twin].twin != e) throw std::logic_error("twin is not an involution");
    if (half_edges[h.next].prev != e || half_edges[h.prev].next != e)
      throw std::logic_error("next/prev are not inverse");
    if (half_edges[h.next].origin != dest(e)) throw std::logic_error("next does not chain");
    if (half_edges[h.next].face != h.face) throw std::logic_error("face changes along cycle");
    cycle(e);
  }
  const long v = static_cast<long>(vertices.size());
  const long e = static_cast<long>(edge_count());
  const long f = static_cast<long>(faces.size());
  if (v - e + f != 1 + static_cast<long>(component_count()))
    throw std::logic_error("Euler characteristic mismatch");
}

ElementaryEdges split_segments(const std::vector<Segment>& segments) {
  const std::size_t n = segments.size();
  std::vector<std::vector<Point>> cuts(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (segments[i].a == segments[i].b) continue;
    cuts[i] = {segments[i].a, segments[i].b};
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Segment& s = segments[i];
    if (s.a == s.b) continue;
    const Point d1 = s.b - s.a;
    for (std::size_t j = i + 1; j < n; ++j) {
      const Segment& t = segments[j];
      if (t.a == t.b || !boxes_overlap(s, t)) continue;
      const Point d2 = t.b - t.a;
      const Rational den = d1.x * d2.y - d1.y * d2.x;
      if (sgn(den) == 0) {
        if (orientation(s.a, s.b, t.a) != Orientation::collinear) continue;
        for (const Point& p : {t.a, t.b})
          if (on_segment(p, s)) cuts[i].push_back(p);
        for (const Point& p : {s.a, s.b})
          if (on_segment(p, t)) cuts[j].push_back(p);
        continue;
      }
      const Point w = t.a - s.a;
      const Rational u = (w.x * d2.y - w.y * d2.x) / den;
      const Rational v = (w.x * d1.y - w.y * d1.x) / den;
      if (sgn(u) < 0 || u > 1 || sgn(v) < 0 || v > 1) continue;
      const Point p = s.a + u * d1;
      cuts[i].push_back(p);
      cuts[j].push_back(p);
    }
  }
  ElementaryEdges out;
  std::map<std::pair<Point, Point>, int> index;
  for (std::size_t i = 0; i < n; ++i) {
    auto& pts = cuts[i];
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    for (std::size_t k = 0; k + 1 < pts.size(); ++k) {
      const auto key = std::make_pair(pts[k], pts[k + 1]);
      auto [it, fresh] = index.emplace(key, static_cast<int>(out.edges.size()));
      if (fresh) {
        out.edges.push_back({pts[k], pts[k + 1]});
        out.sources.emplace_back();
      }
      auto& src = out.sources[it->second];
      if (src.empty() || src.back() != static_cast<int>(i)) src.push_back(static_cast<int>(i));
    }
  }
  return out;
}

Dcel build_dcel(const std::vector<Segment>& edges) {
  Dcel d;
  std::unordered_map<Point, int, PointHash> vid;
  const auto vertex = [&](const Point& p) {
    auto [it, fresh] = vid.emplace(p, static_cast<int>(d.vertices.size()));
    if (fresh) d.vertices.push_back({p, -1});
    return it->second;
  };
  for (const auto& s : edges) {
    const int a = vertex(s.a);
    const int b = vertex(s.b);
    const int e = static_cast<int>(d.half_edges.size());
    d.half_edges.push_back({a, e + 1, -1, -1, -1});
    d.half_edges.push_back({b, e, -1, -1, -1});
  }
  const int nh = static_cast<int>(d.half_edges.size());
  std::vector<std::vector<int>> out(d.vertices.size());
  for (int e = 0; e < nh; ++e) out[d.half_edges[e].origin].push_back(e);
  std::vector<int> slot(nh);
  for (std::size_t v = 0; v < out.size(); ++v) {
    auto& list = out[v];
    const Point& o = d.vertices[v].p;
    std::sort(list.begin(), list.end(), [&](int e, int f) {
      return angle_less(d.vertices[d.dest(e)].p - o, d.vertices[d.dest(f)].p - o);
    });
    for (std::size_t k = 0; k < list.size(); ++k) slot[list[k]] = static_cast<int>(k);
    if (!list.empty()) d.vertices[v].edge = list.front();
  }
  for (int e = 0; e < nh; ++e) {
    const int t = d.half_edges[e].twin;
    const auto& list = out[d.half_edges[t].origin];
    const int k = slot[t];
    const int nxt = list[(k + static_cast<int>(list.size()) - 1) % list.size()];
    d.half_edges[e].next = nxt;
    d.half_edges[nxt].prev = e;
  }

  DisjointSets comp(d.vertices.size());
  for (int e = 0; e < nh; e += 2) comp.unite(d.half_edges[e].origin, d.half_edges[e + 1].origin);

  struct Cycle {
    int first;
    Rational area;
    std::vector<Point> pts;
  };
  std::vector<Cycle> ccw, holes;
  std::vector<char> seen(nh, 0);
  for (int e = 0; e < nh; ++e) {
    if (seen[e]) continue;
    Cycle c{e, 0, {}};
    for (int h : d.cycle(e)) {
      seen[h] = 1;
      c.pts.push_back(d.vertices[d.half_edges[h].origin].p);
    }
    c.area = twice_area(c.pts);
    (sgn(c.area) > 0 ? ccw : holes).push_back(std::move(c));
  }
  d.faces.emplace_back();
  for (const auto& c : ccw) {
    const int f = static_cast<int>(d.faces.size());
    d.faces.push_back({c.first, {}});
    for (int h : d.cycle(c.first)) d.half_edges[h].face = f;
  }
  for (const auto& hole : holes) {
    const int root = comp.find(d.half_edges[hole.first].origin);
    int best = Dcel::kUnbounded;
    const Rational* best_area = nullptr;
    for (std::size_t k = 0; k < ccw.size(); ++k) {
      if (comp.find(d.half_edges[ccw[k].first].origin) == root) continue;
      if (best_area && !(ccw[k].area < *best_area)) continue;
      if (!strictly_inside(ccw[k].pts, hole.pts.front())) continue;
      best = static_cast<int>(k) + 1;
      best_area = &ccw[k].area;
    }
    d.faces[best].inner.push_back(hole.first);
    for (int h : d.cycle(hole.first)) d.half_edges[h].face = best;
  }
  return d;
}

std::optional<Segment> clip_to_convex(const Line& l, const std::vector<Point>& polygon) {
  std::vector<Point> hits;
  const std::size_t n = polygon.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point& a = polygon[i];
    const Point& b = polygon[(i + 1) % n];
    const Rational sa = l.eval(a);
    const Rational sb = l.eval(b);
    if (sgn(sa) == 0) hits.push_back(a);
    if (sgn(sa) * sgn(sb) < 0) {
      const Rational u = sa / (sa - sb);
      hits.push_back(a + u * (b - a));
    }
  }
  if (hits.size() < 2) return std::nullopt;
  const auto [lo, hi] = std::minmax_element(hits.begin(), hits.end());
  if (*lo == *hi) return std::nullopt;
  return Segment{*lo, *hi};
}

Arrangement arrangement_dcel(const std::vector<Line>& lines, const std::vector<Point>& hull) {
  if (hull.size() < 3) throw std::invalid_argument("degenerate input handled upstream");
  std::vector<Segment> base;
  std::vector<int> base_line;
  for (std::size_t i = 0; i < hull.size(); ++i) {
    base.push_back({hull[i], hull[(i + 1) % hull.size()]});
    base_line.push_back(-1);
  }
  for (std::size_t k = 0; k < lines.size(); ++k) {
    if (auto chord = clip_to_convex(lines[k], hull)) {
      base.push_back(*chord);
      base_line.push_back(static_cast<int>(k));
    }
  }
  const ElementaryEdges el = split_segments(base);
  Arrangement arr;
  arr.dcel = build_dcel(el.edges);
  arr.vertex_lines.assign(arr.dcel.vertices.size(), {});
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    for (int half : {0, 1}) {
      const int v = arr.dcel.half_edges[2 * i + half].origin;
      for (int s : el.sources[i])
        if (base_line[s] >= 0) arr.vertex_lines[v].push_back(base_line[s]);
    }
  }
  for (auto& vl : arr.vertex_lines) {
    std::sort(vl.begin(), vl.end());
    vl.erase(std::unique(vl.begin(), vl.end()), vl.end());
  }
  return arr;
}

}  // namespace stnf
