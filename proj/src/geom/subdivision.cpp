#include "stnf/geom/subdivision.hpp"

#include <algorithm>

namespace stnf {

PointLocator::PointLocator(const Dcel& dcel) : dcel_(&dcel) {
  for (std::size_t v = 0; v < dcel.vertices.size(); ++v) {
    vertex_ids_.emplace(dcel.vertices[v].p, static_cast<int>(v));
    xs_.push_back(dcel.vertices[v].p.x);
  }
  std::sort(xs_.begin(), xs_.end());
  xs_.erase(std::unique(xs_.begin(), xs_.end()), xs_.end());
  if (xs_.empty()) return;
  slabs_.assign(xs_.size() - 1, {});
  verticals_.assign(xs_.size(), {});
  const auto slab_of = [&](const Rational& x) {
    return static_cast<std::size_t>(std::lower_bound(xs_.begin(), xs_.end(), x) - xs_.begin());
  };
  std::vector<std::vector<std::pair<Rational, SlabEdge>>> keyed(slabs_.size());
  for (std::size_t e = 0; e < dcel.half_edges.size(); e += 2) {
    int h = static_cast<int>(e);
    Point a = dcel.vertices[dcel.half_edges[h].origin].p;
    Point b = dcel.vertices[dcel.dest(h)].p;
    if (a.x == b.x) {
      verticals_[slab_of(a.x)].push_back(h);
      continue;
    }
    if (b.x < a.x) {
      h = dcel.half_edges[h].twin;
      std::swap(a, b);
    }
    const Rational slope = (b.y - a.y) / (b.x - a.x);
    for (std::size_t k = slab_of(a.x); xs_[k] < b.x; ++k) {
      const Rational xm = (xs_[k] + xs_[k + 1]) / 2;
      keyed[k].push_back({a.y + slope * (xm - a.x), SlabEdge{a, b, h}});
    }
  }
  for (std::size_t k = 0; k < keyed.size(); ++k) {
    std::sort(keyed[k].begin(), keyed[k].end(),
              [](const auto& u, const auto& v) { return u.first < v.first; });
    slabs_[k].reserve(keyed[k].size());
    for (auto& kv : keyed[k]) slabs_[k].push_back(std::move(kv.second));
  }
}

Location PointLocator::locate(const Point& p) const {
  if (auto it = vertex_ids_.find(p); it != vertex_ids_.end())
    return {Location::Kind::vertex, it->second};
  if (xs_.empty() || p.x < xs_.front() || xs_.back() < p.x) return {};
  std::size_t k = static_cast<std::size_t>(
      std::upper_bound(xs_.begin(), xs_.end(), p.x) - xs_.begin() - 1);
  if (xs_[k] == p.x) {
    for (int h : verticals_[k]) {
      const Segment s{dcel_->vertices[dcel_->half_edges[h].origin].p,
                      dcel_->vertices[dcel_->dest(h)].p};
      if (on_segment(p, s)) return {Location::Kind::edge, h};
    }
  }
  if (k + 1 == xs_.size()) {
    if (k == 0) return {};
    --k;
  }
  const auto& slab = slabs_[k];
  const auto it = std::partition_point(slab.begin(), slab.end(), [&](const SlabEdge& e) {
    return sgn(cross(e.left, e.right, p)) > 0;
  });
  if (it != slab.end() && sgn(cross(it->left, it->right, p)) == 0)
    return {Location::Kind::edge, it->half_edge};
  if (it == slab.begin()) {
    if (slab.empty()) return {};
    const int below = dcel_->half_edges[dcel_->half_edges[it->half_edge].twin].face;
    return {Location::Kind::face, below};
  }
  return {Location::Kind::face, dcel_->half_edges[std::prev(it)->half_edge].face};
}

bool covers_left_side(const Triangle& t, const Point& a, const Point& b) {
  const Point m{(a.x + b.x) / 2, (a.y + b.y) / 2};
  const Point n{a.y - b.y, b.x - a.x};
  std::array<Point, 3> c = t.corners;
  if (orientation(c[0], c[1], c[2]) == Orientation::cw) std::swap(c[1], c[2]);
  for (int i = 0; i < 3; ++i) {
    const Point& p = c[i];
    const Point& q = c[(i + 1) % 3];
    const int h = sgn(cross(p, q, m));
    if (h > 0) continue;
    if (h < 0) return false;
    // On the carrier: the inward normal of this side must not oppose n.
    const Rational dot = (p.y - q.y) * n.x + (q.x - p.x) * n.y;
    if (sgn(dot) < 0) return false;
  }
  return true;
}

namespace {

std::vector<Triangle> full_only(const std::vector<Triangle>& triangles, std::vector<int>* ids) {
  std::vector<Triangle> out;
  for (std::size_t i = 0; i < triangles.size(); ++i) {
    if (triangles[i].degeneracy() != Degeneracy::full) continue;
    out.push_back(triangles[i]);
    if (ids) ids->push_back(static_cast<int>(i));
  }
  return out;
}

bool any_covers_left(const std::vector<Triangle>& full, const Point& a, const Point& b) {
  for (const auto& t : full)
    if (covers_left_side(t, a, b)) return true;
  return false;
}

std::vector<Segment> triangle_edges(const std::vector<Triangle>& full) {
  std::vector<Segment> segs;
  for (const auto& t : full)
    for (int i = 0; i < 3; ++i) segs.push_back({t.corners[i], t.corners[(i + 1) % 3]});
  return segs;
}

Dcel subdivision_dcel(const std::vector<Triangle>& full) {
  return build_dcel(split_segments(triangle_edges(full)).edges);
}

}  // namespace

PlanarSubdivision::PlanarSubdivision(const std::vector<Triangle>& triangles)
    : dcel_(subdivision_dcel(full_only(triangles, nullptr))), locator_(dcel_) {
  const std::vector<Triangle> full = full_only(triangles, nullptr);
  inside_.assign(dcel_.faces.size(), 0);
  for (std::size_t f = 1; f < dcel_.faces.size(); ++f) {
    const int e = dcel_.faces[f].outer;
    const Point& a = dcel_.vertices[dcel_.half_edges[e].origin].p;
    const Point& b = dcel_.vertices[dcel_.dest(e)].p;
    inside_[f] = any_covers_left(full, a, b) ? 1 : 0;
  }
}

bool PlanarSubdivision::covers(const Point& p) const {
  const Location loc = locate(p);
  switch (loc.kind) {
    case Location::Kind::face:
      return inside_[loc.index];
    case Location::Kind::edge:
      return inside_[dcel_.half_edges[loc.index].face] ||
             inside_[dcel_.half_edges[dcel_.half_edges[loc.index].twin].face];
    case Location::Kind::vertex: {
      const int start = dcel_.vertices[loc.index].edge;
      int e = start;
      do {
        if (inside_[dcel_.half_edges[e].face]) return true;
        e = dcel_.half_edges[dcel_.half_edges[e].twin].next;
      } while (e != start);
      return false;
    }
  }
  return false;
}

bool PlanarSubdivision::covers_interior(const Point& p) const {
  const Location loc = locate(p);
  switch (loc.kind) {
    case Location::Kind::face:
      return inside_[loc.index];
    case Location::Kind::edge:
      return inside_[dcel_.half_edges[loc.index].face] &&
             inside_[dcel_.half_edges[dcel_.half_edges[loc.index].twin].face];
    case Location::Kind::vertex: {
      const int start = dcel_.vertices[loc.index].edge;
      int e = start;
      do {
        if (!inside_[dcel_.half_edges[e].face]) return false;
        e = dcel_.half_edges[dcel_.half_edges[e].twin].next;
      } while (e != start);
      return true;
    }
  }
  return false;
}

std::vector<BoundaryEdge> boundary_segments(const std::vector<Triangle>& triangles) {
  std::vector<int> ids;
  const std::vector<Triangle> full = full_only(triangles, &ids);
  const std::vector<Segment> segs = triangle_edges(full);
  const ElementaryEdges el = split_segments(segs);
  std::vector<char> marked(segs.size(), 0);
  for (std::size_t i = 0; i < el.edges.size(); ++i) {
    const Segment& s = el.edges[i];
    const bool left = any_covers_left(full, s.a, s.b);
    const bool right = any_covers_left(full, s.b, s.a);
    if (left == right) continue;
    for (int src : el.sources[i]) marked[src] = 1;
  }
  std::vector<BoundaryEdge> out;
  for (std::size_t k = 0; k < segs.size(); ++k) {
    if (!marked[k]) continue;
    const int tri = ids[k / 3];
    out.push_back({tri, static_cast<int>(k % 3), segs[k], line_through(segs[k].a, segs[k].b)});
  }
  return out;
}

}  // namespace stnf
