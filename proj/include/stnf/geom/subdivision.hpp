#pragma once

#include <unordered_map>
#include <vector>

#include "stnf/geom/dcel.hpp"

namespace stnf {

struct Location {
  enum class Kind { vertex, edge, face };
  Kind kind = Kind::face;
  int index = Dcel::kUnbounded;  // vertex id, half-edge id, or face id
};

// Slab decomposition over a DCEL; O(log n) queries after O(n^2) worst-case
// preprocessing.
class PointLocator {
 public:
  explicit PointLocator(const Dcel& dcel);
  Location locate(const Point& p) const;

 private:
  struct SlabEdge {
    Point left;
    Point right;
    int half_edge;  // directed left to right; its face lies above
  };
  const Dcel* dcel_;
  std::vector<Rational> xs_;
  std::vector<std::vector<SlabEdge>> slabs_;
  std::unordered_map<Point, int, PointHash> vertex_ids_;
  // Vertical edges keyed by slab boundary index.
  std::vector<std::vector<int>> verticals_;
};

// Planar subdivision induced by the edges of the full triangles of S, with
// each face flagged by whether it lies in the union of S.
class PlanarSubdivision {
 public:
  explicit PlanarSubdivision(const std::vector<Triangle>& triangles);
  PlanarSubdivision(const PlanarSubdivision&) = delete;
  PlanarSubdivision& operator=(const PlanarSubdivision&) = delete;

  const Dcel& dcel() const { return dcel_; }
  bool inside(int face) const { return inside_[face]; }
  Location locate(const Point& p) const { return locator_.locate(p); }
  // True when p lies in the closure of an inside face.
  bool covers(const Point& p) const;
  // Interior membership of the union (boundary excluded).
  bool covers_interior(const Point& p) const;

 private:
  Dcel dcel_;
  std::vector<char> inside_;
  PointLocator locator_;
};

inline PlanarSubdivision build_subdivision(const std::vector<Triangle>& triangles) {
  return PlanarSubdivision(triangles);
}

struct BoundaryEdge {
  int triangle;
  int edge;  // corners edge and (edge + 1) % 3
  Segment segment;
  Line carrier;
};

// Full-triangle edges that contain a piece of the topological boundary of
// the union of S, in input order.
std::vector<BoundaryEdge> boundary_segments(const std::vector<Triangle>& triangles);

// Is the open side to the left of the directed segment (a -> b) near its
// midpoint covered by full triangle t?
bool covers_left_side(const Triangle& t, const Point& a, const Point& b);

}  // namespace stnf
