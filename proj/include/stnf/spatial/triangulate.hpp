#pragma once

#include <array>
#include <cstddef>
#include <utility>
#include <vector>

#include "stnf/geom/primitives.hpp"

namespace stnf {

// The input edge through corners i and j of input triangle `triangle`.
struct LineSource {
  int triangle;
  int i;
  int j;
};

// How an output vertex was constructed, so that the same construction can be
// replayed on moving inputs.
struct VertexOrigin {
  enum class Kind { line_meet, input_corner, face_mean };
  Kind kind = Kind::input_corner;
  int line1 = -1;
  int line2 = -1;
  int triangle = -1;
  int corner = -1;
  std::vector<int> parts;  // vertex ids averaged by a face mean
};

struct SnapshotTriangulation {
  // Canonical triangles in canonical order.
  std::vector<Triangle> triangles;
  // Vertex id of each canonical corner.
  std::vector<std::array<int, 3>> corner_vertices;
  std::vector<Point> vertices;
  std::vector<VertexOrigin> origins;
  // Arrangement lines; the first source of each is its representative.
  std::vector<Line> lines;
  std::vector<std::vector<LineSource>> line_sources;
};

// Affine-invariant triangulation of a snapshot given as (possibly degenerate)
// triangles.
SnapshotTriangulation triangulate_snapshot(const std::vector<Triangle>& s);

struct CountBound {
  std::size_t size;
  std::size_t bound;  // 9 * (3m)^2
};

CountBound count_bound_check(const std::vector<Triangle>& s);

}  // namespace stnf
