#pragma once

#include <cstddef>
#include <vector>

#include "stnf/geom/primitives.hpp"

namespace stnf {

// Doubly connected edge list. Half-edges 2k and 2k+1 are twins; each face
// lies to the left of its half-edges. Face 0 is the unbounded face.
struct Dcel {
  struct Vertex {
    Point p;
    int edge = -1;  // one outgoing half-edge
  };
  struct HalfEdge {
    int origin = -1;
    int twin = -1;
    int face = -1;
    int next = -1;
    int prev = -1;
  };
  struct Face {
    int outer = -1;          // a half-edge of the outer boundary; -1 when unbounded
    std::vector<int> inner;  // one half-edge per hole boundary
  };

  static constexpr int kUnbounded = 0;

  std::vector<Vertex> vertices;
  std::vector<HalfEdge> half_edges;
  std::vector<Face> faces;

  int dest(int e) const { return half_edges[half_edges[e].twin].origin; }
  std::size_t edge_count() const { return half_edges.size() / 2; }
  std::size_t component_count() const;
  // Half-edges of the cycle containing e.
  std::vector<int> cycle(int e) const;
  // Origins along the outer boundary of a bounded face.
  std::vector<Point> outer_walk(int face) const;
  // Throws std::logic_error when a structural invariant is broken.
  void check() const;
};

struct ElementaryEdges {
  std::vector<Segment> edges;
  // Input indices of the segments that contain each elementary edge.
  std::vector<std::vector<int>> sources;
};

// Splits segments at every mutual intersection or touching point and merges
// overlapping pieces. Zero-length inputs are ignored.
ElementaryEdges split_segments(const std::vector<Segment>& segments);

// Builds the DCEL of a planar straight-line graph whose edges meet only at
// endpoints.
Dcel build_dcel(const std::vector<Segment>& edges);

// Line segment of l inside a convex ccw polygon, if of positive length.
std::optional<Segment> clip_to_convex(const Line& l, const std::vector<Point>& polygon);

struct Arrangement {
  Dcel dcel;
  // Indices of the input lines through each vertex (hull sides excluded).
  std::vector<std::vector<int>> vertex_lines;
};

// Arrangement of lines clipped to a convex hull. Throws std::invalid_argument
// ("degenerate input handled upstream") for hulls with fewer than 3 vertices.
Arrangement arrangement_dcel(const std::vector<Line>& lines, const std::vector<Point>& hull);

}  // namespace stnf
