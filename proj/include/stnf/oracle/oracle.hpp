#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "stnf/exact/rational.hpp"

// Brute-force verifiers. Deliberately independent of the geometry module:
// only the exact arithmetic layer is shared.
namespace stnf::oracle {

struct Pt {
  Rational x;
  Rational y;
};

using Tri = std::array<Pt, 3>;

// Exact area of the union of the triangles (degenerate ones contribute
// nothing), by vertical slab decomposition.
Rational union_area(const std::vector<Tri>& s);

// Sum of the individual triangle areas.
Rational area_sum(const std::vector<Tri>& s);

bool in_closed_union(const std::vector<Tri>& s, const Pt& p);
// p lies on an edge (or is a degenerate triangle's point) of some triangle.
bool on_some_boundary(const std::vector<Tri>& s, const Pt& p);

// Interiors (relative interiors for segments and points) do not meet.
bool interiors_disjoint(const Tri& a, const Tri& b);
// Index pairs violating interiors_disjoint.
std::vector<std::pair<int, int>> overlapping_pairs(const std::vector<Tri>& s);

struct MembershipVerdict {
  Pt point;
  bool in_input;
  bool in_output;
  bool on_boundary;
};

// k deterministic points in the margin-expanded bounding box of both sets.
std::vector<MembershipVerdict> membership_sample(const std::vector<Tri>& in,
                                                 const std::vector<Tri>& out, int k,
                                                 std::uint64_t seed);

// Number of verdicts off every boundary whose two memberships disagree.
int disagreements(const std::vector<MembershipVerdict>& verdicts);

}  // namespace stnf::oracle
