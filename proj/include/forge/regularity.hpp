// The perp calculus: traces and spans of point/line sets, regular pairs and
// points, symmetry groups with a given center or axis, and the local
// fixed-line property of candidate automorphism sets.
#pragma once

#include <vector>

#include "forge/gq.hpp"

namespace forge {

enum class PerpKind { Points, Lines };

struct PerpSet {
  PerpKind kind = PerpKind::Points;
  std::vector<int> members;  // sorted ids
  int size() const { return static_cast<int>(members.size()); }
};

// Intersection of stars over a nonempty homogeneous set.
PerpSet perp(const GQ& gq, PerpKind kind, const std::vector<int>& ids);
PerpSet double_perp(const GQ& gq, PerpKind kind, const std::vector<int>& ids);

// Pair regularity: |{x,y}^perp-perp| == t+1 for noncollinear points.
// Throws InputError on collinear input.
bool is_regular_pair(const GQ& gq, int x, int y);
bool is_regular_point(const GQ& gq, int x);

// Dual notions via the transposed geometry.
bool is_regular_line(const GQ& gq, int l);

struct SymmetryGroup {
  int center_or_axis = 0;
  PerpKind kind = PerpKind::Points;
  std::vector<GeometryMap> maps;  // closed under composition, identity first
  int size() const { return static_cast<int>(maps.size()); }
};

// Filters the candidate maps down to symmetries with the given center and
// closes them under composition. Candidates must be automorphisms.
SymmetryGroup symmetry_group(const GQ& gq, int x, const std::vector<GeometryMap>& candidates);

// A center of symmetry relative to the candidates: |S(x)| == t. When true,
// the necessary regularity of x is asserted.
bool is_center_of_symmetry(const GQ& gq, int x, const std::vector<GeometryMap>& candidates);

SymmetryGroup line_symmetry_group(const GQ& gq, int l,
                                  const std::vector<GeometryMap>& candidates);
bool is_axis_of_symmetry(const GQ& gq, int l, const std::vector<GeometryMap>& candidates);

// The local fixed-line property: every candidate map that fixes a point
// y != x collinear with x also fixes the line xy pointwise. When `line` is
// given (a line through x) only that line is inspected.
bool check_star_property(const GQ& gq, const std::vector<GeometryMap>& candidates,
                         int x, int line = -1);

}  // namespace forge
