// Affine and translation planes: the derived plane at a regular point, plane
// axiom verification, translation groups, spread-based construction in small
// projective spaces, and subplane search through congruence partitions.
#pragma once

#include <optional>
#include <vector>

#include "forge/gq.hpp"

namespace forge {

struct AffinePlane {
  IncidenceGeometry geom;
  int order = 0;
  std::vector<std::vector<int>> parallel_classes;  // partition of line ids
  std::vector<int> class_of_line;                  // line id -> class index

  // Derived planes remember their origin in the quadrangle:
  std::vector<std::vector<int>> point_keys;  // plane point -> GQ double-perp set
  std::vector<int> line_sources;             // plane line -> GQ point in x^perp
  std::vector<int> class_sources;            // class -> GQ line through x

  // The unique line of the given class through the given point.
  int line_through(int point, int cls) const;
  // Plane point with the given key (derived planes); -1 when absent.
  int point_by_key(const std::vector<int>& key) const;
};

struct PlaneCheck {
  bool ok = false;
  std::string failure;
  std::string detail;
};

PlaneCheck verify_affine_plane(const AffinePlane& plane);

// Derived plane at a verified regular point of a (t,t) quadrangle; points are
// the double perps of noncollinear pairs in x^perp, lines the points of
// x^perp minus x, parallel classes the lines through x. Refuses non-regular x.
AffinePlane derived_plane(const GQ& gq, int x);

struct PlaneTranslationGroup {
  GroupPtr structure;             // abstract translation group, order n^2
  std::vector<GeometryMap> maps;  // per structure element: plane point/line perms
  std::vector<Subgroup> class_stabilizers;  // T_i <= structure per parallel class

  // Derived-plane provenance (empty for spread planes):
  GroupPtr parent_group;              // the elation group K
  std::vector<int> element_to_coset;  // K element -> structure element
  std::vector<GeometryMap> element_maps;  // induced plane map per K element
};

// Induced action of the elation group on the derived plane. The kernel is
// computed and must equal the supplied symmetry subgroup; the quotient must
// act sharply transitively preserving every parallel class.
PlaneTranslationGroup plane_translation_group(const AffinePlane& plane, const GQ& gq,
                                              const GroupPtr& group,
                                              const std::vector<GeometryMap>& action,
                                              const Subgroup& s);

// --- spreads and the projective construction ----------------------------

namespace pg {

// Canonical point list of PG(d, q): normalized coordinate vectors in
// lexicographic order. Supported q: 2, 3, 4.
std::vector<std::vector<int>> points(int d, int q);

// All lines of PG(d, q) as sorted point-id sets.
std::vector<std::vector<int>> lines(int d, int q);

}  // namespace pg

struct Spread {
  int q = 0;
  int h = 0;
  // (h-1)-dimensional subspaces of PG(2h-1, q) as point-id sets, pairwise
  // disjoint and covering the space.
  std::vector<std::vector<int>> subspaces;
};

// Throws InputError unless the spread is valid.
void verify_spread(const Spread& spread);

// Lexicographically least spread of PG(3,2), found by exhaustive search over
// the 35 lines.
Spread find_spread_pg32();

struct SpreadPlane {
  AffinePlane plane;
  PlaneTranslationGroup translations;
};

// Andre/Bruck-Bose: affine points off the hyperplane at infinity, lines the
// h-spaces meeting it in a spread element. Supported for q in {2,3,4}, h <= 2.
SpreadPlane plane_from_spread(const Spread& spread);

// --- subplanes -----------------------------------------------------------

struct SubplaneResult {
  Subgroup tprime;                 // order r^2 subgroup of the translation group
  std::vector<int> class_indices;  // the r+1 parent parallel classes used
  AffinePlane subplane;            // verified plane of order r
  std::vector<int> parent_points;  // subplane point -> parent plane point
  std::vector<int> parent_lines;   // subplane line -> parent plane line
  int basepoint = 0;               // parent plane point the orbit grew from
};

// Enumerates translation subplanes of order r: order-r^2 subgroups T' whose
// basepoint orbit, with induced lines from r+1 parallel classes, forms an
// affine plane. Deterministic order; empty result is possible.
std::vector<SubplaneResult> find_subplanes(const AffinePlane& plane,
                                           const PlaneTranslationGroup& tgroup, int r,
                                           int basepoint);

}  // namespace forge
