// Point-line incidence geometries, generalized-quadrangle verification, the
// coset-geometry construction from a Kantor family and its inverse, geometry
// isomorphism at desk scale, and the Benson congruence check.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/kantor.hpp"

namespace forge {

class IncidenceGeometry {
 public:
  IncidenceGeometry() = default;
  // lines: per-line point id lists. Throws InputError on out-of-range ids or
  // repeated incidences within a line.
  IncidenceGeometry(int num_points, std::vector<std::vector<int>> lines);

  int num_points() const { return num_points_; }
  int num_lines() const { return static_cast<int>(lines_.size()); }
  const std::vector<int>& line(int l) const { return lines_[l]; }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& pencil(int p) const { return pencils_[p]; }
  bool incident(int p, int l) const;

  std::vector<std::string> point_labels;  // optional; empty or per-point
  std::vector<std::string> line_labels;

  const std::string& point_label(int p) const;
  const std::string& line_label(int l) const;

  // Dual geometry: points become lines and vice versa.
  IncidenceGeometry transpose() const;

 private:
  int num_points_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> pencils_;
};

struct GqCheck {
  bool ok = false;
  int s = -1, t = -1;
  // failure kinds: "empty", "irregular-line", "irregular-point", "not-thick",
  // "digon", "triangle", "no-projection"
  std::string failure;
  std::string detail;
  std::vector<int> witness_points;
  std::vector<int> witness_lines;
};

class GQ {
 public:
  GQ() = default;
  GQ(IncidenceGeometry geom, int s, int t);

  const IncidenceGeometry& geom() const { return geom_; }
  int s() const { return s_; }
  int t() const { return t_; }
  int num_points() const { return geom_.num_points(); }
  int num_lines() const { return geom_.num_lines(); }

  bool collinear(int p, int q) const;  // reflexive by convention
  const Bitset& star(int p) const { return stars_[p]; }

  // The unique point of L collinear with x; throws if x is on L.
  int projection(int x, int l) const;

  GQ transpose() const;

 private:
  IncidenceGeometry geom_;
  int s_ = 0, t_ = 0;
  std::vector<Bitset> stars_;  // collinearity masks, reflexive
};

// Axiom verification; failures are values carrying witnesses.
GqCheck verify_gq(const IncidenceGeometry& geom);

// Verifies and wraps; throws InputError when verification fails.
GQ make_gq(const IncidenceGeometry& geom);

struct GeometryMap {
  std::vector<int> point_perm;
  std::vector<int> line_perm;

  bool is_identity() const;
  static GeometryMap identity(int points, int lines);
  GeometryMap compose(const GeometryMap& then) const;  // this followed by then
  GeometryMap inverse() const;
  bool operator==(const GeometryMap& o) const = default;
  bool operator<(const GeometryMap& o) const {
    return std::tie(point_perm, line_perm) < std::tie(o.point_perm, o.line_perm);
  }
};

bool is_automorphism(const GQ& gq, const GeometryMap& map);

// A coset geometry built from a Kantor family, together with the left
// multiplication action of the group.
struct EgqRealization {
  GQ gq;
  GroupPtr group;
  KantorFamily family;
  std::vector<GeometryMap> action;  // indexed by group element
  int base_point = 0;               // the linewise-fixed point (id 0)

  int affine_point(int g) const { return affine_base + g; }
  int element_of_affine(int point) const { return point - affine_base; }
  bool is_affine(int point) const { return point >= affine_base; }
  int coset_point(int member_index, int g) const;
  int axis_line(int member_index) const { return member_index; }

  int affine_base = 0;
  std::vector<std::vector<int>> coset_index;  // per member: element -> coset slot
};

// Builds the coset geometry; verifies the GQ axioms, the automorphism
// property of every group element, and sharp transitivity away from the base
// point's perp. Throws InputError if the family fails verification.
EgqRealization gq_from_kantor(const KantorFamily& fam);

// Reverse construction: the family of line stabilizers over a base point pair
// (x linewise-fixed, y not collinear with x). Preconditions are checked.
KantorFamily kantor_from_egq(const GQ& gq, const GroupPtr& group,
                             const std::vector<GeometryMap>& action, int x, int y);

struct BensonReport {
  int f0 = 0;      // fixed points
  int f1 = 0;      // points moved to a distinct collinear point
  long long lhs = 0;  // (1+t)*f0 + f1
  long long rhs = 0;  // 1 + s*t
  int modulus = 0;    // s + t
  bool ok = false;
};

// Benson congruence (1+t)f0 + f1 ≡ 1+st (mod s+t); throws on non-automorphisms.
BensonReport benson_check(const GQ& gq, const GeometryMap& map);

struct IsoResult {
  enum class Status { Found, NonIsomorphic, Budget } status;
  std::optional<GeometryMap> map;  // gq1 -> gq2 when found
  uint64_t nodes = 0;
};

// Backtracking isomorphism search with adjacency pruning. Supported for
// orders up to (4,4).
IsoResult gq_isomorphic(const GQ& a, const GQ& b, uint64_t budget = 50'000'000);

// Generic incidence-structure isomorphism (used for plane comparisons too).
IsoResult incidence_isomorphic(const IncidenceGeometry& a, const IncidenceGeometry& b,
                               uint64_t budget = 50'000'000);

// All automorphisms by exhaustive backtracking; restricted to tiny
// geometries (at most 15 points).
std::vector<GeometryMap> all_automorphisms(const GQ& gq, uint64_t budget = 100'000'000);

}  // namespace forge
