// Subquadrangle extraction: restricting an elation system to a translation
// subplane of the derived plane yields a Kantor family in a subgroup, whose
// coset geometry embeds into the parent quadrangle.
#pragma once

#include "forge/planes.hpp"
#include "forge/regularity.hpp"

namespace forge {

// A family-verification failure inside the extraction machinery; this is the
// loud escalation path, never silently dropped.
struct LemmaCounterexample : InvariantError {
  using InvariantError::InvariantError;
};

struct SubGqResult {
  Subgroup kprime;                   // generated by the restricted members (in K)
  Subgroup sprime;                   // kernel of kprime on the subplane (in K)
  GroupPtr kprime_table;             // K' as a standalone group
  std::vector<int> kprime_elements;  // K'-table id -> parent element id
  KantorFamily family;               // (F', F'*) in kprime_table, type (r, sigma)
  FamilyReport family_report;
  int r = 0;
  int sigma = 0;
  bool sigma_equals_r = false;
  bool s_inside_kprime = false;  // whether S <= K' (recorded, not assumed)
  bool improper = false;         // the subplane was the whole plane
  EgqRealization sub_egq;        // coset geometry of the restricted family
  std::vector<int> point_embedding;  // sub point -> parent point
  std::vector<int> line_embedding;   // sub line -> parent line
};

// Elements of the acting group whose maps fix the star of x pointwise (the
// symmetry subgroup sitting inside the elation group).
Subgroup symmetry_subgroup_in_action(const GQ& gq, const GroupPtr& group,
                                     const std::vector<GeometryMap>& action, int x);

// Restriction along one subplane. Preconditions: (t,t) order, x a regular
// elation point with symmetry subgroup s, z not collinear with x, the
// subplane grown from the plane point of {x,z}.
SubGqResult subgq_from_subplane(const GQ& gq, const GroupPtr& group,
                                const std::vector<GeometryMap>& action,
                                const Subgroup& s, int x, int z,
                                const AffinePlane& plane,
                                const PlaneTranslationGroup& tgroup,
                                const SubplaneResult& subplane);

// Prime-order subquadrangles: derives the plane at x, enumerates order-p
// subplanes through the plane point of {x,z}, and extracts each. For
// p in {2,3} every sub-geometry is checked against the classical reference.
std::vector<SubGqResult> classical_subgqs(const GQ& gq, const GroupPtr& group,
                                          const std::vector<GeometryMap>& action,
                                          const Subgroup& s, int x, int z);

// Reference instances used by the classical checks (deterministic searches).
const EgqRealization& classical_reference(int p);  // p in {2,3}

}  // namespace forge
