#include "doctest.h"
#include "forge/subgq.hpp"
#include "forge/suites.hpp"

#include <set>

using namespace forge;

namespace {

struct Pipeline44 {
  EgqRealization egq;
  Subgroup s;
  AffinePlane plane;
  PlaneTranslationGroup tgroup;
  int z;

  static const Pipeline44& get() {
    static const Pipeline44 p = [] {
      EgqRealization egq = gq_from_kantor(seeded_family_44());
      Subgroup s = symmetry_subgroup_in_action(egq.gq, egq.group, egq.action, 0);
      AffinePlane plane = derived_plane(egq.gq, 0);
      PlaneTranslationGroup tgroup =
          plane_translation_group(plane, egq.gq, egq.group, egq.action, s);
      int z = egq.affine_point(0);
      return Pipeline44{std::move(egq), std::move(s), std::move(plane),
                        std::move(tgroup), z};
    }();
    return p;
  }
};

}  // namespace

TEST_CASE("seeded (4,4) family and its quadrangle") {
  const auto& p = Pipeline44::get();
  CHECK(p.egq.gq.s() == 4);
  CHECK(p.egq.gq.t() == 4);
  CHECK(p.egq.gq.num_points() == 85);
  CHECK(p.egq.gq.num_lines() == 85);
  CHECK(p.s.size() == 4);
  CHECK(p.plane.order == 4);
  CHECK(is_regular_point(p.egq.gq, 0));
  CHECK(is_center_of_symmetry(p.egq.gq, 0, p.egq.action));
}

TEST_CASE("subquadrangle extraction from one subplane") {
  const auto& p = Pipeline44::get();
  std::vector<int> key = perp(p.egq.gq, PerpKind::Points, {0, p.z}).members;
  int bp = p.plane.point_by_key(key);
  REQUIRE(bp >= 0);
  auto subplanes = find_subplanes(p.plane, p.tgroup, 2, bp);
  REQUIRE(subplanes.size() == 30);

  auto res = subgq_from_subplane(p.egq.gq, p.egq.group, p.egq.action, p.s, 0, p.z,
                                 p.plane, p.tgroup, subplanes.front());
  CHECK(res.r == 2);
  CHECK(res.sigma == 2);
  CHECK(res.sigma_equals_r);
  CHECK(res.kprime.size() == 8);  // r^2 * sigma
  CHECK(res.family_report.all_pass());
  CHECK(res.family.type.u == 2);
  CHECK(res.family.type.v == 2);
  CHECK_FALSE(res.improper);
  // The symmetry subgroup does not land inside K' here.
  CHECK_FALSE(res.s_inside_kprime);
  CHECK(res.sub_egq.gq.num_points() == 15);

  // Embedded points/lines are distinct parent elements preserving incidence.
  std::set<int> pts(res.point_embedding.begin(), res.point_embedding.end());
  CHECK(pts.size() == 15);
  std::set<int> lns(res.line_embedding.begin(), res.line_embedding.end());
  CHECK(lns.size() == 15);
  CHECK(res.point_embedding[0] == 0);

  // Starred members pairwise intersect in the kernel.
  for (size_t i = 0; i < res.family.fstar.size(); ++i)
    for (size_t j = i + 1; j < res.family.fstar.size(); ++j)
      CHECK(res.family.fstar[i].intersect(res.family.fstar[j]).size() == res.sigma);

  // W(2) reference comparison.
  auto iso = gq_isomorphic(res.sub_egq.gq, classical_reference(2).gq);
  CHECK(iso.status == IsoResult::Status::Found);
}

TEST_CASE("improper subplane reproduces the parent") {
  const auto& p = Pipeline44::get();
  std::vector<int> key = perp(p.egq.gq, PerpKind::Points, {0, p.z}).members;
  int bp = p.plane.point_by_key(key);
  auto improper = find_subplanes(p.plane, p.tgroup, 4, bp);
  REQUIRE(improper.size() == 1);
  auto res = subgq_from_subplane(p.egq.gq, p.egq.group, p.egq.action, p.s, 0, p.z,
                                 p.plane, p.tgroup, improper.front());
  CHECK(res.improper);
  CHECK(res.r == 4);
  CHECK(res.sigma == 4);
  CHECK(res.kprime.size() == 64);
  CHECK(res.sprime.members() == p.s.members());
  CHECK(res.s_inside_kprime);
  CHECK(res.sub_egq.gq.num_points() == 85);
  // The embedding is a bijection onto the parent.
  std::set<int> pts(res.point_embedding.begin(), res.point_embedding.end());
  CHECK(pts.size() == 85);
}

TEST_CASE("subplane basepoint mismatch is rejected") {
  const auto& p = Pipeline44::get();
  // Grow subplanes from a plane point that is not the trace of {x,z}.
  std::vector<int> key = perp(p.egq.gq, PerpKind::Points, {0, p.z}).members;
  int bp = p.plane.point_by_key(key);
  int other = bp == 0 ? 1 : 0;
  auto subplanes = find_subplanes(p.plane, p.tgroup, 2, other);
  REQUIRE(!subplanes.empty());
  bool found_mismatch = false;
  for (const auto& sp : subplanes) {
    if (std::binary_search(sp.parent_points.begin(), sp.parent_points.end(), bp)) continue;
    found_mismatch = true;
    CHECK_THROWS_AS(subgq_from_subplane(p.egq.gq, p.egq.group, p.egq.action, p.s, 0,
                                        p.z, p.plane, p.tgroup, sp),
                    InputError);
    break;
  }
  CHECK(found_mismatch);
}

TEST_CASE("classical subquadrangles of the (4,4) parent") {
  const auto& p = Pipeline44::get();
  auto results = classical_subgqs(p.egq.gq, p.egq.group, p.egq.action, p.s, 0, p.z);
  CHECK(results.size() == 30);
  for (const auto& res : results) {
    CHECK(res.r == 2);
    CHECK(res.sigma == 2);
    CHECK(res.family_report.all_pass());
  }
}

TEST_CASE("classical subquadrangles at prime order are improper") {
  // Order (2,2): the only order-2 subplane is the whole plane.
  auto egq2 = gq_from_kantor(builtin_family_22());
  auto s2 = symmetry_subgroup_in_action(egq2.gq, egq2.group, egq2.action, 0);
  auto r2 = classical_subgqs(egq2.gq, egq2.group, egq2.action, s2, 0, egq2.affine_point(0));
  REQUIRE(r2.size() == 1);
  CHECK(r2[0].improper);
  CHECK(r2[0].r == 2);

  // Order (3,3) from the Heisenberg group: h = 1 admits no proper subplane.
  auto egq3 = gq_from_kantor(builtin_family_33());
  auto s3 = symmetry_subgroup_in_action(egq3.gq, egq3.group, egq3.action, 0);
  auto r3 = classical_subgqs(egq3.gq, egq3.group, egq3.action, s3, 0, egq3.affine_point(0));
  REQUIRE(r3.size() == 1);
  CHECK(r3[0].improper);
  CHECK(r3[0].r == 3);
  CHECK(r3[0].sigma == 3);
}

TEST_CASE("non prime power order is reported") {
  const auto& p = Pipeline44::get();
  // classical_subgqs validates the order before anything else; feed it a
  // doctored t by transposing nothing — use a direct call with the real gq
  // but a fake prime check through the public surface: only reachable via
  // the prime_power_base contract.
  CHECK(prime_power_base(4) == 2);
  CHECK(prime_power_base(6) == 0);
  CHECK(prime_power_base(12) == 0);
  // The guard itself:
  CHECK_THROWS_AS(classical_reference(5), InputError);
  (void)p;
}

TEST_CASE("subgroup-in-action helper") {
  const auto& fam = builtin_family_22();
  auto egq = gq_from_kantor(fam);
  auto s = symmetry_subgroup_in_action(egq.gq, egq.group, egq.action, 0);
  CHECK(s.size() == 2);
  // The symmetry subgroup is the common intersection of the starred members.
  auto common = fam.fstar[0].intersect(fam.fstar[1]);
  CHECK(s.members() == common.members());
}
