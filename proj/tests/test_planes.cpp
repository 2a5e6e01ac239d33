#include "doctest.h"
#include "forge/field.hpp"
#include "forge/planes.hpp"
#include "forge/regularity.hpp"

#include <set>

using namespace forge;

namespace {

EgqRealization egq_22() {
  auto g = build_elementary_abelian(2, 3);
  KantorFamily fam;
  fam.group = g;
  fam.type = {2, 2};
  for (int e : {1, 2, 4}) {
    fam.f.push_back(Subgroup::from_members(g, {0, e}));
    fam.fstar.push_back(Subgroup::from_members(g, {0, e, 7 ^ e, 7}));
  }
  return gq_from_kantor(fam);
}

EgqRealization egq_33() {
  auto h3 = build_heisenberg(3);
  auto found = search_kantor_families(h3, 3, 3);
  REQUIRE(!found.families.empty());
  return gq_from_kantor(found.families.front());
}

// AG(2,4) with explicit field coordinates, for isomorphism comparisons.
IncidenceGeometry ag24() {
  const auto& f = GaloisField::get(4);
  auto pid = [](int x, int y) { return x * 4 + y; };
  std::vector<std::vector<int>> lines;
  for (int m = 0; m < 4; ++m)
    for (int b = 0; b < 4; ++b) {
      std::vector<int> line;
      for (int x = 0; x < 4; ++x) line.push_back(pid(x, f.add(f.mul(m, x), b)));
      lines.push_back(line);
    }
  for (int c = 0; c < 4; ++c) {
    std::vector<int> line;
    for (int y = 0; y < 4; ++y) line.push_back(pid(c, y));
    lines.push_back(line);
  }
  return IncidenceGeometry(16, lines);
}

}  // namespace

TEST_CASE("derived plane of the (2,2) quadrangle") {
  auto egq = egq_22();
  auto plane = derived_plane(egq.gq, 0);
  CHECK(plane.order == 2);
  CHECK(plane.geom.num_points() == 4);
  CHECK(plane.geom.num_lines() == 6);
  CHECK(plane.parallel_classes.size() == 3);
  CHECK(verify_affine_plane(plane).ok);
}

TEST_CASE("derived plane of the (3,3) Heisenberg quadrangle") {
  auto egq = egq_33();
  auto plane = derived_plane(egq.gq, 0);
  CHECK(plane.order == 3);
  CHECK(plane.geom.num_points() == 9);
  CHECK(plane.geom.num_lines() == 12);
  CHECK(verify_affine_plane(plane).ok);
}

TEST_CASE("derived plane refuses non-regular points") {
  auto g = build_elementary_abelian(3, 3);
  auto found = search_kantor_families(g, 3, 3);
  REQUIRE(!found.families.empty());
  auto egq = gq_from_kantor(found.families.front());
  CHECK_THROWS_AS(derived_plane(egq.gq, 0), InputError);
}

TEST_CASE("plane translation groups") {
  auto egq = egq_22();
  auto plane = derived_plane(egq.gq, 0);
  auto sym = symmetry_group(egq.gq, 0, egq.action);
  // Symmetry subgroup of K: elements whose maps fix the base perp pointwise.
  std::vector<int> s_members;
  for (int g = 0; g < egq.group->order(); ++g) {
    bool fixes = true;
    for (int p = 0; p < egq.gq.num_points() && fixes; ++p)
      if (egq.gq.collinear(0, p) && egq.action[g].point_perm[p] != p) fixes = false;
    if (fixes) s_members.push_back(g);
  }
  auto s = Subgroup::from_members(egq.group, s_members);
  CHECK(s.size() == 2);

  auto tgroup = plane_translation_group(plane, egq.gq, egq.group, egq.action, s);
  CHECK(tgroup.structure->order() == 4);
  CHECK(tgroup.maps.size() == 4);
  CHECK(tgroup.class_stabilizers.size() == 3);
  for (const auto& st : tgroup.class_stabilizers) CHECK(st.size() == 2);

  // Supplying the wrong kernel is rejected with a witness message.
  auto trivial = Subgroup::trivial(egq.group);
  CHECK_THROWS_AS(plane_translation_group(plane, egq.gq, egq.group, egq.action, trivial),
                  InputError);

  // The (3,3) instance: order 9 translation group on 9 points.
  auto egq3 = egq_33();
  auto plane3 = derived_plane(egq3.gq, 0);
  std::vector<int> s3_members;
  for (int g = 0; g < egq3.group->order(); ++g) {
    bool fixes = true;
    for (int p = 0; p < egq3.gq.num_points() && fixes; ++p)
      if (egq3.gq.collinear(0, p) && egq3.action[g].point_perm[p] != p) fixes = false;
    if (fixes) s3_members.push_back(g);
  }
  auto s3 = Subgroup::from_members(egq3.group, s3_members);
  auto tgroup3 = plane_translation_group(plane3, egq3.gq, egq3.group, egq3.action, s3);
  CHECK(tgroup3.structure->order() == 9);
}

TEST_CASE("projective point and line counts") {
  CHECK(pg::points(3, 2).size() == 15);
  CHECK(pg::lines(3, 2).size() == 35);
  CHECK(pg::points(2, 3).size() == 13);
  CHECK(pg::lines(2, 3).size() == 13);
  CHECK(pg::points(4, 2).size() == 31);
}

TEST_CASE("spread of PG(3,2) and its plane") {
  auto spread = find_spread_pg32();
  CHECK(spread.subspaces.size() == 5);
  verify_spread(spread);

  // Deterministic: the search always lands on the same spread.
  auto again = find_spread_pg32();
  CHECK(spread.subspaces == again.subspaces);

  auto sp = plane_from_spread(spread);
  CHECK(sp.plane.order == 4);
  CHECK(sp.plane.geom.num_points() == 16);
  CHECK(sp.plane.geom.num_lines() == 20);
  CHECK(verify_affine_plane(sp.plane).ok);
  CHECK(sp.translations.structure->order() == 16);

  // This plane is the Desarguesian AG(2,4).
  auto iso = incidence_isomorphic(sp.plane.geom, ag24());
  CHECK(iso.status == IsoResult::Status::Found);

  // Broken spreads are rejected.
  Spread bad = spread;
  bad.subspaces.pop_back();
  CHECK_THROWS_AS(verify_spread(bad), InputError);
  Spread overlap = spread;
  overlap.subspaces[4] = overlap.subspaces[0];
  CHECK_THROWS_AS(verify_spread(overlap), InputError);
}

TEST_CASE("degenerate h=1 spread gives AG(2,2)") {
  Spread s;
  s.q = 2;
  s.h = 1;
  s.subspaces = {{0}, {1}, {2}};
  auto sp = plane_from_spread(s);
  CHECK(sp.plane.order == 2);
  CHECK(sp.plane.geom.num_points() == 4);
  CHECK(sp.plane.geom.num_lines() == 6);
  CHECK(verify_affine_plane(sp.plane).ok);
}

TEST_CASE("subplanes of the order-4 spread plane") {
  auto sp = plane_from_spread(find_spread_pg32());
  auto subs = find_subplanes(sp.plane, sp.translations, 2, 0);
  // Every order-4 subgroup of the translation group other than the five
  // direction cones induces an order-2 subplane through the basepoint.
  CHECK(subs.size() == 30);
  for (size_t i = 0; i < subs.size(); ++i) {
    const auto& res = subs[i];
    CHECK(res.subplane.order == 2);
    CHECK(res.class_indices.size() == 3);
    CHECK(verify_affine_plane(res.subplane).ok);
    CHECK(std::binary_search(res.parent_points.begin(), res.parent_points.end(),
                             res.basepoint));
    // Congruence partition: the class stabilizers restricted to T' are r+1
    // order-r subgroups meeting pairwise trivially and covering T'.
    int covered = 1;
    for (int cls : res.class_indices) {
      auto inter = sp.translations.class_stabilizers[cls].intersect(res.tprime);
      CHECK(inter.size() == 2);
      covered += inter.size() - 1;
    }
    CHECK(covered == res.tprime.size());
  }

  // The improper subplane: r equal to the plane order returns the plane.
  auto improper = find_subplanes(sp.plane, sp.translations, 4, 0);
  REQUIRE(improper.size() == 1);
  CHECK(improper[0].subplane.order == 4);
  CHECK(improper[0].parent_points.size() == 16);

  // An order-2 plane only carries its improper subplane.
  auto egq = egq_22();
  auto plane2 = derived_plane(egq.gq, 0);
  std::vector<int> s_members;
  for (int g = 0; g < egq.group->order(); ++g) {
    bool fixes = true;
    for (int p = 0; p < egq.gq.num_points() && fixes; ++p)
      if (egq.gq.collinear(0, p) && egq.action[g].point_perm[p] != p) fixes = false;
    if (fixes) s_members.push_back(g);
  }
  auto tg2 = plane_translation_group(plane2, egq.gq, egq.group, egq.action,
                                     Subgroup::from_members(egq.group, s_members));
  auto only = find_subplanes(plane2, tg2, 2, 0);
  REQUIRE(only.size() == 1);
  CHECK(only[0].parent_points.size() == 4);
}
