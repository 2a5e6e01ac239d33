#include "doctest.h"
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

EgqRealization egq_33_heisenberg() {
  auto h3 = build_heisenberg(3);
  auto found = search_kantor_families(h3, 3, 3);
  REQUIRE(!found.families.empty());
  return gq_from_kantor(found.families.front());
}

EgqRealization egq_33_elementary() {
  auto g = build_elementary_abelian(3, 3);
  auto found = search_kantor_families(g, 3, 3);
  REQUIRE(!found.families.empty());
  return gq_from_kantor(found.families.front());
}

}  // namespace

TEST_CASE("perp sizes") {
  auto egq = egq_22();
  const GQ& gq = egq.gq;

  // Singleton perp contains the point itself.
  auto self = perp(gq, PerpKind::Points, {3});
  CHECK(std::count(self.members.begin(), self.members.end(), 3) == 1);
  CHECK(self.size() == 1 + gq.s() * (gq.t() + 1));

  // Collinear pair: the joining line, s+1 points.
  int x = 0;
  int y = gq.geom().line(0)[1];
  auto collinear_perp = perp(gq, PerpKind::Points, {x, y});
  CHECK(collinear_perp.size() == gq.s() + 1);

  // Noncollinear pair: t+1 points, and the pair sits inside its double perp.
  int z = egq.affine_point(0);
  auto trace = perp(gq, PerpKind::Points, {x, z});
  CHECK(trace.size() == gq.t() + 1);
  auto span = double_perp(gq, PerpKind::Points, {x, z});
  CHECK(std::binary_search(span.members.begin(), span.members.end(), x));
  CHECK(std::binary_search(span.members.begin(), span.members.end(), z));

  CHECK_THROWS_AS(perp(gq, PerpKind::Points, {}), InputError);
  CHECK_THROWS_AS(perp(gq, PerpKind::Points, {99}), InputError);
}

TEST_CASE("perp is a Galois connection") {
  auto egq = egq_22();
  const GQ& gq = egq.gq;
  // S ⊆ S'' and antitone behavior on a few deterministic subsets.
  for (int seed = 0; seed < 5; ++seed) {
    std::vector<int> s = {seed, (seed + 3) % 15};
    std::vector<int> s2 = s;
    s2.push_back((seed + 7) % 15);
    std::set<int> set_s(s.begin(), s.end());
    std::set<int> set_s2(s2.begin(), s2.end());
    if (set_s2.size() != 3) continue;

    auto perp_s = perp(gq, PerpKind::Points, s);
    auto perp_s2 = perp(gq, PerpKind::Points, s2);
    // Antitone: S ⊆ S2 implies S2^perp ⊆ S^perp.
    CHECK(std::includes(perp_s.members.begin(), perp_s.members.end(),
                        perp_s2.members.begin(), perp_s2.members.end()));
    // S ⊆ S^perp-perp.
    auto span = double_perp(gq, PerpKind::Points, s);
    CHECK(std::includes(span.members.begin(), span.members.end(), s.begin(), s.end()));
  }
}

TEST_CASE("regularity of points") {
  auto egq = egq_22();
  // Every point of the (2,2) quadrangle is regular.
  for (int p = 0; p < egq.gq.num_points(); ++p) CHECK(is_regular_point(egq.gq, p));

  // The base point of the Heisenberg (3,3) instance is regular.
  auto h = egq_33_heisenberg();
  CHECK(is_regular_point(h.gq, 0));

  // The elementary abelian (3,3) instance has an antiregular base point:
  // double perps of noncollinear pairs have exactly 2 points.
  auto e = egq_33_elementary();
  int y = e.affine_point(0);
  auto span = double_perp(e.gq, PerpKind::Points, {0, y});
  CHECK(span.size() == 2);
  CHECK_FALSE(is_regular_pair(e.gq, 0, y));
  CHECK_FALSE(is_regular_point(e.gq, 0));

  CHECK_THROWS_AS(is_regular_pair(egq_22().gq, 0, 0), InputError);
}

TEST_CASE("symmetry groups at the base point") {
  auto egq = egq_22();
  auto sym = symmetry_group(egq.gq, 0, egq.action);
  CHECK(sym.size() == 2);  // |S(x)| = t
  CHECK(is_center_of_symmetry(egq.gq, 0, egq.action));

  auto h = egq_33_heisenberg();
  auto sym3 = symmetry_group(h.gq, 0, h.action);
  CHECK(sym3.size() == 3);
  CHECK(is_center_of_symmetry(h.gq, 0, h.action));

  // Identity-only candidates never produce a center.
  std::vector<GeometryMap> only_id = {GeometryMap::identity(15, 15)};
  CHECK_FALSE(is_center_of_symmetry(egq.gq, 0, only_id));

  // A non-automorphism candidate is rejected.
  GeometryMap bogus = GeometryMap::identity(15, 15);
  std::swap(bogus.point_perm[1], bogus.point_perm[2]);
  CHECK_THROWS_AS(symmetry_group(egq.gq, 0, {bogus}), InputError);
}

TEST_CASE("symmetries act sharply transitively on traces") {
  auto egq = egq_22();
  auto sym = symmetry_group(egq.gq, 0, egq.action);
  REQUIRE(sym.size() == egq.gq.t());
  // Pick noncollinear Y, Z in the perp of the center.
  int yy = -1, zz = -1;
  for (int p = 1; p < egq.gq.num_points() && yy < 0; ++p) {
    if (!egq.gq.collinear(0, p)) continue;
    for (int q = p + 1; q < egq.gq.num_points(); ++q)
      if (egq.gq.collinear(0, q) && !egq.gq.collinear(p, q)) {
        yy = p;
        zz = q;
        break;
      }
  }
  REQUIRE(yy >= 0);
  auto trace = perp(egq.gq, PerpKind::Points, {yy, zz});
  std::set<int> orbit;
  int probe = trace.members[1] == 0 ? trace.members[0] : trace.members[1];
  for (const auto& m : sym.maps) orbit.insert(m.point_perm[probe]);
  // Orbit of a non-center trace point covers the trace minus the center.
  CHECK(static_cast<int>(orbit.size()) == egq.gq.t());
  for (int w : orbit) CHECK(w != 0);
}

TEST_CASE("axes of symmetry through the base point") {
  auto egq = egq_22();
  // Lines through the base point are ids 0..t.
  for (int l = 0; l <= egq.gq.t(); ++l) {
    CHECK(is_axis_of_symmetry(egq.gq, l, egq.action));
    CHECK(is_regular_line(egq.gq, l));
  }
}

TEST_CASE("star property") {
  auto egq = egq_22();
  CHECK(check_star_property(egq.gq, egq.action, 0));
  CHECK(check_star_property(egq.gq, egq.action, 0, 1));
  CHECK(check_star_property(egq.gq, {GeometryMap::identity(15, 15)}, 0));

  // Heisenberg maps also satisfy it at the base point.
  auto h = egq_33_heisenberg();
  CHECK(check_star_property(h.gq, h.action, 0));

  // A full-automorphism candidate that fixes a point of a base line without
  // fixing the whole line pointwise violates the property.
  auto auts = all_automorphisms(egq.gq);
  bool found_violation = false;
  for (const auto& a : auts) {
    if (!check_star_property(egq.gq, {a}, 0)) {
      found_violation = true;
      break;
    }
  }
  CHECK(found_violation);

  CHECK_THROWS_AS(check_star_property(egq.gq, egq.action, 0, 7), InputError);
}
