#include "doctest.h"
#include "forge/group.hpp"

#include <set>

using namespace forge;

TEST_CASE("elementary abelian builders") {
  auto g = build_elementary_abelian(2, 3);
  CHECK(g->order() == 8);
  CHECK(exponent(g) == 2);
  CHECK(center(g).size() == 8);  // abelian group equals its center

  auto c2 = build_elementary_abelian(2, 1);
  CHECK(c2->order() == 2);

  auto g27 = build_elementary_abelian(3, 3);
  CHECK(g27->order() == 27);
  for (int a = 1; a < 27; ++a) CHECK(g27->element_order(a) == 3);

  CHECK_THROWS_AS(build_elementary_abelian(4, 2), InputError);   // not prime
  CHECK_THROWS_AS(build_elementary_abelian(2, 13), InputError);  // cap
}

TEST_CASE("heisenberg groups") {
  auto h3 = build_heisenberg(3);
  CHECK(h3->order() == 27);
  CHECK(center(h3).size() == 3);
  CHECK(exponent(h3) == 3);
  CHECK_FALSE(h3->is_abelian());

  auto h2 = build_heisenberg(2);
  CHECK(h2->order() == 8);
  CHECK(center(h2).size() == 2);
  CHECK(groups_isomorphic(h2, build_dihedral(8)));

  auto h4 = build_heisenberg(4);
  CHECK(h4->order() == 64);
  CHECK(center(h4).size() == 4);
  auto q = build_quotient(h4, center(h4));
  CHECK(exponent(q.table) == 2);

  CHECK_THROWS_AS(build_heisenberg(6), InputError);
}

TEST_CASE("catalog builders") {
  auto v4 = direct_product(build_cyclic(2), build_cyclic(2));
  CHECK(v4->order() == 4);
  CHECK(exponent(v4) == 2);

  auto q8 = build_quaternion8();
  int involutions = 0;
  for (int a = 1; a < 8; ++a)
    if (q8->mul(a, a) == 0) ++involutions;
  CHECK(involutions == 1);

  auto d8c2 = direct_product(build_dihedral(8), build_cyclic(2));
  CHECK(d8c2->order() == 16);
  CHECK_FALSE(d8c2->is_abelian());
}

TEST_CASE("table validation") {
  // Non-Latin row.
  CHECK_THROWS_AS(GroupTable::make("bad", {{0, 1}, {1, 1}}), InputError);
  // Latin square that is not associative: ids relabeled so row/col 0 are
  // identity but the rest breaks associativity.
  std::vector<std::vector<int>> rows = {
      {0, 1, 2, 3, 4},
      {1, 0, 3, 4, 2},
      {2, 4, 0, 1, 3},
      {3, 2, 4, 0, 1},
      {4, 3, 1, 2, 0},
  };
  CHECK_THROWS_AS(GroupTable::make("bad5", rows), InputError);
  // A good one round-trips.
  auto c3 = build_cyclic(3);
  auto again = GroupTable::make("C3", c3->rows());
  CHECK(again->order() == 3);
}

TEST_CASE("center / commutator / frattini / exponent") {
  auto ea = build_elementary_abelian(2, 3);
  CHECK(commutator_subgroup(ea).size() == 1);
  CHECK(frattini(ea).size() == 1);
  CHECK(exponent(ea) == 2);
  CHECK(is_elementary_abelian(ea));

  auto h3 = build_heisenberg(3);
  auto comm = commutator_subgroup(h3);
  CHECK(comm.size() == 3);
  CHECK(comm.members() == center(h3).members());
  CHECK(exponent(h3) == 3);

  auto q8 = build_quaternion8();
  auto phi = frattini(q8);
  CHECK(phi.size() == 2);
  CHECK(phi.members() == center(q8).members());
  CHECK(exponent(q8) == 4);

  auto d8 = build_dihedral(8);
  CHECK(center(d8).size() == 2);
}

TEST_CASE("centralizer and class sizes") {
  auto ea = build_elementary_abelian(3, 2);
  auto whole = Subgroup::whole(ea);
  for (int a = 0; a < ea->order(); ++a)
    CHECK(centralizer(whole, a).size() == ea->order());

  auto h3 = build_heisenberg(3);
  auto z = center(h3);
  int noncentral = -1;
  for (int a = 1; a < 27; ++a)
    if (!z.contains(a)) {
      noncentral = a;
      break;
    }
  CHECK(centralizer(Subgroup::whole(h3), noncentral).size() == 9);
  CHECK(conjugacy_class_size(h3, noncentral) == 3);

  auto d8 = build_dihedral(8);
  // id 4 is the reflection s.
  CHECK(d8->mul(4, 4) == 0);
  CHECK(conjugacy_class_size(d8, 4) == 2);

  // |G| = class * centralizer for every element of every catalog group.
  for (auto g : {build_dihedral(8), build_quaternion8(), build_heisenberg(3)})
    for (int a = 0; a < g->order(); ++a)
      CHECK(conjugacy_class_size(g, a) * centralizer(Subgroup::whole(g), a).size() ==
            g->order());
}

TEST_CASE("cosets, quotients, involution stats") {
  auto ea = build_elementary_abelian(2, 3);
  auto h = Subgroup::generated(ea, std::vector<int>{1});
  auto cosets = left_cosets(ea, h);
  CHECK(cosets.size() == 4);

  for (auto g : {build_dihedral(8), build_quaternion8(), build_heisenberg(3),
                 build_elementary_abelian(2, 3)})
    CHECK(quotient_is_abelian(g, commutator_subgroup(g)));

  auto d8 = build_dihedral(8);
  auto refl = Subgroup::generated(d8, std::vector<int>{4});
  CHECK_FALSE(refl.is_normal());
  CHECK_THROWS_AS(quotient_is_abelian(d8, refl), InputError);

  auto ea4 = build_elementary_abelian(2, 2);
  auto st = involution_stats(Subgroup::whole(ea4));
  CHECK(st.ell == 4);
  CHECK(case3_bound_holds(st, 16));
  CHECK_FALSE(case3_bound_holds(st, 17));
}

TEST_CASE("quotient_is_abelian agrees with building the quotient table") {
  for (auto g : {build_dihedral(8), build_quaternion8(), build_heisenberg(3),
                 build_dihedral(16), direct_product(build_dihedral(8), build_cyclic(2))}) {
    for (int m = 2; m < g->order(); ++m) {
      if (g->order() % m != 0) continue;
      auto subs = enumerate_subgroups_of_order(g, m, 1'000'000);
      for (const auto& n : subs.items) {
        if (!n.is_normal()) continue;
        auto q = build_quotient(g, n);
        CHECK(quotient_is_abelian(g, n) == q.table->is_abelian());
      }
    }
  }
}

TEST_CASE("subgroup enumeration") {
  auto ea = build_elementary_abelian(2, 3);
  auto subs2 = enumerate_subgroups_of_order(ea, 2);
  CHECK(subs2.items.size() == 7);
  CHECK_FALSE(subs2.truncated);

  auto c4 = build_cyclic(4);
  CHECK(enumerate_subgroups_of_order(c4, 2).items.size() == 1);

  auto d8 = build_dihedral(8);
  CHECK(enumerate_subgroups_of_order(d8, 4).items.size() == 3);

  // Determinism: two runs yield identical sequences.
  auto a = enumerate_subgroups_of_order(d8, 2);
  auto b = enumerate_subgroups_of_order(d8, 2);
  REQUIRE(a.items.size() == b.items.size());
  for (size_t i = 0; i < a.items.size(); ++i)
    CHECK(a.items[i].members() == b.items[i].members());

  // Tiny budget flags truncation.
  auto t = enumerate_subgroups_of_order(build_elementary_abelian(2, 4), 4, 5);
  CHECK(t.truncated);
}

TEST_CASE("subgroup validation") {
  auto d8 = build_dihedral(8);
  CHECK_THROWS_AS(Subgroup::from_members(d8, {0, 1}), InputError);  // r not closed
  CHECK(Subgroup::from_members(d8, {0, 2}).size() == 2);
  CHECK_THROWS_AS(Subgroup::from_members(d8, {1, 2}), InputError);  // no identity
  auto rot = Subgroup::generated(d8, std::vector<int>{1});
  CHECK(rot.size() == 4);
  CHECK(rot.is_normal());
  CHECK(rot.is_abelian());
}

TEST_CASE("group isomorphism brute force") {
  CHECK(groups_isomorphic(build_cyclic(4), build_cyclic(4)));
  CHECK_FALSE(groups_isomorphic(build_cyclic(4), build_elementary_abelian(2, 2)));
  CHECK_FALSE(groups_isomorphic(build_dihedral(8), build_quaternion8()));
  CHECK(groups_isomorphic(direct_product(build_cyclic(2), build_cyclic(4)),
                          direct_product(build_cyclic(4), build_cyclic(2))));
}
