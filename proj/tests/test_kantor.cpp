#include "doctest.h"
#include "forge/kantor.hpp"
#include "oracles.hpp"

using namespace forge;

namespace {

// Type (2,2) family in the elementary abelian group of order 8:
// members are the axis subgroups <1>, <2>, <4>, stars adjoin 7 = 1+2+4.
KantorFamily hand_family_22() {
  auto g = build_elementary_abelian(2, 3);
  KantorFamily fam;
  fam.group = g;
  fam.type = {2, 2};
  for (int e : {1, 2, 4}) {
    fam.f.push_back(Subgroup::from_members(g, {0, e}));
    fam.fstar.push_back(Subgroup::from_members(g, {0, e, 7 ^ e, 7}));
  }
  return fam;
}

}  // namespace

TEST_CASE("axiom checker accepts the hand family") {
  auto fam = hand_family_22();
  auto report = verify_kantor_family(fam);
  CHECK(report.all_pass());
  CHECK(report.checks.size() == 5);
}

TEST_CASE("axiom checker reports witnesses") {
  auto fam = hand_family_22();
  // Replace fstar[0] by a subgroup meeting f[1] nontrivially.
  fam.fstar[0] = Subgroup::from_members(fam.group, {0, 1, 2, 3});
  auto report = verify_kantor_family(fam);
  CHECK_FALSE(report.all_pass());
  const AxiomCheck* fail = report.first_failure();
  REQUIRE(fail != nullptr);
  CHECK(fail->axiom == "d");
  CHECK_FALSE(fail->witness.empty());

  // Size mismatch is a structural failure, not an exception.
  KantorFamily wrong = hand_family_22();
  wrong.type = {2, 3};
  auto report2 = verify_kantor_family(wrong);
  CHECK_FALSE(report2.all_pass());
  CHECK(report2.first_failure()->axiom == "structure");
}

TEST_CASE("frohardt condition on the hand family") {
  auto fam = hand_family_22();
  auto rep = frohardt_condition(fam, 0, 1);
  CHECK(rep.central);
  CHECK(rep.quotient_abelian);
  CHECK(rep.case_label == FrohardtCase::One);
  CHECK(rep.s.size() == 2);
  CHECK(rep.s.contains(7));
  CHECK_THROWS_AS(frohardt_condition(fam, 1, 1), InputError);
}

TEST_CASE("stgq condition") {
  auto fam = hand_family_22();
  auto c = stgq_condition(fam);
  REQUIRE(c.has_value());
  CHECK(c->size() == 2);
  CHECK(c->contains(7));
}

TEST_CASE("search in elementary abelian 2^3") {
  auto g = build_elementary_abelian(2, 3);
  auto result = search_kantor_families(g, 2, 2);
  CHECK_FALSE(result.truncated);
  // Full enumeration: one family per triangle of the Fano plane.
  CHECK(result.families.size() == 28);
  for (const auto& fam : result.families) {
    CHECK(verify_kantor_family(fam).all_pass());
    auto rep = classify_family(fam);
    CHECK(rep.case_label == FrohardtCase::One);
    CHECK(stgq_condition(fam).has_value());
  }

  // Determinism, including across thread counts.
  auto again = search_kantor_families(g, 2, 2);
  KantorSearchOptions par;
  par.threads = 4;
  auto parallel = search_kantor_families(g, 2, 2, par);
  REQUIRE(again.families.size() == result.families.size());
  REQUIRE(parallel.families.size() == result.families.size());
  for (size_t i = 0; i < result.families.size(); ++i) {
    CHECK(result.families[i].signature() == again.families[i].signature());
    CHECK(result.families[i].signature() == parallel.families[i].signature());
  }
}

TEST_CASE("search in groups without families") {
  CHECK(search_kantor_families(build_cyclic(8), 2, 2).families.empty());
  CHECK(search_kantor_families(build_quaternion8(), 2, 2).families.empty());
  CHECK(search_kantor_families(build_dihedral(8), 2, 2).families.empty());
  CHECK(search_kantor_families(direct_product(build_cyclic(4), build_cyclic(2)), 2, 2)
            .families.empty());
}

TEST_CASE("pruned search equals unpruned assembly at order 8") {
  for (auto g : {build_elementary_abelian(2, 3), build_cyclic(8), build_dihedral(8),
                 build_quaternion8(), direct_product(build_cyclic(4), build_cyclic(2))}) {
    auto oracle = forge::testing::brute_force_families(g, 2, 2);
    auto searched = search_kantor_families(g, 2, 2);
    REQUIRE(searched.families.size() == oracle.size());
    for (size_t i = 0; i < oracle.size(); ++i)
      CHECK(searched.families[i].signature() == oracle[i]);
  }
}

TEST_CASE("search filters") {
  auto g = build_elementary_abelian(2, 3);
  KantorSearchOptions stgq;
  stgq.require_stgq = true;
  auto stgq_result = search_kantor_families(g, 2, 2, stgq);
  CHECK(stgq_result.families.size() == 28);  // every family here is an STGQ family

  KantorSearchOptions case3;
  case3.require_case = 3;
  CHECK(search_kantor_families(g, 2, 2, case3).families.empty());

  KantorSearchOptions tiny;
  tiny.budget = 3;
  auto truncated = search_kantor_families(g, 2, 2, tiny);
  CHECK(truncated.truncated);
}

TEST_CASE("seeded search with a fixed fstar tuple") {
  auto hand = hand_family_22();
  KantorSearchOptions opts;
  opts.fixed_fstar = hand.fstar;
  auto result = search_kantor_families(hand.group, 2, 2, opts);
  CHECK_FALSE(result.truncated);
  REQUIRE(!result.families.empty());
  bool found_hand = false;
  for (const auto& fam : result.families) {
    CHECK(verify_kantor_family(fam).all_pass());
    if (fam.signature() == hand.signature()) found_hand = true;
  }
  CHECK(found_hand);
}

TEST_CASE("search input validation") {
  CHECK_THROWS_AS(search_kantor_families(build_cyclic(8), 2, 3), InputError);
  CHECK_THROWS_AS(search_kantor_families(build_cyclic(8), 1, 8), InputError);
}
