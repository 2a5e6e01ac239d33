#include "doctest.h"
#include "forge/suites.hpp"

using namespace forge;

TEST_CASE("catalogs") {
  auto c2 = catalog_for_t(2);
  REQUIRE(c2.size() == 5);
  for (const auto& e : c2) CHECK(e.group->order() == 8);
  CHECK(catalog_is_exhaustive(2));

  auto c3 = catalog_for_t(3);
  REQUIRE(c3.size() == 5);
  for (const auto& e : c3) CHECK(e.group->order() == 27);
  // The five types of order 27 are pairwise non-isomorphic.
  for (size_t i = 0; i < c3.size(); ++i)
    for (size_t j = i + 1; j < c3.size(); ++j)
      CHECK_FALSE(groups_isomorphic(c3[i].group, c3[j].group));
  CHECK(catalog_is_exhaustive(3));

  auto c4 = catalog_for_t(4);
  CHECK(c4.size() == 12);
  for (const auto& e : c4) CHECK(e.group->order() == 64);
  CHECK_FALSE(catalog_is_exhaustive(4));
  CHECK_THROWS_AS(catalog_for_t(5), InputError);
}

TEST_CASE("modular order-27 group shape") {
  auto c3 = catalog_for_t(3);
  const auto& m27 = c3[4].group;
  CHECK(m27->name() == "M27");
  CHECK_FALSE(m27->is_abelian());
  CHECK(exponent(m27) == 9);
  CHECK(center(m27).size() == 3);
}

TEST_CASE("builtin families") {
  const auto& f22 = builtin_family_22();
  CHECK(verify_kantor_family(f22).all_pass());
  CHECK(f22.type.u == 2);
  const auto& f33 = builtin_family_33();
  CHECK(verify_kantor_family(f33).all_pass());
  CHECK(f33.group->name() == "H(3)");
  const auto& f44 = seeded_family_44();
  CHECK(verify_kantor_family(f44).all_pass());
  CHECK(f44.type.u == 4);
  CHECK(f44.group->order() == 64);
  CHECK(is_elementary_abelian(f44.group));
}

TEST_CASE("frohardt suite at t=2 confirms over the full catalog") {
  SuiteOptions o;
  o.catalog_exhaustive = catalog_is_exhaustive(2);
  auto rep = suite_frohardt_case3(catalog_for_t(2), 2, o);
  CHECK(rep.global_verdict == "confirmed");
  CHECK_FALSE(rep.any_truncated);
  int total = 0, case3 = 0;
  for (const auto& i : rep.instances) {
    total += i.families_found;
    case3 += i.case3;
  }
  CHECK(total == 28);
  CHECK(case3 == 0);
}

TEST_CASE("frohardt suite at t=3 is vacuously safe") {
  SuiteOptions o;
  o.catalog_exhaustive = catalog_is_exhaustive(3);
  auto rep = suite_frohardt_case3(catalog_for_t(3), 3, o);
  CHECK(rep.global_verdict == "confirmed");
  bool noted = false;
  for (const auto& i : rep.instances) {
    CHECK(i.case3 == 0);
    CHECK(i.case2 == 0);
    for (const auto& n : i.notes)
      if (n.find("odd order") != std::string::npos) noted = true;
  }
  CHECK(noted);
}

TEST_CASE("even stgq suite at t=2") {
  SuiteOptions o;
  o.catalog_exhaustive = true;
  auto rep = suite_even_stgq_is_tgq(catalog_for_t(2), 2, o);
  CHECK(rep.global_verdict == "confirmed");
  int stgq = 0;
  for (const auto& i : rep.instances) {
    stgq += i.stgq_families;
    if (i.stgq_families > 0) {
      CHECK(i.group_name == "EA(2^3)");
      CHECK(i.stgq_groups_elementary_abelian);
      CHECK(i.axes_checked);
      CHECK(i.axes_ok);
    }
  }
  CHECK(stgq == 28);
  CHECK_THROWS_AS(suite_even_stgq_is_tgq(catalog_for_t(3), 3, o), InputError);
}

TEST_CASE("stgq-mode search agrees with condition filtering at t=2") {
  for (const auto& entry : catalog_for_t(2)) {
    auto general = search_kantor_families(entry.group, 2, 2);
    KantorSearchOptions stgq_opts;
    stgq_opts.require_stgq = true;
    auto stgq = search_kantor_families(entry.group, 2, 2, stgq_opts);
    std::vector<KantorFamily::Signature> expected;
    for (const auto& fam : general.families)
      if (stgq_condition(fam)) expected.push_back(fam.signature());
    REQUIRE(stgq.families.size() == expected.size());
    for (size_t i = 0; i < expected.size(); ++i)
      CHECK(stgq.families[i].signature() == expected[i]);
  }
}

TEST_CASE("suite determinism and truncation honesty") {
  SuiteOptions o;
  o.catalog_exhaustive = true;
  auto a = suite_frohardt_case3(catalog_for_t(2), 2, o);
  auto b = suite_frohardt_case3(catalog_for_t(2), 2, o);
  REQUIRE(a.instances.size() == b.instances.size());
  for (size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].families_found == b.instances[i].families_found);
    CHECK(a.instances[i].nodes == b.instances[i].nodes);
    CHECK(a.instances[i].verdict == b.instances[i].verdict);
  }

  // A starved budget must never claim full confirmation.
  SuiteOptions tiny;
  tiny.budget = 5;
  tiny.catalog_exhaustive = true;
  auto t = suite_frohardt_case3(catalog_for_t(2), 2, tiny);
  CHECK(t.any_truncated);
  CHECK(t.global_verdict != "confirmed");

  // Parallel instance execution yields the same report.
  SuiteOptions par = o;
  par.threads = 4;
  auto c = suite_frohardt_case3(catalog_for_t(2), 2, par);
  for (size_t i = 0; i < a.instances.size(); ++i) {
    CHECK(a.instances[i].nodes == c.instances[i].nodes);
    CHECK(a.instances[i].families_found == c.instances[i].families_found);
  }

  // Empty catalogs are vacuous.
  auto empty = suite_frohardt_case3({}, 2, o);
  CHECK(empty.global_verdict == "vacuous");
}

TEST_CASE("family cap marks truncation deterministically") {
  KantorSearchOptions o;
  o.max_families = 4;
  auto res = search_kantor_families(build_elementary_abelian(2, 3), 2, 2, o);
  CHECK(res.truncated);
  CHECK(res.families.size() <= 28);
  auto again = search_kantor_families(build_elementary_abelian(2, 3), 2, 2, o);
  CHECK(res.families.size() == again.families.size());
}
