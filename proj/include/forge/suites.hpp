// Theorem suites: built-in group catalogs per parameter t, the canonical
// instances every pipeline uses, and the two desk-scale verification suites
// with machine-readable reports.
#pragma once

#include <string>
#include <vector>

#include "forge/subgq.hpp"

namespace forge {

struct CatalogEntry {
  std::string name;
  GroupPtr group;
  std::string note;
};

// Catalogs of candidate elation groups of order t^3. t=2 and t=3 cover all
// five groups of those orders; t=4 is a documented partial catalog.
std::vector<CatalogEntry> catalog_for_t(int t);
bool catalog_is_exhaustive(int t);

// Canonical instances (first families in search order, cached).
const KantorFamily& builtin_family_22();
const KantorFamily& builtin_family_33();
// Type (4,4) in elementary abelian 2^6, seeded from the regular spread of
// PG(3,2): the starred members are the direction cones extended by a fixed
// order-4 complement.
const KantorFamily& seeded_family_44();

struct SuiteOptions {
  uint64_t budget = 400'000'000;   // per-group search budget
  uint64_t max_families = 60'000;  // per-group retained-family cap
  int threads = 1;
  // Whether the supplied catalog covers every group of order t^3; only then
  // can an untruncated run claim full confirmation.
  bool catalog_exhaustive = false;
};

struct InstanceReport {
  std::string group_name;
  int group_order = 0;
  std::string group_hash;
  int families_found = 0;
  bool truncated = false;
  uint64_t nodes = 0;
  // Frohardt tallies (per family):
  int case1 = 0, case2 = 0, case3 = 0, not_applicable = 0;
  // Even-order STGQ data:
  int stgq_families = 0;
  bool stgq_groups_elementary_abelian = true;
  bool axes_checked = false;
  bool axes_ok = true;
  std::vector<std::string> notes;
  std::string verdict;  // "pass" | "fail" | "vacuous"
};

struct SuiteReport {
  std::string suite;
  int t = 0;
  bool catalog_exhaustive = false;
  std::vector<InstanceReport> instances;
  std::string global_verdict;  // confirmed | confirmed-on-searched-space |
                               // failed | vacuous
  bool any_truncated = false;
  double wall_seconds = 0;  // sidecar, excluded from report comparisons
};

// Searches every catalog group for type-(t,t) families and classifies each
// found family against the central/abelian-quotient condition; the suite
// fails if any family lands in case 3.
SuiteReport suite_frohardt_case3(const std::vector<CatalogEntry>& catalog, int t,
                                 const SuiteOptions& opts = {});

// For even t: every family satisfying the normal-complement condition must
// live in an elementary abelian group; line axes are verified where feasible.
SuiteReport suite_even_stgq_is_tgq(const std::vector<CatalogEntry>& catalog, int t,
                                   const SuiteOptions& opts = {});

// Content hash of a group table, for report provenance.
std::string group_content_hash(const GroupTable& g);

}  // namespace forge
