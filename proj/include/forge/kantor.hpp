// Kantor families: axiom verification, Frohardt-condition classification,
// the skew-translation (A* = AC) condition, and exhaustive search in small
// groups.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "forge/group.hpp"

namespace forge {

struct KantorType {
  int u = 0;
  int v = 0;
};

struct KantorFamily {
  GroupPtr group;
  std::vector<Subgroup> f;      // v+1 subgroups of order u
  std::vector<Subgroup> fstar;  // index-aligned, f[i] <= fstar[i], order u*v
  KantorType type;

  using Signature = std::vector<std::pair<std::vector<int>, std::vector<int>>>;
  Signature signature() const;  // pair list sorted canonically

  // Reorders the index-aligned pairs into canonical (sorted) order.
  void canonicalize();
};

struct AxiomCheck {
  std::string axiom;  // "structure", "a", "b", "c", "d"
  bool pass = true;
  std::string detail;
  std::vector<int> witness;  // offending element ids (empty when pass)
};

struct FamilyReport {
  std::vector<AxiomCheck> checks;
  bool all_pass() const;
  const AxiomCheck* first_failure() const;
};

// Exhaustive per-axiom verification; failures carry witnesses. Size
// mismatches are reported as a failed "structure" check, not an exception.
FamilyReport verify_kantor_family(const KantorFamily& fam);

// Throws InputError unless the family verifies.
void require_verified(const KantorFamily& fam);

enum class FrohardtCase { NotApplicable = 0, One = 1, Two = 2, Three = 3 };

std::string to_string(FrohardtCase c);

struct FrohardtReport {
  int i = 0, j = 0;
  Subgroup s;  // fstar[i] ∩ fstar[j]
  bool central = false;
  bool quotient_abelian = false;
  FrohardtCase case_label = FrohardtCase::NotApplicable;
  // Filled only for case-(3) classifications, where the involution bound
  // ell >= sqrt(t) applies.
  std::optional<InvolutionStats> stats;
  bool ell_bound_ok = true;
};

FrohardtReport frohardt_condition(const KantorFamily& fam, int i, int j);

// Precomputed per-group data for tight classification loops.
struct FrohardtContext {
  Subgroup z;          // center of the group
  Bitset commutators;  // every commutator [a,b]
  static FrohardtContext for_group(const GroupPtr& g);
};

// Classifies the family by scanning all pairs: returns the first report whose
// hypotheses (central and abelian quotient) hold, else the (0,1) report.
// Pair labels are checked for mutual consistency.
FrohardtReport classify_family(const KantorFamily& fam);
// Hot-path variant for families already known to verify (e.g. search output).
FrohardtReport classify_family(const KantorFamily& fam, const FrohardtContext& ctx);

// Searches for a normal subgroup C with fstar[i] = f[i]·C for all i.
std::optional<Subgroup> stgq_condition(const KantorFamily& fam);

struct KantorSearchOptions {
  uint64_t budget = 20'000'000;  // candidate-test budget, split over branches
  uint64_t max_families = 0;     // 0 = unlimited; exceeding marks truncation
  int threads = 1;
  bool require_stgq = false;
  int require_case = 0;          // 0 = off
  bool require_frohardt = false;
  // Seeded searches: fix the symmetry subgroup S and/or the full fstar tuple.
  std::optional<Subgroup> fixed_symmetry;
  std::optional<std::vector<Subgroup>> fixed_fstar;
};

struct KantorSearchResult {
  std::vector<KantorFamily> families;  // canonical order, deduplicated
  bool truncated = false;              // callers must not claim exhaustiveness
  uint64_t nodes = 0;
  int duplicates_suppressed = 0;
};

// Exhaustive (modulo budget) enumeration of Kantor families of type (u,v).
// Deterministic: identical inputs yield identical output, independent of the
// thread count.
KantorSearchResult search_kantor_families(const GroupPtr& g, int u, int v,
                                          const KantorSearchOptions& opts = {});

}  // namespace forge
