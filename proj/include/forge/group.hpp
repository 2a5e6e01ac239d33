// Finite groups as explicit multiplication tables, plus the subgroup and
// structure operations the rest of the library consumes. Element ids are
// dense integers with 0 the identity; every table is fully validated on
// construction (Latin square + associativity), because everything downstream
// is a proof-by-computation over these tables.
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "forge/common.hpp"

namespace forge {

class GroupTable;
using GroupPtr = std::shared_ptr<const GroupTable>;

class GroupTable {
 public:
  // Validates all group axioms; throws InputError on any violation.
  static GroupPtr make(std::string name, const std::vector<std::vector<int>>& rows);
  static GroupPtr make_flat(std::string name, int order, std::vector<uint16_t> flat);

  int order() const { return order_; }
  int mul(int a, int b) const { return table_[static_cast<size_t>(a) * order_ + b]; }
  int inv(int a) const { return inverse_[a]; }
  int conjugate(int g, int a) const { return mul(mul(g, a), inv(g)); }
  int commutator(int a, int b) const {
    return mul(mul(a, b), mul(inv(a), inv(b)));
  }
  int element_order(int a) const { return element_order_[a]; }
  bool is_abelian() const { return abelian_; }
  const std::string& name() const { return name_; }

  std::vector<std::vector<int>> rows() const;

 private:
  GroupTable() = default;
  int order_ = 0;
  std::string name_;
  std::vector<uint16_t> table_;
  std::vector<uint16_t> inverse_;
  std::vector<int> element_order_;
  bool abelian_ = false;
};

class Subgroup {
 public:
  Subgroup() = default;

  // Validates identity membership, closure, and Lagrange; throws InputError.
  static Subgroup from_members(GroupPtr parent, std::vector<int> members);
  static Subgroup generated(GroupPtr parent, std::span<const int> generators);
  static Subgroup trivial(GroupPtr parent);
  static Subgroup whole(GroupPtr parent);

  const GroupPtr& parent() const { return parent_; }
  int size() const { return static_cast<int>(members_.size()); }
  bool contains(int g) const { return mask_.test(g); }
  const std::vector<int>& members() const { return members_; }
  const Bitset& mask() const { return mask_; }

  bool is_normal() const;
  bool is_abelian() const;
  int exponent() const;
  bool is_elementary_abelian() const;

  Subgroup intersect(const Subgroup& other) const;

  bool operator==(const Subgroup& o) const {
    return parent_ == o.parent_ && members_ == o.members_;
  }
  bool operator<(const Subgroup& o) const { return members_ < o.members_; }

 private:
  GroupPtr parent_;
  std::vector<int> members_;
  Bitset mask_;
};

struct InvolutionStats {
  int ell = 0;               // elements of S squaring to id (identity included)
  int commutator_order = 0;  // order of the parent group's commutator subgroup
};

// --- builders ---------------------------------------------------------

GroupPtr build_elementary_abelian(int p, int k);
GroupPtr build_heisenberg(int q);  // order q^3, upper unitriangular over F_q
GroupPtr build_cyclic(int n);
GroupPtr build_dihedral(int order);  // order = 2n
GroupPtr build_quaternion8();
GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b);

// --- structure operations ---------------------------------------------

Subgroup center(const GroupPtr& g);
Subgroup commutator_subgroup(const GroupPtr& g);
// Subgroup generated by all squares and all commutators.
Subgroup frattini(const GroupPtr& g);
int exponent(const GroupPtr& g);
bool is_elementary_abelian(const GroupPtr& g);

Subgroup centralizer(const Subgroup& b, int a);
int conjugacy_class_size(const GroupPtr& g, int a);

Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> elems);
std::vector<std::vector<int>> left_cosets(const GroupPtr& g, const Subgroup& h);
bool quotient_is_abelian(const GroupPtr& g, const Subgroup& n);  // requires n normal
InvolutionStats involution_stats(const Subgroup& s);

// Case-(3) lower bound ell >= sqrt(t); the caller decides applicability.
bool case3_bound_holds(const InvolutionStats& stats, int t);

struct SubgroupStream {
  std::vector<Subgroup> items;  // canonical order: lexicographic member lists
  bool truncated = false;
};

SubgroupStream enumerate_subgroups_of_order(const GroupPtr& g, int m,
                                            uint64_t budget = 200'000'000);

struct QuotientGroup {
  GroupPtr table;
  std::vector<int> coset_of;              // element id -> coset id
  std::vector<std::vector<int>> cosets;   // coset id -> sorted member ids
};

// Builds the factor group G/N (N must be normal).
QuotientGroup build_quotient(const GroupPtr& g, const Subgroup& n);

// Brute-force isomorphism test; only supported for orders <= 64.
bool groups_isomorphic(const GroupPtr& a, const GroupPtr& b);

}  // namespace forge
