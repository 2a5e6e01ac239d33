#include "forge/kantor.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

namespace forge {

namespace {

Bitset product_set_mask(const GroupTable& g, const Subgroup& a, const Subgroup& b) {
  Bitset out(g.order());
  for (int x : a.members())
    for (int y : b.members()) out.set(g.mul(x, y));
  return out;
}

}  // namespace

KantorFamily::Signature KantorFamily::signature() const {
  Signature sig;
  sig.reserve(f.size());
  for (size_t i = 0; i < f.size(); ++i)
    sig.emplace_back(f[i].members(), fstar[i].members());
  std::sort(sig.begin(), sig.end());
  return sig;
}

void KantorFamily::canonicalize() {
  std::vector<int> idx(f.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
  std::sort(idx.begin(), idx.end(), [&](int a, int b) {
    if (f[a].members() != f[b].members()) return f[a].members() < f[b].members();
    return fstar[a].members() < fstar[b].members();
  });
  std::vector<Subgroup> nf, ns;
  for (int i : idx) {
    nf.push_back(f[i]);
    ns.push_back(fstar[i]);
  }
  f = std::move(nf);
  fstar = std::move(ns);
}

bool FamilyReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

const AxiomCheck* FamilyReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

FamilyReport verify_kantor_family(const KantorFamily& fam) {
  FamilyReport report;
  const auto& g = fam.group;
  int u = fam.type.u, v = fam.type.v;

  AxiomCheck structure{"structure", true, "", {}};
  if (!g) {
    structure = {"structure", false, "missing group", {}};
  } else if (u < 2 || v < 2) {
    structure = {"structure", false, "type parameters must be at least 2", {}};
  } else if (g->order() != u * u * v) {
    structure = {"structure", false,
                 "group order " + std::to_string(g->order()) +
                     " differs from u^2*v = " + std::to_string(u * u * v),
                 {}};
  } else if (fam.f.size() != static_cast<size_t>(v + 1) ||
             fam.fstar.size() != static_cast<size_t>(v + 1)) {
    structure = {"structure", false, "family lists must have v+1 members", {}};
  } else {
    for (size_t i = 0; i < fam.f.size(); ++i)
      if (fam.f[i].parent() != g || fam.fstar[i].parent() != g) {
        structure = {"structure", false, "member subgroups belong to a different group", {}};
        break;
      }
  }
  report.checks.push_back(structure);
  if (!structure.pass) return report;

  // (a) containment f[i] <= fstar[i]
  AxiomCheck a{"a", true, "", {}};
  for (size_t i = 0; i < fam.f.size() && a.pass; ++i)
    if (!fam.f[i].mask().is_subset_of(fam.fstar[i].mask()))
      a = {"a", false,
           "f[" + std::to_string(i) + "] is not contained in fstar[" + std::to_string(i) + "]",
           {static_cast<int>(i)}};
  report.checks.push_back(a);

  // (b) sizes
  AxiomCheck b{"b", true, "", {}};
  for (size_t i = 0; i < fam.f.size() && b.pass; ++i) {
    if (fam.f[i].size() != u)
      b = {"b", false,
           "f[" + std::to_string(i) + "] has order " + std::to_string(fam.f[i].size()),
           {static_cast<int>(i)}};
    else if (fam.fstar[i].size() != u * v)
      b = {"b", false,
           "fstar[" + std::to_string(i) + "] has order " + std::to_string(fam.fstar[i].size()),
           {static_cast<int>(i)}};
  }
  report.checks.push_back(b);

  // (c) AB ∩ C = {id} for distinct members
  AxiomCheck c{"c", true, "", {}};
  int m = static_cast<int>(fam.f.size());
  for (int i = 0; i < m && c.pass; ++i) {
    for (int j = i + 1; j < m && c.pass; ++j) {
      Bitset prod = product_set_mask(*g, fam.f[i], fam.f[j]);
      for (int k = 0; k < m && c.pass; ++k) {
        if (k == i || k == j) continue;
        if (!prod.intersection_within(fam.f[k].mask(), 0)) {
          for (int x : fam.f[i].members()) {
            for (int y : fam.f[j].members()) {
              int z = g->mul(x, y);
              if (z != 0 && fam.f[k].contains(z)) {
                c = {"c", false,
                     "f[" + std::to_string(i) + "]*f[" + std::to_string(j) +
                         "] meets f[" + std::to_string(k) + "] at element " +
                         std::to_string(z),
                     {x, y, z}};
                break;
              }
            }
            if (!c.pass) break;
          }
        }
      }
    }
  }
  report.checks.push_back(c);

  // (d) f[i] ∩ fstar[j] = {id} for i != j
  AxiomCheck d{"d", true, "", {}};
  for (int i = 0; i < m && d.pass; ++i)
    for (int j = 0; j < m && d.pass; ++j) {
      if (i == j) continue;
      if (!fam.f[i].mask().intersection_within(fam.fstar[j].mask(), 0)) {
        for (int x : fam.f[i].members())
          if (x != 0 && fam.fstar[j].contains(x)) {
            d = {"d", false,
                 "f[" + std::to_string(i) + "] meets fstar[" + std::to_string(j) +
                     "] at element " + std::to_string(x),
                 {x}};
            break;
          }
      }
    }
  report.checks.push_back(d);

  return report;
}

void require_verified(const KantorFamily& fam) {
  auto report = verify_kantor_family(fam);
  if (!report.all_pass())
    throw InputError("family fails verification: " + report.first_failure()->detail);
}

std::string to_string(FrohardtCase c) {
  switch (c) {
    case FrohardtCase::One: return "1";
    case FrohardtCase::Two: return "2";
    case FrohardtCase::Three: return "3";
    default: return "not-applicable";
  }
}

FrohardtContext FrohardtContext::for_group(const GroupPtr& g) {
  FrohardtContext ctx{center(g), Bitset(g->order())};
  for (int a = 0; a < g->order(); ++a)
    for (int b = a + 1; b < g->order(); ++b) ctx.commutators.set(g->commutator(a, b));
  ctx.commutators.set(0);
  return ctx;
}

namespace {

FrohardtReport frohardt_pair(const KantorFamily& fam, int i, int j,
                             const FrohardtContext& ctx) {
  FrohardtReport rep;
  rep.i = i;
  rep.j = j;
  rep.s = fam.fstar[i].intersect(fam.fstar[j]);
  rep.central = rep.s.mask().is_subset_of(ctx.z.mask());
  rep.quotient_abelian = ctx.commutators.is_subset_of(rep.s.mask());

  if (rep.central && rep.quotient_abelian) {
    bool z_elem_ab = ctx.z.is_elementary_abelian();
    bool z_elem_ab_2 = z_elem_ab && ctx.z.exponent() <= 2;
    bool z_exp4 = ctx.z.exponent() == 4;
    bool all_f_elem_ab = true;
    bool all_f_elem_ab_2 = true;
    bool some_f_exp4 = false;
    for (const auto& a : fam.f) {
      bool ea = a.is_elementary_abelian();
      all_f_elem_ab &= ea;
      all_f_elem_ab_2 &= ea && a.exponent() <= 2;
      some_f_exp4 |= a.exponent() == 4;
    }
    if (z_elem_ab && all_f_elem_ab)
      rep.case_label = FrohardtCase::One;
    else if (z_elem_ab_2 && some_f_exp4)
      rep.case_label = FrohardtCase::Two;
    else if (z_exp4 && all_f_elem_ab_2)
      rep.case_label = FrohardtCase::Three;

    if (rep.case_label == FrohardtCase::Three) {
      rep.stats = involution_stats(rep.s);
      rep.ell_bound_ok = case3_bound_holds(*rep.stats, fam.type.v);
    }
  }
  return rep;
}

}  // namespace

FrohardtReport frohardt_condition(const KantorFamily& fam, int i, int j) {
  require_verified(fam);
  if (i == j) throw InputError("frohardt_condition requires distinct indices");
  int m = static_cast<int>(fam.f.size());
  if (i < 0 || j < 0 || i >= m || j >= m) throw InputError("pair index out of range");
  return frohardt_pair(fam, i, j, FrohardtContext::for_group(fam.group));
}

FrohardtReport classify_family(const KantorFamily& fam) {
  require_verified(fam);
  return classify_family(fam, FrohardtContext::for_group(fam.group));
}

FrohardtReport classify_family(const KantorFamily& fam, const FrohardtContext& ctx) {
  int m = static_cast<int>(fam.f.size());
  FrohardtReport chosen = frohardt_pair(fam, 0, 1, ctx);
  bool found = chosen.central && chosen.quotient_abelian;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      if (i == 0 && j == 1) continue;
      FrohardtReport rep = frohardt_pair(fam, i, j, ctx);
      if (!(rep.central && rep.quotient_abelian)) continue;
      if (found && rep.case_label != chosen.case_label)
        throw InvariantError("inconsistent case labels across pairs");
      if (!found) {
        chosen = rep;
        found = true;
      }
    }
  return chosen;
}

std::optional<Subgroup> stgq_condition(const KantorFamily& fam) {
  require_verified(fam);
  const auto& g = fam.group;
  int v = fam.type.v;
  auto candidates = enumerate_subgroups_of_order(g, v);
  for (const auto& c : candidates.items) {
    if (!c.is_normal()) continue;
    bool ok = true;
    for (size_t i = 0; i < fam.f.size() && ok; ++i) {
      Bitset prod = product_set_mask(*g, fam.f[i], c);
      ok = prod == fam.fstar[i].mask();
    }
    if (!ok) continue;
    for (size_t i = 0; i < fam.fstar.size(); ++i)
      for (size_t j = i + 1; j < fam.fstar.size(); ++j)
        if (!(fam.fstar[i].intersect(fam.fstar[j]) == c))
          throw InvariantError("STGQ normal subgroup is not the common fstar intersection");
    return c;
  }
  return std::nullopt;
}

// --- search -------------------------------------------------------------

namespace {

struct SearchContext {
  const GroupPtr& group;
  int u, v;
  const KantorSearchOptions& opts;
  std::vector<Subgroup> subs_u;             // candidate family members
  std::vector<Subgroup> subs_uv;            // candidate starred members (general mode)
  std::vector<std::vector<int>> supersets;  // per subs_u index: containing subs_uv indices
  bool enumeration_truncated = false;
};

struct BranchOutput {
  std::vector<KantorFamily> families;
  bool truncated = false;
  bool truncated_by_families = false;
  uint64_t nodes = 0;
};

class FamilySearch {
 public:
  FamilySearch(const SearchContext& ctx, uint64_t branch_budget, uint64_t family_budget)
      : ctx_(ctx), g_(*ctx.group), budget_(branch_budget), family_budget_(family_budget) {}

  // General mode: enumerate member tuples with increasing indices, then
  // attach starred members per tuple.
  void run_general(int first_index, BranchOutput& out) {
    out_ = &out;
    chosen_.clear();
    if (!try_member(first_index)) return;
    descend_general();
    pop_member();
  }

  // STGQ mode: S is fixed for the branch; stars are determined as f[i]·S.
  void run_stgq(const Subgroup& s, BranchOutput& out) {
    out_ = &out;
    s_ = &s;
    chosen_.clear();
    for (size_t i = 0; i < ctx_.subs_u.size(); ++i) {
      if (stopped_) break;
      if (!try_member(static_cast<int>(i))) continue;
      descend_general();
      pop_member();
    }
    s_ = nullptr;
  }

  // Seeded mode: the fstar tuple is fixed; slot i candidates live inside it.
  void run_fixed(const std::vector<Subgroup>& fstar, int first_candidate,
                 BranchOutput& out) {
    out_ = &out;
    fixed_fstar_ = &fstar;
    chosen_.clear();
    const auto& slot0 = slot_candidates(0);
    if (first_candidate >= static_cast<int>(slot0.size())) {
      fixed_fstar_ = nullptr;
      return;
    }
    if (try_member(slot0[first_candidate])) {
      descend_fixed();
      pop_member();
    }
    fixed_fstar_ = nullptr;
  }

  uint64_t nodes() const { return nodes_; }

 private:
  struct ChosenMember {
    int index;                  // index into ctx_.subs_u
    Bitset star_mask;           // STGQ mode: mask of f·S
    std::vector<Bitset> prods;  // product sets with previously chosen members
  };

  const SearchContext& ctx_;
  const GroupTable& g_;
  uint64_t budget_;
  uint64_t family_budget_;
  uint64_t nodes_ = 0;
  bool stopped_ = false;
  BranchOutput* out_ = nullptr;
  const Subgroup* s_ = nullptr;
  const std::vector<Subgroup>* fixed_fstar_ = nullptr;
  std::vector<ChosenMember> chosen_;
  std::map<int, std::vector<int>> slot_cache_;

  bool charge() {
    if (stopped_) return false;
    if (++nodes_ > budget_) {
      stopped_ = true;
      out_->truncated = true;
      return false;
    }
    return true;
  }

  const std::vector<int>& slot_candidates(int slot) {
    auto it = slot_cache_.find(slot);
    if (it != slot_cache_.end()) return it->second;
    std::vector<int> list;
    const Subgroup& star = (*fixed_fstar_)[slot];
    for (size_t i = 0; i < ctx_.subs_u.size(); ++i)
      if (ctx_.subs_u[i].mask().is_subset_of(star.mask()))
        list.push_back(static_cast<int>(i));
    return slot_cache_.emplace(slot, std::move(list)).first->second;
  }

  // Axiom-driven feasibility of adding subs_u[idx] as the next member.
  bool try_member(int idx) {
    if (!charge()) return false;
    const Subgroup& cand = ctx_.subs_u[idx];

    for (const auto& m : chosen_) {
      const Subgroup& prev = ctx_.subs_u[m.index];
      if (!cand.mask().intersection_within(prev.mask(), 0)) return false;
    }
    // (c) with the candidate as the C member.
    for (const auto& m : chosen_)
      for (const auto& p : m.prods)
        if (!p.intersection_within(cand.mask(), 0)) return false;

    Bitset star_mask;
    if (s_) {
      if (!cand.mask().intersection_within(s_->mask(), 0)) return false;
      star_mask = Bitset(g_.order());
      for (int x : cand.members())
        for (int y : s_->members()) star_mask.set(g_.mul(x, y));
      for (const auto& m : chosen_) {
        const Subgroup& prev = ctx_.subs_u[m.index];
        if (!prev.mask().intersection_within(star_mask, 0)) return false;
        if (!cand.mask().intersection_within(m.star_mask, 0)) return false;
        if (star_mask.intersection_count(m.star_mask) != ctx_.v) return false;
      }
    }
    if (fixed_fstar_) {
      int slot = static_cast<int>(chosen_.size());
      for (int j = 0; j < static_cast<int>(fixed_fstar_->size()); ++j) {
        if (j == slot) continue;
        if (!cand.mask().intersection_within((*fixed_fstar_)[j].mask(), 0)) return false;
      }
    }

    // (c) with the candidate participating in the product.
    std::vector<Bitset> prods;
    prods.reserve(chosen_.size());
    for (const auto& m : chosen_) {
      const Subgroup& prev = ctx_.subs_u[m.index];
      Bitset prod(g_.order());
      for (int x : prev.members())
        for (int y : cand.members()) prod.set(g_.mul(x, y));
      for (const auto& other : chosen_) {
        if (&other == &m) continue;
        if (!prod.intersection_within(ctx_.subs_u[other.index].mask(), 0)) return false;
      }
      prods.push_back(std::move(prod));
    }

    chosen_.push_back({idx, std::move(star_mask), std::move(prods)});
    return true;
  }

  void pop_member() { chosen_.pop_back(); }

  void descend_general() {
    if (stopped_) return;
    if (static_cast<int>(chosen_.size()) == ctx_.v + 1) {
      if (s_)
        emit_stgq();
      else
        attach_stars(0, {});
      return;
    }
    int last = chosen_.back().index;
    for (int idx = last + 1; idx < static_cast<int>(ctx_.subs_u.size()); ++idx) {
      if (stopped_) return;
      if (!try_member(idx)) continue;
      descend_general();
      pop_member();
    }
  }

  void descend_fixed() {
    if (stopped_) return;
    int slot = static_cast<int>(chosen_.size());
    if (slot == ctx_.v + 1) {
      emit_fixed();
      return;
    }
    for (int idx : slot_candidates(slot)) {
      if (stopped_) return;
      if (!try_member(idx)) continue;
      descend_fixed();
      pop_member();
    }
  }

  void attach_stars(int slot, std::vector<int> stars) {
    if (stopped_) return;
    if (slot == ctx_.v + 1) {
      emit_general(stars);
      return;
    }
    int member_idx = chosen_[slot].index;
    for (int w : ctx_.supersets[member_idx]) {
      if (!charge()) return;
      const Subgroup& cand = ctx_.subs_uv[w];
      bool ok = true;
      for (int j = 0; j < static_cast<int>(chosen_.size()) && ok; ++j) {
        if (j == slot) continue;
        ok = ctx_.subs_u[chosen_[j].index].mask().intersection_within(cand.mask(), 0);
      }
      // Starred members pairwise intersect in exactly v elements.
      for (int j = 0; j < slot && ok; ++j)
        ok = cand.mask().intersection_count(ctx_.subs_uv[stars[j]].mask()) == ctx_.v;
      if (!ok) continue;
      stars.push_back(w);
      attach_stars(slot + 1, stars);
      stars.pop_back();
      if (stopped_) return;
    }
  }

  void finalize(KantorFamily fam) {
    if (!verify_kantor_family(fam).all_pass()) return;
    fam.canonicalize();
    out_->families.push_back(std::move(fam));
    if (out_->families.size() >= family_budget_) {
      stopped_ = true;
      out_->truncated = true;
      out_->truncated_by_families = true;
    }
  }

  void emit_general(const std::vector<int>& stars) {
    KantorFamily fam;
    fam.group = ctx_.group;
    fam.type = {ctx_.u, ctx_.v};
    for (int j = 0; j < static_cast<int>(chosen_.size()); ++j) {
      fam.f.push_back(ctx_.subs_u[chosen_[j].index]);
      fam.fstar.push_back(ctx_.subs_uv[stars[j]]);
    }
    finalize(std::move(fam));
  }

  void emit_stgq() {
    KantorFamily fam;
    fam.group = ctx_.group;
    fam.type = {ctx_.u, ctx_.v};
    for (const auto& m : chosen_) {
      fam.f.push_back(ctx_.subs_u[m.index]);
      fam.fstar.push_back(Subgroup::from_members(ctx_.group, m.star_mask.to_ids()));
    }
    finalize(std::move(fam));
  }

  void emit_fixed() {
    KantorFamily fam;
    fam.group = ctx_.group;
    fam.type = {ctx_.u, ctx_.v};
    for (const auto& m : chosen_) {
      fam.f.push_back(ctx_.subs_u[m.index]);
    }
    fam.fstar = *fixed_fstar_;
    finalize(std::move(fam));
  }
};

bool family_matches_filters(const KantorFamily& fam, const KantorSearchOptions& opts,
                            const FrohardtContext& ctx) {
  if (opts.require_case == 0 && !opts.require_frohardt) return true;
  int m = static_cast<int>(fam.f.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      FrohardtReport rep = frohardt_pair(fam, i, j, ctx);
      if (!(rep.central && rep.quotient_abelian)) continue;
      if (opts.require_case == 0) return true;
      if (static_cast<int>(rep.case_label) == opts.require_case) return true;
    }
  return false;
}

}  // namespace

KantorSearchResult search_kantor_families(const GroupPtr& g, int u, int v,
                                          const KantorSearchOptions& opts) {
  if (u < 2 || v < 2) throw InputError("type parameters must be at least 2");
  if (g->order() != u * u * v)
    throw InputError("group order " + std::to_string(g->order()) +
                     " is not u^2*v = " + std::to_string(u * u * v));

  KantorSearchResult result;
  SearchContext ctx{g, u, v, opts, {}, {}, {}, false};

  {
    auto stream = enumerate_subgroups_of_order(g, u, opts.budget);
    ctx.subs_u = std::move(stream.items);
    ctx.enumeration_truncated |= stream.truncated;
  }

  bool fixed_mode = opts.fixed_fstar.has_value();
  bool stgq_mode = !fixed_mode && (opts.require_stgq || opts.fixed_symmetry.has_value());
  if (fixed_mode && static_cast<size_t>(v + 1) != opts.fixed_fstar->size())
    throw InputError("fixed fstar tuple must have v+1 entries");

  std::vector<Subgroup> symmetry_candidates;
  if (stgq_mode) {
    if (opts.fixed_symmetry) {
      if (opts.fixed_symmetry->size() != v)
        throw InputError("fixed symmetry subgroup must have order v");
      symmetry_candidates.push_back(*opts.fixed_symmetry);
    } else {
      auto stream = enumerate_subgroups_of_order(g, v, opts.budget);
      ctx.enumeration_truncated |= stream.truncated;
      for (auto& s : stream.items)
        if (s.is_normal()) symmetry_candidates.push_back(std::move(s));
    }
  } else if (!fixed_mode) {
    auto stream = enumerate_subgroups_of_order(g, u * v, opts.budget);
    ctx.subs_uv = std::move(stream.items);
    ctx.enumeration_truncated |= stream.truncated;
    ctx.supersets.resize(ctx.subs_u.size());
    for (size_t i = 0; i < ctx.subs_u.size(); ++i)
      for (size_t w = 0; w < ctx.subs_uv.size(); ++w)
        if (ctx.subs_u[i].mask().is_subset_of(ctx.subs_uv[w].mask()))
          ctx.supersets[i].push_back(static_cast<int>(w));
  }

  // Top-level branches get equal budget slices so that parallel runs stay
  // deterministic and byte-identical to serial ones.
  int branches;
  if (fixed_mode) {
    int count = 0;
    for (const auto& s : ctx.subs_u)
      if (s.mask().is_subset_of((*opts.fixed_fstar)[0].mask())) ++count;
    branches = count;
  } else if (stgq_mode) {
    branches = static_cast<int>(symmetry_candidates.size());
  } else {
    branches = static_cast<int>(ctx.subs_u.size());
  }

  std::vector<BranchOutput> outputs(std::max(branches, 1));
  uint64_t spent = 0;
  if (branches > 0) {
    uint64_t family_slice = opts.max_families == 0
                                ? UINT64_MAX
                                : std::max<uint64_t>(1, opts.max_families / branches);

    auto run_branch = [&](int b, uint64_t node_slice) {
      outputs[b] = BranchOutput{};
      FamilySearch search(ctx, node_slice, family_slice);
      if (fixed_mode)
        search.run_fixed(*opts.fixed_fstar, b, outputs[b]);
      else if (stgq_mode)
        search.run_stgq(symmetry_candidates[b], outputs[b]);
      else
        search.run_general(b, outputs[b]);
      outputs[b].nodes = search.nodes();
    };

    auto run_round = [&](const std::vector<int>& active, uint64_t slice) {
      std::atomic<size_t> next{0};
      auto worker = [&] {
        for (;;) {
          size_t i = next.fetch_add(1);
          if (i >= active.size()) return;
          run_branch(active[i], slice);
        }
      };
      int nthreads = std::max(1, std::min<int>(opts.threads, static_cast<int>(active.size())));
      if (nthreads == 1) {
        worker();
      } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
      }
      for (int b : active) spent += outputs[b].nodes;
    };

    // Per-branch budget slices keep parallel runs deterministic. Unused slices
    // are recycled by rerunning the starved branches with 8x deeper slices;
    // discarded partial runs still count against the total budget.
    std::vector<int> active(branches);
    for (int b = 0; b < branches; ++b) active[b] = b;
    uint64_t base_slice = std::max<uint64_t>(1, opts.budget / branches);
    bool deepening = base_slice >= 8192;
    uint64_t slice = deepening
                         ? std::max<uint64_t>(1024, opts.budget / (static_cast<uint64_t>(branches) * 8))
                         : base_slice;
    run_round(active, slice);
    while (deepening) {
      std::vector<int> starved;
      for (int b : active)
        if (outputs[b].truncated && !outputs[b].truncated_by_families)
          starved.push_back(b);
      if (starved.empty()) break;
      if (spent >= opts.budget) break;
      uint64_t next_slice = slice * 8;
      if (next_slice > (opts.budget - spent) / starved.size()) break;
      slice = next_slice;
      active = std::move(starved);
      run_round(active, slice);
    }
  }

  std::vector<KantorFamily> collected;
  for (auto& out : outputs) {
    result.truncated |= out.truncated;
    for (auto& fam : out.families) collected.push_back(std::move(fam));
  }
  result.nodes = spent;
  result.truncated |= ctx.enumeration_truncated;

  std::sort(collected.begin(), collected.end(),
            [](const KantorFamily& a, const KantorFamily& b) {
              return a.signature() < b.signature();
            });
  std::optional<FrohardtContext> filter_ctx;
  if (opts.require_case != 0 || opts.require_frohardt)
    filter_ctx = FrohardtContext::for_group(g);
  KantorFamily::Signature prev_sig;
  for (auto& fam : collected) {
    auto sig = fam.signature();
    if (!prev_sig.empty() && sig == prev_sig) {
      ++result.duplicates_suppressed;
      continue;
    }
    prev_sig = std::move(sig);
    if (filter_ctx && !family_matches_filters(fam, opts, *filter_ctx)) continue;
    result.families.push_back(std::move(fam));
  }
  return result;
}

}  // namespace forge
