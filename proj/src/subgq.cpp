#include "forge/subgq.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace forge {

Subgroup symmetry_subgroup_in_action(const GQ& gq, const GroupPtr& group,
                                     const std::vector<GeometryMap>& action, int x) {
  if (static_cast<int>(action.size()) != group->order())
    throw InputError("action must carry one map per group element");
  std::vector<int> members;
  for (int g = 0; g < group->order(); ++g) {
    bool fixes = true;
    for (int p = 0; p < gq.num_points() && fixes; ++p)
      if (gq.collinear(x, p) && action[g].point_perm[p] != p) fixes = false;
    if (fixes) members.push_back(g);
  }
  return Subgroup::from_members(group, std::move(members));
}

namespace {

// K' as its own multiplication table, with id maps in both directions.
std::pair<GroupPtr, std::vector<int>> subgroup_table(const GroupPtr& g,
                                                     const Subgroup& sub) {
  const auto& mem = sub.members();
  int k = static_cast<int>(mem.size());
  std::vector<int> local_of(g->order(), -1);
  for (int i = 0; i < k; ++i) local_of[mem[i]] = i;
  std::vector<uint16_t> flat(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      flat[static_cast<size_t>(a) * k + b] =
          static_cast<uint16_t>(local_of[g->mul(mem[a], mem[b])]);
  auto table = GroupTable::make_flat(g->name() + "|sub" + std::to_string(k), k,
                                     std::move(flat));
  return {table, mem};
}

int common_line(const IncidenceGeometry& geom, int p, int q) {
  for (int l : geom.pencil(p))
    if (geom.incident(q, l)) return l;
  return -1;
}

}  // namespace

SubGqResult subgq_from_subplane(const GQ& gq, const GroupPtr& group,
                                const std::vector<GeometryMap>& action,
                                const Subgroup& s, int x, int z,
                                const AffinePlane& plane,
                                const PlaneTranslationGroup& tgroup,
                                const SubplaneResult& subplane) {
  if (gq.s() != gq.t()) throw InputError("subquadrangle extraction requires order (t,t)");
  if (x < 0 || x >= gq.num_points() || z < 0 || z >= gq.num_points())
    throw InputError("base point out of range");
  if (gq.collinear(x, z)) throw InputError("z must not be collinear with x");
  if (tgroup.parent_group != group)
    throw InputError("translation group was built from a different elation group");
  int t = gq.t();
  int r = subplane.subplane.order;

  // The plane point of {x,z} is the trace of the pair; it must lie in the
  // subplane.
  std::vector<int> base_key = perp(gq, PerpKind::Points, {x, z}).members;
  int base_plane_point = plane.point_by_key(base_key);
  if (base_plane_point < 0)
    throw InputError("the pair trace is not a point of the derived plane");
  if (!std::binary_search(subplane.parent_points.begin(), subplane.parent_points.end(),
                          base_plane_point))
    throw InputError("the subplane does not contain the plane point of the base pair");

  // Member subgroups per selected parallel class: the stabilizer of the line
  // through z whose projection line at x carries that class.
  std::map<int, int> class_of_gq_line;
  for (size_t c = 0; c < plane.class_sources.size(); ++c)
    class_of_gq_line[plane.class_sources[c]] = static_cast<int>(c);

  std::map<int, int> line_of_class;  // class index -> GQ line through z
  for (int u : gq.geom().pencil(z)) {
    int proj = gq.projection(x, u);
    int axis = common_line(gq.geom(), x, proj);
    auto it = class_of_gq_line.find(axis);
    if (it == class_of_gq_line.end())
      throw InvariantError("projection line missing from the derived plane classes");
    line_of_class[it->second] = u;
  }

  SubGqResult result;
  result.r = r;
  result.improper =
      static_cast<int>(subplane.parent_points.size()) == plane.geom.num_points();

  std::vector<Subgroup> restricted;  // A'_j per selected class, subgroups of K
  for (int cls : subplane.class_indices) {
    int u_line = line_of_class.at(cls);
    std::vector<int> stab;
    for (int g = 0; g < group->order(); ++g)
      if (action[g].line_perm[u_line] == u_line) stab.push_back(g);
    Subgroup a = Subgroup::from_members(group, std::move(stab));
    if (a.size() != t)
      throw InvariantError("line stabilizer does not have order t");

    // Image of T' in the quotient restricted back: keep the elements whose
    // coset lies in T'.
    std::vector<int> cut;
    for (int g : a.members())
      if (subplane.tprime.contains(tgroup.element_to_coset[g])) cut.push_back(g);
    Subgroup aprime = Subgroup::from_members(group, std::move(cut));
    if (aprime.size() != r)
      throw LemmaCounterexample("restricted member has order " +
                                std::to_string(aprime.size()) + ", expected " +
                                std::to_string(r));
    restricted.push_back(std::move(aprime));
  }

  // K' and the kernel of its action on the subplane.
  std::set<int> gens;
  for (const auto& a : restricted)
    for (int g : a.members()) gens.insert(g);
  std::vector<int> gen_list(gens.begin(), gens.end());
  result.kprime = subgroup_generated(group, gen_list);

  std::vector<int> kernel;
  for (int g : result.kprime.members()) {
    bool fixes = true;
    for (int p : subplane.parent_points) {
      if (tgroup.element_maps[g].point_perm[p] != p) {
        fixes = false;
        break;
      }
    }
    if (fixes) kernel.push_back(g);
  }
  result.sprime = Subgroup::from_members(group, std::move(kernel));
  result.sigma = result.sprime.size();
  result.sigma_equals_r = result.sigma == r;
  result.s_inside_kprime = s.mask().is_subset_of(result.kprime.mask());

  if (result.sigma < 2)
    throw LemmaCounterexample("kernel of the restricted action is trivial");
  if (result.kprime.size() != r * r * result.sigma)
    throw LemmaCounterexample("restricted group has order " +
                              std::to_string(result.kprime.size()) +
                              ", expected r^2*sigma = " +
                              std::to_string(r * r * result.sigma));

  // Assemble (F', F'*) inside K's own table.
  auto [ktable, elements] = subgroup_table(group, result.kprime);
  result.kprime_table = ktable;
  result.kprime_elements = elements;
  std::vector<int> local_of(group->order(), -1);
  for (size_t i = 0; i < elements.size(); ++i) local_of[elements[i]] = static_cast<int>(i);

  KantorFamily fam;
  fam.group = ktable;
  fam.type = {r, result.sigma};
  for (const auto& a : restricted) {
    std::vector<int> local_members;
    for (int g : a.members()) local_members.push_back(local_of[g]);
    fam.f.push_back(Subgroup::from_members(ktable, std::move(local_members)));
    // Starred member: the product set A'_j * S'.
    std::set<int> star;
    for (int g : a.members())
      for (int h : result.sprime.members()) star.insert(local_of[group->mul(g, h)]);
    fam.fstar.push_back(
        Subgroup::from_members(ktable, std::vector<int>(star.begin(), star.end())));
    if (fam.fstar.back().size() != r * result.sigma)
      throw LemmaCounterexample("starred member has order " +
                                std::to_string(fam.fstar.back().size()) +
                                ", expected r*sigma");
  }

  result.family_report = verify_kantor_family(fam);
  if (!result.family_report.all_pass())
    throw LemmaCounterexample("restricted family fails axiom " +
                              result.family_report.first_failure()->axiom + ": " +
                              result.family_report.first_failure()->detail);
  // Pairwise starred intersections must all equal the kernel.
  for (size_t i = 0; i < fam.fstar.size(); ++i)
    for (size_t j = i + 1; j < fam.fstar.size(); ++j) {
      auto inter = fam.fstar[i].intersect(fam.fstar[j]);
      std::vector<int> back;
      for (int li : inter.members()) back.push_back(elements[li]);
      if (back != result.sprime.members())
        throw LemmaCounterexample("starred members do not meet in the kernel");
    }
  fam.canonicalize();
  result.family = fam;

  // Coset geometry of the restricted family and its embedding into the
  // parent: affine points map through the action at z, lines through joins.
  result.sub_egq = gq_from_kantor(result.family);
  const GQ& sub = result.sub_egq.gq;
  result.point_embedding.assign(sub.num_points(), -1);
  result.line_embedding.assign(sub.num_lines(), -1);
  result.point_embedding[0] = x;
  for (int local = 0; local < result.kprime_table->order(); ++local) {
    int parent_element = elements[local];
    result.point_embedding[result.sub_egq.affine_point(local)] =
        action[parent_element].point_perm[z];
  }
  // Affine sub-lines: join of two embedded affine points.
  int m = result.sigma + 1;
  for (int l = m; l < sub.num_lines(); ++l) {
    const auto& pts = sub.geom().line(l);
    std::vector<int> affine;
    for (int p : pts)
      if (result.sub_egq.is_affine(p)) affine.push_back(result.point_embedding[p]);
    if (affine.size() < 2) throw InvariantError("affine sub-line with too few points");
    int parent_line = common_line(gq.geom(), affine[0], affine[1]);
    if (parent_line < 0)
      throw LemmaCounterexample("embedded affine points span no parent line");
    result.line_embedding[l] = parent_line;
    // Its starred coset point projects back to x's side.
    for (int p : pts)
      if (!result.sub_egq.is_affine(p) && result.point_embedding[p] < 0)
        result.point_embedding[p] = gq.projection(x, parent_line);
  }
  // Axis sub-lines: join x with the embedded starred point of the identity
  // coset of each member.
  for (int i = 0; i < m; ++i) {
    int star_point = result.sub_egq.coset_point(i, 0);
    int embedded = result.point_embedding[star_point];
    if (embedded < 0) throw InvariantError("starred coset point was never embedded");
    int axis = common_line(gq.geom(), x, embedded);
    if (axis < 0) throw LemmaCounterexample("axis line missing in the parent");
    result.line_embedding[i] = axis;
  }

  // The embedding must be injective and incidence-preserving both ways.
  {
    std::set<int> seen_points(result.point_embedding.begin(), result.point_embedding.end());
    std::set<int> seen_lines(result.line_embedding.begin(), result.line_embedding.end());
    if (seen_points.count(-1) || static_cast<int>(seen_points.size()) != sub.num_points())
      throw LemmaCounterexample("point embedding is not injective");
    if (seen_lines.count(-1) || static_cast<int>(seen_lines.size()) != sub.num_lines())
      throw LemmaCounterexample("line embedding is not injective");
    for (int l = 0; l < sub.num_lines(); ++l) {
      std::set<int> image;
      for (int p : sub.geom().line(l)) image.insert(result.point_embedding[p]);
      for (int p : image)
        if (!gq.geom().incident(p, result.line_embedding[l]))
          throw LemmaCounterexample("embedding does not preserve incidence");
    }
  }

  // x stays regular in the sub-geometry, with the kernel as symmetry group.
  if (!is_regular_point(sub, 0))
    throw LemmaCounterexample("base point is not regular in the sub-geometry");
  std::vector<GeometryMap> kernel_maps;
  for (int g : result.sprime.members())
    kernel_maps.push_back(result.sub_egq.action[local_of[g]]);
  auto sym = symmetry_group(sub, 0, kernel_maps);
  if (sym.size() != result.sigma)
    throw LemmaCounterexample("kernel does not realize the symmetry group of the base point");

  return result;
}

std::vector<SubGqResult> classical_subgqs(const GQ& gq, const GroupPtr& group,
                                          const std::vector<GeometryMap>& action,
                                          const Subgroup& s, int x, int z) {
  int h = 0;
  int p = prime_power_base(gq.t(), &h);
  if (p == 0)
    throw InputError("parent order " + std::to_string(gq.t()) +
                     " is not a prime power; the parent is structurally broken");

  AffinePlane plane = derived_plane(gq, x);
  PlaneTranslationGroup tgroup = plane_translation_group(plane, gq, group, action, s);
  std::vector<int> base_key = perp(gq, PerpKind::Points, {x, z}).members;
  int base_plane_point = plane.point_by_key(base_key);
  if (base_plane_point < 0)
    throw InvariantError("base pair trace is not a plane point");

  std::vector<SubGqResult> out;
  for (const auto& subplane : find_subplanes(plane, tgroup, p, base_plane_point)) {
    SubGqResult res =
        subgq_from_subplane(gq, group, action, s, x, z, plane, tgroup, subplane);
    if (p <= 3) {
      const EgqRealization& ref = classical_reference(p);
      auto iso = gq_isomorphic(res.sub_egq.gq, ref.gq);
      if (iso.status != IsoResult::Status::Found)
        throw LemmaCounterexample("prime-order sub-geometry is not classical");
    }
    out.push_back(std::move(res));
  }
  return out;
}

const EgqRealization& classical_reference(int p) {
  if (p == 2) {
    static const EgqRealization ref = [] {
      auto g = build_elementary_abelian(2, 3);
      auto found = search_kantor_families(g, 2, 2);
      if (found.families.empty()) throw InvariantError("no (2,2) reference family");
      return gq_from_kantor(found.families.front());
    }();
    return ref;
  }
  if (p == 3) {
    static const EgqRealization ref = [] {
      auto g = build_heisenberg(3);
      auto found = search_kantor_families(g, 3, 3);
      if (found.families.empty()) throw InvariantError("no (3,3) reference family");
      return gq_from_kantor(found.families.front());
    }();
    return ref;
  }
  throw InputError("classical references exist for p in {2,3}");
}

}  // namespace forge
