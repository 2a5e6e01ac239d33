#include "forge/regularity.hpp"

#include <algorithm>
#include <set>

namespace forge {

namespace {

// Concurrency masks for lines (reflexive), mirroring GQ point stars.
std::vector<Bitset> line_stars(const GQ& gq) {
  const auto& geom = gq.geom();
  std::vector<Bitset> stars(geom.num_lines(), Bitset(geom.num_lines()));
  for (int p = 0; p < geom.num_points(); ++p)
    for (int l : geom.pencil(p))
      for (int m : geom.pencil(p)) stars[l].set(m);
  for (int l = 0; l < geom.num_lines(); ++l) stars[l].set(l);
  return stars;
}

PerpSet perp_of_mask(const GQ& gq, PerpKind kind, const Bitset& mask_in) {
  PerpSet out;
  out.kind = kind;
  if (kind == PerpKind::Points) {
    Bitset acc(gq.num_points());
    bool first = true;
    for (int p = 0; p < gq.num_points(); ++p) {
      if (!mask_in.test(p)) continue;
      if (first) {
        acc = gq.star(p);
        first = false;
      } else {
        acc &= gq.star(p);
      }
    }
    out.members = acc.to_ids();
  } else {
    auto stars = line_stars(gq);
    Bitset acc(gq.num_lines());
    bool first = true;
    for (int l = 0; l < gq.num_lines(); ++l) {
      if (!mask_in.test(l)) continue;
      if (first) {
        acc = stars[l];
        first = false;
      } else {
        acc &= stars[l];
      }
    }
    out.members = acc.to_ids();
  }
  return out;
}

Bitset ids_to_mask(const std::vector<int>& ids, int n, const char* what) {
  Bitset mask(n);
  if (ids.empty()) throw InputError(std::string(what) + " set must be nonempty");
  for (int id : ids) {
    if (id < 0 || id >= n) throw InputError(std::string(what) + " id out of range");
    mask.set(id);
  }
  return mask;
}

}  // namespace

PerpSet perp(const GQ& gq, PerpKind kind, const std::vector<int>& ids) {
  int n = kind == PerpKind::Points ? gq.num_points() : gq.num_lines();
  return perp_of_mask(gq, kind, ids_to_mask(ids, n, "perp"));
}

PerpSet double_perp(const GQ& gq, PerpKind kind, const std::vector<int>& ids) {
  PerpSet first = perp(gq, kind, ids);
  if (first.members.empty()) {
    // Empty perp has everything in its perp.
    PerpSet out;
    out.kind = kind;
    int n = kind == PerpKind::Points ? gq.num_points() : gq.num_lines();
    out.members.resize(n);
    for (int i = 0; i < n; ++i) out.members[i] = i;
    return out;
  }
  return perp(gq, kind, first.members);
}

bool is_regular_pair(const GQ& gq, int x, int y) {
  if (x == y || gq.collinear(x, y))
    throw InputError("pair regularity requires distinct noncollinear points");
  PerpSet trace = perp(gq, PerpKind::Points, {x, y});
  if (trace.size() != gq.t() + 1)
    throw InvariantError("trace of a noncollinear pair has unexpected size");
  PerpSet span = perp(gq, PerpKind::Points, trace.members);
  return span.size() == gq.t() + 1;
}

bool is_regular_point(const GQ& gq, int x) {
  for (int y = 0; y < gq.num_points(); ++y) {
    if (gq.collinear(x, y)) continue;
    if (!is_regular_pair(gq, x, y)) return false;  // first bad pair decides
  }
  return true;
}

bool is_regular_line(const GQ& gq, int l) {
  return is_regular_point(gq.transpose(), l);
}

namespace {

SymmetryGroup close_symmetries(const GQ& gq, int x, PerpKind kind,
                               const std::vector<GeometryMap>& candidates) {
  for (const auto& map : candidates)
    if (!is_automorphism(gq, map))
      throw InputError("symmetry candidates must be automorphisms");

  // A symmetry fixes every element of the star of its center/axis.
  auto fixes_star = [&](const GeometryMap& map) {
    if (kind == PerpKind::Points) {
      for (int p = 0; p < gq.num_points(); ++p)
        if (gq.collinear(x, p) && map.point_perm[p] != p) return false;
      // Lines through x are fixed as well once their points are.
      return true;
    }
    for (int p : gq.geom().line(x))
      if (map.point_perm[p] != p) return false;
    for (int p : gq.geom().line(x))
      for (int l : gq.geom().pencil(p))
        if (map.line_perm[l] != l) return false;
    return true;
  };

  std::set<GeometryMap> closed;
  closed.insert(GeometryMap::identity(gq.num_points(), gq.num_lines()));
  for (const auto& map : candidates)
    if (fixes_star(map)) closed.insert(map);

  // Close under composition (small sets; sizes divide t).
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GeometryMap> snapshot(closed.begin(), closed.end());
    for (const auto& f : snapshot)
      for (const auto& g : snapshot) {
        GeometryMap h = f.compose(g);
        if (closed.insert(h).second) {
          if (!fixes_star(h))
            throw InvariantError("composition of symmetries is not a symmetry");
          grew = true;
        }
      }
  }

  SymmetryGroup out;
  out.center_or_axis = x;
  out.kind = kind;
  out.maps.assign(closed.begin(), closed.end());
  return out;
}

}  // namespace

SymmetryGroup symmetry_group(const GQ& gq, int x,
                             const std::vector<GeometryMap>& candidates) {
  if (x < 0 || x >= gq.num_points()) throw InputError("center out of range");
  SymmetryGroup out = close_symmetries(gq, x, PerpKind::Points, candidates);
  if (gq.t() % out.size() != 0)
    throw InvariantError("symmetry group size does not divide t");
  return out;
}

bool is_center_of_symmetry(const GQ& gq, int x,
                           const std::vector<GeometryMap>& candidates) {
  SymmetryGroup s = symmetry_group(gq, x, candidates);
  bool verdict = s.size() == gq.t();
  if (verdict && !is_regular_point(gq, x))
    throw InvariantError("center of symmetry is not a regular point");
  return verdict;
}

SymmetryGroup line_symmetry_group(const GQ& gq, int l,
                                  const std::vector<GeometryMap>& candidates) {
  if (l < 0 || l >= gq.num_lines()) throw InputError("axis out of range");
  SymmetryGroup out = close_symmetries(gq, l, PerpKind::Lines, candidates);
  if (gq.s() % out.size() != 0)
    throw InvariantError("symmetry group size does not divide s");
  return out;
}

bool is_axis_of_symmetry(const GQ& gq, int l,
                         const std::vector<GeometryMap>& candidates) {
  SymmetryGroup s = line_symmetry_group(gq, l, candidates);
  bool verdict = s.size() == gq.s();
  if (verdict && !is_regular_line(gq, l))
    throw InvariantError("axis of symmetry is not a regular line");
  return verdict;
}

bool check_star_property(const GQ& gq, const std::vector<GeometryMap>& candidates,
                         int x, int line) {
  if (x < 0 || x >= gq.num_points()) throw InputError("base point out of range");
  std::vector<int> lines;
  if (line >= 0) {
    if (!gq.geom().incident(x, line))
      throw InputError("the inspected line must pass through the base point");
    lines.push_back(line);
  } else {
    lines = gq.geom().pencil(x);
  }
  for (const auto& map : candidates) {
    if (!is_automorphism(gq, map))
      throw InputError("candidates must be automorphisms");
    for (int l : lines) {
      bool fixes_some = false;
      bool fixes_all = true;
      for (int p : gq.geom().line(l)) {
        if (map.point_perm[p] != p) fixes_all = false;
        if (p != x && map.point_perm[p] == p) fixes_some = true;
      }
      if (fixes_some && !fixes_all) return false;
    }
  }
  return true;
}

}  // namespace forge
