#include "forge/planes.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "forge/field.hpp"
#include "forge/regularity.hpp"

namespace forge {

int AffinePlane::line_through(int point, int cls) const {
  for (int l : parallel_classes[cls])
    if (geom.incident(point, l)) return l;
  throw InvariantError("point misses a parallel class");
}

int AffinePlane::point_by_key(const std::vector<int>& key) const {
  for (size_t p = 0; p < point_keys.size(); ++p)
    if (point_keys[p] == key) return static_cast<int>(p);
  return -1;
}

PlaneCheck verify_affine_plane(const AffinePlane& plane) {
  PlaneCheck check;
  int n = plane.order;
  const auto& geom = plane.geom;
  if (n < 2) {
    check.failure = "order";
    check.detail = "plane order must be at least 2";
    return check;
  }
  if (geom.num_points() != n * n) {
    check.failure = "points";
    check.detail = "expected " + std::to_string(n * n) + " points, found " +
                   std::to_string(geom.num_points());
    return check;
  }
  if (geom.num_lines() != n * n + n) {
    check.failure = "lines";
    check.detail = "expected " + std::to_string(n * n + n) + " lines";
    return check;
  }
  if (static_cast<int>(plane.parallel_classes.size()) != n + 1) {
    check.failure = "classes";
    check.detail = "expected " + std::to_string(n + 1) + " parallel classes";
    return check;
  }
  std::vector<char> seen(geom.num_lines(), 0);
  for (const auto& cls : plane.parallel_classes) {
    if (static_cast<int>(cls.size()) != n) {
      check.failure = "classes";
      check.detail = "every parallel class must hold " + std::to_string(n) + " lines";
      return check;
    }
    for (int l : cls) {
      if (l < 0 || l >= geom.num_lines() || seen[l]) {
        check.failure = "classes";
        check.detail = "parallel classes must partition the line set";
        return check;
      }
      seen[l] = 1;
    }
  }
  for (int l = 0; l < geom.num_lines(); ++l) {
    if (!seen[l]) {
      check.failure = "classes";
      check.detail = "line " + std::to_string(l) + " belongs to no class";
      return check;
    }
    if (static_cast<int>(geom.line(l).size()) != n) {
      check.failure = "line-size";
      check.detail = "line " + std::to_string(l) + " does not carry " +
                     std::to_string(n) + " points";
      return check;
    }
  }
  // Each point lies on exactly one line per class (covers Playfair).
  for (int p = 0; p < geom.num_points(); ++p)
    for (size_t c = 0; c < plane.parallel_classes.size(); ++c) {
      int count = 0;
      for (int l : plane.parallel_classes[c])
        if (geom.incident(p, l)) ++count;
      if (count != 1) {
        check.failure = "playfair";
        check.detail = "point " + std::to_string(p) + " lies on " +
                       std::to_string(count) + " lines of class " + std::to_string(c);
        return check;
      }
    }
  // Two distinct points lie on exactly one common line.
  for (int p = 0; p < geom.num_points(); ++p)
    for (int q = p + 1; q < geom.num_points(); ++q) {
      int common = 0;
      for (int l : geom.pencil(p))
        if (geom.incident(q, l)) ++common;
      if (common != 1) {
        check.failure = "joins";
        check.detail = "points " + std::to_string(p) + " and " + std::to_string(q) +
                       " lie on " + std::to_string(common) + " common lines";
        return check;
      }
    }
  check.ok = true;
  return check;
}

AffinePlane derived_plane(const GQ& gq, int x) {
  if (x < 0 || x >= gq.num_points()) throw InputError("point out of range");
  if (gq.s() != gq.t())
    throw InputError("derived planes require a quadrangle of order (t,t)");
  if (!is_regular_point(gq, x))
    throw InputError("derived planes require a regular point");

  int t = gq.t();
  // Plane points: double perps of noncollinear pairs in x^perp, keyed by
  // their sorted GQ point sets.
  std::set<std::vector<int>> keys;
  std::vector<int> star_points = gq.star(x).to_ids();
  for (size_t i = 0; i < star_points.size(); ++i) {
    for (size_t j = i + 1; j < star_points.size(); ++j) {
      int u = star_points[i], v = star_points[j];
      if (gq.collinear(u, v)) continue;
      keys.insert(double_perp(gq, PerpKind::Points, {u, v}).members);
    }
  }
  AffinePlane plane;
  plane.order = t;
  plane.point_keys.assign(keys.begin(), keys.end());

  // Plane lines: points of x^perp minus x, grouped into classes by the GQ
  // line through x carrying them.
  std::vector<std::vector<int>> lines;
  for (int l : gq.geom().pencil(x)) {
    plane.class_sources.push_back(l);
    std::vector<int> cls;
    for (int w : gq.geom().line(l)) {
      if (w == x) continue;
      std::vector<int> pts;
      for (size_t p = 0; p < plane.point_keys.size(); ++p)
        if (std::binary_search(plane.point_keys[p].begin(), plane.point_keys[p].end(), w))
          pts.push_back(static_cast<int>(p));
      cls.push_back(static_cast<int>(lines.size()));
      plane.line_sources.push_back(w);
      lines.push_back(std::move(pts));
    }
    plane.parallel_classes.push_back(std::move(cls));
  }

  plane.geom = IncidenceGeometry(static_cast<int>(plane.point_keys.size()), lines);
  plane.geom.line_labels.reserve(plane.line_sources.size());
  for (int w : plane.line_sources)
    plane.geom.line_labels.push_back("w" + std::to_string(w));
  plane.class_of_line.assign(plane.geom.num_lines(), -1);
  for (size_t c = 0; c < plane.parallel_classes.size(); ++c)
    for (int l : plane.parallel_classes[c]) plane.class_of_line[l] = static_cast<int>(c);

  auto check = verify_affine_plane(plane);
  if (!check.ok)
    throw InvariantError("derived structure is not an affine plane: " + check.detail);
  return plane;
}

PlaneTranslationGroup plane_translation_group(const AffinePlane& plane, const GQ& gq,
                                              const GroupPtr& group,
                                              const std::vector<GeometryMap>& action,
                                              const Subgroup& s) {
  if (s.parent() != group) throw InputError("symmetry subgroup belongs to a different group");
  if (static_cast<int>(action.size()) != group->order())
    throw InputError("action must carry one map per group element");
  if (plane.point_keys.empty() || plane.line_sources.empty())
    throw InputError("translation groups require a derived plane");

  // Induced plane maps per group element.
  std::map<std::vector<int>, int> key_index;
  for (size_t p = 0; p < plane.point_keys.size(); ++p)
    key_index.emplace(plane.point_keys[p], static_cast<int>(p));
  std::vector<int> source_index(gq.num_points(), -1);
  for (size_t l = 0; l < plane.line_sources.size(); ++l)
    source_index[plane.line_sources[l]] = static_cast<int>(l);

  PlaneTranslationGroup out;
  out.parent_group = group;
  out.element_maps.resize(group->order());
  std::vector<char> in_kernel(group->order(), 0);
  for (int g = 0; g < group->order(); ++g) {
    GeometryMap pm;
    pm.point_perm.resize(plane.geom.num_points());
    pm.line_perm.resize(plane.geom.num_lines());
    for (size_t p = 0; p < plane.point_keys.size(); ++p) {
      std::vector<int> image;
      image.reserve(plane.point_keys[p].size());
      for (int q : plane.point_keys[p]) image.push_back(action[g].point_perm[q]);
      std::sort(image.begin(), image.end());
      auto it = key_index.find(image);
      if (it == key_index.end())
        throw InputError("the action does not preserve the derived plane");
      pm.point_perm[p] = it->second;
    }
    for (size_t l = 0; l < plane.line_sources.size(); ++l) {
      int image = action[g].point_perm[plane.line_sources[l]];
      if (image < 0 || source_index[image] < 0)
        throw InputError("the action does not preserve the plane line set");
      pm.line_perm[l] = source_index[image];
    }
    in_kernel[g] = pm.is_identity();
    out.element_maps[g] = std::move(pm);
  }

  // The kernel must be exactly the supplied symmetry subgroup.
  for (int g = 0; g < group->order(); ++g) {
    if (in_kernel[g] && !s.contains(g))
      throw InputError("kernel mismatch: element " + std::to_string(g) +
                       " acts trivially but is outside the supplied subgroup");
    if (!in_kernel[g] && s.contains(g))
      throw InputError("kernel mismatch: element " + std::to_string(g) +
                       " is in the supplied subgroup but moves the plane");
  }

  QuotientGroup quotient = build_quotient(group, s);
  out.structure = quotient.table;
  out.element_to_coset = quotient.coset_of;
  out.maps.resize(out.structure->order());
  for (size_t c = 0; c < quotient.cosets.size(); ++c)
    out.maps[c] = out.element_maps[quotient.cosets[c][0]];

  // Sharp transitivity on plane points.
  std::set<int> orbit;
  for (const auto& m : out.maps) orbit.insert(m.point_perm[0]);
  if (static_cast<int>(orbit.size()) != plane.geom.num_points() ||
      out.structure->order() != plane.geom.num_points())
    throw InvariantError("translation group is not sharply transitive on plane points");

  // Parallel classes are preserved setwise; record the class stabilizers.
  for (const auto& cls : plane.parallel_classes) {
    std::vector<int> stab;
    for (int e = 0; e < out.structure->order(); ++e) {
      bool fixes_all = true;
      bool preserves = true;
      for (int l : cls) {
        int img = out.maps[e].line_perm[l];
        if (img != l) fixes_all = false;
        if (plane.class_of_line[img] != plane.class_of_line[l]) preserves = false;
      }
      if (!preserves) throw InvariantError("translations must preserve parallel classes");
      if (fixes_all) stab.push_back(e);
    }
    out.class_stabilizers.push_back(Subgroup::from_members(out.structure, std::move(stab)));
  }
  return out;
}

// --- projective machinery -------------------------------------------------

namespace pg {

namespace {

std::vector<int> normalize(std::vector<int> vec, const GaloisField& f) {
  for (int c : vec) {
    if (c == 0) continue;
    // Scale so the first nonzero coordinate becomes 1.
    int inv = -1;
    for (int x = 1; x < f.q; ++x)
      if (f.mul(c, x) == 1) {
        inv = x;
        break;
      }
    for (auto& coord : vec) coord = f.mul(coord, inv);
    return vec;
  }
  return vec;  // zero vector, caller filters
}

}  // namespace

std::vector<std::vector<int>> points(int d, int q) {
  if (q != 2 && q != 3 && q != 4)
    throw InputError("projective machinery supports q in {2,3,4}");
  const GaloisField& f = GaloisField::get(q);
  std::set<std::vector<int>> pts;
  std::vector<int> vec(d + 1, 0);
  long long total = 1;
  for (int i = 0; i <= d; ++i) total *= q;
  for (long long code = 1; code < total; ++code) {
    long long c = code;
    for (int i = 0; i <= d; ++i) {
      vec[i] = static_cast<int>(c % q);
      c /= q;
    }
    pts.insert(normalize(vec, f));
  }
  return {pts.begin(), pts.end()};
}

std::vector<std::vector<int>> lines(int d, int q) {
  const GaloisField& f = GaloisField::get(q);
  auto pts = points(d, q);
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < pts.size(); ++i) index.emplace(pts[i], static_cast<int>(i));

  std::set<std::vector<int>> out;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) {
      std::vector<int> line = {static_cast<int>(i), static_cast<int>(j)};
      // Remaining points: a + λ b for nonzero λ.
      for (int lam = 1; lam < q; ++lam) {
        std::vector<int> combo(pts[i].size());
        for (size_t k = 0; k < combo.size(); ++k)
          combo[k] = f.add(pts[i][k], f.mul(lam, pts[j][k]));
        line.push_back(index.at(normalize(combo, f)));
      }
      std::sort(line.begin(), line.end());
      line.erase(std::unique(line.begin(), line.end()), line.end());
      out.insert(line);
    }
  return {out.begin(), out.end()};
}

}  // namespace pg

void verify_spread(const Spread& spread) {
  if (spread.h < 1) throw InputError("spread requires h >= 1");
  auto pts = pg::points(2 * spread.h - 1, spread.q);
  long long expected_count = 1;
  for (int i = 0; i < spread.h; ++i) expected_count *= spread.q;
  expected_count += 1;  // q^h + 1 components
  if (static_cast<long long>(spread.subspaces.size()) != expected_count)
    throw InputError("spread must carry q^h + 1 components");

  long long member_size = (expected_count - 1 - 1) / (spread.q - 1) + 1;
  // (q^h - 1)/(q - 1) points per (h-1)-subspace.
  member_size = 1;
  for (int i = 0; i < spread.h; ++i) member_size *= spread.q;
  member_size = (member_size - 1) / (spread.q - 1);

  std::vector<char> covered(pts.size(), 0);
  for (const auto& sub : spread.subspaces) {
    if (static_cast<long long>(sub.size()) != member_size)
      throw InputError("spread component has the wrong size");
    for (int p : sub) {
      if (p < 0 || p >= static_cast<int>(pts.size()))
        throw InputError("spread component has an out-of-range point");
      if (covered[p]) throw InputError("spread components are not disjoint");
      covered[p] = 1;
    }
  }
  for (size_t p = 0; p < pts.size(); ++p)
    if (!covered[p]) throw InputError("spread does not cover the space");
}

Spread find_spread_pg32() {
  auto all_lines = pg::lines(3, 2);  // 35 lines on 15 points
  int num_points = 15;
  std::vector<std::vector<int>> chosen;
  std::vector<char> covered(num_points, 0);

  auto rec = [&](auto&& self, int start) -> bool {
    int next_uncovered = -1;
    for (int p = 0; p < num_points; ++p)
      if (!covered[p]) {
        next_uncovered = p;
        break;
      }
    if (next_uncovered < 0) return true;
    for (int l = start; l < static_cast<int>(all_lines.size()); ++l) {
      const auto& line = all_lines[l];
      if (line[0] != next_uncovered) continue;  // lowest uncovered must lead
      bool free = true;
      for (int p : line)
        if (covered[p]) {
          free = false;
          break;
        }
      if (!free) continue;
      for (int p : line) covered[p] = 1;
      chosen.push_back(line);
      if (self(self, 0)) return true;
      chosen.pop_back();
      for (int p : line) covered[p] = 0;
    }
    return false;
  };
  if (!rec(rec, 0)) throw InvariantError("no spread found in PG(3,2)");

  Spread spread;
  spread.q = 2;
  spread.h = 2;
  spread.subspaces = std::move(chosen);
  verify_spread(spread);
  return spread;
}

SpreadPlane plane_from_spread(const Spread& spread) {
  if (spread.q != 2 && spread.q != 3 && spread.q != 4)
    throw InputError("plane_from_spread supports q in {2,3,4}");
  if (spread.h < 1 || spread.h > 2) throw InputError("plane_from_spread supports h <= 2");
  verify_spread(spread);

  const GaloisField& f = GaloisField::get(spread.q);
  int q = spread.q, h = spread.h;
  int dim = 2 * h;  // affine vector dimension
  auto infinity_points = pg::points(2 * h - 1, q);

  int n = 1;  // plane order q^h
  for (int i = 0; i < h; ++i) n *= q;
  int num_points = n * n;

  auto decode = [&](int code) {
    std::vector<int> vec(dim);
    for (int i = 0; i < dim; ++i) {
      vec[i] = code % q;
      code /= q;
    }
    return vec;
  };
  auto encode = [&](const std::vector<int>& vec) {
    int code = 0;
    for (int i = dim - 1; i >= 0; --i) code = code * q + vec[i];
    return code;
  };
  auto add_vec = [&](int a, int b) {
    auto va = decode(a), vb = decode(b);
    std::vector<int> out(dim);
    for (int i = 0; i < dim; ++i) out[i] = f.add(va[i], vb[i]);
    return encode(out);
  };

  // Direction cones over the spread components.
  std::vector<std::vector<int>> cones;
  for (const auto& sub : spread.subspaces) {
    std::set<int> cone = {0};
    for (int p : sub) {
      for (int lam = 1; lam < q; ++lam) {
        std::vector<int> scaled(dim);
        for (int i = 0; i < dim; ++i) scaled[i] = f.mul(lam, infinity_points[p][i]);
        cone.insert(encode(scaled));
      }
    }
    if (static_cast<int>(cone.size()) != n)
      throw InvariantError("direction cone has the wrong size");
    cones.emplace_back(cone.begin(), cone.end());
  }

  AffinePlane plane;
  plane.order = n;
  std::vector<std::vector<int>> lines;
  std::vector<std::vector<int>> point_to_line_per_class(cones.size(),
                                                        std::vector<int>(num_points, -1));
  for (size_t c = 0; c < cones.size(); ++c) {
    std::vector<int> cls;
    std::vector<char> used(num_points, 0);
    for (int base = 0; base < num_points; ++base) {
      if (used[base]) continue;
      std::vector<int> line;
      for (int dir : cones[c]) {
        int p = add_vec(base, dir);
        used[p] = 1;
        line.push_back(p);
      }
      std::sort(line.begin(), line.end());
      int line_id = static_cast<int>(lines.size());
      for (int p : line) point_to_line_per_class[c][p] = line_id;
      cls.push_back(line_id);
      lines.push_back(std::move(line));
    }
    plane.parallel_classes.push_back(std::move(cls));
  }
  plane.geom = IncidenceGeometry(num_points, lines);
  plane.class_of_line.assign(plane.geom.num_lines(), -1);
  for (size_t c = 0; c < plane.parallel_classes.size(); ++c)
    for (int l : plane.parallel_classes[c]) plane.class_of_line[l] = static_cast<int>(c);

  auto check = verify_affine_plane(plane);
  if (!check.ok)
    throw InvariantError("spread did not induce an affine plane: " + check.detail);

  // Translations: the additive vector group, sharply transitive by design.
  PlaneTranslationGroup trans;
  std::vector<uint16_t> flat(static_cast<size_t>(num_points) * num_points);
  for (int a = 0; a < num_points; ++a)
    for (int b = 0; b < num_points; ++b)
      flat[static_cast<size_t>(a) * num_points + b] = static_cast<uint16_t>(add_vec(a, b));
  trans.structure = GroupTable::make_flat(
      "T(q=" + std::to_string(q) + ",h=" + std::to_string(h) + ")", num_points,
      std::move(flat));
  for (int g = 0; g < num_points; ++g) {
    GeometryMap m;
    m.point_perm.resize(num_points);
    m.line_perm.resize(plane.geom.num_lines());
    for (int p = 0; p < num_points; ++p) m.point_perm[p] = add_vec(p, g);
    for (size_t c = 0; c < cones.size(); ++c)
      for (int l : plane.parallel_classes[c]) {
        int rep = plane.geom.line(l)[0];
        m.line_perm[l] = point_to_line_per_class[c][add_vec(rep, g)];
      }
    trans.maps.push_back(std::move(m));
  }
  for (size_t c = 0; c < cones.size(); ++c)
    trans.class_stabilizers.push_back(Subgroup::from_members(trans.structure, cones[c]));

  return SpreadPlane{std::move(plane), std::move(trans)};
}

std::vector<SubplaneResult> find_subplanes(const AffinePlane& plane,
                                           const PlaneTranslationGroup& tgroup, int r,
                                           int basepoint) {
  int n = plane.order;
  if (r < 2 || r > n) throw InputError("subplane order must lie in [2, n]");
  if ((static_cast<long long>(r) * r == 0) ||
      tgroup.structure->order() % (r * r) != 0)
    throw InputError("r^2 must divide the translation group order");
  if (basepoint < 0 || basepoint >= plane.geom.num_points())
    throw InputError("basepoint out of range");

  std::vector<SubplaneResult> results;
  auto subgroups = enumerate_subgroups_of_order(tgroup.structure, r * r);
  for (const auto& tprime : subgroups.items) {
    // Candidate classes: those whose stabilizer meets T' in exactly r elements.
    std::vector<int> candidates;
    for (size_t c = 0; c < tgroup.class_stabilizers.size(); ++c)
      if (tgroup.class_stabilizers[c].mask().intersection_count(tprime.mask()) == r)
        candidates.push_back(static_cast<int>(c));
    if (static_cast<int>(candidates.size()) < r + 1) continue;

    // Basepoint orbit.
    std::vector<int> orbit;
    for (int e : tprime.members()) orbit.push_back(tgroup.maps[e].point_perm[basepoint]);
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    if (static_cast<int>(orbit.size()) != r * r) continue;

    // Lexicographic (r+1)-subsets of the candidate classes.
    std::vector<int> subset(r + 1);
    auto emit_subset = [&](const std::vector<int>& classes) {
      std::map<int, std::vector<int>> line_members;  // parent line -> subplane pts
      std::vector<int> class_of_parent_line;
      for (int cls : classes)
        for (int p : orbit) {
          int l = plane.line_through(p, cls);
          auto& mem = line_members[l];
          if (mem.empty()) mem.reserve(r);
          mem.push_back(p);
        }
      // Build the candidate subplane.
      if (static_cast<int>(line_members.size()) != (r + 1) * r) return;
      std::vector<int> parent_points = orbit;
      std::map<int, int> point_local;
      for (size_t i = 0; i < parent_points.size(); ++i)
        point_local[parent_points[i]] = static_cast<int>(i);

      AffinePlane sub;
      sub.order = r;
      std::vector<std::vector<int>> sub_lines;
      std::vector<int> parent_lines;
      sub.parallel_classes.assign(classes.size(), {});
      for (const auto& [parent_line, members] : line_members) {
        if (static_cast<int>(members.size()) != r) return;
        std::vector<int> local;
        local.reserve(members.size());
        for (int p : members) {
          auto dedup = point_local.find(p);
          if (dedup == point_local.end()) return;
          local.push_back(dedup->second);
        }
        std::sort(local.begin(), local.end());
        local.erase(std::unique(local.begin(), local.end()), local.end());
        if (static_cast<int>(local.size()) != r) return;
        int cls_index = -1;
        for (size_t ci = 0; ci < classes.size(); ++ci)
          if (plane.class_of_line[parent_line] == classes[ci]) cls_index = static_cast<int>(ci);
        sub.parallel_classes[cls_index].push_back(static_cast<int>(sub_lines.size()));
        parent_lines.push_back(parent_line);
        sub_lines.push_back(std::move(local));
      }
      sub.geom = IncidenceGeometry(r * r, sub_lines);
      sub.class_of_line.assign(sub.geom.num_lines(), -1);
      for (size_t c = 0; c < sub.parallel_classes.size(); ++c)
        for (int l : sub.parallel_classes[c]) sub.class_of_line[l] = static_cast<int>(c);
      if (!verify_affine_plane(sub).ok) return;

      SubplaneResult res;
      res.tprime = tprime;
      res.class_indices = classes;
      res.subplane = std::move(sub);
      res.parent_points = parent_points;
      res.parent_lines = std::move(parent_lines);
      res.basepoint = basepoint;
      results.push_back(std::move(res));
    };

    auto rec = [&](auto&& self, int slot, int start) -> void {
      if (slot == r + 1) {
        emit_subset(subset);
        return;
      }
      for (int i = start; i < static_cast<int>(candidates.size()); ++i) {
        subset[slot] = candidates[i];
        self(self, slot + 1, i + 1);
      }
    };
    rec(rec, 0, 0);
  }
  return results;
}

}  // namespace forge
