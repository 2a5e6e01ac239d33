#include "forge/gq.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace forge {

namespace {
const std::string kEmptyLabel;
}

IncidenceGeometry::IncidenceGeometry(int num_points, std::vector<std::vector<int>> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  if (num_points_ < 0) throw InputError("negative point count");
  pencils_.resize(num_points_);
  for (size_t l = 0; l < lines_.size(); ++l) {
    auto& pts = lines_[l];
    std::sort(pts.begin(), pts.end());
    for (size_t i = 0; i < pts.size(); ++i) {
      if (pts[i] < 0 || pts[i] >= num_points_)
        throw InputError("line " + std::to_string(l) + " has out-of-range point id");
      if (i > 0 && pts[i] == pts[i - 1])
        throw InputError("line " + std::to_string(l) + " repeats point " +
                         std::to_string(pts[i]));
      pencils_[pts[i]].push_back(static_cast<int>(l));
    }
  }
}

bool IncidenceGeometry::incident(int p, int l) const {
  const auto& pts = lines_[l];
  return std::binary_search(pts.begin(), pts.end(), p);
}

const std::string& IncidenceGeometry::point_label(int p) const {
  if (p < static_cast<int>(point_labels.size())) return point_labels[p];
  return kEmptyLabel;
}

const std::string& IncidenceGeometry::line_label(int l) const {
  if (l < static_cast<int>(line_labels.size())) return line_labels[l];
  return kEmptyLabel;
}

IncidenceGeometry IncidenceGeometry::transpose() const {
  std::vector<std::vector<int>> dual_lines(num_points_);
  for (int p = 0; p < num_points_; ++p) dual_lines[p] = pencils_[p];
  IncidenceGeometry out(num_lines(), std::move(dual_lines));
  out.point_labels = line_labels;
  out.line_labels = point_labels;
  return out;
}

GqCheck verify_gq(const IncidenceGeometry& geom) {
  GqCheck check;
  if (geom.num_points() == 0 || geom.num_lines() == 0) {
    check.failure = "empty";
    check.detail = "geometry has no points or no lines";
    return check;
  }

  size_t line_size = geom.line(0).size();
  for (int l = 1; l < geom.num_lines(); ++l)
    if (geom.line(l).size() != line_size) {
      check.failure = "irregular-line";
      check.detail = "lines 0 and " + std::to_string(l) + " carry different point counts";
      check.witness_lines = {0, l};
      return check;
    }
  size_t degree = geom.pencil(0).size();
  for (int p = 1; p < geom.num_points(); ++p)
    if (geom.pencil(p).size() != degree) {
      check.failure = "irregular-point";
      check.detail = "points 0 and " + std::to_string(p) + " lie on different line counts";
      check.witness_points = {0, p};
      return check;
    }

  int s = static_cast<int>(line_size) - 1;
  int t = static_cast<int>(degree) - 1;
  if (s < 2 || t < 2) {
    check.failure = "not-thick";
    check.detail = "order (" + std::to_string(s) + "," + std::to_string(t) +
                   ") is not thick";
    return check;
  }

  // Collinearity masks (reflexive).
  std::vector<Bitset> star(geom.num_points(), Bitset(geom.num_points()));
  for (int l = 0; l < geom.num_lines(); ++l)
    for (int p : geom.line(l))
      for (int q : geom.line(l)) star[p].set(q);

  // Quadrangle axiom via projection uniqueness: every non-incident (p, L)
  // admits exactly one (q, M) with p I M I q I L.
  for (int p = 0; p < geom.num_points(); ++p) {
    for (int l = 0; l < geom.num_lines(); ++l) {
      if (geom.incident(p, l)) continue;
      int hits = 0;
      int q1 = -1, m1 = -1, q2 = -1, m2 = -1;
      for (int q : geom.line(l)) {
        if (!star[p].test(q)) continue;
        for (int m : geom.pencil(p)) {
          if (!geom.incident(q, m)) continue;
          ++hits;
          if (hits == 1) {
            q1 = q;
            m1 = m;
          } else if (hits == 2) {
            q2 = q;
            m2 = m;
          }
        }
      }
      if (hits == 1) continue;
      if (hits == 0) {
        check.failure = "no-projection";
        check.detail = "no path from point " + std::to_string(p) + " to line " +
                       std::to_string(l);
        check.witness_points = {p};
        check.witness_lines = {l};
        return check;
      }
      if (q1 == q2) {
        check.failure = "digon";
        check.detail = "points " + std::to_string(p) + " and " + std::to_string(q1) +
                       " lie on two common lines";
        check.witness_points = {p, q1};
        check.witness_lines = {m1, m2};
      } else if (m1 == m2) {
        check.failure = "digon";
        check.detail = "points " + std::to_string(q1) + " and " + std::to_string(q2) +
                       " lie on two common lines";
        check.witness_points = {q1, q2};
        check.witness_lines = {m1, l};
      } else {
        check.failure = "triangle";
        check.detail = "triangle on points " + std::to_string(p) + ", " +
                       std::to_string(q1) + ", " + std::to_string(q2);
        check.witness_points = {p, q1, q2};
        check.witness_lines = {m1, m2, l};
      }
      return check;
    }
  }

  check.ok = true;
  check.s = s;
  check.t = t;
  return check;
}

GQ::GQ(IncidenceGeometry geom, int s, int t) : geom_(std::move(geom)), s_(s), t_(t) {
  stars_.assign(geom_.num_points(), Bitset(geom_.num_points()));
  for (int l = 0; l < geom_.num_lines(); ++l)
    for (int p : geom_.line(l))
      for (int q : geom_.line(l)) stars_[p].set(q);
  for (int p = 0; p < geom_.num_points(); ++p) stars_[p].set(p);
}

bool GQ::collinear(int p, int q) const { return stars_[p].test(q); }

int GQ::projection(int x, int l) const {
  if (geom_.incident(x, l))
    throw InputError("projection requires a non-incident point-line pair");
  for (int q : geom_.line(l))
    if (collinear(x, q)) return q;
  throw InvariantError("no projection found in a verified GQ");
}

GQ GQ::transpose() const {
  return GQ(geom_.transpose(), t_, s_);
}

GQ make_gq(const IncidenceGeometry& geom) {
  GqCheck check = verify_gq(geom);
  if (!check.ok)
    throw InputError("not a generalized quadrangle: " + check.failure +
                     (check.detail.empty() ? "" : " (" + check.detail + ")"));
  return GQ(geom, check.s, check.t);
}

// --- geometry maps -------------------------------------------------------

bool GeometryMap::is_identity() const {
  for (size_t i = 0; i < point_perm.size(); ++i)
    if (point_perm[i] != static_cast<int>(i)) return false;
  for (size_t i = 0; i < line_perm.size(); ++i)
    if (line_perm[i] != static_cast<int>(i)) return false;
  return true;
}

GeometryMap GeometryMap::identity(int points, int lines) {
  GeometryMap m;
  m.point_perm.resize(points);
  m.line_perm.resize(lines);
  for (int i = 0; i < points; ++i) m.point_perm[i] = i;
  for (int i = 0; i < lines; ++i) m.line_perm[i] = i;
  return m;
}

GeometryMap GeometryMap::compose(const GeometryMap& then) const {
  GeometryMap out;
  out.point_perm.resize(point_perm.size());
  out.line_perm.resize(line_perm.size());
  for (size_t i = 0; i < point_perm.size(); ++i)
    out.point_perm[i] = then.point_perm[point_perm[i]];
  for (size_t i = 0; i < line_perm.size(); ++i)
    out.line_perm[i] = then.line_perm[line_perm[i]];
  return out;
}

GeometryMap GeometryMap::inverse() const {
  GeometryMap out;
  out.point_perm.resize(point_perm.size());
  out.line_perm.resize(line_perm.size());
  for (size_t i = 0; i < point_perm.size(); ++i) out.point_perm[point_perm[i]] = static_cast<int>(i);
  for (size_t i = 0; i < line_perm.size(); ++i) out.line_perm[line_perm[i]] = static_cast<int>(i);
  return out;
}

namespace {

bool is_permutation(const std::vector<int>& v, int n) {
  if (static_cast<int>(v.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int x : v) {
    if (x < 0 || x >= n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace

bool is_automorphism(const GQ& gq, const GeometryMap& map) {
  const auto& geom = gq.geom();
  if (!is_permutation(map.point_perm, geom.num_points())) return false;
  if (!is_permutation(map.line_perm, geom.num_lines())) return false;
  for (int l = 0; l < geom.num_lines(); ++l) {
    std::vector<int> image;
    image.reserve(geom.line(l).size());
    for (int p : geom.line(l)) image.push_back(map.point_perm[p]);
    std::sort(image.begin(), image.end());
    if (image != geom.line(map.line_perm[l])) return false;
  }
  return true;
}

// --- coset geometry ------------------------------------------------------

EgqRealization gq_from_kantor(const KantorFamily& fam) {
  require_verified(fam);
  const GroupPtr& k = fam.group;
  int n = k->order();
  int u = fam.type.u, v = fam.type.v;
  int m = v + 1;

  EgqRealization egq;
  egq.group = k;
  egq.family = fam;
  egq.affine_base = 1 + m * u;

  // Cosets of each starred member, ordered by minimal representative.
  std::vector<std::vector<std::vector<int>>> star_cosets(m);
  egq.coset_index.assign(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) {
    star_cosets[i] = left_cosets(k, fam.fstar[i]);
    std::sort(star_cosets[i].begin(), star_cosets[i].end());
    for (size_t c = 0; c < star_cosets[i].size(); ++c)
      for (int g : star_cosets[i][c]) egq.coset_index[i][g] = static_cast<int>(c);
  }

  int num_points = 1 + m * u + n;
  std::vector<std::vector<int>> lines;
  std::vector<std::string> point_labels(num_points);
  std::vector<std::string> line_labels;
  point_labels[0] = "(inf)";
  for (int i = 0; i < m; ++i)
    for (int c = 0; c < u; ++c)
      point_labels[1 + i * u + c] =
          std::to_string(star_cosets[i][c][0]) + ".F" + std::to_string(i) + "*";
  for (int g = 0; g < n; ++g) point_labels[egq.affine_base + g] = "g" + std::to_string(g);

  // Axis lines [F_i]: the base point plus every starred coset point.
  for (int i = 0; i < m; ++i) {
    std::vector<int> pts = {0};
    for (int c = 0; c < u; ++c) pts.push_back(1 + i * u + c);
    lines.push_back(std::move(pts));
    line_labels.push_back("[F" + std::to_string(i) + "]");
  }
  // Affine lines: cosets of each member, carrying their starred coset point.
  std::vector<std::vector<std::vector<int>>> member_cosets(m);
  std::vector<std::vector<int>> member_coset_index(m, std::vector<int>(n, -1));
  for (int i = 0; i < m; ++i) {
    member_cosets[i] = left_cosets(k, fam.f[i]);
    std::sort(member_cosets[i].begin(), member_cosets[i].end());
    for (size_t c = 0; c < member_cosets[i].size(); ++c) {
      const auto& coset = member_cosets[i][c];
      for (int g : coset) member_coset_index[i][g] = static_cast<int>(c);
      std::vector<int> pts;
      pts.push_back(1 + i * u + egq.coset_index[i][coset[0]]);
      for (int g : coset) pts.push_back(egq.affine_base + g);
      lines.push_back(std::move(pts));
      line_labels.push_back(std::to_string(coset[0]) + ".F" + std::to_string(i));
    }
  }

  IncidenceGeometry geom(num_points, std::move(lines));
  geom.point_labels = std::move(point_labels);
  geom.line_labels = std::move(line_labels);

  GqCheck check = verify_gq(geom);
  if (!check.ok)
    throw InvariantError("coset geometry failed GQ verification: " + check.failure);
  if (check.s != u || check.t != v)
    throw InvariantError("coset geometry has unexpected order");
  egq.gq = GQ(std::move(geom), check.s, check.t);

  // Left-multiplication action.
  int num_lines = m + m * (u * v);
  egq.action.resize(n);
  for (int g = 0; g < n; ++g) {
    GeometryMap map;
    map.point_perm.resize(num_points);
    map.line_perm.resize(num_lines);
    map.point_perm[0] = 0;
    for (int i = 0; i < m; ++i)
      for (int c = 0; c < u; ++c) {
        int rep = star_cosets[i][c][0];
        map.point_perm[1 + i * u + c] = 1 + i * u + egq.coset_index[i][k->mul(g, rep)];
      }
    for (int x = 0; x < n; ++x)
      map.point_perm[egq.affine_base + x] = egq.affine_base + k->mul(g, x);
    for (int i = 0; i < m; ++i) map.line_perm[i] = i;
    int line_base = m;
    for (int i = 0; i < m; ++i) {
      int cosets = u * v;
      for (int c = 0; c < cosets; ++c) {
        int rep = member_cosets[i][c][0];
        map.line_perm[line_base + i * cosets + c] =
            line_base + i * cosets + member_coset_index[i][k->mul(g, rep)];
      }
    }
    if (!is_automorphism(egq.gq, map))
      throw InvariantError("left multiplication is not an automorphism");
    egq.action[g] = std::move(map);
  }

  // Sharp transitivity on the points not collinear with the base point.
  for (int g = 1; g < n; ++g)
    if (egq.action[g].point_perm[egq.affine_point(0)] == egq.affine_point(0))
      throw InvariantError("action has a nontrivial point stabilizer");
  std::set<int> orbit;
  for (int g = 0; g < n; ++g) orbit.insert(egq.action[g].point_perm[egq.affine_point(0)]);
  for (int p = 0; p < num_points; ++p) {
    bool noncollinear = !egq.gq.collinear(0, p);
    if (noncollinear != (orbit.count(p) > 0))
      throw InvariantError("orbit does not match the points off the base perp");
  }

  return egq;
}

int EgqRealization::coset_point(int member_index, int g) const {
  return 1 + member_index * family.type.u + coset_index[member_index][g];
}

KantorFamily kantor_from_egq(const GQ& gq, const GroupPtr& group,
                             const std::vector<GeometryMap>& action, int x, int y) {
  int n = group->order();
  if (static_cast<int>(action.size()) != n)
    throw InputError("action must carry one map per group element");
  for (const auto& map : action)
    if (!is_automorphism(gq, map)) throw InputError("action contains a non-automorphism");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!(action[a].compose(action[b]) == action[group->mul(b, a)]))
        throw InputError("action is not a homomorphism");

  if (x < 0 || x >= gq.num_points() || y < 0 || y >= gq.num_points())
    throw InputError("base point out of range");
  if (gq.collinear(x, y)) throw InputError("second base point must not be collinear with the first");
  for (int l : gq.geom().pencil(x))
    for (const auto& map : action)
      if (map.line_perm[l] != l)
        throw InputError("the action does not fix the base point linewise");

  // Sharp transitivity on points not collinear with x.
  std::vector<int> noncollinear;
  for (int p = 0; p < gq.num_points(); ++p)
    if (!gq.collinear(x, p)) noncollinear.push_back(p);
  if (static_cast<int>(noncollinear.size()) != n)
    throw InputError("group order does not match the points off the base perp");
  std::set<int> orbit;
  for (int g = 0; g < n; ++g) {
    int image = action[g].point_perm[y];
    if (g != 0 && image == y) throw InputError("action is not sharply transitive");
    orbit.insert(image);
  }
  if (static_cast<int>(orbit.size()) != n ||
      !std::includes(noncollinear.begin(), noncollinear.end(), orbit.begin(), orbit.end()))
    throw InputError("action is not transitive off the base perp");

  int u = gq.s(), v = gq.t();
  if (n != u * u * v) throw InputError("group order is not s^2*t");

  KantorFamily fam;
  fam.group = group;
  fam.type = {u, v};
  for (int l : gq.geom().pencil(y)) {
    std::vector<int> stab_line, stab_point;
    int proj = gq.projection(x, l);
    for (int g = 0; g < n; ++g) {
      if (action[g].line_perm[l] == l) stab_line.push_back(g);
      if (action[g].point_perm[proj] == proj) stab_point.push_back(g);
    }
    fam.f.push_back(Subgroup::from_members(group, std::move(stab_line)));
    fam.fstar.push_back(Subgroup::from_members(group, std::move(stab_point)));
  }

  auto report = verify_kantor_family(fam);
  if (!report.all_pass())
    throw InvariantError("derived family fails verification: " +
                         report.first_failure()->detail);
  fam.canonicalize();
  return fam;
}

BensonReport benson_check(const GQ& gq, const GeometryMap& map) {
  if (!is_automorphism(gq, map)) throw InputError("benson check requires an automorphism");
  BensonReport rep;
  for (int p = 0; p < gq.num_points(); ++p) {
    int q = map.point_perm[p];
    if (q == p)
      ++rep.f0;
    else if (gq.collinear(p, q))
      ++rep.f1;
  }
  rep.lhs = static_cast<long long>(1 + gq.t()) * rep.f0 + rep.f1;
  rep.rhs = 1 + static_cast<long long>(gq.s()) * gq.t();
  rep.modulus = gq.s() + gq.t();
  rep.ok = ((rep.lhs - rep.rhs) % rep.modulus) == 0;
  return rep;
}

// --- isomorphism ---------------------------------------------------------

namespace {

struct IsoSearch {
  const IncidenceGeometry& a;
  const IncidenceGeometry& b;
  std::vector<Bitset> star_a, star_b;
  // Pair fingerprint: -1 for collinear, double-perp size for noncollinear.
  std::vector<std::vector<int>> pair_a, pair_b;
  std::vector<std::vector<int>> point_fp_a, point_fp_b;  // sorted pair rows
  std::vector<int> order;  // point processing order for a
  uint64_t budget;
  uint64_t nodes = 0;
  bool exhausted = false;
  std::vector<int> map;     // a-point -> b-point
  std::vector<char> used;   // b-point used
  bool collect_all = false;
  std::vector<GeometryMap> solutions;
  std::optional<GeometryMap> found;

  IsoSearch(const IncidenceGeometry& a_, const IncidenceGeometry& b_, uint64_t budget_)
      : a(a_), b(b_), budget(budget_) {
    star_a = stars_of(a);
    star_b = stars_of(b);
    pair_a = pair_fingerprints(a, star_a);
    pair_b = pair_fingerprints(b, star_b);
    point_fp_a = point_fingerprints(pair_a);
    point_fp_b = point_fingerprints(pair_b);
    // BFS order so each new point touches mapped ones when connected.
    std::vector<char> seen(a.num_points(), 0);
    for (int root = 0; root < a.num_points(); ++root) {
      if (seen[root]) continue;
      std::vector<int> queue = {root};
      seen[root] = 1;
      for (size_t qi = 0; qi < queue.size(); ++qi) {
        int p = queue[qi];
        order.push_back(p);
        for (int q = 0; q < a.num_points(); ++q)
          if (star_a[p].test(q) && !seen[q]) {
            seen[q] = 1;
            queue.push_back(q);
          }
      }
    }
    map.assign(a.num_points(), -1);
    used.assign(b.num_points(), 0);
  }

  static std::vector<Bitset> stars_of(const IncidenceGeometry& g) {
    std::vector<Bitset> star(g.num_points(), Bitset(g.num_points()));
    for (int l = 0; l < g.num_lines(); ++l)
      for (int p : g.line(l))
        for (int q : g.line(l)) star[p].set(q);
    for (int p = 0; p < g.num_points(); ++p) star[p].set(p);
    return star;
  }

  // For noncollinear pairs the double-perp size is an isomorphism invariant
  // that separates e.g. regular from antiregular geometries.
  static std::vector<std::vector<int>> pair_fingerprints(const IncidenceGeometry& g,
                                                         const std::vector<Bitset>& star) {
    int n = g.num_points();
    std::vector<std::vector<int>> fp(n, std::vector<int>(n, 0));
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        int value;
        if (star[p].test(q)) {
          value = -1;
        } else {
          Bitset perp = star[p];
          perp &= star[q];
          int count = 0;
          for (int r = 0; r < n; ++r)
            if (perp.is_subset_of(star[r])) ++count;
          value = count;
        }
        fp[p][q] = fp[q][p] = value;
      }
    return fp;
  }

  static std::vector<std::vector<int>> point_fingerprints(
      const std::vector<std::vector<int>>& pair) {
    std::vector<std::vector<int>> out(pair.size());
    for (size_t p = 0; p < pair.size(); ++p) {
      out[p] = pair[p];
      std::sort(out[p].begin(), out[p].end());
    }
    return out;
  }

  bool assign(size_t depth) {
    if (exhausted) return false;
    if (depth == order.size()) return complete();
    int p = order[depth];
    for (int cand = 0; cand < b.num_points(); ++cand) {
      if (used[cand]) continue;
      if (++nodes > budget) {
        exhausted = true;
        return false;
      }
      if (point_fp_a[p] != point_fp_b[cand]) continue;
      bool ok = true;
      for (size_t d = 0; d < depth && ok; ++d) {
        int q = order[d];
        ok = pair_a[p][q] == pair_b[cand][map[q]];
      }
      if (!ok) continue;
      map[p] = cand;
      used[cand] = 1;
      if (assign(depth + 1) && !collect_all) return true;
      map[p] = -1;
      used[cand] = 0;
      if (exhausted) return false;
    }
    return false;
  }

  // Derives the line map from the point map and validates incidence.
  bool complete() {
    std::map<std::vector<int>, int> b_lines;
    for (int l = 0; l < b.num_lines(); ++l) b_lines.emplace(b.line(l), l);
    GeometryMap gm;
    gm.point_perm = map;
    gm.line_perm.assign(a.num_lines(), -1);
    std::vector<char> used_line(b.num_lines(), 0);
    for (int l = 0; l < a.num_lines(); ++l) {
      std::vector<int> image;
      image.reserve(a.line(l).size());
      for (int p : a.line(l)) image.push_back(map[p]);
      std::sort(image.begin(), image.end());
      auto it = b_lines.find(image);
      if (it == b_lines.end() || used_line[it->second]) return false;
      used_line[it->second] = 1;
      gm.line_perm[l] = it->second;
    }
    if (collect_all) {
      solutions.push_back(std::move(gm));
      return false;  // keep searching
    }
    found = std::move(gm);
    return true;
  }
};

IsoResult run_iso(const IncidenceGeometry& a, const IncidenceGeometry& b,
                  uint64_t budget) {
  IsoResult result{IsoResult::Status::NonIsomorphic, std::nullopt, 0};
  if (a.num_points() != b.num_points() || a.num_lines() != b.num_lines()) return result;
  auto sizes = [](const IncidenceGeometry& g) {
    std::vector<size_t> s;
    for (int l = 0; l < g.num_lines(); ++l) s.push_back(g.line(l).size());
    std::sort(s.begin(), s.end());
    return s;
  };
  auto degrees = [](const IncidenceGeometry& g) {
    std::vector<size_t> d;
    for (int p = 0; p < g.num_points(); ++p) d.push_back(g.pencil(p).size());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (sizes(a) != sizes(b) || degrees(a) != degrees(b)) return result;

  IsoSearch search(a, b, budget);
  bool ok = search.assign(0);
  result.nodes = search.nodes;
  if (ok) {
    result.status = IsoResult::Status::Found;
    result.map = search.found;
  } else if (search.exhausted) {
    result.status = IsoResult::Status::Budget;
  }
  return result;
}

}  // namespace

IsoResult incidence_isomorphic(const IncidenceGeometry& a, const IncidenceGeometry& b,
                               uint64_t budget) {
  return run_iso(a, b, budget);
}

IsoResult gq_isomorphic(const GQ& a, const GQ& b, uint64_t budget) {
  if (a.s() > 4 || a.t() > 4 || b.s() > 4 || b.t() > 4)
    throw InputError("isomorphism search is supported up to order (4,4)");
  if (a.s() != b.s() || a.t() != b.t())
    return {IsoResult::Status::NonIsomorphic, std::nullopt, 0};
  return run_iso(a.geom(), b.geom(), budget);
}

std::vector<GeometryMap> all_automorphisms(const GQ& gq, uint64_t budget) {
  if (gq.num_points() > 15)
    throw InputError("full automorphism search is restricted to at most 15 points");
  IsoSearch search(gq.geom(), gq.geom(), budget);
  search.collect_all = true;
  search.assign(0);
  if (search.exhausted) throw InputError("automorphism search exceeded its budget");
  std::sort(search.solutions.begin(), search.solutions.end());
  return search.solutions;
}

}  // namespace forge
