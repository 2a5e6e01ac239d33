#include "forge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <thread>

#include "forge/field.hpp"

namespace forge {

namespace {

void check_associativity(const std::vector<uint16_t>& t, int n) {
  auto scan_rows = [&](int a_begin, int a_end) -> int {
    for (int a = a_begin; a < a_end; ++a) {
      const uint16_t* row_a = &t[static_cast<size_t>(a) * n];
      for (int b = 0; b < n; ++b) {
        const uint16_t* row_ab = &t[static_cast<size_t>(row_a[b]) * n];
        const uint16_t* row_b = &t[static_cast<size_t>(b) * n];
        for (int c = 0; c < n; ++c)
          if (row_ab[c] != row_a[row_b[c]]) return a;
      }
    }
    return -1;
  };

  int bad = -1;
  if (n >= 512) {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    int nthreads = static_cast<int>(std::min<unsigned>(hw, 8));
    std::vector<int> results(nthreads, -1);
    std::vector<std::thread> workers;
    int chunk = (n + nthreads - 1) / nthreads;
    for (int i = 0; i < nthreads; ++i) {
      int lo = i * chunk, hi = std::min(n, lo + chunk);
      workers.emplace_back([&, i, lo, hi] { results[i] = scan_rows(lo, hi); });
    }
    for (auto& w : workers) w.join();
    for (int r : results)
      if (r >= 0) bad = (bad < 0) ? r : std::min(bad, r);
  } else {
    bad = scan_rows(0, n);
  }
  if (bad >= 0)
    throw InputError("table is not associative (first failing row a=" +
                     std::to_string(bad) + ")");
}

}  // namespace

GroupPtr GroupTable::make_flat(std::string name, int order, std::vector<uint16_t> flat) {
  if (order <= 0) throw InputError("group order must be positive");
  if (order > size_cap())
    throw InputError("group order " + std::to_string(order) +
                     " exceeds size cap " + std::to_string(size_cap()));
  if (flat.size() != static_cast<size_t>(order) * order)
    throw InputError("table has wrong shape");

  for (size_t i = 0; i < flat.size(); ++i)
    if (flat[i] >= order)
      throw InputError("table entry out of range at flat index " + std::to_string(i));

  // Identity row/column.
  for (int b = 0; b < order; ++b)
    if (flat[b] != b)
      throw InputError("row 0 is not the identity permutation at column " +
                       std::to_string(b));
  for (int a = 0; a < order; ++a)
    if (flat[static_cast<size_t>(a) * order] != a)
      throw InputError("column 0 is not the identity permutation at row " +
                       std::to_string(a));

  // Latin square.
  std::vector<char> seen(order);
  for (int a = 0; a < order; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < order; ++b) {
      uint16_t v = flat[static_cast<size_t>(a) * order + b];
      if (seen[v]) throw InputError("row " + std::to_string(a) + " repeats entry");
      seen[v] = 1;
    }
  }
  for (int b = 0; b < order; ++b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int a = 0; a < order; ++a) {
      uint16_t v = flat[static_cast<size_t>(a) * order + b];
      if (seen[v]) throw InputError("column " + std::to_string(b) + " repeats entry");
      seen[v] = 1;
    }
  }

  check_associativity(flat, order);

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->order_ = order;
  g->name_ = std::move(name);
  g->table_ = std::move(flat);

  g->inverse_.resize(order);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b)
      if (g->mul(a, b) == 0) {
        g->inverse_[a] = static_cast<uint16_t>(b);
        break;
      }

  g->element_order_.resize(order);
  for (int a = 0; a < order; ++a) {
    int x = a, k = 1;
    while (x != 0) {
      x = g->mul(x, a);
      ++k;
    }
    g->element_order_[a] = k;
  }

  g->abelian_ = true;
  for (int a = 0; a < order && g->abelian_; ++a)
    for (int b = a + 1; b < order; ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        g->abelian_ = false;
        break;
      }

  return g;
}

GroupPtr GroupTable::make(std::string name, const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  if (n == 0) throw InputError("empty table");
  std::vector<uint16_t> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw InputError("table row " + std::to_string(a) + " has wrong length");
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n)
        throw InputError("table entry out of range at [" + std::to_string(a) +
                         "][" + std::to_string(b) + "]");
      flat.push_back(static_cast<uint16_t>(v));
    }
  }
  return make_flat(std::move(name), n, std::move(flat));
}

std::vector<std::vector<int>> GroupTable::rows() const {
  std::vector<std::vector<int>> out(order_, std::vector<int>(order_));
  for (int a = 0; a < order_; ++a)
    for (int b = 0; b < order_; ++b) out[a][b] = mul(a, b);
  return out;
}

// --- Subgroup ----------------------------------------------------------

Subgroup Subgroup::from_members(GroupPtr parent, std::vector<int> members) {
  if (!parent) throw InputError("subgroup requires a parent group");
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  int n = parent->order();
  Bitset mask(n);
  for (int m : members) {
    if (m < 0 || m >= n) throw InputError("subgroup member out of range");
    mask.set(m);
  }
  if (members.empty() || members[0] != 0)
    throw InputError("subgroup must contain the identity");
  for (int a : members) {
    if (!mask.test(parent->inv(a)))
      throw InputError("subgroup not closed under inverse");
    for (int b : members)
      if (!mask.test(parent->mul(a, b)))
        throw InputError("subgroup not closed under product");
  }
  if (n % static_cast<int>(members.size()) != 0)
    throw InvariantError("subgroup size does not divide group order");

  Subgroup s;
  s.parent_ = std::move(parent);
  s.members_ = std::move(members);
  s.mask_ = std::move(mask);
  return s;
}

Subgroup Subgroup::generated(GroupPtr parent, std::span<const int> generators) {
  if (!parent) throw InputError("subgroup requires a parent group");
  int n = parent->order();
  Bitset mask(n);
  std::vector<int> elems = {0};
  mask.set(0);
  std::vector<int> queue;
  for (int g : generators) {
    if (g < 0 || g >= n) throw InputError("generator out of range");
    if (!mask.test(g)) {
      mask.set(g);
      elems.push_back(g);
      queue.push_back(g);
    }
  }
  // Closure under products; inverses follow from finiteness.
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    int x = queue[qi];
    size_t cur = elems.size();
    for (size_t i = 0; i < cur; ++i) {
      int l = parent->mul(x, elems[i]);
      if (!mask.test(l)) {
        mask.set(l);
        elems.push_back(l);
        queue.push_back(l);
      }
      int r = parent->mul(elems[i], x);
      if (!mask.test(r)) {
        mask.set(r);
        elems.push_back(r);
        queue.push_back(r);
      }
    }
  }
  return from_members(std::move(parent), std::move(elems));
}

Subgroup Subgroup::trivial(GroupPtr parent) {
  return from_members(std::move(parent), {0});
}

Subgroup Subgroup::whole(GroupPtr parent) {
  std::vector<int> all(parent->order());
  std::iota(all.begin(), all.end(), 0);
  return from_members(std::move(parent), std::move(all));
}

bool Subgroup::is_normal() const {
  const auto& g = *parent_;
  for (int x = 0; x < g.order(); ++x)
    for (int m : members_)
      if (!mask_.test(g.conjugate(x, m))) return false;
  return true;
}

bool Subgroup::is_abelian() const {
  const auto& g = *parent_;
  for (size_t i = 0; i < members_.size(); ++i)
    for (size_t j = i + 1; j < members_.size(); ++j)
      if (g.mul(members_[i], members_[j]) != g.mul(members_[j], members_[i]))
        return false;
  return true;
}

int Subgroup::exponent() const {
  int e = 1;
  for (int m : members_) e = std::lcm(e, parent_->element_order(m));
  return e;
}

bool Subgroup::is_elementary_abelian() const {
  if (!is_abelian()) return false;
  int e = exponent();
  return e == 1 || is_prime(e);
}

Subgroup Subgroup::intersect(const Subgroup& other) const {
  if (parent_ != other.parent_)
    throw InputError("subgroup intersection requires a common parent");
  std::vector<int> common;
  for (int m : members_)
    if (other.contains(m)) common.push_back(m);
  return from_members(parent_, std::move(common));
}

// --- builders ----------------------------------------------------------

namespace {

GroupPtr from_mul_fn(std::string name, int n, auto&& mul_fn) {
  if (n > size_cap())
    throw InputError("group order " + std::to_string(n) + " exceeds size cap " +
                     std::to_string(size_cap()));
  std::vector<uint16_t> flat(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      flat[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(mul_fn(a, b));
  return GroupTable::make_flat(std::move(name), n, std::move(flat));
}

}  // namespace

GroupPtr build_elementary_abelian(int p, int k) {
  if (!is_prime(p)) throw InputError("p must be prime");
  if (k < 1) throw InputError("k must be positive");
  long long n = 1;
  for (int i = 0; i < k; ++i) {
    n *= p;
    if (n > size_cap())
      throw InputError("p^k exceeds size cap " + std::to_string(size_cap()));
  }
  int order = static_cast<int>(n);
  auto mul_fn = [p, k](int a, int b) {
    int out = 0, mult = 1;
    for (int i = 0; i < k; ++i) {
      out += ((a % p + b % p) % p) * mult;
      a /= p;
      b /= p;
      mult *= p;
    }
    return out;
  };
  return from_mul_fn("EA(" + std::to_string(p) + "^" + std::to_string(k) + ")",
                     order, mul_fn);
}

GroupPtr build_heisenberg(int q) {
  if (q < 2 || q > 9) throw InputError("heisenberg: q must be a prime power <= 9");
  const GaloisField& f = GaloisField::get(q);
  int order = q * q * q;
  // (a,b,c)(a',b',c') = (a+a', b+b', c+c'+a*b'), id encoded as 0.
  auto mul_fn = [&f, q](int x, int y) {
    int ax = x / (q * q), bx = (x / q) % q, cx = x % q;
    int ay = y / (q * q), by = (y / q) % q, cy = y % q;
    int a = f.add(ax, ay);
    int b = f.add(bx, by);
    int c = f.add(f.add(cx, cy), f.mul(ax, by));
    return (a * q + b) * q + c;
  };
  return from_mul_fn("H(" + std::to_string(q) + ")", order, mul_fn);
}

GroupPtr build_cyclic(int n) {
  if (n < 1) throw InputError("cyclic order must be positive");
  return from_mul_fn("C" + std::to_string(n), n,
                     [n](int a, int b) { return (a + b) % n; });
}

GroupPtr build_dihedral(int order) {
  if (order < 4 || order % 2 != 0)
    throw InputError("dihedral order must be an even integer >= 4");
  int n = order / 2;
  // ids 0..n-1: rotations r^i; ids n..2n-1: reflections s r^(i-n).
  auto mul_fn = [n](int x, int y) {
    bool fx = x >= n, fy = y >= n;
    int i = fx ? x - n : x, j = fy ? y - n : y;
    if (!fx && !fy) return (i + j) % n;
    if (!fx && fy) return n + ((j - i) % n + n) % n;   // r^i * s r^j = s r^(j-i)
    if (fx && !fy) return n + (i + j) % n;             // s r^i * r^j = s r^(i+j)
    return ((j - i) % n + n) % n;                      // s r^i * s r^j = r^(j-i)
  };
  return from_mul_fn("D" + std::to_string(order), order, mul_fn);
}

GroupPtr build_quaternion8() {
  // ids: 1,-1,i,-i,j,-j,k,-k
  auto idx = [](int unit, int sign) { return unit * 2 + (sign < 0 ? 1 : 0); };
  auto mul_fn = [idx](int x, int y) {
    int ux = x / 2, uy = y / 2;
    int sx = (x % 2) ? -1 : 1, sy = (y % 2) ? -1 : 1;
    // Unit table over {1,i,j,k}: result unit and sign.
    static const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    return idx(unit[ux][uy], sx * sy * sign[ux][uy]);
  };
  return from_mul_fn("Q8", 8, mul_fn);
}

GroupPtr direct_product(const GroupPtr& a, const GroupPtr& b) {
  long long n = static_cast<long long>(a->order()) * b->order();
  if (n > size_cap())
    throw InputError("product order exceeds size cap " + std::to_string(size_cap()));
  int nb = b->order();
  auto mul_fn = [&a, &b, nb](int x, int y) {
    int ax = x / nb, bx = x % nb;
    int ay = y / nb, by = y % nb;
    return a->mul(ax, ay) * nb + b->mul(bx, by);
  };
  return from_mul_fn(a->name() + "x" + b->name(), static_cast<int>(n), mul_fn);
}

// --- structure operations ----------------------------------------------

Subgroup center(const GroupPtr& g) {
  std::vector<int> z;
  for (int a = 0; a < g->order(); ++a) {
    bool central = true;
    for (int b = 0; b < g->order(); ++b)
      if (g->mul(a, b) != g->mul(b, a)) {
        central = false;
        break;
      }
    if (central) z.push_back(a);
  }
  return Subgroup::from_members(g, std::move(z));
}

Subgroup commutator_subgroup(const GroupPtr& g) {
  std::set<int> gens;
  for (int a = 0; a < g->order(); ++a)
    for (int b = a + 1; b < g->order(); ++b) gens.insert(g->commutator(a, b));
  std::vector<int> v(gens.begin(), gens.end());
  return Subgroup::generated(g, v);
}

Subgroup frattini(const GroupPtr& g) {
  std::set<int> gens;
  for (int a = 0; a < g->order(); ++a) gens.insert(g->mul(a, a));
  for (int a = 0; a < g->order(); ++a)
    for (int b = a + 1; b < g->order(); ++b) gens.insert(g->commutator(a, b));
  std::vector<int> v(gens.begin(), gens.end());
  return Subgroup::generated(g, v);
}

int exponent(const GroupPtr& g) {
  int e = 1;
  for (int a = 0; a < g->order(); ++a) e = std::lcm(e, g->element_order(a));
  return e;
}

bool is_elementary_abelian(const GroupPtr& g) {
  if (!g->is_abelian()) return false;
  int e = exponent(g);
  return e == 1 || is_prime(e);
}

Subgroup centralizer(const Subgroup& b, int a) {
  const auto& g = *b.parent();
  if (a < 0 || a >= g.order()) throw InputError("element out of range");
  std::vector<int> c;
  for (int x : b.members())
    if (g.mul(a, x) == g.mul(x, a)) c.push_back(x);
  Subgroup result = Subgroup::from_members(b.parent(), std::move(c));
  if (b.contains(a)) {
    // Orbit-stabilizer sanity: |B| = |a^B| * |C_B(a)|.
    std::set<int> orbit;
    for (int x : b.members()) orbit.insert(g.conjugate(x, a));
    if (static_cast<int>(orbit.size()) * result.size() != b.size())
      throw InvariantError("orbit-stabilizer identity violated");
  }
  return result;
}

int conjugacy_class_size(const GroupPtr& g, int a) {
  if (a < 0 || a >= g->order()) throw InputError("element out of range");
  std::set<int> orbit;
  for (int x = 0; x < g->order(); ++x) orbit.insert(g->conjugate(x, a));
  return static_cast<int>(orbit.size());
}

Subgroup subgroup_generated(const GroupPtr& g, std::span<const int> elems) {
  return Subgroup::generated(g, elems);
}

std::vector<std::vector<int>> left_cosets(const GroupPtr& g, const Subgroup& h) {
  if (h.parent() != g) throw InputError("subgroup belongs to a different group");
  std::vector<char> assigned(g->order(), 0);
  std::vector<std::vector<int>> cosets;
  for (int x = 0; x < g->order(); ++x) {
    if (assigned[x]) continue;
    std::vector<int> coset;
    for (int m : h.members()) {
      int y = g->mul(x, m);
      assigned[y] = 1;
      coset.push_back(y);
    }
    std::sort(coset.begin(), coset.end());
    cosets.push_back(std::move(coset));
  }
  return cosets;
}

bool quotient_is_abelian(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) throw InputError("subgroup belongs to a different group");
  if (!n.is_normal()) throw InputError("quotient requires a normal subgroup");
  for (int a = 0; a < g->order(); ++a)
    for (int b = a + 1; b < g->order(); ++b)
      if (!n.contains(g->commutator(a, b))) return false;
  return true;
}

InvolutionStats involution_stats(const Subgroup& s) {
  InvolutionStats st;
  for (int m : s.members())
    if (s.parent()->mul(m, m) == 0) ++st.ell;
  st.commutator_order = commutator_subgroup(s.parent()).size();
  return st;
}

bool case3_bound_holds(const InvolutionStats& stats, int t) {
  return static_cast<long long>(stats.ell) * stats.ell >= t;
}

SubgroupStream enumerate_subgroups_of_order(const GroupPtr& g, int m, uint64_t budget) {
  SubgroupStream out;
  if (m < 1 || g->order() % m != 0)
    throw InputError("subgroup order must divide the group order");

  // Grow subgroups by joining with cyclic subgroups, pruning any join whose
  // order fails to divide m.
  std::set<std::vector<int>> found;
  std::set<std::vector<int>> visited;
  std::vector<std::vector<int>> frontier = {{0}};
  visited.insert({0});
  if (m == 1) {
    out.items.push_back(Subgroup::trivial(g));
    return out;
  }
  uint64_t work = 0;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (int x = 1; x < g->order(); ++x) {
        if (std::binary_search(base.begin(), base.end(), x)) continue;
        if (m % g->element_order(x) != 0) continue;
        if (++work > budget) {
          out.truncated = true;
          goto done;
        }
        std::vector<int> gens = base;
        gens.push_back(x);
        Subgroup joined = Subgroup::generated(g, gens);
        if (m % joined.size() != 0) continue;
        const auto& mem = joined.members();
        if (joined.size() == m) {
          found.insert(mem);
        } else if (!visited.count(mem)) {
          visited.insert(mem);
          next.push_back(mem);
        }
      }
    }
    frontier = std::move(next);
  }
done:
  for (const auto& mem : found) out.items.push_back(Subgroup::from_members(g, mem));
  return out;
}

QuotientGroup build_quotient(const GroupPtr& g, const Subgroup& n) {
  if (n.parent() != g) throw InputError("subgroup belongs to a different group");
  if (!n.is_normal()) throw InputError("quotient requires a normal subgroup");
  QuotientGroup q;
  q.cosets = left_cosets(g, n);
  std::sort(q.cosets.begin(), q.cosets.end());
  q.coset_of.assign(g->order(), -1);
  for (size_t c = 0; c < q.cosets.size(); ++c)
    for (int m : q.cosets[c]) q.coset_of[m] = static_cast<int>(c);
  int k = static_cast<int>(q.cosets.size());
  std::vector<uint16_t> flat(static_cast<size_t>(k) * k);
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      flat[static_cast<size_t>(a) * k + b] = static_cast<uint16_t>(
          q.coset_of[g->mul(q.cosets[a][0], q.cosets[b][0])]);
  q.table = GroupTable::make_flat(g->name() + "/N" + std::to_string(n.size()), k,
                                  std::move(flat));
  return q;
}

namespace {

// Picks a small generating sequence, each element enlarging the span.
std::vector<int> generating_sequence(const GroupPtr& g) {
  std::vector<int> gens;
  Subgroup span = Subgroup::trivial(g);
  while (span.size() < g->order()) {
    for (int x = 1; x < g->order(); ++x) {
      if (span.contains(x)) continue;
      gens.push_back(x);
      span = Subgroup::generated(g, gens);
      break;
    }
  }
  return gens;
}

struct IsoSearcher {
  const GroupTable& a;
  const GroupTable& b;
  std::vector<int> gens;              // generating sequence of a
  std::vector<int> inv_a;             // invariant fingerprint per element of a
  std::vector<int> inv_b;

  static std::vector<int> fingerprints(const GroupTable& g) {
    std::vector<int> f(g.order());
    for (int x = 0; x < g.order(); ++x) {
      int cls = 0;
      for (int y = 0; y < g.order(); ++y)
        if (g.mul(x, y) == g.mul(y, x)) ++cls;
      f[x] = g.element_order(x) * 10000 + cls;
    }
    return f;
  }

  bool extend(size_t gi, std::vector<int>& image) {
    if (gi == gens.size()) return verify(image);
    int gen = gens[gi];
    for (int cand = 1; cand < b.order(); ++cand) {
      if (inv_a[gen] != inv_b[cand]) continue;
      image[gi] = cand;
      if (partial_consistent(gi, image) && extend(gi + 1, image)) return true;
    }
    return false;
  }

  // Maps the subgroup generated by gens[0..gi] and checks homomorphism there.
  bool partial_consistent(size_t gi, const std::vector<int>& image) {
    std::vector<int> map(a.order(), -1);
    std::vector<char> used(b.order(), 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<int> elems = {0};
    for (size_t qi = 0; qi < elems.size(); ++qi) {
      for (size_t k = 0; k <= gi; ++k) {
        int x = a.mul(elems[qi], gens[k]);
        int y = b.mul(map[elems[qi]], image[k]);
        if (map[x] == -1) {
          if (used[y]) return false;
          map[x] = y;
          used[y] = 1;
          elems.push_back(x);
        } else if (map[x] != y) {
          return false;
        }
      }
    }
    for (int x : elems)
      for (int y : elems)
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
  }

  bool verify(const std::vector<int>& image) {
    std::vector<int> map(a.order(), -1);
    std::vector<char> used(b.order(), 0);
    map[0] = 0;
    used[0] = 1;
    std::vector<int> elems = {0};
    for (size_t qi = 0; qi < elems.size(); ++qi) {
      for (size_t k = 0; k < gens.size(); ++k) {
        int x = a.mul(elems[qi], gens[k]);
        int y = b.mul(map[elems[qi]], image[k]);
        if (map[x] == -1) {
          if (used[y]) return false;
          map[x] = y;
          used[y] = 1;
          elems.push_back(x);
        } else if (map[x] != y) {
          return false;
        }
      }
    }
    if (static_cast<int>(elems.size()) != a.order()) return false;
    for (int x = 0; x < a.order(); ++x)
      for (int y = 0; y < a.order(); ++y)
        if (map[a.mul(x, y)] != b.mul(map[x], map[y])) return false;
    return true;
  }
};

}  // namespace

bool groups_isomorphic(const GroupPtr& a, const GroupPtr& b) {
  if (a->order() != b->order()) return false;
  if (a->order() > 64)
    throw InputError("group isomorphism supported only for orders <= 64");
  auto fa = IsoSearcher::fingerprints(*a);
  auto fb = IsoSearcher::fingerprints(*b);
  {
    auto sa = fa, sb = fb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return false;
  }
  IsoSearcher searcher{*a, *b, generating_sequence(a), fa, fb};
  std::vector<int> image(searcher.gens.size(), -1);
  return searcher.extend(0, image);
}

}  // namespace forge
