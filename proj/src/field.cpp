#include "forge/field.hpp"

#include <array>
#include <map>
#include <mutex>

namespace forge {

namespace {

// Irreducible polynomial (coefficients of x^0..x^{e-1}; leading term implicit)
// for each supported proper prime power.
std::vector<int> reduction_poly(int p, int e) {
  if (p == 2 && e == 2) return {1, 1};     // x^2 + x + 1
  if (p == 2 && e == 3) return {1, 1, 0};  // x^3 + x + 1
  if (p == 3 && e == 2) return {1, 0};     // x^2 + 1
  throw InputError("unsupported field extension");
}

std::vector<int> digits_of(int a, int p, int e) {
  std::vector<int> d(e);
  for (int i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

int pack(const std::vector<int>& d, int p) {
  int v = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) v = v * p + d[i];
  return v;
}

}  // namespace

GaloisField GaloisField::build(int q) {
  int e = 0;
  int p = prime_power_base(q, &e);
  if (p == 0) throw InputError("field order must be a prime power");
  if (q != 2 && q != 3 && q != 4 && q != 5 && q != 7 && q != 8 && q != 9)
    throw InputError("unsupported field order " + std::to_string(q));

  GaloisField f;
  f.p = p;
  f.e = e;
  f.q = q;
  f.add_.resize(q * q);
  f.mul_.resize(q * q);
  f.neg_.resize(q);

  for (int a = 0; a < q; ++a) {
    auto da = digits_of(a, p, e);
    std::vector<int> dn(e);
    for (int i = 0; i < e; ++i) dn[i] = (p - da[i]) % p;
    f.neg_[a] = pack(dn, p);
    for (int b = 0; b < q; ++b) {
      auto db = digits_of(b, p, e);
      std::vector<int> ds(e);
      for (int i = 0; i < e; ++i) ds[i] = (da[i] + db[i]) % p;
      f.add_[a * q + b] = pack(ds, p);
    }
  }

  if (e == 1) {
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < q; ++b) f.mul_[a * q + b] = (a * b) % p;
  } else {
    auto red = reduction_poly(p, e);
    for (int a = 0; a < q; ++a) {
      auto da = digits_of(a, p, e);
      for (int b = 0; b < q; ++b) {
        auto db = digits_of(b, p, e);
        std::vector<int> prod(2 * e - 1, 0);
        for (int i = 0; i < e; ++i)
          for (int j = 0; j < e; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
        // reduce: x^e = -red
        for (int k = 2 * e - 2; k >= e; --k) {
          int c = prod[k];
          if (c == 0) continue;
          prod[k] = 0;
          for (int i = 0; i < e; ++i)
            prod[k - e + i] = (prod[k - e + i] + c * (p - red[i])) % p;
        }
        prod.resize(e);
        f.mul_[a * q + b] = pack(prod, p);
      }
    }
  }
  return f;
}

const GaloisField& GaloisField::get(int q) {
  static std::mutex mu;
  static std::map<int, GaloisField> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it == cache.end()) it = cache.emplace(q, build(q)).first;
  return it->second;
}

}  // namespace forge
