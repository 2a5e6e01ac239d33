// Small finite fields F_q for q in {2,3,4,5,7,8,9}, realized as polynomial
// arithmetic modulo a fixed irreducible. Elements are encoded as base-p digit
// vectors packed into [0, q).
#pragma once

#include <vector>

#include "forge/common.hpp"

namespace forge {

class GaloisField {
 public:
  int p = 0;  // characteristic
  int e = 0;  // extension degree
  int q = 0;  // p^e

  int add(int a, int b) const { return add_[a * q + b]; }
  int neg(int a) const { return neg_[a]; }
  int mul(int a, int b) const { return mul_[a * q + b]; }

  // Shared per-q instances; throws InputError for unsupported q.
  static const GaloisField& get(int q);

 private:
  std::vector<int> add_, mul_, neg_;
  static GaloisField build(int q);
};

}  // namespace forge
