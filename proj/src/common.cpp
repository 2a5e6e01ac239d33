#include "forge/common.hpp"

#include <atomic>
#include <cstdio>

namespace forge {

namespace {

std::atomic<int> g_size_cap{0};

int initial_cap() {
  if (const char* env = std::getenv("FORGE_SIZE_CAP")) {
    int v = std::atoi(env);
    if (v > 0) return v;
  }
  return kDefaultSizeCap;
}

}  // namespace

int size_cap() {
  int v = g_size_cap.load(std::memory_order_relaxed);
  if (v == 0) {
    v = initial_cap();
    g_size_cap.store(v, std::memory_order_relaxed);
  }
  return v;
}

void set_size_cap(int cap) {
  if (cap <= 0) throw InputError("size cap must be positive");
  g_size_cap.store(cap, std::memory_order_relaxed);
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

int prime_power_base(int n, int* exponent_out) {
  if (n < 2) return 0;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    int h = 0, m = n;
    while (m % p == 0) {
      m /= p;
      ++h;
    }
    if (m != 1) return 0;
    if (exponent_out) *exponent_out = h;
    return p;
  }
  // n itself is prime.
  if (exponent_out) *exponent_out = 1;
  return n;
}

std::string fnv1a_hex(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return std::string(buf);
}

}  // namespace forge
