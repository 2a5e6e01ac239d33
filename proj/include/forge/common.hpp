// Shared plumbing: error types, the global size cap, a dynamic bitset sized
// for small-group element sets, and a couple of arithmetic helpers.
#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace forge {

// Raised when an input (file, argument, table) violates its contract.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a computation detects an internal inconsistency that should be
// mathematically impossible (self-test failures, broken invariants).
struct InvariantError : std::logic_error {
  using std::logic_error::logic_error;
};

// Hard cap on group orders; keeps every exhaustive check tractable.
// Overridable through the FORGE_SIZE_CAP environment variable.
int size_cap();
void set_size_cap(int cap);

constexpr int kDefaultSizeCap = 4096;

// Fixed-width bit vector over element ids [0, n).
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

  int bit_capacity() const { return bits_; }
  void set(int i) { words_[i >> 6] |= uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool intersects(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  // True when the intersection with `o` contains no bit other than `allowed`.
  bool intersection_within(const Bitset& o, int allowed) const {
    for (size_t i = 0; i < words_.size(); ++i) {
      uint64_t w = words_[i] & o.words_[i];
      if ((allowed >> 6) == static_cast<int>(i))
        w &= ~(uint64_t{1} << (allowed & 63));
      if (w) return false;
    }
    return true;
  }

  int intersection_count(const Bitset& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }

  bool is_subset_of(const Bitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }

  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  bool operator==(const Bitset& o) const {
    return bits_ == o.bits_ && words_ == o.words_;
  }

  std::vector<int> to_ids() const {
    std::vector<int> out;
    for (int i = 0; i < bits_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

  const std::vector<uint64_t>& words() const { return words_; }

 private:
  int bits_ = 0;
  std::vector<uint64_t> words_;
};

bool is_prime(int n);

// Returns the prime p with n == p^h (h >= 1), or 0 if n is not a prime power.
int prime_power_base(int n, int* exponent_out = nullptr);

// FNV-1a 64-bit content hash, hex-encoded; used to fingerprint inputs in
// reports.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace forge
