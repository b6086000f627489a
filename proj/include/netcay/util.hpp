#pragma once

#include <cstdint>
#include <numeric>
#include <vector>

namespace netcay {

// Dynamic fixed-width bitset; element sets of a group and adjacency rows of a graph.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(int bits) : bits_(bits), w_((bits + 63) / 64, 0) {}

  int capacity() const { return bits_; }
  bool test(int i) const { return (w_[static_cast<size_t>(i) >> 6] >> (i & 63)) & 1u; }
  void set(int i) { w_[static_cast<size_t>(i) >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { w_[static_cast<size_t>(i) >> 6] &= ~(uint64_t(1) << (i & 63)); }

  int count() const {
    int c = 0;
    for (uint64_t w : w_) c += __builtin_popcountll(w);
    return c;
  }
  bool any() const {
    for (uint64_t w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  friend bool operator==(const Bitset& a, const Bitset& b) { return a.bits_ == b.bits_ && a.w_ == b.w_; }
  friend bool operator!=(const Bitset& a, const Bitset& b) { return !(a == b); }

  Bitset& operator|=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }

  // every bit of o also set here
  bool contains_all(const Bitset& o) const {
    for (size_t i = 0; i < w_.size(); ++i)
      if ((o.w_[i] & ~w_[i]) != 0) return false;
    return true;
  }

  template <typename F>
  void for_each(F f) const {
    for (size_t i = 0; i < w_.size(); ++i) {
      uint64_t w = w_[i];
      while (w) {
        int b = __builtin_ctzll(w);
        f(static_cast<int>(i * 64 + b));
        w &= w - 1;
      }
    }
  }

  std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](int i) { out.push_back(i); });
    return out;
  }

  const std::vector<uint64_t>& words() const { return w_; }

 private:
  int bits_ = 0;
  std::vector<uint64_t> w_;
};

inline Bitset bitset_of(int bits, const std::vector<int>& ids) {
  Bitset b(bits);
  for (int i : ids) b.set(i);
  return b;
}

inline long long gcd_ll(long long a, long long b) { return std::gcd(a, b); }

inline int mod_norm(long long x, int n) {
  long long r = x % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

inline bool is_prime_int(int p) {
  if (p < 2) return false;
  for (int d = 2; static_cast<long long>(d) * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

inline std::vector<int> units_mod(int n) {
  std::vector<int> u;
  for (int k = 1; k < n; ++k)
    if (std::gcd(k, n) == 1) u.push_back(k);
  if (n == 1) u.push_back(0);  // degenerate, unused in practice
  return u;
}

inline int euler_phi(int n) {
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

// product of the distinct prime divisors
inline int radical_of(int n) {
  int r = 1;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      r *= p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) r *= m;
  return r;
}

}  // namespace netcay
