#pragma once

// Odd-only segmented sieve of Eratosthenes with O(1) primality lookup,
// interval iteration and a lazily materialized prime list.

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "bpden/errors.hpp"

namespace bpden {

using u64 = std::uint64_t;
__extension__ typedef unsigned __int128 u128;

/// floor(sqrt(m)) computed exactly.
inline u64 isqrt(u64 m) {
  u64 r = static_cast<u64>(std::sqrt(static_cast<long double>(m)));
  while (static_cast<u128>(r) * r > m) --r;
  while (static_cast<u128>(r + 1) * (r + 1) <= m) ++r;
  return r;
}

class PrimeSieve {
 public:
  static constexpr u64 kDefaultMemoryBudget = u64{1} << 30;  // bytes

  explicit PrimeSieve(u64 limit, u64 memory_budget = kDefaultMemoryBudget)
      : limit_(limit), lazy_(std::make_unique<Lazy>()) {
    if (limit < 2) throw UsageError("sieve limit must be at least 2");
    const u64 words = (limit / 2) / 64 + 1;
    if (words * sizeof(u64) > memory_budget) {
      throw ResourceError("sieve limit " + std::to_string(limit) + " needs " +
                          std::to_string(words * sizeof(u64)) +
                          " bytes, over the memory budget of " +
                          std::to_string(memory_budget) + " bytes");
    }
    bits_.assign(words, ~u64{0});
    sieve();
  }

  PrimeSieve(PrimeSieve&&) noexcept = default;
  PrimeSieve& operator=(PrimeSieve&&) noexcept = default;

  u64 limit() const { return limit_; }

  bool is_prime(u64 m) const {
    if (m > limit_) {
      throw RangeError("is_prime(" + std::to_string(m) + ") above sieve limit " +
                       std::to_string(limit_));
    }
    return lookup(m);
  }

  /// Deterministic primality for m <= limit^2: sieve lookup below the limit,
  /// trial division by sieved primes above it.
  bool is_prime_extended(u64 m) const {
    if (m <= limit_) return lookup(m);
    const u64 r = isqrt(m);
    if (r > limit_) {
      throw RangeError("is_prime_extended(" + std::to_string(m) +
                       ") needs sieve limit >= " + std::to_string(r));
    }
    if (m % 2 == 0) return false;
    for (u64 p = 3; p <= r; p += 2) {
      if (lookup(p) && m % p == 0) return false;
    }
    return true;
  }

  /// Calls f(p) for each prime lo < p <= hi in ascending order.
  template <typename F>
  void for_each_prime(u64 lo, u64 hi, F&& f) const {
    if (hi > limit_) {
      throw RangeError("prime range upper end " + std::to_string(hi) +
                       " exceeds sieve limit " + std::to_string(limit_));
    }
    if (hi <= lo) return;
    if (lo < 2 && hi >= 2) f(u64{2});
    u64 start = std::max<u64>(lo + 1, 3);
    if (start > hi) return;
    u64 idx = start / 2;  // odd number 2*idx+1 >= start
    if (2 * idx + 1 < start) ++idx;
    const u64 last = (hi - 1) / 2;  // 2*last+1 <= hi
    if (idx > last) return;
    u64 w = idx / 64;
    u64 word = bits_[w] & (~u64{0} << (idx % 64));
    const u64 last_word = last / 64;
    while (true) {
      if (w == last_word) {
        const unsigned top = static_cast<unsigned>(last % 64);
        if (top < 63) word &= (u64{1} << (top + 1)) - 1;
      }
      while (word != 0) {
        const unsigned b = static_cast<unsigned>(std::countr_zero(word));
        f(2 * (w * 64 + b) + 1);
        word &= word - 1;
      }
      if (w == last_word) break;
      word = bits_[++w];
    }
  }

  /// Primes p with lo < p <= hi, ascending.
  std::vector<u64> primes_in(u64 lo, u64 hi) const {
    if (hi > limit_) {
      throw RangeError("primes_in: hi = " + std::to_string(hi) +
                       " exceeds sieve limit " + std::to_string(limit_));
    }
    if (lo >= hi) {
      throw RangeError("primes_in: empty range (" + std::to_string(lo) + ", " +
                       std::to_string(hi) + "]");
    }
    std::vector<u64> out;
    for_each_prime(lo, hi, [&](u64 p) { out.push_back(p); });
    return out;
  }

  /// All primes up to the limit. Built on first use; thread-safe.
  const std::vector<u64>& primes() const {
    std::call_once(lazy_->once, [this] {
      for_each_prime(0, limit_, [this](u64 p) { lazy_->primes.push_back(p); });
    });
    return lazy_->primes;
  }

  u64 count_primes(u64 lo, u64 hi) const {
    u64 c = 0;
    for_each_prime(lo, hi, [&](u64) { ++c; });
    return c;
  }

 private:
  struct Lazy {
    std::once_flag once;
    std::vector<u64> primes;
  };

  bool lookup(u64 m) const {
    if (m < 2) return false;
    if (m % 2 == 0) return m == 2;
    const u64 i = m / 2;
    return (bits_[i / 64] >> (i % 64)) & 1u;
  }

  void clear_bit(u64 i) { bits_[i / 64] &= ~(u64{1} << (i % 64)); }

  void sieve() {
    clear_bit(0);  // 1 is not prime
    const u64 root = isqrt(limit_);
    // base primes up to sqrt(limit) with a plain sieve
    std::vector<char> small(root + 1, 1);
    std::vector<u64> base;
    for (u64 i = 3; i <= root; i += 2) {
      if (!small[i]) continue;
      base.push_back(i);
      for (u64 j = i * i; j <= root; j += 2 * i) small[j] = 0;
    }
    // Segments over odd indices [seg_lo, seg_hi).
    constexpr u64 kSegment = u64{1} << 18;
    const u64 nidx = (limit_ - 1) / 2 + 1;  // odd numbers <= limit
    std::vector<u64> next(base.size());
    for (std::size_t k = 0; k < base.size(); ++k) next[k] = (base[k] * base[k]) / 2;
    for (u64 seg_lo = 0; seg_lo < nidx; seg_lo += kSegment) {
      const u64 seg_hi = std::min(nidx, seg_lo + kSegment);
      for (std::size_t k = 0; k < base.size(); ++k) {
        u64 j = next[k];
        const u64 step = base[k];
        for (; j < seg_hi; j += step) clear_bit(j);
        next[k] = j;
      }
    }
    // bits past the limit
    for (u64 i = nidx; i < bits_.size() * 64; ++i) clear_bit(i);
  }

  u64 limit_;
  std::vector<u64> bits_;
  std::unique_ptr<Lazy> lazy_;
};

inline PrimeSieve build_sieve(u64 limit) { return PrimeSieve(limit); }

/// P(m), the largest prime factor of m.
inline u64 largest_prime_factor(u64 m) {
  if (m < 2) throw UsageError("largest_prime_factor needs m >= 2");
  u64 largest = 1;
  for (u64 p : {u64{2}, u64{3}}) {
    if (m % p == 0) {
      largest = p;
      while (m % p == 0) m /= p;
    }
  }
  for (u64 d = 5; d <= m / d; d += 6) {
    for (u64 p : {d, d + 2}) {
      if (m % p == 0) {
        largest = p;
        while (m % p == 0) m /= p;
      }
    }
  }
  return m > 1 ? m : largest;
}

/// Deterministic trial-division primality; for values without a sieve at hand.
inline bool is_prime_trial(u64 m) {
  if (m < 2) return false;
  if (m < 4) return true;
  if (m % 2 == 0 || m % 3 == 0) return false;
  for (u64 d = 5; d <= m / d; d += 6) {
    if (m % d == 0 || m % (d + 2) == 0) return false;
  }
  return true;
}

}  // namespace bpden
