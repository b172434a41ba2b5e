#pragma once

// The denominator P_n = prod{p : s_p(n) >= p} of the constant-free Bernoulli
// polynomial, its split at sqrt(n), and the n -> n+1 transition data.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <iterator>
#include <optional>
#include <string>
#include <vector>

#include "bpden/bigint.hpp"
#include "bpden/digits.hpp"
#include "bpden/errors.hpp"
#include "bpden/primes.hpp"

namespace bpden {

struct PnRecord {
  u64 n = 0;
  std::vector<u64> minus_primes;  // p*p < n
  std::vector<u64> plus_primes;   // p*p > n
  u64 omega_plus = 0;
  double log_pn_plus = 0.0;
  std::optional<u64> largest_prime;  // empty iff P_n = 1

  u64 omega_minus() const { return minus_primes.size(); }
};

/// Sign of P_n - P_{n+1}.
enum class Comparison : int { less = -1, equal = 0, greater = 1 };

struct TransitionRecord {
  u64 n = 0;
  bool divides = false;  // P_{n+1} | P_n
  Comparison comparison = Comparison::equal;
  std::vector<u64> gained_primes;    // divide P_{n+1}, not P_n
  std::vector<u64> lost_primes;      // divide P_n, not P_{n+1}
  std::vector<u64> case1_witnesses;  // s_p(n) = p - 1
  bool in_A = false;
};

namespace detail {

inline void require_limit(const PrimeSieve& sieve, u64 need, const char* op) {
  if (sieve.limit() < need) {
    throw RangeError(std::string(op) + " needs sieve limit >= " + std::to_string(need) +
                     ", have " + std::to_string(sieve.limit()));
  }
}

inline void require_positive(u64 n, const char* op) {
  if (n == 0) throw UsageError(std::string(op) + " needs n >= 1");
}

inline bool square_less(u64 p, u64 n) { return static_cast<u128>(p) * p < n; }
inline bool square_greater(u64 p, u64 n) { return static_cast<u128>(p) * p > n; }

/// Ascending divisors of n >= 1.
inline std::vector<u64> divisors(u64 n) {
  std::vector<u64> lo, hi;
  for (u64 d = 1; d <= n / d; ++d) {
    if (n % d != 0) continue;
    lo.push_back(d);
    if (d != n / d) hi.push_back(n / d);
  }
  lo.insert(lo.end(), hi.rbegin(), hi.rend());
  return lo;
}

inline std::vector<u64> sorted_difference(const std::vector<u64>& a,
                                          const std::vector<u64>& b) {
  std::vector<u64> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline BigInt product(const std::vector<u64>& ps) {
  BigInt r = 1;
  for (u64 p : ps) r *= p;
  return r;
}

}  // namespace detail

/// Direct digit-sum scan over all primes p <= (n+1)/2. This is the reference
/// path; the interval enumeration below is checked against it.
inline std::vector<u64> pn_prime_set(const PrimeSieve& sieve, u64 n) {
  detail::require_positive(n, "pn_prime_set");
  const u64 top = (n + 1) / 2;
  detail::require_limit(sieve, top, "pn_prime_set");
  std::vector<u64> out;
  sieve.for_each_prime(0, top, [&](u64 p) {
    if (digit_sum_unchecked(n, p) >= p) out.push_back(p);
  });
  return out;
}

inline PnRecord pn_record(const PrimeSieve& sieve, u64 n) {
  PnRecord r;
  r.n = n;
  for (u64 p : pn_prime_set(sieve, n)) {
    if (detail::square_less(p, n)) {
      r.minus_primes.push_back(p);
    } else if (detail::square_greater(p, n)) {
      r.plus_primes.push_back(p);
      r.log_pn_plus += std::log(static_cast<double>(p));
    }
  }
  r.omega_plus = r.plus_primes.size();
  if (!r.plus_primes.empty()) {
    r.largest_prime = r.plus_primes.back();
  } else if (!r.minus_primes.empty()) {
    r.largest_prime = r.minus_primes.back();
  }
  return r;
}

/// Primes p < sqrt(n) with s_p(n) >= p.
inline std::vector<u64> minus_primes(const PrimeSieve& sieve, u64 n) {
  std::vector<u64> out;
  if (n < 2) return out;
  const u64 root = isqrt(n - 1);  // p <= root  <=>  p*p < n
  detail::require_limit(sieve, root, "minus_primes");
  sieve.for_each_prime(0, root, [&](u64 p) {
    if (digit_sum_unchecked(n, p) >= p) out.push_back(p);
  });
  return out;
}

/// Calls f(p) for each prime p > sqrt(n) with s_p(n) >= p, in descending
/// order of p, until f returns false.
///
/// For such p write n = a*p + b with a = floor(n/p) < p. Then s_p(n) = a + b,
/// and s_p(n) >= p iff p lies in (n/(a+1), (n+a)/(a+1)], an interval shorter
/// than 1. So a = 1..floor(sqrt(n)) each offers at most one candidate.
template <typename F>
void for_each_plus_prime(const PrimeSieve& sieve, u64 n, F&& f) {
  detail::require_limit(sieve, (n + 1) / 2, "plus-part enumeration");
  const u64 amax = isqrt(n);
  for (u64 a = 1; a <= amax; ++a) {
    const u64 m = (n + a) / (a + 1);
    if (static_cast<u128>(m) * (a + 1) < static_cast<u128>(n) + 1) continue;
    if (!detail::square_greater(m, n)) break;  // m decreases with a
    if (sieve.is_prime(m) && !f(m)) return;
  }
}

inline std::vector<u64> plus_primes_fast(const PrimeSieve& sieve, u64 n) {
  std::vector<u64> out;
  for_each_plus_prime(sieve, n, [&](u64 p) {
    out.push_back(p);
    return true;
  });
  std::reverse(out.begin(), out.end());
  return out;
}

/// Same set as pn_prime_set, in O(sqrt n) sieve lookups and digit sums.
inline std::vector<u64> pn_prime_set_fast(const PrimeSieve& sieve, u64 n) {
  detail::require_positive(n, "pn_prime_set_fast");
  auto out = minus_primes(sieve, n);
  const auto plus = plus_primes_fast(sieve, n);
  out.insert(out.end(), plus.begin(), plus.end());
  return out;
}

inline u64 omega_plus_fast(const PrimeSieve& sieve, u64 n) {
  if (n < 2) throw UsageError("omega_plus_fast needs n >= 2");
  u64 count = 0;
  for_each_plus_prime(sieve, n, [&](u64) {
    ++count;
    return true;
  });
  return count;
}

inline double log_pn_plus_fast(const PrimeSieve& sieve, u64 n) {
  if (n < 2) throw UsageError("log_pn_plus_fast needs n >= 2");
  double total = 0.0;
  // ascending order, matching the direct scan
  for (u64 p : plus_primes_fast(sieve, n)) total += std::log(static_cast<double>(p));
  return total;
}

/// P(P_n), or empty when P_n = 1.
inline std::optional<u64> largest_pn_prime(const PrimeSieve& sieve, u64 n) {
  detail::require_positive(n, "largest_pn_prime");
  std::optional<u64> best;
  for_each_plus_prime(sieve, n, [&](u64 p) {
    best = p;
    return false;
  });
  if (best) return best;
  const auto minus = minus_primes(sieve, n);
  if (!minus.empty()) best = minus.back();
  return best;
}

/// prod{p : (p-1) | n}; 1 for odd n > 1. qn(1) = 2.
inline BigInt qn(u64 n) {
  detail::require_positive(n, "qn");
  if (n > 1 && n % 2 == 1) return 1;
  BigInt r = 1;
  for (u64 d : detail::divisors(n)) {
    if (is_prime_trial(d + 1)) r *= d + 1;
  }
  return r;
}

inline BigInt pn_value(const PrimeSieve& sieve, u64 n) {
  return detail::product(pn_prime_set(sieve, n));
}

/// Primes p <= n+1 with s_p(n) = p-1. Since s_p(n) == n (mod p-1), such p
/// has (p-1) | n, so only divisors of n are tried.
inline std::vector<u64> case1_witnesses(const PrimeSieve& sieve, u64 n) {
  detail::require_positive(n, "case1_witnesses");
  std::vector<u64> out;
  for (u64 d : detail::divisors(n)) {
    const u64 p = d + 1;
    if (sieve.is_prime_extended(p) && digit_sum_unchecked(n, p) == p - 1) out.push_back(p);
  }
  return out;
}

/// Builds the transition record from precomputed prime sets of n and n+1.
inline TransitionRecord make_transition(const PrimeSieve& sieve, u64 n,
                                        const std::vector<u64>& set_n,
                                        const std::vector<u64>& set_next) {
  TransitionRecord t;
  t.n = n;
  t.gained_primes = detail::sorted_difference(set_next, set_n);
  t.lost_primes = detail::sorted_difference(set_n, set_next);
  t.divides = t.gained_primes.empty();
  if (t.gained_primes.empty()) {
    t.comparison = t.lost_primes.empty() ? Comparison::equal : Comparison::greater;
  } else if (t.lost_primes.empty()) {
    t.comparison = Comparison::less;
  } else {
    const BigInt lost = detail::product(t.lost_primes);
    const BigInt gained = detail::product(t.gained_primes);
    t.comparison = lost > gained    ? Comparison::greater
                   : lost < gained  ? Comparison::less
                                    : Comparison::equal;
  }
  t.case1_witnesses = case1_witnesses(sieve, n);
  t.in_A = !t.case1_witnesses.empty();
  return t;
}

inline TransitionRecord classify_transition(const PrimeSieve& sieve, u64 n) {
  detail::require_positive(n, "classify_transition");
  detail::require_limit(sieve, (n + 2) / 2, "classify_transition");
  return make_transition(sieve, n, pn_prime_set_fast(sieve, n),
                         pn_prime_set_fast(sieve, n + 1));
}

}  // namespace bpden
