#pragma once

// Explicit lower bounds from linear forms in logarithms and the two-base
// digit-sum inequality, plus the small-prime exception scan.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <string>
#include <vector>

#include "bpden/analytic.hpp"
#include "bpden/bigint.hpp"
#include "bpden/digits.hpp"
#include "bpden/errors.hpp"
#include "bpden/primes.hpp"

namespace bpden {

/// Inputs of the lower bound for log|prod alpha_i^d_i - 1|.
struct MatveevInput {
  std::vector<double> heights;  // A_i > 0, one per rational alpha_i
  double D = 1.0;               // max |d_i|, >= 1

  std::size_t k() const { return heights.size(); }
};

/// h(r/s) = max(log|r|, log s) of the reduced fraction.
inline double height(const BigInt& r, const BigInt& s) {
  if (r == 0) throw DomainError("height of zero is undefined");
  if (s <= 0) throw DomainError("height needs a positive denominator");
  const BigInt g = boost::multiprecision::gcd(boost::multiprecision::abs(r), s);
  return std::max(log_abs(r / g), log_abs(s / g));
}

/// -1.4 * 30^(k+3) * k^4.5 * (1 + log D) * prod A_i
inline double matveev_bound(const MatveevInput& in) {
  if (in.heights.empty()) throw UsageError("matveev_bound needs k >= 1");
  if (!(in.D >= 1.0)) throw UsageError("matveev_bound needs D >= 1");
  const double k = static_cast<double>(in.k());
  double prod = 1.0;
  for (double a : in.heights) {
    if (!(a > 0.0)) throw UsageError("matveev_bound needs positive heights");
    prod *= a;
  }
  return -1.4 * std::pow(30.0, k + 3.0) * std::pow(k, 4.5) * (1.0 + std::log(in.D)) * prod;
}

/// C(a,b) = log(2e12 (log B)^2). Defined for B >= e; the digit-sum
/// inequality itself is stated for B >= max(a,b) >= 3.
inline double stewart_constant(double B) {
  if (!(B >= std::numbers::e)) throw DomainError("stewart_constant needs B >= e");
  const double lb = std::log(B);
  return std::log(2e12 * lb * lb);
}

/// log_2 n / (log_3 n + C), given ln n. Works for n far beyond double range.
inline double stewart_rhs_from_log(double log_n, double C) {
  const double l2 = std::max(1.0, std::log(std::max(1.0, log_n)));
  const double l3 = std::max(1.0, std::log(l2));
  return l2 / (l3 + C);
}

inline double stewart_rhs(double n, double C) {
  if (!(n >= 3.0)) throw DomainError("stewart_rhs needs n >= 3");
  return iterated_log(2, n) / (iterated_log(3, n) + C);
}

/// The inequality is only proven for n > exp(1e15 (log B)^4).
inline bool stewart_valid(double log_n, double B) {
  const double lb = std::log(B);
  return log_n > 1e15 * lb * lb * lb * lb;
}

/// Primes p <= y that do not divide P_n, i.e. s_p(n) < p.
inline std::vector<u64> exceptional_primes(const PrimeSieve& sieve, u64 n, double y) {
  if (y < 0.0) throw UsageError("exceptional_primes needs y >= 0");
  const u64 top = static_cast<u64>(std::floor(y));
  if (top > sieve.limit()) {
    throw RangeError("exceptional_primes needs sieve limit >= " + std::to_string(top));
  }
  std::vector<u64> out;
  sieve.for_each_prime(0, top, [&](u64 p) {
    if (digit_sum_unchecked(n, p) < p) out.push_back(p);
  });
  return out;
}

struct StewartSample {
  u64 n = 0;
  u64 p = 0;
  u64 q = 0;
  u64 digit_sum_total = 0;  // s_p(n) + s_q(n)
  double rhs = 0.0;         // log_2 n / (log_3 n + C(p,q))
  bool valid = false;       // inside the proven range
};

inline StewartSample stewart_sample(u64 n, u64 p, u64 q) {
  StewartSample s;
  s.n = n;
  s.p = p;
  s.q = q;
  s.digit_sum_total = digit_sum(n, p) + digit_sum(n, q);
  const double B = static_cast<double>(std::max({p, q, u64{3}}));
  s.rhs = stewart_rhs(static_cast<double>(n), stewart_constant(B));
  s.valid = stewart_valid(std::log(static_cast<double>(n)), B);
  return s;
}

}  // namespace bpden
