#pragma once

// Special functions (E_1, li, delta_c, psi, iterated logs) and numerical
// checks of the sieve-sum and prime-reciprocal estimates behind the
// asymptotics of omega(P_n^+) and log P_n^+.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numbers>
#include <string>

#include "bpden/digits.hpp"
#include "bpden/errors.hpp"
#include "bpden/primes.hpp"

namespace bpden {

enum class EstimateMethod { series, continued_fraction, truncated_sum, census };

inline const char* to_string(EstimateMethod m) {
  switch (m) {
    case EstimateMethod::series: return "series";
    case EstimateMethod::continued_fraction: return "continued-fraction";
    case EstimateMethod::truncated_sum: return "truncated-sum";
    case EstimateMethod::census: return "census";
  }
  return "?";
}

/// A value with a bracket error_low <= value <= error_high.
struct AnalyticEstimate {
  double value = 0.0;
  double error_low = 0.0;
  double error_high = 0.0;
  EstimateMethod method = EstimateMethod::series;

  bool contains(double v) const { return error_low <= v && v <= error_high; }
};

/// Erdos-Ford-Tenenbaum constant 1 - (1 + ln ln 2)/ln 2.
inline double ford_delta() {
  return 1.0 - (1.0 + std::log(std::numbers::ln2)) / std::numbers::ln2;
}

namespace detail {

inline void check_kappa(int kappa) {
  if (kappa != 0 && kappa != 1) throw UsageError("kappa must be 0 or 1");
}

// E_1 by the convergent power series; x <= 1.5.
inline long double e1_series(long double x) {
  long double sum = 0.0L;
  long double term = 1.0L;  // x^k / k!
  for (int k = 1; k < 200; ++k) {
    term *= x / k;
    const long double t = term / k;
    sum += (k % 2 == 1) ? t : -t;
    if (t < 1e-22L * std::fabs(sum)) break;
  }
  return -std::numbers::egamma_v<long double> - std::log(x) + sum;
}

// E_1 by the continued fraction (modified Lentz); x > 1.5.
inline long double e1_continued_fraction(long double x) {
  constexpr long double tiny = 1e-300L;
  long double b = x + 1.0L;
  long double c = 1.0L / tiny;
  long double d = 1.0L / b;
  long double h = d;
  for (int i = 1; i < 10000; ++i) {
    const long double an = -static_cast<long double>(i) * i;
    b += 2.0L;
    d = 1.0L / (an * d + b);
    c = b + an / c;
    const long double del = c * d;
    h *= del;
    if (std::fabs(del - 1.0L) < 1e-19L) break;
  }
  return h * std::exp(-x);
}

// Ei(x) for x > 0: power series below 40, asymptotic series above.
inline long double ei_positive(long double x) {
  if (x <= 40.0L) {
    long double sum = 0.0L;
    long double term = 1.0L;
    for (int k = 1; k < 500; ++k) {
      term *= x / k;
      const long double t = term / k;
      sum += t;
      if (t < 1e-21L * sum) break;
    }
    return std::numbers::egamma_v<long double> + std::log(x) + sum;
  }
  long double sum = 1.0L;
  long double term = 1.0L;
  for (int k = 1; k < 100; ++k) {
    const long double next = term * k / x;
    if (next > term) break;
    term = next;
    sum += term;
    if (term < 1e-21L) break;
  }
  return std::exp(x) / x * sum;
}

}  // namespace detail

/// E_1(x) = int_x^inf e^(-t)/t dt. Series below 1.5, continued fraction above.
inline double exp_integral_e1(double x) {
  if (!(x > 0.0)) throw DomainError("E_1 needs x > 0");
  const long double xl = x;
  return static_cast<double>(x <= 1.5 ? detail::e1_series(xl)
                                      : detail::e1_continued_fraction(xl));
}

/// N-term asymptotic partial sum e^(-x)/x sum_{m<N} (-1)^m m!/x^m. The
/// remainder is at most N! e^(-x)/x^(N+1); the bracket doubles that.
inline AnalyticEstimate e1_asymptotic_partial(double x, unsigned N) {
  if (!(x > 0.0)) throw DomainError("asymptotic E_1 needs x > 0");
  if (N < 1) throw UsageError("asymptotic E_1 needs N >= 1");
  long double term = 1.0L;  // (-1)^m m!/x^m
  long double sum = 0.0L;
  for (unsigned m = 0; m < N; ++m) {
    sum += term;
    term *= -static_cast<long double>(m + 1) / x;
  }
  const long double pre = std::exp(-static_cast<long double>(x)) / x;
  const long double remainder = 2.0L * std::fabs(term) * pre;  // |term| = N!/x^N
  AnalyticEstimate e;
  e.value = static_cast<double>(pre * sum);
  e.error_low = static_cast<double>(pre * sum - remainder);
  e.error_high = static_cast<double>(pre * sum + remainder);
  e.method = EstimateMethod::series;
  return e;
}

/// j-th term (-1)^(j-1) 2^j (j-1)! sqrt(n)/(log n)^j of the omega(P_n^+)
/// expansion.
inline double omega_plus_expansion_term(double n, unsigned j) {
  if (!(n >= 3.0)) throw DomainError("omega_plus expansion needs n >= 3");
  if (j < 1) throw UsageError("expansion terms start at j = 1");
  const long double L = std::log(static_cast<long double>(n));
  long double t = 2.0L * std::sqrt(static_cast<long double>(n)) / L;
  for (unsigned i = 2; i <= j; ++i) t *= -2.0L * (i - 1) / L;
  return static_cast<double>(t);
}

inline double omega_plus_expansion(double n, unsigned N) {
  if (N < 1) throw UsageError("omega_plus expansion needs N >= 1");
  long double s = 0.0L;
  for (unsigned j = 1; j <= N; ++j) s += omega_plus_expansion_term(n, j);
  return static_cast<double>(s);
}

/// log_1 x = max(1, ln x); log_k x = max(1, ln(log_{k-1} x)).
inline double iterated_log(unsigned k, double x) {
  if (k < 1) throw UsageError("iterated_log needs k >= 1");
  double v = x > 0.0 ? std::max(1.0, std::log(x)) : 1.0;
  for (unsigned i = 2; i <= k; ++i) v = std::max(1.0, std::log(v));
  return v;
}

/// exp(-c (log x)^(3/5) (log_2 x)^(-1/5)).
inline double delta_c(double x, double c) {
  if (!(x > std::numbers::e)) throw DomainError("delta_c needs x > e");
  if (!(c > 0.0)) throw DomainError("delta_c needs c > 0");
  return std::exp(-c * std::pow(iterated_log(1, x), 0.6) * std::pow(iterated_log(2, x), -0.2));
}

/// Sawtooth x - floor(x) - 1/2.
inline double psi(double x) { return x - std::floor(x) - 0.5; }

/// F_0(t) = E_1(log t), F_1(t) = 1/t.
inline double f_kappa(double t, int kappa) {
  detail::check_kappa(kappa);
  if (!(t > 1.0)) throw DomainError("F_kappa needs t > 1");
  return kappa == 0 ? exp_integral_e1(std::log(t)) : 1.0 / t;
}

/// li(u) = int_2^u dt/log t = Ei(log u) - Ei(log 2).
inline double li(double u) {
  if (!(u >= 2.0)) throw DomainError("li needs u >= 2");
  if (u == 2.0) return 0.0;
  return static_cast<double>(detail::ei_positive(std::log(static_cast<long double>(u))) -
                             detail::ei_positive(std::numbers::ln2_v<long double>));
}

struct RecipTailReport {
  AnalyticEstimate estimate;  // truncated sum plus rigorous tail bracket
  double reference = 0.0;     // F_kappa(t)
  u64 limit = 0;

  /// Distance from the reference to the bracket; 0 when inside.
  double deviation() const {
    if (reference < estimate.error_low) return estimate.error_low - reference;
    if (reference > estimate.error_high) return reference - estimate.error_high;
    return 0.0;
  }
};

/// sum_{t < p <= L} (log p)^kappa / (p(p-1)) with L the sieve limit. The tail
/// over m > L is at most 2 (log L)^kappa / L.
inline RecipTailReport prime_recip_tail(const PrimeSieve& sieve, double t, int kappa) {
  detail::check_kappa(kappa);
  if (!(t >= 2.0)) throw DomainError("prime_recip_tail needs t >= 2");
  const u64 L = sieve.limit();
  if (static_cast<long double>(L) < 10.0L * t) {
    throw RangeError("prime_recip_tail needs sieve limit >= 10 t = " +
                     std::to_string(static_cast<u64>(std::ceil(10.0 * t))));
  }
  long double sum = 0.0L;
  sieve.for_each_prime(static_cast<u64>(std::floor(t)), L, [&](u64 p) {
    const long double pl = static_cast<long double>(p);
    const long double w = kappa == 0 ? 1.0L : std::log(pl);
    sum += w / (pl * (pl - 1.0L));
  });
  const double tail = 2.0 * std::pow(std::log(static_cast<double>(L)), kappa) /
                      static_cast<double>(L);
  RecipTailReport r;
  r.estimate = {static_cast<double>(sum), static_cast<double>(sum),
                static_cast<double>(sum) + tail, EstimateMethod::truncated_sum};
  r.reference = f_kappa(t, kappa);
  r.limit = L;
  return r;
}

struct SieveSumResult {
  double lhs = 0.0;
  double rhs = 0.0;
  bool holds = false;
};

/// lhs = sum_{z<p<=x} (floor((x+y)/p) - floor(x/p)) (log p)^kappa against
/// rhs = 2 (y+1) (log x)^kappa / epsilon, for 1 < x^epsilon <= y <= z < x.
inline SieveSumResult lemma_sieve_sum(const PrimeSieve& sieve, double x, double y, double z,
                                      int kappa, double epsilon) {
  detail::check_kappa(kappa);
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw UsageError("epsilon must lie in (0,1)");
  if (!(x >= 2.0)) throw UsageError("x must be >= 2");
  const double xe = std::pow(x, epsilon);
  if (!(xe > 1.0 && xe <= y * (1.0 + 1e-12) && y <= z && z < x)) {
    throw UsageError("need 1 < x^epsilon <= y <= z < x");
  }
  const u64 top = static_cast<u64>(std::floor(x));
  if (sieve.limit() < top) {
    throw RangeError("lemma_sieve_sum needs sieve limit >= " + std::to_string(top));
  }
  const long double xl = x, yl = y;
  long double lhs = 0.0L;
  sieve.for_each_prime(static_cast<u64>(std::floor(z)), top, [&](u64 p) {
    const long double pl = static_cast<long double>(p);
    const long double diff = std::floor((xl + yl) / pl) - std::floor(xl / pl);
    if (diff != 0.0L) lhs += diff * (kappa == 0 ? 1.0L : std::log(pl));
  });
  SieveSumResult r;
  r.lhs = static_cast<double>(lhs);
  r.rhs = 2.0 / epsilon * (y + 1.0) * std::pow(std::log(x), kappa);
  r.holds = r.lhs < r.rhs;
  return r;
}

struct CorSieveSumResult {
  double lhs = 0.0;        // non-negative integer for kappa = 0
  double bound_ref = 0.0;  // alpha sqrt(n) (log n)^kappa
  double ratio() const { return bound_ref > 0.0 ? lhs / bound_ref : 0.0; }
};

/// sum_{sqrt(n)/alpha < p <= n} (floor(n/p + (n-p)/(p(p-1))) - floor(n/p)) (log p)^kappa.
/// The summand's argument equals (n-1)/(p-1), so the floors are exact.
inline CorSieveSumResult cor_sieve_sum(const PrimeSieve& sieve, u64 n, double alpha,
                                       int kappa = 0) {
  detail::check_kappa(kappa);
  if (n < 2) throw UsageError("cor_sieve_sum needs n >= 2");
  const double dn = static_cast<double>(n);
  if (!(alpha > std::pow(dn, -7.0 / 16.0) && alpha < 1.0)) {
    throw UsageError("alpha must lie in (n^(-7/16), 1)");
  }
  if (sieve.limit() < n) {
    throw RangeError("cor_sieve_sum needs sieve limit >= " + std::to_string(n));
  }
  const u64 lo = static_cast<u64>(std::floor(std::sqrt(dn) / alpha));
  long double lhs = 0.0L;
  if (lo < n) {
    sieve.for_each_prime(lo, n, [&](u64 p) {
      const u64 diff = (n - 1) / (p - 1) - n / p;
      if (diff != 0) {
        lhs += static_cast<long double>(diff) *
               (kappa == 0 ? 1.0L : std::log(static_cast<long double>(p)));
      }
    });
  }
  CorSieveSumResult r;
  r.lhs = static_cast<double>(lhs);
  r.bound_ref = alpha * std::sqrt(dn) * std::pow(std::log(dn), kappa);
  return r;
}

struct S12Result {
  double s12 = 0.0;
  double upper = 0.0;       // sqrt(n)/delta_c(sqrt(n)), or sqrt(n) when delta_c is undefined
  double normalized = 0.0;  // |S_12| / n^0.49
};

/// S_12 = sum_{sqrt n < p <= sqrt(n)/delta_c(sqrt n)} (psi((n-1)/(p-1)) - psi(n/p)).
/// For sqrt(n) <= e the range is taken as empty.
inline S12Result s12_empirical(const PrimeSieve& sieve, u64 n, double c) {
  if (!(c > 0.0)) throw DomainError("s12_empirical needs c > 0");
  S12Result r;
  const double root = std::sqrt(static_cast<double>(n));
  r.upper = root;
  if (root <= std::numbers::e) return r;
  r.upper = root / delta_c(root, c);
  const u64 hi = static_cast<u64>(std::floor(r.upper));
  if (sieve.limit() < hi) {
    throw RangeError("s12_empirical needs sieve limit >= " + std::to_string(hi));
  }
  const u64 lo = isqrt(n);  // p > sqrt(n)  <=>  p > isqrt(n)
  long double sum = 0.0L;
  if (hi > lo) {
    sieve.for_each_prime(lo, hi, [&](u64 p) {
      const long double a = static_cast<long double>((n - 1) % (p - 1)) / (p - 1);
      const long double b = static_cast<long double>(n % p) / p;
      sum += a - b;
    });
  }
  r.s12 = static_cast<double>(sum);
  r.normalized = std::fabs(r.s12) / std::pow(static_cast<double>(n), 0.49);
  return r;
}

struct FractionalCensus {
  u64 count = 0;                 // p in (2v,3v) with {n/p} >= 1 - n/(16 v^2)
  u64 plus_divisor_count = 0;    // p in (2v,3v) dividing P_n^+
  u64 chain_failures = 0;        // counted p with s_p(n) < p
  double threshold = 0.0;        // 1 - n/(16 v^2)
  double reference = 0.0;        // n / (v log n)
};

/// Counts of primes in (2v, 3v) near the top of n/p's fractional range, and of
/// those dividing P_n^+. Needs v^(37/20) <= n <= v^2. For v >= 10 every
/// counted prime has s_p(n) >= p, so chain_failures is 0.
inline FractionalCensus fractional_census(const PrimeSieve& sieve, u64 n, u64 v) {
  if (v < 2) throw UsageError("fractional_census needs v >= 2");
  const double dv = static_cast<double>(v);
  if (std::pow(dv, 37.0 / 20.0) > static_cast<double>(n) ||
      static_cast<u128>(n) > static_cast<u128>(v) * v) {
    throw UsageError("fractional_census needs v^(37/20) <= n <= v^2");
  }
  if (sieve.limit() < 3 * v) {
    throw RangeError("fractional_census needs sieve limit >= " + std::to_string(3 * v));
  }
  FractionalCensus r;
  const u128 sixteen_v2 = static_cast<u128>(16) * v * v;
  sieve.for_each_prime(2 * v, 3 * v - 1, [&](u64 p) {
    const bool digit_ok = digit_sum_unchecked(n, p) >= p;  // p^2 > 4v^2 >= n
    if (digit_ok) ++r.plus_divisor_count;
    // {n/p} >= 1 - n/(16v^2)  <=>  16 v^2 (p - n mod p) <= n p
    if (sixteen_v2 * (p - n % p) <= static_cast<u128>(n) * p) {
      ++r.count;
      if (!digit_ok) ++r.chain_failures;
    }
  });
  r.threshold = 1.0 - static_cast<double>(n) / (16.0 * dv * dv);
  r.reference = static_cast<double>(n) / (dv * std::log(static_cast<double>(n)));
  return r;
}

}  // namespace bpden
