#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bpden/pn.hpp"
#include "oracles.hpp"

using namespace bpden;

namespace {

const PrimeSieve& sieve() {
  static const PrimeSieve s(200000);
  return s;
}

}  // namespace

TEST(Pn, SmallValues) {
  // P_1 = P_2 = 1, P_3 = 2, P_4 = 1, P_5 = 6
  EXPECT_EQ(pn_value(sieve(), 1), 1);
  EXPECT_EQ(pn_value(sieve(), 2), 1);
  EXPECT_EQ(pn_value(sieve(), 3), 2);
  EXPECT_EQ(pn_value(sieve(), 4), 1);
  EXPECT_EQ(pn_value(sieve(), 5), 6);
  EXPECT_EQ(pn_value(sieve(), 100), 1326);
  EXPECT_EQ(pn_prime_set(sieve(), 100), (std::vector<u64>{2, 3, 13, 17}));
}

TEST(Pn, HandExamples) {
  EXPECT_EQ(pn_prime_set(sieve(), 5), (std::vector<u64>{2, 3}));
  EXPECT_EQ(pn_prime_set(sieve(), 1), (std::vector<u64>{}));
  EXPECT_EQ(pn_prime_set(sieve(), 9), (std::vector<u64>{2, 5}));
  EXPECT_EQ(largest_pn_prime(sieve(), 9), 5u);
  EXPECT_FALSE(largest_pn_prime(sieve(), 4).has_value());
  EXPECT_EQ(omega_plus_fast(sieve(), 100), 2u);
  EXPECT_EQ(omega_plus_fast(sieve(), 2), 0u);
  EXPECT_EQ(log_pn_plus_fast(sieve(), 2), 0.0);
  EXPECT_NEAR(log_pn_plus_fast(sieve(), 100), std::log(221.0), 1e-12);
  EXPECT_EQ(qn(6), 42);
  EXPECT_EQ(qn(5), 1);
  const auto r49 = pn_record(sieve(), 49);
  EXPECT_EQ(std::count(r49.plus_primes.begin(), r49.plus_primes.end(), 7), 0);
  EXPECT_EQ(std::count(r49.minus_primes.begin(), r49.minus_primes.end(), 7), 0);
}

TEST(Pn, LargestPrimeAtMostHalf) {
  for (u64 n = 1; n <= 20000; ++n) {
    const auto P = largest_pn_prime(sieve(), n);
    if (P) {
      ASSERT_LE(2 * *P, n + 1) << n;
    }
  }
}

TEST(Pn, RecordSplit) {
  const auto r = pn_record(sieve(), 100);
  EXPECT_EQ(r.minus_primes, (std::vector<u64>{2, 3}));
  EXPECT_EQ(r.plus_primes, (std::vector<u64>{13, 17}));
  EXPECT_EQ(r.omega_plus, 2u);
  EXPECT_EQ(r.omega_minus(), 2u);
  EXPECT_NEAR(r.log_pn_plus, std::log(221.0), 1e-12);
  EXPECT_EQ(r.largest_prime, 17u);
  EXPECT_FALSE(pn_record(sieve(), 4).largest_prime.has_value());
}

TEST(Pn, NoSquareRootPrime) {
  // p = sqrt(n) gives s_p(p^2) = 1
  for (u64 p : sieve().primes_in(0, 400)) {
    const auto set = pn_prime_set(sieve(), p * p);
    EXPECT_FALSE(std::binary_search(set.begin(), set.end(), p)) << p;
  }
}

TEST(Pn, AgreesWithBruteForce) {
  for (u64 n = 1; n <= 3000; ++n) {
    ASSERT_EQ(pn_prime_set(sieve(), n), oracle::pn_primes(n)) << n;
  }
}

TEST(Pn, FastPathMatchesScan) {
  for (u64 n = 1; n <= 20000; ++n) {
    ASSERT_EQ(pn_prime_set_fast(sieve(), n), pn_prime_set(sieve(), n)) << n;
  }
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const u64 n = 2 + rng() % 399990;
    const auto r = pn_record(sieve(), n);
    ASSERT_EQ(plus_primes_fast(sieve(), n), r.plus_primes) << n;
    ASSERT_EQ(minus_primes(sieve(), n), r.minus_primes) << n;
    ASSERT_EQ(omega_plus_fast(sieve(), n), r.omega_plus);
    ASSERT_NEAR(log_pn_plus_fast(sieve(), n), r.log_pn_plus, 1e-9 * (1 + r.log_pn_plus));
    ASSERT_EQ(largest_pn_prime(sieve(), n), r.largest_prime);
  }
}

TEST(Pn, FastPathPreconditions) {
  EXPECT_THROW(omega_plus_fast(sieve(), 1), UsageError);
  EXPECT_THROW(log_pn_plus_fast(sieve(), 0), UsageError);
  EXPECT_THROW(pn_prime_set(sieve(), 0), UsageError);
  EXPECT_THROW(pn_prime_set(sieve(), 400002), RangeError);
  EXPECT_THROW(omega_plus_fast(sieve(), 400002), RangeError);
}

TEST(Pn, Qn) {
  EXPECT_EQ(qn(12), 2730);
  EXPECT_EQ(qn(100), 33330);
  EXPECT_EQ(qn(1), 2);
  EXPECT_EQ(qn(2), 6);
  EXPECT_EQ(qn(7), 1);
  EXPECT_THROW(qn(0), UsageError);
}

TEST(Pn, Case1Witnesses) {
  EXPECT_EQ(case1_witnesses(sieve(), 4), (std::vector<u64>{2, 3, 5}));
  EXPECT_EQ(case1_witnesses(sieve(), 5), (std::vector<u64>{}));
  // n+1 prime is always a witness
  EXPECT_EQ(case1_witnesses(sieve(), 6).back(), 7u);
  for (u64 n = 1; n <= 2000; ++n) {
    std::vector<u64> scan;
    for (u64 p = 2; p <= n + 1; ++p) {
      if (oracle::is_prime(p) && oracle::digit_sum(n, p) == p - 1) scan.push_back(p);
    }
    ASSERT_EQ(case1_witnesses(sieve(), n), scan) << n;
  }
}

TEST(Pn, Transitions) {
  const auto t5 = classify_transition(sieve(), 5);  // P_5 = 6, P_6 = 2
  EXPECT_TRUE(t5.divides);
  EXPECT_EQ(t5.comparison, Comparison::greater);
  EXPECT_EQ(t5.lost_primes, (std::vector<u64>{3}));

  const auto t4 = classify_transition(sieve(), 4);  // P_4 = 1, P_5 = 6
  EXPECT_FALSE(t4.divides);
  EXPECT_EQ(t4.comparison, Comparison::less);
  EXPECT_TRUE(t4.in_A);

  const auto t7 = classify_transition(sieve(), 7);  // P_7 = 6, P_8 = 3
  EXPECT_TRUE(t7.divides);
  EXPECT_EQ(t7.comparison, Comparison::greater);

  for (u64 n = 1; n <= 3000; ++n) {
    const auto t = classify_transition(sieve(), n);
    const BigInt a = pn_value(sieve(), n), b = pn_value(sieve(), n + 1);
    ASSERT_EQ(t.divides, a % b == 0) << n;
    const Comparison c = a > b ? Comparison::greater : a < b ? Comparison::less : Comparison::equal;
    ASSERT_EQ(t.comparison, c) << n;
    for (u64 p : t.gained_primes) ASSERT_EQ(oracle::digit_sum(n, p), p - 1) << n << " " << p;
    if (!t.divides) {
      ASSERT_TRUE(t.in_A) << n;
    }
  }
}

TEST(Pn, RatioRuleSmall) {
  // 2 | P_n for odd n except n = 2^k - 1; P_n / P_{n+1} = 2 there
  EXPECT_EQ(pn_value(sieve(), 15), 2 * pn_value(sieve(), 16));
  EXPECT_EQ(pn_value(sieve(), 31), 2 * pn_value(sieve(), 32));
}
