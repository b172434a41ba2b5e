#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "bpden/primes.hpp"
#include "oracles.hpp"

using namespace bpden;

TEST(PrimeSieve, SmallCases) {
  EXPECT_EQ(build_sieve(10).primes(), (std::vector<u64>{2, 3, 5, 7}));
  EXPECT_EQ(build_sieve(2).primes(), (std::vector<u64>{2}));
  EXPECT_EQ(build_sieve(3).primes(), (std::vector<u64>{2, 3}));
  EXPECT_EQ(build_sieve(11).primes(), (std::vector<u64>{2, 3, 5, 7, 11}));
}

TEST(PrimeSieve, RejectsTinyLimit) {
  EXPECT_THROW(build_sieve(1), UsageError);
  EXPECT_THROW(build_sieve(0), UsageError);
}

TEST(PrimeSieve, MemoryBudget) {
  EXPECT_THROW(PrimeSieve(u64{1} << 40, u64{1} << 20), ResourceError);
}

TEST(PrimeSieve, AgreesWithTrialDivision) {
  const auto s = build_sieve(100000);
  for (u64 m = 0; m <= 100000; ++m) {
    ASSERT_EQ(s.is_prime(m), oracle::is_prime(m)) << m;
  }
  EXPECT_THROW(s.is_prime(100001), RangeError);
}

TEST(PrimeSieve, PiOfMillion) {
  const auto s = build_sieve(1000000);
  EXPECT_EQ(s.primes().size(), 78498u);
  EXPECT_EQ(s.count_primes(0, 1000000), 78498u);
}

TEST(PrimeSieve, ListIsStrictlyAscendingPrimes) {
  const auto s = build_sieve(50000);
  const auto& ps = s.primes();
  for (std::size_t i = 0; i < ps.size(); ++i) {
    ASSERT_TRUE(oracle::is_prime(ps[i]));
    if (i) {
      ASSERT_LT(ps[i - 1], ps[i]);
    }
  }
}

TEST(PrimeSieve, PrimesIn) {
  const auto s = build_sieve(10000);
  EXPECT_EQ(s.primes_in(10, 20), (std::vector<u64>{11, 13, 17, 19}));
  EXPECT_THROW(s.primes_in(13, 13), RangeError);
  EXPECT_THROW(s.primes_in(10, 10001), RangeError);

  std::vector<u64> scan;
  for (u64 m = 3501; m <= 5250; ++m) {
    if (oracle::is_prime(m)) scan.push_back(m);
  }
  EXPECT_EQ(s.primes_in(3500, 5250), scan);
  EXPECT_EQ(scan.size(), 208u);  // pi(5250) - pi(3500) = 697 - 489
  EXPECT_EQ(s.primes_in(3500, 5250).size(), s.count_primes(0, 5250) - s.count_primes(0, 3500));
}

TEST(PrimeSieve, PrimesInConcatenates) {
  const auto s = build_sieve(20000);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    u64 a = rng() % 20000, b = rng() % 20000, c = rng() % 20000;
    if (a > b) std::swap(a, b);
    if (b > c) std::swap(b, c);
    if (a > b) std::swap(a, b);
    if (a == b || b == c) continue;
    auto left = s.primes_in(a, b);
    const auto right = s.primes_in(b, c);
    left.insert(left.end(), right.begin(), right.end());
    ASSERT_EQ(left, s.primes_in(a, c));
  }
}

TEST(PrimeSieve, WordBoundaries) {
  const auto s = build_sieve(1000);
  for (u64 lo = 0; lo < 300; ++lo) {
    for (u64 hi = lo + 1; hi < 300; hi += 7) {
      std::vector<u64> expect;
      for (u64 m = lo + 1; m <= hi; ++m) {
        if (oracle::is_prime(m)) expect.push_back(m);
      }
      ASSERT_EQ(s.primes_in(lo, hi), expect) << lo << " " << hi;
    }
  }
}

TEST(PrimeSieve, ExtendedPrimality) {
  const auto s = build_sieve(1000);
  for (u64 m = 0; m <= 1000000; m += 997) {
    ASSERT_EQ(s.is_prime_extended(m), oracle::is_prime(m)) << m;
  }
  EXPECT_TRUE(s.is_prime_extended(999983));
  EXPECT_THROW(s.is_prime_extended(u64{1} << 40), RangeError);
}

TEST(LargestPrimeFactor, Examples) {
  EXPECT_EQ(largest_prime_factor(1326), 17u);
  EXPECT_EQ(largest_prime_factor(2), 2u);
  EXPECT_EQ(largest_prime_factor(42), 7u);
  EXPECT_EQ(largest_prime_factor(1024), 2u);
  EXPECT_EQ(largest_prime_factor(999983), 999983u);
  EXPECT_EQ(largest_prime_factor(2u * 999983u), 999983u);
  EXPECT_THROW(largest_prime_factor(1), UsageError);
}

TEST(LargestPrimeFactor, AgreesWithTrialDivision) {
  for (u64 m = 2; m < 20000; ++m) {
    u64 best = 0;
    for (u64 p = 2; p <= m; ++p) {
      if (m % p == 0 && oracle::is_prime(p)) best = p;
    }
    ASSERT_EQ(largest_prime_factor(m), best) << m;
  }
}
