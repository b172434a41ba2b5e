#pragma once

// Exact Bernoulli numbers and polynomials (convention B_1 = -1/2).

#include <cstddef>
#include <cstdint>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "bpden/bigint.hpp"
#include "bpden/errors.hpp"

namespace bpden {

/// Polynomial with exact rational coefficients; coeffs[k] multiplies X^k.
class RationalPolynomial {
 public:
  RationalPolynomial() = default;
  explicit RationalPolynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) {
    trim();
  }

  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return coeffs_; }

  BigRational coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : BigRational(0);
  }

  BigRational evaluate(const BigRational& x) const {
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend bool operator==(const RationalPolynomial&, const RationalPolynomial&) = default;

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }

  std::vector<BigRational> coeffs_;
};

/// Memoized B_0..B_cap. Thread-safe; entries never change once computed.
class BernoulliTable {
 public:
  static constexpr std::size_t kDefaultCap = 1000;

  explicit BernoulliTable(std::size_t cap = kDefaultCap) : cap_(cap) {}

  std::size_t cap() const { return cap_; }

  /// B_0..B_N.
  std::vector<BigRational> numbers(std::size_t N) {
    extend(N);
    std::lock_guard lock(mutex_);
    return {values_.begin(), values_.begin() + static_cast<std::ptrdiff_t>(N + 1)};
  }

  BigRational at(std::size_t k) {
    extend(k);
    std::lock_guard lock(mutex_);
    return values_[k];
  }

 private:
  // sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1
  void extend(std::size_t N) {
    if (N > cap_) {
      throw ResourceError("Bernoulli index " + std::to_string(N) + " exceeds cap " +
                          std::to_string(cap_));
    }
    std::lock_guard lock(mutex_);
    if (values_.empty()) values_.push_back(1);
    for (std::size_t m = values_.size(); m <= N; ++m) {
      if (m >= 3 && m % 2 == 1) {
        values_.push_back(0);
        continue;
      }
      BigRational sum = 0;
      BigInt binom = 1;  // C(m+1, k)
      for (std::size_t k = 0; k < m; ++k) {
        if (values_[k] != 0) sum += BigRational(binom) * values_[k];
        binom = binom * static_cast<unsigned>(m + 1 - k) / static_cast<unsigned>(k + 1);
      }
      values_.push_back(-sum / BigRational(static_cast<unsigned>(m + 1)));
    }
  }

  std::size_t cap_;
  std::mutex mutex_;
  std::vector<BigRational> values_;
};

inline BernoulliTable& default_bernoulli_table() {
  static BernoulliTable table;
  return table;
}

inline std::vector<BigRational> bernoulli_numbers(std::size_t N) {
  return default_bernoulli_table().numbers(N);
}

/// B_n(X) = sum_k C(n,k) B_k X^(n-k).
inline RationalPolynomial bernoulli_poly(std::size_t n) {
  const auto B = bernoulli_numbers(n);
  std::vector<BigRational> c(n + 1);
  BigInt binom = 1;  // C(n, k)
  for (std::size_t k = 0; k <= n; ++k) {
    c[n - k] = BigRational(binom) * B[k];
    binom = binom * static_cast<unsigned>(n - k) / static_cast<unsigned>(k + 1);
  }
  return RationalPolynomial(std::move(c));
}

/// B_n(X) - B_n.
inline RationalPolynomial btilde_poly(std::size_t n) {
  if (n < 1) throw UsageError("btilde_poly needs n >= 1");
  auto c = bernoulli_poly(n).coefficients();
  c[0] = 0;
  return RationalPolynomial(std::move(c));
}

/// Least D > 0 with D * poly in Z[X].
inline BigInt poly_denominator(const RationalPolynomial& poly) {
  BigInt d = 1;
  for (const auto& c : poly.coefficients()) {
    d = lcm(d, boost::multiprecision::denominator(c));
  }
  return d;
}

/// sum_{j=1}^{N-1} j^(n-1), by direct summation.
inline BigInt power_sum(std::uint64_t N, unsigned n) {
  if (N < 1 || n < 1) throw UsageError("power_sum needs N >= 1 and n >= 1");
  BigInt total = 0;
  for (std::uint64_t j = 1; j < N; ++j) total += boost::multiprecision::pow(BigInt(j), n - 1);
  return total;
}

}  // namespace bpden
