#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>

#include <boost/multiprecision/cpp_int.hpp>

namespace bpden {

using BigInt = boost::multiprecision::cpp_int;
/// Always reduced, denominator positive, 0 stored as 0/1.
using BigRational = boost::multiprecision::cpp_rational;

/// Natural log of |m| for m != 0, valid beyond the double range.
inline double log_abs(const BigInt& m) {
  const BigInt a = boost::multiprecision::abs(m);
  const auto bits = boost::multiprecision::msb(a);
  if (bits < 1000) return std::log(a.convert_to<double>());
  const auto shift = bits - 60;
  const BigInt top = a >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::numbers::ln2;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  if (a == 0 || b == 0) return 0;
  return boost::multiprecision::abs(a / boost::multiprecision::gcd(a, b) * b);
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

}  // namespace bpden
