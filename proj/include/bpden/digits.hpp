#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "bpden/errors.hpp"

namespace bpden {

/// Base-b expansion of n, most significant digit first. n = 0 has no digits.
struct DigitExpansion {
  std::uint64_t n = 0;
  std::uint64_t base = 2;
  std::vector<std::uint64_t> digits;
  std::uint64_t digit_sum = 0;
  unsigned trailing_max_run = 0;  // trailing digits equal to base-1
};

namespace detail {
inline void check_base(std::uint64_t b) {
  if (b < 2) throw UsageError("digit base must be >= 2, got " + std::to_string(b));
}
}  // namespace detail

inline DigitExpansion expand(std::uint64_t n, std::uint64_t b) {
  detail::check_base(b);
  DigitExpansion e;
  e.n = n;
  e.base = b;
  bool in_run = true;
  for (std::uint64_t m = n; m != 0; m /= b) {
    const std::uint64_t d = m % b;
    e.digits.push_back(d);
    e.digit_sum += d;
    if (in_run && d == b - 1) {
      ++e.trailing_max_run;
    } else {
      in_run = false;
    }
  }
  std::reverse(e.digits.begin(), e.digits.end());
  return e;
}

/// s_b(n). No allocation; used in every census inner loop.
inline std::uint64_t digit_sum(std::uint64_t n, std::uint64_t b) {
  detail::check_base(b);
  std::uint64_t s = 0;
  for (; n != 0; n /= b) s += n % b;
  return s;
}

// Hot-path variant: caller guarantees b >= 2.
inline std::uint64_t digit_sum_unchecked(std::uint64_t n, std::uint64_t b) {
  std::uint64_t s = 0;
  for (; n != 0; n /= b) s += n % b;
  return s;
}

inline unsigned trailing_max_run(std::uint64_t n, std::uint64_t b) {
  detail::check_base(b);
  unsigned r = 0;
  for (; n != 0 && n % b == b - 1; n /= b) ++r;
  return r;
}

}  // namespace bpden
