#pragma once

// Batched per-n computation over ranges: transition statistics, error curves
// for omega(P_n^+) and log P_n^+, largest-prime checks and prime-equality
// counts. Blocks run in parallel and are merged in n order, so output does
// not depend on the worker count.

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "bpden/analytic.hpp"
#include "bpden/errors.hpp"
#include "bpden/pn.hpp"
#include "bpden/primes.hpp"

namespace bpden {

inline constexpr std::string_view kCodeVersion = "bpden-1.0";

struct CensusRow {
  u64 n = 0;
  u64 omega_minus = 0;
  u64 omega_plus = 0;
  double log_pn_plus = 0.0;
  u64 largest_prime = 0;  // 0 when P_n = 1
  bool divides = false;
  Comparison comparison = Comparison::equal;
  bool in_A = false;

  friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

/// Running totals; merging is plain addition.
struct CensusCounts {
  u64 rows = 0;
  u64 divides = 0;
  u64 greater = 0;
  u64 less = 0;
  u64 equal = 0;
  u64 divides_greater = 0;
  u64 in_A = 0;
  u64 case_audit_failures = 0;  // gained prime p with s_p(n) != p-1

  void add(const CensusRow& r) {
    ++rows;
    divides += r.divides;
    greater += r.comparison == Comparison::greater;
    less += r.comparison == Comparison::less;
    equal += r.comparison == Comparison::equal;
    divides_greater += r.divides && r.comparison == Comparison::greater;
    in_A += r.in_A;
  }

  friend bool operator==(const CensusCounts&, const CensusCounts&) = default;
};

struct CensusOptions {
  unsigned threads = 1;
  u64 block_size = 10000;
  std::string checkpoint_path;  // empty: no checkpointing
  std::string code_version{kCodeVersion};
  u64 stop_after_waves = 0;     // 0: run to completion; else simulate interruption
};

// ---------------------------------------------------------------------------
// CSV

inline constexpr std::string_view kCensusCsvHeader =
    "n,omega_minus,omega_plus,log_pn_plus,largest_prime,divides,comparison,in_A";

/// Shortest decimal that parses back to the same double.
inline std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

inline std::string format_row(const CensusRow& r) {
  std::string s;
  s.reserve(64);
  s += std::to_string(r.n);
  s += ',';
  s += std::to_string(r.omega_minus);
  s += ',';
  s += std::to_string(r.omega_plus);
  s += ',';
  s += format_double(r.log_pn_plus);
  s += ',';
  s += std::to_string(r.largest_prime);
  s += ',';
  s += r.divides ? '1' : '0';
  s += ',';
  s += std::to_string(static_cast<int>(r.comparison));
  s += ',';
  s += r.in_A ? '1' : '0';
  return s;
}

inline CensusRow parse_row(std::string_view line) {
  std::vector<std::string_view> f;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    f.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (f.size() != 8) throw UsageError("census row needs 8 fields: " + std::string(line));
  auto parse_u = [&](std::string_view s) {
    u64 v = 0;
    const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
    if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) {
      throw UsageError("bad integer field '" + std::string(s) + "'");
    }
    return v;
  };
  CensusRow r;
  r.n = parse_u(f[0]);
  r.omega_minus = parse_u(f[1]);
  r.omega_plus = parse_u(f[2]);
  const auto res = std::from_chars(f[3].data(), f[3].data() + f[3].size(), r.log_pn_plus);
  if (res.ec != std::errc{}) throw UsageError("bad real field '" + std::string(f[3]) + "'");
  r.largest_prime = parse_u(f[4]);
  r.divides = parse_u(f[5]) != 0;
  int cmp = 0;
  std::from_chars(f[6].data(), f[6].data() + f[6].size(), cmp);
  if (cmp < -1 || cmp > 1) throw UsageError("comparison must be -1, 0 or 1");
  r.comparison = static_cast<Comparison>(cmp);
  r.in_A = parse_u(f[7]) != 0;
  return r;
}

// ---------------------------------------------------------------------------
// Block engine

namespace detail {

struct BlockResult {
  std::vector<CensusRow> rows;
  u64 case_audit_failures = 0;
};

inline CensusRow make_row(u64 n, const std::vector<u64>& set_n, const TransitionRecord& t) {
  CensusRow r;
  r.n = n;
  for (u64 p : set_n) {
    if (square_less(p, n)) {
      ++r.omega_minus;
    } else {
      ++r.omega_plus;
      r.log_pn_plus += std::log(static_cast<double>(p));
    }
  }
  r.largest_prime = set_n.empty() ? 0 : set_n.back();
  r.divides = t.divides;
  r.comparison = t.comparison;
  r.in_A = t.in_A;
  return r;
}

inline BlockResult compute_block(const PrimeSieve& sieve, u64 lo, u64 hi) {
  BlockResult out;
  out.rows.reserve(hi - lo + 1);
  std::vector<u64> cur = pn_prime_set_fast(sieve, lo);
  for (u64 n = lo; n <= hi; ++n) {
    std::vector<u64> next = pn_prime_set_fast(sieve, n + 1);
    const TransitionRecord t = make_transition(sieve, n, cur, next);
    for (u64 p : t.gained_primes) {
      if (digit_sum_unchecked(n, p) != p - 1) ++out.case_audit_failures;
    }
    out.rows.push_back(make_row(n, cur, t));
    cur = std::move(next);
  }
  return out;
}

/// Runs blocks [start, hi] in waves of `threads` blocks; calls
/// on_wave(rows, audit_failures, next_n) in order after each wave.
template <typename OnWave>
void run_waves(const PrimeSieve& sieve, u64 start, u64 hi, const CensusOptions& opts,
               OnWave&& on_wave) {
  const unsigned threads = std::max(1u, opts.threads);
  const u64 bs = std::max<u64>(1, opts.block_size);
  u64 waves = 0;
  for (u64 wave_lo = start; wave_lo <= hi;) {
    std::vector<std::pair<u64, u64>> blocks;
    u64 b = wave_lo;
    for (unsigned i = 0; i < threads && b <= hi; ++i) {
      const u64 e = std::min(hi, b + bs - 1);
      blocks.emplace_back(b, e);
      b = e + 1;
    }
    std::vector<BlockResult> results(blocks.size());
    std::vector<std::exception_ptr> errors(blocks.size());
    if (blocks.size() == 1) {
      results[0] = compute_block(sieve, blocks[0].first, blocks[0].second);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = 0; i < blocks.size(); ++i) {
        pool.emplace_back([&, i] {
          try {
            results[i] = compute_block(sieve, blocks[i].first, blocks[i].second);
          } catch (...) {
            errors[i] = std::current_exception();
          }
        });
      }
      for (auto& t : pool) t.join();
      for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
      }
    }
    std::vector<CensusRow> rows;
    u64 audit = 0;
    for (auto& r : results) {
      rows.insert(rows.end(), r.rows.begin(), r.rows.end());
      audit += r.case_audit_failures;
    }
    wave_lo = b;
    on_wave(rows, audit, wave_lo);
    if (opts.stop_after_waves != 0 && ++waves >= opts.stop_after_waves) return;
  }
}

inline void require_census_range(const PrimeSieve& sieve, u64 lo, u64 hi) {
  if (lo < 1 || lo > hi) {
    throw UsageError("census range must satisfy 1 <= lo <= hi");
  }
  require_limit(sieve, (hi + 2) / 2, "census");
}

}  // namespace detail

/// Calls sink(row) for every n in [lo, hi] in ascending order.
template <typename Sink>
CensusCounts run_census(const PrimeSieve& sieve, u64 lo, u64 hi, const CensusOptions& opts,
                        Sink&& sink) {
  detail::require_census_range(sieve, lo, hi);
  CensusCounts counts;
  detail::run_waves(sieve, lo, hi, opts,
                    [&](const std::vector<CensusRow>& rows, u64 audit, u64) {
                      for (const auto& r : rows) {
                        counts.add(r);
                        sink(r);
                      }
                      counts.case_audit_failures += audit;
                    });
  return counts;
}

inline std::vector<CensusRow> census_rows(const PrimeSieve& sieve, u64 lo, u64 hi,
                                          const CensusOptions& opts = {}) {
  std::vector<CensusRow> rows;
  run_census(sieve, lo, hi, opts, [&](const CensusRow& r) { rows.push_back(r); });
  return rows;
}

// ---------------------------------------------------------------------------
// Checkpointed CSV output

struct Checkpoint {
  std::string version;
  u64 lo = 0;
  u64 hi = 0;
  u64 block_size = 0;
  u64 next_n = 0;
  u64 csv_bytes = 0;
  bool complete = false;
  CensusCounts counts;
};

inline constexpr std::string_view kCheckpointMagic = "bpden-census-checkpoint v1";

inline void write_checkpoint(const std::string& path, const Checkpoint& c) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw ResourceError("cannot write checkpoint " + tmp);
    out << kCheckpointMagic << '\n'
        << "version=" << c.version << '\n'
        << "lo=" << c.lo << '\n'
        << "hi=" << c.hi << '\n'
        << "block_size=" << c.block_size << '\n'
        << "next_n=" << c.next_n << '\n'
        << "csv_bytes=" << c.csv_bytes << '\n'
        << "complete=" << (c.complete ? 1 : 0) << '\n'
        << "rows=" << c.counts.rows << '\n'
        << "divides=" << c.counts.divides << '\n'
        << "greater=" << c.counts.greater << '\n'
        << "less=" << c.counts.less << '\n'
        << "equal=" << c.counts.equal << '\n'
        << "divides_greater=" << c.counts.divides_greater << '\n'
        << "in_A=" << c.counts.in_A << '\n'
        << "case_audit_failures=" << c.counts.case_audit_failures << '\n';
    if (!out) throw ResourceError("failed writing checkpoint " + tmp);
  }
  std::filesystem::rename(tmp, path);
}

inline std::optional<Checkpoint> read_checkpoint(const std::string& path) {
  std::ifstream in(path);
  if (!in) return std::nullopt;
  std::string line;
  if (!std::getline(in, line) || line != kCheckpointMagic) {
    throw CheckpointError("checkpoint " + path + " has an unknown format");
  }
  std::map<std::string, std::string> kv;
  while (std::getline(in, line)) {
    const auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }
  auto num = [&](const char* key) -> u64 {
    const auto it = kv.find(key);
    if (it == kv.end()) throw CheckpointError(std::string("checkpoint missing ") + key);
    return std::stoull(it->second);
  };
  Checkpoint c;
  c.version = kv["version"];
  c.lo = num("lo");
  c.hi = num("hi");
  c.block_size = num("block_size");
  c.next_n = num("next_n");
  c.csv_bytes = num("csv_bytes");
  c.complete = num("complete") != 0;
  c.counts.rows = num("rows");
  c.counts.divides = num("divides");
  c.counts.greater = num("greater");
  c.counts.less = num("less");
  c.counts.equal = num("equal");
  c.counts.divides_greater = num("divides_greater");
  c.counts.in_A = num("in_A");
  c.counts.case_audit_failures = num("case_audit_failures");
  return c;
}

/// Writes the census CSV for [lo, hi] to csv_path. With a checkpoint path,
/// progress is recorded after every wave and an existing checkpoint resumes
/// the run; the finished file is byte-identical either way.
inline CensusCounts write_census_csv(const PrimeSieve& sieve, u64 lo, u64 hi,
                                     const CensusOptions& opts, const std::string& csv_path) {
  detail::require_census_range(sieve, lo, hi);
  Checkpoint cp;
  cp.version = opts.code_version;
  cp.lo = lo;
  cp.hi = hi;
  cp.block_size = opts.block_size;
  cp.next_n = lo;

  const bool use_cp = !opts.checkpoint_path.empty();
  bool resumed = false;
  if (use_cp) {
    if (auto prev = read_checkpoint(opts.checkpoint_path)) {
      if (prev->version != cp.version || prev->lo != lo || prev->hi != hi ||
          prev->block_size != cp.block_size) {
        throw CheckpointError("checkpoint " + opts.checkpoint_path +
                              " does not match this range, block size or code version");
      }
      if (!std::filesystem::exists(csv_path) ||
          std::filesystem::file_size(csv_path) < prev->csv_bytes) {
        throw CheckpointError("census output " + csv_path + " is shorter than its checkpoint");
      }
      cp = *prev;
      std::filesystem::resize_file(csv_path, cp.csv_bytes);
      resumed = true;
      if (cp.complete) return cp.counts;
    }
  }

  std::ofstream out(csv_path, resumed ? std::ios::app | std::ios::binary
                                      : std::ios::trunc | std::ios::binary);
  if (!out) throw ResourceError("cannot open census output " + csv_path);
  if (!resumed) {
    out << kCensusCsvHeader << '\n';
    out.flush();
    cp.csv_bytes = kCensusCsvHeader.size() + 1;
  }

  detail::run_waves(sieve, cp.next_n, hi, opts,
                    [&](const std::vector<CensusRow>& rows, u64 audit, u64 next_n) {
                      std::string chunk;
                      for (const auto& r : rows) {
                        cp.counts.add(r);
                        chunk += format_row(r);
                        chunk += '\n';
                      }
                      cp.counts.case_audit_failures += audit;
                      out << chunk;
                      out.flush();
                      if (!out) throw ResourceError("failed writing " + csv_path);
                      cp.csv_bytes += chunk.size();
                      cp.next_n = next_n;
                      cp.complete = next_n > hi;
                      if (use_cp) write_checkpoint(opts.checkpoint_path, cp);
                    });
  return cp.counts;
}

// ---------------------------------------------------------------------------
// Error curves

struct Theorem3Error {
  u64 n = 0;
  u64 omega_plus = 0;
  double log_pn_plus = 0.0;
  double omega_err = 0.0;  // |omega(P_n^+) - n E_1(log sqrt n)| / sqrt n
  double log_err = 0.0;    // |log P_n^+ - sqrt n| / sqrt n
};

inline std::vector<Theorem3Error> theorem3_errors(const PrimeSieve& sieve,
                                                  const std::vector<u64>& ns) {
  std::vector<Theorem3Error> out;
  for (u64 n : ns) {
    if (n < 2) throw UsageError("theorem3_errors needs n >= 2");
    Theorem3Error e;
    e.n = n;
    e.omega_plus = omega_plus_fast(sieve, n);
    e.log_pn_plus = log_pn_plus_fast(sieve, n);
    const double dn = static_cast<double>(n);
    const double root = std::sqrt(dn);
    e.omega_err = std::fabs(static_cast<double>(e.omega_plus) -
                            dn * exp_integral_e1(std::log(root))) / root;
    e.log_err = std::fabs(e.log_pn_plus - root) / root;
    out.push_back(e);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Transition summary

struct CensusSummary {
  u64 x = 0;
  CensusCounts counts;
  u64 count_divides = 0;
  u64 count_strict_greater = 0;
  u64 count_divides_greater = 0;
  u64 count_equal = 0;
  u64 count_in_A = 0;
  u64 construction_lower_bound = 0;   // sum_{sqrt(x+1)<p<=x+1} (floor((x+1)/p) - 1)
  u64 construction_failures = 0;      // n = ap-1 instances failing the digit pattern
  std::vector<Theorem3Error> theorem3;
  unsigned threads = 1;
  double seconds = 0.0;

  double strict_decrease_frequency() const {
    return x ? static_cast<double>(count_divides_greater) / static_cast<double>(x) : 0.0;
  }
  double divisibility_failure_frequency() const {
    return x ? 1.0 - static_cast<double>(count_divides) / static_cast<double>(x) : 0.0;
  }
  bool construction_bound_holds() const {
    return construction_lower_bound <= count_divides_greater;
  }
};

/// Counts n <= x of the form a*p - 1 with p > sqrt(x+1), a >= 2, and checks
/// s_p(n+1) = a < p and s_p(n) = a - 2 + p >= p for each. Returns
/// (count, failures).
inline std::pair<u64, u64> construction_count(const PrimeSieve& sieve, u64 x) {
  const u64 top = (x + 1) / 2;  // larger p admit no a >= 2
  detail::require_limit(sieve, top, "construction_count");
  u64 count = 0, failures = 0;
  const u64 root = isqrt(x + 1);
  if (top > root) {
    sieve.for_each_prime(root, top, [&](u64 p) {
      if (static_cast<u128>(p) * p <= x + 1) return;  // strict p > sqrt(x+1)
      for (u64 a = 2; a * p <= x + 1; ++a) {
        const u64 n = a * p - 1;
        ++count;
        const bool ok = a < p && digit_sum_unchecked(n + 1, p) == a &&
                        digit_sum_unchecked(n, p) == a - 2 + p;
        failures += !ok;
      }
    });
  }
  return {count, failures};
}

inline std::vector<u64> theorem3_sample_points(u64 x) {
  std::vector<u64> ns;
  for (u64 p = 100; p <= x; p *= 10) ns.push_back(p);
  if (x >= 2 && (ns.empty() || ns.back() != x)) ns.push_back(x);
  return ns;
}

inline CensusSummary theorem4_summary(const PrimeSieve& sieve, u64 x,
                                      const CensusOptions& opts = {}) {
  const auto t0 = std::chrono::steady_clock::now();
  CensusSummary s;
  s.x = x;
  s.threads = std::max(1u, opts.threads);
  s.counts = run_census(sieve, 1, x, opts, [](const CensusRow&) {});
  s.count_divides = s.counts.divides;
  s.count_strict_greater = s.counts.greater;
  s.count_divides_greater = s.counts.divides_greater;
  s.count_equal = s.counts.equal;
  s.count_in_A = s.counts.in_A;
  std::tie(s.construction_lower_bound, s.construction_failures) = construction_count(sieve, x);
  s.theorem3 = theorem3_errors(sieve, theorem3_sample_points(x));
  s.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

inline std::string to_text(const CensusSummary& s) {
  std::ostringstream o;
  o << "x=" << s.x << '\n'
    << "count_divides=" << s.count_divides << '\n'
    << "count_strict_greater=" << s.count_strict_greater << '\n'
    << "count_divides_greater=" << s.count_divides_greater << '\n'
    << "count_less=" << s.counts.less << '\n'
    << "count_equal=" << s.count_equal << '\n'
    << "count_in_A=" << s.count_in_A << '\n'
    << "strict_decrease_frequency=" << format_double(s.strict_decrease_frequency()) << '\n'
    << "divisibility_failure_frequency=" << format_double(s.divisibility_failure_frequency())
    << '\n'
    << "ln2=" << format_double(std::numbers::ln2) << '\n'
    << "construction_lower_bound=" << s.construction_lower_bound << '\n'
    << "construction_bound_holds=" << (s.construction_bound_holds() ? 1 : 0) << '\n'
    << "construction_failures=" << s.construction_failures << '\n'
    << "case_audit_failures=" << s.counts.case_audit_failures << '\n'
    << "ford_delta=" << format_double(ford_delta()) << '\n';
  for (const auto& e : s.theorem3) {
    o << "theorem3_error." << e.n << "=" << format_double(e.omega_err) << '\n'
      << "theorem35_error." << e.n << "=" << format_double(e.log_err) << '\n';
  }
  o << "threads=" << s.threads << '\n' << "seconds=" << format_double(s.seconds) << '\n';
  return o.str();
}

// ---------------------------------------------------------------------------
// Prime equality

struct PrimeEqualityReport {
  u64 x = 0;
  u64 primes = 0;
  u64 equal_q_next = 0;     // P_q = P_{q+1}
  u64 equal_prev_q = 0;     // P_{q-1} = P_q
  u64 witness_free = 0;     // no p != q with s_p(q-1) = p-1
  std::vector<u64> witness_violations;  // witness-free q with P_{q-1} != P_q

  double fraction_prev_equal() const {
    return primes ? static_cast<double>(equal_prev_q) / static_cast<double>(primes) : 0.0;
  }
  double fraction_next_equal() const {
    return primes ? static_cast<double>(equal_q_next) / static_cast<double>(primes) : 0.0;
  }
};

inline PrimeEqualityReport prime_equality_census(const PrimeSieve& sieve, u64 x) {
  if (x < 2) throw UsageError("prime_equality_census needs x >= 2");
  detail::require_limit(sieve, (x + 2) / 2, "prime_equality_census");
  PrimeEqualityReport r;
  r.x = x;
  // q above the sieve limit is tested by trial division against sieved primes
  for (u64 q = 2; q <= x; ++q) {
    if (!sieve.is_prime_extended(q)) continue;
    ++r.primes;
    const auto prev = pn_prime_set_fast(sieve, q - 1);
    const auto cur = pn_prime_set_fast(sieve, q);
    const auto next = pn_prime_set_fast(sieve, q + 1);
    if (cur == next) ++r.equal_q_next;
    const bool prev_equal = prev == cur;
    if (prev_equal) ++r.equal_prev_q;
    bool has_witness = false;
    for (u64 p : case1_witnesses(sieve, q - 1)) {
      if (p != q) has_witness = true;
    }
    if (!has_witness) {
      ++r.witness_free;
      if (!prev_equal) r.witness_violations.push_back(q);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Largest prime factor checks

struct Conjecture1Report {
  u64 x = 0;
  std::vector<u64> violations;           // n in (192, x] with P(P_n)^2 <= n
  std::vector<u64> small_failures;       // n <= 192 with P(P_n)^2 <= n (or P_n = 1)
  std::vector<u64> upper_bound_failures; // P > (n+1)/2, or equality away from n = 2p-1
  double min_ratio = 0.0;                // min P(P_n) / n^(20/37) over P_n > 1
  u64 min_ratio_n = 0;
};

inline Conjecture1Report conjecture1_check(const PrimeSieve& sieve, u64 x) {
  detail::require_limit(sieve, (x + 1) / 2, "conjecture1_check");
  Conjecture1Report r;
  r.x = x;
  r.min_ratio = std::numeric_limits<double>::infinity();
  for (u64 n = 1; n <= x; ++n) {
    const auto P = largest_pn_prime(sieve, n);
    const bool fails = !P || static_cast<u128>(*P) * *P <= n;
    if (fails) (n > 192 ? r.violations : r.small_failures).push_back(n);
    if (P) {
      const double ratio = static_cast<double>(*P) / std::pow(static_cast<double>(n), 20.0 / 37.0);
      if (ratio < r.min_ratio) {
        r.min_ratio = ratio;
        r.min_ratio_n = n;
      }
      const bool at_bound = 2 * *P == n + 1;
      const bool is_2p_minus_1 = (n + 1) % 2 == 0 && sieve.is_prime((n + 1) / 2);
      if (2 * *P > n + 1 || at_bound != is_2p_minus_1) r.upper_bound_failures.push_back(n);
    } else if ((n + 1) % 2 == 0 && (n + 1) / 2 >= 2 && sieve.is_prime((n + 1) / 2)) {
      r.upper_bound_failures.push_back(n);
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// Density of A(x) = {n <= x : s_p(n) = p-1 for some p}

struct ADensityReport {
  u64 x = 0;
  u64 count = 0;
  double density = 0.0;
  double y = 0.0;         // sqrt(log x)
  u64 large_p_count = 0;  // n with a witness p >= y
};

inline ADensityReport a_density(const PrimeSieve& sieve, u64 x) {
  if (x < 2) throw UsageError("a_density needs x >= 2");
  detail::require_limit(sieve, (x + 2) / 2, "a_density");
  ADensityReport r;
  r.x = x;
  r.y = std::sqrt(std::log(static_cast<double>(x)));
  for (u64 n = 1; n <= x; ++n) {
    const auto w = case1_witnesses(sieve, n);
    if (w.empty()) continue;
    ++r.count;
    if (static_cast<double>(w.back()) >= r.y) ++r.large_p_count;
  }
  r.density = static_cast<double>(r.count) / static_cast<double>(x);
  return r;
}

}  // namespace bpden
