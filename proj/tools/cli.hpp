#pragma once

// Command-line front end. run() is kept separate from main() so the tests can
// drive it with string streams.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "bpden/analytic.hpp"
#include "bpden/bernoulli.hpp"
#include "bpden/census.hpp"
#include "bpden/diophantine.hpp"
#include "bpden/errors.hpp"
#include "bpden/fixtures.hpp"
#include "bpden/pn.hpp"
#include "bpden/primes.hpp"

namespace bpden::cli {

enum ExitCode : int { ok = 0, verification_failed = 1, usage = 2, resource = 3 };

inline constexpr const char* kThreadsEnv = "BPDEN_THREADS";
inline constexpr const char* kFixturesEnv = "BPDEN_FIXTURES";
inline constexpr u64 kDefaultMinSieve = 1000;

struct Config {
  u64 sieve_limit = 0;  // 0: derive from the request
  std::string output;
  std::string format = "text";
  unsigned threads = 1;
  u64 block_size = 10000;
  std::string checkpoint;
  std::string fixtures;
  bool strict = false;
};

inline unsigned default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
    throw UsageError(std::string(kThreadsEnv) + " must be a positive integer");
  }
  return 1;
}

template <typename T>
std::string join(const std::vector<T>& v) {
  std::ostringstream o;
  o << '[';
  for (std::size_t i = 0; i < v.size(); ++i) o << (i ? "," : "") << v[i];
  o << ']';
  return o.str();
}

inline std::string num(double v) { return format_double(v); }

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

  int run(int argc, const char* const* argv);

 private:
  PrimeSieve sieve_for(u64 needed) const {
    const u64 limit = cfg_.sieve_limit ? cfg_.sieve_limit : std::max(needed, kDefaultMinSieve);
    return PrimeSieve(std::max<u64>(limit, 2));
  }

  std::optional<Fixtures> fixtures() const {
    if (cfg_.fixtures.empty()) {
      if (cfg_.strict) throw ResourceError("--strict needs a fixtures file (--fixtures)");
      return std::nullopt;
    }
    return Fixtures::load(cfg_.fixtures);
  }

  /// Prints key=pass|fail|skipped; returns false on fail.
  bool fixture_check(const std::optional<Fixtures>& fx, const std::string& key, double value,
                     bool upper) {
    std::optional<double> bound;
    if (fx) bound = fx->get(key);
    if (!bound) {
      if (cfg_.strict) throw ResourceError("fixture '" + key + "' missing");
      out_ << "check." << key << "=skipped\n";
      return true;
    }
    const bool pass = upper ? value <= *bound : value >= *bound;
    out_ << "check." << key << "=" << (pass ? "pass" : "fail") << '\n';
    return pass;
  }

  void compute();
  void verify_bernoulli();
  void census();
  void asymptotics();
  void conjecture1();
  void prime_equality();
  void a_density_cmd();
  void stewart();
  void matveev();
  void exceptional();
  void e1();
  void delta();
  void li_cmd();
  void recip_tail();
  void fractional();
  void lemma_sums();
  void cor_sums();
  void s12();

  std::ostream& out_;
  std::ostream& err_;
  Config cfg_;

  // subcommand arguments
  u64 n_ = 0, max_ = 0, min_ = 1, p_ = 2, q_ = 3, v_ = 0, samples_ = 0, seed_ = 1;
  std::vector<u64> n_list_;
  std::vector<double> heights_;
  double D_ = 1.0, x_ = 0.0, y_ = 0.0, z_ = 0.0, c_ = 1.0, t_ = 2.0, alpha_ = 0.5;
  double epsilon_ = 0.5, u_ = 0.0;
  int kappa_ = 0;
  unsigned terms_ = 4;
};

inline void Runner::compute() {
  const auto sieve = sieve_for((n_ + 1) / 2);
  const auto rec = pn_record(sieve, n_);
  out_ << "n=" << n_ << '\n'
       << "minus=" << join(rec.minus_primes) << '\n'
       << "plus=" << join(rec.plus_primes) << '\n'
       << "omega_minus=" << rec.omega_minus() << '\n'
       << "omega_plus=" << rec.omega_plus << '\n'
       << "log_pn_plus=" << num(rec.log_pn_plus) << '\n'
       << "largest_prime=" << rec.largest_prime.value_or(0) << '\n'
       << "pn=" << pn_value(sieve, n_) << '\n'
       << "qn=" << qn(n_) << '\n';
}

inline void Runner::verify_bernoulli() {
  if (max_ > BernoulliTable::kDefaultCap) {
    throw ResourceError("verify-bernoulli supports --max up to " +
                        std::to_string(BernoulliTable::kDefaultCap));
  }
  const auto sieve = sieve_for((max_ + 1) / 2);
  const auto B = bernoulli_numbers(max_);
  for (u64 n = 1; n <= max_; ++n) {
    const BigInt P = pn_value(sieve, n);
    const BigInt Q = qn(n);
    if (poly_denominator(btilde_poly(n)) != P) {
      throw VerificationError("denominator of B_n(X) - B_n differs from P_n at n=" +
                              std::to_string(n));
    }
    if (poly_denominator(bernoulli_poly(n)) != lcm(P, Q)) {
      throw VerificationError("denominator of B_n(X) differs from lcm(P_n, Q_n) at n=" +
                              std::to_string(n));
    }
    if (n % 2 == 0 && boost::multiprecision::denominator(B[n]) != Q) {
      throw VerificationError("denominator of B_n differs from Q_n at n=" + std::to_string(n));
    }
  }
  out_ << "verified=" << max_ << '\n';
}

inline void Runner::census() {
  if (min_ < 1 || min_ > max_) throw UsageError("census needs 1 <= --min <= --max");
  if (cfg_.format != "csv" && cfg_.format != "text") {
    throw UsageError("--format must be csv or text");
  }
  const auto sieve = sieve_for((max_ + 2) / 2);
  CensusOptions opts;
  opts.threads = cfg_.threads;
  opts.block_size = cfg_.block_size;
  opts.checkpoint_path = cfg_.checkpoint;

  if (!cfg_.output.empty()) {
    const auto counts = write_census_csv(sieve, min_, max_, opts, cfg_.output);
    out_ << "rows=" << counts.rows << '\n'
         << "output=" << cfg_.output << '\n'
         << "case_audit_failures=" << counts.case_audit_failures << '\n';
    if (counts.case_audit_failures) throw VerificationError("case analysis audit failed");
    return;
  }
  if (!cfg_.checkpoint.empty()) throw UsageError("--checkpoint needs --out");
  if (cfg_.format == "csv") {
    out_ << kCensusCsvHeader << '\n';
    const auto counts =
        run_census(sieve, min_, max_, opts, [&](const CensusRow& r) { out_ << format_row(r) << '\n'; });
    if (counts.case_audit_failures) throw VerificationError("case analysis audit failed");
    return;
  }
  if (min_ != 1) throw UsageError("the text summary always covers [1, --max]");
  const auto fx = fixtures();
  const auto s = theorem4_summary(sieve, max_, opts);
  out_ << to_text(s);
  bool pass = true;
  if (fx && fx->get("theorem4.x") == static_cast<double>(max_)) {
    pass &= fixture_check(fx, "theorem4.strict_decrease_low", s.strict_decrease_frequency(), false);
    pass &= fixture_check(fx, "theorem4.strict_decrease_high", s.strict_decrease_frequency(), true);
    pass &= fixture_check(fx, "theorem4.divisibility_failure_max",
                          s.divisibility_failure_frequency(), true);
  }
  if (s.counts.case_audit_failures) throw VerificationError("case analysis audit failed");
  if (s.construction_failures) throw VerificationError("construction instance failed");
  if (!s.construction_bound_holds()) throw VerificationError("construction bound exceeded");
  if (!pass) throw VerificationError("calibrated frequency outside its fixture");
}

inline void Runner::asymptotics() {
  if (n_list_.empty()) throw UsageError("asymptotics needs --n-list");
  const u64 top = *std::max_element(n_list_.begin(), n_list_.end());
  const auto sieve = sieve_for((top + 1) / 2);
  const auto fx = fixtures();
  bool pass = true;
  for (const auto& e : theorem3_errors(sieve, n_list_)) {
    const double dn = static_cast<double>(e.n);
    const std::string k = std::to_string(e.n);
    out_ << "omega_plus." << k << "=" << e.omega_plus << '\n'
         << "log_pn_plus." << k << "=" << num(e.log_pn_plus) << '\n'
         << "scaled_e1." << k << "=" << num(dn * exp_integral_e1(std::log(std::sqrt(dn)))) << '\n';
    if (e.n >= 3) {
      for (unsigned N = 1; N <= terms_; ++N) {
        out_ << "expansion." << k << "." << N << "=" << num(omega_plus_expansion(dn, N)) << '\n';
      }
    }
    out_ << "omega_err." << k << "=" << num(e.omega_err) << '\n'
         << "log_err." << k << "=" << num(e.log_err) << '\n';
    pass &= fixture_check(fx, "theorem3.omega_err_max", e.omega_err, true);
    pass &= fixture_check(fx, "theorem35.log_err_max", e.log_err, true);
  }
  if (!pass) throw VerificationError("asymptotic error outside its fixture");
}

inline void Runner::conjecture1() {
  const auto sieve = sieve_for((max_ + 1) / 2);
  const auto r = conjecture1_check(sieve, max_);
  out_ << "x=" << r.x << '\n'
       << "violations=" << join(r.violations) << '\n'
       << "small_failures=" << join(r.small_failures) << '\n'
       << "upper_bound_failures=" << join(r.upper_bound_failures) << '\n'
       << "min_ratio=" << num(r.min_ratio) << '\n'
       << "min_ratio_n=" << r.min_ratio_n << '\n';
  if (!r.upper_bound_failures.empty()) {
    throw VerificationError("P(P_n) <= (n+1)/2 with equality at n = 2p-1 failed");
  }
  if (!r.violations.empty()) throw VerificationError("P(P_n) > sqrt(n) failed above 192");
}

inline void Runner::prime_equality() {
  const auto sieve = sieve_for((max_ + 2) / 2);
  const auto r = prime_equality_census(sieve, max_);
  out_ << "x=" << r.x << '\n'
       << "primes=" << r.primes << '\n'
       << "equal_q_next=" << r.equal_q_next << '\n'
       << "equal_prev_q=" << r.equal_prev_q << '\n'
       << "fraction_next_equal=" << num(r.fraction_next_equal()) << '\n'
       << "fraction_prev_equal=" << num(r.fraction_prev_equal()) << '\n'
       << "witness_free=" << r.witness_free << '\n'
       << "witness_violations=" << join(r.witness_violations) << '\n';
  if (r.x >= 16) {
    out_ << "log2_x=" << num(iterated_log(2, static_cast<double>(r.x))) << '\n';
  }
  if (!r.witness_violations.empty()) {
    throw VerificationError("witness-free prime with P_{q-1} != P_q");
  }
}

inline void Runner::a_density_cmd() {
  const auto sieve = sieve_for((max_ + 2) / 2);
  const auto r = a_density(sieve, max_);
  out_ << "x=" << r.x << '\n'
       << "count=" << r.count << '\n'
       << "density=" << num(r.density) << '\n'
       << "y=" << num(r.y) << '\n'
       << "large_p_count=" << r.large_p_count << '\n'
       << "ford_delta=" << num(ford_delta()) << '\n';
}

inline void Runner::stewart() {
  auto emit = [&](const StewartSample& s, const std::string& prefix) {
    out_ << prefix << "n=" << s.n << '\n'
         << prefix << "p=" << s.p << '\n'
         << prefix << "q=" << s.q << '\n'
         << prefix << "digit_sum_total=" << s.digit_sum_total << '\n'
         << prefix << "rhs=" << num(s.rhs) << '\n'
         << prefix << "valid=" << (s.valid ? 1 : 0) << '\n';
  };
  if (samples_ == 0) {
    if (n_ < 3) throw UsageError("diophantine stewart needs --n >= 3 or --samples");
    emit(stewart_sample(n_, p_, q_), "");
    return;
  }
  std::mt19937_64 rng(seed_);
  const std::vector<u64> small{2, 3, 5, 7, 11, 13};
  for (u64 i = 0; i < samples_; ++i) {
    const u64 n = 3 + rng() % (1000000000 - 2);
    const u64 a = small[rng() % small.size()];
    u64 b = small[rng() % small.size()];
    while (b == a) b = small[rng() % small.size()];
    emit(stewart_sample(n, a, b), "sample." + std::to_string(i) + ".");
  }
}

inline void Runner::matveev() {
  out_ << "k=" << heights_.size() << '\n'
       << "bound=" << num(matveev_bound({heights_, D_})) << '\n';
}

inline void Runner::exceptional() {
  const auto sieve = sieve_for(static_cast<u64>(std::max(0.0, y_)));
  out_ << "n=" << n_ << '\n' << "exceptional=" << join(exceptional_primes(sieve, n_, y_)) << '\n';
}

inline void Runner::e1() {
  const double v = exp_integral_e1(x_);
  out_ << "x=" << num(x_) << '\n'
       << "e1=" << num(v) << '\n'
       << "method=" << to_string(x_ <= 1.5 ? EstimateMethod::series
                                            : EstimateMethod::continued_fraction)
       << '\n'
       << "lower=" << num(std::exp(-x_) / (x_ + 1.0)) << '\n'
       << "upper=" << num(std::exp(-x_) / x_) << '\n';
  if (terms_ >= 1) {
    const auto a = e1_asymptotic_partial(x_, terms_);
    out_ << "asymptotic=" << num(a.value) << '\n'
         << "asymptotic_low=" << num(a.error_low) << '\n'
         << "asymptotic_high=" << num(a.error_high) << '\n';
  }
}

inline void Runner::delta() {
  out_ << "x=" << num(x_) << '\n'
       << "c=" << num(c_) << '\n'
       << "delta_c=" << num(delta_c(x_, c_)) << '\n'
       << "ford_delta=" << num(ford_delta()) << '\n';
}

inline void Runner::li_cmd() { out_ << "li=" << num(li(u_)) << '\n'; }

inline void Runner::recip_tail() {
  const u64 need = static_cast<u64>(std::ceil(10.0 * t_));
  const auto sieve = sieve_for(std::max<u64>(need, 10000000));
  const auto r = prime_recip_tail(sieve, t_, kappa_);
  out_ << "t=" << num(t_) << '\n'
       << "kappa=" << kappa_ << '\n'
       << "limit=" << r.limit << '\n'
       << "sum=" << num(r.estimate.value) << '\n'
       << "bracket_low=" << num(r.estimate.error_low) << '\n'
       << "bracket_high=" << num(r.estimate.error_high) << '\n'
       << "f_kappa=" << num(r.reference) << '\n'
       << "deviation=" << num(r.deviation()) << '\n';
}

inline void Runner::fractional() {
  const auto sieve = sieve_for(3 * v_);
  const auto r = fractional_census(sieve, n_, v_);
  out_ << "n=" << n_ << '\n'
       << "v=" << v_ << '\n'
       << "count=" << r.count << '\n'
       << "plus_divisor_count=" << r.plus_divisor_count << '\n'
       << "chain_failures=" << r.chain_failures << '\n'
       << "threshold=" << num(r.threshold) << '\n'
       << "reference=" << num(r.reference) << '\n';
  if (v_ >= 10 && r.chain_failures) throw VerificationError("counted prime missing from P_n^+");
}

inline void Runner::lemma_sums() {
  const auto sieve = sieve_for(static_cast<u64>(std::max(0.0, std::floor(x_))));
  const auto r = lemma_sieve_sum(sieve, x_, y_, z_, kappa_, epsilon_);
  out_ << "lhs=" << num(r.lhs) << '\n' << "rhs=" << num(r.rhs) << '\n'
       << "holds=" << (r.holds ? 1 : 0) << '\n';
  if (!r.holds) throw VerificationError("sieve-sum inequality failed");
}

inline void Runner::cor_sums() {
  const auto sieve = sieve_for(n_);
  const auto r = cor_sieve_sum(sieve, n_, alpha_, kappa_);
  out_ << "lhs=" << num(r.lhs) << '\n'
       << "bound_ref=" << num(r.bound_ref) << '\n'
       << "ratio=" << num(r.ratio()) << '\n';
}

inline void Runner::s12() {
  const double root = std::sqrt(static_cast<double>(n_));
  const double upper = root > std::numbers::e ? root / delta_c(root, c_) : root;
  const auto sieve = sieve_for(static_cast<u64>(upper) + 1);
  const auto r = s12_empirical(sieve, n_, c_);
  out_ << "s12=" << num(r.s12) << '\n'
       << "upper=" << num(r.upper) << '\n'
       << "normalized=" << num(r.normalized) << '\n';
}

inline int Runner::run(int argc, const char* const* argv) {
  CLI::App app{"Denominators of Bernoulli polynomials: exact values, censuses and estimates",
               "bpden"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kCodeVersion));
  app.add_option("--sieve-limit", cfg_.sieve_limit,
                 "Prime sieve limit (default: derived from the request)");
  app.add_option("--fixtures", cfg_.fixtures, "Calibrated thresholds file")
      ->envname(kFixturesEnv);
  app.add_flag("--strict", cfg_.strict, "Fail when a fixture is missing instead of skipping");

  std::function<void()> action;
  auto on = [&](CLI::App* sub, void (Runner::*fn)()) {
    sub->callback([&, fn] { action = [this, fn] { (this->*fn)(); }; });
  };

  auto* compute = app.add_subcommand("compute", "P_n, its split at sqrt(n), and Q_n");
  compute->add_option("--n", n_, "Index n >= 1")->required()->check(CLI::PositiveNumber);
  on(compute, &Runner::compute);

  auto* vb = app.add_subcommand("verify-bernoulli",
                                "Check polynomial denominators against P_n and Q_n");
  vb->add_option("--max", max_, "Largest n")->required()->check(CLI::PositiveNumber);
  on(vb, &Runner::verify_bernoulli);

  try {
    cfg_.threads = default_threads();
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << '\n';
    return usage;
  }
  auto* census = app.add_subcommand("census", "Transition census over n <= max");
  census->add_option("--max", max_, "Largest n")->required()->check(CLI::PositiveNumber);
  census->add_option("--min", min_, "Smallest n (CSV output only)")->check(CLI::PositiveNumber);
  census->add_option("--out", cfg_.output, "Write CSV rows to this file");
  census->add_option("--checkpoint", cfg_.checkpoint, "Checkpoint file for resumable --out");
  census->add_option("--threads", cfg_.threads, "Worker threads (default $BPDEN_THREADS or 1)")
      ->check(CLI::PositiveNumber);
  census->add_option("--block-size", cfg_.block_size, "Values of n per work block")
      ->check(CLI::PositiveNumber);
  census->add_option("--format", cfg_.format, "csv or text (stdout only)")
      ->check(CLI::IsMember({"csv", "text"}));
  on(census, &Runner::census);

  auto* asym = app.add_subcommand("asymptotics", "omega(P_n^+) and log P_n^+ against their estimates");
  asym->add_option("--n-list", n_list_, "Values of n")->required()->delimiter(',');
  asym->add_option("--terms", terms_, "Expansion terms to print");
  on(asym, &Runner::asymptotics);

  auto* c1 = app.add_subcommand("conjecture1", "Check P(P_n) > sqrt(n) for 192 < n <= max");
  c1->add_option("--max", max_, "Largest n")->required()->check(CLI::PositiveNumber);
  on(c1, &Runner::conjecture1);

  auto* pe = app.add_subcommand("prime-equality", "Compare P_{q-1}, P_q, P_{q+1} at primes q");
  pe->add_option("--max", max_, "Largest q")->required()->check(CLI::Range(u64{2}, ~u64{0} - 2));
  on(pe, &Runner::prime_equality);

  auto* ad = app.add_subcommand("a-density", "Density of n with s_p(n) = p-1 for some p");
  ad->add_option("--max", max_, "Largest n")->required()->check(CLI::Range(u64{2}, ~u64{0} - 2));
  on(ad, &Runner::a_density_cmd);

  auto* dio = app.add_subcommand("diophantine", "Linear-forms and digit-sum bounds");
  dio->require_subcommand(1);
  auto* st = dio->add_subcommand("stewart", "s_p(n) + s_q(n) against the two-base lower bound");
  st->add_option("--n", n_, "Value n >= 3");
  st->add_option("--p", p_, "First base")->check(CLI::Range(u64{2}, ~u64{0}));
  st->add_option("--q", q_, "Second base")->check(CLI::Range(u64{2}, ~u64{0}));
  st->add_option("--samples", samples_, "Random n <= 10^9 with bases <= 13 instead of --n");
  st->add_option("--seed", seed_, "Random seed for --samples");
  on(st, &Runner::stewart);
  auto* mv = dio->add_subcommand("matveev", "Lower bound for log|prod alpha_i^d_i - 1|");
  mv->add_option("--heights", heights_, "Heights A_i")->required()->delimiter(',');
  mv->add_option("--D", D_, "max |d_i|");
  on(mv, &Runner::matveev);
  auto* ex = dio->add_subcommand("exceptional", "Primes p <= y not dividing P_n");
  ex->add_option("--n", n_, "Value n")->required();
  ex->add_option("--y", y_, "Prime bound")->required();
  on(ex, &Runner::exceptional);

  auto* an = app.add_subcommand("analytic", "Special functions and sieve-sum checks");
  an->require_subcommand(1);
  auto* e1 = an->add_subcommand("e1", "Exponential integral E_1(x)");
  e1->add_option("--x", x_, "Argument x > 0")->required();
  e1->add_option("--terms", terms_, "Asymptotic series terms (0 to skip)");
  on(e1, &Runner::e1);
  auto* dl = an->add_subcommand("delta", "delta_c(x)");
  dl->add_option("--x", x_, "Argument x > e")->required();
  dl->add_option("--c", c_, "Constant c > 0");
  on(dl, &Runner::delta);
  auto* lic = an->add_subcommand("li", "Logarithmic integral from 2");
  lic->add_option("--u", u_, "Upper limit u >= 2")->required();
  on(lic, &Runner::li_cmd);
  auto* rt = an->add_subcommand("recip-tail", "sum_{p > t} (log p)^kappa / (p(p-1)) against F_kappa(t)");
  rt->add_option("--t", t_, "Threshold t >= 2")->required();
  rt->add_option("--kappa", kappa_, "0 or 1");
  on(rt, &Runner::recip_tail);
  auto* fc = an->add_subcommand("fractional-census", "Primes in (2v, 3v) with {n/p} near 1");
  fc->add_option("--n", n_, "Value n")->required();
  fc->add_option("--v", v_, "Scale v with v^(37/20) <= n <= v^2")->required();
  on(fc, &Runner::fractional);
  auto* ls = an->add_subcommand("lemma-sums", "Short-interval prime sum against its bound");
  ls->add_option("--x", x_, "x")->required();
  ls->add_option("--y", y_, "y")->required();
  ls->add_option("--z", z_, "z")->required();
  ls->add_option("--kappa", kappa_, "0 or 1");
  ls->add_option("--epsilon", epsilon_, "epsilon in (0,1)");
  on(ls, &Runner::lemma_sums);
  auto* cs = an->add_subcommand("cor-sums", "Floor-difference sum over sqrt(n)/alpha < p <= n");
  cs->add_option("--n", n_, "Value n")->required();
  cs->add_option("--alpha", alpha_, "alpha in (n^(-7/16), 1)");
  cs->add_option("--kappa", kappa_, "0 or 1");
  on(cs, &Runner::cor_sums);
  auto* sc = an->add_subcommand("s12", "Sawtooth sum S_12 just above sqrt(n)");
  sc->add_option("--n", n_, "Value n")->required();
  sc->add_option("--c", c_, "Constant c > 0");
  on(sc, &Runner::s12);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out_ << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out_ << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::CallForVersion&) {
    out_ << kCodeVersion << '\n';
    return ok;
  } catch (const CLI::ParseError& e) {
    err_ << "error: " << e.what() << "\n\n" << app.help();
    return usage;
  }

  try {
    action();
    return ok;
  } catch (const VerificationError& e) {
    err_ << "verification failed: " << e.what() << '\n';
    return verification_failed;
  } catch (const CheckpointError& e) {
    err_ << "checkpoint error: " << e.what() << '\n';
    return usage;
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << '\n';
    return usage;
  } catch (const DomainError& e) {
    err_ << "error: " << e.what() << '\n';
    return usage;
  } catch (const RangeError& e) {
    err_ << "error: " << e.what() << '\n';
    return resource;
  } catch (const ResourceError& e) {
    err_ << "error: " << e.what() << '\n';
    return resource;
  } catch (const std::bad_alloc&) {
    err_ << "error: out of memory\n";
    return resource;
  } catch (const std::exception& e) {
    err_ << "error: " << e.what() << '\n';
    return resource;
  }
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  return Runner(out, err).run(argc, argv);
}

}  // namespace bpden::cli
