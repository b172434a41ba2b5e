#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "bpden");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = bpden::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream o;
  o << in.rdbuf();
  return o.str();
}

bool has_line(const std::string& text, const std::string& line) {
  return ("\n" + text).find("\n" + line + "\n") != std::string::npos;
}

fs::path scratch(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "bpden_cli_test";
  fs::create_directories(dir);
  const auto p = dir / name;
  fs::remove(p);
  return p;
}

}  // namespace

TEST(Cli, HelpMatchesGolden) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, slurp(BPDEN_GOLDEN_HELP));
  for (const char* sub : {"compute", "verify-bernoulli", "census", "asymptotics", "conjecture1",
                          "prime-equality", "diophantine", "analytic"}) {
    EXPECT_NE(r.out.find(sub), std::string::npos) << sub;
  }
}

TEST(Cli, Compute100) {
  const auto r = run({"compute", "--n", "100"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "minus=[2,3]"));
  EXPECT_TRUE(has_line(r.out, "plus=[13,17]"));
  EXPECT_TRUE(has_line(r.out, "pn=1326"));
  EXPECT_TRUE(has_line(r.out, "qn=33330"));
  EXPECT_TRUE(has_line(r.out, "largest_prime=17"));
}

TEST(Cli, VerifyBernoulli) {
  const auto r = run({"verify-bernoulli", "--max", "60"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "verified=60"));
  EXPECT_EQ(run({"verify-bernoulli", "--max", "5000"}).code, 3);
}

TEST(Cli, UsageErrors) {
  auto r = run({"frobnicate"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("compute"), std::string::npos);  // usage text on stderr
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"compute"}).code, 2);
  EXPECT_EQ(run({"compute", "--n", "0"}).code, 2);
  EXPECT_EQ(run({"compute", "--n", "12", "--bogus"}).code, 2);
  EXPECT_EQ(run({"census", "--max", "100", "--threads", "0"}).code, 2);
  EXPECT_EQ(run({"census", "--max", "100", "--format", "xml"}).code, 2);
  EXPECT_EQ(run({"analytic", "e1", "--x", "-1"}).code, 2);
  EXPECT_EQ(run({"diophantine"}).code, 2);
}

TEST(Cli, RangeErrors) {
  EXPECT_EQ(run({"--sieve-limit", "10", "compute", "--n", "1000"}).code, 3);
  EXPECT_EQ(run({"--strict", "asymptotics", "--n-list", "100"}).code, 3);
  EXPECT_EQ(run({"--fixtures", "/nonexistent/fixtures", "asymptotics", "--n-list", "100"}).code, 3);
}

TEST(Cli, ThreadsFromEnvironment) {
  ::setenv("BPDEN_THREADS", "nope", 1);
  EXPECT_EQ(run({"census", "--max", "100"}).code, 2);
  ::setenv("BPDEN_THREADS", "3", 1);
  const auto r = run({"census", "--max", "100"});
  ::unsetenv("BPDEN_THREADS");
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "threads=3"));
}

TEST(Cli, CensusCsvRoundTrip) {
  const auto r = run({"census", "--max", "500", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, bpden::kCensusCsvHeader);
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    EXPECT_EQ(bpden::format_row(bpden::parse_row(line)), line);
  }
  EXPECT_EQ(n, 500u);
}

TEST(Cli, CensusFileIsDeterministic) {
  const auto a = scratch("a.csv"), b = scratch("b.csv"), cp = scratch("b.ckpt");
  ASSERT_EQ(run({"census", "--max", "20000", "--out", a.string(), "--threads", "1"}).code, 0);
  ASSERT_EQ(run({"census", "--max", "20000", "--out", b.string(), "--threads", "4",
                 "--block-size", "999", "--checkpoint", cp.string()})
                .code,
            0);
  EXPECT_EQ(slurp(a), slurp(b));
  // a checkpoint for another range is refused
  EXPECT_EQ(run({"census", "--max", "30000", "--out", b.string(), "--block-size", "999",
                 "--checkpoint", cp.string()})
                .code,
            2);
}

TEST(Cli, CensusSummary) {
  const auto r = run({"census", "--max", "10000"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "count_divides=6903"));
  EXPECT_TRUE(has_line(r.out, "construction_bound_holds=1"));
}

TEST(Cli, AsymptoticsWithFixtures) {
  auto r = run({"--fixtures", BPDEN_FIXTURES_FILE, "asymptotics", "--n-list", "10000,100000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "omega_plus.10000=21"));
  EXPECT_TRUE(has_line(r.out, "check.theorem3.omega_err_max=pass"));

  const auto tight = scratch("tight.txt");
  {
    std::ofstream f(tight);
    f << "bpden-fixtures v1\ntheorem3.omega_err_max = 0\ntheorem35.log_err_max = 1\n";
  }
  r = run({"--fixtures", tight.string(), "asymptotics", "--n-list", "10000"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(has_line(r.out, "check.theorem3.omega_err_max=fail"));
}

TEST(Cli, Reports) {
  auto r = run({"conjecture1", "--max", "2000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "violations=[]"));
  r = run({"prime-equality", "--max", "2000"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "witness_violations=[]"));
  r = run({"a-density", "--max", "1000"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST(Cli, DiophantineAndAnalytic) {
  auto r = run({"diophantine", "matveev", "--heights", "1", "--D", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "bound=-1134000"));
  r = run({"diophantine", "stewart", "--samples", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "sample.2.valid=0"));
  r = run({"diophantine", "exceptional", "--n", "1", "--y", "10"});
  EXPECT_TRUE(has_line(r.out, "exceptional=[2,3,5,7]"));
  r = run({"analytic", "e1", "--x", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "method=series"));
  r = run({"analytic", "fractional-census", "--n", "7777", "--v", "100"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "chain_failures=0"));
  r = run({"analytic", "lemma-sums", "--x", "50000", "--y", "300", "--z", "1000", "--kappa",
           "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(has_line(r.out, "holds=1"));
  EXPECT_EQ(run({"analytic", "s12", "--n", "1000000"}).code, 0);
  EXPECT_EQ(run({"analytic", "cor-sums", "--n", "100000"}).code, 0);
  EXPECT_EQ(run({"analytic", "delta", "--x", "1e6"}).code, 0);
  EXPECT_EQ(run({"analytic", "li", "--u", "1e6"}).code, 0);
}
