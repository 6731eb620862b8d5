#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "permlab/rational.hpp"
#include "permlab/tree_density.hpp"

using namespace permlab;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::filesystem::path temp_dir() {
  auto d = std::filesystem::temp_directory_path() / ("permlab_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()));
  std::filesystem::create_directories(d);
  return d;
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) out.push_back(l);
  return out;
}

}  // namespace

TEST(Cli, SampleSingleton) {
  const auto r = run_cli({"sample", "perm", "--n", "1", "--count", "1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "1\n");
}

TEST(Cli, ExactTable) {
  const auto r = run_cli({"exact", "dist", "--n", "3", "--p", "1/2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 7u);
  EXPECT_EQ(ls[0], "perm,numerator,denominator");
  const auto d = exact_distribution(3, Rational(1, 2));
  for (std::size_t i = 1; i < ls.size(); ++i) {
    const auto c1 = ls[i].find(','), c2 = ls[i].rfind(',');
    const Permutation pi = Permutation::parse(ls[i].substr(0, c1));
    const Rational r(BigInt(ls[i].substr(c1 + 1, c2 - c1 - 1)), BigInt(ls[i].substr(c2 + 1)));
    EXPECT_EQ(r, d.at(pi)) << ls[i];
  }
  const auto o = run_cli({"exact", "oracle", "--n", "3", "--p", "1/2"});
  EXPECT_EQ(o.out, r.out);
}

TEST(Cli, ExactSymbolic) {
  const auto r = run_cli({"exact", "dist", "--n", "2", "--symbolic"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "perm,probability\n12,p\n21,1 - p\n");
}

TEST(Cli, ExactPathsRejectDecimals) {
  const auto r = run_cli({"exact", "dist", "--n", "3", "--p", "0.5"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("rational"), std::string::npos);
}

TEST(Cli, OtherExactCommands) {
  EXPECT_EQ(run_cli({"exact", "consistency", "--n", "4", "--p", "1/3"}).out, "n,max_abs_deviation\n4,0\n");
  EXPECT_EQ(run_cli({"exact", "self-similarity", "--n", "4", "--p", "1/3"}).out, "n,max_abs_deviation\n4,0\n");
  EXPECT_EQ(run_cli({"exact", "descents", "--n", "2", "--p", "1/3"}).out,
            "descents,numerator,denominator\n0,1,3\n1,2,3\n");
  EXPECT_EQ(run_cli({"exact", "ninc", "--n", "2"}).out, "perm,count\n12,1\n21,1\n");
  const auto g = run_cli({"exact", "cograph", "--n", "3", "--p", "1/2", "--route", "formula"});
  EXPECT_EQ(g.code, 0);
  EXPECT_EQ(lines(g.out).size(), 5u);
  EXPECT_EQ(run_cli({"exact", "cograph", "--n", "3", "--p", "1/2"}).out, g.out);
  EXPECT_EQ(run_cli({"exact", "dist", "--n", "9", "--p", "1/2"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"sample"}).code, 2);
  EXPECT_EQ(run_cli({"sample", "perm", "--bogus"}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"sample", "perm", "--n", "abc"}).code, 2);
}

TEST(Cli, ValidationErrors) {
  EXPECT_EQ(run_cli({"sample", "perm", "--p", "1.5"}).code, 1);
  EXPECT_EQ(run_cli({"sample", "perm", "--p", "0"}).code, 1);
  EXPECT_EQ(run_cli({"sample", "perm", "--n", "0"}).code, 1);
  EXPECT_EQ(run_cli({"density", "--p", "0.5", "--x", "1.2"}).code, 1);
  EXPECT_EQ(run_cli({"compare", "brownian", "--eps", "0.7"}).code, 1);
}

TEST(Cli, Help) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("intensity"), std::string::npos);
  const auto s = run_cli({"exact", "consistency", "--help"});
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("Removing a uniform point"), std::string::npos);
}

TEST(Cli, IoFailure) {
  const auto r = run_cli({"sample", "perm", "--out", "/nonexistent_dir/x/y.txt"});
  EXPECT_EQ(r.code, 3);
}

TEST(Cli, SeedsAndDeterminism) {
  const std::vector<std::string> base{"sample", "perm", "--n", "12", "--count", "20", "--p", "0.4"};
  const auto a = run_cli(base);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(run_cli(base).out, a.out);
  auto threaded = base;
  threaded.insert(threaded.end(), {"--threads", "3"});
  EXPECT_EQ(run_cli(threaded).out, a.out);
  auto seeded = base;
  seeded.insert(seeded.end(), {"--seed", "77"});
  const auto b = run_cli(seeded);
  EXPECT_NE(b.out, a.out);

  ::setenv("PERMUTON_LAB_SEED", "77", 1);
  EXPECT_EQ(run_cli(base).out, b.out);
  seeded.back() = "78";
  EXPECT_NE(run_cli(seeded).out, b.out);
  ::setenv("PERMUTON_LAB_SEED", "x7", 1);
  EXPECT_EQ(run_cli(base).code, 1);
  ::unsetenv("PERMUTON_LAB_SEED");
  // global flags before the subcommand
  EXPECT_EQ(run_cli({"--seed", "77", "sample", "perm", "--n", "12", "--count", "20", "--p", "0.4"}).out, b.out);
}

TEST(Cli, OutFileAndManifest) {
  const auto dir = temp_dir();
  const auto out = dir / "grid.csv", man = dir / "run.json";
  const std::vector<std::string> args{"intensity", "empirical", "--n", "30", "--count", "50", "--grid", "6",
                                      "--p", "3/5", "--out", out.string(), "--manifest", man.string()};
  auto r = run_cli(args);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  const std::string first = slurp(out);
  EXPECT_EQ(lines(first).size(), 7u);
  r = run_cli(args);
  EXPECT_EQ(slurp(out), first);
  const auto m = nlohmann::json::parse(slurp(man));
  EXPECT_EQ(m["command"], "intensity empirical");
  EXPECT_EQ(m["seed"], 4002);
  EXPECT_TRUE(m.contains("wall_time_seconds"));
  EXPECT_TRUE(m["versions"].contains("permlab"));
  std::filesystem::remove_all(dir);
}

TEST(Cli, ClosedFormRowSums) {
  const auto r = run_cli({"intensity", "closed-form", "--p", "0.5", "--grid", "20"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 21u);
  for (std::size_t i = 1; i < ls.size(); ++i) {
    double s = 0.0;
    std::istringstream is(ls[i]);
    for (std::string cell; std::getline(is, cell, ',');) s += std::stod(cell);
    EXPECT_NEAR(s, 1.0 / 20, 1e-4) << "row " << i;
  }
}

TEST(Cli, DensityAndDiagnostics) {
  const auto d = run_cli({"density", "--p", "1/2", "--x", "0.25", "--y", "0.5"});
  ASSERT_EQ(d.code, 0) << d.err;
  EXPECT_NE(d.out.find("0.874002871791"), std::string::npos);
  EXPECT_NE(run_cli({"density", "--p", "0.5", "--x", "0.5", "--y", "0.5"}).out.find("divergent"), std::string::npos);
  const auto c = run_cli({"diag", "convergence", "--p", "0.6", "--sizes", "10,100"});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(lines(c.out).size(), 3u);
  const auto ph = run_cli({"diag", "phi", "--k", "3"});
  EXPECT_EQ(lines(ph.out).size(), 5u);
  const auto ps = run_cli({"diag", "psi", "--p", "0.3", "--iterations", "2", "--draws", "1000"});
  EXPECT_EQ(lines(ps.out).size(), 4u);
  const auto ds = run_cli({"diag", "descents", "--p", "0.3", "--n", "500", "--k", "5", "--reps", "100"});
  EXPECT_EQ(lines(ds.out).size(), 2u);
  const auto st = run_cli({"sample", "stream", "--k", "4"});
  EXPECT_EQ(lines(st.out).size(), 5u);
  const auto cg = run_cli({"sample", "cograph", "--n", "2", "--count", "3"});
  EXPECT_EQ(lines(cg.out).size(), 4u);
  const auto br = run_cli({"compare", "brownian", "--n", "200", "--count", "20", "--reps", "50", "--k", "5"});
  ASSERT_EQ(br.code, 0) << br.err;
  EXPECT_EQ(lines(br.out).size(), 9u);
}
