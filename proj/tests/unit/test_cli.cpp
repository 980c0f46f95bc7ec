#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

namespace shapebasis::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) result.push_back(line);
  return result;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> result;
  std::stringstream ss(line);
  std::string f;
  while (std::getline(ss, f, ',')) result.push_back(f);
  return result;
}

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("shapebasis_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
            "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  std::filesystem::path dir_;
};

TEST(ShapeTable, DefaultRun) {
  const auto r = call({"shape-table", "--t", "0.25", "--rho0", "9", "--K", "20"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows[0], "theta,sigma,sigma_star,residual,lower_bound,theta_times_sigma");
  // The first angle 2^0 is clamped to pi/6.
  EXPECT_EQ(fields(rows[1])[0], "0.523598775598");
  EXPECT_NE(r.err.find("clamped"), std::string::npos);
  EXPECT_EQ(fields(rows[21])[0], "9.53674316406e-07");
}

TEST(ShapeTable, SingleRowAndInfeasible) {
  const auto one = call({"shape-table", "--K", "0"});
  EXPECT_EQ(one.code, 0);
  EXPECT_EQ(lines(one.out).size(), 2u);
  EXPECT_EQ(call({"shape-table", "--rho0", "1"}).code, 2);
  EXPECT_EQ(call({"shape-table", "--t", "0.5"}).code, 2);
  EXPECT_EQ(call({"shape-table", "--K", "-1"}).code, 2);
}

TEST(Usage, ErrorsExitTwo) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"no-such-command"}).code, 2);
  EXPECT_EQ(call({"shape-table", "--bogus", "1"}).code, 2);
  EXPECT_EQ(call({"shape-table", "--format", "xml"}).code, 2);
  EXPECT_EQ(call({"shape-table", "--t", "abc"}).code, 2);
  EXPECT_EQ(call({"blocks", "--N", "2^k"}).code, 2);
  EXPECT_EQ(call({"blocks", "--N", "0"}).code, 2);
  EXPECT_EQ(call({"blocks", "--samples", "0"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Lemma1, PassesAndIsDeterministic) {
  const std::vector<std::string> args = {"lemma1", "--t", "0.25", "--rho0", "9",
                                         "--trials", "1000", "--seed", "7"};
  const auto a = call(args);
  EXPECT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, "trial,theta,sigma,lhs_ok,rhs_ok\n");
  EXPECT_EQ(call(args).out, a.out);
  EXPECT_EQ(call({"lemma1", "--trials", "0"}).code, 2);
}

TEST(Blocks, MonteCarloRun) {
  const auto r = call({"blocks", "--alpha", "1", "--N", "k^2", "--kmax", "4", "--samples",
                       "100000", "--seed", "3", "--workers", "2"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0], "k,N_k,sigma_k,angle_ok,union_ratio,half_ok,quarter_ok,necessity_ratio");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    ASSERT_EQ(f.size(), 8u);
    EXPECT_EQ(f[3], "true");
    EXPECT_EQ(f[5], "true");
    EXPECT_EQ(f[6], "true");
  }
  EXPECT_EQ(fields(rows[5])[1], "16");
}

TEST(Blocks, ConstantCountRatiosDecrease) {
  const auto r = call({"blocks", "--alpha", "1", "--N", "1", "--kmax", "30", "--geometry-only"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 32u);
  double prev = 1e300;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    EXPECT_EQ(f[4], "");
    const double ratio = std::stod(f[7]);
    EXPECT_LT(ratio, prev);
    prev = ratio;
  }
  EXPECT_LT(prev, 0.05);
}

TEST(Blocks, CubicCountsGeometryOnly) {
  const auto r = call({"blocks", "--alpha", "2", "--N", "k^3", "--kmax", "40", "--geometry-only"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 42u);
  std::vector<double> ratios;
  for (std::size_t i = 1; i < rows.size(); ++i) ratios.push_back(std::stod(fields(rows[i])[7]));
  // Eventually increasing; the first few blocks dip before log^2 sigma is dominated.
  for (std::size_t k = 6; k < ratios.size(); ++k) EXPECT_GT(ratios[k], ratios[k - 1]) << k;
  EXPECT_GT(ratios.back(), 10.0);
}

TEST(Witness, SolverTable) {
  const auto r = call({"witness", "--t", "0.25", "--rho0", "9", "--K", "20"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto rows = lines(r.out);
  ASSERT_EQ(rows.size(), 22u);
  EXPECT_EQ(rows[0], "theta,sigma,far_distance");
  EXPECT_GT(std::stod(fields(rows.back())[2]), 100.0);
}

TEST_F(TempDir, WitnessFromInput) {
  {
    std::ofstream f(path("single.csv"));
    f << "theta,sigma\n0.1,10.79\n";
  }
  EXPECT_EQ(call({"witness", "--input", path("single.csv")}).code, 0);
  {
    std::ofstream f(path("flat.csv"));
    f << "theta,sigma\n0.1,5\n0.05,5\n0.025,5\n";
  }
  EXPECT_EQ(call({"witness", "--input", path("flat.csv")}).code, 1);
  {
    std::ofstream f(path("empty.csv"));
    f << "theta,sigma\n";
  }
  EXPECT_EQ(call({"witness", "--input", path("empty.csv")}).code, 2);
  EXPECT_EQ(call({"witness", "--input", path("missing.csv")}).code, 2);

  // A shape table written by the tool is valid witness input.
  ASSERT_EQ(call({"shape-table", "--K", "12", "--out", path("table.csv")}).code, 0);
  const auto w = call({"witness", "--input", path("table.csv")});
  EXPECT_EQ(w.code, 0) << w.err;
  EXPECT_EQ(lines(w.out).size(), 14u);
}

TEST_F(TempDir, ConfigFileAndOverride) {
  {
    std::ofstream f(path("run.cfg"));
    f << "# shape table\nt = 0.25\nrho0 = 9\nK = 3\n";
  }
  const auto from_file = call({"shape-table", "--config", path("run.cfg")});
  EXPECT_EQ(from_file.code, 0) << from_file.err;
  EXPECT_EQ(lines(from_file.out).size(), 5u);
  const auto overridden = call({"shape-table", "--config", path("run.cfg"), "--K", "5"});
  EXPECT_EQ(lines(overridden.out).size(), 7u);
  const auto explicit_flags = call({"shape-table", "--t", "0.25", "--rho0", "9", "--K", "5"});
  EXPECT_EQ(overridden.out, explicit_flags.out);
  {
    std::ofstream f(path("bad.cfg"));
    f << "nonsense line\n";
  }
  EXPECT_EQ(call({"shape-table", "--config", path("bad.cfg")}).code, 2);
  EXPECT_EQ(call({"shape-table", "--config", path("absent.cfg")}).code, 2);
}

TEST_F(TempDir, OutFileMatchesStdout) {
  const auto direct = call({"shape-table", "--K", "6"});
  ASSERT_EQ(call({"shape-table", "--K", "6", "--out", path("t.csv")}).code, 0);
  std::ifstream in(path("t.csv"), std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), direct.out);
}

TEST(Json, MirrorsCsvRows) {
  const auto csv = call({"shape-table", "--K", "6"});
  const auto js = call({"shape-table", "--K", "6", "--format", "json", "--seed", "5"});
  ASSERT_EQ(js.code, 0);
  const auto doc = nlohmann::json::parse(js.out);
  EXPECT_EQ(doc["meta"]["seed"], 5);
  EXPECT_EQ(doc["meta"]["samples"], 100000);
  EXPECT_TRUE(doc["meta"]["version"].is_string());
  const auto rows = lines(csv.out);
  ASSERT_EQ(doc["rows"].size(), rows.size() - 1);
  const auto header = fields(rows[0]);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto f = fields(rows[i]);
    for (std::size_t c = 0; c < header.size(); ++c) {
      EXPECT_EQ(doc["rows"][i - 1][header[c]].get<double>(), std::stod(f[c]));
    }
  }
}

TEST(Determinism, SeededCommandsAcrossRunsAndWorkers) {
  const std::vector<std::vector<std::string>> commands = {
      {"lemma1", "--trials", "200", "--seed", "11"},
      {"blocks", "--kmax", "4", "--samples", "50000", "--seed", "9"},
  };
  for (const auto& base : commands) {
    for (const char* format : {"csv", "json"}) {
      auto args = base;
      args.insert(args.end(), {"--format", format});
      auto one = args, many = args;
      one.insert(one.end(), {"--workers", "1"});
      many.insert(many.end(), {"--workers", "3"});
      const auto a = call(one), b = call(one), c = call(many);
      EXPECT_EQ(a.code, 0) << a.err;
      EXPECT_EQ(a.out, b.out);
      EXPECT_EQ(a.out, c.out);
    }
  }
}

TEST(Determinism, SeedFromEnvironment) {
  const std::vector<std::string> args = {"blocks", "--kmax", "3", "--samples", "20000"};
  ::setenv("SHAPEBASIS_SEED", "42", 1);
  const auto env = call(args);
  ::unsetenv("SHAPEBASIS_SEED");
  auto flagged = args;
  flagged.insert(flagged.end(), {"--seed", "42"});
  const auto flag = call(flagged);
  EXPECT_EQ(env.out, flag.out);
  EXPECT_NE(env.out, call(args).out);
  ::setenv("SHAPEBASIS_SEED", "oops", 1);
  EXPECT_EQ(call(args).code, 2);
  ::unsetenv("SHAPEBASIS_SEED");
}

}  // namespace
}  // namespace shapebasis::cli
