#include "latforge/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include <nlohmann/json.hpp>

namespace latforge {
namespace {

namespace fs = std::filesystem;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("latforge_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << text;
    return p.string();
  }

  std::string read(const std::string& name) {
    std::ifstream f(dir_ / name, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  int run(std::vector<std::string> args) {
    args.insert(args.begin(), "latforge");
    out_.str("");
    err_.str("");
    return cli_main(args, out_, err_);
  }

  std::string path(const std::string& name) { return (dir_ / name).string(); }

  fs::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, LllIdentity) {
  const auto in = write("id4.lat", "[[1 0 0 0][0 1 0 0][0 0 1 0][0 0 0 1]]");
  ASSERT_EQ(run({"lll", "--in", in, "--report", path("r.json")}), kExitOk)
      << err_.str();
  const auto report = nlohmann::json::parse(read("r.json"));
  EXPECT_EQ(report["after"]["shortest"], "1");
  EXPECT_EQ(report["is_lll_reduced"], true);
}

TEST_F(CliTest, InfeasibleRadiusIsUsageError) {
  const auto in = write("b.lat", "[[1 0 0][0 2 0][0 0 3]]");
  EXPECT_EQ(run({"hc", "--in", in, "--radius", "1"}), kExitUsage);
  EXPECT_NE(err_.str().find("InfeasibleRadius"), std::string::npos);
}

TEST_F(CliTest, SweepIsByteIdentical) {
  ASSERT_EQ(run({"gen", "--rank", "12", "--seed", "3", "--out", path("k.lat")}),
            kExitOk);
  const std::vector<std::string> args{"sweep", "--in", path("k.lat"),
                                      "--radii", "5,10", "--samples", "3",
                                      "--seed", "7"};
  ASSERT_EQ(run(args), kExitOk) << err_.str();
  const std::string first = out_.str();
  ASSERT_EQ(run(args), kExitOk);
  EXPECT_EQ(out_.str(), first);
  EXPECT_EQ(first.substr(0, first.find('\n')), "radius,min,max,mean,std,range");
}

TEST_F(CliTest, MalformedInputNamesLineAndColumn) {
  const auto in = write("bad.lat", "[[1 0]\n[0 ?]]");
  EXPECT_EQ(run({"lll", "--in", in}), kExitUsage);
  EXPECT_NE(err_.str().find("line 2, column 4"), std::string::npos)
      << err_.str();
}

TEST_F(CliTest, ReportsAreDeterministic) {
  ASSERT_EQ(run({"gen", "--rank", "10", "--kind", "random", "--seed", "4",
                 "--out", path("r.lat")}),
            kExitOk);
  for (const char* name : {"a.json", "b.json"}) {
    ASSERT_EQ(run({"hc", "--in", path("r.lat"), "--radius", "6", "--k", "4",
                   "--p", "3", "--seed", "9", "--report", path(name)}),
              kExitOk)
        << err_.str();
  }
  EXPECT_EQ(read("a.json"), read("b.json"));
  for (const char* name : {"c.json", "d.json"}) {
    ASSERT_EQ(run({"hybrid", "--in", path("r.lat"), "--n-sample", "2",
                   "--seed", "9", "--report", path(name)}),
              kExitOk)
        << err_.str();
  }
  EXPECT_EQ(read("c.json"), read("d.json"));
}

TEST_F(CliTest, HybridStagesFile) {
  ASSERT_EQ(run({"gen", "--rank", "10", "--seed", "5", "--out", path("k.lat")}),
            kExitOk);
  const auto stages = write(
      "s.json",
      R"({"stages": [{"kind": "ldsf", "blocks": 3},
                     {"kind": "sigma", "blocks": 2, "samples": 2, "inner": 1},
                     {"kind": "lll", "alpha": "3/4"}]})");
  ASSERT_EQ(run({"hybrid", "--in", path("k.lat"), "--stages", stages,
                 "--report", path("h.json")}),
            kExitOk)
      << err_.str();
  const auto report = nlohmann::json::parse(read("h.json"));
  EXPECT_EQ(report["stages"].size(), 3u);
  EXPECT_EQ(report["stages"][2]["kind"], "lll");

  const auto bad = write("bad.json", R"({"stages": [{"kind": "bkz"}]})");
  EXPECT_EQ(run({"hybrid", "--in", path("k.lat"), "--stages", bad}),
            kExitUsage);
}

TEST_F(CliTest, OracleAndUsage) {
  const auto in = write("b.lat", "[[2 0][1 2]]");
  ASSERT_EQ(run({"oracle", "--in", in, "--bound", "3"}), kExitOk);
  EXPECT_NE(out_.str().find("lambda1 2"), std::string::npos);
  EXPECT_EQ(run({"lll"}), kExitUsage);
  EXPECT_EQ(run({"frobnicate"}), kExitUsage);
  EXPECT_EQ(run({"lll", "--in", in, "--alpha", "2"}), kExitUsage);
}

TEST_F(CliTest, BinaryExitCodes) {
  const auto bad = write("bad.lat", "[[1 0]\n[0 ?]]");
  const std::string cmd = std::string(LATFORGE_CLI_PATH) + " lll --in " + bad +
                          " 2>" + path("err.txt");
  const int status = std::system(cmd.c_str());
  ASSERT_TRUE(WIFEXITED(status));
  EXPECT_EQ(WEXITSTATUS(status), kExitUsage);
  EXPECT_NE(read("err.txt").find("line 2, column 4"), std::string::npos);
}

}  // namespace
}  // namespace latforge
