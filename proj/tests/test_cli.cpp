#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "tml");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = tml::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, CheckExitCodes) {
  auto r = run({"check", "--model", "ex_2to11", "--formula", "[2]p & ~[][]p", "--world", "s"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "s: true\n");
  r = run({"check", "--model", "ex_sim", "--formula", "[]p"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("t_pos: true"), std::string::npos);
  r = run({"check", "--model", "ex_det:1:1", "--formula", "~[2]~p & ~[2]p"});
  EXPECT_EQ(r.code, 0);
  r = run({"check", "--model", "ex_11to2", "--formula", "[2]p"});
  EXPECT_EQ(r.code, 2);
  r = run({"check", "--model", "ex_sim", "--formula", "[3]p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("out of scope"), std::string::npos);
  r = run({"check", "--model", "/nonexistent/model.json", "--formula", "p"});
  EXPECT_EQ(r.code, 1);
  r = run({"check", "--model", "ex_sim", "--formula", "q"});
  EXPECT_EQ(r.code, 1);
  r = run({"check", "--model", "ex_sim", "--formula", "p", "--world", "nowhere"});
  EXPECT_EQ(r.code, 1);
}

TEST(Cli, CheckExplain) {
  auto r = run({"check", "--model", "ex_fix", "--formula", "[2]p", "--world", "s", "--explain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("sum h+ = w^2, rank+ = 2"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("at t:"), std::string::npos);
}

TEST(Cli, ModelFile) {
  const auto path = std::filesystem::temp_directory_path() / "tml_cli_model.json";
  {
    std::ofstream f(path);
    f << tml::dump_model(tml::catalog::ex_fix());
  }
  auto r = run({"check", "--model", path.string(), "--formula", "[2]p & [][]p", "--world", "s"});
  EXPECT_EQ(r.code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, Parse) {
  auto r = run({"parse", "--formula", "[2] p | q"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "~(~[2]p & ~q)\ndegree: 2\nsize: 7\n");
  r = run({"parse", "--formula", "[3]p"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Box^n for n≥3 out of scope"), std::string::npos);
}

TEST(Cli, ExamplesAndUnravel) {
  auto r = run({"examples"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("ex_2to11"), std::string::npos);
  r = run({"examples", "ex_fix"});
  EXPECT_EQ(r.code, 0);
  const tml::KripkeModel fix = tml::load_model(r.out);
  EXPECT_TRUE(tml::eval(fix, fix.designated(), tml::parse_formula("[2]p")));
  r = run({"examples", "ex_det:0:2", "--extended"});
  EXPECT_EQ(tml::load_model(r.out).world_count(), 7u);
  r = run({"examples", "nothing"});
  EXPECT_EQ(r.code, 1);
  r = run({"unravel", "--model", "ex_fin", "--depth", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(tml::load_model(r.out).world_count(), 4u);
}

TEST(Cli, CompressAndEquiv) {
  auto r = run({"compress", "--model", "ex_fix", "--depth", "2", "--explain"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("step 1"), std::string::npos);
  const tml::KripkeModel small = tml::load_model(r.out);
  EXPECT_TRUE(tml::eval(small, small.designated(), tml::parse_formula("[2]p & [][]p")));
  r = run({"compress", "--model", "ex_fix", "--depth", "2", "--index", "3"});
  EXPECT_EQ(r.code, 1);

  r = run({"equiv", "--model", "ex_2to11", "--model", "ex_11to2", "--depth", "2", "--bound", "6"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("NOT_EQUIV witness: [2]p"), std::string::npos);
  r = run({"equiv", "--model", "ex_sim", "--model", "ex_sim", "--depth", "1", "--bound", "5"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("EQUIV_UP_TO_BOUND"), std::string::npos);
}

TEST(Cli, Selftest) {
  auto r = run({"selftest", "ordinal", "--count", "100", "--seed", "4"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("level-0 oracle: 4000/4000 agree"), std::string::npos) << r.out;
  EXPECT_EQ(run({"selftest", "ordinal", "--count", "100", "--seed", "4"}).out, r.out);
  r = run({"selftest", "laws", "--count", "50"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(run({"selftest", "bogus"}).code, 1);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"check", "--formula", "p"}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}
