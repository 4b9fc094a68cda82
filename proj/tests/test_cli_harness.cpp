#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "residua/group_io.hpp"

namespace {

struct Outcome {
  int code = 0;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "residua");
  std::ostringstream out, err;
  const int code = residua::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string corpus(const std::string& name) { return std::string(RESIDUA_TEST_DATA) + "/corpus/" + name + ".grp"; }

residua::Json parse(const Outcome& o) { return residua::Json::parse(o.out); }

}  // namespace

TEST(Cli, ResidualAndRadical) {
  auto r = run({"residual", "soluble", corpus("S5")});
  ASSERT_EQ(r.code, residua::cli::ok) << r.err;
  EXPECT_EQ(parse(r)["residual"]["order"], "60");
  auto p = run({"residual", "--poly", "nilpotent", corpus("S5wrC2")});
  ASSERT_EQ(p.code, residua::cli::ok) << p.err;
  EXPECT_EQ(parse(p)["residual"]["order"], "3600");
  auto q = run({"radical", "nilpotent", corpus("S4")});
  ASSERT_EQ(q.code, residua::cli::ok) << q.err;
  EXPECT_EQ(parse(q)["radical"]["order"], "4");
}

TEST(Cli, Classify) {
  auto r = run({"classify", corpus("A5xC6"), "--class", "soluble", "--class", "poly:d0xS:A5"});
  ASSERT_EQ(r.code, residua::cli::ok) << r.err;
  auto j = parse(r);
  EXPECT_EQ(j["order"], "360");
  EXPECT_FALSE(j["membership"]["soluble"].get<bool>());
  EXPECT_TRUE(j["membership"]["poly:d0xS:A5"].get<bool>());
}

TEST(Cli, ConstantsNilpotent) {
  auto r = run({"constants", "poly:nilpotent"});
  ASSERT_EQ(r.code, residua::cli::ok) << r.err;
  EXPECT_NE(r.out.find("24^(1/3)"), std::string::npos);
  EXPECT_NE(r.out.find("0.700265861"), std::string::npos);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run({"constants", "nilpotent"}).code, residua::cli::input_error);
  EXPECT_EQ(run({"constants", "poly:bogus"}).code, residua::cli::input_error);
  EXPECT_EQ(run({"residual", "soluble", corpus("missing")}).code, residua::cli::input_error);
  EXPECT_EQ(run({"residual", "soluble"}).code, residua::cli::input_error);
  EXPECT_EQ(run({}).code, residua::cli::input_error);
  EXPECT_EQ(run({"frobnicate"}).code, residua::cli::input_error);
}

TEST(Cli, ScaleErrors) {
  EXPECT_EQ(run({"--degree-cap", "5", "residual", "soluble", corpus("S5wrC2")}).code, residua::cli::scale_error);
  EXPECT_EQ(run({"--element-cap", "1000", "residual", "d0xS:A5", corpus("S5wrC2")}).code,
            residua::cli::scale_error);
}

TEST(Cli, VerifyFailureOnInconclusive) {
  // A too small element cap leaves the radical test undecided for the wreath product.
  auto r = run({"--element-cap", "1000", "verify", "poly:d0xS:A5", corpus("S5wrC2")});
  EXPECT_EQ(r.code, residua::cli::verification_failure) << r.err;
}

TEST(Cli, OutWritesManifest) {
  const auto dir = std::filesystem::temp_directory_path() / "residua_cli_test";
  std::filesystem::create_directories(dir);
  const std::string out = (dir / "radical.json").string();
  auto r = run({"radical", "--out", out, "soluble", corpus("S4")});
  ASSERT_EQ(r.code, residua::cli::ok) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream report(out), manifest(out + ".manifest.json");
  ASSERT_TRUE(report && manifest);
  auto m = residua::Json::parse(manifest);
  EXPECT_EQ(m["command"], "radical");
  EXPECT_EQ(m["class"], "soluble");
  EXPECT_EQ(m["exit_status"], 0);
  EXPECT_EQ(residua::Json::parse(report)["radical"]["order"], "24");
  std::filesystem::remove_all(dir);
}
