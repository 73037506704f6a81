#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "json.hpp"
#include "pmax/blackburn.hpp"
#include "pmax/group_io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(PMAX_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  EXPECT_NE(pipe, nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("pmax_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, BuildThenAnalyze) {
  ASSERT_EQ(run("build --p 5 --n 7 -o " + path("g57.grp")).status, 0);
  auto r = run("analyze " + path("g57.grp"));
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["l"], 4);
  EXPECT_EQ(j["metabelian"], true);
  EXPECT_EQ(j["class"], 6);
  EXPECT_EQ(j["tool"], "pmax");
  EXPECT_EQ(j["input"]["digest"].get<std::string>().size(), 16u);
}

TEST_F(Cli, BuildToStandardOutput) {
  auto r = run("build --p 3 --n 5");
  ASSERT_EQ(r.status, 0);
  EXPECT_EQ(pmax::parse_group_file(r.out), pmax::blackburn_presentation(3, 5));
  auto m = run("build --p 3 --n 5 --model ring");
  ASSERT_EQ(m.status, 0);
  EXPECT_EQ(pmax::parse_group_file(m.out).n(), 4);
}

TEST_F(Cli, VerifyMain2) {
  run("build --p 5 --n 7 -o " + path("g57.grp"));
  auto r = run("verify main2 " + path("g57.grp"));
  ASSERT_EQ(r.status, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["achieved_exponent"], 6);
  EXPECT_EQ(j["required_exponent"], 4);
  EXPECT_EQ(j["outcome"], "pass");
  EXPECT_TRUE(j.contains("seed"));
  EXPECT_TRUE(j.contains("budgets"));
  EXPECT_EQ(j["version"], "1.0.0");
}

TEST_F(Cli, Main1RefusesSmallN) {
  run("build --p 5 --n 6 -o " + path("g56.grp"));
  auto r = run("verify main1 " + path("g56.grp"));
  EXPECT_EQ(r.status, 3);
  EXPECT_EQ(json::parse(r.out)["outcome"], "refused");
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(run("").status, 1);
  EXPECT_EQ(run("frobnicate").status, 1);
  EXPECT_EQ(run("build --p 5").status, 1);
  EXPECT_EQ(run("build --p 5 --n 7 --bogus").status, 1);
  EXPECT_EQ(run("verify main3 x.grp").status, 1);
  EXPECT_EQ(run("export --model pc --p 5 --n 7").status, 1);
}

TEST_F(Cli, BadInputs) {
  pmax::PcPresentation bad = pmax::blackburn_presentation(5, 7);
  bad.set_commutator_tail(2, 0, pmax::Element::generator(7, 4));
  pmax::write_group_file(path("bad.grp"), bad);
  auto r = run("analyze " + path("bad.grp"));
  EXPECT_EQ(r.status, 4);
  EXPECT_EQ(json::parse(r.out)["error"], "inconsistent presentation");
  std::ofstream(path("junk.grp")) << "{ nope";
  EXPECT_EQ(run("verify main1 " + path("junk.grp")).status, 4);
  EXPECT_EQ(run("analyze " + path("missing.grp")).status, 4);
}

TEST_F(Cli, NotMaximalClassIsRefused) {
  pmax::PcPresentation pres(5, 4);
  pres.set_commutator_tail(1, 0, pmax::Element::generator(4, 2));
  pmax::write_group_file(path("c2.grp"), pres);
  EXPECT_EQ(run("analyze " + path("c2.grp")).status, 3);
}

TEST_F(Cli, ReproducibleOutput) {
  run("build --p 5 --n 7 -o " + path("g57.grp"));
  auto a = run("verify metabelian " + path("g57.grp") + " --seed 7");
  auto b = run("verify metabelian " + path("g57.grp") + " --seed 7");
  EXPECT_EQ(a.status, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run("verify metabelian " + path("g57.grp") + " --seed 7 --timings");
  EXPECT_TRUE(json::parse(c.out).contains("timings_ms"));
  EXPECT_FALSE(json::parse(a.out).contains("timings_ms"));
}

TEST_F(Cli, NonmetabelianBuild) {
  auto b = run("build --p 5 --n 8 --nonmetabelian --seed 1 -o " + path("nm.grp"));
  ASSERT_EQ(b.status, 0);
  EXPECT_EQ(json::parse(b.out)["search"]["found"], true);
  auto a = json::parse(run("analyze " + path("nm.grp")).out);
  EXPECT_EQ(a["metabelian"], false);
  EXPECT_EQ(a["l"], 2);
}

TEST_F(Cli, ExportRing) {
  auto r = run("export --model ring --p 5 --n 7");
  ASSERT_EQ(r.status, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["tables"]["exponent_modulus"], 25);
  EXPECT_EQ(j["tables"]["abelian_invariants"], json::array({2, 2, 1, 1}));
  EXPECT_EQ(j["tables"]["p_times_basis"][0], json::array({0, 0, 0, 0, 4, 2}));
}

TEST_F(Cli, Selftest) {
  auto r = run("selftest");
  EXPECT_EQ(r.status, 0) << r.out;
  EXPECT_EQ(json::parse(r.out)["passed"], true);
}
