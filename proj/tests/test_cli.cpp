#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bellmoment/cli.hpp"
#include "bellmoment/json_io.hpp"
#include "support.hpp"

using namespace bellmoment;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliFiles : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("bellmoment_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    auto p = (dir_ / name).string();
    std::ofstream(p) << text;
    return p;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST(Cli, BellLatexLine) {
  auto r = call({"bell", "3", "--format", "latex"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "B_{3}(x_{1},x_{2},x_{3})={}&x_{1}^{3}+3x_{1}x_{2}+x_{3}\n");
}

TEST(Cli, BellZeroLatex) {
  EXPECT_EQ(call({"bell", "0", "--format", "latex"}).out, "B_{0}={}&1\n");
}

TEST(Cli, MultivariateBellText) {
  auto r = call({"mbell", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "x_{0,1}*x_{1,0} + x_{1,1}\n");
}

TEST(Cli, CrossRouteChecks) {
  auto r = call({"mbell", "2,1", "--check-gf", "--check-addition"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("check gf: ok"), std::string::npos);
  EXPECT_NE(r.out.find("check addition: ok"), std::string::npos);
  EXPECT_EQ(call({"mbell", "4", "--check-aczel"}).code, 0);
  EXPECT_EQ(call({"mbell", "1,1", "--check-aczel"}).code, 2);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(call({}).code, 2);
  EXPECT_EQ(call({"frobnicate"}).code, 2);
  EXPECT_EQ(call({"bell"}).code, 2);
  EXPECT_EQ(call({"bell", "x"}).code, 2);
  EXPECT_EQ(call({"mbell", "1,,1"}).code, 2);
  EXPECT_EQ(call({"bell", "2", "--format", "yaml"}).code, 2);
  EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, OutputIsDeterministic) {
  auto a = call({"mbell", "2,2", "--format", "json"});
  auto b = call({"mbell", "2,2", "--format", "json"});
  EXPECT_EQ(a.out, b.out);
}

TEST_F(CliFiles, ConstructThenVerify) {
  auto spec = write("spec.json", json::encode(testsupport::random_spec(5)).dump());
  auto r = call({"construct", spec, "--tabulate", "2", "--out", path("t.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto v = call({"verify", path("t.json")});
  EXPECT_EQ(v.code, 0) << v.out;
  EXPECT_NE(v.out.find("status: pass"), std::string::npos);
  auto again = call({"verify", path("t.json"), "--format", "json"});
  EXPECT_EQ(json::parse(again.out)["status"], "pass");
}

TEST_F(CliFiles, ReconstructRoundTrip) {
  auto spec = testsupport::random_spec(7);
  auto p = write("spec.json", json::encode(spec).dump());
  ASSERT_EQ(call({"construct", p, "--tabulate", "2", "--out", path("t.json")}).code, 0);
  auto r = call({"reconstruct", path("t.json"), "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::decode_spec(json::parse(r.out)), spec);
}

TEST_F(CliFiles, ZeroTables) {
  TabulatedSequence seq;
  seq.rank = 1;
  seq.order = 2;
  for (std::uint32_t n = 0; n <= 2; ++n) seq.members.emplace(MultiIndex{n}, TabulatedFn(1, 2));
  auto p = write("zero_tables.json", json::encode(seq).dump());
  auto r = call({"verify", p, "--format", "json"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["status"], "zero");
}

TEST_F(CliFiles, FailuresAndNonSequences) {
  TabulatedSequence seq;
  seq.rank = 1;
  seq.order = 1;
  seq.members.emplace(MultiIndex{0}, TabulatedFn::tabulate(1, 2, [](const auto&) { return Scalar(1); }));
  seq.members.emplace(MultiIndex{1}, TabulatedFn::tabulate(1, 2, [](const auto& x) {
                        return Scalar(x[0] * x[0]);
                      }));
  auto p = write("sq.json", json::encode(seq).dump());
  EXPECT_EQ(call({"verify", p}).code, 1);
  auto r = call({"reconstruct", p});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("not a moment sequence at alpha=(1)"), std::string::npos) << r.out;
}

TEST_F(CliFiles, MalformedJson) {
  auto p = write("bad.json", "{\"r\": 1,");
  auto r = call({"verify", p});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("byte"), std::string::npos) << r.err;
  EXPECT_EQ(call({"verify", path("missing.json")}).code, 2);
}

TEST_F(CliFiles, TransformsProduceVerifiableTables) {
  std::mt19937_64 rng(3);
  auto p = write("spec.json", json::encode(testsupport::random_spec(rng, 2, 2, 1)).dump());
  ASSERT_EQ(call({"collapse", p, "--tabulate", "2", "--out", path("c.json")}).code, 0);
  EXPECT_EQ(call({"verify", path("c.json"), "--l", "3"}).code, 0);
  ASSERT_EQ(call({"project", p, "--keep", "2", "--tabulate", "2", "--out", path("p.json")}).code, 0);
  EXPECT_EQ(call({"verify", path("p.json")}).code, 0);
  ASSERT_EQ(call({"normalize", p, "--tabulate", "2", "--out", path("n.json")}).code, 0);
  EXPECT_EQ(call({"verify", path("n.json")}).code, 0);
  EXPECT_EQ(call({"project", p, "--keep", "3"}).code, 2);
}

TEST_F(CliFiles, SampledVerifyHonoursBudgetAndSeed) {
  std::mt19937_64 rng(9);
  auto p = write("spec.json", json::encode(testsupport::random_spec(rng, 1, 2, 1)).dump());
  ASSERT_EQ(call({"construct", p, "--tabulate", "4", "--out", path("t.json")}).code, 0);
  auto a = call({"verify", path("t.json"), "--l", "6", "--budget", "50", "--seed", "3", "--format", "json"});
  auto b = call({"verify", path("t.json"), "--l", "6", "--budget", "50", "--seed", "3", "--format", "json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  auto j = json::parse(a.out);
  EXPECT_FALSE(j["exhaustive"].get<bool>());
  EXPECT_EQ(call({"verify", path("t.json"), "--budget", "0"}).code, 2);
}
