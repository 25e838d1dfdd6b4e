#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tuhyper/io.hpp"

using namespace tuhyper;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;

  [[nodiscard]] Json json() const { return Json::parse(out); }
};

Result call(std::vector<std::string> args) {
  args.insert(args.begin(), "tuhyper");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TUHYPER_DATA_DIR) + "/fixtures/" + name; }

fs::path write_temp(const std::string& name, const std::string& text) {
  const auto p = fs::temp_directory_path() / ("tuhyper_cli_test_" + name);
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST(Cli, CheckFig1FindsTreeHouse) {
  const auto r = call({"check", "fixture:fig1", "--json"});
  EXPECT_EQ(r.code, cli::kViolated);
  const auto j = r.json();
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["tu"], false);
  EXPECT_EQ(j["witness"]["kind"], "OddTreeHouse");
}

TEST(Cli, CheckFromFile) {
  EXPECT_EQ(call({"check", data("c4.json")}).code, cli::kAnswered);
  EXPECT_EQ(call({"check", data("c3.json")}).code, cli::kViolated);
}

TEST(Cli, DeltaFig2) {
  const auto r = call({"delta", "fixture:fig2", "--json"});
  EXPECT_EQ(r.code, cli::kAnswered);
  EXPECT_EQ(r.json()["delta"], 2);
}

TEST(Cli, DisjointCheckNamesEdges) {
  const auto r = call({"check", "fixture:fig2", "--disjoint", "--json"});
  EXPECT_EQ(r.code, cli::kInputError);
  const auto j = r.json();
  EXPECT_EQ(j["error"]["kind"], "NotDisjoint");
  EXPECT_EQ(j["error"]["edges"], Json::array({"e", "f"}));
  EXPECT_EQ(j["exit_code"], cli::kInputError);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, DetectFig2FindsNothing) {
  const auto r = call({"detect", "fixture:fig2", "--json"});
  EXPECT_EQ(r.code, cli::kAnswered);
  EXPECT_TRUE(r.json()["odd_cycle"].is_null());
  EXPECT_TRUE(r.json()["odd_tree_house"].is_null());
}

TEST(Cli, BuildRFig5) {
  const auto r = call({"build-r", "fixture:fig5", "--json"});
  EXPECT_EQ(r.code, cli::kAnswered);
  const auto j = r.json();
  EXPECT_EQ(j["AR_is_unbalanced_hole"], true);
  EXPECT_EQ(j["R_is_tu"], true);
  EXPECT_EQ(std::abs(j["det"].get<std::int64_t>()), 2);
}

TEST(Cli, ExtractAndVerifyRoundTrip) {
  for (const std::vector<std::string>& extra : {std::vector<std::string>{}, {"--largest-core"}}) {
    std::vector<std::string> args{"extract", "fixture:fig1", "--json"};
    args.insert(args.end(), extra.begin(), extra.end());
    const auto r = call(args);
    ASSERT_EQ(r.code, cli::kViolated) << r.err;
    const auto cert = write_temp("fig1_cert.json", r.out);
    const auto v = call({"check", "fixture:fig1", "--verify-cert", cert.string(), "--json"});
    EXPECT_EQ(v.code, cli::kAnswered) << v.out;
    EXPECT_EQ(v.json()["command"], "verify-cert");
    EXPECT_EQ(v.json()["valid"], true);
    const auto wrong = call({"check", "fixture:c3", "--verify-cert", cert.string(), "--json"});
    EXPECT_NE(wrong.code, cli::kAnswered);
  }
}

TEST(Cli, ExtractMixed) {
  const auto r = call({"extract", "fixture:fig5", "--json"});
  EXPECT_EQ(r.code, cli::kViolated) << r.err;
  const auto j = r.json();
  EXPECT_TRUE(j.contains("transcript"));
  EXPECT_TRUE(j.contains("reduced_witness"));
}

TEST(Cli, ExtractTuInput) {
  const auto r = call({"extract", "fixture:c4", "--json"});
  EXPECT_EQ(r.code, cli::kAnswered);
  EXPECT_EQ(r.json()["tu"], true);
}

TEST(Cli, GenRequiresSeed) {
  EXPECT_EQ(call({"gen", "--vertices", "5"}).code, cli::kInputError);
}

TEST(Cli, GenIsDeterministic) {
  const std::vector<std::string> args{"gen", "--seed", "17", "--vertices", "8", "--small-edges", "4",
                                      "--plant", "OddCycle", "--cycle-length", "5", "--json"};
  const auto a = call(args);
  const auto b = call(args);
  ASSERT_EQ(a.code, cli::kAnswered) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.json()["witness"]["kind"], "OddCycle");
  const auto inst = write_temp("gen_instance.json", a.json()["instance"].dump());
  EXPECT_EQ(call({"check", inst.string()}).code, cli::kViolated);
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(call({"check", "fixture:nope"}).code, cli::kInputError);
  const auto bad = write_temp("bad.json", "{not json");
  const auto r = call({"check", bad.string(), "--json"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_EQ(r.json()["error"]["kind"], "InvalidInput");
  EXPECT_EQ(call({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(call({"check", "fixture:c3", "--workers", "0"}).code, cli::kInputError);
}

TEST(Cli, GuardExceededExitCode) {
  std::string edges;
  Json j;
  j["vertices"] = Json::array();
  j["edges"] = Json::array();
  for (int i = 0; i < 14; ++i) j["vertices"].push_back("v" + std::to_string(i));
  for (int i = 0; i < 14; ++i) j["edges"].push_back(Json::array({"v" + std::to_string(i), "v" + std::to_string((i + 1) % 14)}));
  const auto p = write_temp("ring.json", j.dump());
  EXPECT_EQ(call({"delta", p.string()}).code, cli::kLimitExceeded);
}

TEST(Cli, HumanOutputHasHeadline) {
  const auto r = call({"delta", "fixture:fig2"});
  EXPECT_EQ(r.code, cli::kAnswered);
  EXPECT_NE(r.out.find("delta: 2"), std::string::npos) << r.out;
  EXPECT_EQ(r.out.find("\033["), std::string::npos);
}

TEST(Cli, Selftest) {
  const auto r = call({"selftest", "--json"});
  EXPECT_EQ(r.code, cli::kAnswered);
  EXPECT_EQ(r.json()["passed"], true);
}
