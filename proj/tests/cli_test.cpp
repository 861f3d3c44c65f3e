#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "cyclepack/edge_list.hpp"

namespace cyclepack {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclepack");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("cyclepack_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run({"verify-lemma", "--lemma", "nope"}).code, cli::kUsage);
  EXPECT_EQ(run({"solve", "--r", "1"}).code, cli::kUsage);
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(CliTest, VerifyLemma) {
  const Result r = run({"verify-lemma", "--lemma", "c3pair", "--exhaustive"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "c3pair: 7/7 configurations witnessed\n");
}

TEST(CliTest, GenEmptyGraph) {
  const Result r = run({"gen", "--kind", "random", "--n", "5", "--p", "0", "--seed", "1"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "5 0\n");
}

TEST(CliTest, GenConditionedIsParseable) {
  const Result r = run({"gen", "--kind", "conditioned", "--n", "10", "--p", "0.6", "--seed", "3",
                        "--r", "2", "--s", "1"});
  ASSERT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(sigma2(parse_edge_list(r.out)).at_least(12));
}

TEST(CliTest, SolveCompleteGraph) {
  const std::string path = write_temp("k7.txt", emit_edge_list(Graph::complete(7)));
  const Result r = run({"solve", "--input", path, "--r", "1", "--s", "1", "--trace"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["triangles"].size(), 1u);
  EXPECT_EQ(j["quadrilaterals"].size(), 1u);
  EXPECT_EQ(j["conditions"]["sigma2"], "infinite");
  EXPECT_TRUE(j.contains("lemma_calls"));
}

TEST(CliTest, SolveCycleReportsError) {
  const std::string path = write_temp("c7.txt", emit_edge_list(Graph::cycle(7)));
  const Result r = run({"solve", "--input", path, "--r", "1", "--s", "1"});
  EXPECT_EQ(r.code, cli::kHypothesisViolation);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "error");
  EXPECT_EQ(j["conditions"]["sigma_ok"], false);
}

TEST(CliTest, CheckAndOracle) {
  const std::string path = write_temp("k34.txt", emit_edge_list(Graph::complete_bipartite(3, 4)));
  const Result check = run({"check", "--input", path, "--r", "1", "--s", "1"});
  ASSERT_EQ(check.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(check.out)["order_ok"], true);

  const Result oracle = run({"oracle", "--input", path, "--r", "1", "--s", "1"});
  ASSERT_EQ(oracle.code, cli::kOk);
  EXPECT_EQ(nlohmann::json::parse(oracle.out)["found"], false);
  EXPECT_EQ(run({"oracle", "--input", path, "--r", "2", "--s", "1"}).code,
            cli::kHypothesisViolation);
}

TEST(CliTest, IoErrors) {
  EXPECT_EQ(run({"check", "--input", "/nonexistent.txt", "--r", "1", "--s", "1"}).code,
            cli::kIoError);
  const std::string bad = write_temp("bad.txt", "3 1\n0 0\n");
  const Result r = run({"check", "--input", bad, "--r", "1", "--s", "0"});
  EXPECT_EQ(r.code, cli::kIoError);
  EXPECT_NE(r.err.find("line 2"), std::string::npos);
}

TEST(CliTest, VerifyTheoremSmall) {
  const Result r = run({"verify-theorem", "--n", "4", "--r", "0", "--s", "1", "--workers", "2"});
  EXPECT_EQ(r.code, cli::kOk) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["graphs"], 64);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(run({"verify-theorem", "--n", "9", "--r", "3", "--s", "0"}).code, cli::kUsage);
}

}  // namespace
}  // namespace cyclepack
