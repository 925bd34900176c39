#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>

#include "akns/series/io.hpp"
#include "cli_corpus.hpp"

using namespace akns;
using akns::testing::CliCase;
using akns::testing::run_cli;

namespace {

class CliEnv : public ::testing::Environment {
 public:
  void SetUp() override { unsetenv("AKNS_DEFAULT_K"); }
};

const auto* const kEnv = ::testing::AddGlobalTestEnvironment(new CliEnv);

std::string shell_output(const std::string& cmd, int* status) {
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) throw std::runtime_error("popen failed");
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int rc = pclose(pipe);
  *status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
  return out;
}

}  // namespace

class CliCorpus : public ::testing::TestWithParam<CliCase> {};

TEST_P(CliCorpus, MatchesGoldenAndExitCode) {
  const CliCase& c = GetParam();
  const auto first = akns::testing::run_case(c);
  EXPECT_EQ(first.code, c.exit) << first.err;
  EXPECT_EQ(first.out, akns::testing::golden(c));
  if (!c.stderr_contains.empty()) EXPECT_NE(first.err.find(c.stderr_contains), std::string::npos) << first.err;
  const auto second = akns::testing::run_case(c);
  EXPECT_EQ(second.out, first.out);
  EXPECT_EQ(second.code, first.code);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, CliCorpus, ::testing::ValuesIn(akns::testing::load_cli_cases()),
                         [](const auto& info) { return info.param.name; });

TEST(Cli, RecursionPrintsPaperForm) {
  const auto r = run_cli({"recursion", "--k", "3"}, "");
  ASSERT_EQ(r.code, 0);
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["f"], "-1/2*i*p*q^2 - i*C2*q + 1/2*C1*q^(1) + 1/4*i*q^(2)");
}

TEST(Cli, ExamplePipesIntoPipeline) {
  const auto ex = run_cli({"example", "csc", "--n", "1", "--K", "20"}, "");
  ASSERT_EQ(ex.code, 0);
  const auto r = run_cli({"pipeline", "--m", "2", "--constants", "0,-1/4"}, ex.out);
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(Json::parse(r.out)["finite_gap"].get<bool>());
}

TEST(Cli, SeriesPayloadsRoundTrip) {
  const auto ex = run_cli({"example", "elliptic", "--n", "1", "--K", "10"}, "");
  const Json j = Json::parse(ex.out);
  for (const auto& pole : j["poles"]) {
    const SeriesFile f = series_from_json(pole["p"]);
    EXPECT_EQ(series_to_json(f.series, f.var, f.center), pole["p"]);
  }
}

TEST(Cli, DefaultTruncationFromEnvironment) {
  setenv("AKNS_DEFAULT_K", "12", 1);
  const auto r = run_cli({"example", "csc", "--n", "1"}, "");
  unsetenv("AKNS_DEFAULT_K");
  EXPECT_EQ(Json::parse(r.out)["params"]["K"], 12);
  setenv("AKNS_DEFAULT_K", "twelve", 1);
  EXPECT_EQ(run_cli({"example", "csc", "--n", "1"}, "").code, 2);
  unsetenv("AKNS_DEFAULT_K");
  EXPECT_EQ(Json::parse(run_cli({"example", "csc", "--n", "3"}, "").out)["params"]["K"], 16);
}

TEST(Cli, TimingIsOptIn) {
  EXPECT_FALSE(Json::parse(run_cli({"recursion"}, "").out).contains("timing_ms"));
  EXPECT_TRUE(Json::parse(run_cli({"--timing", "recursion"}, "").out).contains("timing_ms"));
}

TEST(Cli, BinaryPipe) {
  const std::string cli = AKNS_CLI_PATH;
  int status = -1;
  const std::string out = shell_output("env -u AKNS_DEFAULT_K '" + cli + "' example csc --n 1 --K 20 | '" + cli +
                                           "' pipeline --m 2 --constants 0,-1/4",
                                       &status);
  EXPECT_EQ(status, 0);
  EXPECT_TRUE(Json::parse(out)["finite_gap"].get<bool>());
  shell_output("echo '{\"phi\": [\"1\"], \"psi\": [\"2\"]}' | '" + cli + "' pole-check", &status);
  EXPECT_EQ(status, 1);
}
