#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "slalom/cli.hpp"

using namespace slalom;
using nlohmann::json;

namespace {

struct CliResult {
  int code = 0;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  CliResult r;
  r.code = run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::filesystem::path temp_dir() {
  const std::filesystem::path dir(SLALOM_TEST_TMPDIR);
  std::filesystem::create_directories(dir);
  return dir;
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const std::string& value) : name_(name) { ::setenv(name, value.c_str(), 1); }
  ~ScopedEnv() { ::unsetenv(name_); }
  ScopedEnv(const ScopedEnv&) = delete;
  ScopedEnv& operator=(const ScopedEnv&) = delete;

 private:
  const char* name_;
};

}  // namespace

TEST(Cli, LambdaReport) {
  const CliResult r = run({"lambda", "a1^3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["tool"], "slalom");
  EXPECT_EQ(j["command"], "lambda");
  EXPECT_NEAR(j["result"]["lambda"].get<double>(), std::log(4.0), 1e-15);
  EXPECT_TRUE(j["result"]["exceptional_tr"].get<bool>());
  EXPECT_FALSE(j["result"]["exceptional_pb"].get<bool>());
}

TEST(Cli, SyllablesOfSampleWord) {
  const CliResult r = run({"syllables", "a2^-1 a1^2 a2^-3 a1^-1 a2^-1 a1^-1 a2 a1^-1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["result"]["count"], 6);
  EXPECT_EQ(j["result"]["syllables"][3]["kind"], "alternating_run");
  EXPECT_NEAR(j["result"]["lambda"].get<double>(), 5.9506, 5e-5);
}

TEST(Cli, RectangleModule) {
  const CliResult r = run({"rectangle-module", "--M", "1", "--method", "quad"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["result"]["extremal_length"].get<double>(), 1.56340192269611150695, 1e-10);
  const json zero = json::parse(run({"rectangle-module", "--M", "0"}).out);
  EXPECT_TRUE(zero["result"]["conformal_module"].is_null());
}

TEST(Cli, VerifyBounds) {
  const CliResult r = run({"verify-bounds", "--from", "0.5", "--to", "10000", "--samples", "50"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LT(j["result"]["ratio_spread"].get<double>(), 5.0);
}

TEST(Cli, BraidReport) {
  const CliResult r = run({"braid", "s1^4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("a1^2"), std::string::npos);
  const CliResult bad = run({"braid", "s1"});
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(json::parse(bad.err)["error"]["type"], "domain_error");
}

TEST(Cli, RoundtripHasNoFailures) {
  const CliResult r = run({"roundtrip", "--count", "20", "--maxlen", "8"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["result"]["failures"], 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"--bogus"}).code, 2);
  EXPECT_EQ(run({"lambda"}).code, 2);
  EXPECT_EQ(run({"lambda", "a1", "--boundary", "xx"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);

  const CliResult parse = run({"lambda", "a1 b"});
  EXPECT_EQ(parse.code, 1);
  EXPECT_TRUE(parse.out.empty());
  const json err = json::parse(parse.err);
  EXPECT_EQ(err["error"]["type"], "parse_error");
  EXPECT_EQ(err["error"]["column"], 4);

  EXPECT_EQ(run({"--c-minus", "5", "--c-plus", "1", "lambda", "a1"}).code, 1);
  EXPECT_EQ(run({"rectangle-module", "--M", "-1"}).code, 1);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"roundtrip", "--count", "10", "--maxlen", "6", "--seed", "7"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> braid{"braid", "s1^2 s2^-2 s1^2"};
  EXPECT_EQ(run(braid).out, run(braid).out);
}

TEST(Cli, ConfigFileAndEnvironment) {
  const std::filesystem::path file = temp_dir() / "slalom.conf";
  {
    std::ofstream out(file);
    out << "# constants\nc_minus = 0.5\nc_plus = 2\n";
  }
  const std::string word = "a2^-1 a1^2 a2^-3";
  const json from_file = json::parse(run({"--config", file.string(), "lambda", word, "--boundary", "pb"}).out);
  EXPECT_EQ(from_file["config"]["c_minus"], 0.5);
  const double lambda = from_file["result"]["lambda"].get<double>();
  EXPECT_NEAR(from_file["result"]["upper"].get<double>(), 2.0 * lambda, 1e-12);

  // Flags override the file.
  const json flagged = json::parse(run({"--config", file.string(), "--c-plus", "3", "lambda", word}).out);
  EXPECT_EQ(flagged["config"]["c_plus"], 3.0);
  EXPECT_EQ(flagged["config"]["c_minus"], 0.5);

  {
    const ScopedEnv env("SLALOM_CONFIG", file.string());
    const json via_env = json::parse(run({"lambda", word}).out);
    EXPECT_EQ(via_env["config"]["c_minus"], 0.5);
  }

  const std::filesystem::path broken = temp_dir() / "broken.conf";
  {
    std::ofstream out(broken);
    out << "unknown_key = 1\n";
  }
  EXPECT_EQ(run({"--config", broken.string(), "lambda", "a1"}).code, 1);
  EXPECT_EQ(run({"--config", (temp_dir() / "missing.conf").string(), "lambda", "a1"}).code, 1);
}

TEST(Cli, WritesSvg) {
  const std::filesystem::path lift_svg = temp_dir() / "lift.svg";
  const std::filesystem::path braid_svg = temp_dir() / "braid.svg";
  std::filesystem::remove(lift_svg);
  std::filesystem::remove(braid_svg);
  ASSERT_EQ(run({"lift", "a1^2 a2^-1", "--svg", lift_svg.string()}).code, 0);
  ASSERT_EQ(run({"braid", "s1^2 s2^2", "--svg", braid_svg.string()}).code, 0);
  for (const auto& path : {lift_svg, braid_svg}) {
    std::ifstream in(path);
    std::stringstream text;
    text << in.rdbuf();
    EXPECT_NE(text.str().find("<svg"), std::string::npos) << path;
    EXPECT_NE(text.str().find("</svg>"), std::string::npos) << path;
  }
}
