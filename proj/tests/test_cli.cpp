#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <string>

#include "clmath/spec_json.hpp"

namespace {

struct Run {
  int code = -1;
  std::string out;
};

// Runs the CLI with stderr folded into stdout.
Run run(const std::string& args) {
  const std::string cmd = std::string(CLMATH_CLI) + " " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

const std::string kSpec = std::string("--spec ") + CLMATH_GOLDEN_DIR + "/worked_curve.json";

clmath::Json json_of(const Run& r) { return clmath::Json::parse(r.out); }

TEST(Cli, QuoteWorkedCurve) {
  const auto r = run("quote " + kSpec + " --x 100 --y 100 --dx 100");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_NEAR(j["dy"].get<double>(), -200.0 / 3, 1e-12);
  EXPECT_NEAR(j["effective_price"].get<double>(), -2.0 / 3, 1e-15);
}

TEST(Cli, ZeroTradeOmitsEffectivePrice) {
  const auto r = run("quote " + kSpec + " --x 100 --dx 0");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = json_of(r);
  EXPECT_EQ(j["dy"], 0.0);
  EXPECT_FALSE(j.contains("effective_price"));
}

TEST(Cli, OvershootIsInputError) {
  const auto r = run("quote " + kSpec + " --x 100 --y 100 --dx 201");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r)["error"], "BoundsExceeded");
}

TEST(Cli, DomainErrorsNameTheField) {
  const auto r = run("translate " + kSpec + " --to balancer");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(json_of(r)["field"], "to");
  EXPECT_EQ(run("translate " + kSpec + " --to reference").code, 2);
  EXPECT_EQ(run("quote " + kSpec + " --x 100 --y 120 --dx 1").code, 2);
  EXPECT_EQ(run("sweep " + kSpec + " --points 1").code, 2);
  EXPECT_EQ(run("angle --p-high 1 --p-low 2").code, 2);
  EXPECT_EQ(run("geometry --spec /nonexistent.json").code, 2);
  EXPECT_EQ(run("quote --bogus").code, 2);
}

TEST(Cli, TranslateCarbonToUniswap) {
  const auto r = run("translate --spec " + std::string(CLMATH_GOLDEN_DIR) +
                     "/worked_curve_carbon.json --to uniswap_v3");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto s = json_of(r)["spec"];
  EXPECT_NEAR(s["L"].get<double>(), 200, 1e-10);
  EXPECT_NEAR(s["p_high"].get<double>(), 4, 1e-12);
  EXPECT_NEAR(s["p_low"].get<double>(), 0.25, 1e-12);
}

TEST(Cli, IdentityTranslationKeepsNumbers) {
  const auto r = run("translate " + kSpec + " --to bancor_v2");
  ASSERT_EQ(r.code, 0);
  const auto s = json_of(r)["spec"];
  EXPECT_EQ(s["x0"], 100.0);
  EXPECT_EQ(s["y0"], 100.0);
  EXPECT_EQ(s["A"], 2.0);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* cmd : {"sweep --points 17 --output csv", "geometry", "angle"}) {
    const auto a = run(std::string(cmd) + " " + kSpec);
    const auto b = run(std::string(cmd) + " " + kSpec);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, VerifyExitCodes) {
  EXPECT_EQ(run("verify " + kSpec).code, 0);
  EXPECT_EQ(run("verify --count 50 --seed 3").code, 0);
  // A tolerance no quadrature can meet must report failure, not an input error.
  EXPECT_EQ(run("verify " + kSpec + " --tolerance 1e-300").code, 1);
}

}  // namespace
