#include <gtest/gtest.h>

#include "commands.hpp"

using namespace gfm::cli;

namespace {

CommandResult call(const std::string& verb, const json& payload, std::uint64_t budget = gfm::kDefaultBudget) {
  CommandRequest request;
  request.verb = verb;
  request.payload = payload;
  request.budget = budget;
  return run(request);
}

const json kHarmonic = {{"d", 1}, {"n", 3}, {"lambda", {{"2"}}}};

}  // namespace

TEST(Cli, VerbsAreSortedAndComplete) {
  const auto& names = verbs();
  EXPECT_TRUE(std::is_sorted(names.begin(), names.end()));
  for (const char* v : {"normalize", "orbit", "invariants", "kummer", "conic", "fixed-locus", "free", "iso"})
    EXPECT_NE(std::find(names.begin(), names.end(), v), names.end()) << v;
}

TEST(Cli, InvariantsOfQuarticK3) {
  const auto result = call("invariants", {{"d", 2}, {"k", 4}, {"n", 3}});
  ASSERT_EQ(result.exit_code, kOk);
  const auto& r = result.report["result"];
  EXPECT_EQ(r["label"], "K3");
  EXPECT_EQ(r["r1"], 0);
  EXPECT_EQ(r["kodaira"], "0");
  EXPECT_EQ(r["pa_pg"], 1);
}

TEST(Cli, OrbitOfHarmonicQuadruple) {
  const auto result = call("orbit", kHarmonic);
  ASSERT_EQ(result.exit_code, kOk);
  const auto& r = result.report["result"];
  EXPECT_EQ(r["orbit_size"], 3);
  EXPECT_EQ(r["stabilizer_order"], 8);
  EXPECT_EQ(r["orbit"][0]["lambda"][0][0], "-1");
  EXPECT_TRUE(r["klein_kernel"].get<bool>());
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& [verb, payload] : std::vector<std::pair<std::string, json>>{
           {"orbit", kHarmonic},
           {"kummer", {{"alpha", {0, 1, 2, 3, 4, 5}}}},
           {"fixed-locus", {{"type", {{"d", 2}, {"k", 3}, {"n", 3}}}, {"exponents", {1, 1, 2, 0}}}},
           {"kernel", {{"n", 4}, {"d", 1}, {"samples", 5}}}}) {
    const auto a = render(call(verb, payload).report, false);
    const auto b = render(call(verb, payload).report, false);
    EXPECT_EQ(a, b) << verb;
  }
}

TEST(Cli, ExitCodes) {
  const auto bad_rational = call("orbit", {{"d", 1}, {"n", 3}, {"lambda", {{"1/0"}}}});
  EXPECT_EQ(bad_rational.exit_code, kValidation);
  EXPECT_EQ(bad_rational.report["error"]["kind"], "validation");

  EXPECT_EQ(call("no-such-verb", json::object()).exit_code, kValidation);
  EXPECT_EQ(call("orbit", json::array()).exit_code, kValidation);

  const json big = {{"d", 1}, {"n", 5}, {"lambda", {{"2"}, {"3"}, {"5"}}}};
  const auto budget = call("orbit", big, 10);
  EXPECT_EQ(budget.exit_code, kBudget);
  EXPECT_EQ(budget.report["error"]["kind"], "budget");

  const auto degenerate = call("orbit", {{"d", 1}, {"n", 3}, {"lambda", {{"1"}}}});
  EXPECT_EQ(degenerate.exit_code, kPrecondition);
  EXPECT_EQ(degenerate.report["error"]["kind"], "precondition");
}

TEST(Cli, ClassifyLowN) {
  const auto result = call("classify-low-n", {{"d", 3}, {"n", 3}});
  ASSERT_EQ(result.exit_code, kOk);
  EXPECT_EQ(result.report["result"]["case"], "projective-space");
  EXPECT_EQ(call("classify-low-n", {{"d", 2}, {"n", 3}}).exit_code, kPrecondition);
}

TEST(Cli, ConicCoefficients) {
  const auto result = call("conic", {{"a", "1"}});
  ASSERT_EQ(result.exit_code, kOk);
  EXPECT_EQ(result.report["result"]["coefficients"], json({"4", "1", "1", "4", "4", "-2"}));
}

TEST(Cli, RenderPretty) {
  const json report = {{"verb", "x"}};
  EXPECT_EQ(render(report, false), "{\"verb\":\"x\"}");
  EXPECT_NE(render(report, true).find('\n'), std::string::npos);
}
