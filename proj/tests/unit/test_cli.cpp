#include <gtest/gtest.h>

#include <sstream>

#include "apolar_cli/cli.hpp"
#include "apolar_cli/report.hpp"

namespace apolar::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, AnalyzeCompleteIntersection) {
  const Result r = invoke({"analyze", "--dual", "X1*X2*X3*X4^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "(1,4,7,7,4,1)"));
  EXPECT_TRUE(contains(r.out, "(6,4,4,4,2,2,2)"));
  EXPECT_TRUE(contains(r.out, "total: 1 4 6 4 1"));
  EXPECT_TRUE(r.err.empty());
}

TEST(Cli, AnalyzeIdealWithForm) {
  const Result r = invoke({"analyze", "--ideal", "x1^2,x2^2,x3*x4,x3^3-x4^3", "--socle", "5",
                           "--ell", "1,1,1,1", "--format", "json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = Json::parse(r.out);
  EXPECT_EQ(j["jordan"]["type"], Json::parse("[6,4,4,4,2,2,2]"));
  EXPECT_EQ(j["jordan"]["source"], "ell");
  EXPECT_EQ(j["hvector"], Json::parse("[1,4,7,7,4,1]"));
}

TEST(Cli, ClassifyCompleteIntersections) {
  const Result r = invoke({"classify", "ci", "--n", "4", "--socle", "5"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(contains(r.out, "(2,2,2,3)"));
  EXPECT_TRUE(contains(r.out, "(1,4,7,7,4,1)"));
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(invoke({"classify", "k4", "--bound", "10"}).code, 0);
  EXPECT_EQ(invoke({"classify", "equigenerated"}).code, 0);
  EXPECT_EQ(invoke({"classify", "tables", "--format", "json"}).code, 0);
  EXPECT_EQ(invoke({"dual", "--ideal", "x1^2,x2^2,x3^2", "--socle", "3"}).code, 0);
  EXPECT_EQ(invoke({"jordan", "--dual", "X1*X2*X3"}).code, 0);
  const Result b = invoke({"bounds", "1,2,5"});
  EXPECT_EQ(b.code, 0);
  EXPECT_TRUE(contains(b.out, "O-sequence: no"));
  EXPECT_TRUE(contains(invoke({"bounds", "1,4,7,7,4,1"}).out, "O-sequence: yes"));
}

TEST(Cli, DeterministicGivenSeed) {
  const std::vector<std::string> args{"analyze", "--dual", "X1^3*X2*X3 + X2^2*X3*X4^2 - 2*X1*X4^4",
                                      "--seed",  "7",      "--format",
                                      "json"};
  const Result a = invoke(args);
  const Result b = invoke(args);
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Result text1 = invoke({"analyze", "--dual", "X1^5+X2^5+X3^5", "--seed", "3"});
  const Result text2 = invoke({"analyze", "--dual", "X1^5+X2^5+X3^5", "--seed", "3"});
  EXPECT_EQ(text1.out, text2.out);
}

TEST(Cli, JsonRoundTrip) {
  for (const char* dual : {"X1*X2*X3*X4^2", "X1^5", "X1^4*X3 + 4*X1^3*X2*X4", "X1*X2*X3"}) {
    const Result r = invoke({"analyze", "--dual", dual, "--format", "json"});
    ASSERT_EQ(r.code, 0) << r.err;
    const Json j = Json::parse(r.out);
    const AnalysisReport report = analysis_from_json(j);
    EXPECT_EQ(to_json(report).dump(2) + "\n", r.out) << dual;
    EXPECT_EQ(report.jordan_type.sum(), report.hvector.total());
    EXPECT_TRUE(report.betti_matches_hvector);
  }
}

TEST(Cli, InputErrorsExitWithTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--dual", "X1*"},
           {"analyze", "--dual", "X1 + X2^2"},
           {"analyze", "--ideal", "x1^2,x2^2", "--socle", "3", "--n", "3"},
           {"analyze", "--ideal", "x1^2"},
           {"analyze"},
           {"analyze", "--dual", "X1*X2", "--ell", "1,1,1"},
           {"bogus"},
           {"classify", "k4", "--bound", "5"},
           {"classify", "k4", "--disable", "nope"},
           {"bounds"},
       }) {
    const Result r = invoke(args);
    EXPECT_EQ(r.code, 2) << args[0];
    EXPECT_FALSE(r.err.empty());
    EXPECT_TRUE(r.out.empty());
  }
  const Result g = invoke({"analyze", "--ideal", "x1^2,x2^2", "--socle", "3", "--n", "3"});
  EXPECT_TRUE(contains(g.err, "not Gorenstein"));
}

TEST(Cli, HelpExitsWithZero) {
  EXPECT_EQ(invoke({"--help"}).code, 0);
  EXPECT_EQ(invoke({"classify", "--help"}).code, 0);
}

}  // namespace
}  // namespace apolar::cli
