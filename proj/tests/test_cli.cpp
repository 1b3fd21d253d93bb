#include <gtest/gtest.h>

#include <sstream>

#include "cli/commands.hpp"

using namespace realcurves;
using namespace realcurves::cli;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "realcurves");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--json");
  CliRun r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(CliAnalyze, Ellipse) {
  const Json j = run_json({"analyze", "x^2 + y^2 - 1 = 0"});
  EXPECT_EQ(j["witt"]["text"], "Z (+) Z/2");
  ASSERT_EQ(j["pic_tors"].size(), 1u);
  EXPECT_EQ(j["pic_tors"][0]["text"], "Z/2");
  EXPECT_EQ(j["curve"]["conic_class"], "ellipse");
  EXPECT_FALSE(j["eta_undetermined"].get<bool>());
}

TEST(CliAnalyze, QuarticWithCertificate) {
  const Json j = run_json({"analyze", "y^2 = (x^2-1)*(x^2-9)"});
  EXPECT_EQ(j["eta"]["eta"], 1);
  EXPECT_EQ(j["eta"]["certificate"]["relation"], "p = p3");
  EXPECT_EQ(j["pic_tors"][0]["text"], "Q/Z (+) Z/2");
}

TEST(CliAnalyze, UndeterminedEmitsBothCandidates) {
  const Json j = run_json({"analyze", "y^2 = x^4 + x + 1"});
  EXPECT_TRUE(j["eta"]["eta"].is_null());
  EXPECT_TRUE(j["eta_undetermined"].get<bool>());
  EXPECT_EQ(j["eta"]["certificate"]["kind"], "NonRationalFactorization");
  ASSERT_EQ(j["pic_tors"].size(), 2u);
  EXPECT_EQ(j["pic_tors"][0]["text"], "(Q/Z)^2");
  EXPECT_EQ(j["pic_tors"][1]["text"], "Q/Z");
}

TEST(CliAnalyze, CoefficientsAndUnits) {
  const Json j = run_json({"analyze", "--coeffs", "9,0,-10,0,1", "--units", "2,3,4"});
  EXPECT_EQ(j["invariants"]["k"], 4);
  ASSERT_EQ(j["units"].size(), 3u);
  EXPECT_EQ(j["units"][0]["candidates"][0]["text"], "(Z/2)^2");
  EXPECT_EQ(j["units"][1]["candidates"][0]["text"], "Z/3");
  EXPECT_EQ(j["units"][2]["candidates"][0]["text"], "Z/4 (+) Z/2");
}

TEST(CliAnalyze, TextReport) {
  const CliRun r = run({"analyze", "x^2 - y^2 - 1 = 0"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("W(X):          Z^2"), std::string::npos);
  EXPECT_NE(r.out.find("eta(X):        1"), std::string::npos);
}

TEST(CliAnalyze, ExitCodes) {
  EXPECT_EQ(run({"analyze", "y^2 = x^"}).code, kExitParse);
  EXPECT_EQ(run({"analyze", "x^3 + y = 0"}).code, kExitParse);
  EXPECT_EQ(run({"analyze"}).code, kExitParse);
  EXPECT_EQ(run({"analyze", "y^2 = 1/2"}).code, kExitHypothesis);
  EXPECT_EQ(run({"analyze", "y^2 = (x-1)^2*(x+1)"}).code, kExitHypothesis);
  EXPECT_EQ(run({"analyze", "x^2 - y^2 = 0"}).code, kExitHypothesis);
  EXPECT_EQ(run({"analyze", "x = 0", "--units", "1"}).code, kExitParse);
  EXPECT_EQ(run({"frobnicate"}).code, kExitParse);
  EXPECT_EQ(run({}).code, kExitParse);
}

TEST(CliSample, CountsAndDeterminism) {
  const CliRun a = run({"sample", "--count", "200", "--seed", "5", "--json"});
  const CliRun b = run({"sample", "--count", "200", "--seed", "5", "--json"});
  ASSERT_EQ(a.code, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  const Json j = Json::parse(a.out);
  EXPECT_EQ(j["known0"].get<long>() + j["known1"].get<long>() + j["undetermined"].get<long>(), 200);
  EXPECT_EQ(j["undetermined"], 0);
  const CliRun c = run({"sample", "--count", "200", "--seed", "6", "--json"});
  EXPECT_NE(a.out, c.out);
}

TEST(CliSample, PrefixStable) {
  // Sample i depends only on (seed, i).
  SampleOptions small;
  small.count = 20;
  small.seed = 9;
  SampleOptions large = small;
  large.count = 50;
  const SampleSummary s = run_sampling(small), l = run_sampling(large);
  for (int i = 0; i < 20; ++i) EXPECT_EQ(s.records[i].params, l.records[i].params);
}

TEST(CliSample, SingleRecord) {
  const Json j = run_json({"sample", "--count", "1", "--seed", "123"});
  EXPECT_EQ(j["known0"].get<long>() + j["known1"].get<long>(), 1);
}

TEST(CliSample, PinnedBoxesAndFlags) {
  const Json j = run_json({"sample", "--count", "100", "--seed", "7", "--pin", "b=0", "--k", "0"});
  EXPECT_EQ(j["known1"], 100);
  const Json generic = run_json({"sample", "--count", "1000", "--seed", "7"});
  EXPECT_LT(generic["known1_frequency"].get<double>(), 0.01);
  EXPECT_EQ(run({"sample", "--count", "10", "--seed", "1", "--k", "3"}).code, kExitParse);
  EXPECT_EQ(run({"sample", "--count", "10", "--seed", "1", "--pin", "c=0"}).code, kExitParse);
  EXPECT_EQ(run({"sample", "--seed", "1"}).code, kExitParse);
}

TEST(CliEc, Operations) {
  EXPECT_EQ(run({"ec", "--curve", "v^3 + 3v^2 - 4v", "multiple", "2", "(-4,0)"}).out, "Infinity\n");
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "add", "(-2,3)", "(-2,-3)"}).out, "Infinity\n");
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "add", "(-2,3)", "(-1,4)"}).out, "(4, -9)\n");
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "double", "inf"}).out, "Infinity\n");
  EXPECT_EQ(run({"ec", "--curve", "0,0,-2", "torsion", "(3,5)"}).out, "NotTorsionWithin(12)\n");
  EXPECT_EQ(run({"ec", "--curve", "0,0,1", "torsion", "(2,3)"}).out, "order 6\n");
  const Json j = run_json({"ec", "--curve", "0,0,1", "torsion", "(2,3)"});
  EXPECT_EQ(j["torsion"]["order"], 6);
}

TEST(CliEc, ExitCodes) {
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "add", "(1,1)", "inf"}).code, kExitHypothesis);
  EXPECT_EQ(run({"ec", "--curve", "0,0,0", "double", "inf"}).code, kExitHypothesis);
  EXPECT_EQ(run({"ec", "--curve", "0,0", "double", "inf"}).code, kExitParse);
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "triple", "inf"}).code, kExitParse);
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "add", "(1,1"}).code, kExitParse);
  EXPECT_EQ(run({"ec", "--curve", "0,0,17", "multiple", "x", "inf"}).code, kExitParse);
}
