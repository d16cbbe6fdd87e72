#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "newtonpoly/cli.hpp"
#include "newtonpoly/serialize.hpp"

using namespace newtonpoly;

namespace {

struct RunResult {
  int status;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int status = cli::run(args, in, out, err);
  return {status, out.str(), err.str()};
}

Json json_of(const RunResult& r) { return Json::parse(r.out); }

std::filesystem::path temp_file(const std::string& name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST(Cli, NpPrintsPublishedVertices) {
  const RunResult r = run_cli({"np", "--prime", "2", "x^11+2x^4+4x+16"});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json_of(r)["vertices"].dump(), "[[0,0],[7,1],[10,2],[11,4]]");
}

TEST(Cli, VerifyMismatchExitsTwo) {
  const RunResult r = run_cli({"verify", "--prime", "2", "--g", "x^3+4x+16", "--f", "x^3+2x+4", "--n", "1"});
  EXPECT_EQ(r.status, 2);
  EXPECT_EQ(json_of(r)["result"], "Mismatch");
}

TEST(Cli, VerifyMatchExitsZero) {
  const RunResult r = run_cli({"verify", "-p", "2", "--g", "x^3+2x+4", "--f", "x^3+2x+4", "--n", "2"});
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json_of(r)["result"], "Match");
}

TEST(Cli, PaperExamplesPass) {
  const RunResult r = run_cli({"paper-examples"});
  EXPECT_EQ(r.status, 0);
  const Json j = json_of(r);
  EXPECT_TRUE(j["passed"].get<bool>());
  EXPECT_EQ(j["fixtures"].size(), 5u);
  const RunResult text = run_cli({"paper-examples", "--format", "text"});
  EXPECT_NE(text.out.find("PASS composition-first-slope"), std::string::npos);
}

TEST(Cli, PredictReportsCertificates) {
  const RunResult bad = run_cli({"predict", "--prime", "2", "--g", "x^3+2x+8", "--f", "x^3+2x^2+2x+4"});
  EXPECT_EQ(bad.status, 2);
  EXPECT_EQ(json_of(bad)["attempts"][0]["violations"][0]["name"], "ConstantValuationTooLarge");

  const RunResult good = run_cli({"predict", "--prime", "2", "--g", "x^3+2x+4", "--f", "x^3+2x+4", "--n", "2"});
  EXPECT_EQ(good.status, 0) << good.err;
  EXPECT_EQ(json_of(good)["predicted_polygon"]["vertices"].dump(), "[[0,0],[18,1],[27,2]]");

  const RunResult iter = run_cli({"predict", "--prime", "2", "--f", "x^11+2x^4+4x+16", "--n", "2"});
  EXPECT_EQ(iter.status, 2);
  EXPECT_EQ(json_of(iter)["certificate"]["theorem"], "Iterate");

  const RunResult neg = run_cli({"predict", "-p", "2", "--g", "x^3+4x+16", "--f", "x^4+2x^3+4x^2+8x+8"});
  EXPECT_EQ(neg.status, 0);
  EXPECT_EQ(json_of(neg)["certificate"]["theorem"], "NegativeSlopeComposition");
}

TEST(Cli, OtherSubcommands) {
  EXPECT_EQ(run_cli({"merge", "-p", "2", "x^2+2x+2", "x+2"}).status, 0);
  EXPECT_EQ(run_cli({"stability", "-p", "2", "x^12+6x^6+20x^2+56", "--n", "2"}).status, 0);
  EXPECT_EQ(run_cli({"stability", "-p", "2", "x^2+x+2"}).status, 2);
  EXPECT_EQ(run_cli({"purity", "-p", "3", "x^4+54x^3+432x+3456"}).status, 0);
  EXPECT_EQ(run_cli({"residual", "-p", "2", "x^4+2x^2+4", "--phi", "x"}).status, 0);
  EXPECT_EQ(run_cli({"split", "-p", "2", "x^3+18x+36"}).status, 0);
  EXPECT_EQ(run_cli({"split", "-p", "2", "x^2+4"}).status, 2);

  const RunResult idx = run_cli({"index-divisor", "-p", "2", "x^4+54x^3+432x+3456"});
  EXPECT_EQ(idx.status, 0);
  EXPECT_TRUE(json_of(idx)["common_index_divisor"].get<bool>());

  const RunResult schur = run_cli({"schur", "-p", "2", "--m", "2", "--f", "x^3+2x+2", "--n", "2"});
  EXPECT_EQ(schur.status, 0) << schur.err;
  EXPECT_TRUE(json_of(schur)["oracle_match"].get<bool>());
  EXPECT_EQ(run_cli({"schur", "-p", "2", "--b", "1,3,1", "--f", "x^2+2x+2"}).status, 2);
}

TEST(Cli, ErrorsExitOne) {
  EXPECT_EQ(run_cli({"np", "--prime", "4", "x^2+2"}).status, 1);
  EXPECT_EQ(run_cli({"np", "x^2+2"}).status, 1);
  EXPECT_EQ(run_cli({"np", "--prime", "2", "x^^2"}).status, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).status, 1);
  EXPECT_EQ(run_cli({}).status, 1);
  const RunResult r = run_cli({"np", "--prime", "2", "x^2+2x"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("ZeroConstantTerm"), std::string::npos);
  EXPECT_EQ(run_cli({"np", "--prime", "2", "--strip", "x^2+2x"}).status, 0);
  EXPECT_EQ(run_cli({"--help"}).status, 0);
}

TEST(Cli, DegreeCapFailsFast) {
  const RunResult r = run_cli({"verify", "-p", "2", "--g", "x^3+2x+4", "--f", "x^3+2x+4", "--n", "12", "--degree-cap", "5000"});
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.err.find("projected degree 1594323"), std::string::npos) << r.err;

  setenv("NEWTON_DEGREE_CAP", "5", 1);
  const RunResult env = run_cli({"verify", "-p", "2", "--g", "x^3+2x+4", "--f", "x^3+2x+4", "--n", "1"});
  EXPECT_EQ(env.status, 1);
  const RunResult flag = run_cli({"verify", "-p", "2", "--g", "x^3+2x+4", "--f", "x^3+2x+4", "--n", "1", "--degree-cap", "100"});
  EXPECT_EQ(flag.status, 0);
  unsetenv("NEWTON_DEGREE_CAP");
}

TEST(Cli, ReadsStdinAndFiles) {
  const RunResult r = run_cli({"np", "--prime", "2", "-"}, "x^3+2x+4\n");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(json_of(r)["vertices"].dump(), "[[0,0],[2,1],[3,2]]");

  const auto path = temp_file("newtonpoly_cli_input.txt");
  std::ofstream(path) << "x^11+2x^4+4x+16";
  const RunResult f = run_cli({"np", "--prime", "2", "@" + path.string()});
  EXPECT_EQ(json_of(f)["vertices"].dump(), "[[0,0],[7,1],[10,2],[11,4]]");
  std::filesystem::remove(path);
}

TEST(Cli, WritesOutFileAndFormats) {
  const auto path = temp_file("newtonpoly_cli_out.svg");
  const RunResult r = run_cli({"np", "--prime", "2", "x^3+2x+4", "--format", "svg", "--out", path.string()});
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str().rfind("<svg", 0), 0u);
  std::filesystem::remove(path);

  const RunResult text = run_cli({"np", "--prime", "2", "x^3+2x+4", "--format", "text"});
  EXPECT_NE(text.out.find("vertices: (0,0) (2,1) (3,2)"), std::string::npos);
  EXPECT_EQ(run_cli({"split", "-p", "2", "x^3+18x+36", "--format", "svg"}).status, 1);
  EXPECT_EQ(run_cli({"np", "-p", "2", "x+2", "--format", "pdf"}).status, 1);
}

TEST(Cli, OutputIsDeterministic) {
  const std::vector<std::string> args{"search", "--seed", "7", "--count", "40", "--threads", "3"};
  const RunResult a = run_cli(args);
  std::vector<std::string> single = args;
  single.back() = "1";
  const RunResult b = run_cli(single);
  ASSERT_EQ(a.status, 0) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(run_cli({"np", "-p", "3", "x^5+9x+27"}).out, run_cli({"np", "-p", "3", "x^5+9x+27"}).out);
}

TEST(Cli, SearchFindsBoundaryCounterexamples) {
  const RunResult r = run_cli({"search", "--seed", "1", "--count", "120"});
  ASSERT_EQ(r.status, 0) << r.out;
  const Json j = json_of(r);
  EXPECT_EQ(j["tally"]["satisfied_but_mismatch"], 0);
  EXPECT_GT(j["tally"]["violated_and_mismatch"].get<int>(), 0);
  for (const Json& c : j["counterexamples"]) EXPECT_FALSE(c["violations"].empty());
}
