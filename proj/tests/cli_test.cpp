#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "oracles.hpp"
#include "theta/cli.hpp"

namespace {

using namespace theta::cli;
using theta::braid::BraidWord;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::size_t error_column(std::string_view text, int strands) {
  try {
    parse_word(text, strands);
  } catch (const ParseError& e) {
    return e.column();
  }
  return 0;
}

TEST(ParseWord, Examples) {
  EXPECT_EQ(parse_word("s1 S1", 4), BraidWord::from_signed(4, {1, -1}));
  EXPECT_EQ(parse_word("(a b c)^4", 4).size(), 12u);
  EXPECT_EQ(parse_word("(a b c)^4", 4),
            BraidWord::from_signed(4, {1, 2, 3}).power(4));
  EXPECT_EQ(parse_word("", 3), BraidWord(3));
  EXPECT_EQ(parse_word("A C", 4), BraidWord::from_signed(4, {-1, -3}));
  EXPECT_EQ(parse_word("s2^3", 4), BraidWord::from_signed(4, {2, 2, 2}));
  EXPECT_EQ(parse_word("s2^-2", 4), BraidWord::from_signed(4, {-2, -2}));
  EXPECT_EQ(parse_word("((s1 s2)^2 S3)^-1", 4),
            (BraidWord::from_signed(4, {1, 2, 1, 2, -3})).inverse());
  EXPECT_EQ(parse_word("f1 F5", 6, true), BraidWord::from_signed(6, {1, -5}));
}

TEST(ParseWord, Errors) {
  try {
    parse_word("s9", 4);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_NE(std::string(e.what()).find("index out of range"), std::string::npos);
    EXPECT_EQ(e.column(), 1u);
  }
  EXPECT_EQ(error_column("s1 s2 s4", 4), 7u);
  EXPECT_EQ(error_column("s1 x2", 4), 4u);
  EXPECT_GT(error_column("(s1 s2", 4), 0u);
  EXPECT_GT(error_column("s1 s2)", 4), 0u);
  EXPECT_GT(error_column("a b", 5), 0u);   // aliases need 4 strands
  EXPECT_GT(error_column("f1", 4), 0u);    // f aliases need theta context
  EXPECT_GT(error_column("s0", 4), 0u);
  EXPECT_GT(error_column("(s1)^", 4), 0u);
}

TEST(ParseWord, FormatRoundTrip) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 6;
    const BraidWord w = theta::oracle::random_word(rng, n, 20);
    const BraidWord back = parse_word(theta::braid::to_string(w), n);
    EXPECT_EQ(back, w);
    EXPECT_TRUE(theta::braid::equals(back, w));
  }
}

TEST(ParseMatrix, Examples) {
  EXPECT_EQ(parse_matrix("[[0,1],[-1,0]]"), theta::sl2::quarter_turn());
  EXPECT_EQ(parse_matrix(" [ [ 1 , 1 ] , [ 0 , 1 ] ] "), theta::sl2::generator_a());
  EXPECT_EQ(parse_matrix("[[123456789012345678901,1],[-1,0]]").t1(),
            theta::Integer("123456789012345678901"));
  EXPECT_THROW(parse_matrix("[[2,0],[0,2]]"), std::domain_error);
  EXPECT_THROW(parse_matrix("[[1,0],[0,1]"), ParseError);
  EXPECT_THROW(parse_matrix("[[1,0,0],[0,1]]"), ParseError);
  EXPECT_THROW(parse_matrix("[[a,0],[0,1]]"), ParseError);
}

TEST(Run, NormalFormOfFullTwist) {
  const Outcome o = run_cli({"nf", "--n", "4", "(a b c)^4"});
  EXPECT_EQ(o.code, 0);
  EXPECT_EQ(o.out, "Δ^2\n");
  const Outcome half = run_cli({"nf", "--n", "4", "s1 s2 s1"});
  EXPECT_EQ(half.out, "Δ^0 · [3,2,1,4]\n");
}

TEST(Run, Equality) {
  EXPECT_EQ(run_cli({"eq", "--n", "4", "s1 s2 s1", "s2 s1 s2"}).code, 0);
  EXPECT_EQ(run_cli({"eq", "--n", "4", "s1", "s2"}).code, 1);
  EXPECT_EQ(run_cli({"eq", "--n", "4", "--mod-center", "(a b c)^4", ""}).code, 0);
  EXPECT_EQ(run_cli({"eq", "--n", "4", "--mod-center", "(s1 s2)^6", ""}).code, 1);
  EXPECT_EQ(run_cli({"eq", "--n", "4", "s1"}).code, 2);
}

TEST(Run, RootsCensusJson) {
  const Outcome o = run_cli({"roots", "--power", "2", "--bound", "50", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto json = theta::suite::Json::parse(o.out);
  EXPECT_EQ(json["schema_version"], kSchemaVersion);
  EXPECT_EQ(json["status"], "pass");
  const auto& census = json["experiments"][0]["checks"][0]["witness"];
  EXPECT_EQ(census["residue"].size(), 0u);
  EXPECT_EQ(census["power"], 2);
}

TEST(Run, ReduceMatrix) {
  const Outcome o = run_cli({"roots", "--matrix", "[[-1,2],[-1,1]]", "--format", "json"});
  ASSERT_EQ(o.code, 0) << o.err;
  const auto json = theta::suite::Json::parse(o.out);
  EXPECT_EQ(json["experiments"][0]["checks"][1]["witness"]["canonical"],
            theta::suite::Json::parse("[[0,1],[-1,0]]"));
  // Not a square root of -Id: the first check fails.
  EXPECT_EQ(run_cli({"roots", "--matrix", "[[0,1],[-1,1]]"}).code, 1);
  EXPECT_EQ(run_cli({"roots", "--power", "3", "--matrix", "[[0,1],[-1,1]]"}).code, 0);
  // A parabolic matrix is a valid input that is simply not a root.
  EXPECT_EQ(run_cli({"roots", "--matrix", "[[1,1],[0,1]]"}).code, 1);
}

TEST(Run, ThetaVerify) {
  EXPECT_EQ(run_cli({"theta-verify", "--n", "3", "--k", "1", "--engine", "symplectic"}).code, 0);
  EXPECT_EQ(run_cli({"theta-verify", "--n", "4", "--k", "2", "--engine", "braid"}).code, 0);
  // Inconclusive checks do not fail the run.
  const Outcome blue = run_cli({"theta-verify", "--n", "2", "--k", "1", "--engine", "braid"});
  EXPECT_EQ(blue.code, 0);
  EXPECT_NE(blue.out.find("status: inconclusive"), std::string::npos);
}

TEST(Run, OtherVerbs) {
  EXPECT_EQ(run_cli({"hyperelliptic", "--n", "5"}).code, 0);
  EXPECT_EQ(run_cli({"separation", "--k", "1"}).code, 0);
  EXPECT_EQ(run_cli({"theta-roots", "--n", "1", "--bound", "5"}).code, 0);
  EXPECT_EQ(run_cli({"theta-roots", "--n", "3", "--m-max", "3"}).code, 0);
}

TEST(Run, UsageErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"nf", "--n", "4", "s9"}).code, 2);
  EXPECT_EQ(run_cli({"nf", "--n", "4", "--bogus", "s1"}).code, 2);
  EXPECT_EQ(run_cli({"nf", "--n", "1", "s1"}).code, 2);
  EXPECT_EQ(run_cli({"roots", "--power", "4"}).code, 2);
  EXPECT_EQ(run_cli({"theta-verify", "--n", "3"}).code, 2);
  EXPECT_EQ(run_cli({"theta-verify", "--n", "3", "--k", "1", "--engine", "gpu"}).code, 2);
  EXPECT_EQ(run_cli({"hyperelliptic", "--n", "0"}).code, 2);
  EXPECT_EQ(run_cli({"separation", "--k", "1", "--format", "xml"}).code, 2);
  const Outcome o = run_cli({"nf", "--n", "4", "s1 s9"});
  EXPECT_NE(o.err.find("column 4"), std::string::npos) << o.err;
  EXPECT_TRUE(o.out.empty());
}

TEST(Run, JsonIsDeterministic) {
  const std::vector<std::string> args{"report", "--format", "json"};
  const Outcome first = run_cli(args);
  const Outcome second = run_cli(args);
  ASSERT_EQ(first.code, 0) << first.err;
  EXPECT_EQ(first.out, second.out);
  const auto json = theta::suite::Json::parse(first.out);
  std::vector<std::string> keys;
  for (auto it = json.begin(); it != json.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"schema_version", "status", "experiments"}));
}

TEST(Run, ReportWritesFile) {
  const std::string path = ::testing::TempDir() + "theta_report.json";
  const Outcome o = run_cli({"report", "--output", path});
  ASSERT_EQ(o.code, 0) << o.err;
  std::ifstream file(path);
  std::stringstream content;
  content << file.rdbuf();
  EXPECT_EQ(theta::suite::Json::parse(content.str())["status"], "inconclusive");
  std::remove(path.c_str());
}

TEST(ReportDocument, ExitCodeFollowsWorstStatus) {
  ReportDocument doc;
  EXPECT_EQ(doc.exit_code(), 0);
  theta::suite::Report report;
  report.experiment = "x";
  report.add("ok", true, theta::suite::Json::object());
  report.add("maybe", theta::suite::Status::Inconclusive, theta::suite::Json::object());
  doc.experiments.push_back(report);
  EXPECT_EQ(doc.exit_code(), 0);
  EXPECT_EQ(doc.status(), theta::suite::Status::Inconclusive);
  doc.experiments.back().add("bad", false, theta::suite::Json::object());
  EXPECT_EQ(doc.exit_code(), 1);
  EXPECT_NE(doc.to_text().find("status: fail"), std::string::npos);
}

}  // namespace
