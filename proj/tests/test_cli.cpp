#include "cyclicsign/cli.hpp"
#include "cyclicsign/errors.hpp"
#include "cyclicsign/matrix_io.hpp"

#include <gtest/gtest.h>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace cyclicsign::cli {
namespace {

namespace fs = std::filesystem;

const fs::path kData = CYCLICSIGN_TEST_DATA_DIR;
const fs::path kGolden = CYCLICSIGN_TEST_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "cyclicsign");
  std::ostringstream out;
  std::ostringstream err;
  const int code = main_entry(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name, const std::string& content) {
  const fs::path p = fs::temp_directory_path() / ("cyclicsign_cli_test_" + name);
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

std::string data(const char* name) { return (kData / name).string(); }

TEST(Cli, FirstFixtureSccAndSignGolden) {
  const Outcome o = invoke({"analyze", "--input", data("a1.csv"), "--ops", "scc,sign", "--out", "json"});
  EXPECT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden / "a1_scc_sign.json"));
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["sign"]["sign"], 1);
  EXPECT_EQ(j["scc"]["components"][1]["vertices"], nlohmann::json({2, 3, 4}));
  EXPECT_TRUE(j["scc"]["components"][1]["closed"].get<bool>());
}

TEST(Cli, SecondFixtureSignAndOracleGolden) {
  const Outcome o = invoke({"analyze", "--input", data("a2.csv"), "--ops", "sign,oracle", "--out", "json"});
  EXPECT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden / "a2_sign_oracle.json"));
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["sign"]["sign"], 0);
  EXPECT_EQ(j["oracle"]["determinant"], "0");
  EXPECT_TRUE(j["oracle"]["consistent"].get<bool>());
}

TEST(Cli, CounterexamplePMatrixGolden) {
  const Outcome o = invoke({"analyze", "--input", data("a3.csv"), "--ops", "pmatrix", "--out", "json"});
  EXPECT_EQ(o.code, kOk) << o.err;
  EXPECT_EQ(o.out, slurp(kGolden / "a3_pmatrix.json"));
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_FALSE(j["pmatrix"]["is_p_matrix"].get<bool>());
  EXPECT_EQ(j["pmatrix"]["witness"], nlohmann::json({1, 2, 3, 4}));
  EXPECT_TRUE(j["pmatrix"]["necessary_condition"].get<bool>());
}

TEST(Cli, OutputIsByteStable) {
  const std::vector<std::string> args = {"analyze", "--input", data("a1.csv"), "--ops",
                                         "oracle,reach,witness,pmatrix,solutions,sign,scc,graph,class",
                                         "--out", "json"};
  const Outcome first = invoke(args);
  const Outcome second = invoke(args);
  EXPECT_EQ(first.code, kOk);
  EXPECT_EQ(first.out, second.out);
  const auto j = nlohmann::json::parse(first.out);
  for (const char* key : {"class", "graph", "scc", "sign", "solutions", "pmatrix", "witness", "reach", "oracle"}) {
    EXPECT_TRUE(j.contains(key)) << key;
  }
  EXPECT_EQ(j.size(), 9u);
}

TEST(Cli, JsonInputMatchesCsvInput) {
  const fs::path json_input = scratch("a1.json", to_json_text(read_matrix_file(data("a1.csv"), MatrixFormat::Csv)));
  const Outcome from_json =
      invoke({"analyze", "--input", json_input.string(), "--format", "json", "--ops", "sign", "--out", "json"});
  const Outcome from_csv = invoke({"analyze", "--input", data("a1.csv"), "--ops", "sign", "--out", "json"});
  EXPECT_EQ(from_json.code, kOk);
  EXPECT_EQ(from_json.out, from_csv.out);
}

TEST(Cli, TextReport) {
  const Outcome o = invoke({"analyze", "--input", data("a1.csv")});
  EXPECT_EQ(o.code, kOk);
  EXPECT_NE(o.out.find("[scc]\n  open   {1,5}\n  closed {2,3,4}\n"), std::string::npos);
  EXPECT_NE(o.out.find("\"sign\": 1"), std::string::npos);
  EXPECT_TRUE(o.err.empty());
}

TEST(Cli, LambdaIsParsedExactly) {
  const Outcome o =
      invoke({"analyze", "--input", data("a1.csv"), "--ops", "solutions", "--lambda", "0.5", "--out", "json"});
  EXPECT_EQ(o.code, kOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["solutions"]["lambda"], "1/2");
  EXPECT_EQ(j["solutions"]["canonical_particular"], nlohmann::json({"0", "1/4", "1/8", "1/8", "0"}));
}

TEST(Cli, DotExport) {
  const fs::path dot = fs::temp_directory_path() / "cyclicsign_cli_test_graph.dot";
  const Outcome o = invoke({"analyze", "--input", data("a2.csv"), "--ops", "graph", "--dot", dot.string()});
  EXPECT_EQ(o.code, kOk);
  const std::string text = slurp(dot);
  EXPECT_EQ(text.rfind("digraph", 0), 0u);
  EXPECT_NE(text.find("style=dashed"), std::string::npos);
}

TEST(Cli, NotInClassExitsTwo) {
  const fs::path bad = scratch("bad.csv", "-1,0\n0,-1\n");
  const Outcome o = invoke({"analyze", "--input", bad.string()});
  EXPECT_EQ(o.code, kNotInClass);
  EXPECT_TRUE(o.out.empty());
  EXPECT_NE(o.err.find("row 1: column 1 < column 2"), std::string::npos);
}

TEST(Cli, ParseAndIoErrorsExitThree) {
  const fs::path ragged = scratch("ragged.csv", "1,2\n3\n");
  EXPECT_EQ(invoke({"analyze", "--input", ragged.string()}).code, kParseOrIo);
  EXPECT_EQ(invoke({"analyze", "--input", "/nonexistent/m.csv"}).code, kParseOrIo);
  const fs::path broken = scratch("broken.json", "{\"n\": 2");
  const Outcome o = invoke({"analyze", "--input", broken.string(), "--format", "json"});
  EXPECT_EQ(o.code, kParseOrIo);
  EXPECT_TRUE(o.out.empty());
}

TEST(Cli, InvalidFlagsExitFour) {
  EXPECT_EQ(invoke({"analyze", "--input", data("a1.csv"), "--ops", "bogus"}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"analyze", "--input", data("a1.csv"), "--ops", ""}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"analyze", "--input", data("a1.csv"), "--root", "9", "--ops", "reach"}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"analyze", "--input", data("a1.csv"), "--lambda", "x"}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"analyze", "--input", data("a1.csv"), "--format", "xml"}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"analyze"}).code, kInvalidFlags);
  EXPECT_EQ(invoke({}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"gen", "--n", "0"}).code, kInvalidFlags);
  EXPECT_EQ(invoke({"gen", "--non-negative", "--row-sum", "neg"}).code, kInvalidFlags);
}

TEST(Cli, OracleSubcommand) {
  const Outcome o = invoke({"oracle", "--input", data("a1.csv"), "--out", "json"});
  EXPECT_EQ(o.code, kOk);
  const auto j = nlohmann::json::parse(o.out);
  EXPECT_EQ(j["oracle"]["determinant"], "12");
  EXPECT_EQ(j["oracle"]["certified_sign"], 1);
  EXPECT_TRUE(j["oracle"]["consistent"].get<bool>());
}

TEST(Cli, GenIsDeterministicAndReadable) {
  const Outcome a = invoke({"gen", "--n", "4", "--seed", "9", "--row-sum", "pos"});
  const Outcome b = invoke({"gen", "--n", "4", "--seed", "9", "--row-sum", "pos"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  const fs::path p = scratch("gen.csv", a.out);
  const Outcome analysed = invoke({"analyze", "--input", p.string(), "--ops", "class", "--out", "json"});
  EXPECT_EQ(analysed.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(analysed.out)["class"]["row_sum_class"], "AllPositive");
}

TEST(Cli, GenFromGapPattern) {
  const fs::path pattern = scratch("pattern.csv", "0,1,0\n0,0,1\n1,0,0\n");
  const Outcome o = invoke({"gen", "--gap-pattern", pattern.string(), "--seed", "3", "--format", "json"});
  EXPECT_EQ(o.code, kOk) << o.err;
  const fs::path p = scratch("from_pattern.json", o.out);
  const Outcome graph = invoke({"analyze", "--input", p.string(), "--format", "json", "--ops", "graph", "--out", "json"});
  EXPECT_EQ(nlohmann::json::parse(graph.out)["graph"]["kappa"],
            nlohmann::json({{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}));
  const fs::path bad = scratch("bad_pattern.csv", "0,2\n0,0\n");
  EXPECT_EQ(invoke({"gen", "--gap-pattern", bad.string()}).code, kParseOrIo);
}

TEST(Cli, ParseOperations) {
  EXPECT_EQ(parse_operations("sign, scc,sign"), (std::vector<Operation>{Operation::Scc, Operation::Sign}));
  EXPECT_THROW(parse_operations("sign,nope"), InvalidArgument);
  EXPECT_THROW(parse_operations(" , "), InvalidArgument);
}

TEST(Cli, RunRejectsEmptyOperationList) {
  AnalysisRequest request;
  request.inline_matrix = "1\n";
  std::ostringstream out;
  std::ostringstream err;
  EXPECT_EQ(run(request, out, err), kInvalidFlags);
  request.operations = {Operation::Sign};
  EXPECT_EQ(run(request, out, err), kOk);
}

}  // namespace
}  // namespace cyclicsign::cli
