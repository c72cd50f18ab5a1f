#include <gtest/gtest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "fixtures.hpp"
#include "tangents/io.hpp"

using namespace tangents;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tangents_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    write_text_file(path, text);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, CountForty) {
  const std::string file = write("t4.json", quadruple_to_json(fixtures::config40()));
  Result r = run({"count", file});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=40 in_T=true\n");
  r = run({"count", file, "--exact-only", "--serial", "--report", path("report.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "n=40 in_T=true\n");
  const auto report = nlohmann::json::parse(read_text_file(path("report.json")));
  EXPECT_EQ(report["n"], 40);
  EXPECT_EQ(report["tangents"].size(), 40u);
  EXPECT_EQ(report["f_count"], 81);
}

TEST_F(CliTest, ClassifySixtyTwo) {
  const std::string file = write("t1.json", quadruple_to_json(fixtures::config62()));
  const Result r = run({"classify", file});
  EXPECT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["in_T"], true);
  EXPECT_EQ(doc["f_count"], 81);
  EXPECT_EQ(doc["i_count"], 0);
}

TEST_F(CliTest, VerifySubsets) {
  for (const char* which : {"t40", "lambda"}) {
    const Result r = run({"verify", "--which", which});
    EXPECT_EQ(r.code, 0) << r.out;
  }
  EXPECT_EQ(run({"verify", "--which", "t99"}).code, 2);
}

TEST(Verify, CorruptedDataFails) {
  ReferenceData data = builtin_reference_data();
  data.config40[2][1][0] = "37";
  std::ostringstream out;
  EXPECT_EQ(run_verify(VerifyWhich::t40, data, out), 1);
  EXPECT_NE(out.str().find("expected"), std::string::npos);

  ReferenceData lam = builtin_reference_data();
  lam.lambdas[0][1][2] = "5";
  std::ostringstream out2;
  EXPECT_EQ(run_verify(VerifyWhich::lambda, lam, out2), 1);
}

TEST_F(CliTest, InputErrors) {
  const std::string truncated = write("bad.json", "{\"triangles\": [[[0,0,0],");
  Result r = run({"count", truncated});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());

  const std::string wrong = write("wrong.json", "{\"triangles\": [[[0,0,0],[1,0,0],[0,\"x\",0]]]}");
  EXPECT_EQ(run({"count", wrong}).code, 2);

  const std::string collinear =
      write("col.json",
            "{\"triangles\": [[[0,0,0],[1,1,1],[2,2,2]],[[0,0,0],[1,0,0],[0,1,0]],"
            "[[0,0,1],[1,0,1],[0,1,1]],[[0,0,2],[1,0,2],[0,1,2]]]}");
  EXPECT_EQ(run({"count", collinear}).code, 2);

  EXPECT_EQ(run({"count", path("missing.json")}).code, 3);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"search", "--seed", "1"}).code, 2);
  EXPECT_EQ(run({"search", "--samples", "0", "--seed", "1"}).code, 2);

  const std::string good = write("t4.json", quadruple_to_json(fixtures::config40()));
  EXPECT_EQ(run({"plot", good, "--out", path("x.svg"), "--projection", "0,0,0"}).code, 2);
  EXPECT_EQ(run({"plot", good, "--out", path("x.svg"), "--projection", "1,2"}).code, 2);
  EXPECT_EQ(run({"plot", good, "--out", (dir_ / "no" / "such" / "x.svg").string()}).code, 3);
}

TEST_F(CliTest, SearchDeterministicAcrossThreads) {
  const Result a =
      run({"search", "--samples", "40", "--seed", "11", "--threads", "1", "--out", "json", "--quiet"});
  const Result b =
      run({"search", "--samples", "40", "--seed", "11", "--threads", "3", "--out", "json", "--quiet"});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_TRUE(a.err.empty());
  const auto doc = nlohmann::json::parse(a.out);
  EXPECT_TRUE(doc.is_object());

  const Result csv = run({"search", "--samples", "10", "--seed", "11", "--quiet"});
  EXPECT_EQ(csv.out.rfind("count,frequency", 0), 0u);
  EXPECT_NE(csv.out.find("degenerate,"), std::string::npos);
}

TEST_F(CliTest, SearchRecordsTopConfigurations) {
  const Result r = run({"search", "--samples", "30", "--seed", "5", "--record-top", "2", "--top-dir",
                        path("top"), "--quiet"});
  ASSERT_EQ(r.code, 0);
  int files = 0;
  for (const auto& entry : fs::directory_iterator(path("top"))) {
    ++files;
    const std::string name = entry.path().filename().string();
    const auto at = name.find("_n");
    const int n = std::stoi(name.substr(at + 2));
    EXPECT_EQ(run({"count", entry.path().string()}).out,
              "n=" + std::to_string(n) + " in_T=true\n");
  }
  EXPECT_EQ(files, 2);
}

TEST_F(CliTest, StabReport) {
  const std::string file = write("s18.json", quadruple_to_json(fixtures::stab18()));
  const Result r = run({"stab", file});
  ASSERT_EQ(r.code, 0);
  const auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["disjoint"], true);
  EXPECT_EQ(run({"stab", file, "--out", path("stab.json")}).code, 0);
  EXPECT_EQ(read_text_file(path("stab.json")), r.out);
}

TEST_F(CliTest, PlotIsDeterministic) {
  const std::string file = write("t4.json", quadruple_to_json(fixtures::config40()));
  ASSERT_EQ(run({"plot", file, "--out", path("a.svg")}).code, 0);
  ASSERT_EQ(run({"plot", file, "--out", path("b.svg")}).code, 0);
  const std::string a = read_text_file(path("a.svg"));
  EXPECT_EQ(a, read_text_file(path("b.svg")));
  EXPECT_NE(a.find("<svg"), std::string::npos);
  std::size_t lines = 0;
  for (std::size_t at = a.find("<line"); at != std::string::npos; at = a.find("<line", at + 1))
    ++lines;
  EXPECT_EQ(lines, 40u);
}

TEST_F(CliTest, CountModesAgreeOnCorpus) {
  fixtures::Rng rng(71);
  for (int i = 0; i < 20; ++i) {
    const std::string file = write("q" + std::to_string(i) + ".json",
                                   quadruple_to_json(rng.quadruple(1000)));
    EXPECT_EQ(run({"count", file}).out, run({"count", file, "--exact-only"}).out);
  }
}
