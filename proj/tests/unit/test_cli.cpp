#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "mrep_cli/cli.hpp"

namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = mrep::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MREP_DATA_DIR) + "/" + name; }

std::string temp_input(const std::string& name, const std::string& body) {
  std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << body;
  return path;
}

TEST(Cli, AnalyzeSixBasePoints) {
  auto r = run({"analyze", data("six_base_points.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["mu0"], 0);
  EXPECT_EQ(j["nu0"], 2);
  EXPECT_EQ(j["indeg_H1"], 4);
  EXPECT_TRUE(j["all_pass"].get<bool>());
}

TEST(Cli, MatrixShapes) {
  auto shape = [](const std::vector<std::string>& args) {
    auto r = run(args);
    EXPECT_EQ(r.code, 0) << r.err;
    auto j = json::parse(r.out);
    return std::pair{j["nrows"].get<int>(), j["ncols"].get<int>()};
  };
  EXPECT_EQ(shape({"matrix", data("six_base_points.json"), "--mu", "1"}), (std::pair{3, 4}));
  EXPECT_EQ(shape({"matrix", data("six_base_points.json"), "--mu", "auto"}), (std::pair{1, 1}));
  EXPECT_EQ(shape({"matrix", data("six_base_points.json"), "--mu", "2", "--lmax", "1"}), (std::pair{6, 9}));
  auto text = run({"matrix", data("six_base_points.json"), "--mu", "1", "--format", "text"});
  EXPECT_NE(text.out.find("3 x 4"), std::string::npos);
}

TEST(Cli, ImplicitizeVerified) {
  auto r = run({"implicitize", data("six_base_points.json"), "--mu", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["implicit"], "T0*T1*T2 + T0*T1*T3 - T2*T3^2");
  EXPECT_EQ(j["degree"], 3);
  EXPECT_TRUE(j["verified"].get<bool>());
  auto g = run({"implicitize", data("general_3_2.json")});
  ASSERT_EQ(g.code, 0) << g.err;
  EXPECT_EQ(json::parse(g.out)["degree"], 4);
  auto t = run({"implicitize", data("general_3_2.json"), "--tune", "1"});
  ASSERT_EQ(t.code, 0) << t.err;
  EXPECT_EQ(json::parse(t.out)["mu"], 2);
}

TEST(Cli, DeterministicOutput) {
  auto a = run({"analyze", data("hilbert_burch_cubics.json")});
  auto b = run({"analyze", data("hilbert_burch_cubics.json")});
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto c = run({"implicitize", data("six_base_points.json"), "--mu", "2"});
  auto d = run({"implicitize", data("six_base_points.json"), "--mu", "2"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, ValidationErrors) {
  auto deg = temp_input("deg.json", R"({"field":"Q","variables":["X1","X2"],"forms":["X1^2","X2","X1*X2"]})");
  EXPECT_EQ(run({"analyze", deg}).code, 1);
  auto dep = temp_input("dep.json", R"({"field":"Q","variables":["X1","X2"],"forms":["X1^2","X2^2","X1^2+X2^2"]})");
  EXPECT_EQ(run({"analyze", dep}).code, 1);
  auto schema = temp_input("schema.json", R"({"field":"R","variables":["X1"],"forms":["X1"]})");
  EXPECT_EQ(run({"analyze", schema}).code, 1);
  auto notjson = temp_input("bad.json", "{");
  EXPECT_EQ(run({"analyze", notjson}).code, 1);
  EXPECT_EQ(run({"analyze", "/nonexistent/input.json"}).code, 1);
  EXPECT_EQ(run({"matrix", data("six_base_points.json"), "--mu", "x"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, DegenerateInputRejected) {
  auto p = temp_input("dim2.json", R"({"field":"Q","variables":["X1","X2","X3"],"forms":["X1^3","X1*X2^2","X1*X3^2","X1*X2*X3"]})");
  EXPECT_NE(run({"implicitize", p}).code, 0);
  EXPECT_NE(run({"analyze", p}).code, 0);
}

TEST(Cli, PrimeField) {
  auto p = temp_input("fp.json", R"({"field":{"p":101},"variables":["X1","X2"],"forms":["X1^2","X2^2","X1*X2"]})");
  auto r = run({"implicitize", p});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["implicit"], "T0*T1 + 100*T2^2");
}

TEST(Cli, AppendixTables) {
  auto l = run({"appendix", "lefschetz", "--n", "3", "--m", "3"});
  EXPECT_EQ(l.code, 0);
  EXPECT_TRUE(json::parse(l.out)["all_pass"].get<bool>());
  auto s = run({"appendix", "signs", "--n", "4", "--d", "4"});
  EXPECT_EQ(s.code, 0);
  EXPECT_TRUE(json::parse(s.out)["pass"].get<bool>());
  auto m = run({"appendix", "lemme", "--m", "3", "--t", "3"});
  EXPECT_EQ(m.code, 0);
  EXPECT_TRUE(json::parse(m.out)["all_pass"].get<bool>());
  EXPECT_EQ(run({"appendix", "lefschetz", "--n", "9", "--m", "3"}).code, 1);
  EXPECT_EQ(run({"appendix", "signs", "--n", "1", "--d", "3"}).code, 1);
}

TEST(Cli, OutFile) {
  std::string path = ::testing::TempDir() + "report.json";
  auto r = run({"analyze", data("six_base_points.json"), "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  auto j = json::parse(in);
  EXPECT_EQ(j["mu0"], 0);
}

}  // namespace
