#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace rbsym;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "rbsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("rbsym_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST(Cli, PolyOfSingleEdge) {
  const std::string f = write_temp("edge.txt", "2\n1 2\n");
  const Result r = run_cli({"poly", f});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "u(m) = m^2\n");
  EXPECT_EQ(run_cli({"poly", "--method", "delcon", f}).out, "u(m) = m^2\n");
}

TEST(Cli, PolyEvaluations) {
  const Result r = run_cli({"poly", "--gen", "empty:3", "--eval", "-1,2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "u(m) = m^3 + 3m^2 + 2m\nu(-1) = 0\nu(2) = 24\n");
  EXPECT_EQ(run_cli({"poly", "--gen", "empty:3", "--eval", "1,x"}).code, 1);
}

TEST(Cli, HamOfCompleteThree) {
  const Result r = run_cli({"ham", "--gen", "complete:3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "6\n");
  EXPECT_EQ(run_cli({"ham", "--gen", "complete:3", "--method", "enumerate"}).out, "6\n");
  EXPECT_EQ(run_cli({"zeta", "--gen", "empty:3"}).out, "6\n");
}

TEST(Cli, VerifyRandomTournament) {
  const Result r = run_cli({"verify", "--gen", "random_tournament:5:seed=7"});
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_EQ(r.out.find("fail"), std::string::npos);
  EXPECT_NE(r.out.find("pass redei_odd"), std::string::npos);
  const Result j = run_cli({"verify", "--gen", "random:9:seed=1", "--format", "json"});
  EXPECT_EQ(j.code, 0);
  const json doc = json::parse(j.out);
  bool skipped = false;
  for (const auto& c : doc["checks"]) {
    EXPECT_NE(c["status"], "fail");
    if (c["name"] == "deletion_contraction") skipped = c["status"] == "skip";
  }
  EXPECT_TRUE(skipped);
}

TEST(Cli, UxfAndUxmText) {
  const std::string f = write_temp("edge2.txt", "# one edge\n2\n1 2\n");
  EXPECT_EQ(run_cli({"uxf", f}).out, "U_X = F{} + F{1}\n");
  EXPECT_EQ(run_cli({"uxm", f}).out, "U_X = M(2) + 2M(1,1)\n");
  EXPECT_EQ(run_cli({"antipode", f}).out, "S(U_X) = F{} + F{1}\n");
  EXPECT_EQ(run_cli({"antipode", "--takeuchi", f}).out, "1 [2: (1,2)]\n");
}

TEST(Cli, JsonSchemas) {
  const json u = json::parse(run_cli({"uxm", "--gen", "path:3", "--format", "json"}).out);
  EXPECT_EQ(u["degree"], 3);
  EXPECT_EQ(u["basis"], "M");
  ASSERT_TRUE(u["terms"].is_array());
  for (const auto& t : u["terms"]) {
    EXPECT_TRUE(t["subset"].is_array());
    EXPECT_TRUE(t["composition"].is_array());
    EXPECT_TRUE(t["coeff"].is_string());
  }
  const json p = json::parse(run_cli({"poly", "--gen", "path:3", "--format", "json", "--eval", "2"}).out);
  EXPECT_EQ(p["polynomial"]["coefficients"], json::parse("[0,1,1,1]"));
  EXPECT_EQ(p["polynomial"]["text"], "m^3 + m^2 + m");
  EXPECT_EQ(p["evaluations"][0]["value"], 14);
  const json c = json::parse(run_cli({"coproduct", "--gen", "path:2", "--format", "json"}).out);
  EXPECT_EQ(c["terms"].size(), 3u);
  EXPECT_EQ(c["terms"][1]["coeff"], "2/1");
  const json g = json::parse(run_cli({"gen", "cycle:3", "--format", "json"}).out);
  EXPECT_EQ(g["edges"], json::parse("[[1,2],[2,3],[3,1]]"));
}

TEST(Cli, Descents) {
  const std::string f = write_temp("path3.txt", "3\n1 2\n2 3\n");
  EXPECT_EQ(run_cli({"descents", f, "--listing", "1,2,3"}).out, "XDes = {1,2}\n");
  EXPECT_EQ(run_cli({"descents", f, "--listing", "2,1,3"}).out, "XDes = {}\n");
  EXPECT_EQ(run_cli({"descents", f}).out, "{}: 3\n{1}: 1\n{2}: 1\n{1,2}: 1\n");
  EXPECT_EQ(run_cli({"descents", f, "--listing", "1,1,3"}).code, 1);
  EXPECT_EQ(run_cli({"descents", f, "--listing", "1,2"}).code, 1);
}

TEST(Cli, GenRoundTrip) {
  const Result r = run_cli({"gen", "random:7:p=0.4:seed=3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_digraph(r.out), generate(GeneratorKind::random, 7, 3, 0.4));
}

TEST(Cli, Errors) {
  const Result missing = run_cli({"poly", "/nonexistent/rbsym.txt"});
  EXPECT_EQ(missing.code, 1);
  EXPECT_NE(missing.err.find("cannot open"), std::string::npos);

  const std::string bad = write_temp("bad.txt", "3\n1 2\n1 2\n");
  const Result dup = run_cli({"poly", bad});
  EXPECT_EQ(dup.code, 1);
  EXPECT_NE(dup.err.find("line 3"), std::string::npos);
  EXPECT_NE(dup.err.find("duplicate"), std::string::npos);

  EXPECT_EQ(run_cli({"poly"}).code, 1);
  EXPECT_EQ(run_cli({"poly", bad, "--gen", "empty:2"}).code, 1);
  EXPECT_EQ(run_cli({}).code, 1);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 1);
  EXPECT_EQ(run_cli({"poly", "--gen", "random:3"}).code, 1);

  const Result cap = run_cli({"uxf", "--gen", "empty:3", "--cap", "40"});
  EXPECT_EQ(cap.code, 1);
  EXPECT_NE(cap.err.find("compiled limit"), std::string::npos);
  const Result over = run_cli({"uxf", "--gen", "empty:5", "--cap", "4"});
  EXPECT_EQ(over.code, 1);
  EXPECT_NE(over.err.find("cap"), std::string::npos);
  EXPECT_EQ(run_cli({"uxf", "--format", "yaml", "--gen", "empty:2"}).code, 1);
}

TEST(Cli, HelpDocumentsGeneratorsAndPrng) {
  const Result r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("kind:n[:p=float][:seed=int]"), std::string::npos);
  EXPECT_NE(r.out.find("mt19937_64"), std::string::npos);
}

TEST(Cli, OutputIsDeterministic) {
  for (const char* verb : {"uxf", "uxm", "poly", "coproduct", "verify"}) {
    const Result a = run_cli({verb, "--gen", "random:6:seed=11", "--format", "json", "--threads", "1"});
    const Result b = run_cli({verb, "--gen", "random:6:seed=11", "--format", "json", "--threads", "3"});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << verb;
  }
}

TEST(Cli, BenchSmallRange) {
  const Result r = run_cli({"bench", "--n-min", "0", "--n-max", "3"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::istringstream in(r.out);
  std::string line;
  std::getline(in, line);
  EXPECT_EQ(line, "n,algorithm,seconds,checksum");
  std::map<int, std::set<std::string>> sums;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    std::stringstream ss(line);
    std::string n, algo, secs, sum;
    std::getline(ss, n, ',');
    std::getline(ss, algo, ',');
    std::getline(ss, secs, ',');
    std::getline(ss, sum, ',');
    sums[std::stoi(n)].insert(sum);
  }
  EXPECT_EQ(rows, 12);
  for (const auto& [n, s] : sums) EXPECT_EQ(s.size(), 1u) << n;
}

TEST(Cli, BenchEnumerationAndDpAgreeAtEight) {
  GeneratorSpec spec = parse_generator_spec("random:p=0.5:seed=5");
  const auto rows = cli::run_bench(spec, 8, 8, 1, 6, {});
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].checksum, rows[1].checksum);
  const auto dense = cli::run_bench(parse_generator_spec("random:p=0.9:seed=2"), 6, 6, 1, 6, {});
  ASSERT_EQ(dense.size(), 3u);
  EXPECT_EQ(dense[0].checksum, dense[2].checksum);
}
