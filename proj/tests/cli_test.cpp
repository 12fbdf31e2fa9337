#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "ffcurve/cli.hpp"
#include "ffcurve/gf.hpp"
#include "json.hpp"

using nlohmann::json;
using namespace ffc;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(FFCURVE_TEST_DATA) + "/" + name; }

std::vector<json> lines(const std::string& s) {
  std::vector<json> v;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) v.push_back(json::parse(l));
  return v;
}

}  // namespace

TEST(Cli, FieldInfo) {
  const auto r = run({"field", "info", "--field", "2^3"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["order"], 8);
  EXPECT_EQ(j["modulus"], (std::vector<int>{1, 0, 1, 1}));
}

TEST(Cli, Snq) {
  const auto j = json::parse(run({"sympoly", "snq", "--n", "3", "--i", "2", "--q", "2"}).out);
  EXPECT_EQ(j["terms"], (std::vector<std::string>{"1*t^3", "1*t^5", "1*t^6"}));
  EXPECT_EQ(json::parse(run({"sympoly", "dim", "--n", "3", "--q", "2"}).out)["dimension"], 4);
  const auto qs = json::parse(run({"sympoly", "qscheck", "--n", "2", "--q", "5", "--terms", "1*t^1"}).out);
  EXPECT_FALSE(qs["quasi_symmetric"].get<bool>());
}

TEST(Cli, CurveCommands) {
  auto j = json::parse(run({"curve", "count", "--spec", data("hermitian.json")}).out);
  EXPECT_EQ(j["affine"], 27);
  j = json::parse(run({"curve", "count", "--spec", data("elliptic_gf5.json")}).out);
  EXPECT_EQ(j["affine"], 8);
  j = json::parse(run({"curve", "profile", "--spec", data("symmetric_3_2_2.json")}).out);
  EXPECT_EQ(j["degree_one_total"], 33);
  j = json::parse(run({"curve", "n2", "--spec", data("hermitian.json")}).out);
  EXPECT_EQ(j["value"], 0);
  j = json::parse(run({"curve", "count", "--spec", data("as_gf4.json"), "--field", "2^4"}).out);
  EXPECT_EQ(j["field"], "GF(2^4)");
  j = json::parse(run({"curve", "invariants", "--n", "3", "--i", "2", "--q", "2"}).out);
  EXPECT_EQ(j["g"], 6);
  EXPECT_EQ(j["kummer"]["genus"], 9);
}

TEST(Cli, Bounds) {
  EXPECT_EQ(json::parse(run({"bounds", "hw", "--l", "9", "--g", "3"}).out)["max"], 28);
  EXPECT_EQ(json::parse(run({"bounds", "oesterle", "--q", "8", "--n", "33"}).out)["genus_bound"], 6);
  EXPECT_EQ(json::parse(run({"bounds", "dv", "--q", "9"}).out)["exact"], 2);
  EXPECT_TRUE(json::parse(run({"bounds", "dv", "--q", "8"}).out)["exact"].is_null());
}

TEST(Cli, TowerCommands) {
  auto r = run({"tower", "census", "--spec", data("gs_q2.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 3u);
  EXPECT_EQ(ls[2]["affine"], 10);
  // the same tower given step by step
  auto custom = lines(run({"tower", "census", "--spec", data("custom_gs_q2.json")}).out);
  ASSERT_EQ(custom.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(custom[i]["affine"], ls[i]["affine"]);
  ls = lines(run({"tower", "census", "--spec", data("abelian_q3.json"), "--depth", "2"}).out);
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[1]["affine"], 27);
  ls = lines(run({"tower", "census", "--spec", data("kummer_all_split_q3.json"), "--depth", "2"}).out);
  EXPECT_EQ(ls[1]["affine"], 36);
  ls = lines(run({"tower", "bounds", "--spec", data("family1_q4.json")}).out);
  EXPECT_EQ(ls[1]["genus_upper"], "2");
  EXPECT_EQ(ls[2]["genus_upper"], "8");
  r = run({"tower", "locus", "--spec", data("family2_q9.json")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(json::parse(r.out)["prime_subfield_locus"].get<bool>());
}

TEST(Cli, Gsbasis) {
  const auto r = run({"gsbasis", "--q", "2", "--n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["valuations"]["P_inf"], 14);
  EXPECT_EQ(j["valuations"]["P_0"], 4);
  EXPECT_EQ(j["matrix_size"], 8);
}

TEST(Cli, Suite) {
  auto r = run({"suite", "hermitian"});
  EXPECT_EQ(r.code, 0) << r.err;
  const auto ls = lines(r.out);
  EXPECT_TRUE(ls.back()["passed"].get<bool>());
  r = run({"suite", "table1", "--format", "csv"});
  EXPECT_EQ(r.out.substr(0, 6), "n,q,N,");
  EXPECT_EQ(run({"suite", "hermitian", "--format", "csv"}).code, 2);
  EXPECT_EQ(run({"suite", "nosuch"}).code, 2);
}

TEST(Cli, Deterministic) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"suite", "automorphisms", "--seed", "5"},
           {"tower", "census", "--spec", data("family1_q4.json")},
           {"curve", "profile", "--spec", data("as_gf4.json")}}) {
    EXPECT_EQ(run(args).out, run(args).out);
  }
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"field", "info", "--field", "6"}).code, 2);
  EXPECT_EQ(run({"curve", "count", "--spec", data("bad_kummer.json")}).code, 2);
  EXPECT_EQ(run({"curve", "count", "--spec", data("malformed.json")}).code, 2);
  EXPECT_EQ(run({"curve", "count", "--spec", data("missing.json")}).code, 2);
  EXPECT_EQ(run({"bounds", "hw", "--l", "6", "--g", "1"}).code, 2);
  EXPECT_EQ(run({"gsbasis", "--q", "2", "--n", "14"}).code, 3);
  const auto help = run({"--help"});
  EXPECT_EQ(help.code, 0);
  EXPECT_NE(help.out.find("tower"), std::string::npos);
}

TEST(Cli, EnvironmentCap) {
  const auto saved = gf::enumeration_cap();
  setenv("FFCURVE_CAP", "1000", 1);
  EXPECT_EQ(run({"field", "info", "--field", "2^10"}).code, 3);
  setenv("FFCURVE_CAP", "abc", 1);
  EXPECT_EQ(run({"field", "info", "--field", "2^3"}).code, 2);
  unsetenv("FFCURVE_CAP");
  gf::set_enumeration_cap(saved);
  EXPECT_EQ(run({"field", "info", "--field", "2^10"}).code, 0);
}
