#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include "cli_app.hpp"

using flatchain::report::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = flatchain::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  const auto r = run(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return Json::parse(r.out);
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST(CliConstruct, WorkedExample) {
  const Json j = run_json({"construct", "--n", "8", "--k", "6", "--m", "16"});
  EXPECT_EQ(j["sizeA"], "16");
  EXPECT_EQ(j["sizeB"], "11");
  EXPECT_EQ(j["blym"], "43/56");
  EXPECT_EQ(j["cascade"], Json::parse("[7,6,4,3,2,0]"));
  EXPECT_EQ(j["msfa"], true);
  std::vector<std::string> keys;
  for (auto it = j.begin(); it != j.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"n", "k", "m", "cascade", "sizeA", "sizeB", "size", "volume", "blym", "msfa"}));
}

TEST(CliConstruct, EmptyTopAndListing) {
  const Json j = run_json({"construct", "--n", "8", "--k", "6", "--m", "0"});
  EXPECT_EQ(j["sizeB"], "56");
  const Json l = run_json({"construct", "--n", "4", "--k", "2", "--m", "2", "--list"});
  EXPECT_EQ(l["A"], Json::parse("[[1,2],[1,3]]"));
  EXPECT_EQ(l["B"], Json::parse("[[4]]"));
  EXPECT_EQ(l["msfa"], false);
  const auto t = run({"construct", "--n", "4", "--k", "2", "--m", "2", "--list", "--format", "text"});
  EXPECT_EQ(t.code, 0);
  EXPECT_NE(t.out.find("A: {1,2} {1,3}"), std::string::npos);
  EXPECT_NE(t.out.find("msfa no"), std::string::npos);
}

TEST(CliConstruct, Errors) {
  EXPECT_EQ(run({"construct", "--n", "4", "--k", "2", "--m", "7"}).code, 2);
  EXPECT_EQ(run({"construct", "--n", "4", "--k", "5", "--m", "0"}).code, 2);
  EXPECT_EQ(run({"construct", "--n", "4", "--k", "2"}).code, 2);
  EXPECT_EQ(run({"construct", "--n", "4", "--k", "2", "--m", "-1"}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
  EXPECT_EQ(run({"construct", "--n", "30", "--k", "15", "--m", "5000", "--list"}).code, 3);
}

TEST(CliConstruct, CapFromEnvironment) {
  ::setenv("FLATCHAIN_CAP", "3", 1);
  const auto r = run({"construct", "--n", "5", "--k", "2", "--m", "4", "--list"});
  ::unsetenv("FLATCHAIN_CAP");
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"construct", "--n", "5", "--k", "2", "--m", "4", "--list"}).code, 0);
  ::setenv("FLATCHAIN_CAP", "zero", 1);
  EXPECT_EQ(run({"construct", "--n", "5", "--k", "2", "--m", "4"}).code, 2);
  ::unsetenv("FLATCHAIN_CAP");
}

TEST(CliClosure, Example) {
  const Json j = run_json({"closure", "--n", "4", "--k", "2", "--m", "2"});
  EXPECT_EQ(j["m"], "3");
  EXPECT_EQ(j["msfa"], true);
  EXPECT_EQ(run({"closure", "--n", "4", "--k", "1", "--m", "2"}).code, 2);
}

TEST(CliMinimize, WorkedExampleBothModes) {
  for (const char* mode : {"msfa", "fsfa"}) {
    const Json j = run_json({"minimize", "--n", "8", "--k", "6", "--objective", "blym", "--mode", mode});
    EXPECT_EQ(j["min_weight"], "43/56");
    ASSERT_EQ(j["optima"].size(), 4U);
    std::vector<std::pair<std::string, std::string>> pairs;
    for (const auto& o : j["optima"]) pairs.emplace_back(o["m"], o["sizeB"]);
    EXPECT_EQ(pairs, (std::vector<std::pair<std::string, std::string>>{
                         {"10", "23"}, {"11", "21"}, {"15", "13"}, {"16", "11"}}));
    EXPECT_EQ(j["canonical"], 3);
  }
}

TEST(CliMinimize, WeightSources) {
  const Json a = run_json({"minimize", "--n", "8", "--k", "6", "--alpha", "2", "--beta", "1"});
  EXPECT_EQ(a["lambda"], "1/2");
  const Json b = run_json({"minimize", "--n", "8", "--k", "6", "--lambda", "1/2"});
  EXPECT_EQ(a["optima"], b["optima"]);
  const Json s = run_json({"minimize", "--n", "8", "--k", "3", "--objective", "size"});
  EXPECT_EQ(s["min_weight"], "25/1");
  const Json p = run_json({"minimize", "--n", "8", "--k", "6", "--lambda", "3", "--mode", "msfa"});
  EXPECT_EQ(p["optima"].back()["m"], "28");
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "6"}).code, 2);
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "6", "--lambda", "1", "--objective", "size"}).code, 2);
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "6", "--alpha", "1"}).code, 2);
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "6", "--lambda", "0"}).code, 2);
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "6", "--lambda", "1/0"}).code, 2);
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "8", "--lambda", "1"}).code, 2);
  EXPECT_EQ(run({"minimize", "--n", "8", "--k", "6", "--lambda", "1", "--mode", "best"}).code, 2);
}

TEST(CliMinimize, TextFormat) {
  const auto r = run({"minimize", "--n", "8", "--k", "6", "--lambda", "1/2", "--format", "text"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("* (7,6,4,3,2,0) |A|=16 |B|=11"), std::string::npos);
}

TEST(CliTable, SizeRowsAndSymmetry) {
  const auto r = run({"table", "--n-min", "8", "--n-max", "8", "--quantity", "size"});
  ASSERT_EQ(r.code, 0);
  const auto ls = lines(r.out);
  ASSERT_EQ(ls.size(), 9U);
  EXPECT_EQ(ls[0], "n\tk\tsize");
  EXPECT_EQ(ls[1], "8\t1\t");
  EXPECT_EQ(ls[3], "8\t3\t25");
  EXPECT_EQ(ls[6], "8\t6\t25");
  EXPECT_EQ(ls[8], "8\t8\t");
}

TEST(CliTable, JsonBlym) {
  const Json j = run_json({"table", "--n-min", "7", "--n-max", "8", "--k-min", "6", "--k-max", "6", "--quantity",
                           "blym", "--format", "json"});
  ASSERT_EQ(j.size(), 2U);
  EXPECT_EQ(j[1]["blym"], "43/56");
  EXPECT_EQ(j[0]["k"], 6);
  EXPECT_EQ(run({"table", "--n-min", "5", "--n-max", "4", "--quantity", "size"}).code, 2);
}

TEST(CliTable, BlymModeDefaultsToMsfa) {
  using flatchain::Mode;
  const auto def = lines(run({"table", "--n-min", "20", "--n-max", "20", "--k-min", "2", "--k-max", "2",
                              "--quantity", "blym"}).out);
  const auto fsfa = lines(run({"table", "--n-min", "20", "--n-max", "20", "--k-min", "2", "--k-max", "2",
                               "--quantity", "blym", "--mode", "fsfa"}).out);
  ASSERT_EQ(def.size(), 2U);
  ASSERT_EQ(fsfa.size(), 2U);
  EXPECT_EQ(def[1], "20\t2\t" + flatchain::to_string(flatchain::blym_min(20, 2, Mode::msfa)));
  EXPECT_EQ(fsfa[1], "20\t2\t" + flatchain::to_string(flatchain::blym_min(20, 2, Mode::fsfa)));
  EXPECT_NE(def[1], fsfa[1]);
}

TEST(CliVerify, SuitesPass) {
  for (const char* suite : {"shadows", "optima", "maximality", "flat", "all"}) {
    const auto r = run({"verify", "--suite", suite, "--n-max", "5"});
    EXPECT_EQ(r.code, 0) << suite << r.out;
    const auto ls = lines(r.out);
    ASSERT_GE(ls.size(), 2U);
    EXPECT_EQ(ls.front(), "suite\tparams\tresult\tdetail");
    EXPECT_EQ(ls.back(), "PASS");
  }
  const Json j = run_json({"verify", "--suite", "optima", "--n-max", "5", "--format", "json"});
  EXPECT_EQ(j["pass"], true);
  EXPECT_FALSE(j["checks"].empty());
}

TEST(CliVerify, CapsAndErrors) {
  const auto r = run({"verify", "--suite", "flat", "--n-max", "7"});
  EXPECT_EQ(r.code, 3);
  EXPECT_TRUE(r.out.empty());
  EXPECT_EQ(run({"verify", "--suite", "bogus", "--n-max", "4"}).code, 2);
  EXPECT_EQ(run({"verify", "--n-min", "5", "--n-max", "4"}).code, 2);
  ::setenv("FLATCHAIN_CAP", "10", 1);
  const auto c = run({"verify", "--suite", "maximality", "--n-max", "6"});
  ::unsetenv("FLATCHAIN_CAP");
  EXPECT_EQ(c.code, 3);
}

TEST(CliVerify, DeterministicForSeed) {
  const auto a = run({"verify", "--suite", "shadows", "--n-max", "6", "--seed", "5"});
  const auto b = run({"verify", "--suite", "shadows", "--n-max", "6", "--seed", "5"});
  EXPECT_EQ(a.out, b.out);
}

TEST(CliSmallCommands, CascadeRankUnrank) {
  const Json c = run_json({"cascade", "--m", "16", "--k", "6"});
  EXPECT_EQ(c["a"], Json::parse("[7,6,4,3,2,0]"));
  EXPECT_EQ(c["shadow"], "45");
  const Json r = run_json({"rank", "--n", "8", "--set", "{3,4,5,6,7,8}"});
  EXPECT_EQ(r["rank"], "27");
  const Json u = run_json({"unrank", "--r", "2", "--k", "2", "--n", "4"});
  EXPECT_EQ(u["set"], Json::parse("[2,3]"));
  EXPECT_EQ(run({"unrank", "--r", "6", "--k", "2", "--n", "4"}).code, 2);
  EXPECT_EQ(run({"rank", "--n", "4", "--set", "{3,1}"}).code, 2);
}

TEST(CliProbe, Findings) {
  const Json one = run_json({"probe", "--n", "4", "--k", "2", "--m", "3"});
  EXPECT_EQ(one["finding"], "none found");
  const Json all = run_json({"probe", "--n", "4"});
  EXPECT_EQ(all["flat_theorem"]["pass"], true);
  EXPECT_EQ(all["flat_theorem"]["antichains"], "168");
  for (const auto& p : all["probes"]) EXPECT_EQ(p["finding"], "none found");
  EXPECT_EQ(run({"probe", "--n", "7"}).code, 3);
  EXPECT_EQ(run({"probe", "--n", "4", "--k", "2", "--m", "2"}).code, 2);
}

TEST(CliJson, RoundTripIsByteIdentical) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"construct", "--n", "8", "--k", "6", "--m", "16", "--list"},
           {"minimize", "--n", "8", "--k", "6", "--objective", "blym"},
           {"table", "--n-min", "4", "--n-max", "6", "--quantity", "volume", "--format", "json"},
           {"probe", "--n", "3"}}) {
    const auto r = run(args);
    ASSERT_EQ(r.code, 0);
    EXPECT_EQ(Json::parse(r.out).dump(2) + "\n", r.out);
  }
}

TEST(CliHelp, ExitsZero) {
  const auto r = run({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("minimize"), std::string::npos);
}
