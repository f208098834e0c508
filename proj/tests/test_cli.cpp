#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "toricsym");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = toricsym::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

json payload(const Result& r) { return json::parse(r.out).at("payload"); }

}  // namespace

TEST(Cli, AnalyzeProjectiveSpace) {
  const Result r = run({"analyze", "--centers", ""});
  ASSERT_EQ(r.code, 0) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_EQ(doc.at("schema_version"), "1.0.0");
  EXPECT_EQ(doc.at("command"), "analyze");
  const json p = doc.at("payload");
  EXPECT_EQ(p.at("summary").at("n_symmetries"), 24);
  EXPECT_EQ(p.at("summary").at("n_nontrivial"), 0);
  for (const auto& s : p.at("symmetries")) EXPECT_TRUE(s.at("trivial").get<bool>());
  EXPECT_EQ(p.at("fan").at("rays").size(), 4u);
  EXPECT_EQ(p.at("anticanonical").at("text"), "4H");
}

TEST(Cli, AnalyzeClassA) {
  const Result r = run({"analyze", "--centers", "p123,l34,l24", "--stdout"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json p = payload(r);
  EXPECT_EQ(p.at("summary").at("n_nontrivial"), 1);
  EXPECT_EQ(p.at("chow").at("sr_relations").size(), 9u);
  EXPECT_EQ(p.at("chow").at("linear_relations").size(), 3u);
  EXPECT_EQ(p.at("ledger").at("basis"), json({"H", "E123", "F34", "F24"}));
  bool found = false;
  for (const auto& s : p.at("symmetries")) {
    if (s.at("trivial").get<bool>()) continue;
    found = true;
    EXPECT_EQ(s.at("matrix"), json({{0, 1, 0}, {1, 0, 0}, {1, 1, -1}}));
    // Column j is the image of the j-th curve basis vector in (d, a, b) form:
    // h -> 2h - e123 - f34 - f24.
    const json& m = s.at("curve_pushforward").at("matrix");
    EXPECT_EQ(m[0][0], 2);
    EXPECT_EQ(m[1][0], 1);
    EXPECT_EQ(m[2][0], 1);
    EXPECT_EQ(m[3][0], 1);
  }
  EXPECT_TRUE(found);
}

TEST(Cli, AnalyzePlane) {
  const Result r = run({"analyze", "--centers", "p12", "--dim", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(payload(r).at("summary").at("n_nontrivial"), 0);
  EXPECT_EQ(payload(r).at("space").at("rank"), 2);
}

TEST(Cli, OutputIsByteStable) {
  const Result a = run({"analyze", "--centers", "p124,p123,l34,l23,l14"});
  const Result b = run({"analyze", "--centers", "p124,p123,l34,l23,l14"});
  EXPECT_EQ(a.out, b.out);
  const Result c = run({"census", "--dim", "2", "--parallel", "1"});
  const Result d = run({"census", "--dim", "2", "--parallel", "3"});
  EXPECT_EQ(c.out, d.out);
}

TEST(Cli, WritesJsonFile) {
  const auto path = std::filesystem::temp_directory_path() / "toricsym_cli_test.json";
  const Result r = run({"analyze", "--centers", "p123", "--json", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const json doc = json::parse(in);
  EXPECT_EQ(doc.at("command"), "analyze");
  std::filesystem::remove(path);
}

TEST(Cli, ValidationErrorsExitTwo) {
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"analyze", "--centers", "p1234"},
           {"analyze", "--centers", "l34,p123"},
           {"analyze", "--centers", "p12", "--dim", "4"},
           {"analyze"},
           {"census", "--dedup", "maybe"},
           {"push", "--centers", "p123", "--beta", "1,0,0"},
           {"push", "--centers", "p123", "--beta", "1,x"},
           {"push", "--centers", "p123", "--beta", "1,0", "--symmetry", "99"},
           {"frobnicate"},
           {}}) {
    const Result r = run(args);
    EXPECT_EQ(r.code, 2) << (args.empty() ? "" : args[0]);
    EXPECT_FALSE(r.err.empty());
  }
}

TEST(Cli, HelpExitsZeroAndDocumentsSignConvention) {
  const Result r = run({"push", "--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("beta = d*h - sum a_i*e_i - sum b_j*f_j"), std::string::npos);
}

TEST(Cli, CensusPlane) {
  const Result r = run({"census", "--dim", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json p = payload(r);
  EXPECT_EQ(p.at("raw_count"), 8);
  EXPECT_EQ(p.at("orbit_count"), 4);
  EXPECT_EQ(p.at("nontrivial_orbit_count"), 1);
}

TEST(Cli, CensusWithoutDedup) {
  const Result r = run({"census", "--dim", "3", "--dedup", "off"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json p = payload(r);
  EXPECT_EQ(p.at("raw_count"), 31312);
  EXPECT_FALSE(p.contains("orbit_count"));
  EXPECT_FALSE(p.contains("records"));
}

TEST(Cli, PushClassC) {
  // beta = f34 - f23 in basis (h, e123, e124, f34, f23, f14).
  const Result r = run({"push", "--centers", "p124,p123,l34,l23,l14", "--beta", "0,0,0,-1,1,0", "--json"});
  ASSERT_EQ(r.code, 0) << r.err;
  const json p = payload(r);
  EXPECT_FALSE(p.at("symmetry").at("trivial").get<bool>());
  EXPECT_EQ(p.at("beta").at("text"), "f34 - f23");
  EXPECT_EQ(p.at("image").at("text"), "h - e123 - e124");
  EXPECT_EQ(p.at("gw_identity"), "GW^X_{g,f34 - f23} = GW^X_{g,h - e123 - e124}");
}

TEST(Cli, PushClassCSigma) {
  // sigma maps f23 - f14 to (e124 - f14) - (h - e123 - f34).
  const Result a = run({"analyze", "--centers", "p124,p123,l34,l23,l14"});
  const json syms = payload(a).at("symmetries");
  int sigma = -1;
  for (const auto& s : syms)
    if (s.at("matrix") == json({{1, -1, 0}, {0, -1, 0}, {0, 0, -1}})) sigma = s.at("index").get<int>();
  ASSERT_GE(sigma, 0);
  const Result r = run({"push", "--centers", "p124,p123,l34,l23,l14", "--beta", "0,0,0,0,-1,1", "--symmetry",
                        std::to_string(sigma)});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("beta' = -h + e123 + e124 + f34 - f14"), std::string::npos) << r.out;
}

TEST(Cli, PushClassD) {
  const Result r = run({"push", "--centers", "p123,p124,p134,p234,l12,l13,l14,l23,l24,l34", "--beta",
                        "1,0,0,0,0,0,0,0,0,0,0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("beta' = 3h - e123 - e124 - e134 - e234"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("GW^X_{g,h} = GW^X_{g,3h - e123 - e124 - e134 - e234}"), std::string::npos);
  EXPECT_NE(r.out.find("DT^X_{n,h} = DT^X_{n,3h - e123 - e124 - e134 - e234}"), std::string::npos);
}

TEST(Cli, PushIdentityFixesBeta) {
  const Result r = run({"push", "--centers", "p123,l34", "--beta", "3,1,2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("(trivial)"), std::string::npos);
  EXPECT_NE(r.out.find("beta  = 3h - e123 - 2f34"), std::string::npos);
  EXPECT_NE(r.out.find("beta' = 3h - e123 - 2f34"), std::string::npos);
}

TEST(Cli, NegativeLeadingBeta) {
  const Result r = run({"push", "--centers", "p123", "--beta", "-1,0"});
  EXPECT_EQ(r.code, 0) << r.err;
}
