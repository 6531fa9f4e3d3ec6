#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

#include "symspec/report.hpp"

namespace symspec {
namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run_cli(const std::string& args) {
  Run r;
  std::string cmd = std::string(SYMSPEC_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf;
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

TEST(Serialization, DecimalStrings) {
  EXPECT_EQ(to_json(Integer("123456789012345678901234567890")).get<std::string>(),
            "123456789012345678901234567890");
  EXPECT_EQ(to_json(Rational(3)).get<std::string>(), "3/1");
  EXPECT_EQ(to_json(Rational(-2, 6)).get<std::string>(), "-1/3");
}

TEST(Serialization, HeaderEmbedsConfig) {
  ReportConfig c;
  c.command = "hoffman";
  c.n = 6;
  c.t = 2;
  c.seed = 99;
  auto j = report_header(c);
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
  EXPECT_EQ(j["config"]["seed"], "99");
  EXPECT_EQ(j["config"]["n"], 6);
}

TEST(Table, SixToTen) {
  auto t = build_table(6, 10);
  EXPECT_EQ(t.ns.size(), 5u);
  EXPECT_EQ(t.cells.size(), 8u);
  EXPECT_TRUE(t.all_match());
  auto text = to_text(t);
  EXPECT_NE(text.find("-19072"), std::string::npos);
  EXPECT_EQ(text.find("collision"), std::string::npos);
  auto csv = to_csv(t);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "partition,n=6,n=7,n=8,n=9,n=10");
}

TEST(Table, CollisionRegimeFlagged) {
  auto t = build_table(5, 6);
  EXPECT_TRUE(t.collision[0]);
  EXPECT_FALSE(t.collision[1]);
  EXPECT_FALSE(t.cells[0][0].closed.has_value());
  auto j = to_json(t);
  EXPECT_EQ(j["rows"][0]["values"][0]["regime"], "collision regime");
  EXPECT_NE(to_text(t).find("collision regime"), std::string::npos);
  EXPECT_THROW(build_table(3, 6), InvalidArgument);
}

TEST(Bundle, EmptyRange) {
  ReportConfig c;
  c.command = "reproduce";
  auto b = reproduce_bundle(7, 6, c);
  EXPECT_TRUE(b.pass);
  EXPECT_TRUE(b.json["sections"].empty());
}

TEST(Bundle, SixToNineAllPass) {
  ReportConfig c;
  c.command = "reproduce";
  auto b = reproduce_bundle(6, 9, c);
  EXPECT_TRUE(b.pass);
  for (const auto& chk : b.json["checks"]) EXPECT_EQ(chk["status"], "pass") << chk["name"];
  EXPECT_EQ(b.json["sections"]["families"][2]["F4"]["enumerated"], "1810");
}

TEST(Cli, TableCommand) {
  auto r = run_cli("table --n-range 6..10");
  EXPECT_EQ(r.status, 0);
  // header plus 8 rows
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 9);
}

TEST(Cli, SpectrumVerify) {
  auto r = run_cli("spectrum --n 4 --t 2 --verify");
  EXPECT_EQ(r.status, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["verify"]["multiset_equal"], true);
}

TEST(Cli, Derangements) {
  auto r = run_cli("derangements --n 0");
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(Json::parse(r.out)["derangements"]["d"], "1");
  auto big = Json::parse(run_cli("derangements --n 30").out);
  EXPECT_EQ(big["derangements"]["d"], to_string(derangement(30)));
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("").status, 2);
  EXPECT_EQ(run_cli("table --n-range 6-9").status, 2);
  EXPECT_EQ(run_cli("search --n 9 --t 2").status, 2);
  EXPECT_EQ(run_cli("families --family X1 --n 8").status, 2);
  // The t = 2 family at n = 4 is not 2-intersecting.
  EXPECT_EQ(run_cli("families --family HM --n 4 --t 2 --verify-independence").status, 1);
  EXPECT_EQ(run_cli("families --family B --n 8 --verify-independence").status, 0);
}

TEST(Cli, FamiliesManifest) {
  auto j = Json::parse(run_cli("families --family F2 --n 8 --verify-independence").out);
  EXPECT_EQ(j["size"], "309");
  EXPECT_EQ(j["formula_size"], "309");
  EXPECT_EQ(j["predicates_checked"][0]["holds"], true);
  auto text = run_cli("families --family 2coset --n 4 --format text").out;
  EXPECT_EQ(text, "id\n(3 4)\n");
}

TEST(Cli, SearchAndWopt) {
  auto s = Json::parse(run_cli("search --n 4 --t 2 --exact").out);
  EXPECT_EQ(s["result"]["independence_number"], "8");
  EXPECT_EQ(s["status"], "pass");
  auto w = Json::parse(run_cli("wopt --n 6 --t 2").out);
  EXPECT_EQ(w["result"]["bound"], "48/1");
  EXPECT_EQ(w["status"], "pass");
}

TEST(Cli, StabilityRecordsSeed) {
  auto a = run_cli("stability --n 5 --samples 20 --seed 5");
  EXPECT_EQ(a.status, 0);
  auto j = Json::parse(a.out);
  EXPECT_EQ(j["config"]["seed"], "5");
  EXPECT_EQ(j["violations"], 0);
}

TEST(Cli, ByteIdenticalOutput) {
  for (const char* args : {"reproduce --n-range 6..8", "stability --n 5 --samples 30 --seed 3",
                           "hoffman --n 7 --t 2", "chartable --n 6"}) {
    auto a = run_cli(args);
    auto b = run_cli(args);
    EXPECT_EQ(a.status, 0) << args;
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

TEST(Cli, ReproduceBundle) {
  auto r = run_cli("reproduce --n-range 5..8");
  EXPECT_EQ(r.status, 0);
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["status"], "pass");
  EXPECT_EQ(j["sections"]["table"]["rows"][0]["values"][0]["regime"], "collision regime");
  EXPECT_EQ(j["schema_version"], kSchemaVersion);
}

}  // namespace
}  // namespace symspec
