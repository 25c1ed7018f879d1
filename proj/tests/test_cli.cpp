#include "cli.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using masl::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result cli(std::vector<std::string> args) {
  args.insert(args.begin(), "masl");
  std::ostringstream out, err;
  int code = masl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

const std::string pd = MASL_DATA_DIR "/pd.json";

std::string temp_path(const char* name) { return ::testing::TempDir() + name; }

}  // namespace

TEST(Cli, CheckExitCodes) {
  EXPECT_EQ(cli({"check", "--game", pd, "--formula", "[(d,d)] u1=1", "--state", "c,c"}).code, 0);
  EXPECT_EQ(cli({"check", "--game", pd, "--formula", "u1=1", "--state", "c,c"}).code, 1);
  auto r = cli({"check", "--game", pd, "--property", "nashHere"});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["extension"], json({"d,d"}));
  EXPECT_EQ(cli({"check", "--game", pd, "-p", "weakDominance", "--player", "1", "--strategy", "d", "-s", "c,d"}).code, 0);
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(cli({}).code, 2);
  EXPECT_EQ(cli({"frobnicate"}).code, 2);
  EXPECT_EQ(cli({"check", "--formula", "T"}).code, 2);
  EXPECT_EQ(cli({"check", "--game", pd}).code, 2);
  EXPECT_EQ(cli({"check", "--game", "/nope.json", "--formula", "T"}).code, 2);
  EXPECT_EQ(cli({"check", "--game", pd, "--formula", "T", "--state", "x,y"}).code, 2);
  auto r = cli({"check", "--game", pd, "--formula", "u1=1 &"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("1:7"), std::string::npos) << r.err;
  EXPECT_EQ(cli({"demo", "nope"}).code, 2);
  EXPECT_EQ(cli({"lift", "--game", pd, "--confused", "2"}).code, 2);
  EXPECT_EQ(cli({"--help"}).code, 0);
}

TEST(Cli, ParsePrintsAst) {
  auto r = cli({"parse", "--game", pd, "--formula", "[(c,??)] u2=3"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["rendered"], "[(c,??)] u2=3");
  EXPECT_EQ(j["ast"]["type"], "box");
  EXPECT_EQ(j["ast"]["sub"]["player"], 2);
  r = cli({"parse", "--game", pd, "--program", "(c,d);?T"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["ast"]["type"], "seq");
}

TEST(Cli, Nash) {
  auto r = cli({"nash", "--game", pd});
  EXPECT_EQ(r.code, 0);
  auto j = json::parse(r.out);
  EXPECT_EQ(j["oracle"], json({"d,d"}));
  EXPECT_TRUE(j["agree"].get<bool>());
}

TEST(Cli, Voting) {
  auto r = cli({"voting", "audit", "--spec", MASL_DATA_DIR "/vote3tb.json"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = json::parse(r.out);
  EXPECT_FALSE(j["strategyProof"].get<bool>());
  auto path = temp_path("vote3.game.json");
  EXPECT_EQ(cli({"voting", "game", "--spec", MASL_DATA_DIR "/vote3.json", "-o", path}).code, 0);
  r = cli({"check", "--game", path, "-p", "nashHere", "-s", "a,b,c"});
  EXPECT_EQ(r.code, 0) << r.err;
  std::remove(path.c_str());
}

TEST(Cli, CoalitionLogic) {
  auto r = cli({"cl", "translate", "--game", pd, "--formula", "[C {2}] u1=1"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(json::parse(r.out)["translation"], "[(??,c)] u1=1 | [(??,d)] u1=1");
  r = cli({"cl", "check", "--game", pd, "--formula", "[C {2}] u2=3", "--state", "c,c"});
  EXPECT_EQ(r.code, 1);
  EXPECT_TRUE(json::parse(r.out)["agree"].get<bool>());
}

TEST(Cli, LiftAndEcheck) {
  auto path = temp_path("fig5.model.json");
  ASSERT_EQ(cli({"lift", "--game", pd, "--restrict", "c;c,d", "--confused", "2", "-o", path}).code, 0);
  EXPECT_EQ(cli({"echeck", "--model", path, "-p", "dictator", "--player", "2", "--world", "G':c,d"}).code, 0);
  EXPECT_EQ(cli({"echeck", "--model", path, "-p", "knowingDictator", "--player", "2", "--world", "G':c,d"}).code, 1);
  EXPECT_EQ(cli({"echeck", "--model", path, "-f", "[ag1] T", "--world", "c,d"}).code, 2);
  std::remove(path.c_str());
}

TEST(Cli, Axioms) {
  auto r = cli({"axioms", "--game", pd, "--epistemic"});
  EXPECT_EQ(r.code, 0) << r.out;
  auto j = json::parse(r.out);
  EXPECT_EQ(j["vector"]["invalid"], 0);
  EXPECT_EQ(cli({"axioms"}).code, 2);
}

TEST(Cli, Demos) {
  for (const char* d : {"pd", "vote3", "vote3tb", "fig5"}) {
    auto r = cli({"demo", d});
    EXPECT_EQ(r.code, 0) << d << "\n" << r.out << r.err;
    EXPECT_EQ(r.out.find("FAIL"), std::string::npos) << d;
  }
}
