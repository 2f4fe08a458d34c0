#include "mrroute/cli.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "testutil.h"

namespace mrroute {
namespace {

namespace fs = std::filesystem;
using namespace mrroute::testing;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = RunCli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string ReadFile(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("mrroute_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
    SaveScenarioFile(ChainScenario(), Path("chain.json"));
    SaveScenarioFile(WithoutVehicle(ChainScenario(), kC), Path("chain_no_c.json"));
    SaveScenarioFile(DiamondScenario(), Path("diamond.json"));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST_F(CliTest, GenWritesScenario) {
  const std::vector<std::string> cmd = {"gen",   "--seed",   "7",  "--vehicles", "30",  "--area",
                                        "1000", "1000",     "--range", "200",   "--radios", "1",
                                        "--freqs", "1",     "--bw",  "2",       "10",  "--out",
                                        Path("s.json")};
  Result r = Invoke(cmd);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("30 vehicles"), std::string::npos);
  const std::string first = ReadFile(Path("s.json"));
  EXPECT_EQ(LoadScenario(first).vehicles.size(), 30u);

  r = Invoke(cmd);
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("--force"), std::string::npos);

  std::vector<std::string> forced = cmd;
  forced.push_back("--force");
  ASSERT_EQ(Invoke(forced).code, 0);
  EXPECT_EQ(ReadFile(Path("s.json")), first);
}

TEST_F(CliTest, GenRejectsBadFlags) {
  EXPECT_EQ(Invoke({"gen", "--vehicles", "0", "--out", Path("x.json")}).code, 2);
  EXPECT_EQ(Invoke({"gen", "--bw", "5", "2", "--out", Path("x.json")}).code, 2);
  EXPECT_EQ(Invoke({"gen", "--freqs", "a,b", "--out", Path("x.json")}).code, 2);
  EXPECT_EQ(Invoke({"gen"}).code, 2);
  EXPECT_EQ(Invoke({}).code, 2);
  EXPECT_EQ(Invoke({"frobnicate"}).code, 2);
  EXPECT_FALSE(fs::exists(Path("x.json")));
}

TEST_F(CliTest, GenMultiFrequency) {
  ASSERT_EQ(Invoke({"gen", "--radios", "2", "--freqs", "1,2,3", "--out", Path("m.json")}).code, 0);
  const Scenario s = LoadScenarioFile(Path("m.json"));
  EXPECT_EQ(s.vehicles[0].radios.size(), 2u);
}

TEST_F(CliTest, RouteChain) {
  for (const char* metric : {"distance", "bandwidth"}) {
    const Result r = Invoke({"route", "--scenario", Path("chain.json"), "--src", "1", "--dst", "2",
                          "--metric", metric});
    ASSERT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1→3→2");
    EXPECT_NE(r.out.find("hops=2 total_distance=300.0000"), std::string::npos);
    EXPECT_NE(r.out.find("1.r2→3.r6 3.r5→2.r3"), std::string::npos) << r.out;
  }
}

TEST_F(CliTest, RouteDiamondBandwidth) {
  const Result r = Invoke({"route", "--scenario", Path("diamond.json"), "--src", "1", "--dst", "4",
                        "--metric", "bandwidth"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "1→3→4");
  EXPECT_NE(r.out.find("avg_bandwidth=10.0000"), std::string::npos);
  EXPECT_NE(r.out.find("p=15.8114"), std::string::npos);
}

TEST_F(CliTest, RouteNoRoute) {
  const Result r = Invoke({"route", "--scenario", Path("chain_no_c.json"), "--src", "1", "--dst", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "NO ROUTE\n");
}

TEST_F(CliTest, RouteBadInput) {
  EXPECT_EQ(Invoke({"route", "--scenario", Path("chain.json"), "--src", "1", "--dst", "9"}).code, 2);
  EXPECT_EQ(Invoke({"route", "--scenario", Path("chain.json"), "--src", "1", "--dst", "2",
                 "--metric", "hops"})
                .code,
            2);
  EXPECT_EQ(Invoke({"route", "--scenario", Path("missing.json"), "--src", "1", "--dst", "2"}).code,
            2);
  std::ofstream(Path("bad.json")) << R"({"area": {"width": 10, "height": 10}, "comm_range": 5,
      "vehicles": [{"id": 1, "x": 1, "y": 1, "radios": [{"id": 1, "freq": 1, "bw": -3}]}]})";
  const Result r = Invoke({"route", "--scenario", Path("bad.json"), "--src", "1", "--dst", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("bandwidth > 0"), std::string::npos);
}

TEST_F(CliTest, CompareDiamond) {
  const Result r = Invoke({"compare", "--scenario", Path("diamond.json"), "--src", "1", "--dst", "4",
                        "--csv", Path("cmp.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("delta avg_bw: +4.0000"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("p(bandwidth) <= p(distance): yes"), std::string::npos);
  EXPECT_EQ(ReadFile(Path("cmp.csv")),
            "round,seed,metric,found,hops,total_distance,avg_bandwidth,p_value\n"
            "0,0,distance,true,2,300.0000,6.0000,25.0000\n"
            "0,0,bandwidth,true,2,316.2278,10.0000,15.8114\n");
}

TEST_F(CliTest, CompareChainAndNoRoute) {
  Result r = Invoke({"compare", "--scenario", Path("chain.json"), "--src", "1", "--dst", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("distance  1→3→2"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("bandwidth 1→3→2"), std::string::npos) << r.out;
  r = Invoke({"compare", "--scenario", Path("chain_no_c.json"), "--src", "1", "--dst", "2"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("NO ROUTE"), std::string::npos);
}

TEST_F(CliTest, SweepCsvReproducible) {
  const std::vector<std::string> cmd = {"sweep", "--rounds", "5", "--seed", "100",
                                        "--csv", Path("a.csv")};
  const Result r = Invoke(cmd);
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("mean avg_bandwidth"), std::string::npos);
  const std::string csv = ReadFile(Path("a.csv"));
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "round,seed,metric,found,hops,total_distance,avg_bandwidth,p_value");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 11);
  EXPECT_EQ(csv.find('\r'), std::string::npos);
  ASSERT_EQ(Invoke(cmd).code, 0);
  EXPECT_EQ(ReadFile(Path("a.csv")), csv);
}

TEST_F(CliTest, SweepToStdout) {
  const Result r = Invoke({"sweep", "--rounds", "2"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("round,seed,metric", 0), 0u);
  EXPECT_NE(r.err.find("mean avg_bandwidth"), std::string::npos);
}

TEST_F(CliTest, SweepFixedScenarioMatchesCompare) {
  const Result r = Invoke({"sweep", "--rounds", "1", "--scenario", Path("diamond.json"), "--src", "1",
                        "--dst", "4", "--seed", "0"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out,
            "round,seed,metric,found,hops,total_distance,avg_bandwidth,p_value\n"
            "0,0,distance,true,2,300.0000,6.0000,25.0000\n"
            "0,0,bandwidth,true,2,316.2278,10.0000,15.8114\n");
}

TEST_F(CliTest, ValidateFixtures) {
  for (const char* file : {"chain.json", "diamond.json"}) {
    const Result r = Invoke({"validate", "--scenario", Path(file)});
    ASSERT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_NE(r.out.find("distance match rate: 100.00%"), std::string::npos);
  }
  EXPECT_NE(Invoke({"validate", "--scenario", Path("chain.json")}).out.find("bandwidth match rate: 100.00%"),
            std::string::npos);
  // 9 of 12 diamond pairs: the ratio search stops early on three of them.
  EXPECT_NE(Invoke({"validate", "--scenario", Path("diamond.json")}).out.find("bandwidth match rate: 75.00%"),
            std::string::npos);
}

TEST_F(CliTest, ValidateBatch) {
  const Result r = Invoke({"validate", "--rounds", "5", "--seed", "3", "--vehicles", "8",
                        "--vehicles-max", "10", "--area", "500", "500"});
  ASSERT_EQ(r.code, 0) << r.out << r.err;
  EXPECT_NE(r.out.find("scenarios: 5"), std::string::npos);
  EXPECT_NE(r.out.find("distance match rate: 100.00%"), std::string::npos);
}

TEST_F(CliTest, ValidateRefusesLargeScenario) {
  ASSERT_EQ(Invoke({"gen", "--vehicles", "11", "--out", Path("big.json")}).code, 0);
  EXPECT_EQ(Invoke({"validate", "--scenario", Path("big.json")}).code, 2);
  EXPECT_EQ(Invoke({"validate", "--vehicles", "12"}).code, 2);
}

}  // namespace
}  // namespace mrroute
