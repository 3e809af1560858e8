#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "fairdiv/cli.hpp"
#include "fairdiv/generators.hpp"
#include "fairdiv/instance_io.hpp"
#include "json.hpp"

namespace fairdiv {
namespace {

using Json = nlohmann::ordered_json;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  args.insert(args.begin(), "fairdiv");
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("fairdiv_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path, std::ios::binary) << text;
    return path.string();
  }

  std::string example4_path() { return write("example4.json", serialize_instance(gen_example4())); }

  std::filesystem::path dir_;
};

TEST_F(CliTest, RunRoundRobinExample4BothOrderings) {
  const std::string path = example4_path();
  const CliRun forward = cli({"run", "--mechanism", "round_robin", "--instance", path,
                              "--ordering", "1,2,3,4"});
  ASSERT_EQ(forward.code, kExitOk) << forward.err;
  EXPECT_EQ(Json::parse(forward.out)["bundles"][0], Json::parse("[1,5]"));

  const CliRun backward = cli({"run", "--mechanism", "round_robin", "--instance", path,
                               "--ordering", "4,3,2,1"});
  ASSERT_EQ(backward.code, kExitOk);
  EXPECT_EQ(Json::parse(backward.out)["bundles"][0], Json::parse("[4]"));
  EXPECT_EQ(Json::parse(backward.out)["ordering"], Json::parse("[4,3,2,1]"));
}

TEST_F(CliTest, RunOutputRoundTrips) {
  const std::string path = example4_path();
  const CliRun r = cli({"run", "--mechanism", "matching_pef1", "--instance", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(serialize_run_result(parse_run_result(r.out)), r.out);
}

TEST_F(CliTest, RunWithoutGoods) {
  const std::string path = write("empty.json", R"({"m": 0, "utilities": [[], []]})");
  const CliRun r = cli({"run", "--mechanism", "envy_cycle", "--instance", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["bundles"], Json::parse("[[],[]]"));
}

TEST_F(CliTest, InputErrorsExitTwo) {
  const std::string path = example4_path();
  const CliRun bad_ordering = cli({"run", "--mechanism", "round_robin", "--instance", path,
                                   "--ordering", "1,1,2,3"});
  EXPECT_EQ(bad_ordering.code, kExitError);
  EXPECT_NE(bad_ordering.err.find("error: input:"), std::string::npos);

  const CliRun bad_mech = cli({"run", "--mechanism", "nope", "--instance", path});
  EXPECT_EQ(bad_mech.code, kExitError);

  const CliRun two_agent_only = cli({"run", "--mechanism", "adjusted_winner_modified",
                                     "--instance", path});
  EXPECT_EQ(two_agent_only.code, kExitError);

  const std::string floats = write("floats.json", R"({"m": 1, "utilities": [[0.5]]})");
  EXPECT_EQ(cli({"run", "--mechanism", "round_robin", "--instance", floats}).code,
            kExitError);
  EXPECT_EQ(cli({"run", "--mechanism", "round_robin", "--instance",
                 (dir_ / "missing.json").string()})
                .code,
            kExitError);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(cli({"gen", "--family", "ec_worst", "--n", "3", "--m", "1"}).code, kExitError);
}

TEST_F(CliTest, DecimalAndFractionUtilitiesAreExact) {
  const std::string path =
      write("decimal.json", R"({"m": 2, "utilities": [["0.1", "1/3"], [2, "0.25"]]})");
  const CliRun r = cli({"run", "--mechanism", "round_robin", "--instance", path});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["bundles"], Json::parse("[[2],[1]]"));
  EXPECT_EQ(doc["utilities"], Json::parse(R"(["1/3", "2"])"));
}

TEST_F(CliTest, AuditRoundRobinExample4RequirePef1Fails) {
  const std::string path = example4_path();
  const CliRun r = cli({"audit", "--mechanism", "round_robin", "--instance", path,
                        "--checks", "pef_degree", "--require-pef1", "--no-timing"});
  EXPECT_EQ(r.code, kExitCheckFailed) << r.err;
  const Json doc = Json::parse(r.out);
  EXPECT_EQ(doc["degree"]["value"], 2);
  EXPECT_EQ(doc["all_pass"], false);
  EXPECT_EQ(doc["orderings_checked"], 24);

  const CliRun relaxed = cli({"audit", "--mechanism", "round_robin", "--instance", path,
                              "--checks", "pef_degree,ef1", "--no-timing"});
  EXPECT_EQ(relaxed.code, kExitOk);
}

TEST_F(CliTest, AuditMatchingPef1OnRandomInstances) {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    const std::size_t n = 2 + seed % 3;
    const std::string path =
        write("rand.json", serialize_instance(gen_random(n, seed % 9, seed, 10)));
    const CliRun r = cli({"audit", "--mechanism", "matching_pef1", "--instance", path,
                          "--checks", "ef1,pef_degree", "--require-pef1"});
    EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  }
}

TEST_F(CliTest, AuditScaleWithUnitScalarsPasses) {
  const std::string path = example4_path();
  for (const char* mech : {"round_robin", "envy_cycle", "matching_pef1"}) {
    const CliRun r = cli({"audit", "--mechanism", mech, "--instance", path, "--checks",
                          "scale", "--scalars", "1,1,1,1"});
    EXPECT_EQ(r.code, kExitOk) << mech << r.err;
    EXPECT_EQ(Json::parse(r.out)["checks"]["scale"]["pass"], true);
  }
}

TEST_F(CliTest, AuditRejectsUnknownCheck) {
  const CliRun r = cli({"audit", "--mechanism", "round_robin", "--instance",
                        example4_path(), "--checks", "efx"});
  EXPECT_EQ(r.code, kExitError);
}

TEST_F(CliTest, ResourceCapReportsResourceError) {
  const std::string path = example4_path();
  ::setenv("FAIRDIV_ENUM_CAP", "10", 1);
  const CliRun r = cli({"audit", "--mechanism", "round_robin", "--instance", path,
                        "--checks", "po"});
  ::unsetenv("FAIRDIV_ENUM_CAP");
  EXPECT_EQ(r.code, kExitError);
  EXPECT_NE(r.err.find("error: resource:"), std::string::npos) << r.err;
}

TEST_F(CliTest, GenExample4AndEcWorst) {
  const CliRun e4 = cli({"gen", "--family", "example4"});
  ASSERT_EQ(e4.code, kExitOk);
  EXPECT_EQ(parse_instance(e4.out), gen_example4());

  const CliRun ec = cli({"gen", "--family", "ec_worst", "--n", "2", "--m", "4"});
  ASSERT_EQ(ec.code, kExitOk);
  EXPECT_EQ(Json::parse(ec.out)["utilities"][1], Json::parse(R"(["0","0","0","0"])"));
}

TEST_F(CliTest, GenIsByteStableAndRoundTrips) {
  const std::vector<std::string> args{"gen", "--family", "random", "--n", "3",
                                      "--m", "5", "--seed", "7"};
  const CliRun first = cli(args);
  const CliRun second = cli(args);
  ASSERT_EQ(first.code, kExitOk);
  EXPECT_EQ(first.out, second.out);
  EXPECT_EQ(serialize_instance(parse_instance(first.out)), first.out);

  const std::string out_path = (dir_ / "gen.json").string();
  ASSERT_EQ(cli({"gen", "--family", "table1_n5", "--out", out_path}).code, kExitOk);
  EXPECT_EQ(parse_instance(read_text_file(out_path)), gen_rr_log_lower_bound(5, 3));
}

TEST_F(CliTest, SweepHeaderOnlyForZeroCount) {
  const CliRun r = cli({"sweep", "--mechanism", "round_robin", "--count", "0"});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.out, std::string(kSweepHeader) + "\n");
}

TEST_F(CliTest, SweepIsDeterministicAcrossJobCounts) {
  const std::vector<std::string> base{"sweep", "--mechanism", "round_robin", "--count", "30",
                                      "--n", "3", "--m", "6", "--seed", "11", "--no-timing"};
  auto parallel = base;
  parallel.insert(parallel.end(), {"--jobs", "4"});
  const CliRun a = cli(base);
  const CliRun b = cli(parallel);
  ASSERT_EQ(a.code, kExitOk);
  EXPECT_EQ(a.out, b.out);

  std::istringstream lines(a.out);
  std::string line;
  std::getline(lines, line);
  std::size_t rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    std::vector<std::string> cells;
    std::stringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, ',')) cells.push_back(cell);
    ASSERT_GE(cells.size(), 4u);
    EXPECT_LE(std::stoul(cells[3]), 1u) << line;
  }
  EXPECT_EQ(rows, 30u);
}

TEST_F(CliTest, SweepWithFixturesFindsLogLowerBound) {
  const CliRun r = cli({"sweep", "--mechanism", "round_robin", "--count", "5", "--n", "4",
                        "--m", "8", "--with-fixtures", "--no-timing"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::istringstream lines(r.out);
  std::string line;
  std::getline(lines, line);
  bool found = false;
  while (std::getline(lines, line)) {
    std::stringstream fields(line);
    std::string cell;
    for (int i = 0; i < 4; ++i) std::getline(fields, cell, ',');
    if (!cell.empty() && std::stoul(cell) >= 2) found = true;
  }
  EXPECT_TRUE(found) << r.out;
}

}  // namespace
}  // namespace fairdiv
