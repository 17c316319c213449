#include <gtest/gtest.h>

#include <cstdlib>
#include <unistd.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "mhtest/cli.hpp"
#include "mhtest/counts.hpp"
#include "mhtest/settings.hpp"

using namespace mhtest;
using nlohmann::json;

namespace {

const std::filesystem::path kData = MHTEST_TEST_DATA_DIR;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string data(const char* name) { return (kData / name).string(); }

class TempDir {
 public:
  TempDir() : path_(std::filesystem::temp_directory_path() / ("mhtest_cli_" + std::to_string(::getpid()))) {
    std::filesystem::create_directories(path_);
  }
  ~TempDir() { std::filesystem::remove_all(path_); }
  std::filesystem::path operator/(const char* name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST(Cli, IdenticalPairsAreDegenerate) {
  const CliRun r = cli({"test", data("identical.csv"), "--estimator", "all", "--format", "json", "--seed", "3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  ASSERT_EQ(doc["reports"].size(), 7u);
  for (const auto& rep : doc["reports"]) {
    EXPECT_EQ(rep["p_value"], 1.0);
    EXPECT_TRUE(rep["degenerate_variance"].get<bool>());
    EXPECT_FALSE(rep["reject"].get<bool>());
  }
  EXPECT_TRUE(doc.contains("chisq_pooled"));
}

TEST(Cli, JsonReportIsSchemaStable) {
  const CliRun r = cli({"test", data("ages.csv"), "--estimator", "test1,test2,test3", "--format", "json", "--seed", "8"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  for (const char* key : {"tool_version", "seed", "estimators", "alpha", "reports", "chisq_pooled", "groups"}) {
    EXPECT_TRUE(doc.contains(key)) << key;
  }
  EXPECT_EQ(doc["k"], 71);
  EXPECT_EQ(doc["seed"], 8);
  EXPECT_EQ(doc["estimators"], json({"test1", "test2", "test3"}));
  for (const auto& rep : doc["reports"]) {
    const double p = rep["p_value"];
    EXPECT_GE(p, 0.0);
    EXPECT_LE(p, 1.0);
  }
  const double chi_p = doc["chisq_pooled"]["p_value"];
  EXPECT_GE(chi_p, 0.0);
  EXPECT_LE(chi_p, 1.0);
  EXPECT_EQ(doc["chisq_pooled"]["df"], 2);
}

TEST(Cli, HumanAndCsvFormats) {
  const CliRun h = cli({"test", data("ages.csv"), "--seed", "1"});
  ASSERT_EQ(h.code, kExitOk);
  EXPECT_NE(h.out.find("test1"), std::string::npos);
  EXPECT_NE(h.out.find("largest group contributions"), std::string::npos);
  EXPECT_NE(h.out.find("pooled chi-square"), std::string::npos);
  const CliRun c = cli({"test", data("ages.csv"), "--seed", "1", "--format", "csv", "--estimator", "test2"});
  ASSERT_EQ(c.code, kExitOk);
  EXPECT_EQ(c.out.rfind("estimator,statistic,variance,z,p_value,reject,degenerate_variance\ntest2,", 0), 0u);
}

TEST(Cli, SeedIsAnnouncedWhenOmitted) {
  const CliRun r = cli({"test", data("ages.csv"), "--estimator", "test7", "--B", "20", "--format", "json"});
  ASSERT_EQ(r.code, kExitOk);
  const auto pos = r.err.find("seed: ");
  ASSERT_NE(pos, std::string::npos);
  const std::uint64_t announced = std::stoull(r.err.substr(pos + 6));
  EXPECT_EQ(json::parse(r.out)["seed"].get<std::uint64_t>(), announced);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(cli({"test", data("bad_population.csv")}).code, kExitInputError);
  EXPECT_EQ(cli({"test", data("missing.csv")}).code, kExitInputError);
  EXPECT_EQ(cli({"test", data("ages.csv"), "--estimator", "test9"}).code, kExitInputError);
  EXPECT_EQ(cli({"test", data("ages.csv"), "--alpha", "1.5", "--seed", "1"}).code, kExitInputError);
  EXPECT_EQ(cli({"frobnicate"}).code, kExitInputError);
  EXPECT_EQ(cli({}).code, kExitInputError);
  EXPECT_EQ(cli({"--help"}).code, kExitOk);

  const CliRun small = cli({"test", data("small_group.csv"), "--seed", "1"});
  EXPECT_EQ(small.code, kExitPreconditionError);
  EXPECT_NE(small.err.find("south"), std::string::npos);
  EXPECT_EQ(cli({"test", data("small_group.csv"), "--seed", "1", "--estimator", "test2"}).code, kExitOk);

  EXPECT_EQ(cli({"simulate", "--setting", "1", "--reps", "0", "--seed", "1"}).code, kExitInputError);
  EXPECT_EQ(cli({"simulate", "--setting", "2", "--d", "20", "--seed", "1"}).code, kExitInputError);
  EXPECT_EQ(cli({"simulate", "--table", "tab99", "--seed", "1"}).code, kExitInputError);
  EXPECT_EQ(cli({"simulate", "--setting", "3", "--seed", "1", "--reps", "2"}).code, kExitInputError);
}

TEST(Cli, PerGroup) {
  const CliRun r = cli({"pergroup", data("identical.csv"), "--format", "json", "--seed", "2", "--B", "100"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const json doc = json::parse(r.out);
  EXPECT_FALSE(doc["minp_reject"].get<bool>());
  EXPECT_EQ(doc["degenerate_groups"], 3);
  for (const auto& g : doc["groups"]) EXPECT_TRUE(g["degenerate"].get<bool>());

  const CliRun a = cli({"pergroup", data("ages.csv"), "--format", "json", "--seed", "2", "--B", "200"});
  ASSERT_EQ(a.code, kExitOk);
  const json ages = json::parse(a.out);
  EXPECT_EQ(ages["B"], 200);
  for (const auto& g : ages["groups"]) {
    EXPECT_GE(g["p_bh"].get<double>(), g["p_raw"].get<double>());
    EXPECT_GE(g["p_bonferroni"].get<double>(), g["p_raw"].get<double>());
  }
  const CliRun h = cli({"pergroup", data("ages.csv"), "--seed", "2", "--B", "50"});
  EXPECT_NE(h.out.find("min-p rule"), std::string::npos);
}

TEST(Cli, PerGroupDefaultB) {
  const CliRun r = cli({"pergroup", data("identical.csv"), "--format", "json", "--seed", "2"});
  EXPECT_EQ(json::parse(r.out)["B"], 1000);
}

TEST(Cli, ExportedReplicateRoundTrips) {
  TempDir tmp;
  const auto file = tmp / "rep.csv";
  const CliRun r = cli({"simulate", "--setting", "3", "--pi0", "pi2", "--k", "12", "--sizes", "5,10", "--seed", "4",
                     "--export-replicate", "6", "--out", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  SettingSpec spec;
  spec.setting = 3;
  spec.pi0 = Pi0::pi2;
  spec.k = 12;
  spec.sizes = {5, 10};
  spec.master_seed = 4;
  EXPECT_EQ(read_counts_csv(file), generate_replicate(spec, 6).data);
  const CliRun t = cli({"test", file.string(), "--estimator", "all", "--format", "json", "--seed", "1"});
  EXPECT_EQ(t.code, kExitOk);
}

TEST(Cli, SimulateWritesArtifacts) {
  TempDir tmp;
  const auto file = tmp / "cell.csv";
  const CliRun r = cli({"simulate", "--setting", "5", "--k", "200", "--d", "5", "--sizes", "10,10", "--reps", "1000",
                     "--tests", "test1", "--seed", "6", "--out", file.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  std::ifstream csv(file);
  std::string header, line;
  std::getline(csv, header);
  std::getline(csv, line);
  EXPECT_EQ(line.rfind("custom,5,5,200,10,10,none,test1,", 0), 0u);
  std::stringstream fields(line);
  std::string field;
  for (int i = 0; i < 9; ++i) std::getline(fields, field, ',');
  EXPECT_NEAR(std::stod(field), 0.999, 0.01);
  std::ifstream sidecar(file.string() + ".json");
  const json doc = json::parse(sidecar);
  EXPECT_EQ(doc["seed"], 6);
  EXPECT_EQ(doc["reps"], 1000);
}

TEST(Cli, WorkersFromEnvironment) {
  ::setenv("MH_WORKERS", "3", 1);
  const CliRun a = cli({"simulate", "--setting", "1", "--k", "10", "--sizes", "5,5", "--reps", "50", "--seed", "2"});
  ::unsetenv("MH_WORKERS");
  const CliRun b = cli({"simulate", "--setting", "1", "--k", "10", "--sizes", "5,5", "--reps", "50", "--seed", "2"});
  ASSERT_EQ(a.code, kExitOk);
  auto strip_time = [](const std::string& s) {
    std::string out;
    std::istringstream in(s);
    std::string line;
    while (std::getline(in, line)) {
      // wall_seconds is the second-to-last column.
      const auto last = line.rfind(',');
      const auto prev = line.rfind(',', last - 1);
      out += line.substr(0, prev) + line.substr(last) + "\n";
    }
    return out;
  };
  EXPECT_EQ(strip_time(a.out), strip_time(b.out));
}

TEST(Cli, Benchmark) {
  const CliRun r = cli({"benchmark", "--k", "20", "--d", "5", "--sizes", "10,10", "--reps", "5", "--rounds", "2",
                     "--format", "json", "--seed", "1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(json::parse(r.out)["timings"].size(), 7u);
}
