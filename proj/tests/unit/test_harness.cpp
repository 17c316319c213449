#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "mhtest/error.hpp"
#include "mhtest/harness.hpp"

using namespace mhtest;

namespace {

SettingSpec make(int setting, std::size_t d, std::size_t k, SizePair sizes, Pi0 pi0 = Pi0::none,
                 std::uint64_t seed = 1) {
  SettingSpec s;
  s.setting = setting;
  s.d = d;
  s.k = k;
  s.sizes = sizes;
  s.pi0 = pi0;
  s.master_seed = seed;
  return s;
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no mhtest::Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(Harness, DeterministicAcrossWorkers) {
  const SettingSpec spec = make(5, 5, 30, {5, 10});
  const std::vector<TestId> tests(std::begin(kAllTestIds), std::end(kAllTestIds));
  HarnessOptions o;
  o.variance_bootstrap_B = 20;
  o.pergroup_B = 20;
  o.workers = 1;
  const auto base = estimate_rejection_rate(spec, tests, 60, o);
  for (unsigned w : {2u, 8u}) {
    o.workers = w;
    const auto other = estimate_rejection_rate(spec, tests, 60, o);
    ASSERT_EQ(other.size(), base.size());
    for (std::size_t i = 0; i < base.size(); ++i) {
      EXPECT_EQ(other[i].rejections, base[i].rejections) << to_string(base[i].test) << " workers " << w;
      EXPECT_EQ(other[i].status, base[i].status);
    }
  }
}

TEST(Harness, ResultFields) {
  const SettingSpec spec = make(1, 5, 20, {10, 10});
  const std::vector<TestId> tests{TestId::test1, TestId::wk};
  const auto res = estimate_rejection_rate(spec, tests, 500);
  ASSERT_EQ(res.size(), 2u);
  for (const auto& r : res) {
    EXPECT_TRUE(r.ok());
    EXPECT_EQ(r.reps, 500);
    EXPECT_EQ(r.failures, 0);
    EXPECT_DOUBLE_EQ(r.rate, static_cast<double>(r.rejections) / 500.0);
    EXPECT_DOUBLE_EQ(r.se, std::sqrt(r.rate * (1 - r.rate) / 500.0));
  }
  EXPECT_EQ(res[0].test, TestId::test1);
  EXPECT_EQ(res[1].test, TestId::wk);
}

TEST(Harness, AbortsCellOnPrecondition) {
  const SettingSpec spec = make(1, 5, 10, {3, 3});
  const std::vector<TestId> tests{TestId::test1, TestId::test2};
  const auto res = estimate_rejection_rate(spec, tests, 50);
  EXPECT_FALSE(res[0].ok());
  EXPECT_TRUE(std::isnan(res[0].rate));
  EXPECT_NE(res[0].status.find("test1"), std::string::npos);
  EXPECT_TRUE(res[1].ok());
}

TEST(Harness, ArgumentErrors) {
  const SettingSpec spec = make(1, 5, 10, {5, 5});
  const std::vector<TestId> tests{TestId::test7};
  EXPECT_EQ(kind_of([&] { estimate_rejection_rate(spec, tests, 0); }), ErrorKind::InvalidReps);
  HarnessOptions o;
  o.variance_bootstrap_B = 1;
  EXPECT_EQ(kind_of([&] { estimate_rejection_rate(spec, tests, 10, o); }), ErrorKind::InvalidB);
  o = {};
  o.alpha = 1.5;
  EXPECT_EQ(kind_of([&] { estimate_rejection_rate(spec, tests, 10, o); }), ErrorKind::OutOfRange);
}

TEST(Harness, PowerGrowsWithK) {
  const std::vector<TestId> tests{TestId::test1};
  double last = 0.0;
  for (std::size_t k : {20u, 50u, 200u}) {
    const auto r = estimate_rejection_rate(make(3, 5, k, {30, 30}, Pi0::pi4, 11), tests, 1000);
    EXPECT_GE(r[0].rate, last) << "k " << k;
    last = r[0].rate;
  }
  EXPECT_GT(last, 0.98);
}

TEST(Harness, Setting5Power) {
  const std::vector<TestId> tests{TestId::test1};
  const auto r = estimate_rejection_rate(make(5, 5, 200, {10, 10}, Pi0::none, 2), tests, 1000);
  EXPECT_NEAR(r[0].rate, 0.999, 0.01);
}

TEST(Harness, StandardizedStatisticsMatchReplicates) {
  const SettingSpec spec = make(1, 5, 15, {8, 8}, Pi0::none, 4);
  const auto z = standardized_statistics(spec, Estimator::test2, 40);
  ASSERT_EQ(z.size(), 40u);
  for (std::uint64_t i : {0u, 17u, 39u}) {
    const Replicate rep = generate_replicate(spec, i);
    const TestReport r = run_global_test(rep.data, Estimator::test2);
    EXPECT_NEAR(z[i], r.z, 1e-12);
  }
}

TEST(Harness, CellSeedsDiffer) {
  const SettingSpec a = make(1, 5, 20, {5, 10});
  SettingSpec b = a;
  b.k = 50;
  SettingSpec c = a;
  c.sizes = {10, 5};
  EXPECT_NE(cell_seed(1, a), cell_seed(1, b));
  EXPECT_NE(cell_seed(1, a), cell_seed(1, c));
  EXPECT_NE(cell_seed(1, a), cell_seed(2, a));
  EXPECT_EQ(cell_seed(1, a), cell_seed(1, a));
}

TEST(Harness, ReferenceTables) {
  for (TableId t : kAllTables) {
    EXPECT_EQ(parse_table_id(to_string(t)), t);
    EXPECT_FALSE(reference_cells(t).empty());
  }
  EXPECT_EQ(kind_of([] { parse_table_id("tab99"); }), ErrorKind::UnknownTable);
  EXPECT_EQ(default_reps(TableId::powerCM), 1000);
  EXPECT_EQ(default_reps(TableId::tab2), 10000);
  bool found = false;
  for (const auto& c : reference_cells(TableId::tab8)) {
    if (c.d == 5 && c.k == 750 && c.n1 == 10 && c.n2 == 10) {
      EXPECT_DOUBLE_EQ(c.value, 0.411);
      found = true;
    }
  }
  EXPECT_TRUE(found);
}

TEST(Harness, ReproduceTableSmall) {
  TableRunOptions o;
  o.reps = 30;
  o.seed = 5;
  int progress = 0;
  o.progress = [&](const TableRow&) { ++progress; };
  const auto rows = reproduce_table(TableId::trv2, o);
  ASSERT_EQ(rows.size(), reference_cells(TableId::trv2).size());
  EXPECT_EQ(progress, static_cast<int>(rows.size()));
  for (const auto& row : rows) {
    EXPECT_EQ(row.result.reps, 30);
    EXPECT_EQ(row.spec.master_seed, cell_seed(5, row.spec));
    ASSERT_TRUE(row.reference.has_value());
  }

  std::ostringstream csv;
  write_table_csv(csv, rows);
  std::istringstream lines(csv.str());
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  EXPECT_EQ(header, "table,setting,d,k,n1,n2,pi0,test,rate,se,reps,failures,reference,wall_seconds,status");
  EXPECT_EQ(first.rfind("trv2,1,", 0), 0u);

  const auto doc = nlohmann::json::parse(table_sidecar_json("trv2", rows, o));
  EXPECT_EQ(doc["table"], "trv2");
  EXPECT_EQ(doc["seed"], 5);
  EXPECT_EQ(doc["reps"], 30);
  EXPECT_EQ(doc["rng_version"], kRngVersion);
  EXPECT_FALSE(doc["spec"]["cells"].empty());
}

TEST(Harness, ArtifactsOnDisk) {
  const auto dir = std::filesystem::temp_directory_path() / "mhtest_harness_test";
  std::filesystem::create_directories(dir);
  TableRow row{std::nullopt, make(1, 5, 10, {5, 5}), {}, std::nullopt};
  row.result.reps = 10;
  const std::vector<TableRow> rows{row};
  write_table_artifacts(dir / "out.csv", "custom", rows, {});
  EXPECT_TRUE(std::filesystem::exists(dir / "out.csv"));
  std::ifstream json(dir / "out.csv.json");
  EXPECT_EQ(nlohmann::json::parse(json)["table"], "custom");
  std::filesystem::remove_all(dir);
}

TEST(Harness, Benchmark) {
  const auto entries = benchmark_statistics(50, 5, {10, 10}, 20, 1, 3);
  ASSERT_EQ(entries.size(), 7u);
  double bootstrap = 0.0, others = 0.0;
  for (const auto& e : entries) {
    EXPECT_GT(e.mean_seconds, 0.0);
    if (e.statistic == "test7") bootstrap = e.median_seconds;
    else others = std::max(others, e.median_seconds);
  }
  EXPECT_GT(bootstrap, others);
}
