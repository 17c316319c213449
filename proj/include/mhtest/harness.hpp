#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mhtest/classical.hpp"
#include "mhtest/decision.hpp"
#include "mhtest/reference_tables.hpp"
#include "mhtest/settings.hpp"
#include "mhtest/test_id.hpp"

namespace mhtest {

struct MCResult {
  TestId test = TestId::test1;
  std::int64_t rejections = 0;
  std::int64_t reps = 0;
  double rate = 0.0;
  /// sqrt(rate (1 - rate) / reps).
  double se = 0.0;
  /// Replicates on which the test could not be evaluated.
  std::int64_t failures = 0;
  /// Wall-clock time of the whole cell (all tests share the replicates).
  double wall_seconds = 0.0;
  /// "ok", or the reason the cell was aborted.
  std::string status = "ok";

  bool ok() const noexcept { return status == "ok"; }
};

struct HarnessOptions {
  double alpha = kDefaultAlpha;
  unsigned workers = 1;
  int variance_bootstrap_B = kDefaultVarianceBootstrapB;
  int pergroup_B = kDefaultPerGroupB;
  /// Null moments for the primed statistics, taken at pi_{1r}.
  MomentOptions moments;
};

/// Rejection rate of each requested test over `reps` replicates of the
/// setting. All tests see the same replicates. A test whose preconditions
/// fail on the spec's sample sizes, or on any replicate, is reported as
/// aborted with rate NaN. Results do not depend on `workers`.
std::vector<MCResult> estimate_rejection_rate(const SettingSpec& spec, std::span<const TestId> tests,
                                              std::int64_t reps, const HarnessOptions& options = {});

/// T_U / sqrt(var0_hat) for each replicate.
std::vector<double> standardized_statistics(const SettingSpec& spec, Estimator estimator, std::int64_t reps,
                                            const HarnessOptions& options = {});

/// Seed of one table cell, derived from the run seed and the cell's
/// coordinates so that every cell draws independent streams.
std::uint64_t cell_seed(std::uint64_t seed, const SettingSpec& spec);

struct TableRow {
  /// Empty for ad hoc settings.
  std::optional<TableId> table;
  SettingSpec spec;
  MCResult result;
  std::optional<double> reference;
};

struct TableRunOptions {
  /// 0 selects default_reps(table).
  std::int64_t reps = 0;
  std::uint64_t seed = 0;
  HarnessOptions harness;
  /// Called after each cell finishes.
  std::function<void(const TableRow&)> progress;
};

/// Re-runs every cell of a published table.
std::vector<TableRow> reproduce_table(TableId table, const TableRunOptions& options = {});

void write_table_csv(std::ostream& out, std::span<const TableRow> rows);
/// Writes `csv_path` and `csv_path` + ".json" (run metadata). `label` is a
/// table id or "custom".
void write_table_artifacts(const std::filesystem::path& csv_path, std::string_view label,
                           std::span<const TableRow> rows, const TableRunOptions& options);
std::string table_sidecar_json(std::string_view label, std::span<const TableRow> rows,
                               const TableRunOptions& options);

struct BenchmarkEntry {
  std::string statistic;
  /// Mean seconds per dataset.
  double mean_seconds = 0.0;
  /// Median over the timing rounds of the per-dataset mean.
  double median_seconds = 0.0;
};

/// Times T_U with each variance estimator on Setting 1 datasets.
/// Informational only.
std::vector<BenchmarkEntry> benchmark_statistics(std::size_t k, std::size_t d, SizePair sizes, std::int64_t reps,
                                                 std::uint64_t seed = 0, int rounds = 5);

}  // namespace mhtest
