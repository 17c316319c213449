#include "mhtest/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "mhtest/classical.hpp"
#include "mhtest/decision.hpp"
#include "mhtest/error.hpp"
#include "mhtest/harness.hpp"
#include "mhtest/ustat.hpp"
#include "mhtest/version.hpp"

namespace mhtest {

namespace {

using nlohmann::json;

enum class Format { json, csv, human };

struct CommonOptions {
  std::string format = "human";
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  double alpha = kDefaultAlpha;

  Format fmt() const {
    if (format == "json") return Format::json;
    if (format == "csv") return Format::csv;
    return Format::human;
  }
};

unsigned default_workers() {
  if (const char* env = std::getenv("MH_WORKERS")) {
    try {
      const long v = std::stol(env);
      if (v >= 1) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

void add_common(CLI::App* cmd, CommonOptions& o, bool with_alpha = true, bool with_format = true) {
  if (with_format) {
    cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv", "human"}));
  }
  cmd->add_option("--seed", o.seed, "Random seed; drawn from system entropy when omitted");
  cmd->add_option("--workers", o.workers, "Worker threads (default: MH_WORKERS or 1)")->check(CLI::PositiveNumber);
  if (with_alpha) cmd->add_option("--alpha", o.alpha, "Significance level");
}

// Resolves the seed, announcing it when it had to be drawn.
std::uint64_t resolve_seed(const CommonOptions& o, std::ostream& err) {
  if (o.seed) return *o.seed;
  std::random_device rd;
  const std::uint64_t seed = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  err << "seed: " << seed << '\n';
  return seed;
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) throw Error(ErrorKind::OutOfRange, "--alpha must lie in (0, 1)");
}

json header(std::string_view command, std::uint64_t seed, double alpha) {
  return {{"tool", "mhtest"},
          {"tool_version", tool_version()},
          {"command", command},
          {"seed", seed},
          {"alpha", alpha}};
}

// Non-finite values become null in JSON.
json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::vector<Estimator> parse_estimators(const std::string& spec) {
  if (spec == "all") return {std::begin(kAllEstimators), std::end(kAllEstimators)};
  std::vector<Estimator> out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto e = parse_estimator(item);
    if (!e) throw Error(ErrorKind::InvalidArgument, "unknown estimator '" + item + "'");
    if (std::find(out.begin(), out.end(), *e) == out.end()) out.push_back(*e);
  }
  if (out.empty()) throw Error(ErrorKind::InvalidArgument, "no estimator selected");
  return out;
}

SizePair parse_sizes(const std::string& text) {
  const auto comma = text.find(',');
  try {
    if (comma == std::string::npos) throw std::invalid_argument("");
    std::size_t used = 0;
    const long long a = std::stoll(text.substr(0, comma), &used);
    if (used != comma) throw std::invalid_argument("");
    const std::string rest = text.substr(comma + 1);
    const long long b = std::stoll(rest, &used);
    if (used != rest.size()) throw std::invalid_argument("");
    return {a, b};
  } catch (const std::exception&) {
    throw Error(ErrorKind::InvalidArgument, "--sizes expects n1,n2, got '" + text + "'");
  }
}

// ---- test -------------------------------------------------------------

struct TestCommand {
  CommonOptions common;
  std::string input;
  std::string estimators = "test1";
  int B = kDefaultVarianceBootstrapB;

  void setup(CLI::App* cmd) {
    cmd->add_option("input", input, "Grouped count CSV")->required();
    cmd->add_option("--estimator", estimators, "test1..test7, comma list, or 'all'");
    cmd->add_option("--B", B, "Bootstrap replications for test7");
    add_common(cmd, common);
  }

  int run(std::ostream& out, std::ostream& err) const {
    check_alpha(common.alpha);
    const auto selected = parse_estimators(estimators);
    const GroupedDataset ds = read_counts_csv(std::filesystem::path(input));
    const std::uint64_t seed = resolve_seed(common, err);

    std::vector<TestReport> reports;
    for (Estimator e : selected) reports.push_back(run_global_test(ds, e, common.alpha, seed, B, common.workers));
    const double chi = pooled_chi_square(ds);
    const double chi_p = pooled_chi_square_pvalue(ds);
    auto groups = group_statistics(ds);

    switch (common.fmt()) {
      case Format::json: {
        json doc = header("test", seed, common.alpha);
        doc["k"] = ds.k();
        doc["d"] = ds.dim();
        doc["statistic"] = aggregate_statistic(ds);
        doc["estimators"] = json::array();
        doc["reports"] = json::array();
        for (std::size_t i = 0; i < selected.size(); ++i) {
          const auto& r = reports[i];
          doc["estimators"].push_back(to_string(selected[i]));
          doc["reports"].push_back({{"estimator", to_string(selected[i])},
                                    {"statistic", r.statistic},
                                    {"variance", r.variance_estimate.value},
                                    {"variance_source", to_string(r.variance_estimate.source)},
                                    {"z", number(r.z)},
                                    {"p_value", r.p_value},
                                    {"reject", r.reject},
                                    {"degenerate_variance", r.degenerate_variance}});
        }
        doc["chisq_pooled"] = {{"statistic", chi}, {"df", ds.dim() - 1}, {"p_value", chi_p}, {"reject", chi_p <= common.alpha}};
        json g = json::array();
        for (const auto& s : groups) g.push_back({{"group", s.group_id}, {"t_u", s.t_u}});
        doc["groups"] = g;
        out << doc.dump(2) << '\n';
        break;
      }
      case Format::csv: {
        out << "estimator,statistic,variance,z,p_value,reject,degenerate_variance\n";
        out << std::setprecision(10);
        for (std::size_t i = 0; i < selected.size(); ++i) {
          const auto& r = reports[i];
          out << to_string(selected[i]) << ',' << r.statistic << ',' << r.variance_estimate.value << ',' << r.z << ','
              << r.p_value << ',' << (r.reject ? 1 : 0) << ',' << (r.degenerate_variance ? 1 : 0) << '\n';
        }
        out << "chisq_pooled," << chi << ",," << ',' << chi_p << ',' << (chi_p <= common.alpha ? 1 : 0) << ",0\n";
        break;
      }
      case Format::human: {
        out << "mhtest " << tool_version() << "  k=" << ds.k() << "  d=" << ds.dim() << "  alpha=" << common.alpha
            << "  seed=" << seed << '\n';
        out << "T_U = " << std::setprecision(6) << aggregate_statistic(ds) << "\n\n";
        out << std::left << std::setw(10) << "estimator" << std::setw(14) << "variance" << std::setw(12) << "z"
            << std::setw(12) << "p" << "decision\n";
        for (std::size_t i = 0; i < selected.size(); ++i) {
          const auto& r = reports[i];
          out << std::setw(10) << to_string(selected[i]) << std::setw(14) << r.variance_estimate.value
              << std::setw(12) << r.z << std::setw(12) << r.p_value
              << (r.reject ? "reject" : "fail to reject") << (r.degenerate_variance ? " (degenerate variance)" : "")
              << '\n';
        }
        out << "\npooled chi-square = " << chi << " on " << ds.dim() - 1 << " df, p = " << chi_p << '\n';
        std::stable_sort(groups.begin(), groups.end(), [](const GroupStat& a, const GroupStat& b) { return a.t_u > b.t_u; });
        out << "\nlargest group contributions:\n";
        for (std::size_t i = 0; i < std::min<std::size_t>(5, groups.size()); ++i) {
          out << "  " << std::setw(16) << groups[i].group_id << groups[i].t_u << '\n';
        }
        break;
      }
    }
    return kExitOk;
  }
};

// ---- pergroup ---------------------------------------------------------

struct PerGroupCommand {
  CommonOptions common;
  std::string input;
  int B = kDefaultPerGroupB;
  bool smoothed = false;

  void setup(CLI::App* cmd) {
    cmd->add_option("input", input, "Grouped count CSV")->required();
    cmd->add_option("--B", B, "Bootstrap replications per group");
    cmd->add_flag("--smoothed", smoothed, "Use (#{T* >= T} + 1) / (B + 1)");
    add_common(cmd, common);
  }

  int run(std::ostream& out, std::ostream& err) const {
    check_alpha(common.alpha);
    const GroupedDataset ds = read_counts_csv(std::filesystem::path(input));
    const std::uint64_t seed = resolve_seed(common, err);
    PerGroupOptions o;
    o.B = B;
    o.seed = seed;
    o.smoothed = smoothed;
    o.workers = common.workers;
    const auto results = pergroup_bootstrap_pvalues(ds, o);
    const auto summary = summarize_pergroup(results, common.alpha);

    switch (common.fmt()) {
      case Format::json: {
        json doc = header("pergroup", seed, common.alpha);
        doc["B"] = B;
        doc["smoothed"] = smoothed;
        json rows = json::array();
        for (const auto& r : results) {
          rows.push_back({{"group", r.group_id},
                          {"statistic", r.statistic},
                          {"p_raw", r.p_raw},
                          {"p_bh", r.p_bh},
                          {"p_bonferroni", r.p_bonferroni},
                          {"degenerate", r.degenerate}});
        }
        doc["groups"] = rows;
        doc["minp_reject"] = summary.minp_reject;
        doc["rejections"] = {{"raw", summary.rejections_raw},
                             {"bh", summary.rejections_bh},
                             {"bonferroni", summary.rejections_bonferroni}};
        doc["degenerate_groups"] = summary.degenerate;
        out << doc.dump(2) << '\n';
        break;
      }
      case Format::csv: {
        out << "group,statistic,p_raw,p_bh,p_bonferroni,degenerate\n" << std::setprecision(10);
        for (const auto& r : results) {
          out << r.group_id << ',' << r.statistic << ',' << r.p_raw << ',' << r.p_bh << ',' << r.p_bonferroni << ','
              << (r.degenerate ? 1 : 0) << '\n';
        }
        break;
      }
      case Format::human: {
        out << "mhtest " << tool_version() << "  k=" << ds.k() << "  B=" << B << "  alpha=" << common.alpha
            << "  seed=" << seed << "\n\n";
        out << std::left << std::setw(16) << "group" << std::setw(14) << "T_U,r" << std::setw(10) << "p_raw"
            << std::setw(10) << "p_bh" << "p_bonf\n";
        for (const auto& r : results) {
          out << std::setw(16) << r.group_id << std::setw(14) << r.statistic << std::setw(10) << r.p_raw
              << std::setw(10) << r.p_bh << r.p_bonferroni << (r.degenerate ? "  (degenerate)" : "") << '\n';
        }
        out << "\nmin-p rule: " << (summary.minp_reject ? "reject" : "fail to reject") << '\n';
        out << "rejections: raw " << summary.rejections_raw << ", bh " << summary.rejections_bh << ", bonferroni "
            << summary.rejections_bonferroni << '\n';
        break;
      }
    }
    return kExitOk;
  }
};

// ---- simulate ---------------------------------------------------------

struct SimulateCommand {
  CommonOptions common;
  std::string table;
  int setting = 0;
  std::size_t d = 5;
  std::size_t k = 20;
  std::string sizes = "30,30";
  std::string pi0 = "none";
  std::string tests;
  std::optional<std::int64_t> reps;
  int variance_B = kDefaultVarianceBootstrapB;
  int pergroup_B = kDefaultPerGroupB;
  std::string out_path;
  std::optional<std::uint64_t> export_replicate;

  void setup(CLI::App* cmd) {
    cmd->add_option("--table", table, "Published table to reproduce");
    cmd->add_option("--setting", setting, "Simulation setting 1..5");
    cmd->add_option("--d", d, "Number of categories");
    cmd->add_option("--k", k, "Number of groups");
    cmd->add_option("--sizes", sizes, "Per-group sample sizes n1,n2");
    cmd->add_option("--pi0", pi0, "Alternative vector for settings 3 and 4 (pi2 or pi4)");
    cmd->add_option("--tests", tests, "Comma list of tests (default test1,test2,test3,chisq_pooled)");
    cmd->add_option("--reps", reps, "Replicates (default 10000, 1000 for powerCM)");
    cmd->add_option("--variance-B", variance_B, "Bootstrap size of test7");
    cmd->add_option("--pergroup-B", pergroup_B, "Bootstrap size of the per-group tests");
    cmd->add_option("--out", out_path, "CSV output path; a .json sidecar is written next to it");
    cmd->add_option("--export-replicate", export_replicate, "Write replicate i of the setting as count CSV instead");
    add_common(cmd, common, true, false);
  }

  SettingSpec setting_spec(std::uint64_t seed) const {
    SettingSpec s;
    s.setting = setting;
    s.d = d;
    s.k = k;
    s.sizes = parse_sizes(sizes);
    const auto p = parse_pi0(pi0);
    if (!p) throw Error(ErrorKind::InvalidArgument, "--pi0 must be pi2 or pi4");
    s.pi0 = *p;
    s.master_seed = seed;
    validate(s);
    return s;
  }

  std::vector<TestId> test_list() const {
    if (tests.empty()) return {TestId::test1, TestId::test2, TestId::test3, TestId::chisq_pooled};
    std::vector<TestId> out;
    std::stringstream ss(tests);
    std::string item;
    while (std::getline(ss, item, ',')) {
      const auto t = parse_test_id(item);
      if (!t) throw Error(ErrorKind::InvalidArgument, "unknown test '" + item + "'");
      out.push_back(*t);
    }
    return out;
  }

  void emit(const std::string& label, const std::vector<TableRow>& rows, const TableRunOptions& options,
            std::ostream& out) const {
    if (out_path.empty()) {
      write_table_csv(out, rows);
    } else {
      write_table_artifacts(out_path, label, rows, options);
    }
  }

  int run(std::ostream& out, std::ostream& err) const {
    check_alpha(common.alpha);
    if (reps && *reps < 1) throw Error(ErrorKind::InvalidReps, "--reps must be >= 1");
    const std::uint64_t seed = resolve_seed(common, err);
    TableRunOptions options;
    options.seed = seed;
    options.harness.alpha = common.alpha;
    options.harness.workers = common.workers;
    options.harness.variance_bootstrap_B = variance_B;
    options.harness.pergroup_B = pergroup_B;

    if (!table.empty()) {
      if (setting != 0) throw Error(ErrorKind::InvalidArgument, "--table and --setting are exclusive");
      const TableId id = parse_table_id(table);
      options.reps = reps.value_or(0);
      options.progress = [&err](const TableRow& row) {
        err << to_string(row.result.test) << " k=" << row.spec.k << " d=" << row.spec.d << " (" << row.spec.sizes.n1
            << ',' << row.spec.sizes.n2 << ") rate=" << row.result.rate << '\n';
      };
      emit(std::string(to_string(id)), reproduce_table(id, options), options, out);
      return kExitOk;
    }
    if (setting == 0) throw Error(ErrorKind::InvalidArgument, "give --table or --setting");

    SettingSpec spec = setting_spec(seed);
    if (export_replicate) {
      const Replicate rep = generate_replicate(spec, *export_replicate);
      if (out_path.empty()) {
        write_counts_csv(out, rep.data);
      } else {
        std::ofstream f(out_path);
        if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + out_path);
        write_counts_csv(f, rep.data);
      }
      return kExitOk;
    }
    const std::int64_t n = reps.value_or(10000);
    options.reps = n;
    const auto tl = test_list();
    const auto results = estimate_rejection_rate(spec, tl, n, options.harness);
    std::vector<TableRow> rows;
    for (const auto& r : results) rows.push_back({std::nullopt, spec, r, std::nullopt});
    emit("custom", rows, options, out);
    return kExitOk;
  }
};

// ---- benchmark --------------------------------------------------------

struct BenchmarkCommand {
  CommonOptions common;
  std::size_t d = 5;
  std::size_t k = 200;
  std::string sizes = "30,30";
  std::int64_t reps = 20;
  int rounds = 5;

  void setup(CLI::App* cmd) {
    cmd->add_option("--d", d, "Number of categories");
    cmd->add_option("--k", k, "Number of groups");
    cmd->add_option("--sizes", sizes, "Per-group sample sizes n1,n2");
    cmd->add_option("--reps", reps, "Datasets per timing round");
    cmd->add_option("--rounds", rounds, "Timing rounds");
    add_common(cmd, common, false);
  }

  int run(std::ostream& out, std::ostream& err) const {
    const std::uint64_t seed = resolve_seed(common, err);
    const auto entries = benchmark_statistics(k, d, parse_sizes(sizes), reps, seed, rounds);
    if (common.fmt() == Format::json) {
      json doc = header("benchmark", seed, kDefaultAlpha);
      doc.erase("alpha");
      doc["k"] = k;
      doc["d"] = d;
      json rows = json::array();
      for (const auto& e : entries) {
        rows.push_back({{"statistic", e.statistic}, {"mean_seconds", e.mean_seconds}, {"median_seconds", e.median_seconds}});
      }
      doc["timings"] = rows;
      out << doc.dump(2) << '\n';
    } else {
      out << "statistic,mean_seconds,median_seconds\n";
      for (const auto& e : entries) out << e.statistic << ',' << e.mean_seconds << ',' << e.median_seconds << '\n';
    }
    return kExitOk;
  }
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homogeneity tests for many small multinomial two-sample problems", "mhtest"};
  app.set_version_flag("--version", std::string(tool_version()));
  app.require_subcommand(1);

  TestCommand test;
  PerGroupCommand pergroup;
  SimulateCommand simulate;
  BenchmarkCommand benchmark;
  test.common.workers = pergroup.common.workers = simulate.common.workers = benchmark.common.workers =
      default_workers();

  auto* test_cmd = app.add_subcommand("test", "Global test of homogeneity across groups");
  test.setup(test_cmd);
  auto* pergroup_cmd = app.add_subcommand("pergroup", "Per-group bootstrap tests with BH and Bonferroni");
  pergroup.setup(pergroup_cmd);
  auto* simulate_cmd = app.add_subcommand("simulate", "Monte Carlo rejection rates and table reproduction");
  simulate.setup(simulate_cmd);
  auto* benchmark_cmd = app.add_subcommand("benchmark", "Time the statistic under each variance estimator");
  benchmark.setup(benchmark_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (test_cmd->parsed()) return test.run(out, err);
    if (pergroup_cmd->parsed()) return pergroup.run(out, err);
    if (simulate_cmd->parsed()) return simulate.run(out, err);
    if (benchmark_cmd->parsed()) return benchmark.run(out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return is_input_error(e.kind()) ? kExitInputError : kExitPreconditionError;
  }
  return kExitInputError;
}

}  // namespace mhtest
