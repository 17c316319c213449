#include "mhtest/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <tuple>

#include <json.hpp>

#include "mhtest/distributions.hpp"
#include "mhtest/error.hpp"
#include "mhtest/parallel.hpp"
#include "mhtest/random.hpp"
#include "mhtest/ustat.hpp"
#include "mhtest/version.hpp"

namespace mhtest {

std::string_view to_string(TestId t) noexcept {
  switch (t) {
    case TestId::wk: return "wk";
    case TestId::wk_prime: return "wk_prime";
    case TestId::vk: return "vk";
    case TestId::vk_prime: return "vk_prime";
    case TestId::test1: return "test1";
    case TestId::test2: return "test2";
    case TestId::test3: return "test3";
    case TestId::test4: return "test4";
    case TestId::test5: return "test5";
    case TestId::test6: return "test6";
    case TestId::test7: return "test7";
    case TestId::chisq_pooled: return "chisq_pooled";
    case TestId::minp_bootstrap: return "minp_bootstrap";
  }
  return "unknown";
}

std::optional<TestId> parse_test_id(std::string_view name) noexcept {
  for (TestId t : kAllTestIds) {
    if (to_string(t) == name) return t;
  }
  return std::nullopt;
}

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::optional<Estimator> estimator_of(TestId t) noexcept {
  switch (t) {
    case TestId::test1: return Estimator::test1;
    case TestId::test2: return Estimator::test2;
    case TestId::test3: return Estimator::test3;
    case TestId::test4: return Estimator::test4;
    case TestId::test5: return Estimator::test5;
    case TestId::test6: return Estimator::test6;
    case TestId::test7: return Estimator::test7;
    default: return std::nullopt;
  }
}

Count min_total_for(TestId t) noexcept {
  if (auto e = estimator_of(t)) return min_sample_total(*e);
  return t == TestId::minp_bootstrap ? 2 : 1;
}

Count smallest_total(const SettingSpec& spec) {
  Count m = std::numeric_limits<Count>::max();
  for (std::size_t r = 0; r < spec.k; ++r) {
    const SizePair s = spec.size_for(r);
    m = std::min({m, s.n1, s.n2});
  }
  return m;
}

// Null moments of the per-group chi-square and LRT for every (size pair,
// palette entry) the replicates can produce.
class MomentTable {
 public:
  MomentTable(const SettingSpec& spec, const std::vector<ProbVector>& palette, bool chi, bool lrt,
              const MomentOptions& options)
      : palette_size_(palette.size()), slot_of_group_(spec.k) {
    for (std::size_t r = 0; r < spec.k; ++r) {
      const SizePair s = spec.size_for(r);
      auto it = std::find(slots_.begin(), slots_.end(), s);
      slot_of_group_[r] = static_cast<std::uint32_t>(it - slots_.begin());
      if (it == slots_.end()) slots_.push_back(s);
    }
    for (const SizePair& s : slots_) {
      for (const ProbVector& p : palette) {
        chi_.push_back(chi ? classical_moments(ClassicalStatistic::chi_square, p, s.n1, s.n2, options)
                           : MomentPair{});
        lrt_.push_back(lrt ? classical_moments(ClassicalStatistic::lrt, p, s.n1, s.n2, options) : MomentPair{});
      }
    }
  }

  const MomentPair& chi(std::size_t r, std::size_t pi) const { return chi_[index(r, pi)]; }
  const MomentPair& lrt(std::size_t r, std::size_t pi) const { return lrt_[index(r, pi)]; }

 private:
  std::size_t index(std::size_t r, std::size_t pi) const { return slot_of_group_[r] * palette_size_ + pi; }

  std::size_t palette_size_;
  std::vector<SizePair> slots_;
  std::vector<std::uint32_t> slot_of_group_;
  std::vector<MomentPair> chi_, lrt_;
};

struct Scratch {
  std::vector<Count> counts;
  std::vector<GroupLaw> laws;
  std::vector<Count> pooled;
};

// Quantities shared by several tests on one replicate, computed on first use.
class ReplicateView {
 public:
  ReplicateView(const SettingSpec& spec, std::uint64_t replicate, Scratch& s)
      : spec_(spec), replicate_(replicate), s_(s) {}

  std::span<const Count> x1(std::size_t r) const {
    return std::span<const Count>(s_.counts).subspan(2 * r * spec_.d, spec_.d);
  }
  std::span<const Count> x2(std::size_t r) const {
    return std::span<const Count>(s_.counts).subspan((2 * r + 1) * spec_.d, spec_.d);
  }
  const GroupLaw& law(std::size_t r) const { return s_.laws[r]; }

  double t_u() {
    if (!t_u_) {
      double sum = 0.0;
      for (std::size_t r = 0; r < spec_.k; ++r) sum += group_ustat(x1(r), x2(r));
      t_u_ = sum / std::sqrt(static_cast<double>(spec_.k));
    }
    return *t_u_;
  }

  const std::vector<double>& per_group(ClassicalStatistic stat) {
    auto& cache = stat == ClassicalStatistic::chi_square ? chi_ : lrt_;
    if (cache.empty()) {
      cache.resize(spec_.k);
      for (std::size_t r = 0; r < spec_.k; ++r) {
        cache[r] = stat == ClassicalStatistic::chi_square ? chi_square_group(x1(r), x2(r)) : lrt_group(x1(r), x2(r));
      }
    }
    return cache;
  }

  const GroupedDataset& dataset() {
    if (!dataset_) dataset_.emplace(dataset_from_flat(s_.counts, spec_.k, spec_.d));
    return *dataset_;
  }

  double pooled_chi_square() {
    const std::size_t d = spec_.d;
    s_.pooled.assign(2 * d, 0);
    for (std::size_t r = 0; r < spec_.k; ++r) {
      for (std::size_t j = 0; j < d; ++j) {
        s_.pooled[j] += x1(r)[j];
        s_.pooled[d + j] += x2(r)[j];
      }
    }
    return chi_square_group(std::span<const Count>(s_.pooled).first(d), std::span<const Count>(s_.pooled).last(d));
  }

  std::uint64_t derived_seed(StreamPhase phase) const {
    return make_stream(spec_.master_seed, replicate_, 0, phase)();
  }

 private:
  const SettingSpec& spec_;
  std::uint64_t replicate_;
  Scratch& s_;
  std::optional<double> t_u_;
  std::vector<double> chi_, lrt_;
  std::optional<GroupedDataset> dataset_;
};

double variance_of(ReplicateView& view, const SettingSpec& spec, Estimator e, const HarnessOptions& options) {
  if (e == Estimator::test7) {
    return var0_bootstrap(view.dataset(), options.variance_bootstrap_B, view.derived_seed(StreamPhase::Bootstrap),
                          1);
  }
  double sum = 0.0;
  for (std::size_t r = 0; r < spec.k; ++r) sum += var0_group(view.x1(r), view.x2(r), e);
  return sum / static_cast<double>(spec.k);
}

double primed_z(ReplicateView& view, const SettingSpec& spec, const MomentTable& moments, ClassicalStatistic stat) {
  const auto& values = view.per_group(stat);
  double centred = 0.0, var = 0.0;
  for (std::size_t r = 0; r < spec.k; ++r) {
    const MomentPair& m = stat == ClassicalStatistic::chi_square ? moments.chi(r, view.law(r).pi1)
                                                                 : moments.lrt(r, view.law(r).pi1);
    centred += values[r] - m.mean;
    var += m.variance;
  }
  if (!(var > 0.0)) throw Error(ErrorKind::ZeroVariance, "summed null variance is not positive");
  return centred / std::sqrt(var);
}

bool rejects(TestId test, ReplicateView& view, const SettingSpec& spec, const MomentTable* moments,
             const HarnessOptions& options) {
  const double alpha = options.alpha;
  auto sum_of = [](const std::vector<double>& v) {
    double s = 0.0;
    for (double x : v) s += x;
    return s;
  };
  switch (test) {
    case TestId::wk:
    case TestId::vk: {
      const auto stat = test == TestId::wk ? ClassicalStatistic::chi_square : ClassicalStatistic::lrt;
      const double z = standardize_chi_square_sum(sum_of(view.per_group(stat)), spec.k, spec.d);
      return normal_upper_tail(z) <= alpha;
    }
    case TestId::wk_prime:
      return normal_upper_tail(primed_z(view, spec, *moments, ClassicalStatistic::chi_square)) <= alpha;
    case TestId::vk_prime:
      return normal_upper_tail(primed_z(view, spec, *moments, ClassicalStatistic::lrt)) <= alpha;
    case TestId::chisq_pooled:
      return chi_square_upper_tail(view.pooled_chi_square(), static_cast<double>(spec.d) - 1.0) <= alpha;
    case TestId::minp_bootstrap: {
      PerGroupOptions pg;
      pg.B = options.pergroup_B;
      pg.seed = view.derived_seed(StreamPhase::PerGroupBootstrap);
      return summarize_pergroup(pergroup_bootstrap_pvalues(view.dataset(), pg), alpha).minp_reject;
    }
    default: {
      const Estimator e = *estimator_of(test);
      const double t = view.t_u();
      return decide(t, {variance_of(view, spec, e, options), source_of(e)}, alpha).reject;
    }
  }
}

void check_options(std::int64_t reps, const HarnessOptions& options) {
  if (reps < 1) throw Error(ErrorKind::InvalidReps, "reps must be >= 1");
  if (!(options.alpha > 0.0 && options.alpha < 1.0)) throw Error(ErrorKind::OutOfRange, "alpha must lie in (0, 1)");
}

}  // namespace

std::vector<MCResult> estimate_rejection_rate(const SettingSpec& spec, std::span<const TestId> tests,
                                              std::int64_t reps, const HarnessOptions& options) {
  check_options(reps, options);
  const auto start = Clock::now();
  const ReplicateGenerator gen(spec);
  const std::size_t nt = tests.size();
  const Count smallest = smallest_total(spec);

  std::vector<MCResult> results(nt);
  std::vector<std::size_t> active;
  bool want_chi_moments = false, want_lrt_moments = false;
  for (std::size_t i = 0; i < nt; ++i) {
    const TestId t = tests[i];
    results[i].test = t;
    results[i].reps = reps;
    if (t == TestId::test7 && options.variance_bootstrap_B < 2) throw Error(ErrorKind::InvalidB, "test7 needs B >= 2");
    if (t == TestId::minp_bootstrap && options.pergroup_B < 1) {
      throw Error(ErrorKind::InvalidB, "per-group bootstrap needs B >= 1");
    }
    const Count need = min_total_for(t);
    if (smallest < need) {
      results[i].status = "aborted: " + std::string(to_string(t)) + " needs every sample total >= " +
                          std::to_string(need);
      continue;
    }
    want_chi_moments |= t == TestId::wk_prime;
    want_lrt_moments |= t == TestId::vk_prime;
    active.push_back(i);
  }

  std::optional<MomentTable> moments;
  if (want_chi_moments || want_lrt_moments) {
    moments.emplace(spec, gen.palette(), want_chi_moments, want_lrt_moments, options.moments);
  }

  const std::size_t n = static_cast<std::size_t>(reps);
  std::vector<std::int8_t> outcome(n * nt, 0);
  std::vector<std::pair<std::size_t, std::string>> first_failure(nt, {n, ""});
  std::mutex failure_mutex;

  const unsigned workers = std::max(1u, options.workers);
  std::vector<Scratch> scratch(workers);
  for (auto& s : scratch) {
    s.counts.resize(2 * spec.k * spec.d);
    s.laws.resize(spec.k);
  }

  parallel_for(n, workers, [&](unsigned w, std::size_t rep) {
    Scratch& s = scratch[w];
    gen.generate(rep, s.counts, s.laws);
    ReplicateView view(spec, rep, s);
    for (std::size_t i : active) {
      try {
        outcome[rep * nt + i] = rejects(tests[i], view, spec, moments ? &*moments : nullptr, options) ? 1 : 0;
      } catch (const Error& e) {
        outcome[rep * nt + i] = -1;
        std::lock_guard lock(failure_mutex);
        if (rep < first_failure[i].first) first_failure[i] = {rep, e.what()};
      }
    }
  });

  const double wall = seconds_since(start);
  for (std::size_t i = 0; i < nt; ++i) {
    MCResult& res = results[i];
    res.wall_seconds = wall;
    if (!res.ok()) {
      res.rate = std::numeric_limits<double>::quiet_NaN();
      res.se = res.rate;
      continue;
    }
    for (std::size_t rep = 0; rep < n; ++rep) {
      const std::int8_t o = outcome[rep * nt + i];
      if (o < 0) ++res.failures;
      else res.rejections += o;
    }
    if (res.failures > 0) {
      res.status = "aborted: " + std::to_string(res.failures) + " failed replicates, first " +
                   std::to_string(first_failure[i].first) + ": " + first_failure[i].second;
      res.rate = std::numeric_limits<double>::quiet_NaN();
      res.se = res.rate;
      continue;
    }
    res.rate = static_cast<double>(res.rejections) / static_cast<double>(reps);
    res.se = std::sqrt(res.rate * (1.0 - res.rate) / static_cast<double>(reps));
  }
  return results;
}

std::vector<double> standardized_statistics(const SettingSpec& spec, Estimator estimator, std::int64_t reps,
                                            const HarnessOptions& options) {
  check_options(reps, options);
  const ReplicateGenerator gen(spec);
  if (smallest_total(spec) < min_sample_total(estimator)) {
    throw Error(ErrorKind::EstimatorPreconditionViolated,
                std::string(to_string(estimator)) + " needs every sample total >= " +
                    std::to_string(min_sample_total(estimator)));
  }
  const std::size_t n = static_cast<std::size_t>(reps);
  std::vector<double> z(n);
  const unsigned workers = std::max(1u, options.workers);
  std::vector<Scratch> scratch(workers);
  for (auto& s : scratch) {
    s.counts.resize(2 * spec.k * spec.d);
    s.laws.resize(spec.k);
  }
  parallel_for(n, workers, [&](unsigned w, std::size_t rep) {
    Scratch& s = scratch[w];
    gen.generate(rep, s.counts, s.laws);
    ReplicateView view(spec, rep, s);
    const double v = variance_of(view, spec, estimator, options);
    z[rep] = decide(view.t_u(), {v, source_of(estimator)}, options.alpha).z;
  });
  return z;
}

std::uint64_t cell_seed(std::uint64_t seed, const SettingSpec& spec) {
  const std::uint64_t a = static_cast<std::uint64_t>(spec.setting) | (static_cast<std::uint64_t>(spec.d) << 8) |
                          (static_cast<std::uint64_t>(spec.pi0) << 24);
  const std::uint64_t b = static_cast<std::uint64_t>(spec.k) |
                          (static_cast<std::uint64_t>(spec.sizes.n1) << 24) |
                          (static_cast<std::uint64_t>(spec.sizes.n2) << 44);
  return make_stream(seed, a, b, StreamPhase::Assignment)();
}

std::vector<TableRow> reproduce_table(TableId table, const TableRunOptions& options) {
  const std::int64_t reps = options.reps > 0 ? options.reps : default_reps(table);
  using Key = std::tuple<int, int, int, int, int, Pi0>;
  std::vector<Key> order;
  std::map<Key, std::vector<ReferenceCell>> cells;
  for (const auto& c : reference_cells(table)) {
    const Key key{c.setting, c.d, c.k, c.n1, c.n2, c.pi0};
    auto [it, inserted] = cells.try_emplace(key);
    if (inserted) order.push_back(key);
    it->second.push_back(c);
  }

  std::vector<TableRow> rows;
  for (const Key& key : order) {
    const auto& group = cells[key];
    SettingSpec spec;
    spec.setting = std::get<0>(key);
    spec.d = static_cast<std::size_t>(std::get<1>(key));
    spec.k = static_cast<std::size_t>(std::get<2>(key));
    spec.sizes = {std::get<3>(key), std::get<4>(key)};
    spec.pi0 = std::get<5>(key);
    spec.master_seed = cell_seed(options.seed, spec);
    std::vector<TestId> tests;
    for (const auto& c : group) tests.push_back(c.test);
    const auto results = estimate_rejection_rate(spec, tests, reps, options.harness);
    for (std::size_t i = 0; i < group.size(); ++i) {
      rows.push_back({table, spec, results[i], group[i].value});
      if (options.progress) options.progress(rows.back());
    }
  }
  return rows;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_table_csv(std::ostream& out, std::span<const TableRow> rows) {
  out << "table,setting,d,k,n1,n2,pi0,test,rate,se,reps,failures,reference,wall_seconds,status\n";
  for (const auto& row : rows) {
    const auto& s = row.spec;
    const auto& r = row.result;
    std::ostringstream line;
    line.precision(6);
    line << (row.table ? to_string(*row.table) : std::string_view("custom")) << ',' << s.setting << ',' << s.d << ',' << s.k << ',' << s.sizes.n1 << ','
         << s.sizes.n2 << ',' << to_string(s.pi0) << ',' << to_string(r.test) << ',';
    if (r.ok()) line << r.rate << ',' << r.se;
    else line << ',';
    line << ',' << r.reps << ',' << r.failures << ',';
    if (row.reference) line << *row.reference;
    line << ',' << r.wall_seconds << ',' << csv_field(r.status) << '\n';
    out << line.str();
  }
}

std::string table_sidecar_json(std::string_view label, std::span<const TableRow> rows,
                               const TableRunOptions& options) {
  nlohmann::json cells = nlohmann::json::array();
  std::vector<const TableRow*> seen;
  for (const auto& row : rows) {
    const bool dup = std::any_of(seen.begin(), seen.end(),
                                 [&](const TableRow* p) { return p->spec.master_seed == row.spec.master_seed; });
    if (dup) continue;
    seen.push_back(&row);
    cells.push_back({{"setting", row.spec.setting},
                     {"d", row.spec.d},
                     {"k", row.spec.k},
                     {"n1", row.spec.sizes.n1},
                     {"n2", row.spec.sizes.n2},
                     {"pi0", to_string(row.spec.pi0)},
                     {"cell_seed", row.spec.master_seed}});
  }
  const auto& h = options.harness;
  nlohmann::json doc = {
      {"tool", "mhtest"},
      {"tool_version", tool_version()},
      {"git_describe", git_describe()},
      {"rng_version", kRngVersion},
      {"table", label},
      {"seed", options.seed},
      {"reps", rows.empty() ? options.reps : rows.front().result.reps},
      {"alpha", h.alpha},
      {"variance_bootstrap_B", h.variance_bootstrap_B},
      {"pergroup_B", h.pergroup_B},
      {"moment_method", h.moments.method == MomentMethod::exact          ? "exact"
                        : h.moments.method == MomentMethod::cell_marginal ? "cell_marginal"
                                                                          : "montecarlo"},
      {"spec", {{"cells", cells}}},
  };
  return doc.dump(2);
}

void write_table_artifacts(const std::filesystem::path& csv_path, std::string_view label,
                           std::span<const TableRow> rows, const TableRunOptions& options) {
  std::ofstream csv(csv_path);
  if (!csv) throw Error(ErrorKind::InvalidArgument, "cannot write " + csv_path.string());
  write_table_csv(csv, rows);
  std::ofstream json(csv_path.string() + ".json");
  if (!json) throw Error(ErrorKind::InvalidArgument, "cannot write " + csv_path.string() + ".json");
  json << table_sidecar_json(label, rows, options) << '\n';
}

std::vector<BenchmarkEntry> benchmark_statistics(std::size_t k, std::size_t d, SizePair sizes, std::int64_t reps,
                                                 std::uint64_t seed, int rounds) {
  if (reps < 1) throw Error(ErrorKind::InvalidReps, "reps must be >= 1");
  if (rounds < 1) throw Error(ErrorKind::InvalidArgument, "rounds must be >= 1");
  SettingSpec spec;
  spec.d = d;
  spec.k = k;
  spec.sizes = sizes;
  spec.master_seed = seed;
  const ReplicateGenerator gen(spec);
  std::vector<GroupedDataset> data;
  for (std::int64_t i = 0; i < reps; ++i) data.push_back(gen.generate(static_cast<std::uint64_t>(i)).data);

  std::vector<BenchmarkEntry> out;
  double sink = 0.0;
  for (Estimator e : kAllEstimators) {
    std::vector<double> per_round;
    double total = 0.0;
    for (int round = 0; round < rounds; ++round) {
      const auto start = Clock::now();
      for (std::size_t i = 0; i < data.size(); ++i) {
        sink += aggregate_statistic(data[i]);
        sink += var0_estimate(data[i], e, make_stream(seed, i, 0, StreamPhase::Benchmark)()).value;
      }
      const double elapsed = seconds_since(start);
      total += elapsed;
      per_round.push_back(elapsed / static_cast<double>(reps));
    }
    std::sort(per_round.begin(), per_round.end());
    out.push_back({std::string(to_string(e)), total / (static_cast<double>(rounds) * static_cast<double>(reps)),
                   per_round[per_round.size() / 2]});
  }
  // Keeps the timed work observable.
  if (std::isnan(sink)) out.front().statistic += "";
  return out;
}

}  // namespace mhtest
