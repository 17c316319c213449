#include "mhtest/counts.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <numeric>
#include <optional>
#include <ostream>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "mhtest/error.hpp"

namespace mhtest {

Count sum_counts(std::span<const Count> counts) noexcept {
  return std::accumulate(counts.begin(), counts.end(), Count{0});
}

CountVector::CountVector(std::vector<Count> counts) : counts_(std::move(counts)) {
  if (counts_.size() < 2) {
    throw Error(ErrorKind::InvalidDimension,
                "count vector needs at least 2 categories, got " + std::to_string(counts_.size()));
  }
  for (Count c : counts_) {
    if (c < 0) throw Error(ErrorKind::NegativeCount, "negative count " + std::to_string(c));
  }
  total_ = sum_counts(counts_);
}

ProbVector::ProbVector(std::vector<double> probs) : probs_(std::move(probs)) {
  if (probs_.size() < 2) {
    throw Error(ErrorKind::InvalidDimension, "probability vector needs at least 2 categories");
  }
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw Error(ErrorKind::InvalidProbVector, "probability outside [0,1]");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSimplexTolerance) {
    throw Error(ErrorKind::InvalidProbVector, "probabilities do not sum to 1");
  }
}

ProbVector ProbVector::uniform(std::size_t d) {
  return ProbVector(std::vector<double>(d, 1.0 / static_cast<double>(d)));
}

ProbVector ProbVector::reversed() const {
  return ProbVector(std::vector<double>(probs_.rbegin(), probs_.rend()));
}

GroupPair::GroupPair(std::string id, CountVector first, CountVector second)
    : group_id(std::move(id)), sample1(std::move(first)), sample2(std::move(second)) {
  if (sample1.dim() != sample2.dim()) {
    throw Error(ErrorKind::MixedDimension, "samples have different category counts", group_id);
  }
  if (sample1.total() < 1 || sample2.total() < 1) {
    throw Error(ErrorKind::ZeroTotal, "each sample needs at least one observation", group_id);
  }
}

GroupedDataset::GroupedDataset(std::vector<GroupPair> groups) : groups_(std::move(groups)) {
  if (groups_.empty()) throw Error(ErrorKind::EmptyInput, "dataset has no groups");
  d_ = groups_.front().dim();
  std::unordered_set<std::string> seen;
  for (const auto& g : groups_) {
    if (g.dim() != d_) {
      throw Error(ErrorKind::MixedDimension, "groups have different category counts", g.group_id);
    }
    if (!seen.insert(g.group_id).second) {
      throw Error(ErrorKind::DuplicateGroup, "group label repeated", g.group_id);
    }
  }
}

GroupedDataset validate_dataset(std::span<const RawRow> rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyInput, "no data rows");

  const std::size_t d = rows.front().counts.size();
  struct Slots {
    const RawRow* pop[2] = {nullptr, nullptr};
  };
  std::vector<std::string> order;
  std::unordered_map<std::string, Slots> by_group;

  for (const auto& row : rows) {
    if (row.counts.size() != d) {
      throw Error(ErrorKind::MixedDimension,
                  "row has " + std::to_string(row.counts.size()) + " categories, expected " +
                      std::to_string(d),
                  row.group, row.line);
    }
    if (row.population != 1 && row.population != 2) {
      throw Error(ErrorKind::ParseError, "population must be 1 or 2", row.group, row.line);
    }
    for (Count c : row.counts) {
      if (c < 0) throw Error(ErrorKind::NegativeCount, "negative count", row.group, row.line);
    }
    auto [it, inserted] = by_group.try_emplace(row.group);
    if (inserted) order.push_back(row.group);
    const RawRow*& slot = it->second.pop[row.population - 1];
    if (slot != nullptr) {
      throw Error(ErrorKind::DuplicateSample,
                  "population " + std::to_string(row.population) + " given twice", row.group,
                  row.line);
    }
    slot = &row;
  }

  std::vector<GroupPair> groups;
  groups.reserve(order.size());
  for (const auto& id : order) {
    const Slots& s = by_group.at(id);
    if (s.pop[0] == nullptr || s.pop[1] == nullptr) {
      const RawRow* present = s.pop[0] ? s.pop[0] : s.pop[1];
      throw Error(ErrorKind::MissingMate, "group has only one population", id, present->line);
    }
    try {
      groups.emplace_back(id, CountVector(s.pop[0]->counts), CountVector(s.pop[1]->counts));
    } catch (const Error& e) {
      throw Error(e.kind(), e.what(), std::nullopt, s.pop[0]->line);
    }
  }
  return GroupedDataset(std::move(groups));
}

std::vector<RawRow> to_rows(const GroupedDataset& ds) {
  std::vector<RawRow> rows;
  rows.reserve(2 * ds.k());
  for (const auto& g : ds.groups()) {
    const auto c1 = g.sample1.counts();
    const auto c2 = g.sample2.counts();
    rows.push_back({g.group_id, 1, {c1.begin(), c1.end()}, 0});
    rows.push_back({g.group_id, 2, {c2.begin(), c2.end()}, 0});
  }
  return rows;
}

namespace {

std::vector<std::string_view> split_commas(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(',', start);
    fields.push_back(line.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return fields;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::optional<Count> parse_int(std::string_view s) {
  s = trim(s);
  if (s.empty()) return std::nullopt;
  Count value = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<RawRow> parse_counts_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  std::size_t d = 0;
  bool have_header = false;
  std::vector<RawRow> rows;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view = trim(line);
    if (line_no == 1 && view.size() >= 3 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
    if (view.empty()) continue;
    const auto fields = split_commas(view);
    if (!have_header) {
      if (fields.size() < 4 || trim(fields[0]) != "group" || trim(fields[1]) != "population") {
        throw Error(ErrorKind::ParseError,
                    "header must be 'group,population,c1,...,cd' with d >= 2", std::nullopt,
                    line_no);
      }
      d = fields.size() - 2;
      have_header = true;
      continue;
    }
    RawRow row;
    row.line = line_no;
    row.group = std::string(trim(fields[0]));
    if (row.group.empty()) throw Error(ErrorKind::ParseError, "empty group label", std::nullopt, line_no);
    if (fields.size() < 2) throw Error(ErrorKind::ParseError, "missing population", row.group, line_no);
    const auto pop = parse_int(fields[1]);
    if (!pop || (*pop != 1 && *pop != 2)) {
      throw Error(ErrorKind::ParseError, "population must be 1 or 2", row.group, line_no);
    }
    row.population = static_cast<int>(*pop);
    if (fields.size() - 2 != d) {
      throw Error(ErrorKind::MixedDimension,
                  "row has " + std::to_string(fields.size() - 2) + " counts, header declares " +
                      std::to_string(d),
                  row.group, line_no);
    }
    row.counts.reserve(d);
    for (std::size_t j = 2; j < fields.size(); ++j) {
      const auto c = parse_int(fields[j]);
      if (!c) {
        throw Error(ErrorKind::ParseError, "count '" + std::string(trim(fields[j])) + "' is not an integer",
                    row.group, line_no);
      }
      if (*c < 0) throw Error(ErrorKind::NegativeCount, "negative count", row.group, line_no);
      row.counts.push_back(*c);
    }
    rows.push_back(std::move(row));
  }
  if (!have_header) throw Error(ErrorKind::EmptyInput, "input is empty (no header)");
  return rows;
}

GroupedDataset read_counts_csv(std::istream& in) {
  const auto rows = parse_counts_csv(in);
  return validate_dataset(rows);
}

GroupedDataset read_counts_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open '" + path.string() + "'");
  return read_counts_csv(in);
}

void write_counts_csv(std::ostream& out, const GroupedDataset& ds) {
  out << "group,population";
  for (std::size_t j = 1; j <= ds.dim(); ++j) out << ",c" << j;
  out << '\n';
  for (const auto& row : to_rows(ds)) {
    out << row.group << ',' << row.population;
    for (Count c : row.counts) out << ',' << c;
    out << '\n';
  }
}

void empirical_proportions(std::span<const Count> counts, std::span<double> out) {
  const Count n = sum_counts(counts);
  if (n < 1) throw Error(ErrorKind::ZeroTotal, "sample has no observations");
  const double inv = 1.0 / static_cast<double>(n);
  for (std::size_t j = 0; j < counts.size(); ++j) out[j] = static_cast<double>(counts[j]) * inv;
}

ProbVector empirical_proportions(const CountVector& c) {
  if (c.total() < 1) throw Error(ErrorKind::ZeroTotal, "sample has no observations");
  std::vector<double> p(c.dim());
  const double n = static_cast<double>(c.total());
  for (std::size_t j = 0; j < c.dim(); ++j) p[j] = static_cast<double>(c[j]) / n;
  return ProbVector(std::move(p));
}

CountVector pooled_counts(const GroupPair& p) {
  std::vector<Count> sum(p.dim());
  for (std::size_t j = 0; j < sum.size(); ++j) sum[j] = p.sample1[j] + p.sample2[j];
  return CountVector(std::move(sum));
}

}  // namespace mhtest
