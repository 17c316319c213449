#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace mhtest {

using Count = std::int64_t;

/// Observed frequencies of one sample over d >= 2 categories.
class CountVector {
 public:
  explicit CountVector(std::vector<Count> counts);

  std::span<const Count> counts() const noexcept { return counts_; }
  Count operator[](std::size_t j) const { return counts_[j]; }
  Count total() const noexcept { return total_; }
  std::size_t dim() const noexcept { return counts_.size(); }

  friend bool operator==(const CountVector&, const CountVector&) = default;

 private:
  std::vector<Count> counts_;
  Count total_ = 0;
};

/// A point in the probability simplex. Entries are non-negative and sum to
/// one within 1e-12.
class ProbVector {
 public:
  explicit ProbVector(std::vector<double> probs);

  static ProbVector uniform(std::size_t d);

  std::span<const double> probs() const noexcept { return probs_; }
  double operator[](std::size_t j) const { return probs_[j]; }
  std::size_t dim() const noexcept { return probs_.size(); }

  ProbVector reversed() const;

  friend bool operator==(const ProbVector&, const ProbVector&) = default;

 private:
  std::vector<double> probs_;
};

inline constexpr double kSimplexTolerance = 1e-12;

/// The two independent samples observed in one group.
struct GroupPair {
  GroupPair(std::string id, CountVector first, CountVector second);

  std::string group_id;
  CountVector sample1;
  CountVector sample2;

  std::size_t dim() const noexcept { return sample1.dim(); }

  friend bool operator==(const GroupPair&, const GroupPair&) = default;
};

/// k >= 1 group pairs sharing a category count, in input order.
class GroupedDataset {
 public:
  explicit GroupedDataset(std::vector<GroupPair> groups);

  std::span<const GroupPair> groups() const noexcept { return groups_; }
  const GroupPair& operator[](std::size_t r) const { return groups_[r]; }
  std::size_t k() const noexcept { return groups_.size(); }
  std::size_t dim() const noexcept { return d_; }

  friend bool operator==(const GroupedDataset&, const GroupedDataset&) = default;

 private:
  std::vector<GroupPair> groups_;
  std::size_t d_ = 0;
};

/// One parsed line of the grouped-count CSV.
struct RawRow {
  std::string group;
  int population = 0;  // 1 or 2
  std::vector<Count> counts;
  std::size_t line = 0;  // 1-based source line, 0 if synthetic
};

/// Assembles rows into a dataset, ordering groups by first appearance.
GroupedDataset validate_dataset(std::span<const RawRow> rows);

/// Rows of an existing dataset, population 1 before population 2 per group.
std::vector<RawRow> to_rows(const GroupedDataset& ds);

/// Parses `group,population,c1,...,cd` (header required).
std::vector<RawRow> parse_counts_csv(std::istream& in);
GroupedDataset read_counts_csv(std::istream& in);
GroupedDataset read_counts_csv(const std::filesystem::path& path);
void write_counts_csv(std::ostream& out, const GroupedDataset& ds);

ProbVector empirical_proportions(const CountVector& c);
/// Proportions written into `out` (size d). Throws ZeroTotal.
void empirical_proportions(std::span<const Count> counts, std::span<double> out);

CountVector pooled_counts(const GroupPair& p);

Count sum_counts(std::span<const Count> counts) noexcept;

}  // namespace mhtest
