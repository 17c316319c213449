#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "mhtest/counts.hpp"
#include "mhtest/random.hpp"
#include "mhtest/variance.hpp"

namespace mhtest {

struct PiEntry {
  ProbVector pi;
  /// ||pi^1 - pi^i||^2 as tabulated (three decimals).
  double printed_distance = 0.0;
};

/// The five reference vectors pi^1..pi^5 for d = 5 or 10. Throws
/// UnsupportedDimension otherwise.
const std::vector<PiEntry>& pi_library(std::size_t d);

/// Which library vector plays the alternative in Settings 3 and 4.
enum class Pi0 { none, pi2, pi4 };

std::string_view to_string(Pi0 p) noexcept;
std::optional<Pi0> parse_pi0(std::string_view name) noexcept;

/// One simulation scenario.
///
/// Setting 1: pi = uniform on both sides (d in {5, 10, 20}).
/// Setting 2: pi1 = pi2 = pi^i, i uniform on 1..5.
/// Setting 3: pi1 = pi2 = pi^i with probability 0.2 each for i = 1..4,
///            (pi^1, pi^0) with probability 0.2.
/// Setting 4: as Setting 3, but the alternative is (pi^1, pi^0) and
///            (pi^1, reversed pi^0) with probability 0.1 each.
/// Setting 5: pi1, pi2 independent, each uniform on pi^1..pi^5.
struct SettingSpec {
  int setting = 1;
  std::size_t d = 5;
  std::size_t k = 20;
  SizePair sizes{30, 30};
  /// Per-group sizes; when non-empty it must have k entries and overrides
  /// `sizes`.
  std::vector<SizePair> listed_sizes;
  Pi0 pi0 = Pi0::none;
  std::uint64_t master_seed = 0;

  SizePair size_for(std::size_t r) const { return listed_sizes.empty() ? sizes : listed_sizes[r]; }
  Count max_total() const;
};

/// Throws UnsupportedDimension or InvalidArgument.
void validate(const SettingSpec& spec);

/// Palette indices of the laws of one group's two samples.
struct GroupLaw {
  std::uint8_t pi1 = 0;
  std::uint8_t pi2 = 0;
  bool null() const noexcept { return pi1 == pi2; }
};

struct Replicate {
  GroupedDataset data;
  std::vector<GroupLaw> laws;
  /// True where pi_{1r} = pi_{2r}.
  std::vector<bool> null_truth;
};

/// Draws replicates of a setting. Group r of replicate i uses stream
/// (master_seed, i, r): first the law, then sample 1, then sample 2.
class ReplicateGenerator {
 public:
  explicit ReplicateGenerator(SettingSpec spec);

  const SettingSpec& spec() const noexcept { return spec_; }
  /// Probability vectors addressed by GroupLaw. Setting 1 has the uniform
  /// vector only; otherwise pi^1..pi^5 at 0..4 and reversed pi^0 at 5.
  const std::vector<ProbVector>& palette() const noexcept { return palette_; }

  /// Writes counts as k blocks of [sample 1 | sample 2], each of length d.
  void generate(std::uint64_t replicate, std::span<Count> counts, std::span<GroupLaw> laws) const;
  Replicate generate(std::uint64_t replicate) const;

 private:
  SettingSpec spec_;
  std::vector<ProbVector> palette_;
  std::vector<MultinomialSampler> samplers_;
  std::uint8_t pi0_index_ = 0;
};

Replicate generate_replicate(const SettingSpec& spec, std::uint64_t replicate);

/// Builds a dataset from the flat layout used by ReplicateGenerator.
GroupedDataset dataset_from_flat(std::span<const Count> counts, std::size_t k, std::size_t d);

}  // namespace mhtest
