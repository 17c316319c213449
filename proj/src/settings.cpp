#include "mhtest/settings.hpp"

#include <algorithm>
#include <string>

#include "mhtest/error.hpp"

namespace mhtest {

const std::vector<PiEntry>& pi_library(std::size_t d) {
  static const std::vector<PiEntry> d5 = {
      {ProbVector({0.2, 0.2, 0.2, 0.2, 0.2}), 0.0},
      {ProbVector({0.1, 0.15, 0.2, 0.25, 0.3}), 0.025},
      {ProbVector({0.05, 0.125, 0.2, 0.275, 0.35}), 0.056},
      {ProbVector({0.05, 0.05, 0.2, 0.35, 0.35}), 0.090},
      {ProbVector({0.05, 0.125, 0.125, 0.125, 0.575}), 0.180},
  };
  static const std::vector<PiEntry> d10 = {
      {ProbVector({0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1, 0.1}), 0.0},
      {ProbVector({0.02, 0.04, 0.06, 0.08, 0.10, 0.10, 0.12, 0.14, 0.16, 0.18}), 0.024},
      {ProbVector({0.01, 0.01, 0.03, 0.03, 0.10, 0.10, 0.12, 0.2, 0.2, 0.2}), 0.056},
      {ProbVector({0.01, 0.01, 0.02, 0.03, 0.03, 0.03, 0.21, 0.22, 0.22, 0.22}), 0.092},
      {ProbVector({0.01, 0.01, 0.01, 0.01, 0.01, 0.01, 0.10, 0.20, 0.20, 0.44}), 0.184},
  };
  if (d == 5) return d5;
  if (d == 10) return d10;
  throw Error(ErrorKind::UnsupportedDimension, "reference vectors exist for d = 5 and d = 10 only");
}

std::string_view to_string(Pi0 p) noexcept {
  switch (p) {
    case Pi0::pi2: return "pi2";
    case Pi0::pi4: return "pi4";
    case Pi0::none: break;
  }
  return "none";
}

std::optional<Pi0> parse_pi0(std::string_view name) noexcept {
  if (name == "none" || name.empty()) return Pi0::none;
  if (name == "pi2" || name == "2") return Pi0::pi2;
  if (name == "pi4" || name == "4") return Pi0::pi4;
  return std::nullopt;
}

Count SettingSpec::max_total() const {
  if (listed_sizes.empty()) return std::max(sizes.n1, sizes.n2);
  Count m = 0;
  for (const auto& s : listed_sizes) m = std::max({m, s.n1, s.n2});
  return m;
}

void validate(const SettingSpec& spec) {
  if (spec.setting < 1 || spec.setting > 5) {
    throw Error(ErrorKind::InvalidArgument, "setting must be 1..5, got " + std::to_string(spec.setting));
  }
  if (spec.setting == 1) {
    if (spec.d != 5 && spec.d != 10 && spec.d != 20) {
      throw Error(ErrorKind::UnsupportedDimension, "setting 1 supports d = 5, 10, 20");
    }
  } else if (spec.d != 5 && spec.d != 10) {
    throw Error(ErrorKind::UnsupportedDimension,
                "setting " + std::to_string(spec.setting) + " supports d = 5, 10");
  }
  const bool needs_pi0 = spec.setting == 3 || spec.setting == 4;
  if (needs_pi0 && spec.pi0 == Pi0::none) {
    throw Error(ErrorKind::InvalidArgument, "settings 3 and 4 need pi0 = pi2 or pi4");
  }
  if (!needs_pi0 && spec.pi0 != Pi0::none) {
    throw Error(ErrorKind::InvalidArgument, "pi0 applies to settings 3 and 4 only");
  }
  if (spec.k < 1) throw Error(ErrorKind::InvalidArgument, "k must be >= 1");
  if (!spec.listed_sizes.empty() && spec.listed_sizes.size() != spec.k) {
    throw Error(ErrorKind::InvalidArgument, "listed sizes must have k entries");
  }
  for (std::size_t r = 0; r < spec.k; ++r) {
    const SizePair s = spec.size_for(r);
    if (s.n1 < 1 || s.n2 < 1) throw Error(ErrorKind::InvalidArgument, "sample sizes must be >= 1");
  }
}

ReplicateGenerator::ReplicateGenerator(SettingSpec spec) : spec_(std::move(spec)) {
  validate(spec_);
  if (spec_.setting == 1) {
    palette_.push_back(ProbVector::uniform(spec_.d));
  } else {
    for (const auto& e : pi_library(spec_.d)) palette_.push_back(e.pi);
    pi0_index_ = spec_.pi0 == Pi0::pi4 ? 3 : 1;
    palette_.push_back(palette_[pi0_index_].reversed());
  }
  const Count max_n = spec_.max_total();
  samplers_.reserve(palette_.size());
  for (const auto& p : palette_) samplers_.emplace_back(p.probs(), max_n);
}

void ReplicateGenerator::generate(std::uint64_t replicate, std::span<Count> counts,
                                  std::span<GroupLaw> laws) const {
  const std::size_t d = spec_.d;
  for (std::size_t r = 0; r < spec_.k; ++r) {
    Xoshiro256pp rng = make_stream(spec_.master_seed, replicate, r, StreamPhase::Data);
    GroupLaw law;
    switch (spec_.setting) {
      case 1:
        break;
      case 2:
        law.pi1 = law.pi2 = static_cast<std::uint8_t>(rng() % 5);
        break;
      case 3:
      case 4: {
        const auto u = static_cast<std::uint8_t>(rng() % 10);
        if (u < 8) {
          law.pi1 = law.pi2 = static_cast<std::uint8_t>(u / 2);
        } else {
          law.pi1 = 0;
          law.pi2 = (spec_.setting == 4 && u == 9) ? 5 : pi0_index_;
        }
        break;
      }
      case 5:
        law.pi1 = static_cast<std::uint8_t>(rng() % 5);
        law.pi2 = static_cast<std::uint8_t>(rng() % 5);
        break;
    }
    laws[r] = law;
    const SizePair s = spec_.size_for(r);
    samplers_[law.pi1](rng, s.n1, counts.subspan(2 * r * d, d));
    samplers_[law.pi2](rng, s.n2, counts.subspan((2 * r + 1) * d, d));
  }
}

GroupedDataset dataset_from_flat(std::span<const Count> counts, std::size_t k, std::size_t d) {
  std::vector<GroupPair> groups;
  groups.reserve(k);
  for (std::size_t r = 0; r < k; ++r) {
    const auto* base = counts.data() + 2 * r * d;
    groups.emplace_back(std::to_string(r + 1), CountVector(std::vector<Count>(base, base + d)),
                        CountVector(std::vector<Count>(base + d, base + 2 * d)));
  }
  return GroupedDataset(std::move(groups));
}

Replicate ReplicateGenerator::generate(std::uint64_t replicate) const {
  std::vector<Count> counts(2 * spec_.k * spec_.d);
  std::vector<GroupLaw> laws(spec_.k);
  generate(replicate, counts, laws);
  std::vector<bool> truth(spec_.k);
  for (std::size_t r = 0; r < spec_.k; ++r) truth[r] = laws[r].null();
  return Replicate{dataset_from_flat(counts, spec_.k, spec_.d), std::move(laws), std::move(truth)};
}

Replicate generate_replicate(const SettingSpec& spec, std::uint64_t replicate) {
  return ReplicateGenerator(spec).generate(replicate);
}

}  // namespace mhtest
