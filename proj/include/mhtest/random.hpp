#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <span>
#include <vector>

#include "mhtest/counts.hpp"

namespace mhtest {

/// Identifies the generator family; bump when the stream construction or
/// any sampling algorithm changes, since that changes every simulated value.
inline constexpr const char* kRngVersion = "xoshiro256++/splitmix64-key/v1";

/// xoshiro256++ (Blackman & Vigna, 2019). Satisfies UniformRandomBitGenerator.
class Xoshiro256pp {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256pp(std::array<std::uint64_t, 4> state) noexcept : s_(state) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double uniform() noexcept { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

 private:
  static constexpr std::uint64_t rotl(std::uint64_t x, int k) noexcept {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> s_;
};

/// Draw phases. Part of the stream key so that, e.g., the bootstrap draws
/// of a replicate never overlap its data draws.
enum class StreamPhase : std::uint64_t {
  Data = 1,
  Assignment = 2,
  Bootstrap = 3,
  PerGroupBootstrap = 4,
  MomentMonteCarlo = 5,
  Benchmark = 6,
};

/// Independent stream keyed by (seed, a, b, phase). The key is hashed with
/// the SplitMix64 finaliser, so any worker can construct any stream without
/// coordination.
Xoshiro256pp make_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b, StreamPhase phase);

/// Binomial(n, p). Inversion for n*min(p,1-p) < 30, otherwise
/// std::binomial_distribution.
Count sample_binomial(Xoshiro256pp& rng, Count n, double p);

/// Conditional-binomial multinomial draw into `out` (size d).
void sample_multinomial(Xoshiro256pp& rng, Count n, std::span<const double> pi, std::span<Count> out);
CountVector sample_multinomial(Xoshiro256pp& rng, Count n, const ProbVector& pi);

/// Multinomial sampler for a fixed probability vector with cached
/// conditional probabilities and inversion start values for totals up to
/// `max_n`. Produces exactly the same draws as sample_multinomial.
class MultinomialSampler {
 public:
  MultinomialSampler(std::span<const double> pi, Count max_n);

  void operator()(Xoshiro256pp& rng, Count n, std::span<Count> out) const;
  std::size_t dim() const noexcept { return dim_; }

 private:
  struct Step {
    double q = 0.0;       // min(p, 1-p) of the conditional probability
    bool flip = false;    // p > 0.5
    bool certain = false; // conditional p >= 1
    bool never = false;   // conditional p <= 0
    std::vector<double> start;  // (1-q)^m for m in [0, max_n]
  };
  std::size_t dim_;
  Count max_n_;
  std::vector<double> cond_p_;
  std::vector<Step> steps_;
};

}  // namespace mhtest
