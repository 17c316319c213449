#include "mhtest/random.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mhtest/error.hpp"

namespace mhtest {

namespace {

constexpr std::uint64_t mix64(std::uint64_t z) noexcept {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

// Below this mean the inversion sampler is used.
constexpr double kInversionMeanLimit = 30.0;

Count binomial_inversion(Xoshiro256pp& rng, Count n, double q, double start) {
  const double s = q / (1.0 - q);
  const double a = static_cast<double>(n + 1) * s;
  while (true) {
    double u = rng.uniform();
    double r = start;
    Count x = 0;
    while (u > r) {
      u -= r;
      ++x;
      if (x > n) break;
      r *= a / static_cast<double>(x) - s;
    }
    if (x <= n) return x;
  }
}

Count binomial_with_q(Xoshiro256pp& rng, Count n, double q, double start) {
  if (static_cast<double>(n) * q < kInversionMeanLimit) return binomial_inversion(rng, n, q, start);
  std::binomial_distribution<long long> dist(n, q);
  return dist(rng);
}

}  // namespace

Xoshiro256pp make_stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b, StreamPhase phase) {
  std::uint64_t h = mix64(seed + kGolden);
  h = mix64(h ^ (a * 0xD1B54A32D192ED03ULL + kGolden));
  h = mix64(h ^ (b * 0xAEF17502108EF2D9ULL + kGolden));
  h = mix64(h ^ (static_cast<std::uint64_t>(phase) * 0xDB4F0B9175AE2165ULL + kGolden));
  std::array<std::uint64_t, 4> state{};
  for (auto& word : state) {
    h += kGolden;
    word = mix64(h);
  }
  return Xoshiro256pp(state);
}

Count sample_binomial(Xoshiro256pp& rng, Count n, double p) {
  if (n <= 0 || p <= 0.0) return 0;
  if (p >= 1.0) return n;
  const bool flip = p > 0.5;
  const double q = flip ? 1.0 - p : p;
  const double start = static_cast<double>(n) * q < kInversionMeanLimit
                           ? std::pow(1.0 - q, static_cast<double>(n))
                           : 0.0;
  const Count x = binomial_with_q(rng, n, q, start);
  return flip ? n - x : x;
}

void sample_multinomial(Xoshiro256pp& rng, Count n, std::span<const double> pi, std::span<Count> out) {
  if (out.size() != pi.size()) throw Error(ErrorKind::DimensionMismatch, "output size differs from d");
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "negative multinomial size");
  const std::size_t d = pi.size();
  Count remaining = n;
  double mass = 1.0;
  for (std::size_t j = 0; j + 1 < d; ++j) {
    if (remaining == 0) {
      out[j] = 0;
      continue;
    }
    const double p = mass > 0.0 ? std::clamp(pi[j] / mass, 0.0, 1.0) : 1.0;
    const Count x = sample_binomial(rng, remaining, p);
    out[j] = x;
    remaining -= x;
    mass -= pi[j];
  }
  out[d - 1] = remaining;
}

CountVector sample_multinomial(Xoshiro256pp& rng, Count n, const ProbVector& pi) {
  std::vector<Count> out(pi.dim());
  sample_multinomial(rng, n, pi.probs(), out);
  return CountVector(std::move(out));
}

MultinomialSampler::MultinomialSampler(std::span<const double> pi, Count max_n)
    : dim_(pi.size()), max_n_(std::max<Count>(max_n, 0)) {
  // Mirror the running-mass arithmetic of sample_multinomial exactly.
  double mass = 1.0;
  for (std::size_t j = 0; j + 1 < dim_; ++j) {
    const double p = mass > 0.0 ? std::clamp(pi[j] / mass, 0.0, 1.0) : 1.0;
    cond_p_.push_back(p);
    Step step;
    step.never = p <= 0.0;
    step.certain = p >= 1.0;
    step.flip = p > 0.5;
    step.q = step.flip ? 1.0 - p : p;
    if (!step.never && !step.certain) {
      step.start.resize(static_cast<std::size_t>(max_n_) + 1);
      for (Count m = 0; m <= max_n_; ++m) {
        step.start[static_cast<std::size_t>(m)] =
            static_cast<double>(m) * step.q < kInversionMeanLimit
                ? std::pow(1.0 - step.q, static_cast<double>(m))
                : 0.0;
      }
    }
    steps_.push_back(std::move(step));
    mass -= pi[j];
  }
}

void MultinomialSampler::operator()(Xoshiro256pp& rng, Count n, std::span<Count> out) const {
  Count remaining = n;
  for (std::size_t j = 0; j + 1 < dim_; ++j) {
    if (remaining == 0) {
      out[j] = 0;
      continue;
    }
    const Step& step = steps_[j];
    Count x;
    if (step.never) {
      x = 0;
    } else if (step.certain) {
      x = remaining;
    } else if (remaining <= max_n_) {
      const Count y = binomial_with_q(rng, remaining, step.q, step.start[static_cast<std::size_t>(remaining)]);
      x = step.flip ? remaining - y : y;
    } else {
      x = sample_binomial(rng, remaining, cond_p_[j]);
    }
    out[j] = x;
    remaining -= x;
  }
  out[dim_ - 1] = remaining;
}

}  // namespace mhtest
