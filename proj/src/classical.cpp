#include "mhtest/classical.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <utility>
#include <vector>

#include "mhtest/distributions.hpp"
#include "mhtest/error.hpp"
#include "mhtest/random.hpp"

namespace mhtest {

namespace {

// Per-cell contribution of each statistic for fixed sample totals.
struct CellTerm {
  ClassicalStatistic stat;
  double n1, n2;

  double operator()(double a, double b) const noexcept {
    const double pooled = a + b;
    if (pooled == 0.0) return 0.0;
    if (stat == ClassicalStatistic::chi_square) {
      const double diff = a / n1 - b / n2;
      return n1 * n2 * diff * diff / pooled;
    }
    const double n = n1 + n2;
    double g = 0.0;
    if (a > 0.0) g += a * std::log(a * n / (n1 * pooled));
    if (b > 0.0) g += b * std::log(b * n / (n2 * pooled));
    return 2.0 * g;
  }
};

void require_nonempty(std::span<const Count> c1, std::span<const Count> c2, Count& n1, Count& n2) {
  if (c1.size() != c2.size()) throw Error(ErrorKind::DimensionMismatch, "samples differ in d");
  n1 = sum_counts(c1);
  n2 = sum_counts(c2);
  if (n1 < 1 || n2 < 1) throw Error(ErrorKind::ZeroTotal, "each sample needs at least one observation");
}

double evaluate(ClassicalStatistic stat, std::span<const Count> c1, std::span<const Count> c2) {
  Count n1 = 0, n2 = 0;
  require_nonempty(c1, c2, n1, n2);
  const CellTerm term{stat, static_cast<double>(n1), static_cast<double>(n2)};
  double sum = 0.0;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    sum += term(static_cast<double>(c1[j]), static_cast<double>(c2[j]));
  }
  // Rounding can leave tiny negative LRT values for identical proportions.
  return stat == ClassicalStatistic::lrt ? std::max(sum, 0.0) : sum;
}

template <typename PerGroup>
double sum_over_groups(const GroupedDataset& ds, PerGroup per_group) {
  double sum = 0.0;
  for (const auto& g : ds.groups()) sum += per_group(g);
  return sum;
}

double primed(const GroupedDataset& ds, std::span<const MomentPair> moments,
              double (*per_group)(const GroupPair&)) {
  if (moments.size() != ds.k()) {
    throw Error(ErrorKind::DimensionMismatch, "need one moment pair per group");
  }
  double centred = 0.0;
  double var = 0.0;
  for (std::size_t r = 0; r < ds.k(); ++r) {
    centred += per_group(ds[r]) - moments[r].mean;
    var += moments[r].variance;
  }
  if (!(var > 0.0)) throw Error(ErrorKind::ZeroVariance, "summed null variance is not positive");
  return centred / std::sqrt(var);
}

}  // namespace

double chi_square_group(std::span<const Count> c1, std::span<const Count> c2) {
  return evaluate(ClassicalStatistic::chi_square, c1, c2);
}

double chi_square_group(const GroupPair& p) {
  try {
    return chi_square_group(p.sample1.counts(), p.sample2.counts());
  } catch (const Error& e) {
    throw e.with_group(p.group_id);
  }
}

double lrt_group(std::span<const Count> c1, std::span<const Count> c2) {
  return evaluate(ClassicalStatistic::lrt, c1, c2);
}

double lrt_group(const GroupPair& p) {
  try {
    return lrt_group(p.sample1.counts(), p.sample2.counts());
  } catch (const Error& e) {
    throw e.with_group(p.group_id);
  }
}

double uit_statistic(const GroupedDataset& ds) {
  return sum_over_groups(ds, [](const GroupPair& g) { return chi_square_group(g); });
}

double standardize_chi_square_sum(double sum, std::size_t k, std::size_t d) {
  const double df = static_cast<double>(d) - 1.0;
  const double kk = static_cast<double>(k);
  return (sum - kk * df) / (std::sqrt(kk) * std::sqrt(2.0 * df));
}

double wk_statistic(const GroupedDataset& ds) {
  return standardize_chi_square_sum(uit_statistic(ds), ds.k(), ds.dim());
}

double vk_statistic(const GroupedDataset& ds) {
  const double s = sum_over_groups(ds, [](const GroupPair& g) { return lrt_group(g); });
  return standardize_chi_square_sum(s, ds.k(), ds.dim());
}

double wk_prime(const GroupedDataset& ds, std::span<const MomentPair> moments) {
  return primed(ds, moments, [](const GroupPair& g) { return chi_square_group(g); });
}

double vk_prime(const GroupedDataset& ds, std::span<const MomentPair> moments) {
  return primed(ds, moments, [](const GroupPair& g) { return lrt_group(g); });
}

double pooled_chi_square(const GroupedDataset& ds) {
  std::vector<Count> s1(ds.dim(), 0), s2(ds.dim(), 0);
  for (const auto& g : ds.groups()) {
    for (std::size_t j = 0; j < ds.dim(); ++j) {
      s1[j] += g.sample1[j];
      s2[j] += g.sample2[j];
    }
  }
  return chi_square_group(s1, s2);
}

double pooled_chi_square_pvalue(const GroupedDataset& ds) {
  return chi_square_upper_tail(pooled_chi_square(ds), static_cast<double>(ds.dim()) - 1.0);
}

std::uint64_t outcome_pair_count(std::size_t d, Count n1, Count n2) noexcept {
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  auto compositions = [&](Count n) -> std::uint64_t {
    // C(n + d - 1, d - 1), computed incrementally; saturates.
    std::uint64_t c = 1;
    const std::uint64_t top = static_cast<std::uint64_t>(n) + d - 1;
    for (std::uint64_t i = 1; i < d; ++i) {
      const std::uint64_t num = top - (d - 1) + i;
      if (c > kMax / num) return kMax;
      c = c * num / i;
    }
    return c;
  };
  const std::uint64_t a = compositions(n1);
  const std::uint64_t b = compositions(n2);
  if (a != 0 && b > kMax / a) return kMax;
  return a * b;
}

namespace {

double log_choose(double n, double k) {
  return std::lgamma(n + 1.0) - std::lgamma(k + 1.0) - std::lgamma(n - k + 1.0);
}

double binomial_pmf(Count k, Count n, double p) {
  if (k < 0 || k > n) return 0.0;
  if (p <= 0.0) return k == 0 ? 1.0 : 0.0;
  if (p >= 1.0) return k == n ? 1.0 : 0.0;
  const double kk = static_cast<double>(k), nn = static_cast<double>(n);
  return std::exp(log_choose(nn, kk) + kk * std::log(p) + (nn - kk) * std::log1p(-p));
}

// P(X = x, Y = y) for the (j, l) cells of a multinomial(n, pi), as a
// (n+1) x (n+1) row-major table.
std::vector<double> trinomial_table(Count n, double pj, double pl) {
  const std::size_t w = static_cast<std::size_t>(n) + 1;
  std::vector<double> table(w * w, 0.0);
  const double rest = 1.0 - pj;
  const double cond = rest > 0.0 ? std::min(1.0, pl / rest) : 0.0;
  for (Count x = 0; x <= n; ++x) {
    const double px = binomial_pmf(x, n, pj);
    if (px == 0.0) continue;
    for (Count y = 0; y <= n - x; ++y) {
      table[static_cast<std::size_t>(x) * w + static_cast<std::size_t>(y)] = px * binomial_pmf(y, n - x, cond);
    }
  }
  return table;
}

MomentPair cell_marginal_moments(const CellTerm& term, const ProbVector& pi, Count n1, Count n2) {
  const std::size_t d = pi.dim();
  const std::size_t w1 = static_cast<std::size_t>(n1) + 1;
  const std::size_t w2 = static_cast<std::size_t>(n2) + 1;

  std::vector<double> g(w1 * w2);
  for (std::size_t a = 0; a < w1; ++a) {
    for (std::size_t b = 0; b < w2; ++b) g[a * w2 + b] = term(static_cast<double>(a), static_cast<double>(b));
  }

  // First and second moments of each cell term.
  std::vector<double> first(d, 0.0), second(d, 0.0);
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t a = 0; a < w1; ++a) {
      const double pa = binomial_pmf(static_cast<Count>(a), n1, pi[j]);
      if (pa == 0.0) continue;
      for (std::size_t b = 0; b < w2; ++b) {
        const double pb = binomial_pmf(static_cast<Count>(b), n2, pi[j]);
        const double v = g[a * w2 + b];
        first[j] += pa * pb * v;
        second[j] += pa * pb * v * v;
      }
    }
  }

  // E[g_j g_l] for j < l; identical probability pairs share one evaluation.
  std::map<std::pair<double, double>, double> memo;
  auto cross_moment = [&](double pj, double pl) {
    const auto key = pj <= pl ? std::make_pair(pj, pl) : std::make_pair(pl, pj);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    const auto t1 = trinomial_table(n1, key.first, key.second);
    const auto t2 = trinomial_table(n2, key.first, key.second);
    // inner[y][u] = sum_v P2(u, v) g(y, v)
    std::vector<double> inner(w1 * w2, 0.0);
    for (std::size_t y = 0; y < w1; ++y) {
      for (std::size_t u = 0; u < w2; ++u) {
        double s = 0.0;
        for (std::size_t v = 0; u + v < w2; ++v) s += t2[u * w2 + v] * g[y * w2 + v];
        inner[y * w2 + u] = s;
      }
    }
    double total = 0.0;
    for (std::size_t x = 0; x < w1; ++x) {
      for (std::size_t y = 0; x + y < w1; ++y) {
        const double pxy = t1[x * w1 + y];
        if (pxy == 0.0) continue;
        double s = 0.0;
        for (std::size_t u = 0; u < w2; ++u) s += g[x * w2 + u] * inner[y * w2 + u];
        total += pxy * s;
      }
    }
    memo.emplace(key, total);
    return total;
  };

  double mean = 0.0, second_moment = 0.0;
  for (std::size_t j = 0; j < d; ++j) {
    mean += first[j];
    second_moment += second[j];
    for (std::size_t l = j + 1; l < d; ++l) second_moment += 2.0 * cross_moment(pi[j], pi[l]);
  }
  return {mean, std::max(0.0, second_moment - mean * mean)};
}

// All count vectors of total n over d cells, with their probabilities.
void enumerate_outcomes(const ProbVector& pi, Count n, std::vector<std::vector<Count>>& vectors,
                        std::vector<double>& probs) {
  const std::size_t d = pi.dim();
  std::vector<Count> current(d, 0);
  std::function<void(std::size_t, Count, double)> rec = [&](std::size_t j, Count left, double logp) {
    if (j + 1 == d) {
      current[j] = left;
      double lp = logp - std::lgamma(static_cast<double>(left) + 1.0);
      if (left > 0) {
        if (pi[j] <= 0.0) return;
        lp += static_cast<double>(left) * std::log(pi[j]);
      }
      vectors.push_back(current);
      probs.push_back(std::exp(lp + std::lgamma(static_cast<double>(n) + 1.0)));
      return;
    }
    for (Count c = 0; c <= left; ++c) {
      if (c > 0 && pi[j] <= 0.0) break;
      current[j] = c;
      const double term = c > 0 ? static_cast<double>(c) * std::log(pi[j]) : 0.0;
      rec(j + 1, left - c, logp + term - std::lgamma(static_cast<double>(c) + 1.0));
    }
  };
  rec(0, n, 0.0);
}

MomentPair exact_moments(ClassicalStatistic stat, const ProbVector& pi, Count n1, Count n2,
                         std::uint64_t max_outcomes) {
  if (outcome_pair_count(pi.dim(), n1, n2) > max_outcomes) {
    throw Error(ErrorKind::TooManyOutcomes, "exact enumeration exceeds the outcome limit");
  }
  std::vector<std::vector<Count>> v1, v2;
  std::vector<double> p1, p2;
  enumerate_outcomes(pi, n1, v1, p1);
  enumerate_outcomes(pi, n2, v2, p2);
  double mean = 0.0, second = 0.0;
  for (std::size_t a = 0; a < v1.size(); ++a) {
    for (std::size_t b = 0; b < v2.size(); ++b) {
      const double t = evaluate(stat, v1[a], v2[b]);
      const double w = p1[a] * p2[b];
      mean += w * t;
      second += w * t * t;
    }
  }
  return {mean, std::max(0.0, second - mean * mean)};
}

MomentPair montecarlo_moments(ClassicalStatistic stat, const ProbVector& pi, Count n1, Count n2,
                              std::int64_t reps, std::uint64_t seed) {
  if (reps < 2) throw Error(ErrorKind::InvalidReps, "Monte Carlo moments need reps >= 2");
  const MultinomialSampler sampler(pi.probs(), std::max(n1, n2));
  std::vector<Count> x1(pi.dim()), x2(pi.dim());
  Xoshiro256pp rng = make_stream(seed, 0, 0, StreamPhase::MomentMonteCarlo);
  // Welford accumulation.
  double mean = 0.0, m2 = 0.0;
  for (std::int64_t i = 0; i < reps; ++i) {
    sampler(rng, n1, x1);
    sampler(rng, n2, x2);
    const double t = evaluate(stat, x1, x2);
    const double delta = t - mean;
    mean += delta / static_cast<double>(i + 1);
    m2 += delta * (t - mean);
  }
  return {mean, m2 / static_cast<double>(reps - 1)};
}

}  // namespace

MomentPair classical_moments(ClassicalStatistic stat, const ProbVector& pi, Count n1, Count n2,
                             const MomentOptions& options) {
  if (n1 < 1 || n2 < 1) throw Error(ErrorKind::ZeroTotal, "sample totals must be >= 1");
  switch (options.method) {
    case MomentMethod::exact:
      return exact_moments(stat, pi, n1, n2, options.max_outcomes);
    case MomentMethod::cell_marginal:
      return cell_marginal_moments(CellTerm{stat, static_cast<double>(n1), static_cast<double>(n2)}, pi, n1,
                                   n2);
    case MomentMethod::montecarlo:
      return montecarlo_moments(stat, pi, n1, n2, options.reps, options.seed);
  }
  return {};
}

}  // namespace mhtest
