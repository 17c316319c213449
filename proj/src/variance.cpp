#include "mhtest/variance.hpp"

#include <cmath>
#include <string>

#include "mhtest/error.hpp"
#include "mhtest/parallel.hpp"
#include "mhtest/random.hpp"
#include "mhtest/ustat.hpp"

namespace mhtest {

std::string_view to_string(Estimator e) noexcept {
  switch (e) {
    case Estimator::test1: return "test1";
    case Estimator::test2: return "test2";
    case Estimator::test3: return "test3";
    case Estimator::test4: return "test4";
    case Estimator::test5: return "test5";
    case Estimator::test6: return "test6";
    case Estimator::test7: return "test7";
  }
  return "unknown";
}

std::optional<Estimator> parse_estimator(std::string_view name) noexcept {
  for (Estimator e : kAllEstimators) {
    if (name == to_string(e)) return e;
  }
  if (name.size() == 1 && name[0] >= '1' && name[0] <= '7') {
    return static_cast<Estimator>(name[0] - '0');
  }
  return std::nullopt;
}

Count min_sample_total(Estimator e) noexcept {
  switch (e) {
    case Estimator::test1: return 4;
    default: return 2;
  }
}

std::string_view to_string(VarianceSource s) noexcept {
  switch (s) {
    case VarianceSource::true_null: return "true_null";
    case VarianceSource::true_full: return "true_full";
    default: return to_string(static_cast<Estimator>(static_cast<int>(s)));
  }
}

VarianceSource source_of(Estimator e) noexcept { return static_cast<VarianceSource>(static_cast<int>(e)); }

CovMatrix& CovMatrix::operator*=(double s) {
  for (double& v : a_) v *= s;
  return *this;
}

CovMatrix centered_outer(std::span<const double> p) {
  const std::size_t d = p.size();
  CovMatrix m(d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m(i, j) = (i == j ? p[i] : 0.0) - p[i] * p[j];
  }
  return m;
}

CovMatrix centered_outer(const ProbVector& p) { return centered_outer(p.probs()); }

CovMatrix unbiased_sigma(const CountVector& c) {
  if (c.total() < 2) throw Error(ErrorKind::SampleTooSmall, "unbiased covariance needs total >= 2");
  const double n = static_cast<double>(c.total());
  CovMatrix m = centered_outer(empirical_proportions(c));
  m *= n / (n - 1.0);
  return m;
}

double trace_product(const CovMatrix& a, const CovMatrix& b) {
  if (a.dim() != b.dim()) throw Error(ErrorKind::DimensionMismatch, "matrix dimensions differ");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    for (std::size_t j = 0; j < a.dim(); ++j) sum += a(i, j) * b(i, j);
  }
  return sum;
}

double trace_sigma_sq(std::span<const double> p) noexcept {
  double s2 = 0.0, s3 = 0.0;
  for (double x : p) {
    s2 += x * x;
    s3 += x * x * x;
  }
  return s2 - 2.0 * s3 + s2 * s2;
}

double trace_sigma_product(std::span<const double> p, std::span<const double> q) noexcept {
  double pq = 0.0, pqq = 0.0, ppq = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double x = p[j] * q[j];
    pq += x;
    pqq += x * q[j];
    ppq += x * p[j];
  }
  return pq - pqq - ppq + pq * pq;
}

namespace {

// Shared body of the unbiased tr(Sigma^2) estimator; count_at(j) yields the
// j-th category count.
template <typename CountAt>
double unbiased_trace_sq(std::size_t d, Count total, CountAt count_at) {
  if (total < 4) {
    throw Error(ErrorKind::SampleTooSmall, "unbiased tr(Sigma^2) needs total >= 4");
  }
  const double n = static_cast<double>(total);
  const double m = n - 2.0;
  double sum = 0.0;
  for (std::size_t t = 0; t < d; ++t) {
    const Count ct = count_at(t);
    if (ct == 0) continue;
    const double nt = static_cast<double>(ct);
    for (std::size_t s = t + 1; s < d; ++s) {
      const Count cs = count_at(s);
      if (cs == 0) continue;
      const double ns = static_cast<double>(cs);
      const double diff = (nt - ns) / m;
      sum += nt * ns * ((nt + ns - 2.0) / m - diff * diff);
    }
  }
  // 2 * (unordered sum) == ordered sum over t != s.
  return 0.5 * m / (n * (n - 1.0) * (n - 3.0)) * 2.0 * sum;
}

}  // namespace

double trace_sigma_sq_unbiased(std::span<const Count> counts) {
  return unbiased_trace_sq(counts.size(), sum_counts(counts), [&](std::size_t j) { return counts[j]; });
}

double trace_sigma_sq_unbiased(const CountVector& c) { return trace_sigma_sq_unbiased(c.counts()); }

namespace {

struct Coefficients {
  double first;   // 2 / (n1 (n1 - 1))
  double second;  // 2 / (n2 (n2 - 1))
  double cross;   // 4 / (n1 n2)
  double sum() const noexcept { return first + second + cross; }
};

Coefficients coefficients(double n1, double n2) noexcept {
  return {2.0 / (n1 * (n1 - 1.0)), 2.0 / (n2 * (n2 - 1.0)), 4.0 / (n1 * n2)};
}

// Power sums of proportions needed by the O(d) trace identities.
struct Traces {
  double n1 = 0.0, n2 = 0.0;
  double sq1 = 0.0;     // tr(Sigma_{p1}^2)
  double sq2 = 0.0;     // tr(Sigma_{p2}^2)
  double cross = 0.0;   // tr(Sigma_{p1} Sigma_{p2})
  double pooled = 0.0;  // tr(Sigma_{pbar}^2), pbar pooled proportions
};

Traces plug_in_traces(std::span<const Count> c1, std::span<const Count> c2) {
  Count t1 = 0, t2 = 0;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    t1 += c1[j];
    t2 += c2[j];
  }
  Traces t;
  t.n1 = static_cast<double>(t1);
  t.n2 = static_cast<double>(t2);
  const double inv1 = 1.0 / t.n1, inv2 = 1.0 / t.n2, invp = 1.0 / (t.n1 + t.n2);
  double a2 = 0, a3 = 0, b2 = 0, b3 = 0, ab = 0, abb = 0, aab = 0, p2 = 0, p3 = 0;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    const double a = static_cast<double>(c1[j]) * inv1;
    const double b = static_cast<double>(c2[j]) * inv2;
    const double p = static_cast<double>(c1[j] + c2[j]) * invp;
    a2 += a * a;
    a3 += a * a * a;
    b2 += b * b;
    b3 += b * b * b;
    ab += a * b;
    abb += a * b * b;
    aab += a * a * b;
    p2 += p * p;
    p3 += p * p * p;
  }
  t.sq1 = a2 - 2.0 * a3 + a2 * a2;
  t.sq2 = b2 - 2.0 * b3 + b2 * b2;
  t.cross = ab - abb - aab + ab * ab;
  t.pooled = p2 - 2.0 * p3 + p2 * p2;
  return t;
}

void require_totals(std::span<const Count> c1, std::span<const Count> c2, Estimator e) {
  if (c1.size() != c2.size()) throw Error(ErrorKind::DimensionMismatch, "samples differ in d");
  const Count n1 = sum_counts(c1);
  const Count n2 = sum_counts(c2);
  const Count need = min_sample_total(e);
  if (n1 < need || n2 < need) {
    throw Error(ErrorKind::SampleTooSmall, std::string(to_string(e)) + " needs every sample total >= " +
                                               std::to_string(need));
  }
  if (e == Estimator::test3 && n1 + n2 < 4) {
    throw Error(ErrorKind::SampleTooSmall, "test3 needs pooled total >= 4");
  }
}

}  // namespace

double var0_group(std::span<const Count> c1, std::span<const Count> c2, Estimator e) {
  if (e == Estimator::test7) {
    throw Error(ErrorKind::InvalidArgument, "test7 is a dataset-level bootstrap estimator");
  }
  require_totals(c1, c2, e);
  const Traces t = plug_in_traces(c1, c2);
  const Coefficients k = coefficients(t.n1, t.n2);
  const double shrink1 = t.n1 / (t.n1 - 1.0);
  const double shrink2 = t.n2 / (t.n2 - 1.0);
  switch (e) {
    case Estimator::test1:
      return k.first * trace_sigma_sq_unbiased(c1) + k.second * trace_sigma_sq_unbiased(c2) +
             k.cross * shrink1 * shrink2 * t.cross;
    case Estimator::test2:
      return k.sum() * shrink1 * shrink2 * t.cross;
    case Estimator::test3: {
      const Count total = static_cast<Count>(t.n1 + t.n2);
      return k.sum() * unbiased_trace_sq(c1.size(), total, [&](std::size_t j) { return c1[j] + c2[j]; });
    }
    case Estimator::test4:
      return k.first * t.sq1 + k.second * t.sq2 + k.cross * t.cross;
    case Estimator::test5:
      return k.sum() * t.cross;
    case Estimator::test6:
      return k.sum() * t.pooled;
    case Estimator::test7:
      break;
  }
  return 0.0;
}

namespace {

double on_group(const GroupPair& p, Estimator e) {
  try {
    return var0_group(p.sample1.counts(), p.sample2.counts(), e);
  } catch (const Error& err) {
    throw err.with_group(p.group_id);
  }
}

}  // namespace

double var0_group_test1(const GroupPair& p) { return on_group(p, Estimator::test1); }
double var0_group_test2(const GroupPair& p) { return on_group(p, Estimator::test2); }
double var0_group_test3(const GroupPair& p) { return on_group(p, Estimator::test3); }

double var0_group_plugin(const GroupPair& p, Estimator variant) {
  if (variant != Estimator::test4 && variant != Estimator::test5 && variant != Estimator::test6) {
    throw Error(ErrorKind::InvalidArgument, "plug-in variant must be test4, test5 or test6");
  }
  return on_group(p, variant);
}

double var0_bootstrap(const GroupedDataset& ds, int B, std::uint64_t seed, unsigned workers) {
  if (B < 2) throw Error(ErrorKind::InvalidB, "bootstrap needs B >= 2");
  const std::size_t d = ds.dim();
  std::vector<std::vector<double>> pooled(ds.k(), std::vector<double>(d));
  for (std::size_t r = 0; r < ds.k(); ++r) {
    const auto& g = ds[r];
    if (g.sample1.total() < 2 || g.sample2.total() < 2) {
      throw Error(ErrorKind::SampleTooSmall, "bootstrap needs every sample total >= 2", g.group_id);
    }
    const double n = static_cast<double>(g.sample1.total() + g.sample2.total());
    for (std::size_t j = 0; j < d; ++j) {
      pooled[r][j] = static_cast<double>(g.sample1[j] + g.sample2[j]) / n;
    }
  }

  std::vector<double> replicate(static_cast<std::size_t>(B));
  std::vector<std::vector<Count>> scratch(std::max(1u, workers), std::vector<Count>(2 * d));
  const double root_k = std::sqrt(static_cast<double>(ds.k()));
  parallel_for(replicate.size(), workers, [&](unsigned w, std::size_t b) {
    auto& buf = scratch[w];
    std::span<Count> x1(buf.data(), d), x2(buf.data() + d, d);
    Xoshiro256pp rng = make_stream(seed, b, 0, StreamPhase::Bootstrap);
    double sum = 0.0;
    for (std::size_t r = 0; r < ds.k(); ++r) {
      sample_multinomial(rng, ds[r].sample1.total(), pooled[r], x1);
      sample_multinomial(rng, ds[r].sample2.total(), pooled[r], x2);
      sum += group_ustat(x1, x2);
    }
    replicate[b] = sum / root_k;
  });

  double mean = 0.0;
  for (double v : replicate) mean += v;
  mean /= static_cast<double>(B);
  double ss = 0.0;
  for (double v : replicate) ss += (v - mean) * (v - mean);
  return ss / static_cast<double>(B - 1);
}

VarianceEstimate var0_estimate(const GroupedDataset& ds, Estimator e, std::uint64_t seed, int bootstrap_B,
                               unsigned workers) {
  if (e == Estimator::test7) {
    return {var0_bootstrap(ds, bootstrap_B, seed, workers), VarianceSource::test7};
  }
  double sum = 0.0;
  for (const auto& g : ds.groups()) sum += on_group(g, e);
  return {sum / static_cast<double>(ds.k()), source_of(e)};
}

namespace {

void require_matching(std::size_t a, std::size_t b) {
  if (a != b) throw Error(ErrorKind::DimensionMismatch, "per-group inputs differ in length");
  if (a == 0) throw Error(ErrorKind::EmptyInput, "no groups");
}

}  // namespace

double var0_true(std::span<const ProbVector> pis, std::span<const SizePair> sizes) {
  require_matching(pis.size(), sizes.size());
  double sum = 0.0;
  for (std::size_t r = 0; r < pis.size(); ++r) {
    const Coefficients k = coefficients(static_cast<double>(sizes[r].n1), static_cast<double>(sizes[r].n2));
    sum += k.sum() * trace_sigma_sq(pis[r].probs());
  }
  return sum / static_cast<double>(pis.size());
}

double var_true_full(const ProbVector& pi1, const ProbVector& pi2, Count n1, Count n2) {
  if (pi1.dim() != pi2.dim()) throw Error(ErrorKind::DimensionMismatch, "probability vectors differ in d");
  const auto p = pi1.probs();
  const auto q = pi2.probs();
  // delta^T Sigma_x delta = sum x delta^2 - (x^T delta)^2
  double p_dd = 0.0, q_dd = 0.0, p_d = 0.0, q_d = 0.0;
  for (std::size_t j = 0; j < p.size(); ++j) {
    const double delta = p[j] - q[j];
    p_dd += p[j] * delta * delta;
    q_dd += q[j] * delta * delta;
    p_d += p[j] * delta;
    q_d += q[j] * delta;
  }
  const double m1 = static_cast<double>(n1), m2 = static_cast<double>(n2);
  const Coefficients k = coefficients(m1, m2);
  return 4.0 / m1 * (p_dd - p_d * p_d) + 4.0 / m2 * (q_dd - q_d * q_d) + k.first * trace_sigma_sq(p) +
         k.second * trace_sigma_sq(q) + k.cross * trace_sigma_product(p, q);
}

double var0_at(std::span<const ProbVector> pi1, std::span<const ProbVector> pi2,
               std::span<const SizePair> sizes) {
  require_matching(pi1.size(), sizes.size());
  require_matching(pi2.size(), sizes.size());
  double sum = 0.0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const Coefficients k = coefficients(static_cast<double>(sizes[r].n1), static_cast<double>(sizes[r].n2));
    sum += k.first * trace_sigma_sq(pi1[r].probs()) + k.second * trace_sigma_sq(pi2[r].probs()) +
           k.cross * trace_sigma_product(pi1[r].probs(), pi2[r].probs());
  }
  return sum / static_cast<double>(sizes.size());
}

double var01_true(std::span<const ProbVector> pi1, std::span<const ProbVector> pi2,
                  std::span<const SizePair> sizes) {
  require_matching(pi1.size(), sizes.size());
  require_matching(pi2.size(), sizes.size());
  double sum = 0.0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const Coefficients k = coefficients(static_cast<double>(sizes[r].n1), static_cast<double>(sizes[r].n2));
    sum += k.sum() * trace_sigma_product(pi1[r].probs(), pi2[r].probs());
  }
  return sum / static_cast<double>(sizes.size());
}

double var02_true(std::span<const ProbVector> pi1, std::span<const ProbVector> pi2,
                  std::span<const SizePair> sizes) {
  require_matching(pi1.size(), sizes.size());
  require_matching(pi2.size(), sizes.size());
  double sum = 0.0;
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    const double m1 = static_cast<double>(sizes[r].n1), m2 = static_cast<double>(sizes[r].n2);
    const double lambda = m1 / (m1 + m2);
    const auto p = pi1[r].probs();
    const auto q = pi2[r].probs();
    const double mixed = lambda * lambda * trace_sigma_sq(p) +
                         2.0 * lambda * (1.0 - lambda) * trace_sigma_product(p, q) +
                         (1.0 - lambda) * (1.0 - lambda) * trace_sigma_sq(q);
    sum += coefficients(m1, m2).sum() * mixed;
  }
  return sum / static_cast<double>(sizes.size());
}

}  // namespace mhtest
