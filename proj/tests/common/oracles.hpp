#pragma once

// Brute-force reference computations shared by the unit and acceptance
// tests. Everything here is written from the definitions, not from the
// library's closed forms.

#include <cmath>
#include <cstdint>
#include <functional>
#include <vector>

namespace oracle {

/// Calls fn(c) for every vector of d non-negative integers summing to n.
inline void for_each_composition(int n, int d, const std::function<void(const std::vector<std::int64_t>&)>& fn) {
  std::vector<std::int64_t> c(d, 0);
  std::function<void(int, int)> rec = [&](int j, int left) {
    if (j == d - 1) {
      c[j] = left;
      fn(c);
      return;
    }
    for (int v = 0; v <= left; ++v) {
      c[j] = v;
      rec(j + 1, left - v);
    }
  };
  rec(0, n);
}

inline double multinomial_pmf(const std::vector<std::int64_t>& c, const std::vector<double>& pi) {
  std::int64_t n = 0;
  double logp = 0.0;
  for (std::size_t j = 0; j < c.size(); ++j) {
    n += c[j];
    if (c[j] > 0) {
      if (pi[j] <= 0.0) return 0.0;
      logp += static_cast<double>(c[j]) * std::log(pi[j]) - std::lgamma(static_cast<double>(c[j]) + 1.0);
    }
  }
  return std::exp(logp + std::lgamma(static_cast<double>(n) + 1.0));
}

/// Expands counts into a label sequence 1,1,..,2,.. .
inline std::vector<int> labels_of(const std::vector<std::int64_t>& c) {
  std::vector<int> x;
  for (std::size_t j = 0; j < c.size(); ++j) x.insert(x.end(), c[j], static_cast<int>(j) + 1);
  return x;
}

/// Average of the two-sample kernel
///   h = 1[x1i = x1i'] + 1[x2l = x2l'] - 1[x1i = x2l'] - 1[x1i' = x2l]
/// over i != i' and l != l', i.e. ||pi1 - pi2||^2 estimated by
/// its defining U-statistic.
inline double ustat_by_kernel(const std::vector<int>& x1, const std::vector<int>& x2) {
  const std::size_t n1 = x1.size(), n2 = x2.size();
  double sum = 0.0;
  double terms = 0.0;
  for (std::size_t i = 0; i < n1; ++i) {
    for (std::size_t ii = 0; ii < n1; ++ii) {
      if (i == ii) continue;
      for (std::size_t l = 0; l < n2; ++l) {
        for (std::size_t ll = 0; ll < n2; ++ll) {
          if (l == ll) continue;
          sum += (x1[i] == x1[ii]) + (x2[l] == x2[ll]) - (x1[i] == x2[ll]) - (x1[ii] == x2[l]);
          terms += 1.0;
        }
      }
    }
  }
  return sum / terms;
}

/// Dense d x d matrix helpers.
using Matrix = std::vector<std::vector<double>>;

inline Matrix sigma_of(const std::vector<double>& p) {
  const std::size_t d = p.size();
  Matrix m(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) m[i][j] = (i == j ? p[i] : 0.0) - p[i] * p[j];
  }
  return m;
}

inline Matrix multiply(const Matrix& a, const Matrix& b) {
  const std::size_t d = a.size();
  Matrix m(d, std::vector<double>(d, 0.0));
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t k = 0; k < d; ++k) {
      for (std::size_t j = 0; j < d; ++j) m[i][j] += a[i][k] * b[k][j];
    }
  }
  return m;
}

inline double trace(const Matrix& a) {
  double t = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
  return t;
}

/// Unbiased estimate of tr(Sigma^2) = sum_{s,t} Sigma_st^2 from one sample.
/// Each Sigma_st factor is estimated from its own pair of observations, and
/// the product is averaged over all distinct index quadruples. O(n^4 d^2).
inline double trace_sigma_sq_by_quadruples(const std::vector<int>& x, int d) {
  const std::size_t n = x.size();
  double sum = 0.0;
  double terms = 0.0;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      if (b == a) continue;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == a || c == b) continue;
        for (std::size_t e = 0; e < n; ++e) {
          if (e == a || e == b || e == c) continue;
          // sum_{s,t} (1[xa=s]1[s=t] - 1[xa=s]1[xb=t]) (1[xc=s]1[s=t] - 1[xc=s]1[xe=t])
          double v = 0.0;
          for (int s = 1; s <= d; ++s) {
            for (int t = 1; t <= d; ++t) {
              const double f1 = (x[a] == s) * (s == t) - (x[a] == s) * (x[b] == t);
              const double f2 = (x[c] == s) * (s == t) - (x[c] == s) * (x[e] == t);
              v += f1 * f2;
            }
          }
          sum += v;
          terms += 1.0;
        }
      }
    }
  }
  return sum / terms;
}

}  // namespace oracle
