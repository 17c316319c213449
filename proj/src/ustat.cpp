#include "mhtest/ustat.hpp"

#include <cmath>

#include "mhtest/error.hpp"

namespace mhtest {

double group_ustat(std::span<const Count> c1, std::span<const Count> c2) {
  if (c1.size() != c2.size()) throw Error(ErrorKind::DimensionMismatch, "samples differ in d");
  Count n1 = 0;
  Count n2 = 0;
  double same1 = 0.0;
  double same2 = 0.0;
  double cross = 0.0;
  for (std::size_t j = 0; j < c1.size(); ++j) {
    const double a = static_cast<double>(c1[j]);
    const double b = static_cast<double>(c2[j]);
    n1 += c1[j];
    n2 += c2[j];
    same1 += a * (a - 1.0);
    same2 += b * (b - 1.0);
    cross += a * b;
  }
  if (n1 < 2 || n2 < 2) {
    throw Error(ErrorKind::SampleTooSmall, "U-statistic needs at least 2 observations per sample");
  }
  const double m1 = static_cast<double>(n1);
  const double m2 = static_cast<double>(n2);
  return same1 / (m1 * (m1 - 1.0)) + same2 / (m2 * (m2 - 1.0)) - 2.0 * cross / (m1 * m2);
}

double group_ustat(const GroupPair& p) {
  try {
    return group_ustat(p.sample1.counts(), p.sample2.counts());
  } catch (const Error& e) {
    throw e.with_group(p.group_id);
  }
}

double group_ustat_kernel_oracle(std::span<const int> x1, std::span<const int> x2) {
  const std::size_t n1 = x1.size();
  const std::size_t n2 = x2.size();
  if (n1 < 2 || n2 < 2) {
    throw Error(ErrorKind::SampleTooSmall, "kernel average needs at least 2 labels per sample");
  }
  // h(a, b; c, e) = I(a=b) + I(c=e) - (I(a=c) + I(a=e) + I(b=c) + I(b=e)) / 2
  double sum = 0.0;
  for (std::size_t u = 0; u < n1; ++u) {
    for (std::size_t v = 0; v < n1; ++v) {
      if (u == v) continue;
      for (std::size_t s = 0; s < n2; ++s) {
        for (std::size_t t = 0; t < n2; ++t) {
          if (s == t) continue;
          const int a = x1[u], b = x1[v], c = x2[s], e = x2[t];
          double h = (a == b) + (c == e);
          h -= 0.5 * ((a == c) + (a == e) + (b == c) + (b == e));
          sum += h;
        }
      }
    }
  }
  const double pairs1 = static_cast<double>(n1) * static_cast<double>(n1 - 1);
  const double pairs2 = static_cast<double>(n2) * static_cast<double>(n2 - 1);
  return sum / (pairs1 * pairs2);
}

std::vector<GroupStat> group_statistics(const GroupedDataset& ds) {
  std::vector<GroupStat> out;
  out.reserve(ds.k());
  for (const auto& g : ds.groups()) out.push_back({g.group_id, group_ustat(g)});
  return out;
}

double aggregate_statistic(const GroupedDataset& ds) {
  double sum = 0.0;
  for (const auto& g : ds.groups()) sum += group_ustat(g);
  return sum / std::sqrt(static_cast<double>(ds.k()));
}

}  // namespace mhtest
