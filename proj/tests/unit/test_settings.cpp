#include <gtest/gtest.h>

#include <cmath>

#include "mhtest/error.hpp"
#include "mhtest/settings.hpp"

using namespace mhtest;

namespace {

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no mhtest::Error thrown";
  return ErrorKind::InvalidArgument;
}

double sq_dist(const ProbVector& a, const ProbVector& b) {
  double s = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) s += (a[j] - b[j]) * (a[j] - b[j]);
  return s;
}

SettingSpec make(int setting, std::size_t d, std::size_t k, Pi0 pi0 = Pi0::none) {
  SettingSpec s;
  s.setting = setting;
  s.d = d;
  s.k = k;
  s.pi0 = pi0;
  s.master_seed = 99;
  return s;
}

}  // namespace

TEST(Settings, LibraryDistances) {
  const double d5[] = {0.0, 0.025, 0.056, 0.090, 0.180};
  const double d10[] = {0.0, 0.024, 0.056, 0.092, 0.184};
  for (std::size_t d : {5u, 10u}) {
    const auto& lib = pi_library(d);
    ASSERT_EQ(lib.size(), 5u);
    EXPECT_EQ(lib[0].pi, ProbVector::uniform(d));
    for (std::size_t i = 0; i < 5; ++i) {
      const double printed = d == 5 ? d5[i] : d10[i];
      // The tabulated distances are truncated to three decimals (0.0926 is
      // listed as 0.092), so allow one unit in the last place.
      EXPECT_GE(sq_dist(lib[0].pi, lib[i].pi), printed - 1e-12) << d << " " << i;
      EXPECT_LT(sq_dist(lib[0].pi, lib[i].pi), printed + 1e-3) << d << " " << i;
      EXPECT_EQ(lib[i].printed_distance, printed);
    }
  }
  EXPECT_EQ(kind_of([] { pi_library(7); }), ErrorKind::UnsupportedDimension);
}

TEST(Settings, Validation) {
  EXPECT_NO_THROW(validate(make(1, 20, 5)));
  EXPECT_EQ(kind_of([] { validate(make(2, 20, 5)); }), ErrorKind::UnsupportedDimension);
  EXPECT_EQ(kind_of([] { validate(make(1, 7, 5)); }), ErrorKind::UnsupportedDimension);
  EXPECT_EQ(kind_of([] { validate(make(3, 5, 5)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { validate(make(2, 5, 5, Pi0::pi2)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { validate(make(6, 5, 5)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { validate(make(1, 5, 0)); }), ErrorKind::InvalidArgument);
  SettingSpec listed = make(1, 5, 3);
  listed.listed_sizes = {{5, 5}, {6, 6}};
  EXPECT_EQ(kind_of([&] { validate(listed); }), ErrorKind::InvalidArgument);
  listed.listed_sizes.push_back({7, 9});
  EXPECT_NO_THROW(validate(listed));
  EXPECT_EQ(listed.size_for(2), (SizePair{7, 9}));
  EXPECT_EQ(listed.max_total(), 9);
}

TEST(Settings, Pi0Names) {
  EXPECT_EQ(parse_pi0("pi4"), Pi0::pi4);
  EXPECT_EQ(parse_pi0("2"), Pi0::pi2);
  EXPECT_FALSE(parse_pi0("pi3").has_value());
  EXPECT_EQ(to_string(Pi0::pi2), "pi2");
}

TEST(Settings, NullSettingsAreNull) {
  for (int setting : {1, 2}) {
    const ReplicateGenerator gen(make(setting, 5, 200));
    for (std::uint64_t rep = 0; rep < 20; ++rep) {
      const Replicate r = gen.generate(rep);
      ASSERT_EQ(r.data.k(), 200u);
      for (std::size_t g = 0; g < 200; ++g) {
        EXPECT_TRUE(r.null_truth[g]);
        EXPECT_EQ(r.data[g].sample1.total(), 30);
        EXPECT_EQ(r.data[g].sample2.total(), 30);
      }
    }
  }
  const ReplicateGenerator uniform(make(1, 10, 3));
  ASSERT_EQ(uniform.palette().size(), 1u);
  EXPECT_EQ(uniform.palette()[0], ProbVector::uniform(10));
}

TEST(Settings, AlternativeFractions) {
  for (int setting : {3, 4}) {
    const ReplicateGenerator gen(make(setting, 5, 1000, Pi0::pi4));
    const auto& pal = gen.palette();
    std::int64_t alt = 0, forward = 0, reversed = 0, total = 0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
      const Replicate r = gen.generate(rep);
      for (std::size_t g = 0; g < r.laws.size(); ++g) {
        ++total;
        const GroupLaw law = r.laws[g];
        EXPECT_EQ(law.null(), static_cast<bool>(r.null_truth[g]));
        if (law.null()) continue;
        ++alt;
        EXPECT_EQ(pal[law.pi1], pi_library(5)[0].pi);
        if (pal[law.pi2] == pi_library(5)[3].pi) ++forward;
        else if (pal[law.pi2] == pi_library(5)[3].pi.reversed()) ++reversed;
        else ADD_FAILURE() << "unexpected alternative law";
      }
    }
    const double se = std::sqrt(0.2 * 0.8 / static_cast<double>(total));
    EXPECT_NEAR(static_cast<double>(alt) / total, 0.2, 3.0 * se) << "setting " << setting;
    if (setting == 3) {
      EXPECT_EQ(reversed, 0);
    } else {
      const double half = std::sqrt(0.1 * 0.9 / static_cast<double>(total));
      EXPECT_NEAR(static_cast<double>(forward) / total, 0.1, 3.0 * half);
      EXPECT_NEAR(static_cast<double>(reversed) / total, 0.1, 3.0 * half);
    }
  }
}

TEST(Settings, Setting2UsesAllLibraryVectors) {
  const ReplicateGenerator gen(make(2, 10, 500));
  std::vector<int> seen(6, 0);
  const Replicate r = gen.generate(0);
  for (const GroupLaw& law : r.laws) ++seen[law.pi1];
  for (int i = 0; i < 5; ++i) EXPECT_GT(seen[i], 50);
  EXPECT_EQ(seen[5], 0);
}

TEST(Settings, Setting5DrawsIndependently) {
  const ReplicateGenerator gen(make(5, 5, 2000));
  const Replicate r = gen.generate(3);
  int null_groups = 0;
  for (const GroupLaw& law : r.laws) null_groups += law.null();
  EXPECT_NEAR(null_groups / 2000.0, 0.2, 3.0 * std::sqrt(0.16 / 2000));
}

TEST(Settings, ReplicatesAreReproducible) {
  SettingSpec spec = make(3, 5, 40, Pi0::pi2);
  spec.sizes = {5, 10};
  const Replicate a = generate_replicate(spec, 7), b = generate_replicate(spec, 7);
  EXPECT_EQ(a.data, b.data);
  EXPECT_NE(a.data, generate_replicate(spec, 8).data);
  spec.master_seed = 100;
  EXPECT_NE(a.data, generate_replicate(spec, 7).data);
}

TEST(Settings, FlatLayout) {
  const std::vector<Count> flat{1, 2, 3, 4, 5, 6, 7, 8};
  const GroupedDataset ds = dataset_from_flat(flat, 2, 2);
  EXPECT_EQ(ds[0].group_id, "1");
  EXPECT_EQ(ds[0].sample2, CountVector({3, 4}));
  EXPECT_EQ(ds[1].sample1, CountVector({5, 6}));
}
