#include <gtest/gtest.h>

#include <numeric>
#include <sstream>

#include "mhtest/counts.hpp"
#include "mhtest/error.hpp"

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

RawRow row(std::string g, int pop, std::vector<Count> c) { return RawRow{std::move(g), pop, std::move(c), 0}; }

}  // namespace

TEST(Counts, ValidateMinimalDataset) {
  const std::vector<RawRow> rows{row("g1", 1, {3, 1}), row("g1", 2, {1, 3})};
  const GroupedDataset ds = validate_dataset(rows);
  EXPECT_EQ(ds.k(), 1u);
  EXPECT_EQ(ds.dim(), 2u);
  EXPECT_EQ(ds[0].sample1, CountVector({3, 1}));
  EXPECT_EQ(ds[0].sample2, CountVector({1, 3}));
}

TEST(Counts, ValidateErrors) {
  EXPECT_EQ(kind_of([] {
              std::vector<RawRow> rows{row("g1", 1, {3, 1}), row("g1", 2, {1, 3, 0})};
              validate_dataset(rows);
            }),
            ErrorKind::MixedDimension);
  EXPECT_EQ(kind_of([] {
              std::vector<RawRow> rows{row("g1", 1, {3, 1}), row("g1", 1, {1, 3})};
              validate_dataset(rows);
            }),
            ErrorKind::DuplicateSample);
  EXPECT_EQ(kind_of([] {
              std::vector<RawRow> rows{row("g1", 1, {3, 1})};
              validate_dataset(rows);
            }),
            ErrorKind::MissingMate);
  EXPECT_EQ(kind_of([] {
              std::vector<RawRow> rows{row("g1", 1, {3, -1}), row("g1", 2, {1, 3})};
              validate_dataset(rows);
            }),
            ErrorKind::NegativeCount);
  EXPECT_EQ(kind_of([] { validate_dataset(std::vector<RawRow>{}); }), ErrorKind::EmptyInput);
}

TEST(Counts, ManyGroupsOfThirty) {
  std::vector<RawRow> rows;
  for (int r = 0; r < 22; ++r) {
    std::vector<Count> c(10, 3);
    rows.push_back(row("grp" + std::to_string(r), 1, c));
    rows.push_back(row("grp" + std::to_string(r), 2, c));
  }
  const GroupedDataset ds = validate_dataset(rows);
  EXPECT_EQ(ds.k(), 22u);
  EXPECT_EQ(ds.dim(), 10u);
  EXPECT_EQ(ds[5].sample1.total(), 30);
}

TEST(Counts, GroupOrderFollowsFirstAppearance) {
  const std::vector<RawRow> rows{row("b", 2, {1, 1}), row("a", 1, {2, 0}), row("b", 1, {0, 2}),
                                 row("a", 2, {1, 1})};
  const GroupedDataset ds = validate_dataset(rows);
  ASSERT_EQ(ds.k(), 2u);
  EXPECT_EQ(ds[0].group_id, "b");
  EXPECT_EQ(ds[0].sample1, CountVector({0, 2}));
  EXPECT_EQ(ds[1].group_id, "a");
}

TEST(Counts, ValidateIsIdempotent) {
  const std::vector<RawRow> rows{row("x", 1, {3, 1, 0}), row("x", 2, {1, 3, 2}), row("y", 2, {0, 0, 4}),
                                 row("y", 1, {5, 0, 1})};
  const GroupedDataset once = validate_dataset(rows);
  const GroupedDataset twice = validate_dataset(to_rows(once));
  EXPECT_EQ(once, twice);
}

TEST(Counts, EmpiricalProportions) {
  const auto a = empirical_proportions(CountVector({3, 1}));
  EXPECT_DOUBLE_EQ(a[0], 0.75);
  EXPECT_DOUBLE_EQ(a[1], 0.25);
  const auto b = empirical_proportions(CountVector({5, 0}));
  EXPECT_EQ(b[0], 1.0);
  EXPECT_EQ(b[1], 0.0);
  const auto c = empirical_proportions(CountVector({2, 2, 0, 0}));
  EXPECT_EQ(c, ProbVector({0.5, 0.5, 0.0, 0.0}));
  EXPECT_EQ(kind_of([] { empirical_proportions(CountVector({0, 0})); }), ErrorKind::ZeroTotal);
}

TEST(Counts, ProportionsSumToOne) {
  for (Count a = 0; a < 7; ++a) {
    for (Count b = 0; b < 7; ++b) {
      for (Count c = 0; c < 7; ++c) {
        if (a + b + c == 0) continue;
        const auto p = empirical_proportions(CountVector({a, b, c}));
        double s = 0.0;
        for (double v : p.probs()) {
          EXPECT_GE(v, 0.0);
          s += v;
        }
        EXPECT_NEAR(s, 1.0, 1e-12);
      }
    }
  }
}

TEST(Counts, PooledCounts) {
  EXPECT_EQ(pooled_counts(GroupPair("g", CountVector({3, 1}), CountVector({1, 3}))), CountVector({4, 4}));
  EXPECT_EQ(pooled_counts(GroupPair("g", CountVector({5, 0}), CountVector({0, 5}))), CountVector({5, 5}));
  const GroupPair p("g", CountVector({2, 2, 2}), CountVector({1, 1, 1}));
  const GroupPair q("g", CountVector({1, 1, 1}), CountVector({2, 2, 2}));
  EXPECT_EQ(pooled_counts(p), CountVector({3, 3, 3}));
  EXPECT_EQ(pooled_counts(p), pooled_counts(q));
  EXPECT_EQ(pooled_counts(p).total(), p.sample1.total() + p.sample2.total());
}

TEST(Counts, TypeInvariants) {
  EXPECT_EQ(kind_of([] { CountVector({4}); }), ErrorKind::InvalidDimension);
  EXPECT_EQ(kind_of([] { CountVector({1, -2}); }), ErrorKind::NegativeCount);
  EXPECT_EQ(kind_of([] { ProbVector({0.5, 0.6}); }), ErrorKind::InvalidProbVector);
  EXPECT_EQ(kind_of([] { ProbVector({1.2, -0.2}); }), ErrorKind::InvalidProbVector);
  EXPECT_EQ(kind_of([] { GroupPair("g", CountVector({1, 1}), CountVector({1, 1, 1})); }),
            ErrorKind::MixedDimension);
  EXPECT_EQ(kind_of([] { GroupPair("g", CountVector({0, 0}), CountVector({1, 1})); }), ErrorKind::ZeroTotal);
  EXPECT_EQ(ProbVector::uniform(4), ProbVector({0.25, 0.25, 0.25, 0.25}));
  EXPECT_EQ(ProbVector({0.1, 0.2, 0.7}).reversed(), ProbVector({0.7, 0.2, 0.1}));
}

TEST(Counts, CsvRoundTrip) {
  const std::vector<RawRow> rows{row("north", 1, {3, 1, 0}), row("north", 2, {1, 3, 2}),
                                 row("south", 1, {5, 0, 1}), row("south", 2, {0, 0, 4})};
  const GroupedDataset ds = validate_dataset(rows);
  std::stringstream buf;
  write_counts_csv(buf, ds);
  EXPECT_EQ(read_counts_csv(buf), ds);
}

TEST(Counts, CsvAcceptsBomAndCrlf) {
  std::istringstream in("\xEF\xBB\xBFgroup,population,a,b\r\ng1,1,3,1\r\ng1,2,1,3\r\n");
  const GroupedDataset ds = read_counts_csv(in);
  EXPECT_EQ(ds.k(), 1u);
  EXPECT_EQ(ds[0].sample2, CountVector({1, 3}));
}

TEST(Counts, CsvErrors) {
  auto parse = [](std::string text) {
    return [text] {
      std::istringstream in(text);
      read_counts_csv(in);
    };
  };
  EXPECT_EQ(kind_of(parse("")), ErrorKind::EmptyInput);
  EXPECT_EQ(kind_of(parse("group,population,a\n")), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(parse("group,population,a,b\ng1,3,1,1\ng1,2,1,1\n")), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(parse("group,population,a,b\ng1,1,1,x\ng1,2,1,1\n")), ErrorKind::ParseError);
  EXPECT_EQ(kind_of(parse("group,population,a,b\ng1,1,1,1,1\ng1,2,1,1\n")), ErrorKind::MixedDimension);
  EXPECT_EQ(kind_of(parse("group,population,a,b\ng1,1,1,-1\ng1,2,1,1\n")), ErrorKind::NegativeCount);
  EXPECT_EQ(kind_of(parse("group,population,a,b\ng1,1,1,1\n")), ErrorKind::MissingMate);
}

TEST(Counts, CsvErrorCarriesLine) {
  std::istringstream in("group,population,a,b\ng1,1,1,1\ng1,2,1,oops\n");
  try {
    read_counts_csv(in);
    FAIL();
  } catch (const Error& e) {
    ASSERT_TRUE(e.line().has_value());
    EXPECT_EQ(*e.line(), 3u);
  }
}
