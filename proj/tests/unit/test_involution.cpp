#include <gtest/gtest.h>

#include <stdexcept>

#include "qstirling/involution.hpp"
#include "qstirling/stirling.hpp"

using namespace qstirling;

namespace {

OrderedPartition A(const char* text) { return parse_ordered(Flavor::typeA, text); }
OrderedPartition B(const char* text) { return parse_ordered(Flavor::typeB, text); }

}  // namespace

TEST(Involution, SplitAndMergeExamples) {
  const auto w = A("2 4 6 / 8 / 3 5 / 1 / 7");
  EXPECT_EQ(split(w, 6), A("6 / 2 4 / 8 / 3 5 / 1 / 7"));
  EXPECT_EQ(merge(w, 8), A("2 4 6 / 3 5 8 / 1 / 7"));
  EXPECT_EQ(split(B("-4 -1 0 1 4 | 2 -3 / -2 3"), 4), B("-1 0 1 | 4 / -4 | 2 -3 / -2 3"));
  EXPECT_THROW(split(w, 8), std::invalid_argument);
  EXPECT_THROW(merge(w, 6), std::invalid_argument);
}

TEST(Involution, SplitMergeAreInverse) {
  for (Flavor f : {Flavor::typeA, Flavor::typeB}) {
    const int n = f == Flavor::typeA ? 5 : 3;
    for (const auto& o : enumerate_ordered(f, n)) {
      for (int M = 1; M <= n; ++M) {
        if (splittable(o, M)) {
          const auto s = split(o, M);
          EXPECT_TRUE(mergeable(s, M));
          EXPECT_EQ(merge(s, M), o);
        }
        if (mergeable(o, M)) EXPECT_EQ(split(merge(o, M), M), o);
      }
    }
  }
}

TEST(Involution, FixedPoints) {
  EXPECT_EQ(phi(A("1 / 2 / 3")).action, Action::fixed);
  const auto t = phi(A("1 2"));
  EXPECT_EQ(t.action, Action::split);
  EXPECT_EQ(t.M, 2);
  EXPECT_EQ(t.output, A("2 / 1"));
  EXPECT_EQ(phi(B("0 | -1 / 1 | -2 / 2 | -3 / 3")).action, Action::fixed);
}

TEST(Involution, Suites) {
  for (int n = 0; n <= 6; ++n) EXPECT_TRUE(verify_involution(Flavor::typeA, n).passed()) << n;
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(verify_involution(Flavor::typeB, n).passed()) << n;
  EXPECT_TRUE(verify_divisibility(7, 4).passed());
}

TEST(Involution, AlternatingSums) {
  EXPECT_EQ(alternating_sum(Flavor::typeA, 2, 1).sum, QPoly({1}));
  EXPECT_EQ(alternating_sum(Flavor::typeA, 0, 3).sum, QPoly({1}));
  const auto s = alternating_sum(Flavor::typeA, 2, 2);
  EXPECT_EQ(s.sum, QPoly({1, 1, -1}));
  EXPECT_EQ(s.residue, QPoly({1}));
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(alternating_sum(Flavor::typeB, n, 1).sum, QPoly({1}));
    EXPECT_EQ(euler_characteristic(Flavor::typeB, n, 1), QPoly());
  }
}

TEST(Involution, EulerPattern) {
  const QPoly row7{1, 6, 14, 14, 0, -14, -14, -6};
  EXPECT_EQ(alternating_sum(Flavor::typeA, 7, 2).sum, row7);
  EXPECT_EQ(euler_characteristic(Flavor::typeA, 7, 2), row7 - QPoly({1}));
  std::string why;
  EXPECT_TRUE(has_euler_pattern(row7 - QPoly({1}), &why)) << why;
  EXPECT_FALSE(has_euler_pattern(QPoly({0, 1, 1})));
  EXPECT_FALSE(has_euler_pattern(QPoly({0, -1, 1})));
  EXPECT_TRUE(has_euler_pattern(QPoly()));
}
