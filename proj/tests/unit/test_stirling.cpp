#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qstirling/stirling.hpp"

using namespace qstirling;

TEST(Stirling, SmallValues) {
  EXPECT_EQ(stirling(Kind::S_B, 2, 1), QPoly({2, 1, 1}));
  EXPECT_EQ(stirling(Kind::S_A, 3, 2), QPoly({2, 1}));
  EXPECT_EQ(stirling_number(Kind::S_B, 2, 0), 1);
  EXPECT_EQ(stirling_number(Kind::S_B, 2, 1), 4);
  EXPECT_EQ(stirling_number(Kind::S_B, 2, 2), 1);
  EXPECT_TRUE(stirling(Kind::c_A, 3, 4).is_zero());
  EXPECT_TRUE(stirling(Kind::S_A, 3, -1).is_zero());
}

TEST(Stirling, TypeBFirstKindRowSevenFive) {
  const std::vector<long> expected{21, 36, 51, 60, 70, 74, 79, 78, 79, 74, 71, 62, 56, 44, 35, 26, 20, 14, 10, 6, 4, 2, 1};
  std::vector<BigInt> c(expected.begin(), expected.end());
  EXPECT_EQ(stirling(Kind::c_B, 7, 5), QPoly(c));
}

TEST(Stirling, AgreesWithProductAndHomogeneousFormulas) {
  for (int n = 0; n <= 10; ++n) {
    for (int k = 0; k <= n + 1; ++k) {
      EXPECT_EQ(stirling(Kind::S_A, n, k), oracle::to_qpoly(oracle::S_A(n, k))) << n << "," << k;
      EXPECT_EQ(stirling(Kind::S_B, n, k), oracle::to_qpoly(oracle::S_B(n, k))) << n << "," << k;
      EXPECT_EQ(stirling(Kind::c_A, n, k), oracle::to_qpoly(oracle::c_A(n, k))) << n << "," << k;
      EXPECT_EQ(stirling(Kind::c_B, n, k), oracle::to_qpoly(oracle::c_B(n, k))) << n << "," << k;
    }
  }
}

TEST(Stirling, NumericModeIsQEqualsOne) {
  for (Kind kind : {Kind::S_A, Kind::c_A, Kind::S_B, Kind::c_B}) {
    for (int n = 0; n <= 9; ++n)
      for (int k = 0; k <= n; ++k) {
        const QPoly numeric = stirling(kind, QMode::numeric, n, k);
        EXPECT_LE(numeric.degree(), 0);
        EXPECT_EQ(numeric.at_one(), stirling(kind, n, k).at_one());
        EXPECT_EQ(stirling_number(kind, n, k), numeric.at_one());
      }
  }
}

TEST(Stirling, OrderedAndBarred) {
  EXPECT_EQ(ordered(OrderedKind::S_A, 2, 2), QPoly({1, 1}));
  EXPECT_EQ(ordered(OrderedKind::S_A, 2, 1), QPoly({1}));
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(ordered(OrderedKind::S_B, n, 0), QPoly({1}));
  EXPECT_EQ(barred(2, 2), QPoly({0, 1}));
  EXPECT_EQ(barred(0, 0), QPoly({1}));
  EXPECT_EQ(barred(3, 2), QPoly({0, 2, 1}));
  EXPECT_EQ(ordered(OrderedKind::S_A_bar, 3, 2), q_factorial(2) * barred(3, 2));
  EXPECT_EQ(ordered_number(OrderedKind::S_A, 4, 2), 14);
  EXPECT_EQ(ordered_number(OrderedKind::S_B, 2, 1), 8);
}

TEST(Stirling, SignedFirstKind) {
  EXPECT_EQ(signed_first_kind(Type::B, QMode::polynomial, 2, 1), QPoly({-2, -1, -1}));
  for (int n = 0; n <= 6; ++n) {
    EXPECT_EQ(signed_first_kind(Type::A, QMode::polynomial, n, n), QPoly({1}));
  }
  EXPECT_EQ(signed_first_kind(Type::B, QMode::numeric, 2, 0).at_one(), 3);
}

TEST(Stirling, RowSumsAtQOne) {
  // sum_k c(n,k) = n! and sum_k c_B(n,k) = 2^n n!.
  for (int n = 0; n <= 10; ++n) {
    BigInt a = 0, b = 0;
    for (int k = 0; k <= n; ++k) {
      a += stirling_number(Kind::c_A, n, k);
      b += stirling_number(Kind::c_B, n, k);
    }
    EXPECT_EQ(a, factorial(n));
    BigInt two_n = 1;
    for (int i = 0; i < n; ++i) two_n *= 2;
    EXPECT_EQ(b, two_n * factorial(n));
  }
}

TEST(Stirling, VerifySuite) {
  const Report r = verify_recursions(12);
  EXPECT_TRUE(r.passed()) << r.summary();
  EXPECT_GT(r.checks, 0u);
}
