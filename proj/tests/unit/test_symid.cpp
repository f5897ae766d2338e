#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "qstirling/stirling.hpp"
#include "qstirling/symid.hpp"

using namespace qstirling;

TEST(Symmetric, SmallEvaluations) {
  const auto nums = SpecializedVars::numeric({1, 3});
  EXPECT_EQ(elementary(nums, 2, 2), QPoly({3}));
  const SpecializedVars br({q_bracket(1), q_bracket(3)});
  EXPECT_EQ(homogeneous(br, 1, 2), QPoly({2, 1, 1}));
  EXPECT_EQ(elementary(SpecializedVars::odd_brackets(3), 3, 3).at_one(), 15);
  EXPECT_EQ(elementary(nums, 0, 0), QPoly({1}));
  EXPECT_TRUE(elementary(nums, 3, 2).is_zero());
  EXPECT_TRUE(homogeneous(nums, -1, 2).is_zero());
  EXPECT_THROW(elementary(nums, 1, 3), std::out_of_range);
}

TEST(Symmetric, HomogeneousAgainstMonomialSum) {
  // h_3(x1, x2, x3) as the explicit sum over multisets.
  const auto v = SpecializedVars::numeric({2, 5, 7});
  long direct = 0;
  const long x[] = {2, 5, 7};
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      for (int k = j; k < 3; ++k) direct += x[i] * x[j] * x[k];
  EXPECT_EQ(homogeneous(v, 3, 3), QPoly({direct}));
}

TEST(Symmetric, StirlingAsSymmetricFunctions) {
  // Checked directly on a few entries; the full statement is in the suite.
  const auto odd = SpecializedVars::odd_brackets(12);
  const auto br = SpecializedVars::brackets(12);
  for (int n = 0; n <= 7; ++n)
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(stirling(Kind::S_B, n, k), homogeneous(odd, n - k, k + 1));
      EXPECT_EQ(stirling(Kind::c_B, n, k), elementary(odd, n - k, n));
      if (k > 0) EXPECT_EQ(stirling(Kind::S_A, n, k), homogeneous(br, n - k, k));
    }
  EXPECT_EQ(elementary_gf(odd, 2).coeff(1), QPoly({2, 1, 1}));
}

TEST(Symmetric, Suites) {
  for (const Report& r : {verify_symmetric_expressions(10), verify_generating_functions(6), verify_inverse_matrices(10, 6)}) {
    EXPECT_TRUE(r.passed()) << r.summary();
    EXPECT_GT(r.checks, 0u);
  }
}

TEST(Symmetric, TnExpansion) {
  for (int n = 0; n <= 4; ++n) EXPECT_TRUE(verify_tn_expansion(n, TnVariant::generic).passed()) << n;
  for (int n = 0; n <= 8; ++n) {
    EXPECT_TRUE(verify_tn_expansion(n, TnVariant::typeA_q).passed()) << n;
    EXPECT_TRUE(verify_tn_expansion(n, TnVariant::typeB_q).passed()) << n;
  }
  EXPECT_THROW(verify_tn_expansion(7, TnVariant::generic), std::invalid_argument);
}
