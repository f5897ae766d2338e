#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "oracles.hpp"
#include "qstirling/qpoly.hpp"

using namespace qstirling;

namespace {

QPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> len(0, 7), coef(-20, 20);
  std::vector<BigInt> c(static_cast<std::size_t>(len(rng)));
  for (auto& x : c) x = coef(rng);
  return QPoly(c);
}

}  // namespace

TEST(QPoly, Arithmetic) {
  EXPECT_EQ(QPoly({1, 1}) * QPoly({1, 1}), QPoly({1, 2, 1}));
  const QPoly p{3, 0, -2};
  EXPECT_EQ(p + QPoly(), p);
  EXPECT_TRUE((QPoly({1, 1, 1}) * QPoly({1, 1}) - QPoly({1, 1}) * QPoly({1, 1, 1})).is_zero());
  EXPECT_EQ(QPoly({1, 2, 0}).degree(), 1);
  EXPECT_EQ(QPoly().degree(), -1);
}

TEST(QPoly, RingLawsOnRandomInputs) {
  std::mt19937 rng(20240611);
  for (int trial = 0; trial < 200; ++trial) {
    const QPoly a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
    EXPECT_EQ(oracle::to_qpoly(oracle::mul(a.coeffs(), b.coeffs())), a * b);
    if (!b.is_zero()) EXPECT_EQ((a * b).exact_divide(b), a);
  }
}

TEST(QPoly, ExactDivideRejectsRemainder) {
  EXPECT_THROW(QPoly({1, 0, 1}).exact_divide(QPoly({1, 1})), std::domain_error);
  EXPECT_THROW(QPoly({1, 1}).exact_divide(QPoly({2})), std::domain_error);
}

TEST(QPoly, Brackets) {
  EXPECT_EQ(q_bracket(3), QPoly({1, 1, 1}));
  EXPECT_TRUE(q_bracket(0).is_zero());
  EXPECT_THROW(q_bracket(-1), std::invalid_argument);
  EXPECT_EQ(q_factorial(-2), QPoly({1}));
  EXPECT_EQ(q_double_factorial(-3), QPoly({1}));
  EXPECT_EQ(q_double_factorial(4), QPoly({1, 2, 2, 2, 1}));
  EXPECT_EQ(q_factorial(3), QPoly({1, 2, 2, 1}));
  for (int n = 0; n <= 9; ++n) EXPECT_EQ(q_factorial(n).at_one(), factorial(n));
}

TEST(QPoly, GaussianBinomial) {
  EXPECT_EQ(gaussian_binomial(4, 2), QPoly({1, 1, 2, 1, 1}));
  EXPECT_EQ(gaussian_binomial(6, 0), QPoly({1}));
  EXPECT_TRUE(gaussian_binomial(3, 5).is_zero());
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(gaussian_binomial(n, k) * q_factorial(k) * q_factorial(n - k), q_factorial(n));
}

TEST(QPoly, SubstituteAndReduce) {
  EXPECT_EQ(substitute_power(QPoly({1, 1}), 2), QPoly({1, 0, 1}));
  const QPoly p{4, -1, 3};
  EXPECT_EQ(substitute_power(p, 1), p);
  EXPECT_EQ(substitute_power(gaussian_binomial(2, 1), 2), QPoly({1, 0, 1}));
  EXPECT_THROW(substitute_power(p, 0), std::invalid_argument);
  EXPECT_EQ(reduce_mod_qm_minus_q(QPoly::monomial(1, 3), 2), QPoly({0, 1}));
  EXPECT_EQ(reduce_mod_qm_minus_q(QPoly({1}), 3), QPoly({1}));
  EXPECT_EQ(reduce_mod_qm_minus_q(QPoly({1, 1, -1}), 2), QPoly({1}));
}

TEST(QPoly, ReduceAgreesWithEvaluationAtRoots) {
  // q^m - q vanishes at q = 0 and q = 1, so reduction preserves both values.
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const QPoly p = random_poly(rng);
    for (int m = 2; m <= 5; ++m) {
      const QPoly r = reduce_mod_qm_minus_q(p, m);
      EXPECT_LT(r.degree(), m);
      EXPECT_EQ(r.evaluate(0), p.evaluate(0));
      EXPECT_EQ(r.at_one(), p.at_one());
    }
  }
}

TEST(QPoly, TextAndJson) {
  EXPECT_EQ(to_text(QPoly({2, 1, 1})), "2 + 1*q + 1*q^2");
  EXPECT_EQ(to_text(QPoly()), "0");
  EXPECT_EQ(to_text(QPoly({1, 0, -3})), "1 - 3*q^2");
  EXPECT_EQ(to_json(QPoly({2, 1, 1})), R"({"coeffs":["2","1","1"]})");
  EXPECT_EQ(to_json(QPoly()), R"({"coeffs":[]})");
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const QPoly p = random_poly(rng);
    EXPECT_EQ(qpoly_from_json(to_json(p)), p);
  }
  const QPoly big = pow(QPoly({3, 7}), 60);
  EXPECT_EQ(qpoly_from_json(to_json(big)), big);
}

TEST(TPoly, Basics) {
  const TPoly a = TPoly::t_plus(q_bracket(1));
  const TPoly b = TPoly::t_plus(q_bracket(3));
  const TPoly ab = a * b;
  EXPECT_EQ(ab.coeff(1), QPoly({2, 1, 1}));
  EXPECT_EQ(ab.coeff(2), QPoly({1}));
  EXPECT_EQ(ab.truncated(1).degree(), 1);
  EXPECT_EQ(ab.evaluate(QPoly({0})), QPoly({1, 1, 1}));
  EXPECT_EQ(to_text(TPoly::t_plus(QPoly({1, 1}))), "(1 + 1*q) + (1)*t");
}
