#include <gtest/gtest.h>

#include <random>
#include <stdexcept>

#include "qstirling/qseries.hpp"
#include "qstirling/stirling.hpp"

using namespace qstirling;

namespace {

QEgf random_qegf(std::mt19937& rng, int order, bool zero_constant = false) {
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<TPoly> num;
  for (int n = 0; n <= order; ++n) {
    std::vector<QPoly> tcoeffs;
    for (int j = 0; j < 2; ++j) tcoeffs.push_back(QPoly({coef(rng), coef(rng)}));
    num.push_back(n == 0 && zero_constant ? TPoly() : TPoly(tcoeffs));
  }
  return QEgf(num);
}

}  // namespace

TEST(RatSeries, Basics) {
  const auto e3 = RatSeries::exp_linear(6, 3), e1 = RatSeries::exp_linear(6, 1);
  // (e^{3x} - e^x)/2 has 2! [x^2] = 4.
  const auto s = (e3 - e1) * RatPoly{BigRational(1, 2)};
  EXPECT_EQ(s.egf_coefficient(2), RatPoly{BigRational(4)});
  EXPECT_EQ(e1.egf_coefficient(5), RatPoly{BigRational(1)});
  const auto lg = RatSeries::neg_log_one_minus(6, 1);
  EXPECT_EQ(lg.exp().egf_coefficient(4), RatPoly{BigRational(24)});  // 1/(1-x)
  EXPECT_EQ(lg.pow(2).egf_coefficient(3), RatPoly{BigRational(6)});  // 3! * [x^3] log^2 = 2 c(3,2)
}

TEST(RatSeries, Suite) {
  const Report r = egf_verify_all(8);
  EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(QEgf, Basics) {
  const QEgf lg = q_log_one_minus_x(5);
  EXPECT_EQ(lg.numerator(0), TPoly());
  EXPECT_EQ(lg.numerator(3), TPoly(QPoly({1, 1})));
  const QEgf ones = exp_q(TPoly(QPoly({1})), 6);
  EXPECT_EQ(dq(ones), ones.truncated(5));
  EXPECT_EQ(mul(lg, qegf_one(5)), lg);
  EXPECT_THROW(mul(lg, qegf_one(4)), std::invalid_argument);
  EXPECT_EQ(dq(antiderivative(lg)), lg);
}

TEST(QEgf, ProductLaws) {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 20; ++trial) {
    const QEgf a = random_qegf(rng, 6), b = random_qegf(rng, 6), c = random_qegf(rng, 6);
    EXPECT_EQ(mul(a, b), mul(b, a));
    EXPECT_EQ(mul(mul(a, b), c), mul(a, mul(b, c)));
    EXPECT_EQ(mul(a, add(b, c)), add(mul(a, b), mul(a, c)));
  }
}

TEST(QEgf, SymbolicPowers) {
  const int order = 7;
  std::vector<QPoly> x_num(order + 1);
  x_num[1] = QPoly({1});
  const QEgf x = qegf_from(x_num);
  for (int k = 0; k <= 4; ++k) {
    // x^{[k]} = x^k, whose numerators are [k]! at n = k.
    std::vector<QPoly> expect(order + 1);
    expect[static_cast<std::size_t>(k)] = q_factorial(k);
    EXPECT_EQ(symbolic_power(x, k), qegf_from(expect)) << k;
  }
  EXPECT_EQ(symbolic_power(q_log_one_minus_x(order), 0), qegf_one(order));
  EXPECT_EQ(symbolic_power(q_log_one_minus_x(order), 1), q_log_one_minus_x(order));
  EXPECT_THROW(symbolic_power(qegf_one(order), 1), std::invalid_argument);
}

TEST(QEgf, SymbolicPowerAtQOneIsOrdinaryPower) {
  // Numerators at q = 1 become egf coefficients of f^k.
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const int order = 6;
    const QEgf f = random_qegf(rng, order, true);
    for (int k = 0; k <= 3; ++k) {
      const QEgf fk = symbolic_power(f, k);
      // f^k at q = 1 via repeated ordinary egf products.
      std::vector<std::vector<BigInt>> power(order + 1);  // [n][t-degree]
      power[0] = {1};
      for (int n = 1; n <= order; ++n) power[static_cast<std::size_t>(n)] = {};
      for (int step = 0; step < k; ++step) {
        std::vector<std::vector<BigInt>> next(order + 1);
        for (int n = 0; n <= order; ++n)
          for (int i = 0; i <= n; ++i) {
            const auto& a = power[static_cast<std::size_t>(i)];
            const auto& b = f.numerator(n - i).coeffs();
            for (std::size_t u = 0; u < a.size(); ++u)
              for (std::size_t v = 0; v < b.size(); ++v) {
                auto& slot = next[static_cast<std::size_t>(n)];
                if (slot.size() < u + v + 1) slot.resize(u + v + 1);
                slot[u + v] += binomial(n, i) * a[u] * b[v].at_one();
              }
          }
        power = std::move(next);
      }
      for (int n = 0; n <= order; ++n) {
        std::vector<BigInt> got;
        for (const auto& c : fk.numerator(n).coeffs()) got.push_back(c.at_one());
        auto want = power[static_cast<std::size_t>(n)];
        while (!want.empty() && want.back() == 0) want.pop_back();
        while (!got.empty() && got.back() == 0) got.pop_back();
        EXPECT_EQ(got, want) << "k=" << k << " n=" << n;
      }
    }
  }
}

TEST(QEgf, Compose) {
  const int order = 6;
  std::vector<QPoly> x_num(order + 1);
  x_num[1] = QPoly({1});
  const QEgf x = qegf_from(x_num);
  const QEgf g = exp_q(TPoly(QPoly({1})), order);
  EXPECT_EQ(q_compose(g, x), g);
  // exp_q[-t log_q(1-x)] gives the first kind rows.
  const QEgf e = q_compose(exp_q(TPoly::monomial(QPoly({1}), 1), order), q_log_one_minus_x(order));
  for (int n = 0; n <= order; ++n)
    for (int k = 0; k <= n; ++k) EXPECT_EQ(e.numerator(n).coeff(static_cast<std::size_t>(k)), stirling(Kind::c_A, n, k)) << n << "," << k;
}

TEST(QEgf, Suite) {
  const Report r = qegf_identity_suite(8);
  EXPECT_TRUE(r.passed()) << r.summary();
}
