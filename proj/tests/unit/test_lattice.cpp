#include <gtest/gtest.h>

#include <stdexcept>

#include "qstirling/lattice.hpp"
#include "qstirling/stirling.hpp"

using namespace qstirling;

TEST(Lattice, Sizes) {
  const std::size_t expected[] = {1, 2, 6, 24, 116};
  for (int n = 0; n <= 4; ++n) EXPECT_EQ(build_lattice(n).size(), expected[n]);
  EXPECT_THROW(build_lattice(6), std::invalid_argument);
  const auto l1 = build_lattice(1);
  EXPECT_EQ(to_text(l1.element(l1.bottom())), "0 | -1 / 1");
  EXPECT_EQ(to_text(l1.element(l1.top())), "-1 0 1");
}

TEST(Lattice, MobiusAndWhitney) {
  const auto lat = build_lattice(2);
  const auto mu = mobius(lat);
  EXPECT_EQ(mu[lat.bottom()], 1);
  EXPECT_EQ(mu[lat.top()], 3);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.rank(i) == 1) EXPECT_EQ(mu[i], -1);
  }
  EXPECT_EQ(whitney(lat, mu, WhitneyKind::second, 1), 4);
  EXPECT_EQ(whitney(lat, mu, WhitneyKind::first, 2), 3);
  for (int n = 0; n <= 4; ++n) {
    const auto l = build_lattice(n);
    const auto m = mobius(l);
    EXPECT_EQ(whitney(l, m, WhitneyKind::first, 0), 1);
    EXPECT_EQ(whitney(l, m, WhitneyKind::second, 0), 1);
  }
}

TEST(Lattice, OrderIsAPartialOrder) {
  const auto lat = build_lattice(3);
  for (std::size_t i = 0; i < lat.size(); ++i) {
    EXPECT_TRUE(lat.leq(i, i));
    EXPECT_TRUE(lat.leq(lat.bottom(), i));
    EXPECT_TRUE(lat.leq(i, lat.top()));
    for (std::size_t j = 0; j < lat.size(); ++j) {
      if (i != j && lat.leq(i, j)) {
        EXPECT_FALSE(lat.leq(j, i));
        EXPECT_LT(lat.rank(i), lat.rank(j));
      }
    }
  }
}

TEST(Lattice, CycleCounts) {
  EXPECT_EQ(count_B_rho_formula(parse_signed_partition("-1 0 1")), 1);
  EXPECT_EQ(count_B_rho_formula(parse_signed_partition("-2 -1 0 1 2")), 3);
  const auto rho = parse_signed_partition("0 -1 1 -3 3 -6 6 | -2 5 -7 / 2 -5 7 | -4 / 4");
  EXPECT_EQ(count_B_rho_formula(rho), 30);
  EXPECT_EQ(count_B_rho_brute(rho), 30);
  const auto pi = parse_signed_permutation("(3,1,-3,-1)(5,-7,-2)(-5,7,2)(-4)(4)(6,-6)");
  EXPECT_EQ(underlying_partition(pi), rho.standardized());
}

TEST(Lattice, Suite) {
  const Report r = verify_lattice(3);
  EXPECT_TRUE(r.passed()) << r.summary();
}
