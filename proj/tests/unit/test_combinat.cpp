#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

#include "oracles.hpp"
#include "qstirling/combinat.hpp"
#include "qstirling/stirling.hpp"

using namespace qstirling;

namespace {

const char* kRho = "0 -1 1 -3 3 -6 6 | -2 5 -7 / 2 -5 7 | -4 / 4";
const char* kPi = "(3,1,-3,-1)(5,-7,-2)(-5,7,2)(-4)(4)(6,-6)";

}  // namespace

TEST(Combinat, RunningExamples) {
  const auto rho = parse_signed_partition(kRho);
  EXPECT_EQ(rho.n, 7);
  EXPECT_EQ(rho.k(), 2);
  EXPECT_TRUE(rho.is_standard());
  EXPECT_EQ(inv(rho), 11);
  EXPECT_EQ(maj(rho), 7);
  const auto pi = parse_signed_permutation(kPi);
  EXPECT_TRUE(pi.is_standard());
  EXPECT_EQ(inv(pi), 13);
  EXPECT_EQ(pi.k(), 2);
  EXPECT_EQ(pi.apply(3), 1);
  EXPECT_EQ(pi.apply(-1), 3);
  EXPECT_EQ(pi.apply(6), -6);
}

TEST(Combinat, TextRoundTrip) {
  for (int n = 0; n <= 4; ++n) {
    for (const auto& r : enumerate_signed_partitions(n)) EXPECT_EQ(parse_signed_partition(to_text(r), n), r);
    for (const auto& p : enumerate_signed_permutations(n)) EXPECT_EQ(parse_signed_permutation(to_text(p), n), p);
    for (Flavor f : {Flavor::typeA, Flavor::typeB})
      for (const auto& o : enumerate_ordered(f, n)) EXPECT_EQ(parse_ordered(f, to_text(o), n), o);
  }
  EXPECT_EQ(to_text(SignedPermutation{}), "()");
}

TEST(Combinat, ParseErrors) {
  EXPECT_THROW(parse_signed_partition("0 | 1 / 1"), std::invalid_argument);
  EXPECT_THROW(parse_signed_partition("0 -1 | 2 / -2"), std::invalid_argument);
  EXPECT_THROW(parse_signed_permutation("(1,2)"), std::invalid_argument);
  EXPECT_THROW(parse_signed_permutation("(1,2"), std::invalid_argument);
  EXPECT_THROW(parse_ordered(Flavor::typeA, "1 / 1"), std::invalid_argument);
  EXPECT_THROW(parse_ordered(Flavor::typeA, "1 / 3"), std::invalid_argument);
}

TEST(Combinat, NonStandardInputsRejected) {
  SignedPartition rho = parse_signed_partition("0 | -1 / 1 | -2 / 2");
  std::swap(rho.pairs[0], rho.pairs[1]);
  EXPECT_FALSE(rho.is_standard());
  EXPECT_THROW(inv(rho), std::invalid_argument);
  EXPECT_THROW(maj(rho), std::invalid_argument);
  EXPECT_EQ(inv(rho.standardized()), 0);
}

TEST(Combinat, SmallStatistics) {
  EXPECT_EQ(maj(parse_signed_partition("-2 -1 0 1 2")), 0);
  EXPECT_EQ(maj(parse_signed_partition("0 | -1 / 1 | -2 / 2 | -3 / 3")), 0);
  EXPECT_EQ(inv(parse_ordered(Flavor::typeA, "1 / 2 / 3 / 4")), 0);
  EXPECT_EQ(inv(parse_ordered(Flavor::typeA, "2 / 1")), 1);
}

TEST(Combinat, CountsAgainstBruteForce) {
  for (int n = 0; n <= 4; ++n) {
    const auto sp = oracle::signed_partition_counts(n);
    const auto perm = oracle::signed_permutation_counts(n);
    for (int k = 0; k <= n; ++k) {
      EXPECT_EQ(family_count(Family::signed_partition, n, k), sp[static_cast<std::size_t>(k)]) << n << "," << k;
      EXPECT_EQ(family_count(Family::signed_permutation, n, k), perm[static_cast<std::size_t>(k)]) << n << "," << k;
      EXPECT_EQ(static_cast<long>(enumerate_signed_partitions(n, k).size()), sp[static_cast<std::size_t>(k)].get_si());
    }
  }
  EXPECT_EQ(family_count(Family::signed_partition, 2, 1), 4);
  EXPECT_EQ(family_count(Family::signed_permutation, 2, 0), 3);
  EXPECT_EQ(family_count(Family::ordered_A, 3, 3), 6);
}

TEST(Combinat, EnumerationIsDistinctAndStandard) {
  for (int n = 0; n <= 5; ++n) {
    std::set<std::string> seen;
    for (const auto& r : enumerate_signed_partitions(n)) {
      EXPECT_TRUE(r.is_standard());
      EXPECT_TRUE(seen.insert(to_text(r)).second);
    }
    seen.clear();
    for (const auto& p : enumerate_signed_permutations(n)) {
      EXPECT_TRUE(p.is_standard());
      EXPECT_TRUE(seen.insert(to_text(p)).second);
    }
    for (Flavor f : {Flavor::typeA, Flavor::typeB}) {
      seen.clear();
      for (const auto& o : enumerate_ordered(f, n)) {
        EXPECT_TRUE(o.is_valid());
        EXPECT_TRUE(seen.insert(to_text(o)).second);
      }
    }
  }
}

TEST(Combinat, GeneratingFunctions) {
  EXPECT_EQ(statistic_gf(Family::signed_partition, 2, 1, Stat::inv), QPoly({2, 1, 1}));
  EXPECT_EQ(statistic_gf(Family::ordered_A, 2, 2, Stat::inv), QPoly({1, 1}));
  EXPECT_EQ(statistic_gf(Family::signed_permutation, 1, 1, Stat::inv), QPoly({1}));
  EXPECT_THROW(statistic_gf(Family::signed_permutation, 2, 1, Stat::maj), std::invalid_argument);
  const Report r = verify_statistics(5, 6, 4);
  EXPECT_TRUE(r.passed()) << r.summary();
}

TEST(Combinat, TypeBFunctions) {
  EXPECT_EQ(count_type_b_functions(1, 1).total, 3);
  EXPECT_EQ(count_type_b_functions(2, 1).total, 9);
  const auto c = count_type_b_functions(3, 2);
  EXPECT_EQ(c.total, 125);
  ASSERT_EQ(c.histogram.size(), 4u);
  EXPECT_EQ(c.histogram[0], 1);
  EXPECT_EQ(c.histogram[1], 52);
  EXPECT_EQ(c.histogram[2], 72);
  EXPECT_EQ(c.histogram[3], 0);
  EXPECT_TRUE(verify_type_b_functions(3, 3).passed());
}
