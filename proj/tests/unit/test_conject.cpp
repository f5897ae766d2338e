#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "qstirling/conject.hpp"

using namespace qstirling;

namespace {

std::vector<BigInt> seq(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

}  // namespace

TEST(Conjecture, SequenceProperties) {
  const auto s43 = seq({3, 2, 1});
  const auto r = sequence_property(s43, SeqProperty::bottom_interlacing);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.witness, 1);
  EXPECT_TRUE(sequence_property(seq({1, 2, 1}), SeqProperty::bottom_heavy).holds);
  EXPECT_TRUE(sequence_property(seq({1, 3, 3, 1}), SeqProperty::log_concave).holds);
  EXPECT_FALSE(sequence_property(seq({1, 0, 1}), SeqProperty::log_concave).holds);
  EXPECT_TRUE(sequence_property(seq({1, 0, 1}), SeqProperty::parity_log_concave).holds);
  EXPECT_FALSE(sequence_property(seq({1, 2, 1, 2}), SeqProperty::unimodal).holds);
  EXPECT_TRUE(sequence_property(seq({1, 5, 2, 6, 3}), SeqProperty::parity_unimodal).holds);
  EXPECT_FALSE(sequence_property(seq({1, 2}), SeqProperty::bottom_heavy).holds);
  EXPECT_TRUE(sequence_property(seq({7}), SeqProperty::bottom_interlacing).holds);
  EXPECT_THROW(sequence_property({}, SeqProperty::unimodal), std::invalid_argument);
}

TEST(Conjecture, KnownCounterexamples) {
  const auto sb = scan(Kind::S_B, 12, 12, SeqProperty::unimodal);
  ASSERT_FALSE(sb.failures.empty());
  EXPECT_EQ(sb.failures[0].n, 6);
  EXPECT_EQ(sb.failures[0].k, 4);
  EXPECT_EQ(sb.failures[0].coeffs, seq({15, 24, 34, 38, 43, 42, 43, 38, 35, 26, 20, 14, 10, 6, 4, 2, 1}));
  const auto cb = scan(Kind::c_B, 12, 12, SeqProperty::unimodal);
  ASSERT_FALSE(cb.failures.empty());
  EXPECT_EQ(cb.failures[0].n, 7);
  EXPECT_EQ(cb.failures[0].k, 5);
  EXPECT_TRUE(scan(Kind::S_A, 12, 12, SeqProperty::log_concave).failures.empty());
}

TEST(Conjecture, Json) {
  EXPECT_EQ(to_json(std::vector<ScanResult>{}), "[]");
  const auto r = scan(Kind::S_A, 4, 4, SeqProperty::bottom_interlacing);
  EXPECT_EQ(to_json(r), R"({"family":"S","property":"bottom_interlacing","failures":[{"n":4,"k":3,"witness":1}]})");
}

TEST(Conjecture, StrongQLogConcavity) {
  for (int n = 0; n <= 8; ++n) {
    EXPECT_TRUE(strong_qlc_check(Kind::S_B, n).passed()) << n;
    EXPECT_TRUE(strong_qlc_check(Kind::c_B, n).passed()) << n;
  }
  EXPECT_THROW(strong_qlc_check(Kind::S_A, 3), std::invalid_argument);
}

TEST(Conjecture, Distributions) {
  const auto d = distribution_data(Kind::S_A, 4);
  ASSERT_EQ(d.moments.size(), 4u);
  EXPECT_DOUBLE_EQ(d.moments[2].mean, 2.0 / 3.0);
  EXPECT_TRUE(std::isnan(d.moments[0].skewness));
  // c[3,1] = 1 + q is symmetric.
  const auto sym = distribution_data(Kind::c_A, 3);
  ASSERT_EQ(sym.moments[0].k, 1);
  EXPECT_NEAR(sym.moments[0].skewness, 0.0, 1e-12);
  std::size_t nonzero = 0;
  const auto big = distribution_data(Kind::S_A, 25);
  for (int k = 0; k <= 25; ++k) {
    const QPoly p = stirling(Kind::S_A, 25, k);
    for (const auto& c : p.coeffs()) nonzero += c != 0;
  }
  EXPECT_EQ(big.rows.size(), nonzero);
  const std::string csv = distribution_csv(d);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,k,j,coeff,log_coeff");
  const std::string mcsv = moments_csv(d);
  EXPECT_EQ(mcsv.substr(0, mcsv.find('\n')), "n,k,mean,variance,skewness,excess_kurtosis");
}
