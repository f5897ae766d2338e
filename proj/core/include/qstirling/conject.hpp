#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/report.hpp"
#include "qstirling/stirling.hpp"

namespace qstirling {

enum class SeqProperty { log_concave, parity_log_concave, unimodal, parity_unimodal, bottom_heavy, bottom_interlacing };

std::string_view property_name(SeqProperty property);

// Outcome of a property check; witness is the index (into the original
// list) at which the defining inequality fails.
struct PropertyResult {
  bool holds = true;
  int witness = -1;
};

// log_concave:        a_i^2 >= a_{i-1} a_{i+1} for 0 < i < d
// unimodal:           no rise a_{i-1} < a_i after a fall; witness = the rise
// parity_*:           the above on a_0, a_2, ... and on a_1, a_3, ...
// bottom_heavy:       a_k >= a_{d-k} for k < d/2
// bottom_interlacing: a_d <= a_0 <= a_{d-1} <= a_1 <= ... <= a_{floor(d/2)}
// Throws std::invalid_argument for an empty list.
PropertyResult sequence_property(const std::vector<BigInt>& a, SeqProperty property);

struct ScanFailure {
  int n = 0;
  int k = 0;
  int witness = -1;
  std::vector<BigInt> coeffs;
};

struct ScanResult {
  Kind family = Kind::S_A;
  SeqProperty property = SeqProperty::log_concave;
  std::size_t checked = 0;
  std::vector<ScanFailure> failures;
};

// Every nonzero family polynomial with 0 <= k <= min(n, k_max), n <= n_max,
// in (n, k) order.
ScanResult scan(Kind family, int n_max, int k_max, SeqProperty property);

// {"family":..,"property":..,"failures":[{"n":..,"k":..,"witness":..},..]}
std::string to_json(const ScanResult& result);
// "[]" for an empty list.
std::string to_json(const std::vector<ScanResult>& results);

// f_k f_l - f_{k-1} f_{l+1} has nonnegative coefficients for all
// 0 < k <= l <= n, with f_k the family row at n. Family must be S_B or c_B.
Report strong_qlc_check(Kind family, int n);

struct DistributionRow {
  int n, k, j;
  BigInt coeff;
  double log_coeff;
};

struct Moments {
  int n, k;
  double mean, variance, skewness, excess_kurtosis;
};

struct DistributionData {
  std::vector<DistributionRow> rows;
  std::vector<Moments> moments;
};

// One row per nonzero coefficient of the family polynomials at n, and the
// moments of each normalized coefficient distribution.
DistributionData distribution_data(Kind family, int n);

// "n,k,j,coeff,log_coeff" then one line per row, logs to 12 significant digits.
std::string distribution_csv(const DistributionData& data);
// "n,k,mean,variance,skewness,excess_kurtosis" then one line per (n, k).
std::string moments_csv(const DistributionData& data);

}  // namespace qstirling
