#include "qstirling/conject.hpp"

#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include <json.hpp>

namespace qstirling {

std::string_view property_name(SeqProperty property) {
  switch (property) {
    case SeqProperty::log_concave: return "log_concave";
    case SeqProperty::parity_log_concave: return "parity_log_concave";
    case SeqProperty::unimodal: return "unimodal";
    case SeqProperty::parity_unimodal: return "parity_unimodal";
    case SeqProperty::bottom_heavy: return "bottom_heavy";
    case SeqProperty::bottom_interlacing: return "bottom_interlacing";
  }
  return "?";
}

namespace {

int log_concave_witness(const std::vector<BigInt>& a) {
  for (std::size_t i = 1; i + 1 < a.size(); ++i) {
    if (a[i] * a[i] < a[i - 1] * a[i + 1]) return static_cast<int>(i);
  }
  return -1;
}

int unimodal_witness(const std::vector<BigInt>& a) {
  bool fell = false;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (a[i] < a[i - 1]) fell = true;
    else if (a[i] > a[i - 1] && fell) return static_cast<int>(i);
  }
  return -1;
}

// Runs check on the even- and odd-indexed subsequences; maps the witness back.
template <class Check>
int parity_witness(const std::vector<BigInt>& a, Check check) {
  for (std::size_t parity = 0; parity < 2; ++parity) {
    std::vector<BigInt> sub;
    for (std::size_t i = parity; i < a.size(); i += 2) sub.push_back(a[i]);
    const int w = check(sub);
    if (w >= 0) return 2 * w + static_cast<int>(parity);
  }
  return -1;
}

int bottom_heavy_witness(const std::vector<BigInt>& a) {
  const std::size_t d = a.size() - 1;
  for (std::size_t k = 0; 2 * k < d; ++k) {
    if (a[k] < a[d - k]) return static_cast<int>(k);
  }
  return -1;
}

int bottom_interlacing_witness(const std::vector<BigInt>& a) {
  const int d = static_cast<int>(a.size()) - 1;
  // Chain of indices d, 0, d-1, 1, d-2, 2, ... ending at floor(d/2).
  std::vector<int> chain;
  for (int lo = 0, hi = d; lo <= hi; ++lo, --hi) {
    chain.push_back(hi);
    if (lo != hi) chain.push_back(lo);
  }
  for (std::size_t i = 1; i < chain.size(); ++i) {
    if (a[static_cast<std::size_t>(chain[i - 1])] > a[static_cast<std::size_t>(chain[i])]) return chain[i];
  }
  return -1;
}

}  // namespace

PropertyResult sequence_property(const std::vector<BigInt>& a, SeqProperty property) {
  if (a.empty()) throw std::invalid_argument("sequence_property: empty coefficient list");
  int w = -1;
  switch (property) {
    case SeqProperty::log_concave: w = log_concave_witness(a); break;
    case SeqProperty::parity_log_concave: w = parity_witness(a, log_concave_witness); break;
    case SeqProperty::unimodal: w = unimodal_witness(a); break;
    case SeqProperty::parity_unimodal: w = parity_witness(a, unimodal_witness); break;
    case SeqProperty::bottom_heavy: w = bottom_heavy_witness(a); break;
    case SeqProperty::bottom_interlacing: w = bottom_interlacing_witness(a); break;
  }
  return {w < 0, w};
}

ScanResult scan(Kind family, int n_max, int k_max, SeqProperty property) {
  ScanResult result{family, property, 0, {}};
  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= std::min(n, k_max); ++k) {
      const QPoly p = stirling(family, n, k);
      if (p.is_zero()) continue;
      ++result.checked;
      const auto r = sequence_property(p.coeffs(), property);
      if (!r.holds) result.failures.push_back({n, k, r.witness, p.coeffs()});
    }
  }
  return result;
}

namespace {

nlohmann::ordered_json scan_json(const ScanResult& result) {
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const auto& f : result.failures) failures.push_back({{"n", f.n}, {"k", f.k}, {"witness", f.witness}});
  return {{"family", kind_name(result.family)}, {"property", property_name(result.property)}, {"failures", failures}};
}

}  // namespace

std::string to_json(const ScanResult& result) { return scan_json(result).dump(); }

std::string to_json(const std::vector<ScanResult>& results) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const auto& r : results) out.push_back(scan_json(r));
  return out.dump();
}

Report strong_qlc_check(Kind family, int n) {
  if (family != Kind::S_B && family != Kind::c_B) throw std::invalid_argument("strong_qlc_check: family must be S_B or c_B");
  Report report{std::string("strong q-log-concavity ") + std::string(kind_name(family))};
  for (int k = 1; k <= n; ++k) {
    for (int l = k; l <= n; ++l) {
      const QPoly diff = stirling(family, n, k) * stirling(family, n, l) - stirling(family, n, k - 1) * stirling(family, n, l + 1);
      bool nonnegative = true;
      for (const auto& c : diff.coeffs()) nonnegative = nonnegative && c >= 0;
      report.check(nonnegative, "f_k f_l - f_{k-1} f_{l+1} >= 0 (n=" + std::to_string(n) + ",k=" + std::to_string(k) + ",l=" + std::to_string(l) + ")");
    }
  }
  return report;
}

namespace {

double natural_log(const BigInt& v) {
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, v.get_mpz_t());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

std::string fmt12(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", x);
  return buf;
}

}  // namespace

DistributionData distribution_data(Kind family, int n) {
  if (n < 0) throw std::invalid_argument("distribution_data: n must be nonnegative");
  DistributionData data;
  for (int k = 0; k <= n; ++k) {
    const QPoly p = stirling(family, n, k);
    if (p.is_zero()) continue;
    const auto& c = p.coeffs();
    BigInt total = 0, first = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) data.rows.push_back({n, k, static_cast<int>(j), c[j], natural_log(c[j])});
      total += c[j];
      first += c[j] * static_cast<unsigned long>(j);
    }
    const BigRational mean(first, total);
    BigRational m2 = 0, m3 = 0, m4 = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
      const BigRational d = BigRational(static_cast<unsigned long>(j)) - mean;
      const BigRational d2 = d * d;
      m2 += c[j] * d2;
      m3 += c[j] * d2 * d;
      m4 += c[j] * d2 * d2;
    }
    m2 /= total;
    m3 /= total;
    m4 /= total;
    const double var = m2.get_d();
    const double nan = std::numeric_limits<double>::quiet_NaN();
    const double skew = var > 0 ? m3.get_d() / std::pow(var, 1.5) : nan;
    const double kurt = var > 0 ? BigRational(m4 / (m2 * m2)).get_d() - 3.0 : nan;
    data.moments.push_back({n, k, mean.get_d(), var, skew, kurt});
  }
  return data;
}

std::string distribution_csv(const DistributionData& data) {
  std::string out = "n,k,j,coeff,log_coeff\n";
  for (const auto& r : data.rows) {
    out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + std::to_string(r.j) + "," + r.coeff.get_str() + "," + fmt12(r.log_coeff) + "\n";
  }
  return out;
}

std::string moments_csv(const DistributionData& data) {
  std::string out = "n,k,mean,variance,skewness,excess_kurtosis\n";
  for (const auto& m : data.moments) {
    out += std::to_string(m.n) + "," + std::to_string(m.k) + "," + fmt12(m.mean) + "," + fmt12(m.variance) + "," + fmt12(m.skewness) + "," +
           fmt12(m.excess_kurtosis) + "\n";
  }
  return out;
}

}  // namespace qstirling
