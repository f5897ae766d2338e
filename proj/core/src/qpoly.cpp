#include "qstirling/qpoly.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace qstirling {

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(const BigInt& c, std::size_t degree) {
  std::vector<BigInt> coeffs(degree + 1);
  coeffs[degree] = c;
  return QPoly(std::move(coeffs));
}

void QPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : BigInt(0); }

BigInt QPoly::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

BigInt QPoly::evaluate(const BigInt& q) const {
  BigInt acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= q;
    acc += *it;
  }
  return acc;
}

QPoly QPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> out(k);
  out.insert(out.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(out));
}

QPoly QPoly::exact_divide(const QPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("QPoly::exact_divide: division by zero");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) {
    throw std::domain_error("QPoly::exact_divide: divisor degree exceeds dividend degree");
  }
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dd = divisor.coeffs_.size() - 1;
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(rem.size() - dd);
  for (std::size_t i = quot.size(); i-- > 0;) {
    BigInt& top = rem[i + dd];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
      throw std::domain_error("QPoly::exact_divide: non-integral quotient coefficient");
    }
    BigInt factor = top / lead;
    for (std::size_t j = 0; j <= dd; ++j) rem[i + j] -= factor * divisor.coeffs_[j];
    quot[i] = factor;
  }
  for (const auto& r : rem) {
    if (r != 0) throw std::domain_error("QPoly::exact_divide: nonzero remainder");
  }
  return QPoly(std::move(quot));
}

QPoly& QPoly::operator+=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

QPoly operator*(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return QPoly(std::move(out));
}

QPoly& QPoly::operator*=(const QPoly& other) { return *this = *this * other; }

QPoly& QPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

QPoly QPoly::operator-() const {
  QPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

QPoly pow(const QPoly& base, unsigned exponent) {
  QPoly result{1};
  QPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent > 0) b *= b;
  }
  return result;
}

std::string to_text(const QPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    BigInt mag = abs(c);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    out += mag.get_str();
    if (i == 1) out += "*q";
    if (i > 1) out += "*q^" + std::to_string(i);
    first = false;
  }
  return out;
}

std::string to_json(const QPoly& p) {
  std::string out = "{\"coeffs\":[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += "\"" + p.coeffs()[i].get_str() + "\"";
  }
  out += "]}";
  return out;
}

QPoly qpoly_from_json(std::string_view json) {
  const auto doc = nlohmann::json::parse(json);
  if (!doc.is_object() || !doc.contains("coeffs") || !doc["coeffs"].is_array()) {
    throw std::invalid_argument("qpoly_from_json: expected {\"coeffs\": [...]}");
  }
  std::vector<BigInt> coeffs;
  for (const auto& c : doc["coeffs"]) {
    if (!c.is_string()) throw std::invalid_argument("qpoly_from_json: coefficients must be strings");
    BigInt v;
    if (v.set_str(c.get<std::string>(), 10) != 0) {
      throw std::invalid_argument("qpoly_from_json: malformed integer " + c.get<std::string>());
    }
    coeffs.push_back(std::move(v));
  }
  return QPoly(std::move(coeffs));
}

QPoly q_bracket(int n) {
  if (n < 0) throw std::invalid_argument("q_bracket: n must be nonnegative");
  return QPoly(std::vector<BigInt>(static_cast<std::size_t>(n), BigInt(1)));
}

QPoly q_factorial(int n) {
  QPoly result{1};
  for (int i = 2; i <= n; ++i) result *= q_bracket(i);
  return result;
}

QPoly q_double_factorial(int n) {
  QPoly result{1};
  for (int i = n; i > 1; i -= 2) result *= q_bracket(i);
  return result;
}

QPoly gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return {};
  if (k == 0 || k == n) return QPoly{1};

  static std::mutex mutex;
  static std::map<std::pair<int, int>, QPoly> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({n, k}); it != cache.end()) return it->second;
  }
  // [n,k] = [n-1,k-1] + q^k [n-1,k]
  QPoly value = gaussian_binomial(n - 1, k - 1) + gaussian_binomial(n - 1, k).shifted(k);
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{n, k}, std::move(value)).first->second;
}

QPoly substitute_power(const QPoly& p, int m) {
  if (m <= 0) throw std::invalid_argument("substitute_power: exponent must be positive");
  if (p.is_zero()) return {};
  const auto step = static_cast<std::size_t>(m);
  std::vector<BigInt> out((p.coeffs().size() - 1) * step + 1);
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) out[i * step] = p.coeffs()[i];
  return QPoly(std::move(out));
}

QPoly reduce_mod_qm_minus_q(const QPoly& p, int m) {
  if (m < 2) throw std::invalid_argument("reduce_mod_qm_minus_q: m must be at least 2");
  std::vector<BigInt> c = p.coeffs();
  const auto mm = static_cast<std::size_t>(m);
  // q^i = q^{i-m} q^m == q^{i-m+1}
  for (std::size_t i = c.size(); i-- > mm;) {
    if (c[i] == 0) continue;
    c[i - mm + 1] += c[i];
    c[i] = 0;
  }
  return QPoly(std::move(c));
}

TPoly::TPoly(std::vector<QPoly> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

TPoly::TPoly(const QPoly& constant) : coeffs_{constant} { normalize(); }

TPoly TPoly::monomial(const QPoly& c, std::size_t k) {
  std::vector<QPoly> coeffs(k + 1);
  coeffs[k] = c;
  return TPoly(std::move(coeffs));
}

TPoly TPoly::t_plus(const QPoly& c) { return TPoly(std::vector<QPoly>{c, QPoly{1}}); }

void TPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

QPoly TPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : QPoly{}; }

TPoly TPoly::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return TPoly(std::vector<QPoly>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree + 1)));
}

QPoly TPoly::evaluate(const QPoly& t) const {
  QPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= t;
    acc += *it;
  }
  return acc;
}

TPoly& TPoly::operator+=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator-=(const TPoly& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  normalize();
  return *this;
}

TPoly& TPoly::operator*=(const QPoly& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  normalize();
  return *this;
}

TPoly operator*(const TPoly& a, const TPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<QPoly> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return TPoly(std::move(out));
}

TPoly TPoly::operator-() const {
  TPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string to_json(const TPoly& p) {
  std::string out = "[";
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    if (i) out += ",";
    out += to_json(p.coeffs()[i]);
  }
  return out + "]";
}

std::string to_text(const TPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (std::size_t k = 0; k < p.coeffs().size(); ++k) {
    if (p.coeffs()[k].is_zero()) continue;
    if (!first) out += " + ";
    out += "(" + to_text(p.coeffs()[k]) + ")";
    if (k == 1) out += "*t";
    if (k > 1) out += "*t^" + std::to_string(k);
    first = false;
  }
  return out;
}

}  // namespace qstirling
