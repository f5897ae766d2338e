#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "qstirling/bigint.hpp"

namespace qstirling {

// Dense polynomial in q with arbitrary-precision integer coefficients,
// stored in ascending powers. Trailing zeros are always stripped, so the
// zero polynomial has no coefficients and equality is structural.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<BigInt> coeffs);
  QPoly(std::initializer_list<long> coeffs);

  static QPoly constant(const BigInt& c);
  static QPoly monomial(const BigInt& c, std::size_t degree);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of q^i; zero past the degree.
  BigInt coeff(std::size_t i) const;

  BigInt at_one() const;
  BigInt evaluate(const BigInt& q) const;

  // Multiplies by q^k.
  QPoly shifted(std::size_t k) const;

  // Quotient by a divisor whose division is expected to be exact over Z.
  // Throws std::domain_error when the remainder is nonzero or a quotient
  // coefficient is not integral.
  QPoly exact_divide(const QPoly& divisor) const;

  QPoly& operator+=(const QPoly& other);
  QPoly& operator-=(const QPoly& other);
  QPoly& operator*=(const QPoly& other);
  QPoly& operator*=(const BigInt& scalar);

  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(const QPoly& a, const QPoly& b);
  friend QPoly operator*(QPoly a, const BigInt& s) { return a *= s; }
  friend QPoly operator*(const BigInt& s, QPoly a) { return a *= s; }
  QPoly operator-() const;

  friend bool operator==(const QPoly& a, const QPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<BigInt> coeffs_;
};

QPoly pow(const QPoly& base, unsigned exponent);

// "c0 + c1*q + c2*q^2 + ..." with zero terms omitted and negative terms
// written with a minus sign; the zero polynomial prints as "0".
std::string to_text(const QPoly& p);

// {"coeffs":["c0","c1",...]} with decimal-string coefficients.
std::string to_json(const QPoly& p);
QPoly qpoly_from_json(std::string_view json);

// [n]_q = 1 + q + ... + q^{n-1}; throws std::invalid_argument for n < 0.
QPoly q_bracket(int n);
// [n]_q! and [n]_q!!; both are the empty product 1 for n < 0.
QPoly q_factorial(int n);
QPoly q_double_factorial(int n);

// Gaussian binomial via the Pascal recursion; zero for k outside [0, n].
QPoly gaussian_binomial(int n, int k);

// p(q^m); throws std::invalid_argument for m <= 0.
QPoly substitute_power(const QPoly& p, int m);

// Remainder of p modulo the monic polynomial q^m - q, m >= 2.
QPoly reduce_mod_qm_minus_q(const QPoly& p, int m);

// Polynomial in an auxiliary variable t with QPoly coefficients.
class TPoly {
 public:
  TPoly() = default;
  explicit TPoly(std::vector<QPoly> coeffs);
  explicit TPoly(const QPoly& constant);

  // t^k with coefficient c.
  static TPoly monomial(const QPoly& c, std::size_t k);
  // t + c
  static TPoly t_plus(const QPoly& c);

  const std::vector<QPoly>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  QPoly coeff(std::size_t k) const;

  // Drops every t^k with k > max_degree.
  TPoly truncated(std::size_t max_degree) const;
  // Applies fn to each coefficient (used for exact division by q-factorials).
  template <class Fn>
  TPoly map_coeffs(Fn&& fn) const {
    std::vector<QPoly> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(fn(c));
    return TPoly(std::move(out));
  }

  QPoly evaluate(const QPoly& t) const;

  TPoly& operator+=(const TPoly& other);
  TPoly& operator-=(const TPoly& other);
  TPoly& operator*=(const QPoly& scalar);

  friend TPoly operator+(TPoly a, const TPoly& b) { return a += b; }
  friend TPoly operator-(TPoly a, const TPoly& b) { return a -= b; }
  friend TPoly operator*(const TPoly& a, const TPoly& b);
  friend TPoly operator*(TPoly a, const QPoly& s) { return a *= s; }
  friend TPoly operator*(const QPoly& s, TPoly a) { return a *= s; }
  TPoly operator-() const;

  friend bool operator==(const TPoly& a, const TPoly& b) { return a.coeffs_ == b.coeffs_; }

 private:
  void normalize();

  std::vector<QPoly> coeffs_;
};

// Array over t-degree of QPoly JSON objects.
std::string to_json(const TPoly& p);
std::string to_text(const TPoly& p);

}  // namespace qstirling
