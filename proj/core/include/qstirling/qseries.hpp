#pragma once

#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/qpoly.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

// Polynomial in t with rational coefficients (ascending powers).
using RatPoly = std::vector<BigRational>;

// Truncated power series sum_{n<=order} c_n x^n with c_n in Q[t].
class RatSeries {
 public:
  explicit RatSeries(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RatPoly& coeff(int n) const { return coeffs_.at(static_cast<std::size_t>(n)); }
  RatPoly& coeff(int n) { return coeffs_.at(static_cast<std::size_t>(n)); }

  static RatSeries constant(int order, const BigRational& c);
  // e^{a x}
  static RatSeries exp_linear(int order, const BigRational& a);
  // sum_{n>=1} (a x)^n / n = -log(1 - a x)
  static RatSeries neg_log_one_minus(int order, const BigRational& a);

  RatSeries& operator+=(const RatSeries& other);
  RatSeries& operator-=(const RatSeries& other);
  RatSeries& operator*=(const RatPoly& scalar);

  friend RatSeries operator+(RatSeries a, const RatSeries& b) { return a += b; }
  friend RatSeries operator-(RatSeries a, const RatSeries& b) { return a -= b; }
  friend RatSeries operator*(const RatSeries& a, const RatSeries& b);
  friend RatSeries operator*(RatSeries a, const RatPoly& s) { return a *= s; }

  // exp of a series with zero constant term, via n E_n = sum k u_k E_{n-k}.
  RatSeries exp() const;
  RatSeries pow(unsigned k) const;

  // n! [x^n] as a polynomial in t.
  RatPoly egf_coefficient(int n) const;

 private:
  std::vector<RatPoly> coeffs_;
};

enum class EgfWhich { A_second, A_bivar, A_first, A_first_bivar, B_second, B_bivar, B_first, B_first_bivar };

const char* egf_name(EgfWhich which);

// n! [x^n] of the closed form equals the plain Stirling number (or the row
// polynomial in t for the bivariate forms) for all k, n <= N.
Report egf_verify(EgfWhich which, int N);
Report egf_verify_all(int N);

// Series sum_n a_n x^n / [n]! stored by its numerators a_n, which may carry
// a t parameter. Order is the largest n kept.
class QEgf {
 public:
  QEgf() = default;
  explicit QEgf(std::vector<TPoly> numerators) : num_(std::move(numerators)) {}

  int order() const { return static_cast<int>(num_.size()) - 1; }
  const TPoly& numerator(int n) const { return num_.at(static_cast<std::size_t>(n)); }
  const std::vector<TPoly>& numerators() const { return num_; }
  QEgf truncated(int order) const;

  friend bool operator==(const QEgf& a, const QEgf& b) { return a.num_ == b.num_; }

 private:
  std::vector<TPoly> num_;
};

QEgf qegf_one(int order);
// Numerators equal to the given QPoly sequence.
QEgf qegf_from(const std::vector<QPoly>& numerators);

// q-binomial convolution; throws std::invalid_argument on order mismatch.
QEgf mul(const QEgf& f, const QEgf& g);
QEgf add(const QEgf& f, const QEgf& g);
QEgf scale(const QEgf& f, const TPoly& s);
// (D_q f)_n = f_{n+1}; order drops by one.
QEgf dq(const QEgf& f);
// Inverse of dq with zero constant term; order grows by one.
QEgf antiderivative(const QEgf& f);
// (x f)_n = [n] f_{n-1}, same order.
QEgf times_x(const QEgf& f);

// -log_q(1 - x): numerators [n-1]! for n >= 1.
QEgf q_log_one_minus_x(int order);
// exp_q(a x): numerators a^n.
QEgf exp_q(const TPoly& a, int order);
// 1/(1 - x): numerators [n]!.
QEgf geometric(int order);

// f^{[0]} = 1 and f^{[k]} = antiderivative([k] f^{[k-1]} D_q f). Throws
// std::invalid_argument for k >= 1 when f has a nonzero constant term.
QEgf symbolic_power(const QEgf& f, int k);

// g[f] = sum_n g_n f^{[n]} / [n]!, truncated at f's order. Throws
// std::domain_error if some f^{[n]} is not divisible by [n]!.
QEgf q_compose(const QEgf& g, const QEgf& f);

// Cleared-denominator finite identities for S^o and S_B^o, the symbolic
// power formula for c[n,k], exp_q[-t log_q(1-x)], the four q-difference
// equations and q-chain rule spot checks, all to order N.
Report qegf_identity_suite(int N);

}  // namespace qstirling
