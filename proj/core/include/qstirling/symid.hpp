#pragma once

#include <cstddef>
#include <vector>

#include "qstirling/qpoly.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

// Values substituted for x_1, x_2, ... (1-based access).
class SpecializedVars {
 public:
  explicit SpecializedVars(std::vector<QPoly> values) : values_(std::move(values)) {}

  // x_i = [2i-1]: [1], [3], [5], ...
  static SpecializedVars odd_brackets(int count);
  // x_i = [i]: [1], [2], [3], ...
  static SpecializedVars brackets(int count);
  // x_i = [i-1]: [0], [1], [2], ...
  static SpecializedVars shifted_brackets(int count);
  static SpecializedVars numeric(const std::vector<long>& values);

  std::size_t size() const { return values_.size(); }
  const QPoly& operator[](std::size_t i) const { return values_.at(i - 1); }
  const std::vector<QPoly>& values() const { return values_; }

  // The variables x_{first}, ..., x_{last} (1-based, inclusive); empty when
  // first > last.
  SpecializedVars slice(std::size_t first, std::size_t last) const;

 private:
  std::vector<QPoly> values_;
};

// e_k(x_1..x_n) and h_k(x_1..x_n), computed by the one-variable-at-a-time
// recursions. Zero for k < 0 (and for k > n in the elementary case);
// e_0 = h_0 = 1. Throws std::out_of_range when n exceeds the variables.
QPoly elementary(const SpecializedVars& vars, int k, int n);
QPoly homogeneous(const SpecializedVars& vars, int k, int n);

// Both families as products over the variables: prod (1 + x_i t) and the
// truncation of prod 1/(1 - x_i t) to t-degree `order`.
TPoly elementary_gf(const SpecializedVars& vars, int n);
TPoly homogeneous_gf(const SpecializedVars& vars, int n, int order);

// Parts (a)-(d) of the type B theorem expressing c_B and S_B through e and h
// at the odd brackets, together with the four type A analogues, for all
// 0 <= k <= n <= n_max. Series identities are compared modulo
// t^{N+1}, N = max(series_order, n_max + 2k).
Report verify_symmetric_expressions(int n_max, int series_order = 20);

// e_n/h_n generating functions as products, for specialized variables.
Report verify_generating_functions(int n_max);

enum class TnVariant { generic, typeA_q, typeB_q };

// t^n = sum_k h_{n-k}(k+1) (t - x_1)...(t - x_k). The generic variant
// evaluates both sides on the grid {0..n}^{n+2} of (t, x_1..x_{n+1}) and is
// limited to n <= 6; the q variants are exact identities in t.
Report verify_tn_expansion(int n, TnVariant variant);

// (s S)_{n,k} = delta and (s_B S_B)_{n,k} = delta for n, k < N, and the e/h
// alternating-sum theorem for all n, m, total degree <= eh_bound at the
// specializations x_i = [2i-1] and x_i = [i-1].
Report verify_inverse_matrices(int N, int eh_bound = 8);

}  // namespace qstirling
