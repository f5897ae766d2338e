#include "qstirling/symid.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>

#include "qstirling/stirling.hpp"

namespace qstirling {

SpecializedVars SpecializedVars::odd_brackets(int count) {
  std::vector<QPoly> v;
  for (int i = 1; i <= count; ++i) v.push_back(q_bracket(2 * i - 1));
  return SpecializedVars(std::move(v));
}

SpecializedVars SpecializedVars::brackets(int count) {
  std::vector<QPoly> v;
  for (int i = 1; i <= count; ++i) v.push_back(q_bracket(i));
  return SpecializedVars(std::move(v));
}

SpecializedVars SpecializedVars::shifted_brackets(int count) {
  std::vector<QPoly> v;
  for (int i = 1; i <= count; ++i) v.push_back(q_bracket(i - 1));
  return SpecializedVars(std::move(v));
}

SpecializedVars SpecializedVars::numeric(const std::vector<long>& values) {
  std::vector<QPoly> v;
  for (long x : values) v.push_back(QPoly::constant(x));
  return SpecializedVars(std::move(v));
}

SpecializedVars SpecializedVars::slice(std::size_t first, std::size_t last) const {
  if (first > last) return SpecializedVars({});
  if (first < 1 || last > values_.size()) throw std::out_of_range("SpecializedVars::slice: index out of range");
  return SpecializedVars(std::vector<QPoly>(values_.begin() + static_cast<long>(first - 1),
                                            values_.begin() + static_cast<long>(last)));
}

namespace {

void require_vars(const SpecializedVars& vars, int n) {
  if (n < 0 || static_cast<std::size_t>(n) > vars.size()) {
    throw std::out_of_range("symmetric polynomial requested in " + std::to_string(n) + " variables but only " +
                            std::to_string(vars.size()) + " are specialized");
  }
}

}  // namespace

QPoly elementary(const SpecializedVars& vars, int k, int n) {
  require_vars(vars, n);
  if (k < 0 || k > n) return {};
  // e_j(i) = e_j(i-1) + x_i e_{j-1}(i-1), updated in place from the top.
  std::vector<QPoly> e(static_cast<std::size_t>(k) + 1);
  e[0] = QPoly{1};
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(k, i); j >= 1; --j) e[static_cast<std::size_t>(j)] += vars[static_cast<std::size_t>(i)] * e[static_cast<std::size_t>(j - 1)];
  }
  return e[static_cast<std::size_t>(k)];
}

QPoly homogeneous(const SpecializedVars& vars, int k, int n) {
  require_vars(vars, n);
  if (k < 0) return {};
  if (k == 0) return QPoly{1};
  if (n == 0) return {};
  // h_j(i) = h_j(i-1) + x_i h_{j-1}(i), updated in place from the bottom.
  std::vector<QPoly> h(static_cast<std::size_t>(k) + 1);
  h[0] = QPoly{1};
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= k; ++j) h[static_cast<std::size_t>(j)] += vars[static_cast<std::size_t>(i)] * h[static_cast<std::size_t>(j - 1)];
  }
  return h[static_cast<std::size_t>(k)];
}

TPoly elementary_gf(const SpecializedVars& vars, int n) {
  require_vars(vars, n);
  TPoly product(QPoly{1});
  for (int i = 1; i <= n; ++i) product = product * TPoly(std::vector<QPoly>{QPoly{1}, vars[static_cast<std::size_t>(i)]});
  return product;
}

TPoly homogeneous_gf(const SpecializedVars& vars, int n, int order) {
  require_vars(vars, n);
  TPoly product(QPoly{1});
  for (int i = 1; i <= n; ++i) {
    std::vector<QPoly> geometric;
    QPoly power{1};
    for (int j = 0; j <= order; ++j) {
      geometric.push_back(power);
      power *= vars[static_cast<std::size_t>(i)];
    }
    product = (product * TPoly(std::move(geometric))).truncated(static_cast<std::size_t>(order));
  }
  return product;
}

namespace {

std::string nk_tag(int n, int k) { return "(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")"; }

// prod_{i in factors} (1 - x t), as a polynomial in t.
TPoly one_minus_product(const std::vector<QPoly>& factors) {
  TPoly product(QPoly{1});
  for (const auto& x : factors) product = product * TPoly(std::vector<QPoly>{QPoly{1}, -x});
  return product;
}

}  // namespace

Report verify_symmetric_expressions(int n_max, int series_order) {
  Report report{"symmetric"};
  const auto odd = SpecializedVars::odd_brackets(std::max(n_max + 1, 1));
  const auto plain = SpecializedVars::brackets(std::max(n_max, 1));

  for (int n = 0; n <= n_max; ++n) {
    for (int k = 0; k <= n; ++k) {
      report.check(stirling(Kind::c_B, n, k) == elementary(odd, n - k, n), "(a) c_B = e_{n-k}([1],[3],..) " + nk_tag(n, k));
      report.check(stirling(Kind::S_B, n, k) == homogeneous(odd, n - k, k + 1), "(b) S_B = h_{n-k}([1],..,[2k+1]) " + nk_tag(n, k));
      report.check(stirling(Kind::c_A, n, k) == elementary(plain, n - k, std::max(n - 1, 0)), "type A (a) c = e_{n-k}([1],..,[n-1]) " + nk_tag(n, k));
      report.check(stirling(Kind::S_A, n, k) == homogeneous(plain, n - k, k), "type A (b) S = h_{n-k}([1],..,[k]) " + nk_tag(n, k));
    }

    std::vector<QPoly> row_b, row_a;
    for (int k = 0; k <= n; ++k) {
      row_b.push_back(stirling(Kind::c_B, n, k));
      row_a.push_back(stirling(Kind::c_A, n, k));
    }
    TPoly product_b(QPoly{1});
    for (int i = 1; i <= n; ++i) product_b = product_b * TPoly::t_plus(q_bracket(2 * i - 1));
    report.check(TPoly(row_b) == product_b, "(c) sum_k c_B[n,k] t^k = (t+[1])..(t+[2n-1]) (n=" + std::to_string(n) + ")");

    TPoly product_a(QPoly{1});
    if (n >= 1) {
      product_a = TPoly::monomial(QPoly{1}, 1);
      for (int i = 1; i <= n - 1; ++i) product_a = product_a * TPoly::t_plus(q_bracket(i));
    }
    report.check(TPoly(row_a) == product_a, "type A (c) sum_k c[n,k] t^k = t(t+[1])..(t+[n-1]) (n=" + std::to_string(n) + ")");
  }

  for (int k = 0; k <= n_max; ++k) {
    const int order = std::max(series_order, n_max + 2 * k);
    std::vector<QPoly> series_b, series_a, denom_b, denom_a;
    for (int n = 0; n <= order; ++n) {
      series_b.push_back(stirling(Kind::S_B, n, k));
      series_a.push_back(stirling(Kind::S_A, n, k));
    }
    for (int i = 0; i <= k; ++i) denom_b.push_back(q_bracket(2 * i + 1));
    for (int i = 1; i <= k; ++i) denom_a.push_back(q_bracket(i));
    const TPoly expected = TPoly::monomial(QPoly{1}, static_cast<std::size_t>(k));
    const auto N = static_cast<std::size_t>(order);
    report.check((TPoly(series_b) * one_minus_product(denom_b)).truncated(N) == expected,
                 "(d) sum_n S_B[n,k] t^n (1-[1]t)..(1-[2k+1]t) = t^k mod t^" + std::to_string(order + 1) + " (k=" + std::to_string(k) + ")");
    report.check((TPoly(series_a) * one_minus_product(denom_a)).truncated(N) == expected,
                 "type A (d) sum_n S[n,k] t^n (1-[1]t)..(1-[k]t) = t^k mod t^" + std::to_string(order + 1) + " (k=" + std::to_string(k) + ")");
  }
  return report;
}

namespace {

// Sum over all k-subsets of products (e) or all size-k multisets (h) of the
// first n variables.
QPoly expand_monomials(const SpecializedVars& vars, int k, int n, bool with_repetition) {
  QPoly total;
  std::vector<int> idx;
  std::function<void(int, QPoly)> rec = [&](int start, QPoly acc) {
    if (static_cast<int>(idx.size()) == k) {
      total += acc;
      return;
    }
    for (int i = start; i <= n; ++i) {
      idx.push_back(i);
      rec(with_repetition ? i : i + 1, acc * vars[static_cast<std::size_t>(i)]);
      idx.pop_back();
    }
  };
  rec(1, QPoly{1});
  return total;
}

}  // namespace

Report verify_generating_functions(int n_max) {
  Report report{"ogf"};
  const std::vector<std::pair<std::string, SpecializedVars>> specializations{
      {"x_i=[2i-1]", SpecializedVars::odd_brackets(n_max)},
      {"x_i=[i]", SpecializedVars::brackets(n_max)},
      {"x_i=[i-1]", SpecializedVars::shifted_brackets(n_max)},
  };
  for (const auto& [label, vars] : specializations) {
    for (int n = 0; n <= n_max; ++n) {
      const int order = n + 4;
      std::vector<QPoly> e_row, h_row;
      for (int k = 0; k <= order; ++k) {
        e_row.push_back(elementary(vars, k, n));
        h_row.push_back(homogeneous(vars, k, n));
      }
      const std::string tag = " " + label + " n=" + std::to_string(n);
      report.check(TPoly(e_row) == elementary_gf(vars, n), "sum_k e_k t^k = prod(1 + x_i t)" + tag);
      report.check(TPoly(h_row) == homogeneous_gf(vars, n, order), "sum_k h_k t^k = prod 1/(1 - x_i t)" + tag);
      if (n <= 4) {
        for (int k = 0; k <= n + 2; ++k) {
          report.check(elementary(vars, k, n) == expand_monomials(vars, k, n, false), "e_k by monomial expansion" + tag + " k=" + std::to_string(k));
          report.check(homogeneous(vars, k, n) == expand_monomials(vars, k, n, true), "h_k by monomial expansion" + tag + " k=" + std::to_string(k));
        }
      }
    }
  }
  return report;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("grid evaluation overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("grid evaluation overflow");
  return r;
}

// Evaluates sum_k h_{n-k}(x_1..x_{k+1}) (t-x_1)...(t-x_k) - t^n at one point.
std::int64_t tn_residual(int n, std::int64_t t, const std::vector<std::int64_t>& x) {
  // h[m][j] = h_j(x_1..x_m)
  std::vector<std::vector<std::int64_t>> h(static_cast<std::size_t>(n) + 2, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
  for (auto& row : h) row[0] = 1;
  for (int m = 1; m <= n + 1; ++m) {
    for (int j = 1; j <= n; ++j) {
      h[static_cast<std::size_t>(m)][static_cast<std::size_t>(j)] =
          checked_add(h[static_cast<std::size_t>(m - 1)][static_cast<std::size_t>(j)],
                      checked_mul(x[static_cast<std::size_t>(m - 1)], h[static_cast<std::size_t>(m)][static_cast<std::size_t>(j - 1)]));
    }
  }
  std::int64_t sum = 0, falling = 1;
  for (int k = 0; k <= n; ++k) {
    if (k >= 1) falling = checked_mul(falling, t - x[static_cast<std::size_t>(k - 1)]);
    sum = checked_add(sum, checked_mul(h[static_cast<std::size_t>(k + 1)][static_cast<std::size_t>(n - k)], falling));
  }
  std::int64_t power = 1;
  for (int i = 0; i < n; ++i) power = checked_mul(power, t);
  return sum - power;
}

}  // namespace

Report verify_tn_expansion(int n, TnVariant variant) {
  if (n < 0) throw std::invalid_argument("verify_tn_expansion: n must be nonnegative");
  Report report{"tn-expansion"};
  const std::string tag = "(n=" + std::to_string(n) + ")";
  switch (variant) {
    case TnVariant::generic: {
      if (n > 6) throw std::invalid_argument("verify_tn_expansion: generic variant is limited to n <= 6");
      // (t, x_1, ..., x_{n+1}) ranges over {0..n}^{n+2}. Both sides have
      // degree <= n in every variable, so vanishing on this grid is a proof.
      const int dims = n + 2;
      std::vector<std::int64_t> point(static_cast<std::size_t>(dims), 0);
      std::vector<std::int64_t> x(static_cast<std::size_t>(n) + 1);
      std::size_t points = 0, bad = 0;
      std::string first_bad;
      while (true) {
        std::copy(point.begin() + 1, point.end(), x.begin());
        ++points;
        if (tn_residual(n, point[0], x) != 0 && bad++ == 0) {
          first_bad = "t=" + std::to_string(point[0]);
          for (std::size_t i = 0; i < x.size(); ++i) first_bad += " x" + std::to_string(i + 1) + "=" + std::to_string(x[i]);
        }
        int d = 0;
        while (d < dims && ++point[static_cast<std::size_t>(d)] > n) point[static_cast<std::size_t>(d++)] = 0;
        if (d == dims) break;
      }
      report.checks += points - 1;
      report.check(bad == 0, "generic t^n expansion on " + std::to_string(points) + "-point grid " + tag +
                                 (bad ? ", first failure at " + first_bad : ""));
      break;
    }
    case TnVariant::typeA_q:
    case TnVariant::typeB_q: {
      const bool type_b = variant == TnVariant::typeB_q;
      TPoly sum;
      TPoly falling(QPoly{1});
      for (int k = 0; k <= n; ++k) {
        if (k >= 1) {
          const QPoly root = type_b ? q_bracket(2 * k - 1) : q_bracket(k - 1);
          falling = falling * TPoly(std::vector<QPoly>{-root, QPoly{1}});
        }
        sum += falling * stirling(type_b ? Kind::S_B : Kind::S_A, n, k);
      }
      report.check(sum == TPoly::monomial(QPoly{1}, static_cast<std::size_t>(n)),
                   std::string(type_b ? "t^n = sum S_B[n,k] (t;q)_k^B " : "t^n = sum S[n,k] (t;q)_k ") + tag);
      break;
    }
  }
  return report;
}

Report verify_inverse_matrices(int N, int eh_bound) {
  Report report{"inverse"};
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < N; ++k) {
      QPoly a, b;
      for (int i = k; i <= n; ++i) {
        a += signed_first_kind(Type::A, QMode::polynomial, n, i) * stirling(Kind::S_A, i, k);
        b += signed_first_kind(Type::B, QMode::polynomial, n, i) * stirling(Kind::S_B, i, k);
      }
      const QPoly delta = (n == k) ? QPoly{1} : QPoly{};
      report.check(a == delta, "(s S)" + nk_tag(n, k) + " = delta");
      report.check(b == delta, "(s_B S_B)" + nk_tag(n, k) + " = delta");
    }
  }

  const std::vector<std::pair<std::string, SpecializedVars>> specializations{
      {"x_i=[2i-1]", SpecializedVars::odd_brackets(eh_bound)},
      {"x_i=[i-1]", SpecializedVars::shifted_brackets(eh_bound)},
  };
  for (const auto& [label, vars] : specializations) {
    for (int n = 0; n <= eh_bound; ++n) {
      for (int m = 0; m <= eh_bound; ++m) {
        for (int total = 0; total <= eh_bound; ++total) {
          QPoly lhs;
          for (int a = 0; a <= total; ++a) {
            QPoly term = elementary(vars, a, n) * homogeneous(vars, total - a, m);
            lhs += (a % 2 == 0) ? term : -term;
          }
          QPoly rhs;
          if (n >= m) {
            rhs = elementary(vars.slice(static_cast<std::size_t>(m) + 1, static_cast<std::size_t>(n)), total, n - m);
            if (total % 2 == 1) rhs = -rhs;
          } else {
            rhs = homogeneous(vars.slice(static_cast<std::size_t>(n) + 1, static_cast<std::size_t>(m)), total, m - n);
          }
          report.check(lhs == rhs, "e/h alternating sum " + label + " n=" + std::to_string(n) + " m=" + std::to_string(m) +
                                       " N=" + std::to_string(total));
        }
      }
    }
  }
  return report;
}

}  // namespace qstirling
