#pragma once

// Independent reference computations for the unit tests. Nothing here calls
// into the library: polynomials are plain coefficient vectors and the
// combinatorial objects are generated from scratch.

#include <gmpxx.h>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "qstirling/qpoly.hpp"

namespace oracle {

using Poly = std::vector<mpz_class>;

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly add(Poly a, const Poly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  trim(a);
  return a;
}

inline Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  trim(c);
  return c;
}

inline Poly bracket(int n) { return Poly(static_cast<std::size_t>(std::max(n, 0)), 1); }

inline Poly monomial(std::size_t d) {
  Poly p(d + 1);
  p[d] = 1;
  return p;
}

inline qstirling::QPoly to_qpoly(const Poly& p) { return qstirling::QPoly(p); }

// Coefficient of t^k in prod_i (t + w_i); the signless first kind numbers in
// both types are rows of such products.
inline Poly rising_product_coeff(const std::vector<Poly>& weights, int k) {
  std::vector<Poly> row{Poly{1}};  // row[j] = coefficient of t^j
  for (const auto& w : weights) {
    std::vector<Poly> next(row.size() + 1);
    for (std::size_t j = 0; j < row.size(); ++j) {
      next[j] = add(next[j], mul(row[j], w));
      next[j + 1] = add(next[j + 1], row[j]);
    }
    row = std::move(next);
  }
  return k >= 0 && static_cast<std::size_t>(k) < row.size() ? row[static_cast<std::size_t>(k)] : Poly{};
}

// c[n,k]: t(t+[1])...(t+[n-1]).
inline Poly c_A(int n, int k) {
  std::vector<Poly> w;
  for (int i = 0; i < n; ++i) w.push_back(bracket(i));
  return rising_product_coeff(w, k);
}

// c_B[n,k]: (t+[1])(t+[3])...(t+[2n-1]).
inline Poly c_B(int n, int k) {
  std::vector<Poly> w;
  for (int i = 1; i <= n; ++i) w.push_back(bracket(2 * i - 1));
  return rising_product_coeff(w, k);
}

// [x^n] of x^shift / prod_i (1 - w_i x) as complete homogeneous sums.
inline Poly h_of(const std::vector<Poly>& w, int degree) {
  // h_d over the first m variables, built column by column.
  std::vector<Poly> h(static_cast<std::size_t>(degree) + 1);
  h[0] = Poly{1};
  for (const auto& x : w) {
    for (int d = 1; d <= degree; ++d) h[static_cast<std::size_t>(d)] = add(h[static_cast<std::size_t>(d)], mul(x, h[static_cast<std::size_t>(d - 1)]));
  }
  return degree >= 0 ? h[static_cast<std::size_t>(degree)] : Poly{};
}

// S[n,k] = h_{n-k}([1], ..., [k]).
inline Poly S_A(int n, int k) {
  if (k > n || k < 0) return {};
  if (k == 0) return n == 0 ? Poly{1} : Poly{};
  std::vector<Poly> w;
  for (int i = 1; i <= k; ++i) w.push_back(bracket(i));
  return h_of(w, n - k);
}

// S_B[n,k] = h_{n-k}([1], [3], ..., [2k+1]).
inline Poly S_B(int n, int k) {
  if (k > n || k < 0) return {};
  std::vector<Poly> w;
  for (int i = 0; i <= k; ++i) w.push_back(bracket(2 * i + 1));
  return h_of(w, n - k);
}

inline mpz_class at_one(const Poly& p) { return std::accumulate(p.begin(), p.end(), mpz_class(0)); }

// All set partitions of `items`, each as a list of blocks (restricted growth).
inline void set_partitions(const std::vector<int>& items, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<std::vector<int>> blocks;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == items.size()) {
      visit(blocks);
      return;
    }
    for (std::size_t j = 0; j < blocks.size(); ++j) {
      blocks[j].push_back(items[i]);
      rec(i + 1);
      blocks[j].pop_back();
    }
    blocks.push_back({items[i]});
    rec(i + 1);
    blocks.pop_back();
  };
  rec(0);
}

// Set partitions of {-n..n} closed under negation whose only self-negative
// block contains 0, by number of block pairs.
inline std::vector<mpz_class> signed_partition_counts(int n) {
  std::vector<int> items;
  for (int i = -n; i <= n; ++i) items.push_back(i);
  std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1);
  set_partitions(items, [&](const std::vector<std::vector<int>>& blocks) {
    std::set<std::set<int>> all;
    for (const auto& b : blocks) all.insert(std::set<int>(b.begin(), b.end()));
    for (const auto& b : all) {
      std::set<int> neg;
      for (int x : b) neg.insert(-x);
      if (!all.count(neg)) return;
      // Only the block holding 0 may equal its own negative.
      if (neg == b && !b.count(0)) return;
    }
    counts[(all.size() - 1) / 2] += 1;
  });
  return counts;
}

// Signed permutations of {+-1..+-n} counted by pairs of cycles c != -c.
inline std::vector<mpz_class> signed_permutation_counts(int n) {
  std::vector<mpz_class> counts(static_cast<std::size_t>(n) + 1);
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (int signs = 0; signs < (1 << n); ++signs) {
      auto image = [&](int x) {
        const int v = perm[static_cast<std::size_t>(std::abs(x) - 1)] * ((signs >> (std::abs(x) - 1)) & 1 ? -1 : 1);
        return x > 0 ? v : -v;
      };
      std::set<int> seen;
      int paired = 0;
      for (int s = -n; s <= n; ++s) {
        if (s == 0 || seen.count(s)) continue;
        std::set<int> cyc;
        for (int x = s; !cyc.count(x); x = image(x)) cyc.insert(x);
        seen.insert(cyc.begin(), cyc.end());
        if (!cyc.count(-s)) ++paired;
      }
      counts[static_cast<std::size_t>(paired / 2)] += 1;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return counts;
}

}  // namespace oracle
