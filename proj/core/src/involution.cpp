#include "qstirling/involution.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "qstirling/stirling.hpp"

namespace qstirling {

namespace {

int block_of(const OrderedPartition& omega, int x) {
  for (std::size_t i = 0; i < omega.blocks.size(); ++i) {
    if (std::find(omega.blocks[i].begin(), omega.blocks[i].end(), x) != omega.blocks[i].end()) return static_cast<int>(i);
  }
  return -1;
}

int max_abs(const Block& b) {
  int m = 0;
  for (int x : b) m = std::max(m, std::abs(x));
  return m;
}

void erase_value(Block& b, int x) { b.erase(std::find(b.begin(), b.end(), x)); }

void add_value(Block& b, int x) { b.insert(std::lower_bound(b.begin(), b.end(), x), x); }

Block single(int x) { return Block{x}; }

bool in_range(const OrderedPartition& omega, int M) { return M >= 1 && M <= omega.n; }

}  // namespace

bool splittable(const OrderedPartition& omega, int M) {
  if (!in_range(omega, M)) return false;
  const int i = block_of(omega, M);
  if (i < 0) return false;
  const Block& b = omega.blocks[static_cast<std::size_t>(i)];
  if (b.size() < 2) return false;
  if (omega.flavor == Flavor::typeA) return *std::max_element(b.begin(), b.end()) == M;
  return max_abs(b) == M;
}

bool mergeable(const OrderedPartition& omega, int M) {
  if (!in_range(omega, M)) return false;
  const int i = block_of(omega, M);
  if (i < 0) return false;
  const auto idx = static_cast<std::size_t>(i);
  if (omega.blocks[idx] != single(M)) return false;
  if (omega.flavor == Flavor::typeA) {
    if (idx + 1 >= omega.blocks.size()) return false;
    const Block& next = omega.blocks[idx + 1];
    return M > *std::max_element(next.begin(), next.end());
  }
  if (i == 0) return false;
  if (i % 2 == 0) {
    // {-M}/{M}: joins the following pair.
    if (idx + 1 >= omega.blocks.size()) return false;
    return M > max_abs(omega.blocks[idx + 1]);
  }
  // {M}/{-M}: joins the preceding pair or the zero block.
  return M > max_abs(omega.blocks[idx - 1]);
}

OrderedPartition split(const OrderedPartition& omega, int M) {
  if (!splittable(omega, M)) {
    throw std::invalid_argument("not splittable at " + std::to_string(M) + ": " + to_text(omega));
  }
  OrderedPartition out = omega;
  auto& blocks = out.blocks;
  const auto i = static_cast<std::size_t>(block_of(omega, M));
  if (omega.flavor == Flavor::typeA) {
    erase_value(blocks[i], M);
    blocks.insert(blocks.begin() + static_cast<long>(i), single(M));
    return out;
  }
  if (i == 0) {
    erase_value(blocks[0], M);
    erase_value(blocks[0], -M);
    blocks.insert(blocks.begin() + 1, {single(M), single(-M)});
  } else if (i % 2 == 1) {
    erase_value(blocks[i], M);
    erase_value(blocks[i + 1], -M);
    blocks.insert(blocks.begin() + static_cast<long>(i), {single(-M), single(M)});
  } else {
    erase_value(blocks[i], M);
    erase_value(blocks[i - 1], -M);
    blocks.insert(blocks.begin() + static_cast<long>(i + 1), {single(M), single(-M)});
  }
  return out;
}

OrderedPartition merge(const OrderedPartition& omega, int M) {
  if (!mergeable(omega, M)) {
    throw std::invalid_argument("not mergeable at " + std::to_string(M) + ": " + to_text(omega));
  }
  OrderedPartition out = omega;
  auto& blocks = out.blocks;
  const auto i = static_cast<std::size_t>(block_of(omega, M));
  if (omega.flavor == Flavor::typeA) {
    for (int x : blocks[i + 1]) add_value(blocks[i], x);
    blocks.erase(blocks.begin() + static_cast<long>(i + 1));
    return out;
  }
  if (i % 2 == 0) {
    // pair occupies (i-1, i); the following pair moves down to (i-1, i).
    blocks.erase(blocks.begin() + static_cast<long>(i - 1), blocks.begin() + static_cast<long>(i + 1));
    add_value(blocks[i - 1], M);
    add_value(blocks[i], -M);
  } else {
    // pair occupies (i, i+1); the preceding block is i-1.
    blocks.erase(blocks.begin() + static_cast<long>(i), blocks.begin() + static_cast<long>(i + 2));
    add_value(blocks[i - 1], M);
    add_value(blocks[i - 1 == 0 ? 0 : i - 2], -M);
  }
  return out;
}

InvolutionTrace phi(const OrderedPartition& omega) {
  for (int M = omega.n; M >= 1; --M) {
    const bool s = splittable(omega, M);
    const bool m = mergeable(omega, M);
    if (s && m) throw std::logic_error("both splittable and mergeable at " + std::to_string(M));
    if (s) return {omega, Action::split, M, split(omega, M)};
    if (m) return {omega, Action::merge, M, merge(omega, M)};
  }
  return {omega, Action::fixed, 0, omega};
}

namespace {

OrderedPartition expected_fixed_point(Flavor flavor, int n) {
  OrderedPartition omega{flavor, n, {}};
  if (flavor == Flavor::typeA) {
    for (int i = 1; i <= n; ++i) omega.blocks.push_back(single(i));
  } else {
    omega.blocks.push_back(single(0));
    for (int i = 1; i <= n; ++i) {
      omega.blocks.push_back(single(-i));
      omega.blocks.push_back(single(i));
    }
  }
  return omega;
}

}  // namespace

Report verify_involution(Flavor flavor, int n) {
  Report report{flavor == Flavor::typeA ? "involution A" : "involution B"};
  const std::string tag = " (n=" + std::to_string(n) + ")";
  std::size_t fixed_points = 0;
  std::vector<BigInt> signed_sum;
  auto accumulate = [&](int degree, int sign) {
    if (signed_sum.size() <= static_cast<std::size_t>(degree)) signed_sum.resize(static_cast<std::size_t>(degree) + 1, 0);
    signed_sum[static_cast<std::size_t>(degree)] += sign;
  };

  for (const auto& omega : enumerate_ordered(flavor, n)) {
    const int k = omega.k();
    const int weight = (n - k) + inv(omega);
    accumulate(weight, (n - k) % 2 == 0 ? 1 : -1);

    const auto trace = phi(omega);
    if (trace.action == Action::fixed) {
      ++fixed_points;
      report.check(omega == expected_fixed_point(flavor, n), "unexpected fixed point " + to_text(omega) + tag);
      continue;
    }
    const auto back = phi(trace.output);
    const std::string at = to_text(omega) + tag;
    report.check(back.output == omega, "phi^2 != id at " + at);
    report.check(back.M == trace.M && back.action != trace.action && back.action != Action::fixed,
                 "phi(phi) acts at a different M or the same way at " + at);
    const int k2 = trace.output.k();
    const int expected_k = trace.action == Action::split ? k + 1 : k - 1;
    report.check(k2 == expected_k, "block count change at " + at);
    report.check((n - k2) + inv(trace.output) == weight, "(n-k)+inv not preserved at " + at);
    report.check(inv(trace.output) - inv(omega) == (trace.action == Action::split ? 1 : -1), "inv change != +-1 at " + at);
    report.check((k2 - k) % 2 != 0, "sign not reversed at " + at);
  }
  report.check(fixed_points == 1, "expected exactly one fixed point, found " + std::to_string(fixed_points) + tag);
  report.check(QPoly(signed_sum) == QPoly{1}, "sum (-1)^{n-k} q^{n-k+inv} over all objects = " + to_text(QPoly(signed_sum)) + tag);
  return report;
}

AlternatingSum alternating_sum(Flavor flavor, int n, int m) {
  if (n < 0) throw std::invalid_argument("alternating_sum: n must be nonnegative");
  if (m < 1) throw std::invalid_argument("alternating_sum: m must be at least 1");
  QPoly sum;
  for (int k = 0; k <= n; ++k) {
    QPoly term = ordered(flavor == Flavor::typeA ? OrderedKind::S_A : OrderedKind::S_B, n, k)
                     .shifted(static_cast<std::size_t>(m) * static_cast<std::size_t>(n - k));
    if ((n - k) % 2 == 0) sum += term;
    else sum -= term;
  }
  QPoly residue = m == 1 ? sum : reduce_mod_qm_minus_q(sum, m);
  return {std::move(sum), std::move(residue)};
}

QPoly euler_characteristic(Flavor flavor, int n, int m) { return alternating_sum(flavor, n, m).sum - QPoly{1}; }

Report verify_divisibility(int n_max, int m_max) {
  Report report{"divisibility"};
  for (Flavor flavor : {Flavor::typeA, Flavor::typeB}) {
    const char* type = flavor == Flavor::typeA ? "A" : "B";
    for (int n = 0; n <= n_max; ++n) {
      const std::string tag = std::string(" type ") + type + " n=" + std::to_string(n);
      report.check(alternating_sum(flavor, n, 1).sum == QPoly{1}, "sum (-q)^{n-k} S^o[n,k] = 1" + tag);
      for (int m = 2; m <= m_max; ++m) {
        report.check(alternating_sum(flavor, n, m).residue == QPoly{1},
                     "sum (-1)^{n-k} q^{m(n-k)} S^o[n,k] = 1 mod q^m - q" + tag + " m=" + std::to_string(m));
      }
    }
  }
  return report;
}

bool has_euler_pattern(const QPoly& p, std::string* why) {
  auto fail = [&](const std::string& reason) {
    if (why) *why = reason;
    return false;
  };
  const auto& c = p.coeffs();
  if (c.empty()) return true;
  std::size_t lo = 0;
  while (c[lo] == 0) ++lo;
  const std::size_t hi = c.size() - 1;
  for (std::size_t i = lo, j = hi; i < j; ++i, --j) {
    if (abs(c[i]) != abs(c[j])) return fail("not palindromic ignoring signs at degrees " + std::to_string(i) + "," + std::to_string(j));
  }
  std::vector<int> signs;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (c[i] != 0) signs.push_back(sgn(c[i]));
  }
  const auto positive = static_cast<std::size_t>(std::count(signs.begin(), signs.end(), 1));
  if (positive * 2 != signs.size()) return fail("positive and negative coefficient counts differ");
  for (std::size_t i = 0; i < signs.size(); ++i) {
    if ((i < positive) != (signs[i] > 0)) return fail("lower-degree half is not exactly the positive coefficients");
  }
  return true;
}

}  // namespace qstirling
