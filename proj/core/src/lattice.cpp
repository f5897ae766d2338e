#include "qstirling/lattice.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

#include "qstirling/stirling.hpp"

namespace qstirling {

std::size_t LatticePoset::index_of(const SignedPartition& rho) const {
  const auto standard = rho.standardized();
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    if (elements_[i] == standard) return i;
  }
  throw std::out_of_range("partition not in lattice: " + to_text(rho));
}

bool LatticePoset::leq(std::size_t i, std::size_t j) const {
  const auto& outer = labels_.at(j);
  for (const auto& block : elements_.at(i).blocks()) {
    const int label = outer[static_cast<std::size_t>(block.front() + n_)];
    for (int x : block) {
      if (outer[static_cast<std::size_t>(x + n_)] != label) return false;
    }
  }
  return true;
}

LatticePoset build_lattice(int n) {
  if (n < 0 || n > 5) throw std::invalid_argument("build_lattice: n must be in [0, 5]");
  LatticePoset lat;
  lat.n_ = n;
  for (const auto& rho : enumerate_signed_partitions(n)) lat.elements_.push_back(rho.standardized());
  // Sort by rank so that mu can be folded in one pass.
  std::stable_sort(lat.elements_.begin(), lat.elements_.end(),
                   [](const SignedPartition& a, const SignedPartition& b) { return a.k() > b.k(); });
  for (const auto& rho : lat.elements_) {
    std::vector<int> label(static_cast<std::size_t>(2 * n + 1), 0);
    const auto blocks = rho.blocks();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (int x : blocks[b]) label[static_cast<std::size_t>(x + n)] = static_cast<int>(b);
    }
    lat.labels_.push_back(std::move(label));
  }
  lat.bottom_ = 0;
  lat.top_ = lat.elements_.size() - 1;
  return lat;
}

std::vector<BigInt> mobius(const LatticePoset& lat) {
  std::vector<BigInt> mu(lat.size(), 0);
  for (std::size_t y = 0; y < lat.size(); ++y) {
    if (y == lat.bottom()) {
      mu[y] = 1;
      continue;
    }
    BigInt below = 0;
    for (std::size_t x = 0; x < y; ++x) {
      if (lat.leq(x, y)) below += mu[x];
    }
    mu[y] = -below;
  }
  return mu;
}

BigInt whitney(const LatticePoset& lat, const std::vector<BigInt>& mu, WhitneyKind kind, int k) {
  BigInt total = 0;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    if (lat.rank(i) != k) continue;
    total += kind == WhitneyKind::second ? BigInt(1) : mu[i];
  }
  return total;
}

BigInt count_B_rho_formula(const SignedPartition& rho) {
  BigInt value = double_factorial(static_cast<int>(rho.zero_block.size()) - 2);
  for (const auto& pair : rho.pairs) value *= factorial(static_cast<int>(pair.second.size()) - 1);
  return value;
}

SignedPartition underlying_partition(const SignedPermutation& pi) {
  SignedPartition rho{pi.n, {0}, {}};
  for (const auto& c : pi.cycles) {
    const bool unpaired = std::find(c.begin(), c.end(), -c.front()) != c.end();
    if (unpaired) {
      rho.zero_block.insert(rho.zero_block.end(), c.begin(), c.end());
    } else if (std::none_of(rho.pairs.begin(), rho.pairs.end(), [&](const auto& p) {
                 return std::find(p.first.begin(), p.first.end(), c.front()) != p.first.end() ||
                        std::find(p.second.begin(), p.second.end(), c.front()) != p.second.end();
               })) {
      Block negative;
      for (int x : c) negative.push_back(-x);
      rho.pairs.emplace_back(c, negative);
    }
  }
  return rho.standardized();
}

BigInt count_B_rho_brute(const SignedPartition& rho) {
  const auto target = rho.standardized();
  BigInt count = 0;
  for (const auto& pi : enumerate_signed_permutations(rho.n)) {
    if (underlying_partition(pi) == target) ++count;
  }
  return count;
}

Report verify_lattice(int n_max) {
  Report report{"lattice"};
  for (int n = 0; n <= n_max; ++n) {
    const std::string tag = " (n=" + std::to_string(n) + ")";
    const auto lat = build_lattice(n);
    const auto mu = mobius(lat);

    BigInt expected_size = 0;
    for (int k = 0; k <= n; ++k) expected_size += stirling_number(Kind::S_B, n, k);
    report.check(BigInt(static_cast<unsigned long>(lat.size())) == expected_size, "element count" + tag);

    for (int r = 0; r <= n; ++r) {
      const std::string at = " rank " + std::to_string(r) + tag;
      report.check(whitney(lat, mu, WhitneyKind::second, r) == stirling_number(Kind::S_B, n, n - r), "W = S_B(n,n-k)" + at);
      report.check(whitney(lat, mu, WhitneyKind::first, r) == signed_first_kind(Type::B, QMode::numeric, n, n - r).coeff(0),
                   "w = s_B(n,n-k)" + at);
    }
    const BigInt top_expected = (n % 2 == 0 ? 1 : -1) * double_factorial(2 * n - 1);
    report.check(mu[lat.top()] == top_expected, "mu(top) = (-1)^n (2n-1)!!" + tag);
    for (std::size_t i = 0; i < lat.size(); ++i) {
      report.check(lat.leq(lat.bottom(), i) && lat.leq(i, lat.top()), "bottom <= x <= top" + tag);
    }

    // Brute force: group all signed permutations by underlying partition.
    std::map<std::string, BigInt> brute;
    for (const auto& pi : enumerate_signed_permutations(n)) ++brute[to_text(underlying_partition(pi))];
    for (std::size_t i = 0; i < lat.size(); ++i) {
      const auto& rho = lat.element(i);
      const std::string at = " at " + to_text(rho) + tag;
      const BigInt formula = count_B_rho_formula(rho);
      const BigInt signed_formula = (lat.rank(i) % 2 == 0 ? 1 : -1) * formula;
      report.check(mu[i] == signed_formula, "mu(rho) = (-1)^{n-k} (#S0-2)!! prod (#S2i-1)!" + at);
      const auto it = brute.find(to_text(rho));
      report.check(it != brute.end() && it->second == formula, "#B(rho) by enumeration" + at);
    }
  }
  for (int n = 1; n <= 10; ++n) {
    BigInt sum = 0;
    for (int k = 0; k <= n; ++k) sum += signed_first_kind(Type::B, QMode::numeric, n, k).coeff(0);
    report.check(sum == 0, "sum_k s_B(n,k) = 0 (n=" + std::to_string(n) + ")");
  }
  return report;
}

}  // namespace qstirling
