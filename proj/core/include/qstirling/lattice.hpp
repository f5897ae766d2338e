#pragma once

#include <cstddef>
#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/combinat.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

// Signed partitions of <n> ordered by refinement. An element with k block
// pairs has rank n - k, so the all-singletons partition is the bottom and
// the single zero block is the top.
class LatticePoset {
 public:
  int n() const { return n_; }
  std::size_t size() const { return elements_.size(); }
  const SignedPartition& element(std::size_t i) const { return elements_.at(i); }
  int rank(std::size_t i) const { return n_ - elements_.at(i).k(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t index_of(const SignedPartition& rho) const;

  // Every block of element i is contained in a block of element j.
  bool leq(std::size_t i, std::size_t j) const;

  friend LatticePoset build_lattice(int n);

 private:
  int n_ = 0;
  std::vector<SignedPartition> elements_;
  // labels_[i][x + n]: which block of element i holds x.
  std::vector<std::vector<int>> labels_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

// Throws std::invalid_argument outside 0 <= n <= 5.
LatticePoset build_lattice(int n);

// mu(x) = mu(bottom, x) from sum_{y <= x} mu(y) = delta_{bottom, x}.
std::vector<BigInt> mobius(const LatticePoset& lat);

enum class WhitneyKind { first, second };

// second: number of rank-k elements; first: sum of mu over rank k.
BigInt whitney(const LatticePoset& lat, const std::vector<BigInt>& mu, WhitneyKind kind, int k);

// (#S_0 - 2)!! prod_i (#S_{2i} - 1)!.
BigInt count_B_rho_formula(const SignedPartition& rho);

// Paired cycles become block pairs; the elements of unpaired cycles join 0
// in the zero block. Result is in standard form.
SignedPartition underlying_partition(const SignedPermutation& pi);

// Number of signed permutations of <n>' whose underlying partition is rho.
BigInt count_B_rho_brute(const SignedPartition& rho);

// Ranks, Whitney numbers, mu(top), the product formula against mu and the
// brute-force count, and sum_k s_B(n,k) = 0, for all n <= n_max.
Report verify_lattice(int n_max);

}  // namespace qstirling
