#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/qpoly.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

using Block = std::vector<int>;

// Partition of <n> = {-n..n}: a zero block closed under negation and k pairs
// (S_{2i-1}, S_{2i}) with S_{2i} = -S_{2i-1}. Standard form means that
// min|S_{2i}| lies in S_{2i} itself and the pair minima strictly increase.
struct SignedPartition {
  int n = 0;
  Block zero_block{0};
  std::vector<std::pair<Block, Block>> pairs;

  int k() const { return static_cast<int>(pairs.size()); }
  // S_0, S_1, ..., S_{2k} in order.
  std::vector<Block> blocks() const;

  bool is_standard() const;
  // Orients every pair, sorts pairs by minimum and blocks by value.
  SignedPartition standardized() const;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

// Permutation of <n>' = {+-1..+-n} with pi(-i) = -pi(i), kept as cycles.
struct SignedPermutation {
  int n = 0;
  std::vector<std::vector<int>> cycles;

  // Number of pairs of cycles c, -c with c != -c.
  int k() const;
  bool is_standard() const;
  SignedPermutation standardized() const;
  // Concatenation of the cycles.
  std::vector<int> word() const;
  // Image of i (i != 0).
  int apply(int i) const;

  friend bool operator==(const SignedPermutation&, const SignedPermutation&) = default;
};

enum class Flavor { typeA, typeB };

// typeA: ordered blocks covering [n]. typeB: blocks[0] is the zero block and
// blocks (2i-1, 2i) are negatives of each other, in any orientation.
struct OrderedPartition {
  Flavor flavor = Flavor::typeA;
  int n = 0;
  std::vector<Block> blocks;

  // Number of blocks (A) or of block pairs (B).
  int k() const;
  bool is_valid() const;

  friend bool operator==(const OrderedPartition&, const OrderedPartition&) = default;
};

enum class Family { signed_partition, signed_permutation, ordered_A, ordered_B };
enum class Stat { inv, maj };

std::string_view family_name(Family family);

// All objects on n elements (every k), built by inserting +-n into the
// objects on n-1 elements in order. The k-overloads filter by k.
std::vector<SignedPartition> enumerate_signed_partitions(int n);
std::vector<SignedPartition> enumerate_signed_partitions(int n, int k);
std::vector<SignedPermutation> enumerate_signed_permutations(int n);
std::vector<SignedPermutation> enumerate_signed_permutations(int n, int k);
std::vector<OrderedPartition> enumerate_ordered(Flavor flavor, int n);
std::vector<OrderedPartition> enumerate_ordered(Flavor flavor, int n, int k);

// Throw std::invalid_argument for non-standard signed partitions/permutations.
int inv(const SignedPartition& rho);
int maj(const SignedPartition& rho);
int inv(const SignedPermutation& pi);
int inv(const OrderedPartition& omega);

// Sum of q^stat over the family; maj is only defined for signed partitions.
QPoly statistic_gf(Family family, int n, int k, Stat stat);
BigInt family_count(Family family, int n, int k);

// Text forms: "0 -1 1 | -2 5 -7 / 2 -5 7 | -4 / 4" for signed partitions and
// type B ordered partitions, "2 4 6 / 8 / 3 5" for type A ordered partitions,
// "(3,1,-3,-1)(5,-7,-2)" for signed permutations. When n is omitted (-1) it
// is taken to be the largest absolute value present.
std::string to_text(const SignedPartition& rho);
std::string to_text(const SignedPermutation& pi);
std::string to_text(const OrderedPartition& omega);
SignedPartition parse_signed_partition(std::string_view text, int n = -1);
SignedPermutation parse_signed_permutation(std::string_view text, int n = -1);
OrderedPartition parse_ordered(Flavor flavor, std::string_view text, int n = -1);

// Odd maps f: <n> -> <p>. histogram[k] counts the maps whose kernel has k
// block pairs.
struct TypeBFunctionCount {
  BigInt total;
  std::vector<BigInt> histogram;
};
TypeBFunctionCount count_type_b_functions(int n, int p);

// Statistic generating functions against the Stirling tables: inv and maj
// over signed partitions and inv over signed permutations for n <= n_signed,
// inv over ordered partitions for n <= n_ordered_a (A) and n_ordered_b (B).
// Also checks that standardization is idempotent and statistic-preserving.
Report verify_statistics(int n_signed, int n_ordered_a, int n_ordered_b);

// Brute-force type B function counts against (2p+1)^n and
// S_B(n,k) (2p+1-1)(2p+1-3)...(2p+1-(2k-1)).
Report verify_type_b_functions(int n_max, int p_max);

}  // namespace qstirling
