#pragma once

#include <optional>
#include <string>

#include "qstirling/combinat.hpp"
#include "qstirling/qpoly.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

// Type A: splittable at M when M = max S_i and #S_i >= 2; split puts {M}
// immediately before S_i - M. Mergeable at M when S_i = {M} and
// M > max S_{i+1}; merge replaces S_i, S_{i+1} by their union.
//
// Type B: splittable at M > 0 when M is the largest absolute value in its
// block and the block has at least two elements. Split removes +-M and
// inserts {-M}/{M} just before the pair when M sits in an odd-indexed block,
// or {M}/{-M} just after it when M sits in an even-indexed block (S_0
// included). Merge undoes these: {-M}/{M} followed by a pair with
// M > max|S_{2i+1}| joins that pair; {M}/{-M} with M > max|S_{2i-2}| joins
// the preceding pair (or the zero block).
bool splittable(const OrderedPartition& omega, int M);
bool mergeable(const OrderedPartition& omega, int M);

// Throw std::invalid_argument when the precondition fails.
OrderedPartition split(const OrderedPartition& omega, int M);
OrderedPartition merge(const OrderedPartition& omega, int M);

enum class Action { split, merge, fixed };

struct InvolutionTrace {
  OrderedPartition input;
  Action action = Action::fixed;
  int M = 0;
  OrderedPartition output;
};

// Acts at the largest M that is splittable or mergeable.
InvolutionTrace phi(const OrderedPartition& omega);

// Full orbit check over every ordered partition on n elements: phi is an
// involution, (1/2/.../n) resp. (0 | -1/1 | ... | -n/n) is the only fixed
// point, and every other orbit flips (-1)^{n-k} while preserving
// (n-k) + inv. Also sums (-1)^{n-k} q^{n-k+inv} directly over the objects.
Report verify_involution(Flavor flavor, int n);

struct AlternatingSum {
  QPoly sum;      // sum_k (-1)^{n-k} q^{m(n-k)} S^o[n,k] (or S_B^o)
  QPoly residue;  // sum mod q^m - q; the sum itself when m = 1
};
AlternatingSum alternating_sum(Flavor flavor, int n, int m);

// sum - 1.
QPoly euler_characteristic(Flavor flavor, int n, int m);

// Exact sum equals 1 for m = 1 and residue equals 1 for 2 <= m <= m_max,
// for all n <= n_max.
Report verify_divisibility(int n_max, int m_max);

// Sign/palindromy pattern of a polynomial: the absolute coefficients between
// the lowest and highest nonzero degree are palindromic, positive and
// negative coefficients are equally many, and the lower half of the nonzero
// coefficients is positive (vacuous for 0). `why` receives the first violated condition.
bool has_euler_pattern(const QPoly& p, std::string* why = nullptr);

}  // namespace qstirling
