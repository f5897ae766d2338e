#pragma once

#include <functional>
#include <set>
#include <vector>

#include "qstirling/combinat.hpp"
#include "qstirling/qpoly.hpp"
#include "qstirling/report.hpp"
#include "qstirling/stirling.hpp"

namespace qstirling {

using Composition = std::vector<int>;
using IndexSet = std::set<int>;

// alpha_1 = 0, alpha_i = alpha_{i-1} + [i not in T]; T must lie in [2, n].
Composition alpha_sequence(const IndexSet& T, int n);
// beta_1 = [1 not in T], beta_i = beta_{i-1} + [i not in T] + [i-1 not in T];
// T must lie in [1, n].
Composition beta_sequence(const IndexSet& T, int n);

// Type A: eps_j = #{i in T : alpha_i(T) = j-1}, j = 1..n-#T.
// Type B: phi_j = #{i in T : beta_i(T) = 2j}, j = 0..n-#T.
Composition expansion(const IndexSet& T, int n, Type type);

// Visits every x^alpha theta_T with T in the allowed range and
// alpha <= alpha(T) (A) or alpha <= beta(T) (B). With classical set, only
// T = {} is visited.
void for_each_super_monomial(int n, Type type, const std::function<void(const Composition&, const IndexSet&)>& visit,
                             bool classical = false);

// sum q^{|alpha|} t^{#T} over the set above.
TPoly hilbert(int n, Type type, bool classical = false);

// Per-value inversion counts eta_s = #{blocks S_j : (s, S_j) is an
// inversion}, s = 1..n, and T = {t > 0 : t in S_i, t > min|S_i|}.
struct EtaT {
  Composition eta;
  IndexSet T;
  friend bool operator==(const EtaT&, const EtaT&) = default;
};
EtaT eta_and_T(const OrderedPartition& omega);

// Builds the ordered partition by inserting 1, ..., n according to (T, alpha);
// eta_and_T is its inverse. Throws std::invalid_argument unless
// (T, alpha) indexes a super Artin monomial.
OrderedPartition insertion_bijection(const IndexSet& T, const Composition& alpha, int n, Type type);

// Value-indexed inversion counts of a permutation of [n] in one-line
// notation: I_v = #{u < v : u appears to the right of v}.
Composition inversion_composition_perm(const std::vector<int>& pi);

// Hilbert series against the ordered Stirling rows, the classical [n]! and
// [2n]!! cases, and the expansion-composition product formula.
Report verify_hilbert(int n_max_a, int n_max_b);

// Insertion bijection round trips and exhausts all ordered partitions;
// |eta| = inv and #T = n - k for every ordered partition; the permutation
// code I(pi) is a bijection onto compositions below the staircase.
Report verify_bijection(int n_max_a, int n_max_b, int n_max_perm = 6);

}  // namespace qstirling
