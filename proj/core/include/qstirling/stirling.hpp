#pragma once

#include <mutex>
#include <string_view>
#include <vector>

#include "qstirling/bigint.hpp"
#include "qstirling/qpoly.hpp"
#include "qstirling/report.hpp"

namespace qstirling {

// Second kind (S) and signless first kind (c), in types A and B.
enum class Kind { S_A, c_A, S_B, c_B };

// numeric: the classical integers (q = 1); polynomial: the q-analogues.
enum class QMode { numeric, polynomial };

enum class Type { A, B };

enum class OrderedKind { S_A, S_A_bar, S_B };

std::string_view kind_name(Kind kind);

// Memoized triangle for one recursion family. Rows are filled on demand and
// never modified afterwards; all access goes through the internal mutex.
//
//   S_A : T(n,k) = T(n-1,k-1) + w_k T(n-1,k),        w_k = k   or [k]
//   c_A : T(n,k) = T(n-1,k-1) + w_{n-1} T(n-1,k),    w   = n-1 or [n-1]
//   S_B : T(n,k) = T(n-1,k-1) + (2k+1 | [2k+1]) T(n-1,k)
//   c_B : T(n,k) = T(n-1,k-1) + (2n-1 | [2n-1]) T(n-1,k)
class StirlingTable {
 public:
  StirlingTable(Kind kind, QMode mode) : kind_(kind), mode_(mode) {}

  Kind kind() const { return kind_; }
  QMode mode() const { return mode_; }

  // Entry (n, k); zero for k < 0 or k > n. Requires n >= 0.
  QPoly entry(int n, int k);

 private:
  QPoly weight(int n, int k) const;
  void grow_to(int n);

  Kind kind_;
  QMode mode_;
  std::mutex mutex_;
  std::vector<std::vector<QPoly>> rows_;
};

// Shared process-wide tables.
QPoly stirling(Kind kind, QMode mode, int n, int k);
inline QPoly stirling(Kind kind, int n, int k) { return stirling(kind, QMode::polynomial, n, k); }
BigInt stirling_number(Kind kind, int n, int k);

// S^o[n,k] = [k]! S[n,k], Sbar^o[n,k] = [k]! Sbar[n,k], S_B^o[n,k] = [2k]!! S_B[n,k].
QPoly ordered(OrderedKind kind, int n, int k);
BigInt ordered_number(OrderedKind kind, int n, int k);

// (-1)^{n-k} c[n,k] or (-1)^{n-k} c_B[n,k].
QPoly signed_first_kind(Type type, QMode mode, int n, int k);

// Sbar[n,k] = q^{C(k,2)} S[n,k].
QPoly barred(int n, int k);

// Recursion-level checks for n <= n_max: q = 1 collapse, row sums, the
// ordered and barred recursions, and c_B(n,0) = (2n-1)!!.
Report verify_recursions(int n_max);

}  // namespace qstirling
