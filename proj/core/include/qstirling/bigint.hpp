#pragma once

#include <gmpxx.h>

#include <string>

namespace qstirling {

using BigInt = mpz_class;
using BigRational = mpq_class;

inline std::string to_string(const BigInt& value) { return value.get_str(); }

// n! with 0! = 1; negative n is the empty product.
BigInt factorial(int n);

// n(n-2)(n-4)...; (-1)!! = 0!! = 1 and every negative argument yields 1.
BigInt double_factorial(int n);

// Zero outside 0 <= k <= n.
BigInt binomial(int n, int k);

}  // namespace qstirling
