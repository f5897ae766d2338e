#include "qstirling/bigint.hpp"

namespace qstirling {

BigInt factorial(int n) {
  BigInt result = 1;
  for (int i = 2; i <= n; ++i) result *= i;
  return result;
}

BigInt double_factorial(int n) {
  BigInt result = 1;
  for (int i = n; i > 1; i -= 2) result *= i;
  return result;
}

BigInt binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace qstirling
