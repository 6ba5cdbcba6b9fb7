#include "haf/bigint.hpp"

#include <stdexcept>

namespace haf {

BigInt binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial: n must be nonnegative");
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

BigInt pairing_count(long k) {
  if (k < 0) throw std::invalid_argument("pairing_count: k must be nonnegative");
  BigInt result = 1;
  for (long i = 3; i <= 2 * k - 1; i += 2) result *= i;
  return result;
}

BigInt factorial(long n) {
  if (n < 0) throw std::invalid_argument("factorial: n must be nonnegative");
  BigInt result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

long floor_div(long a, long b) {
  long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

long ceil_div(long a, long b) { return -floor_div(-a, b); }

}  // namespace haf
