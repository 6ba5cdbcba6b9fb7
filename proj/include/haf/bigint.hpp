#pragma once

#include <gmpxx.h>

#include <string>

namespace haf {

// Arbitrary-precision signed integer. Values up to ~10^60 show up in the
// factorial quotients for m around 40, so fixed-width types are out.
using BigInt = mpz_class;

// C(n, k); returns 0 when k < 0 or k > n.
BigInt binomial(long n, long k);

// (2k)!/(k! 2^k) = (2k-1)!!, the number of pair-partitions of a 2k-set.
BigInt pairing_count(long k);

BigInt factorial(long n);

// Floor/ceil division with mathematical semantics on negative operands.
long floor_div(long a, long b);
long ceil_div(long a, long b);

inline std::string to_string(const BigInt& v) { return v.get_str(); }

}  // namespace haf
