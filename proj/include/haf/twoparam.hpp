#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "haf/bigint.hpp"
#include "haf/matchings.hpp"
#include "haf/matrix.hpp"
#include "haf/ring.hpp"

namespace haf {

// Scalar-operation counter for the polynomial-time hafnian formulas. One
// tick per big-integer or ring multiplication; used by the bench command
// to check the cubic/quartic growth rates.
inline thread_local uint64_t tl_ring_ops = 0;

inline void reset_ring_ops() { tl_ring_ops = 0; }
inline uint64_t ring_ops() { return tl_ring_ops; }

namespace detail {

inline BigInt counted_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt result = 1;
  for (long i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
    tl_ring_ops += 2;
  }
  return result;
}

// Incremental power tables and double factorials so each k-step costs a
// constant number of ring multiplications.
template <typename Ring>
std::vector<Ring> counted_powers(const Ring& base, long max_exp) {
  std::vector<Ring> pow(max_exp + 1, Ring(1));
  for (long e = 1; e <= max_exp; ++e) {
    pow[e] = pow[e - 1] * base;
    ++tl_ring_ops;
  }
  return pow;
}

}  // namespace detail

// Hf(T_{2m}(a,b)) = sum_k (a-b)^{m-k} b^k (2k-1)!! mu_{m-k}(Gamma(T_{2m})),
// for any even-order template whose matching counts the caller can supply.
template <typename Ring>
Ring hafnian_two_param_general(const Template& t, const Ring& a, const Ring& b,
                               const std::function<BigInt(int)>& mu) {
  if (t.order() % 2 != 0) {
    throw std::invalid_argument("hafnian_two_param_general: order must be even");
  }
  long m = t.order() / 2;
  Ring diff = a - b;
  auto diff_pow = detail::counted_powers(diff, m);
  auto b_pow = detail::counted_powers(b, m);
  Ring total(0);
  BigInt dfact = 1;  // (2k-1)!!, updated incrementally
  for (long k = 0; k <= m; ++k) {
    if (k > 0) {
      dfact *= 2 * k - 1;
      ++tl_ring_ops;
    }
    BigInt scalar = dfact * mu(static_cast<int>(m - k));
    tl_ring_ops += 3;
    total += Ring(scalar) * diff_pow[m - k] * b_pow[k];
  }
  return total;
}

// Hf(C_{2m}(a,b)) in O(m^3) ring operations. The lower index skips k = 0
// for odd m; the inner sum is empty there anyway.
template <typename Ring>
Ring hafnian_c(long m, const Ring& a, const Ring& b) {
  if (m < 0) throw std::invalid_argument("hafnian_c: m must be nonnegative");
  Ring diff = a - b;
  auto diff_pow = detail::counted_powers(diff, m);
  auto b_pow = detail::counted_powers(b, m);
  Ring total(0);
  long p = m % 2;
  BigInt dfact = 1;
  for (long k = 1; k <= p; ++k) dfact *= 2 * k - 1;
  for (long k = p; k <= m; ++k) {
    if (k > p) {
      dfact *= 2 * k - 1;
      ++tl_ring_ops;
    }
    BigInt inner = 0;
    long lo = std::max(0L, ceil_div(m - 3 * k, 2));
    long hi = floor_div(m - k, 2);
    for (long i = lo; i <= hi; ++i) {
      inner += detail::counted_binomial(2 * k + i, m - k - i) *
               detail::counted_binomial(m - k - i, i);
      ++tl_ring_ops;
    }
    tl_ring_ops += 3;
    total += Ring(BigInt(dfact * inner)) * diff_pow[m - k] * b_pow[k];
  }
  return total;
}

// Hf(D_{2m}(a,b)) in O(m^4) ring operations; the matching counts come
// from the closed-form double sum inlined per k.
template <typename Ring>
Ring hafnian_d(long m, const Ring& a, const Ring& b) {
  if (m < 0) throw std::invalid_argument("hafnian_d: m must be nonnegative");
  Ring diff = a - b;
  auto diff_pow = detail::counted_powers(diff, m);
  auto b_pow = detail::counted_powers(b, m);
  Ring total(0);
  BigInt dfact = 1;
  for (long k = 0; k <= m; ++k) {
    if (k > 0) {
      dfact *= 2 * k - 1;
      ++tl_ring_ops;
    }
    BigInt mu = 0;
    for (long i = 0; i <= std::min(m - k, floor_div(m + k, 2)); ++i) {
      for (long q = std::max(0L, i - 2 * k); q <= std::min(i, m - k - i); ++q) {
        mu += detail::counted_binomial(m + k - i, m - k - q) *
              detail::counted_binomial(m - k - q, i) * detail::counted_binomial(i, q);
        tl_ring_ops += 2;
      }
    }
    tl_ring_ops += 3;
    total += Ring(BigInt(dfact * mu)) * diff_pow[m - k] * b_pow[k];
  }
  return total;
}

// [Hf(T_2(a,b)), ..., Hf(T_{2 m_max}(a,b))] for T in {C, D}.
std::vector<BigInt> sequence(TemplateKind kind, int m_max, const BigInt& a,
                             const BigInt& b);

}  // namespace haf
