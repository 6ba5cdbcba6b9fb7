#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "haf/matrix.hpp"
#include "haf/ring.hpp"

namespace haf {

// One unordered partition of {0..n-1} into pairs; each pair (i, j) has
// i < j and pairs are sorted by first element.
using PairPartition = std::vector<std::pair<int, int>>;

// Visits every canonical pair partition of {0..n-1} exactly once, always
// pairing the smallest unmatched index first. n = 0 yields one empty
// partition. Throws on odd n.
void enumerate_pairings(int n, const std::function<void(const PairPartition&)>& visit);

std::vector<PairPartition> all_pairings(int n);

namespace detail {

template <typename Ring>
void hafnian_recurse(const SymmetricMatrix<Ring>& m, std::vector<char>& used,
                     int matched, const Ring& partial, Ring& total) {
  int n = m.order();
  if (matched == n) {
    total += partial;
    return;
  }
  int first = 0;
  while (used[first]) ++first;
  used[first] = 1;
  for (int j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    Ring entry = m.at(first, j);
    if (ring_is_zero(entry)) continue;  // whole branch contributes 0
    used[j] = 1;
    hafnian_recurse(m, used, matched + 2, Ring(partial * entry), total);
    used[j] = 0;
  }
  used[first] = 0;
}

}  // namespace detail

// Hafnian straight from the definition: sum over all pairings of the
// product of the paired entries. The ground-truth oracle.
template <typename Ring>
Ring hafnian_bruteforce(const SymmetricMatrix<Ring>& m) {
  if (m.order() % 2 != 0) {
    throw std::invalid_argument("hafnian: matrix order must be even");
  }
  Ring total(0);
  std::vector<char> used(m.order(), 0);
  detail::hafnian_recurse(m, used, 0, Ring(1), total);
  return total;
}

// Hf(A + B) via the submatrix expansion: sum over all even-size subsets
// alpha of Hf(A[alpha]) * Hf(B with alpha removed). Literal evaluation,
// exponential in n; capped at order 10.
template <typename Ring>
Ring hafnian_sum_expansion(const SymmetricMatrix<Ring>& a,
                           const SymmetricMatrix<Ring>& b) {
  int n = a.order();
  if (n != b.order()) throw std::invalid_argument("hafnian sum: order mismatch");
  if (n % 2 != 0) throw std::invalid_argument("hafnian sum: order must be even");
  if (n > 10) throw std::invalid_argument("hafnian sum: order capped at 10 (2^n subsets)");
  Ring total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) % 2 != 0) continue;
    std::set<int> alpha;
    for (int i = 0; i < n; ++i) {
      if (mask & (1u << i)) alpha.insert(i);
    }
    total += hafnian_bruteforce(submatrix_keep(a, alpha)) *
             hafnian_bruteforce(submatrix_drop(b, alpha));
  }
  return total;
}

// Hf(cM) = c^{n/2} Hf(M), without touching the entries of M again.
template <typename Ring>
Ring hafnian_scaled(const SymmetricMatrix<Ring>& m, const Ring& c) {
  if (m.order() % 2 != 0) {
    throw std::invalid_argument("hafnian: matrix order must be even");
  }
  return ring_pow(c, m.order() / 2) * hafnian_bruteforce(m);
}

}  // namespace haf
