#pragma once

#include <string>
#include <utility>
#include <vector>

#include "haf/bigint.hpp"
#include "haf/matrix.hpp"

namespace haf {

// Counts of k-edge matchings mu_k for orders 0..max_order. Row n holds
// k = 0..floor(n/2); larger k are structurally zero.
struct MatchingTable {
  int max_order = 0;
  std::vector<std::vector<BigInt>> rows;

  BigInt at(int n, int k) const {
    if (k < 0 || k > n / 2) return 0;
    return rows[n][k];
  }

  friend bool operator==(const MatchingTable&, const MatchingTable&) = default;
};

// Truncated bivariate power series in (x, t): coeff[n][k] is the
// coefficient of x^k t^n, exact up to t-degree max_degree.
struct SeriesTruncation {
  int max_degree = 0;
  std::vector<std::vector<BigInt>> coeff;

  BigInt at(int n, int k) const {
    if (n < 0 || n > max_degree || k < 0 || k >= static_cast<int>(coeff[n].size()))
      return 0;
    return coeff[n][k];
  }
};

// Number of k-edge matchings, by exhaustive include/exclude over the edge
// list. Works for any template; exponential, so keep the order small.
BigInt mu_bruteforce(const Template& t, int k);

// Closed form for mu_k of the distance-2 arc diagram (template C).
BigInt mu_c_closed(long n, long k);

// Closed form for mu_k of the distance-{1,2} arc diagram (template D).
BigInt mu_d_closed(long n, long k);

// Full tables by dynamic programming on the four-term recurrences.
MatchingTable mu_c_recurrence(int max_order);
MatchingTable mu_d_recurrence(int max_order);

// Generating-function route: expands 1/(1 - t(1 + x t^2 + x^2 t^3)) for C
// or 1/(1 - t(1 + x t + x t^2 + x^2 t^3)) for D as a truncated series; the
// coefficient of x^k t^n is mu_k for order n.
SeriesTruncation gf_series(TemplateKind kind, int max_degree);

// The two equivalent bound checks: ceil((3k-n)/2) <= floor(k/2) and
// k <= floor(n/2). Requires n != 2k when k is odd.
std::pair<bool, bool> prop3_equivalence(long n, long k);

// Table rendered with columns n and rows k; zero cells are left empty.
std::string table_csv(const MatchingTable& table);

}  // namespace haf
