#include "haf/matchings.hpp"

#include <sstream>
#include <stdexcept>

namespace haf {

namespace {

BigInt count_matchings(const std::vector<std::pair<int, int>>& edges, size_t from,
                       std::vector<char>& used, int remaining) {
  if (remaining == 0) return 1;
  if (edges.size() - from < static_cast<size_t>(remaining)) return 0;
  BigInt total = 0;
  for (size_t e = from; e < edges.size(); ++e) {
    auto [u, v] = edges[e];
    if (used[u] || used[v]) continue;
    used[u] = used[v] = 1;
    total += count_matchings(edges, e + 1, used, remaining - 1);
    used[u] = used[v] = 0;
  }
  return total;
}

}  // namespace

BigInt mu_bruteforce(const Template& t, int k) {
  if (k < 0) return 0;
  if (k == 0) return 1;
  if (k > t.order() / 2) return 0;
  auto edges = t.edges();
  std::vector<char> used(t.order(), 0);
  return count_matchings(edges, 0, used, k);
}

BigInt mu_c_closed(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("mu_c_closed: negative argument");
  if (k > floor_div(n, 2)) return 0;
  if (k % 2 == 1 && n == 2 * k) return 0;
  BigInt total = 0;
  long lo = std::max(0L, ceil_div(3 * k - n, 2));
  for (long i = lo; i <= floor_div(k, 2); ++i) {
    total += binomial(n - 2 * k + i, k - i) * binomial(k - i, i);
  }
  return total;
}

BigInt mu_d_closed(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("mu_d_closed: negative argument");
  if (k > floor_div(n, 2)) return 0;
  BigInt total = 0;
  for (long i = 0; i <= std::min(k, floor_div(n - k, 2)); ++i) {
    for (long p = std::max(0L, i + 2 * k - n); p <= std::min(i, k - i); ++p) {
      total += binomial(n - k - i, k - p) * binomial(k - p, i) * binomial(i, p);
    }
  }
  return total;
}

namespace {

template <typename Cell>
MatchingTable fill_table(int max_order, Cell cell) {
  MatchingTable table;
  table.max_order = max_order;
  table.rows.resize(max_order + 1);
  for (int n = 0; n <= max_order; ++n) {
    table.rows[n].resize(n / 2 + 1);
    for (int k = 0; k <= n / 2; ++k) table.rows[n][k] = cell(table, n, k);
  }
  return table;
}

}  // namespace

MatchingTable mu_c_recurrence(int max_order) {
  // v_{n,k} = v_{n-1,k} + v_{n-3,k-1} + v_{n-4,k-2}
  return fill_table(max_order, [](const MatchingTable& t, int n, int k) -> BigInt {
    if (k == 0) return 1;
    if (k == 1) return n >= 2 ? BigInt(n - 2) : BigInt(0);
    return t.at(n - 1, k) + t.at(n - 3, k - 1) + t.at(n - 4, k - 2);
  });
}

MatchingTable mu_d_recurrence(int max_order) {
  // w_{n,k} = w_{n-1,k} + w_{n-2,k-1} + w_{n-3,k-1} + w_{n-4,k-2}
  return fill_table(max_order, [](const MatchingTable& t, int n, int k) -> BigInt {
    if (k == 0) return 1;
    if (k == 1) return n >= 2 ? BigInt(2 * n - 3) : BigInt(0);
    return t.at(n - 1, k) + t.at(n - 2, k - 1) + t.at(n - 3, k - 1) + t.at(n - 4, k - 2);
  });
}

namespace {

// Truncated series in t whose coefficients are polynomials in x, stored
// as poly[t-degree][x-degree].
using TSeries = std::vector<std::vector<BigInt>>;

TSeries series_mul(const TSeries& lhs, const TSeries& rhs, int max_degree) {
  TSeries out(max_degree + 1);
  for (int tn = 0; tn <= max_degree; ++tn) out[tn] = {};
  for (int tl = 0; tl <= max_degree; ++tl) {
    for (int tr = 0; tl + tr <= max_degree; ++tr) {
      if (tl >= static_cast<int>(lhs.size()) || tr >= static_cast<int>(rhs.size()))
        continue;
      for (size_t xl = 0; xl < lhs[tl].size(); ++xl) {
        if (lhs[tl][xl] == 0) continue;
        for (size_t xr = 0; xr < rhs[tr].size(); ++xr) {
          if (rhs[tr][xr] == 0) continue;
          auto& row = out[tl + tr];
          if (row.size() <= xl + xr) row.resize(xl + xr + 1, BigInt(0));
          row[xl + xr] += lhs[tl][xl] * rhs[tr][xr];
        }
      }
    }
  }
  return out;
}

void series_add(TSeries& acc, const TSeries& inc) {
  for (size_t tn = 0; tn < inc.size() && tn < acc.size(); ++tn) {
    if (acc[tn].size() < inc[tn].size()) acc[tn].resize(inc[tn].size(), BigInt(0));
    for (size_t x = 0; x < inc[tn].size(); ++x) acc[tn][x] += inc[tn][x];
  }
}

}  // namespace

SeriesTruncation gf_series(TemplateKind kind, int max_degree) {
  // stencil s(x,t) with 1/(1 - t*s) = sum_m t^m s^m
  TSeries stencil(4);
  stencil[0] = {BigInt(1)};
  if (kind == TemplateKind::C) {
    stencil[2] = {BigInt(0), BigInt(1)};            // x t^2
    stencil[3] = {BigInt(0), BigInt(0), BigInt(1)}; // x^2 t^3
  } else if (kind == TemplateKind::D) {
    stencil[1] = {BigInt(0), BigInt(1)};            // x t
    stencil[2] = {BigInt(0), BigInt(1)};            // x t^2
    stencil[3] = {BigInt(0), BigInt(0), BigInt(1)}; // x^2 t^3
  } else {
    throw std::invalid_argument("gf_series: only C and D have generating functions");
  }

  TSeries acc(max_degree + 1);
  TSeries power(max_degree + 1);
  power[0] = {BigInt(1)};
  for (int m = 0; m <= max_degree; ++m) {
    // add t^m * power, truncated
    TSeries shifted(max_degree + 1);
    for (int tn = 0; tn + m <= max_degree; ++tn) shifted[tn + m] = power[tn];
    series_add(acc, shifted);
    if (m < max_degree) power = series_mul(power, stencil, max_degree);
  }

  SeriesTruncation out;
  out.max_degree = max_degree;
  out.coeff = std::move(acc);
  return out;
}

std::pair<bool, bool> prop3_equivalence(long n, long k) {
  if (n < 0 || k < 0) throw std::invalid_argument("prop3: negative argument");
  if (k % 2 == 1 && n == 2 * k) {
    throw std::invalid_argument("prop3: hypothesis requires n != 2k for odd k");
  }
  bool lhs = ceil_div(3 * k - n, 2) <= floor_div(k, 2);
  bool rhs = k <= floor_div(n, 2);
  return {lhs, rhs};
}

std::string table_csv(const MatchingTable& table) {
  std::ostringstream out;
  out << "k\\n";
  for (int n = 0; n <= table.max_order; ++n) out << "," << n;
  out << "\n";
  for (int k = 0; k <= table.max_order / 2; ++k) {
    out << k;
    for (int n = 0; n <= table.max_order; ++n) {
      BigInt v = table.at(n, k);
      out << ",";
      if (v != 0) out << v.get_str();
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace haf
