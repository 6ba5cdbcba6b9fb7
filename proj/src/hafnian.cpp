#include "haf/hafnian.hpp"

namespace haf {

namespace {

void pairings_recurse(int n, std::vector<char>& used, PairPartition& current,
                      const std::function<void(const PairPartition&)>& visit) {
  if (static_cast<int>(current.size()) * 2 == n) {
    visit(current);
    return;
  }
  int first = 0;
  while (used[first]) ++first;
  used[first] = 1;
  for (int j = first + 1; j < n; ++j) {
    if (used[j]) continue;
    used[j] = 1;
    current.emplace_back(first, j);
    pairings_recurse(n, used, current, visit);
    current.pop_back();
    used[j] = 0;
  }
  used[first] = 0;
}

}  // namespace

void enumerate_pairings(int n, const std::function<void(const PairPartition&)>& visit) {
  if (n < 0 || n % 2 != 0) {
    throw std::invalid_argument("enumerate_pairings: n must be even and nonnegative");
  }
  std::vector<char> used(n, 0);
  PairPartition current;
  pairings_recurse(n, used, current, visit);
}

std::vector<PairPartition> all_pairings(int n) {
  std::vector<PairPartition> result;
  enumerate_pairings(n, [&](const PairPartition& p) { result.push_back(p); });
  return result;
}

}  // namespace haf
