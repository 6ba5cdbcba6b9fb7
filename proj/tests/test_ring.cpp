#include <doctest.h>

#include <random>
#include <vector>

#include "haf/ring.hpp"

using haf::BigInt;
using haf::BiPoly;

namespace {

// Independent oracle: counts pair partitions of {0..2k-1} by recursive
// enumeration, pairing vertex by vertex, without any factorial formula.
long count_pair_partitions(std::vector<char>& used) {
  size_t first = 0;
  while (first < used.size() && used[first]) ++first;
  if (first == used.size()) return 1;
  used[first] = 1;
  long total = 0;
  for (size_t j = first + 1; j < used.size(); ++j) {
    if (used[j]) continue;
    used[j] = 1;
    total += count_pair_partitions(used);
    used[j] = 0;
  }
  used[first] = 0;
  return total;
}

BiPoly random_poly(std::mt19937& rng) {
  std::uniform_int_distribution<int> deg(0, 4), coef(-9, 9);
  BiPoly p;
  for (int t = 0; t < 5; ++t) p += BiPoly::monomial(deg(rng), deg(rng), coef(rng));
  return p;
}

}  // namespace

TEST_CASE("binomial small values and conventions") {
  CHECK(haf::binomial(4, 2) == 6);
  CHECK(haf::binomial(0, 0) == 1);
  CHECK(haf::binomial(7, 0) == 1);
  CHECK(haf::binomial(5, 7) == 0);
  CHECK(haf::binomial(5, -1) == 0);
  CHECK(haf::binomial(40, 20) == BigInt("137846528820"));
  CHECK_THROWS_AS(haf::binomial(-1, 0), std::invalid_argument);
}

TEST_CASE("pairing_count equals (2k-1)!!") {
  CHECK(haf::pairing_count(0) == 1);
  CHECK(haf::pairing_count(2) == 3);
  CHECK(haf::pairing_count(3) == 15);
}

TEST_CASE("pairing_count matches brute-force pair-partition count") {
  for (int k = 0; k <= 6; ++k) {
    std::vector<char> used(2 * k, 0);
    CHECK(haf::pairing_count(k) == count_pair_partitions(used));
  }
}

TEST_CASE("factorial quotient stays exact at large k") {
  // (2k)!/(k! 2^k) for k = 40, well past 64-bit range
  BigInt direct = haf::factorial(80) / (haf::factorial(40) * haf::ring_pow(BigInt(2), 40));
  CHECK(haf::pairing_count(40) == direct);
}

TEST_CASE("floor and ceil division on negative operands") {
  CHECK(haf::floor_div(-3, 2) == -2);
  CHECK(haf::ceil_div(-3, 2) == -1);
  CHECK(haf::floor_div(5, 2) == 2);
  CHECK(haf::ceil_div(5, 2) == 3);
  CHECK(haf::ceil_div(-7, 2) == -3);
}

TEST_CASE("poly_eval substitutes values for the symbols") {
  BiPoly p = BiPoly::var_a() * BiPoly::var_b() + BiPoly(1);
  CHECK(haf::poly_eval(p, 2, 3) == 7);

  // 2a^2 + ab at a = 0
  BiPoly q = BiPoly(2) * BiPoly::var_a() * BiPoly::var_a() +
             BiPoly::var_a() * BiPoly::var_b();
  CHECK(haf::poly_eval(q, 0, 1) == 0);

  CHECK(haf::poly_eval(BiPoly(5), -3, 100) == 5);
}

TEST_CASE("BiPoly ring laws on random polynomials") {
  std::mt19937 rng(42);
  for (int iter = 0; iter < 50; ++iter) {
    BiPoly p = random_poly(rng), q = random_poly(rng), r = random_poly(rng);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p * q == q * p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p + q == q + p);
    CHECK(p * BiPoly(1) == p);
  }
}

TEST_CASE("poly_eval is a ring homomorphism") {
  std::mt19937 rng(43);
  std::uniform_int_distribution<int> val(-5, 5);
  for (int iter = 0; iter < 50; ++iter) {
    BiPoly p = random_poly(rng), q = random_poly(rng);
    BigInt a = val(rng), b = val(rng);
    CHECK(haf::poly_eval(p + q, a, b) == haf::poly_eval(p, a, b) + haf::poly_eval(q, a, b));
    CHECK(haf::poly_eval(p * q, a, b) == haf::poly_eval(p, a, b) * haf::poly_eval(q, a, b));
  }
}

TEST_CASE("canonical form stores no zero coefficients") {
  BiPoly p = BiPoly::var_a() - BiPoly::var_a();
  CHECK(p.is_zero());
  CHECK(p.terms().empty());
  CHECK(p == BiPoly(0));
}

TEST_CASE("ring_pow uses the 0^0 = 1 convention") {
  CHECK(haf::ring_pow(BigInt(0), 0) == 1);
  CHECK(haf::ring_pow(BiPoly(0), 0) == BiPoly(1));
  CHECK(haf::ring_pow(BigInt(3), 4) == 81);
  BiPoly ab = BiPoly::var_a() - BiPoly::var_b();
  CHECK(haf::ring_pow(ab, 2) == ab * ab);
}

TEST_CASE("RingElement embeds integers into polynomials") {
  haf::RingElement i = BigInt(7);
  haf::RingElement p = BiPoly::var_a();
  CHECK(haf::to_bipoly(i) == BiPoly(7));
  CHECK(haf::to_bipoly(p) == BiPoly::var_a());
}

TEST_CASE("polynomial rendering is graded-lex, a before b") {
  BiPoly p = BiPoly(2) * BiPoly::var_a() * BiPoly::var_a() +
             BiPoly::var_a() * BiPoly::var_b();
  CHECK(p.to_string() == "2a^2 + ab");
  CHECK(BiPoly(0).to_string() == "0");
  CHECK((-BiPoly::var_b()).to_string() == "-b");
  BiPoly q = BiPoly::var_b() * BiPoly::var_b() * BiPoly::var_b() - BiPoly(5);
  CHECK(q.to_string() == "b^3 - 5");
}
