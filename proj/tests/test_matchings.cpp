#include <doctest.h>

#include <fstream>
#include <sstream>

#include "haf/matchings.hpp"

using haf::BigInt;
using haf::MatchingTable;
using haf::Template;
using haf::TemplateKind;

namespace {

// mu_k for the distance-2 arc diagram, orders 0..12; -1 marks cells
// outside k <= floor(n/2).
const long kTableC[7][13] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {-1, -1, 0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10},
    {-1, -1, -1, -1, 1, 2, 4, 7, 11, 16, 22, 29, 37},
    {-1, -1, -1, -1, -1, -1, 0, 2, 6, 13, 24, 40, 62},
    {-1, -1, -1, -1, -1, -1, -1, -1, 1, 3, 9, 22, 46},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 0, 3, 12},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 1}};

const long kTableD[7][13] = {
    {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
    {-1, -1, 1, 3, 5, 7, 9, 11, 13, 15, 17, 19, 21},
    {-1, -1, -1, -1, 2, 7, 16, 29, 46, 67, 92, 121, 154},
    {-1, -1, -1, -1, -1, -1, 3, 15, 43, 95, 179, 303, 475},
    {-1, -1, -1, -1, -1, -1, -1, -1, 5, 30, 104, 271, 591},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 8, 58, 235},
    {-1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, -1, 13}};

}  // namespace

TEST_CASE("brute-force matching counts on the published cells") {
  CHECK(haf::mu_bruteforce(Template::c(7), 2) == 7);
  CHECK(haf::mu_bruteforce(Template::d(6), 2) == 16);
  CHECK(haf::mu_bruteforce(Template::c(5), 3) == 0);
  CHECK(haf::mu_bruteforce(Template::d(3), 2) == 0);
  CHECK(haf::mu_bruteforce(Template::c(0), 0) == 1);
}

TEST_CASE("closed form for the C family") {
  CHECK(haf::mu_c_closed(12, 4) == 46);
  CHECK(haf::mu_c_closed(6, 3) == 0);  // odd k with n = 2k
  CHECK(haf::mu_c_closed(9, 3) == 13);
  CHECK(haf::mu_c_closed(11, 3) == 40);
}

TEST_CASE("closed form for the D family") {
  CHECK(haf::mu_d_closed(8, 4) == 5);
  CHECK(haf::mu_d_closed(12, 6) == 13);
  CHECK(haf::mu_d_closed(3, 1) == 3);
  CHECK(haf::mu_d_closed(11, 5) == 58);
}

TEST_CASE("recurrence tables") {
  auto c = haf::mu_c_recurrence(12);
  CHECK(c.rows[5] == std::vector<BigInt>{1, 3, 2});
  CHECK(c.at(12, 6) == 1);
  CHECK(c.at(9, 0) == 1);

  auto d = haf::mu_d_recurrence(12);
  CHECK(d.at(10, 5) == 8);
  CHECK(d.at(4, 2) == 2);
  CHECK(d.at(11, 0) == 1);
}

TEST_CASE("published tables reproduced cell-for-cell") {
  auto c = haf::mu_c_recurrence(12);
  auto d = haf::mu_d_recurrence(12);
  for (int k = 0; k <= 6; ++k) {
    for (int n = 0; n <= 12; ++n) {
      long cv = kTableC[k][n] < 0 ? 0 : kTableC[k][n];
      long dv = kTableD[k][n] < 0 ? 0 : kTableD[k][n];
      CHECK(c.at(n, k) == cv);
      CHECK(d.at(n, k) == dv);
      CHECK(haf::mu_c_closed(n, k) == cv);
      CHECK(haf::mu_d_closed(n, k) == dv);
    }
  }
}

TEST_CASE("generating-function coefficients") {
  auto c = haf::gf_series(TemplateKind::C, 14);
  CHECK(c.at(3, 1) == 1);
  for (int n = 0; n <= 14; ++n) CHECK(c.at(n, 0) == 1);

  auto d = haf::gf_series(TemplateKind::D, 14);
  CHECK(d.at(5, 2) == 7);
  CHECK_THROWS_AS(haf::gf_series(TemplateKind::J, 5), std::invalid_argument);
}

TEST_CASE("four routes agree for all n <= 12") {
  const int n_max = 12;
  auto c_rec = haf::mu_c_recurrence(n_max);
  auto d_rec = haf::mu_d_recurrence(n_max);
  auto c_gf = haf::gf_series(TemplateKind::C, n_max);
  auto d_gf = haf::gf_series(TemplateKind::D, n_max);
  for (int n = 0; n <= n_max; ++n) {
    auto ct = Template::c(n);
    auto dt = Template::d(n);
    for (int k = 0; k <= n / 2 + 1; ++k) {
      BigInt c_brute = haf::mu_bruteforce(ct, k);
      CHECK(c_brute == haf::mu_c_closed(n, k));
      CHECK(c_brute == c_rec.at(n, k));
      CHECK(c_brute == c_gf.at(n, k));
      BigInt d_brute = haf::mu_bruteforce(dt, k);
      CHECK(d_brute == haf::mu_d_closed(n, k));
      CHECK(d_brute == d_rec.at(n, k));
      CHECK(d_brute == d_gf.at(n, k));
    }
  }
}

TEST_CASE("bound equivalence examples and sweep") {
  CHECK(haf::prop3_equivalence(10, 4) == std::pair{true, true});
  CHECK(haf::prop3_equivalence(5, 3) == std::pair{false, false});
  CHECK(haf::prop3_equivalence(7, 3) == std::pair{true, true});
  CHECK_THROWS_AS(haf::prop3_equivalence(6, 3), std::invalid_argument);

  for (long n = 0; n <= 60; ++n) {
    for (long k = 0; k <= 60; ++k) {
      if (k % 2 == 1 && n == 2 * k) continue;
      auto [lhs, rhs] = haf::prop3_equivalence(n, k);
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("first-row linear laws") {
  for (long n = 3; n <= 40; ++n) CHECK(haf::mu_c_closed(n, 1) == n - 2);
  for (long n = 2; n <= 40; ++n) CHECK(haf::mu_d_closed(n, 1) == 2 * n - 3);
}

TEST_CASE("leading diagonal of the D table is Fibonacci") {
  BigInt fib_prev = 1, fib = 1;  // Fib(1), Fib(2)
  for (long k = 0; k <= 12; ++k) {
    CHECK(haf::mu_d_closed(2 * k, k) == fib_prev);
    BigInt next = fib_prev + fib;
    fib_prev = fib;
    fib = next;
  }
}

TEST_CASE("CSV rendering matches the bundled fixtures") {
  auto check_fixture = [](const MatchingTable& table, const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::stringstream expected;
    expected << in.rdbuf();
    CHECK(haf::table_csv(table) == expected.str());
  };
  check_fixture(haf::mu_c_recurrence(12), "table_c_12.csv");
  check_fixture(haf::mu_d_recurrence(12), "table_d_12.csv");
}
