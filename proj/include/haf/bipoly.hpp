#pragma once

#include <map>
#include <string>
#include <utility>

#include "haf/bigint.hpp"

namespace haf {

// Bivariate integer polynomial in the formal symbols a and b, stored as a
// sparse map from exponent pairs to coefficients. Zero coefficients are
// never stored, so operator== compares canonical forms.
class BiPoly {
 public:
  using Exponents = std::pair<int, int>;  // (a-degree, b-degree)

  BiPoly() = default;
  BiPoly(const BigInt& c) { set(0, 0, c); }  // NOLINT: implicit by design
  BiPoly(long c) : BiPoly(BigInt(c)) {}      // NOLINT

  static BiPoly var_a() { return monomial(1, 0, 1); }
  static BiPoly var_b() { return monomial(0, 1, 1); }
  static BiPoly monomial(int deg_a, int deg_b, const BigInt& c);

  const BigInt& coeff(int deg_a, int deg_b) const;
  const std::map<Exponents, BigInt>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly operator*(const BiPoly& other) const;
  BiPoly& operator*=(const BiPoly& other) { return *this = *this * other; }
  BiPoly operator-() const;

  friend BiPoly operator+(BiPoly lhs, const BiPoly& rhs) { return lhs += rhs; }
  friend BiPoly operator-(BiPoly lhs, const BiPoly& rhs) { return lhs -= rhs; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

  BigInt eval(const BigInt& a, const BigInt& b) const;

  // Canonical rendering: monomials in graded-lex order, a before b,
  // highest degree first. The zero polynomial renders as "0".
  std::string to_string() const;

 private:
  void set(int deg_a, int deg_b, const BigInt& c);

  std::map<Exponents, BigInt> terms_;
};

}  // namespace haf
