#include "haf/bipoly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace haf {

namespace {
const BigInt kZero = 0;

BigInt int_pow(const BigInt& base, int exp) {
  // mpz_pow_ui already follows the 0^0 = 1 convention.
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exp);
  return result;
}
}  // namespace

BiPoly BiPoly::monomial(int deg_a, int deg_b, const BigInt& c) {
  BiPoly p;
  p.set(deg_a, deg_b, c);
  return p;
}

const BigInt& BiPoly::coeff(int deg_a, int deg_b) const {
  auto it = terms_.find({deg_a, deg_b});
  return it == terms_.end() ? kZero : it->second;
}

void BiPoly::set(int deg_a, int deg_b, const BigInt& c) {
  if (c == 0) {
    terms_.erase({deg_a, deg_b});
  } else {
    terms_[{deg_a, deg_b}] = c;
  }
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [exps, c] : other.terms_) {
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, c);
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) { return *this += -other; }

BiPoly BiPoly::operator-() const {
  BiPoly result;
  for (const auto& [exps, c] : terms_) result.terms_.emplace(exps, -c);
  return result;
}

BiPoly BiPoly::operator*(const BiPoly& other) const {
  BiPoly result;
  for (const auto& [le, lc] : terms_) {
    for (const auto& [re, rc] : other.terms_) {
      Exponents exps{le.first + re.first, le.second + re.second};
      auto it = result.terms_.find(exps);
      if (it == result.terms_.end()) {
        result.terms_.emplace(exps, lc * rc);
      } else {
        it->second += lc * rc;
        if (it->second == 0) result.terms_.erase(it);
      }
    }
  }
  return result;
}

BigInt BiPoly::eval(const BigInt& a, const BigInt& b) const {
  BigInt result = 0;
  for (const auto& [exps, c] : terms_) {
    result += c * int_pow(a, exps.first) * int_pow(b, exps.second);
  }
  return result;
}

std::string BiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Graded lex, a before b, highest first.
  std::vector<std::pair<Exponents, BigInt>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [](const auto& l, const auto& r) {
    int dl = l.first.first + l.first.second;
    int dr = r.first.first + r.first.second;
    if (dl != dr) return dl > dr;
    return l.first > r.first;
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [exps, c] : sorted) {
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    bool has_vars = exps.first > 0 || exps.second > 0;
    if (mag != 1 || !has_vars) out << mag.get_str();
    if (exps.first > 0) {
      out << "a";
      if (exps.first > 1) out << "^" << exps.first;
    }
    if (exps.second > 0) {
      out << "b";
      if (exps.second > 1) out << "^" << exps.second;
    }
  }
  return out.str();
}

}  // namespace haf
