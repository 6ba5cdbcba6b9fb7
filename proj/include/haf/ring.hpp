#pragma once

#include <variant>

#include "haf/bigint.hpp"
#include "haf/bipoly.hpp"

namespace haf {

// A scalar in one of the two concrete rings the toolkit works over.
// BigInt is the degree-(0,0) case of BiPoly; to_bipoly embeds it.
using RingElement = std::variant<BigInt, BiPoly>;

inline BiPoly to_bipoly(const RingElement& v) {
  if (const auto* i = std::get_if<BigInt>(&v)) return BiPoly(*i);
  return std::get<BiPoly>(v);
}

inline bool ring_is_zero(const BigInt& v) { return v == 0; }
inline bool ring_is_zero(const BiPoly& v) { return v.is_zero(); }

// x^e with the 0^0 = 1 convention.
template <typename Ring>
Ring ring_pow(const Ring& base, long exp) {
  Ring result = Ring(1);
  Ring factor = base;
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) result = result * factor;
    factor = factor * factor;
  }
  return result;
}

inline BigInt poly_eval(const BiPoly& p, const BigInt& a, const BigInt& b) {
  return p.eval(a, b);
}

}  // namespace haf
