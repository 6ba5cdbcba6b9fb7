#include "haf/twoparam.hpp"

namespace haf {

std::vector<BigInt> sequence(TemplateKind kind, int m_max, const BigInt& a,
                             const BigInt& b) {
  if (m_max < 1) throw std::invalid_argument("sequence: m_max must be at least 1");
  std::vector<BigInt> result;
  result.reserve(m_max);
  for (int m = 1; m <= m_max; ++m) {
    if (kind == TemplateKind::C) {
      result.push_back(hafnian_c<BigInt>(m, a, b));
    } else if (kind == TemplateKind::D) {
      result.push_back(hafnian_d<BigInt>(m, a, b));
    } else {
      throw std::invalid_argument("sequence: kind must be C or D");
    }
  }
  return result;
}

}  // namespace haf
