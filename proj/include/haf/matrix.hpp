#pragma once

#include <cstdint>
#include <iosfwd>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "haf/ring.hpp"

namespace haf {

enum class TemplateKind { C, D, J, CustomToeplitz, CustomFull };

// Symmetric 0/1 pattern with zero diagonal. Vertex pair (i, j), i < j,
// is an edge of the arc diagram iff the bit is 1. Indices are 0-based in
// this API; the text formats and the CLI speak 1-based.
class Template {
 public:
  static Template c(int n);  // Toeplitz, first row 0 0 1 0 ... 0
  static Template d(int n);  // Toeplitz, first row 0 1 1 0 ... 0
  static Template j(int n);  // all off-diagonal bits 1
  static Template toeplitz(const std::vector<int>& first_row);
  static Template full(const std::vector<std::vector<int>>& bits);

  // Plain-text format: first line n, then either
  //   toeplitz: 0 0 1 0 ...
  // or n rows of n whitespace-separated 0/1 entries.
  static Template parse(std::istream& in);
  static Template load(const std::string& path);

  TemplateKind kind() const { return kind_; }
  int order() const { return order_; }
  bool bit(int i, int j) const;
  std::vector<std::pair<int, int>> edges() const;

 private:
  Template(TemplateKind kind, int order, std::vector<uint8_t> bits);

  TemplateKind kind_;
  int order_;
  std::vector<uint8_t> bits_;  // row-major order_ x order_
};

// Dense symmetric matrix with an implicitly zero diagonal; only the strict
// upper triangle is stored.
template <typename Ring>
class SymmetricMatrix {
 public:
  SymmetricMatrix() : order_(0) {}
  explicit SymmetricMatrix(int order)
      : order_(order), upper_(static_cast<size_t>(order) * (order - 1) / 2, Ring(0)) {}

  int order() const { return order_; }

  Ring at(int i, int j) const {
    if (i == j) return Ring(0);
    return upper_[index(i, j)];
  }

  void set(int i, int j, const Ring& v) { upper_[index(i, j)] = v; }

  friend bool operator==(const SymmetricMatrix&, const SymmetricMatrix&) = default;

 private:
  size_t index(int i, int j) const {
    if (i > j) std::swap(i, j);
    return static_cast<size_t>(i) * order_ - static_cast<size_t>(i) * (i + 1) / 2 +
           (j - i - 1);
  }

  int order_;
  std::vector<Ring> upper_;
};

// Two-parameter instantiation: template bit 1 -> a, off-diagonal 0 -> b.
template <typename Ring>
SymmetricMatrix<Ring> instantiate(const Template& t, const Ring& a, const Ring& b) {
  SymmetricMatrix<Ring> m(t.order());
  for (int i = 0; i < t.order(); ++i) {
    for (int j = i + 1; j < t.order(); ++j) {
      m.set(i, j, t.bit(i, j) ? a : b);
    }
  }
  return m;
}

void check_indices(int order, const std::set<int>& alpha);

// Submatrix of the rows/columns whose (0-based) indices are in alpha.
template <typename Ring>
SymmetricMatrix<Ring> submatrix_keep(const SymmetricMatrix<Ring>& m,
                                     const std::set<int>& alpha) {
  check_indices(m.order(), alpha);
  std::vector<int> idx(alpha.begin(), alpha.end());
  SymmetricMatrix<Ring> out(static_cast<int>(idx.size()));
  for (size_t i = 0; i < idx.size(); ++i) {
    for (size_t j = i + 1; j < idx.size(); ++j) {
      out.set(static_cast<int>(i), static_cast<int>(j), m.at(idx[i], idx[j]));
    }
  }
  return out;
}

// Submatrix with the rows/columns in alpha removed.
template <typename Ring>
SymmetricMatrix<Ring> submatrix_drop(const SymmetricMatrix<Ring>& m,
                                     const std::set<int>& alpha) {
  check_indices(m.order(), alpha);
  std::set<int> complement;
  for (int i = 0; i < m.order(); ++i) {
    if (!alpha.contains(i)) complement.insert(i);
  }
  return submatrix_keep(m, complement);
}

}  // namespace haf
