#include "haf/matrix.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace haf {

namespace {

// Symmetric Toeplitz bits from a first row; offsets past the matrix edge
// of a short order are simply out of range and drop away.
std::vector<uint8_t> toeplitz_bits(int n, const std::vector<int>& first_row) {
  std::vector<uint8_t> bits(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      int dist = j > i ? j - i : i - j;
      if (dist < static_cast<int>(first_row.size()) && first_row[dist]) {
        bits[static_cast<size_t>(i) * n + j] = 1;
      }
    }
  }
  return bits;
}

std::vector<int> stencil_row(int n, std::initializer_list<int> head) {
  std::vector<int> row(head);
  if (static_cast<int>(row.size()) > n) row.resize(n);
  row.resize(n, 0);
  return row;
}

}  // namespace

Template::Template(TemplateKind kind, int order, std::vector<uint8_t> bits)
    : kind_(kind), order_(order), bits_(std::move(bits)) {
  for (int i = 0; i < order_; ++i) {
    if (bits_[static_cast<size_t>(i) * order_ + i]) {
      throw std::invalid_argument("template: diagonal must be zero");
    }
    for (int j = 0; j < order_; ++j) {
      if (bits_[static_cast<size_t>(i) * order_ + j] !=
          bits_[static_cast<size_t>(j) * order_ + i]) {
        throw std::invalid_argument("template: pattern must be symmetric");
      }
    }
  }
}

Template Template::c(int n) {
  if (n < 0) throw std::invalid_argument("template order must be nonnegative");
  return Template(TemplateKind::C, n, toeplitz_bits(n, stencil_row(n, {0, 0, 1})));
}

Template Template::d(int n) {
  if (n < 0) throw std::invalid_argument("template order must be nonnegative");
  return Template(TemplateKind::D, n, toeplitz_bits(n, stencil_row(n, {0, 1, 1})));
}

Template Template::j(int n) {
  if (n < 0) throw std::invalid_argument("template order must be nonnegative");
  std::vector<uint8_t> bits(static_cast<size_t>(n) * n, 1);
  for (int i = 0; i < n; ++i) bits[static_cast<size_t>(i) * n + i] = 0;
  return Template(TemplateKind::J, n, std::move(bits));
}

Template Template::toeplitz(const std::vector<int>& first_row) {
  int n = static_cast<int>(first_row.size());
  if (n > 0 && first_row[0] != 0) {
    throw std::invalid_argument("toeplitz template: first entry must be 0");
  }
  for (int v : first_row) {
    if (v != 0 && v != 1) throw std::invalid_argument("template bits must be 0/1");
  }
  return Template(TemplateKind::CustomToeplitz, n, toeplitz_bits(n, first_row));
}

Template Template::full(const std::vector<std::vector<int>>& rows) {
  int n = static_cast<int>(rows.size());
  std::vector<uint8_t> bits(static_cast<size_t>(n) * n, 0);
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(rows[i].size()) != n) {
      throw std::invalid_argument("template: matrix must be square");
    }
    for (int j = 0; j < n; ++j) {
      if (rows[i][j] != 0 && rows[i][j] != 1) {
        throw std::invalid_argument("template bits must be 0/1");
      }
      bits[static_cast<size_t>(i) * n + j] = static_cast<uint8_t>(rows[i][j]);
    }
  }
  return Template(TemplateKind::CustomFull, n, std::move(bits));
}

Template Template::parse(std::istream& in) {
  int n = 0;
  if (!(in >> n) || n < 0) throw std::invalid_argument("template file: bad order");
  std::string tag;
  if (!(in >> tag)) {
    if (n == 0) return Template::full({});
    throw std::invalid_argument("template file: truncated");
  }
  if (tag == "toeplitz:") {
    std::vector<int> row(n);
    for (int& v : row) {
      if (!(in >> v)) throw std::invalid_argument("template file: truncated row");
    }
    return Template::toeplitz(row);
  }
  std::vector<std::vector<int>> rows(n, std::vector<int>(n));
  // first token of the matrix body was already consumed
  rows[0][0] = std::stoi(tag);
  for (int i = 0; i < n; ++i) {
    for (int j = (i == 0 ? 1 : 0); j < n; ++j) {
      if (!(in >> rows[i][j])) throw std::invalid_argument("template file: truncated row");
    }
  }
  return Template::full(rows);
}

Template Template::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open template file: " + path);
  return parse(in);
}

bool Template::bit(int i, int j) const {
  if (i < 0 || j < 0 || i >= order_ || j >= order_) {
    throw std::out_of_range("template index out of range");
  }
  return bits_[static_cast<size_t>(i) * order_ + j] != 0;
}

std::vector<std::pair<int, int>> Template::edges() const {
  std::vector<std::pair<int, int>> result;
  for (int i = 0; i < order_; ++i) {
    for (int j = i + 1; j < order_; ++j) {
      if (bit(i, j)) result.emplace_back(i, j);
    }
  }
  return result;
}

void check_indices(int order, const std::set<int>& alpha) {
  for (int i : alpha) {
    if (i < 0 || i >= order) throw std::out_of_range("submatrix index out of range");
  }
}

}  // namespace haf
