#pragma once

// Dense matrices over an exact field, with determinant, inverse and the plain
// text grid format used for test vectors (one row per line, entries separated
// by spaces, `num/den` over Q and residues over F_p).

#include <cctype>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rvar/errors.hpp"
#include "rvar/field.hpp"
#include "rvar/subset.hpp"

namespace rvar {

template <ExactField F>
class Matrix {
 public:
  using value_type = typename F::value_type;

  Matrix(F field, int rows, int cols)
      : field_(std::move(field)), rows_(rows), cols_(cols),
        data_(static_cast<std::size_t>(rows) * cols, field_.zero()) {
    if (rows < 0 || cols < 0) throw InvalidParameters("negative matrix dimension");
  }

  static Matrix identity(const F& field, int size) {
    Matrix m(field, size, size);
    for (int i = 0; i < size; ++i) m(i, i) = field.one();
    return m;
  }

  const F& field() const noexcept { return field_; }
  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  value_type& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const value_type& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  /// The k x k submatrix on the (1-based) column set `columns`, in increasing order.
  Matrix columns(const KSubset& columns) const {
    if (columns.n() != cols_) throw InvalidParameters("column subset lives in a different [n]");
    Matrix out(field_, rows_, columns.k());
    for (int r = 0; r < rows_; ++r) {
      for (int j = 0; j < columns.k(); ++j) out(r, j) = (*this)(r, columns[j] - 1);
    }
    return out;
  }

  Matrix transposed_rows(int a, int b) const {
    Matrix out = *this;
    for (int c = 0; c < cols_; ++c) std::swap(out(a, c), out(b, c));
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_ || !(a.field_ == b.field_)) return false;
    for (std::size_t i = 0; i < a.data_.size(); ++i) {
      if (!a.field_.equal(a.data_[i], b.data_[i])) return false;
    }
    return true;
  }

 private:
  F field_;
  int rows_;
  int cols_;
  std::vector<value_type> data_;
};

template <ExactField F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.cols() != b.rows()) throw InvalidParameters("multiply: inner dimensions differ");
  const F& f = a.field();
  Matrix<F> out(f, a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i) {
    for (int l = 0; l < a.cols(); ++l) {
      if (f.is_zero(a(i, l))) continue;
      for (int j = 0; j < b.cols(); ++j) out(i, j) = f.add(out(i, j), f.mul(a(i, l), b(l, j)));
    }
  }
  return out;
}

/// Determinant by Gaussian elimination with row exchanges.
template <ExactField F>
typename F::value_type determinant(Matrix<F> m) {
  if (!m.square()) throw InvalidParameters("determinant of a non-square matrix");
  const F& f = m.field();
  const int size = m.rows();
  typename F::value_type det = f.one();
  for (int c = 0; c < size; ++c) {
    int pivot = c;
    while (pivot < size && f.is_zero(m(pivot, c))) ++pivot;
    if (pivot == size) return f.zero();
    if (pivot != c) {
      for (int j = c; j < size; ++j) std::swap(m(pivot, j), m(c, j));
      det = f.neg(det);
    }
    det = f.mul(det, m(c, c));
    const auto inv = f.inv(m(c, c));
    for (int r = c + 1; r < size; ++r) {
      if (f.is_zero(m(r, c))) continue;
      const auto factor = f.mul(m(r, c), inv);
      for (int j = c; j < size; ++j) m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
    }
  }
  return det;
}

/// Inverse by Gauss-Jordan elimination. Throws DomainError when singular.
template <ExactField F>
Matrix<F> inverse(Matrix<F> m) {
  if (!m.square()) throw InvalidParameters("inverse of a non-square matrix");
  const F& f = m.field();
  const int size = m.rows();
  Matrix<F> inv = Matrix<F>::identity(f, size);
  for (int c = 0; c < size; ++c) {
    int pivot = c;
    while (pivot < size && f.is_zero(m(pivot, c))) ++pivot;
    if (pivot == size) throw DomainError("matrix is singular");
    if (pivot != c) {
      m = m.transposed_rows(pivot, c);
      inv = inv.transposed_rows(pivot, c);
    }
    const auto scale = f.inv(m(c, c));
    for (int j = 0; j < size; ++j) {
      m(c, j) = f.mul(m(c, j), scale);
      inv(c, j) = f.mul(inv(c, j), scale);
    }
    for (int r = 0; r < size; ++r) {
      if (r == c || f.is_zero(m(r, c))) continue;
      const auto factor = m(r, c);
      for (int j = 0; j < size; ++j) {
        m(r, j) = f.sub(m(r, j), f.mul(factor, m(c, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(factor, inv(c, j)));
      }
    }
  }
  return inv;
}

template <ExactField F>
std::string format_matrix(const Matrix<F>& m) {
  std::string out;
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) {
      if (c) out += ' ';
      out += m.field().format(m(r, c));
    }
    out += '\n';
  }
  return out;
}

/// Parses the grid format. Blank lines and lines starting with '#' are skipped.
template <ExactField F>
Matrix<F> parse_matrix(const F& field, std::string_view text) {
  std::vector<std::vector<typename F::value_type>> rows;
  std::size_t line_no = 0;
  std::size_t start = 0;
  std::size_t width = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    std::size_t first = 0;
    while (first < line.size() && std::isspace(static_cast<unsigned char>(line[first]))) ++first;
    if (first < line.size() && line[first] != '#') {
      std::vector<typename F::value_type> row;
      std::size_t pos = 0;
      while (pos < line.size()) {
        while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        if (pos >= line.size()) break;
        const std::size_t token_start = pos;
        while (pos < line.size() && !std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
        try {
          row.push_back(field.parse(line.substr(token_start, pos - token_start)));
        } catch (const std::exception& e) {
          throw ParseError(line_no, token_start + 1, e.what());
        }
      }
      if (!rows.empty() && row.size() != width) {
        throw ParseError(line_no, 1, "row has " + std::to_string(row.size()) + " entries, expected " +
                                         std::to_string(width));
      }
      width = row.size();
      rows.push_back(std::move(row));
    }
    if (end == text.size()) break;
    start = end + 1;
  }
  if (rows.empty()) throw ParseError(line_no, 1, "no matrix rows");
  Matrix<F> m(field, static_cast<int>(rows.size()), static_cast<int>(width));
  for (int r = 0; r < m.rows(); ++r) {
    for (int c = 0; c < m.cols(); ++c) m(r, c) = rows[r][c];
  }
  return m;
}

}  // namespace rvar
