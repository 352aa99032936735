#pragma once

// Dense and sparse exact linear algebra over the rationals.
//
// Row reduction pivots on the first nonzero column and, within it, the
// smallest row index, so that kernels and complements come out in a fixed basis.

#include "sbcert/rational.hpp"

#include <algorithm>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sbcert {

class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {
    if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Rational& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  bool is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return sgn(x) == 0; });
  }

  Matrix operator*(const Matrix& other) const {
    if (cols_ != other.rows_) throw std::invalid_argument("matrix product dimension mismatch");
    Matrix out(rows_, other.cols_);
    for (int i = 0; i < rows_; ++i) {
      for (int k = 0; k < cols_; ++k) {
        const Rational& a = (*this)(i, k);
        if (sgn(a) == 0) continue;
        for (int j = 0; j < other.cols_; ++j) {
          const Rational& b = other(k, j);
          if (sgn(b) != 0) out(i, j) += a * b;
        }
      }
    }
    return out;
  }

  Matrix operator+(const Matrix& other) const {
    check_same_shape(other);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += other.data_[i];
    return out;
  }
  Matrix operator-(const Matrix& other) const {
    check_same_shape(other);
    Matrix out = *this;
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] -= other.data_[i];
    return out;
  }
  Matrix scaled(const Rational& s) const {
    Matrix out = *this;
    for (auto& x : out.data_) x *= s;
    return out;
  }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Columns [first, first + count).
  Matrix columns(int first, int count) const {
    Matrix out(rows_, count);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
    return out;
  }

  Matrix column(int j) const { return columns(j, 1); }

  static Matrix hconcat(const std::vector<Matrix>& blocks, int rows) {
    int cols = 0;
    for (const auto& b : blocks) {
      if (b.rows() != rows) throw std::invalid_argument("hconcat row mismatch");
      cols += b.cols();
    }
    Matrix out(rows, cols);
    int off = 0;
    for (const auto& b : blocks) {
      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < b.cols(); ++j) out(i, off + j) = b(i, j);
      off += b.cols();
    }
    return out;
  }

  std::string to_string() const {
    std::ostringstream os;
    for (int i = 0; i < rows_; ++i) {
      os << '[';
      for (int j = 0; j < cols_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
      os << "]\n";
    }
    return os.str();
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same_shape(const Matrix& other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Rational> data_;
};

struct RowEchelon {
  Matrix reduced;           // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

inline RowEchelon rref(Matrix m) {
  RowEchelon out;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pivot = -1;
    for (int r = row; r < m.rows(); ++r) {
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != row) {
      for (int j = 0; j < m.cols(); ++j) std::swap(m(row, j), m(pivot, j));
    }
    Rational inv = Rational(1) / m(row, col);
    for (int j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col);
      for (int j = col; j < m.cols(); ++j) {
        if (sgn(m(row, j)) != 0) m(r, j) -= f * m(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.reduced = std::move(m);
  return out;
}

inline int rank(const Matrix& m) { return static_cast<int>(rref(m).pivots.size()); }

/// Basis of the null space as the columns of the result (cols x nullity).
inline Matrix kernel(const Matrix& m) {
  auto e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (int c : e.pivots) is_pivot[c] = true;
  std::vector<int> free;
  for (int c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix out(m.cols(), static_cast<int>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], static_cast<int>(k)) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
      out(e.pivots[r], static_cast<int>(k)) = -e.reduced(static_cast<int>(r), free[k]);
    }
  }
  return out;
}

/// A basis of the column space made of columns of m (first independent columns).
inline Matrix column_basis(const Matrix& m) {
  auto e = rref(m);
  Matrix out(m.rows(), static_cast<int>(e.pivots.size()));
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (int i = 0; i < m.rows(); ++i) out(i, static_cast<int>(k)) = m(i, e.pivots[k]);
  return out;
}

/// Solves a * x = b. nullopt if inconsistent; a particular solution otherwise.
inline std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve: row mismatch");
  Matrix aug = Matrix::hconcat({a, b}, a.rows());
  auto e = rref(aug);
  Matrix x(a.cols(), b.cols());
  for (std::size_t r = 0; r < e.pivots.size(); ++r) {
    int pc = e.pivots[r];
    if (pc >= a.cols()) return std::nullopt;
    for (int j = 0; j < b.cols(); ++j) x(pc, j) = e.reduced(static_cast<int>(r), a.cols() + j);
  }
  return x;
}

inline Rational determinant(Matrix m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  int n = m.rows();
  Rational det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r) {
      if (sgn(m(r, col)) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m(col, j), m(pivot, j));
      det = -det;
    }
    det *= m(col, col);
    Rational inv = Rational(1) / m(col, col);
    for (int r = col + 1; r < n; ++r) {
      if (sgn(m(r, col)) == 0) continue;
      Rational f = m(r, col) * inv;
      for (int j = col; j < n; ++j) m(r, j) -= f * m(col, j);
    }
  }
  return det;
}

// ---------------------------------------------------------------------------
// Sparse systems

using SparseRow = std::vector<std::pair<int, Rational>>;  // sorted by column, no zeros

/// Incremental row echelon form for sparse homogeneous systems.
class SparseEchelon {
 public:
  explicit SparseEchelon(int cols) : cols_(cols), pivot_row_(cols, -1) {}

  void add_row(SparseRow row) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    row = compact(std::move(row));
    while (!row.empty()) {
      int lead = row.front().first;
      int pr = pivot_row_[lead];
      if (pr < 0) {
        Rational inv = Rational(1) / row.front().second;
        for (auto& [c, x] : row) x *= inv;
        pivot_row_[lead] = static_cast<int>(rows_.size());
        rows_.push_back(std::move(row));
        return;
      }
      row = axpy(row, rows_[pr], -row.front().second);
    }
  }

  int rank() const { return static_cast<int>(rows_.size()); }

  /// Null space basis as dense vectors, one per free column in increasing order.
  std::vector<std::vector<Rational>> nullspace() const {
    std::vector<int> pivots;
    for (int c = 0; c < cols_; ++c)
      if (pivot_row_[c] >= 0) pivots.push_back(c);
    std::vector<std::vector<Rational>> out;
    for (int f = 0; f < cols_; ++f) {
      if (pivot_row_[f] >= 0) continue;
      std::vector<Rational> x(cols_);
      x[f] = 1;
      for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        const auto& row = rows_[pivot_row_[*it]];
        Rational s = 0;
        for (std::size_t k = 1; k < row.size(); ++k) {
          const Rational& xv = x[row[k].first];
          if (sgn(xv) != 0) s += row[k].second * xv;
        }
        x[*it] = -s;
      }
      out.push_back(std::move(x));
    }
    return out;
  }

 private:
  static SparseRow compact(SparseRow row) {
    SparseRow out;
    for (auto& [c, x] : row) {
      if (!out.empty() && out.back().first == c) {
        out.back().second += x;
        if (sgn(out.back().second) == 0) out.pop_back();
      } else if (sgn(x) != 0) {
        out.emplace_back(c, std::move(x));
      }
    }
    return out;
  }

  // a + s * b
  static SparseRow axpy(const SparseRow& a, const SparseRow& b, const Rational& s) {
    SparseRow out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
      if (j >= b.size() || (i < a.size() && a[i].first < b[j].first)) {
        out.push_back(a[i++]);
      } else if (i >= a.size() || b[j].first < a[i].first) {
        out.emplace_back(b[j].first, s * b[j].second);
        ++j;
      } else {
        Rational v = a[i].second + s * b[j].second;
        if (sgn(v) != 0) out.emplace_back(a[i].first, std::move(v));
        ++i;
        ++j;
      }
    }
    return out;
  }

  int cols_;
  std::vector<int> pivot_row_;
  std::vector<SparseRow> rows_;
};

}  // namespace sbcert
