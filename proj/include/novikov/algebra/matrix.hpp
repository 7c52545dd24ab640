#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "novikov/algebra/multipoly.hpp"

namespace novikov::algebra {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  static Matrix identity(std::size_t n, const T& zero, const T& one) {
    Matrix m(n, n, zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Integer matrix from rows of machine integers; every row must have `cols` entries.
IntMatrix int_matrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<long>>& entries);

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b);

/// Matrix of MultiPoly entries sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t num_vars)
      : num_vars_(num_vars), entries_(rows, cols, MultiPoly(num_vars)) {}

  static PolyMatrix from_integers(const IntMatrix& m, std::size_t num_vars = 0);

  std::size_t rows() const { return entries_.rows(); }
  std::size_t cols() const { return entries_.cols(); }
  std::size_t num_vars() const { return num_vars_; }

  const MultiPoly& operator()(std::size_t r, std::size_t c) const { return entries_(r, c); }
  /// Replaces an entry; throws if the variable count differs.
  void set(std::size_t r, std::size_t c, MultiPoly value);
  void add_to(std::size_t r, std::size_t c, const MultiPoly& value);

  bool is_zero() const;
  bool is_constant() const;
  /// Requires constant entries.
  IntMatrix constant_part() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
    return a.num_vars_ == b.num_vars_ && a.entries_ == b.entries_;
  }

 private:
  std::size_t num_vars_ = 0;
  Matrix<MultiPoly> entries_;
};

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b);

}  // namespace novikov::algebra
