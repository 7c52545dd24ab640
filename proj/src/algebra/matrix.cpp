#include "novikov/algebra/matrix.hpp"

namespace novikov::algebra {

namespace {

template <class T>
Matrix<T> multiply_dense(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols(), T(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

}  // namespace

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) { return multiply_dense(a, b); }

IntMatrix int_matrix(std::size_t rows, std::size_t cols, const std::vector<std::vector<long>>& entries) {
  if (entries.size() != rows) throw std::invalid_argument("int_matrix: wrong number of rows");
  IntMatrix m(rows, cols, Integer(0));
  for (std::size_t r = 0; r < rows; ++r) {
    if (entries[r].size() != cols) throw std::invalid_argument("int_matrix: ragged row");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = entries[r][c];
  }
  return m;
}
RatMatrix multiply(const RatMatrix& a, const RatMatrix& b) { return multiply_dense(a, b); }

PolyMatrix PolyMatrix::from_integers(const IntMatrix& m, std::size_t num_vars) {
  PolyMatrix out(m.rows(), m.cols(), num_vars);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      out.entries_(r, c) = MultiPoly::constant(num_vars, m(r, c));
  return out;
}

void PolyMatrix::set(std::size_t r, std::size_t c, MultiPoly value) {
  if (value.num_vars() != num_vars_) throw std::invalid_argument("entry variable count mismatch");
  entries_(r, c) = std::move(value);
}

void PolyMatrix::add_to(std::size_t r, std::size_t c, const MultiPoly& value) {
  entries_(r, c) += value;
}

bool PolyMatrix::is_zero() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (!entries_(r, c).is_zero()) return false;
  return true;
}

bool PolyMatrix::is_constant() const {
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c)
      if (!entries_(r, c).is_constant()) return false;
  return true;
}

IntMatrix PolyMatrix::constant_part() const {
  if (!is_constant()) throw std::invalid_argument("matrix has non-constant entries");
  IntMatrix out(rows(), cols(), Integer(0));
  for (std::size_t r = 0; r < rows(); ++r)
    for (std::size_t c = 0; c < cols(); ++c) out(r, c) = entries_(r, c).constant_term();
  return out;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw std::invalid_argument("matrix product shape mismatch");
  if (a.num_vars() != b.num_vars()) throw std::invalid_argument("variable count mismatch");
  PolyMatrix out(a.rows(), b.cols(), a.num_vars());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b(k, j).is_zero()) continue;
        out.add_to(i, j, a(i, k) * b(k, j));
      }
    }
  return out;
}

}  // namespace novikov::algebra
