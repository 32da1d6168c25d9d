#pragma once

// Dense linear algebra over a FiniteField. Vectors are rows; a matrix M acts
// on the right (v -> v M). Subspaces are carried as matrices whose rows are
// the reduced row echelon basis, which makes subspace equality a plain
// comparison.

#include <cstddef>
#include <vector>

#include "cplab/field.hpp"

namespace cplab {

using Vec = std::vector<FiniteField::Elem>;

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  FiniteField::Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  FiniteField::Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Vec row(std::size_t r) const;
  void append_row(const Vec& v);
  bool is_zero() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<FiniteField::Elem> data_;
};

namespace linalg {

Matrix mul(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix sub(const FiniteField& f, const Matrix& a, const Matrix& b);
Matrix scale(const FiniteField& f, const Matrix& a, FiniteField::Elem c);
Matrix power(const FiniteField& f, const Matrix& a, std::uint64_t e);
Vec vec_mul(const FiniteField& f, const Vec& v, const Matrix& m);
Vec add(const FiniteField& f, const Vec& a, const Vec& b);
Vec scale(const FiniteField& f, const Vec& v, FiniteField::Elem c);
bool is_zero(const Vec& v);

// Reduced row echelon form in place; returns the rank.
std::size_t rref(const FiniteField& f, Matrix& m);
std::size_t rank(const FiniteField& f, Matrix m);
// RREF basis of the row space (zero rows dropped).
Matrix row_space(const FiniteField& f, const Matrix& m);
// Basis (RREF) of {v : v m = 0}.
Matrix left_kernel(const FiniteField& f, const Matrix& m);
bool in_span(const FiniteField& f, const Matrix& basis, const Vec& v);
Matrix intersect(const FiniteField& f, const Matrix& u, const Matrix& v);
Matrix sum(const FiniteField& f, const Matrix& u, const Matrix& v);

}  // namespace linalg

}  // namespace cplab
