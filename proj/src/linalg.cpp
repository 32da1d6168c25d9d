#include "cplab/linalg.hpp"

#include <algorithm>

#include "cplab/error.hpp"

namespace cplab {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Vec Matrix::row(std::size_t r) const {
  return Vec(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
             data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

void Matrix::append_row(const Vec& v) {
  if (v.size() != cols_) throw Error(ErrorCode::PreconditionViolated, "row length mismatch");
  data_.insert(data_.end(), v.begin(), v.end());
  ++rows_;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](auto x) { return x == 0; });
}

namespace linalg {

Matrix mul(const FiniteField& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto aik = a.at(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        if (b.at(k, j) == 0) continue;
        out.at(i, j) = f.add(out.at(i, j), f.mul(aik, b.at(k, j)));
      }
    }
  }
  return out;
}

Matrix sub(const FiniteField& f, const Matrix& a, const Matrix& b) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.sub(a.at(i, j), b.at(i, j));
  }
  return out;
}

Matrix scale(const FiniteField& f, const Matrix& a, FiniteField::Elem c) {
  Matrix out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) out.at(i, j) = f.mul(a.at(i, j), c);
  }
  return out;
}

Matrix power(const FiniteField& f, const Matrix& a, std::uint64_t e) {
  Matrix result = Matrix::identity(a.rows());
  Matrix base = a;
  while (e > 0) {
    if (e & 1) result = mul(f, result, base);
    base = mul(f, base, base);
    e >>= 1;
  }
  return result;
}

Vec vec_mul(const FiniteField& f, const Vec& v, const Matrix& m) {
  Vec out(m.cols(), 0);
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (m.at(k, j) != 0) out[j] = f.add(out[j], f.mul(v[k], m.at(k, j)));
    }
  }
  return out;
}

Vec add(const FiniteField& f, const Vec& a, const Vec& b) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = f.add(a[i], b[i]);
  return out;
}

Vec scale(const FiniteField& f, const Vec& v, FiniteField::Elem c) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = f.mul(v[i], c);
  return out;
}

bool is_zero(const Vec& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

std::size_t rref(const FiniteField& f, Matrix& m) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < m.rows() && m.at(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != rank) {
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    }
    const auto inv = f.inv(m.at(rank, col));
    for (std::size_t j = 0; j < m.cols(); ++j) m.at(rank, j) = f.mul(m.at(rank, j), inv);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const auto factor = m.at(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) {
        m.at(r, j) = f.sub(m.at(r, j), f.mul(factor, m.at(rank, j)));
      }
    }
    ++rank;
  }
  return rank;
}

std::size_t rank(const FiniteField& f, Matrix m) { return rref(f, m); }

Matrix row_space(const FiniteField& f, const Matrix& m) {
  Matrix work = m;
  const std::size_t r = rref(f, work);
  Matrix out(0, m.cols());
  for (std::size_t i = 0; i < r; ++i) out.append_row(work.row(i));
  return out;
}

Matrix left_kernel(const FiniteField& f, const Matrix& m) {
  // v m = 0  <=>  m^T v^T = 0: reduce the transpose and read off the free
  // columns.
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  }
  const std::size_t r = rref(f, t);
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(t.cols(), false);
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t c = 0;
    while (t.at(i, c) == 0) ++c;
    pivot_cols.push_back(c);
    is_pivot[c] = true;
  }
  Matrix basis(0, m.rows());
  for (std::size_t free = 0; free < t.cols(); ++free) {
    if (is_pivot[free]) continue;
    Vec v(m.rows(), 0);
    v[free] = 1;
    for (std::size_t i = 0; i < r; ++i) v[pivot_cols[i]] = f.neg(t.at(i, free));
    basis.append_row(v);
  }
  return row_space(f, basis);
}

bool in_span(const FiniteField& f, const Matrix& basis, const Vec& v) {
  Matrix m = basis;
  m.append_row(v);
  return rank(f, m) == rank(f, basis);
}

Matrix sum(const FiniteField& f, const Matrix& u, const Matrix& v) {
  Matrix m = u;
  for (std::size_t i = 0; i < v.rows(); ++i) m.append_row(v.row(i));
  return row_space(f, m);
}

Matrix intersect(const FiniteField& f, const Matrix& u, const Matrix& v) {
  // Left kernel of [u; v] gives pairs (a, b) with a u = -b v.
  Matrix stacked = u;
  for (std::size_t i = 0; i < v.rows(); ++i) stacked.append_row(v.row(i));
  Matrix kernel = left_kernel(f, stacked);
  Matrix out(0, u.cols());
  for (std::size_t k = 0; k < kernel.rows(); ++k) {
    Vec combo(u.cols(), 0);
    for (std::size_t i = 0; i < u.rows(); ++i) {
      if (kernel.at(k, i) == 0) continue;
      combo = add(f, combo, scale(f, u.row(i), kernel.at(k, i)));
    }
    out.append_row(combo);
  }
  return row_space(f, out);
}

}  // namespace linalg

}  // namespace cplab
