#include "affine_basis/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace affine_basis {

namespace {

using IntRows = std::vector<std::vector<Integer>>;

IntRows clear_denominators(const Matrix& m) {
  IntRows rows(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) rows[i][j] = m(i, j).get_num() * (l / m(i, j).get_den());
  }
  return rows;
}

std::vector<std::size_t> bareiss_pivots(IntRows a, std::size_t cols) {
  std::vector<std::size_t> pivots;
  const std::size_t n = a.size();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < n; ++c) {
    std::size_t p = r;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < n; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        Integer t = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& q : data_)
    if (q != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = i + 1; j < cols_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  Matrix r(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j)
        if (o(k, j) != 0) r(i, j) += a * o(k, j);
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  Matrix r = *this;
  return r += o;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (o.data_[i] != 0) data_[i] += o.data_[i];
  return *this;
}

Matrix Matrix::scaled(const Rational& s) const {
  Matrix r = *this;
  for (auto& x : r.data_) x *= s;
  return r;
}

std::vector<Rational> Matrix::operator*(const std::vector<Rational>& v) const {
  if (cols_ != v.size()) throw std::invalid_argument("matrix-vector product: shape mismatch");
  std::vector<Rational> r(rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (v[k] != 0 && (*this)(i, k) != 0) r[i] += (*this)(i, k) * v[k];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  Matrix r = *this;
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
  return r;
}

Matrix Matrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  Matrix s(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) s(i, j) = (*this)(rows[i], cols[j]);
  return s;
}

std::size_t rank_exact(const Matrix& m) { return independent_columns(m).size(); }

std::vector<std::size_t> independent_columns(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return {};
  return bareiss_pivots(clear_denominators(m), m.cols());
}

Echelon reduced_row_echelon(Matrix m) {
  Echelon e;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
    const Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c) == 0) continue;
      const Rational f = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j)
        if (m(r, j) != 0) m(i, j) -= f * m(r, j);
    }
    e.pivots.push_back(c);
    ++r;
  }
  e.rref = std::move(m);
  return e;
}

Matrix nullspace(const Matrix& m) {
  const Echelon e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free;
  for (std::size_t j = 0; j < m.cols(); ++j)
    if (!is_pivot[j]) free.push_back(j);
  Matrix basis(m.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) basis(e.pivots[i], k) = -e.rref(i, free[k]);
  }
  return basis;
}

std::optional<std::vector<Rational>> solve(const Matrix& m, const std::vector<Rational>& b) {
  if (b.size() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  Matrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = b[i];
  }
  const Echelon e = reduced_row_echelon(std::move(aug));
  if (!e.pivots.empty() && e.pivots.back() == m.cols()) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = e.rref(i, m.cols());
  return x;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("inverse: matrix not square");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  const Echelon e = reduced_row_echelon(std::move(aug));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) throw std::domain_error("inverse: singular matrix");
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = e.rref(i, n + j);
  return inv;
}

std::vector<std::size_t> minimal_dependent_columns(const Matrix& m) {
  const auto pivots = independent_columns(m);
  if (pivots.size() == m.cols()) return {};
  // The first non-pivot column is a combination of earlier pivot columns;
  // its support in that combination is a minimal circuit.
  std::size_t first = 0;
  for (std::size_t k = 0; k < pivots.size() && pivots[k] == first; ++k) ++first;
  std::vector<std::size_t> cols = pivots;
  std::erase_if(cols, [&](std::size_t c) { return c > first; });
  Matrix a = m.submatrix([&] {
    std::vector<std::size_t> r(m.rows());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = i;
    return r;
  }(), cols);
  std::vector<Rational> b(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) b[i] = m(i, first);
  auto x = solve(a, b);
  std::vector<std::size_t> circuit;
  if (x)
    for (std::size_t k = 0; k < cols.size(); ++k)
      if ((*x)[k] != 0) circuit.push_back(cols[k]);
  circuit.push_back(first);
  return circuit;
}

}  // namespace affine_basis
