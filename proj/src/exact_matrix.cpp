#include "twistkit/exact_matrix.hpp"

#include <stdexcept>

namespace twistkit {

RationalMatrix::RationalMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix dimension");
  e_.assign(static_cast<size_t>(rows) * cols, Rational(0));
}

RationalMatrix RationalMatrix::identity(int n) {
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::from_rows(std::vector<std::vector<Rational>> rows) {
  int r = static_cast<int>(rows.size());
  int c = r == 0 ? 0 : static_cast<int>(rows[0].size());
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[i].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.at(i, j) = std::move(rows[i][j]);
  }
  return m;
}

RationalMatrix RationalMatrix::from_blocks(const RationalMatrix& A, const RationalMatrix& B,
                                           const RationalMatrix& C, const RationalMatrix& D) {
  if (A.rows_ != B.rows_ || C.rows_ != D.rows_ || A.cols_ != C.cols_ || B.cols_ != D.cols_)
    throw std::invalid_argument("block dimensions do not align");
  RationalMatrix m(A.rows_ + C.rows_, A.cols_ + B.cols_);
  for (int i = 0; i < A.rows_; ++i) {
    for (int j = 0; j < A.cols_; ++j) m.at(i, j) = A.at(i, j);
    for (int j = 0; j < B.cols_; ++j) m.at(i, A.cols_ + j) = B.at(i, j);
  }
  for (int i = 0; i < C.rows_; ++i) {
    for (int j = 0; j < C.cols_; ++j) m.at(A.rows_ + i, j) = C.at(i, j);
    for (int j = 0; j < D.cols_; ++j) m.at(A.rows_ + i, A.cols_ + j) = D.at(i, j);
  }
  return m;
}

RationalMatrix RationalMatrix::operator+(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  RationalMatrix m(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] + o.e_[k];
  return m;
}

RationalMatrix RationalMatrix::operator-(const RationalMatrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("dimension mismatch");
  RationalMatrix m(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] - o.e_[k];
  return m;
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch");
  RationalMatrix m(rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a == 0) continue;
      for (int j = 0; j < o.cols_; ++j) m.at(i, j) += a * o.at(k, j);
    }
  return m;
}

RationalMatrix RationalMatrix::operator*(const Rational& s) const {
  RationalMatrix m(rows_, cols_);
  for (size_t k = 0; k < e_.size(); ++k) m.e_[k] = e_[k] * s;
  return m;
}

bool RationalMatrix::operator==(const RationalMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && e_ == o.e_;
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

RationalMatrix RationalMatrix::block(int i0, int j0, int r, int c) const {
  if (i0 < 0 || j0 < 0 || i0 + r > rows_ || j0 + c > cols_)
    throw std::invalid_argument("block out of range");
  RationalMatrix m(r, c);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < c; ++j) m.at(i, j) = at(i0 + i, j0 + j);
  return m;
}

bool RationalMatrix::is_integral() const {
  for (const Rational& q : e_)
    if (q.get_den() != 1) return false;
  return true;
}

Rational RationalMatrix::trace() const {
  if (rows_ != cols_) throw std::domain_error("trace of non-square matrix");
  Rational t(0);
  for (int i = 0; i < rows_; ++i) t += at(i, i);
  return t;
}

Rational RationalMatrix::det() const {
  if (rows_ != cols_) throw std::domain_error("determinant of non-square matrix");
  RationalMatrix m = *this;
  Rational d(1);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) return 0;
    if (pivot != col) {
      for (int j = 0; j < cols_; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      d = -d;
    }
    d *= m.at(col, col);
    Rational inv = Rational(1) / m.at(col, col);
    for (int i = col + 1; i < rows_; ++i) {
      if (m.at(i, col) == 0) continue;
      Rational f = m.at(i, col) * inv;
      for (int j = col; j < cols_; ++j) m.at(i, j) -= f * m.at(col, j);
    }
  }
  return d;
}

RationalMatrix RationalMatrix::inverse() const {
  if (rows_ != cols_) throw std::domain_error("inverse of non-square matrix");
  RationalMatrix m = *this;
  RationalMatrix inv = identity(rows_);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int i = col; i < rows_; ++i)
      if (m.at(i, col) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) throw std::domain_error("matrix is singular");
    if (pivot != col)
      for (int j = 0; j < cols_; ++j) {
        std::swap(m.at(pivot, j), m.at(col, j));
        std::swap(inv.at(pivot, j), inv.at(col, j));
      }
    Rational s = Rational(1) / m.at(col, col);
    for (int j = 0; j < cols_; ++j) {
      m.at(col, j) *= s;
      inv.at(col, j) *= s;
    }
    for (int i = 0; i < rows_; ++i) {
      if (i == col || m.at(i, col) == 0) continue;
      Rational f = m.at(i, col);
      for (int j = 0; j < cols_; ++j) {
        m.at(i, j) -= f * m.at(col, j);
        inv.at(i, j) -= f * inv.at(col, j);
      }
    }
  }
  return inv;
}

RationalPoly RationalMatrix::charpoly() const {
  if (rows_ != cols_) throw std::domain_error("characteristic polynomial of non-square matrix");
  int n = rows_;
  // Faddeev-LeVerrier: M_1 = A, c_{n-k} = -tr(M_k)/k, M_{k+1} = A (M_k + c_{n-k} I).
  std::vector<Rational> coeffs(n + 1, Rational(0));
  coeffs[n] = 1;
  RationalMatrix Mk = *this;
  for (int k = 1; k <= n; ++k) {
    Rational c = -(Mk.trace() / Rational(k));
    coeffs[n - k] = c;
    if (k < n) {
      RationalMatrix shifted = Mk;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += c;
      Mk = *this * shifted;
    }
  }
  return RationalPoly(std::move(coeffs));
}

}  // namespace twistkit
